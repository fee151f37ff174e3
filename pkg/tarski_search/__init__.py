from . import errors
from . import lattice
from . import utils
from . import oracles
from . import algorithms
from . import adversary
from . import verify
