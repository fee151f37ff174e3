from tarski_search.oracles.base import (Oracle, FunctionOracle, QueryCounter,
                                       CountingOracle, RememberLast,
                                       identity_oracle, make_counting)
from tarski_search.oracles.hidden_point import (HiddenPointInstance,
                                               eval_hidden_point,
                                               hidden_point_kernel)
from tarski_search.oracles.table import TableInstance
from tarski_search.oracles.transforms import (ClampLiftOracle,
                                             BoxRestrictedOracle, lift_clamp,
                                             restrict_box)
from tarski_search.oracles.io import (load_instance, loads_instance,
                                     dump_instance, instance_from_dict)

__all__ = [
    "Oracle", "FunctionOracle", "QueryCounter", "CountingOracle",
    "RememberLast", "identity_oracle", "make_counting",
    "HiddenPointInstance", "eval_hidden_point", "hidden_point_kernel",
    "TableInstance", "ClampLiftOracle", "BoxRestrictedOracle", "lift_clamp",
    "restrict_box", "load_instance", "loads_instance", "dump_instance",
    "instance_from_dict"
]
