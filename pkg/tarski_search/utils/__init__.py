from .core import trial_rng, map_trials, write_csv
from .rollout import rollout

__all__ = ["trial_rng", "map_trials", "write_csv", "rollout"]
