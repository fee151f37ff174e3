from .knowledge import (KnowledgeState, c_index, delta_set, update_knowledge,
                        consistent_candidates, knowledge_matches_candidates)
from .strategies import (uniform_random, zeros_then_flip, path_follow,
                         ReplayStrategy, load_replay, get_strategy, STRATEGIES)
from .gain import GainStats, simulate_info_gain, GAIN_HEADER
from .fanout import (enumerate_Qv, fanout_bound, decision_tree_leaf_bound,
                     average_depth_lower_bound)
from .yao import (TrialRecord, YaoResult, family_instances, run_trial,
                  yao_average_queries)

__all__ = [
    "KnowledgeState", "c_index", "delta_set", "update_knowledge",
    "consistent_candidates", "knowledge_matches_candidates", "uniform_random",
    "zeros_then_flip", "path_follow", "ReplayStrategy", "load_replay",
    "get_strategy", "STRATEGIES", "GainStats", "simulate_info_gain",
    "GAIN_HEADER", "enumerate_Qv", "fanout_bound", "decision_tree_leaf_bound",
    "average_depth_lower_bound", "TrialRecord", "YaoResult",
    "family_instances", "run_trial", "yao_average_queries"
]
