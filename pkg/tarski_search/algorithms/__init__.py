from .core import SolveOutcome, IntervalState
from .kleene import kleene_from_bottom, kleene_from_top
from .dnc import dnc_fixed_point
from .family import solve_hidden_family

SOLVERS = {
    'kleene': kleene_from_bottom,
    'kleene-top': kleene_from_top,
    'dnc': dnc_fixed_point,
    'family': solve_hidden_family,
}


def get_solver(name):
    try:
        return SOLVERS[name]
    except KeyError:
        raise ValueError('unknown solver %r (expected one of %s)' %
                         (name, ', '.join(SOLVERS)))


__all__ = [
    "SolveOutcome", "IntervalState", "kleene_from_bottom", "kleene_from_top",
    "dnc_fixed_point", "solve_hidden_family", "SOLVERS", "get_solver"
]
