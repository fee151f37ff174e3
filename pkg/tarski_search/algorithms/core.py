from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..errors import NotFamilyResponseError
from ..lattice import Point, format_point


@dataclass
class SolveOutcome:
    """Result of a fixed point search.

    `queries` is the final count of the counter attached for the solve, so
    it includes any confirmation or fallback queries. `confirmed` is true
    when the solver itself observed f(point) == point.
    """
    point: Point
    queries: int
    trace: Optional[List[Tuple[Point, Point]]] = None
    confirmed: bool = False
    fell_back: bool = False

    def __str__(self):
        return 'point %s after %d queries' % (format_point(self.point),
                                              self.queries)


@dataclass(frozen=True)
class IntervalState:
    """Per-coordinate bounds x_i <= a_i <= y_i on the hidden point."""
    x: Point
    y: Point

    @classmethod
    def initial(cls, shape):
        return cls(shape.bottom, shape.top)

    @property
    def solved(self):
        return self.x == self.y

    def next_query(self) -> Point:
        """x_i on resolved coordinates, x_i + 1 on the others."""
        return tuple(xi if xi == yi else xi + 1
                     for xi, yi in zip(self.x, self.y))

    def update(self, v, response, prefix_inference=False):
        """Returns the bounds implied by the response f^a(v).

        A decrement at coordinate j pins a_j = x_j. Without a decrement,
        a_i = x_i is ruled out on every unresolved coordinate.

        With prefix_inference, also uses the guards of the update rule: a
        decrement at j means v_i <= a_i for i < j, an increment at j means
        a_j > v_j and v_i >= a_i for i < j.
        """
        k = len(v)
        if len(response) != k:
            raise NotFamilyResponseError(
                'response %s does not match query %s' %
                (format_point(response), format_point(v)))
        dec, inc = [], []
        for i in range(k):
            d = response[i] - v[i]
            if d == -1:
                dec.append(i)
            elif d == 1:
                inc.append(i)
            elif d != 0:
                raise NotFamilyResponseError(
                    'coordinate %d moved by %d for query %s' %
                    (i + 1, d, format_point(v)))
        if len(dec) > 1 or len(inc) > 1:
            raise NotFamilyResponseError(
                'response %s to %s moves more than one coordinate in the '
                'same direction' % (format_point(response), format_point(v)))

        x, y = list(self.x), list(self.y)
        unresolved = [i for i in range(k) if self.x[i] < self.y[i]]
        for j in dec + inc:
            if self.x[j] == self.y[j]:
                raise NotFamilyResponseError(
                    'coordinate %d moved although a_%d = %d is known' %
                    (j + 1, j + 1, self.x[j]))
        if dec:
            j = dec[0]
            y[j] = self.x[j]
        else:
            for i in unresolved:
                x[i] = self.x[i] + 1

        if prefix_inference:
            if dec:
                for i in unresolved:
                    if i >= dec[0]:
                        break
                    x[i] = max(x[i], v[i])
            if inc:
                j = inc[0]
                x[j] = max(x[j], v[j] + 1)
                for i in range(j):
                    y[i] = min(y[i], v[i])

        if any(xi > yi for xi, yi in zip(x, y)):
            raise NotFamilyResponseError(
                'response %s to %s leaves no hidden point consistent with '
                'the history' % (format_point(response), format_point(v)))
        return IntervalState(tuple(x), tuple(y))
