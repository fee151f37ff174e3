"""Explicitly tabulated functions on small grids."""
import numpy as np

from .base import Oracle
from ..errors import InvalidPointError
from ..lattice import format_point, points_array


class TableInstance(Oracle):
    """A total function stored densely by lexicographic rank of the input.

    `table[r]` is the image of `shape.unrank(r)`. Monotonicity is not
    assumed; see `tarski_search.verify.check_monotone`.
    """

    kind = 'table'

    def __init__(self, shape, table):
        super(TableInstance, self).__init__(shape)
        table = np.asarray(table, dtype=np.int64)
        if table.shape != (shape.size, shape.k):
            raise InvalidPointError(
                'table for %s needs shape (%d, %d), got %s' %
                (shape, shape.size, shape.k, tuple(table.shape)))
        if table.size and (table.min() < 0 or table.max() > shape.n - 1):
            raise InvalidPointError('table for %s has outputs outside [0, %d]'
                                    % (shape, shape.n - 1))
        self.table = table
        self.table.setflags(write=False)
        self._strides = np.array(shape.strides, dtype=np.int64)

    @classmethod
    def from_function(cls, shape, fn, **budget_kwargs):
        """Tabulates fn over the whole grid."""
        P = points_array(shape, **budget_kwargs)
        return cls(shape, [fn(tuple(int(c) for c in p)) for p in P])

    @classmethod
    def from_rows(cls, shape, rows):
        """Builds a table from rows of k input coordinates followed by k
        output coordinates. Rows must cover every input exactly once."""
        table = np.full((shape.size, shape.k), -1, dtype=np.int64)
        seen = np.zeros(shape.size, dtype=bool)
        for row in rows:
            if len(row) != 2 * shape.k:
                raise InvalidPointError('table row %r needs %d entries' %
                                        (row, 2 * shape.k))
            v = shape.validate(row[:shape.k])
            r = shape.rank(v)
            if seen[r]:
                raise InvalidPointError('input %s appears twice in the table'
                                        % format_point(v))
            seen[r] = True
            table[r] = shape.validate(row[shape.k:])
        if not seen.all():
            missing = shape.unrank(int(np.flatnonzero(~seen)[0]))
            raise InvalidPointError('table has no row for input %s' %
                                    format_point(missing))
        return cls(shape, table)

    def evaluate(self, v):
        return tuple(int(c) for c in self.table[self.shape.rank(v)])

    def evaluate_batch(self, V):
        V = np.asarray(V, dtype=np.int64).reshape(-1, self.shape.k)
        return self.table[V @ self._strides]

    def rows(self):
        P = points_array(self.shape)
        return np.concatenate([P, self.table], -1).tolist()

    def to_dict(self):
        return dict(kind=self.kind,
                    n=self.shape.n,
                    k=self.shape.k,
                    rows=self.rows())

    def key(self):
        """Hashable identity of the tabulated function."""
        return (self.shape, self.table.tobytes())

    def __repr__(self):
        return 'TableInstance(n=%d, k=%d)' % (self.shape.n, self.shape.k)
