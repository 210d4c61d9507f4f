"""Sparse row echelon forms over an exact field.

Vectors are dicts mapping column keys to nonzero scalars.  Column keys only
need to be mutually comparable; the pivot of a row is its largest key, so
the key order doubles as the elimination order.
"""


def _axpy(vec, f, row):
    # vec -= f * row, in place, pruning zeros
    for col, val in row.items():
        nv = vec.get(col, 0) - f * val
        if nv:
            vec[col] = nv
        else:
            vec.pop(col, None)


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace.

    Every stored row has coefficient 1 at its pivot and no other stored
    row shares that pivot.
    """

    def __init__(self, rows=None):
        self.rows = {} if rows is None else rows

    def copy(self):
        return EchelonBasis(dict(self.rows))

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return self.rows.keys()

    def _reduce_head(self, vec):
        vec = dict(vec)
        rows = self.rows
        while vec:
            p = max(vec)
            row = rows.get(p)
            if row is None:
                break
            _axpy(vec, vec[p], row)
        return vec

    def reduce(self, vec):
        """Fully reduced representative of vec modulo the span.

        The result contains no pivot column, which makes it canonical.
        """
        vec = dict(vec)
        rows = self.rows
        out = {}
        while vec:
            p = max(vec)
            row = rows.get(p)
            if row is None:
                out[p] = vec.pop(p)
            else:
                _axpy(vec, vec[p], row)
        return out

    def add(self, vec):
        """Insert vec; return True if it enlarged the span."""
        vec = self._reduce_head(vec)
        if not vec:
            return False
        p = max(vec)
        inv = 1 / vec[p]
        self.rows[p] = {c: v * inv for c, v in vec.items()}
        return True

    def __contains__(self, vec):
        return not self._reduce_head(vec)


def rank(vectors):
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return basis.rank
