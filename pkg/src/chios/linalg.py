"""Exact rational linear algebra on small dense and sparse systems.

Dense matrices are lists of rows of ``Fraction``; sparse vectors are dicts
mapping an arbitrary hashable column key to a nonzero ``Fraction``.
"""

from fractions import Fraction


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def det(rows):
    """Determinant of a square matrix by fraction-exact elimination."""
    m = [[as_fraction(x) for x in row] for row in rows]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("det of a non-square matrix")
    sign = 1
    result = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        piv = m[c][c]
        result *= piv
        for r in range(c + 1, n):
            f = m[r][c] / piv
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return sign * result


def row_echelon(rows):
    """Return (echelon rows, pivot columns) without touching the input."""
    m = [[as_fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        for i in range(r + 1, len(m)):
            f = m[i][c] / piv
            if f:
                for k in range(c, ncols):
                    m[i][k] -= f * m[r][k]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows):
    return len(row_echelon(rows)[1])


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def is_identity(matrix):
    n = len(matrix)
    return all(
        len(row) == n and all(row[j] == (1 if i == j else 0) for j in range(n))
        for i, row in enumerate(matrix)
    )


class SparseEchelon:
    """Incremental echelon basis of a subspace of a sparse vector space.

    Columns are ranked by ``key``; a vector's lead is its highest-ranked
    column.  Every stored row has a distinct lead with coefficient 1, so the
    set of leads is exactly the set of leading columns of all nonzero vectors
    in the span.
    """

    def __init__(self, key):
        self.key = key
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    @property
    def leads(self):
        return set(self.rows)

    def _lead(self, vec):
        return max(vec, key=self.key)

    @staticmethod
    def _axpy(vec, c, row):
        for k, a in row.items():
            v = vec.get(k, 0) - c * a
            if v:
                vec[k] = v
            else:
                vec.pop(k, None)

    def add(self, vec):
        """Insert ``vec``; return True when it enlarged the span."""
        v = {k: as_fraction(a) for k, a in vec.items() if a}
        while v:
            m = self._lead(v)
            row = self.rows.get(m)
            if row is None:
                c = v[m]
                self.rows[m] = {k: a / c for k, a in v.items()}
                return True
            self._axpy(v, v[m], row)
        return False

    def reduce(self, vec):
        """Fully reduced normal form of ``vec`` modulo the span."""
        v = {k: as_fraction(a) for k, a in vec.items() if a}
        while True:
            hits = [m for m in v if m in self.rows]
            if not hits:
                return v
            m = max(hits, key=self.key)
            self._axpy(v, v[m], self.rows[m])

    def contains(self, vec):
        return not self.reduce(vec)
