"""Exact linear algebra over the rationals and the integers.

Matrices are plain lists of rows. Entries are ``Fraction`` or ``int``;
nothing here ever touches floating point.
"""

from fractions import Fraction
from math import gcd, lcm


def frac(x):
    """Coerce ``x`` (int, Fraction, or a ``"p/q"`` string) to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def frac_vector(v):
    return tuple(frac(x) for x in v)


def primitive(vec):
    """Scale a rational vector by a positive factor to a primitive integer vector."""
    den = 1
    for x in vec:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns ``(R, pivots)``.

    Pivots are chosen as the first nonzero column, top to bottom, so the
    result is deterministic for a given column order.
    """
    M = [[Fraction(x) for x in r] for r in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(M):
            break
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        pv = M[r][c]
        if pv != 1:
            M[r] = [x / pv for x in M[r]]
        pr = M[r]
        for i in range(len(M)):
            if i != r:
                f = M[i][c]
                if f:
                    M[i] = [a - f * b for a, b in zip(M[i], pr)]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of ``{x : rows @ x = 0}``, one vector per free column."""
    R, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(R, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(A, b):
    """Return one solution of ``A x = b`` or ``None`` if inconsistent."""
    ncols = len(A[0]) if A else 0
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    R, pivots = rref(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(R, pivots):
        x[p] = row[ncols]
    return x


def det(A):
    """Determinant by exact elimination."""
    n = len(A)
    M = [[Fraction(x) for x in r] for r in A]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        pv = M[c][c]
        d *= pv
        for i in range(c + 1, n):
            f = M[i][c] / pv
            if f:
                M[i] = [a - f * b for a, b in zip(M[i], M[c])]
    return d


def inverse(A):
    n = len(A)
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(A)]
    R, pivots = rref(aug, n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in R]


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def integer_kernel(C, ncols):
    """Z-basis of ``{x in Z^n : C x = 0}`` for an integer matrix ``C``.

    Column operations by extended gcd keep a unimodular transform ``U``
    with ``C U`` in column echelon form; the columns of ``U`` that end up
    under zero columns span the integer kernel.
    """
    M = [list(map(int, r)) for r in C]
    U = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def colop(j, k, a, b, c, d):
        # (col_j, col_k) <- (a col_j + b col_k, c col_j + d col_k)
        for mat in (M, U):
            for row in mat:
                x, y = row[j], row[k]
                row[j], row[k] = a * x + b * y, c * x + d * y

    lead = 0
    for row_i in range(len(M)):
        if lead == ncols:
            break
        for k in range(lead + 1, ncols):
            x, y = M[row_i][lead], M[row_i][k]
            if y == 0:
                continue
            g, s, t = _xgcd(x, y)
            # [x y] [[s, -y/g], [t, x/g]] = [g, 0], determinant 1
            colop(lead, k, s, t, -y // g, x // g)
        if M[row_i][lead] != 0:
            lead += 1
    return [[U[i][j] for i in range(ncols)] for j in range(lead, ncols)]


def _xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) > 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    x, y = a, b
    while y:
        q = x // y
        x, y = y, x - q * y
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if x < 0:
        x, s0, t0 = -x, -s0, -t0
    return x, s0, t0


def saturated_basis(vectors, dim):
    """Z-basis of the lattice ``Z^dim`` intersected with the span of ``vectors``."""
    vecs = [list(v) for v in vectors if any(v)]
    if not vecs:
        return []
    perp = nullspace(vecs, dim)
    if not perp:
        return [[int(i == j) for j in range(dim)] for i in range(dim)]
    C = [primitive(p) for p in perp]
    return integer_kernel(C, dim)


class EchelonSpan:
    """Incrementally maintained row space with membership and reduction.

    Used for greedy basis selection where the order of insertion decides
    which vectors are kept.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self._rows = {}  # pivot column -> row with 1 at pivot

    def __len__(self):
        return len(self._rows)

    def reduce(self, vec):
        v = [Fraction(x) for x in vec]
        for c in sorted(self._rows):
            if v[c]:
                f = v[c]
                row = self._rows[c]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, vec):
        """Insert ``vec``; return True iff it was independent of the span."""
        v = self.reduce(vec)
        c = next((i for i, x in enumerate(v) if x), None)
        if c is None:
            return False
        pv = v[c]
        v = [x / pv for x in v]
        for k, row in list(self._rows.items()):
            if row[c]:
                f = row[c]
                self._rows[k] = [a - f * b for a, b in zip(row, v)]
        self._rows[c] = v
        return True

    def __contains__(self, vec):
        return not any(self.reduce(vec))

    def coordinates(self, vec, basis_vectors):
        """Coefficients of ``vec`` in terms of ``basis_vectors`` (assumed independent)."""
        A = [list(col) for col in zip(*basis_vectors)]
        return solve(A, list(vec))
