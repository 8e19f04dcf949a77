"""Normal forms of integer matrices: Smith, Hermite, kernels, eigenpairs.

The Smith normal form here is the engine for every group computation in
the package: D = P*A*Q with P, Q unimodular, D diagonal with nonnegative
entries, nonzero entries first, and each nonzero entry dividing the next.
Pivots are chosen with minimal absolute value to limit coefficient growth;
arithmetic is exact throughout, so intermediate entries may exceed machine
words without harm.

The Hermite normal form is implemented independently of the Smith form so
the two can serve as cross-checks of one another.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .intmat import IntMatrix


@dataclass(frozen=True)
class SmithDecomposition:
    """D = p @ a @ q for the input a, with p, q unimodular.

    ``p_inv`` and ``q_inv`` are tracked during elimination (no generic
    matrix inversion happens anywhere in the package).
    """

    p: IntMatrix
    d: IntMatrix
    q: IntMatrix
    rank: int
    p_inv: IntMatrix
    q_inv: IntMatrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(v for v in self.d.diagonal_entries() if v != 0)


def smith_normal_form(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form of any integer matrix, empty shapes included."""
    m, n = a.rows, a.cols
    d = a.to_lists()
    p = IntMatrix.identity(m).to_lists()
    p_inv = IntMatrix.identity(m).to_lists()
    q = IntMatrix.identity(n).to_lists()
    q_inv = IntMatrix.identity(n).to_lists()

    def row_swap(i: int, j: int) -> None:
        d[i], d[j] = d[j], d[i]
        p[i], p[j] = p[j], p[i]
        for r in p_inv:
            r[i], r[j] = r[j], r[i]

    def row_add(i: int, j: int, c: int) -> None:
        # row i += c * row j;  inverse op: column j of p_inv -= c * column i
        d[i] = [x + c * y for x, y in zip(d[i], d[j])]
        p[i] = [x + c * y for x, y in zip(p[i], p[j])]
        for r in p_inv:
            r[j] -= c * r[i]

    def row_negate(i: int) -> None:
        d[i] = [-x for x in d[i]]
        p[i] = [-x for x in p[i]]
        for r in p_inv:
            r[i] = -r[i]

    def col_swap(i: int, j: int) -> None:
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in q:
            r[i], r[j] = r[j], r[i]
        q_inv[i], q_inv[j] = q_inv[j], q_inv[i]

    def col_add(i: int, j: int, c: int) -> None:
        # column i += c * column j;  inverse op: row j of q_inv -= c * row i
        for r in d:
            r[i] += c * r[j]
        for r in q:
            r[i] += c * r[j]
        q_inv[j] = [x - c * y for x, y in zip(q_inv[j], q_inv[i])]

    def find_pivot(t: int) -> tuple[int, int] | None:
        best = None
        best_val = None
        for i in range(t, m):
            for j in range(t, n):
                v = abs(d[i][j])
                if v != 0 and (best_val is None or v < best_val):
                    best, best_val = (i, j), v
                    if v == 1:
                        return best
        return best

    t = 0
    while t < min(m, n):
        pos = find_pivot(t)
        if pos is None:
            break
        while True:
            pi, pj = pos
            if pi != t:
                row_swap(t, pi)
            if pj != t:
                col_swap(t, pj)
            if d[t][t] < 0:
                row_negate(t)
            pivot = d[t][t]
            dirty = False
            for i in range(t + 1, m):
                if d[i][t] != 0:
                    quot = d[i][t] // pivot
                    if quot:
                        row_add(i, t, -quot)
                    if d[i][t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                if d[t][j] != 0:
                    quot = d[t][j] // pivot
                    if quot:
                        col_add(j, t, -quot)
                    if d[t][j] != 0:
                        dirty = True
            if dirty:
                pos = find_pivot(t)
                continue
            # row/column t are clear; force the divisibility chain
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if d[i][j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(t, offender, 1)
            pos = find_pivot(t)
        t += 1

    rank = sum(1 for i in range(min(m, n)) if d[i][i] != 0)
    return SmithDecomposition(
        p=IntMatrix.from_rows(p, cols=m),
        d=IntMatrix.from_rows(d, cols=n),
        q=IntMatrix.from_rows(q, cols=n),
        rank=rank,
        p_inv=IntMatrix.from_rows(p_inv, cols=m),
        q_inv=IntMatrix.from_rows(q_inv, cols=n),
    )


def hermite_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """Column Hermite form: h = a @ u with u unimodular.

    Convention: pivot rows strictly increase left to right (a staircase
    that is lower triangular when a is square of full rank), pivots are
    positive, entries in a pivot's row to the left of it are reduced into
    [0, pivot), and zero columns are pushed to the right end.  The column
    lattice of h equals that of a.
    """
    m, n = a.rows, a.cols
    h = a.to_lists()
    u = IntMatrix.identity(n).to_lists()

    def col_swap(i: int, j: int) -> None:
        for r in h:
            r[i], r[j] = r[j], r[i]
        for r in u:
            r[i], r[j] = r[j], r[i]

    def col_add(i: int, j: int, c: int) -> None:
        for r in h:
            r[i] += c * r[j]
        for r in u:
            r[i] += c * r[j]

    def col_negate(i: int) -> None:
        for r in h:
            r[i] = -r[i]
        for r in u:
            r[i] = -r[i]

    c = 0
    for i in range(m):
        if c == n:
            break
        while True:
            nz = [j for j in range(c, n) if h[i][j] != 0]
            if not nz:
                break
            j_min = min(nz, key=lambda j: abs(h[i][j]))
            if j_min != c:
                col_swap(c, j_min)
            if len(nz) == 1:
                break
            pivot = h[i][c]
            for j in range(c + 1, n):
                if h[i][j] != 0:
                    col_add(j, c, -(h[i][j] // pivot))
            if all(h[i][j] == 0 for j in range(c + 1, n)):
                break
        if h[i][c] == 0:
            continue
        if h[i][c] < 0:
            col_negate(c)
        pivot = h[i][c]
        for j in range(c):
            quot = h[i][j] // pivot
            if quot:
                col_add(j, c, -quot)
        c += 1

    return IntMatrix.from_rows(h, cols=n), IntMatrix.from_rows(u, cols=n)


def kernel_basis(a: IntMatrix) -> IntMatrix:
    """Columns form a Z-basis of {x : a @ x = 0}; saturated by construction."""
    snf = smith_normal_form(a)
    free = range(snf.rank, a.cols)
    return snf.q.submatrix(range(a.cols), free)


def characteristic_polynomial(a: IntMatrix) -> tuple[int, ...]:
    """Coefficients of det(t*I - a), highest degree first (Faddeev-LeVerrier)."""
    if not a.is_square:
        raise ValueError(f"characteristic polynomial of non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    coeffs = [1]
    mk = a
    ident = IntMatrix.identity(n)
    for k in range(1, n + 1):
        if k > 1:
            mk = a @ (mk + coeffs[-1] * ident)
        trace = sum(mk.entries[i][i] for i in range(n))
        # exact: k always divides the trace of the k-th auxiliary matrix
        coeffs.append(-trace // k)
    return tuple(coeffs)


def _poly_eval(coeffs: tuple[int, ...], x: int) -> int:
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def integer_eigen(a: IntMatrix) -> list[tuple[int, IntMatrix]]:
    """All integer eigenvalues of a square matrix, each with one primitive
    integer eigenvector (a kernel vector of a - lambda*I with coprime
    entries).  Non-integer eigenvalues are deliberately not computed.

    Results are sorted by decreasing |lambda| (ties: decreasing lambda),
    so the expanding eigenvalue comes first.
    """
    if not a.is_square:
        raise ValueError(f"eigenvalues of non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    if n == 0:
        return []
    coeffs = characteristic_polynomial(a)
    # p(t) = t^s * q(t) with q(0) != 0; integer roots divide q(0)
    trailing = 0
    while trailing < n and coeffs[n - trailing] == 0:
        trailing += 1
    roots: set[int] = set()
    if trailing > 0:
        roots.add(0)
    if trailing < n:
        constant = coeffs[n - trailing]
        for d in _divisors(constant):
            for cand in (d, -d):
                if cand not in roots and _poly_eval(coeffs, cand) == 0:
                    roots.add(cand)
    result = []
    ident = IntMatrix.identity(n)
    for lam in sorted(roots, key=lambda v: (-abs(v), -v)):
        kern = kernel_basis(a - lam * ident)
        vec = list(kern.column(0))
        g = 0
        for v in vec:
            g = gcd(g, v)
        if g > 1:
            vec = [v // g for v in vec]
        result.append((lam, IntMatrix.column_vector(vec)))
    return result


def inverse_unimodular(a: IntMatrix) -> IntMatrix:
    """Exact inverse of a unimodular matrix via its Smith form (D must be I)."""
    if not a.is_square:
        raise ValueError(f"cannot invert non-square {a.rows}x{a.cols} matrix")
    snf = smith_normal_form(a)
    if snf.d != IntMatrix.identity(a.rows):
        raise ValueError("matrix is not unimodular: Smith form is not the identity")
    # D = P A Q = I, hence A^{-1} = Q P.
    return snf.q @ snf.p
