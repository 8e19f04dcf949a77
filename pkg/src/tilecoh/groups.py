"""Finitely generated abelian groups as cokernels and subquotients.

A group is presented in canonical form (ascending invariant factors plus a
free rank) together with a coordinate chart: integer matrices that move
coset representatives between ambient and canonical coordinates.  The
chart keeps the full presentation internally, including trivial Z/1
coordinates, so that endomorphisms can be conjugated before the trivial
coordinates are deleted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .intmat import IntMatrix
from .normalforms import smith_normal_form


class DescentError(ValueError):
    """An ambient endomorphism does not descend to the quotient group."""

    def __init__(self, message: str, witness: IntMatrix):
        super().__init__(f"{message}; witness vector {tuple(witness.column(0))}")
        self.witness = witness


@dataclass(frozen=True)
class AbelianGroup:
    """Canonical form: torsion invariant factors (each >= 2, ascending
    divisibility) plus a free rank.  Z/1 factors are dropped; Z/0 factors
    are free summands."""

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "torsion", tuple(int(v) for v in self.torsion))
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        for v in self.torsion:
            if v < 2:
                raise ValueError(f"invariant factor {v} is not allowed in canonical form")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors {a}, {b} violate the divisibility chain")

    @classmethod
    def from_factors(cls, factors) -> AbelianGroup:
        """Canonicalize a list of cyclic orders: 0 means Z, 1 means trivial."""
        free = sum(1 for v in factors if v == 0)
        torsion = invariant_factor_chain(abs(v) for v in factors if abs(v) >= 2)
        return cls(torsion, free)

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def order(self) -> int | None:
        """Number of elements, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for v in self.torsion:
            n *= v
        return n

    def direct_sum(self, other: AbelianGroup) -> AbelianGroup:
        return AbelianGroup(
            invariant_factor_chain(self.torsion + other.torsion),
            self.free_rank + other.free_rank,
        )

    def __str__(self) -> str:
        parts = [f"Z/{v}" for v in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " ⊕ ".join(parts) if parts else "0"


def invariant_factor_chain(values) -> tuple[int, ...]:
    """Rewrite a multiset of moduli >= 2 as an ascending divisibility chain.

    Works by repeatedly replacing non-dividing pairs (a, b) with
    (gcd, lcm); the multiset of products is preserved, so this converges
    to the invariant factors without any integer factorization.
    """
    vals = sorted(int(v) for v in values)
    if any(v < 2 for v in vals):
        raise ValueError("moduli must be >= 2")
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                a, b = vals[i], vals[j]
                if b % a != 0:
                    g = gcd(a, b)
                    vals[i], vals[j] = g, a * b // g
                    changed = True
        if changed:
            vals.sort()
    return tuple(v for v in vals if v >= 2)


@dataclass(frozen=True)
class GroupChart:
    """A group together with coordinates for its coset representatives.

    ``to_full`` maps ambient vectors to the full presentation coordinates
    (one per invariant factor in ``full_factors``, trivial factors
    included); ``from_full`` maps them back.  ``to_canonical`` and
    ``from_canonical`` are the same maps with the trivial coordinates
    deleted.  When ``kernel_check`` is present the chart only applies to
    ambient vectors annihilated by it (the chart of a subquotient).
    """

    group: AbelianGroup
    ambient_dim: int
    full_factors: tuple[int, ...]
    to_full: IntMatrix
    from_full: IntMatrix
    kernel_check: IntMatrix | None = field(default=None)

    def __post_init__(self) -> None:
        k = len(self.full_factors)
        if self.to_full.shape != (k, self.ambient_dim):
            raise ValueError(
                f"to_full is {self.to_full.rows}x{self.to_full.cols}, "
                f"expected {k}x{self.ambient_dim}"
            )
        if self.from_full.shape != (self.ambient_dim, k):
            raise ValueError(
                f"from_full is {self.from_full.rows}x{self.from_full.cols}, "
                f"expected {self.ambient_dim}x{k}"
            )

    @property
    def kept_coordinates(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.full_factors) if v != 1)

    @property
    def to_canonical(self) -> IntMatrix:
        return self.to_full.submatrix(self.kept_coordinates, range(self.ambient_dim))

    @property
    def from_canonical(self) -> IntMatrix:
        return self.from_full.submatrix(range(self.ambient_dim), self.kept_coordinates)


@dataclass(frozen=True)
class CanonicalEndo:
    """A group endomorphism written on canonical coordinates.

    Column j of the matrix gives the image of the j-th canonical
    generator; entries in torsion rows are meaningful modulo that row's
    invariant factor.  Construction checks well-definedness: each
    relation generator must map into the relation lattice, which in
    particular forbids torsion generators from hitting free coordinates.
    """

    group: AbelianGroup
    matrix: IntMatrix

    def __post_init__(self) -> None:
        factors = self.group.torsion + (0,) * self.group.free_rank
        k = len(factors)
        if self.matrix.shape != (k, k):
            raise ValueError(
                f"endomorphism matrix is {self.matrix.rows}x{self.matrix.cols}, "
                f"expected {k}x{k} for {self.group}"
            )
        bad = _descent_violation(factors, self.matrix)
        if bad is not None:
            i, j = bad
            raise ValueError(
                "endomorphism is not well defined on "
                f"{self.group}: relation {factors[j]}*e_{j} maps outside the "
                f"relation lattice at coordinate {i}"
            )

    def is_identity(self) -> bool:
        return self.matrix == IntMatrix.identity(self.matrix.rows)


def _descent_violation(factors, matrix: IntMatrix) -> tuple[int, int] | None:
    """First (row, col) where matrix * (n_j e_j) leaves the relation lattice."""
    for j, nj in enumerate(factors):
        if nj == 0:
            continue
        for i, ni in enumerate(factors):
            v = nj * matrix.entries[i][j]
            if ni == 0:
                if v != 0:
                    return (i, j)
            elif v % ni != 0:
                return (i, j)
    return None


def cokernel(a: IntMatrix) -> GroupChart:
    """Canonical form of Z^b / (a * Z^a) with charts x -> P x, y -> P^-1 y."""
    snf = smith_normal_form(a)
    b = a.rows
    diag = snf.d.diagonal_entries()
    factors = tuple(diag) + (0,) * (b - len(diag))
    group = AbelianGroup.from_factors(factors)
    return GroupChart(
        group=group,
        ambient_dim=b,
        full_factors=factors,
        to_full=snf.p,
        from_full=snf.p_inv,
    )


def kernel_mod_image(d0: IntMatrix, d1: IntMatrix) -> GroupChart:
    """Canonical form of ker d1 / im d0 for consecutive cochain maps.

    Requires d1 @ d0 = 0.  The Smith form D = P d1 Q has rank r; columns
    r+1..E of Q span ker d1, so the quotient is the cokernel of the last
    E-r rows of Q^-1 d0, and the charts compose through Q.
    """
    if d1.cols != d0.rows:
        raise ValueError(
            f"cochain maps have incompatible shapes {d0.rows}x{d0.cols} and {d1.rows}x{d1.cols}"
        )
    prod = d1 @ d0
    if not prod.is_zero():
        raise ValueError(f"cochain condition violated: d1 @ d0 = {prod!r}, expected zero")
    e = d1.cols
    snf = smith_normal_form(d1)
    r = snf.rank
    free_rows = range(r, e)
    selector = snf.q_inv.submatrix(free_rows, range(e))        # J^T Q^-1, (E-r) x E
    reduced = selector @ d0                                    # (E-r) x V
    base = cokernel(reduced)
    to_full = base.to_full @ selector
    from_full = snf.q.submatrix(range(e), free_rows) @ base.from_full
    return GroupChart(
        group=base.group,
        ambient_dim=e,
        full_factors=base.full_factors,
        to_full=to_full,
        from_full=from_full,
        kernel_check=d1,
    )


def image_reduction(a: IntMatrix) -> tuple[int, IntMatrix, IntMatrix]:
    """Identify the image lattice a*Z^n with Z^r, r = rank(a).

    Returns (r, fwd, bwd) with fwd @ bwd = I_r and bwd @ fwd @ a = a:
    bwd embeds Z^r as the saturation of the image (a direct summand of
    Z^n containing a*Z^n), and fwd projects back.  Both are integer
    matrices; restricted to the image, fwd is injective with finite-index
    image, which suffices to transport stationary direct limits.
    """
    if not a.is_square:
        raise ValueError(f"image reduction requires a square matrix, got {a.rows}x{a.cols}")
    n = a.rows
    snf = smith_normal_form(a)
    r = snf.rank
    fwd = snf.p.submatrix(range(r), range(n))
    bwd = snf.p_inv.submatrix(range(n), range(r))
    return r, fwd, bwd


def induced_endo(chart: GroupChart, raw: IntMatrix) -> CanonicalEndo:
    """Conjugate an ambient endomorphism into canonical coordinates.

    Checks that raw descends: it must preserve the chart's kernel (for
    subquotients) and map the relation lattice into itself.  Trivial Z/1
    coordinates are deleted only after the full conjugation.
    """
    amb = chart.ambient_dim
    if raw.shape != (amb, amb):
        raise ValueError(
            f"ambient endomorphism is {raw.rows}x{raw.cols}, expected {amb}x{amb}"
        )
    mapped = raw @ chart.from_full
    if chart.kernel_check is not None:
        residue = chart.kernel_check @ mapped
        if not residue.is_zero():
            j = next(j for j in range(residue.cols) if any(residue.column(j)))
            raise DescentError(
                "does not descend to quotient: image leaves the kernel",
                mapped.submatrix(range(amb), [j]),
            )
    conj = chart.to_full @ mapped
    bad = _descent_violation(chart.full_factors, conj)
    if bad is not None:
        i, j = bad
        nj = chart.full_factors[j]
        witness = chart.from_full @ IntMatrix.column_vector(
            [nj if k == j else 0 for k in range(len(chart.full_factors))]
        )
        raise DescentError(
            f"does not descend to quotient: relation {nj}*e_{j} maps outside the "
            f"relation lattice at coordinate {i}",
            witness,
        )
    kept = chart.kept_coordinates
    return CanonicalEndo(chart.group, conj.submatrix(kept, kept))
