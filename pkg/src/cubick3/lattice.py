"""Integral lattices presented by Gram matrices.

A lattice here is a free Z-module of finite rank with an integer symmetric
bilinear form, given by its Gram matrix.  Vectors are coordinate tuples in
the (implicit) basis.  Everything is immutable and every operation is a pure
function, so values can be shared freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import (
    DegenerateLattice,
    DependentGenerators,
    InvalidTwist,
    ZeroVector,
)
from . import intlinalg as la

Vector = tuple[int, ...]


def _as_vector(v) -> Vector:
    return tuple(int(e) for e in v)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, row-major."""

    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(row) for row in self.data}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    @staticmethod
    def from_rows(rows) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(e) for e in row) for row in rows))

    @property
    def nrows(self) -> int:
        return len(self.data)

    @property
    def ncols(self) -> int:
        return len(self.data[0]) if self.data else 0

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.data]

    def row(self, i: int) -> Vector:
        return self.data[i]

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.nrows)
            for j in range(i)
        )

    def to_json(self) -> list[list]:
        return [[json_int(e) for e in row] for row in self.data]


def json_int(n: int):
    """Integers above 64 bits are rendered as decimal strings in JSON."""
    return n if -(2**63) <= n < 2**63 else str(n)


def parse_json_int(v) -> int:
    return int(v)


@dataclass(frozen=True)
class GramLattice:
    """A finite-rank integral lattice given by a symmetric Gram matrix."""

    gram: IntMatrix
    label: str | None = None

    def __post_init__(self):
        if not self.gram.is_symmetric():
            raise ValueError("Gram matrix must be symmetric")

    @staticmethod
    def from_rows(rows, label: str | None = None) -> "GramLattice":
        return GramLattice(IntMatrix.from_rows(rows), label)

    @property
    def rank(self) -> int:
        return self.gram.nrows

    @cached_property
    def is_even(self) -> bool:
        return all(self.gram.data[i][i] % 2 == 0 for i in range(self.rank))

    @cached_property
    def det(self) -> int:
        """Signed determinant of the Gram matrix."""
        return la.det_bareiss(self.gram.to_lists())

    @property
    def abs_det(self) -> int:
        return abs(self.det)

    def _check_len(self, v):
        if len(v) != self.rank:
            raise ValueError(f"vector length {len(v)} != rank {self.rank}")

    def pairing(self, u, v):
        self._check_len(u)
        self._check_len(v)
        return la.pairing(self.gram.to_lists(), u, v)

    def square(self, v):
        return self.pairing(v, v)

    def basis_pairings(self, v) -> list:
        """Pairings of v with the basis vectors, i.e. G*v."""
        self._check_len(v)
        return la.mat_vec(self.gram.to_lists(), v)

    def to_json(self) -> dict:
        obj: dict = {}
        if self.label is not None:
            obj["label"] = self.label
        obj["gram"] = self.gram.to_json()
        return obj

    @staticmethod
    def from_json(obj: dict) -> "GramLattice":
        rows = [[parse_json_int(e) for e in row] for row in obj["gram"]]
        return GramLattice.from_rows(rows, obj.get("label"))


@dataclass(frozen=True)
class Sublattice:
    """A sublattice of an ambient lattice, given by basis rows in ambient coordinates."""

    ambient: GramLattice
    basis: IntMatrix

    @property
    def rank(self) -> int:
        return self.basis.nrows

    @cached_property
    def induced_gram(self) -> IntMatrix:
        B = self.basis.to_lists()
        return IntMatrix.from_rows(la.gram_product(B, self.ambient.gram.to_lists()))

    def as_lattice(self, label: str | None = None) -> GramLattice:
        return GramLattice(self.induced_gram, label)

    @cached_property
    def det(self) -> int:
        return la.det_bareiss(self.induced_gram.to_lists())

    @property
    def abs_det(self) -> int:
        return abs(self.det)

    def coords_of(self, v) -> list[Fraction] | None:
        """Rational coordinates of v in the sublattice basis, or None."""
        if len(v) != self.ambient.rank:
            raise ValueError("vector length does not match the ambient rank")
        return la.coords_in_rowspace(self.basis.to_lists(), list(v))

    @cached_property
    def _hnf(self) -> list[list[int]]:
        # canonical echelon basis of the same lattice; membership tests reduce
        # to one back-substitution pass against it
        return la.hnf_rows(self.basis.to_lists())

    def contains(self, v) -> bool:
        """Whether the (possibly rational) ambient vector lies in the sublattice."""
        if len(v) != self.ambient.rank:
            raise ValueError("vector length does not match the ambient rank")
        c = la.hnf_solve(self._hnf, list(v))
        return c is not None and all(Fraction(x).denominator == 1 for x in c)


@dataclass(frozen=True)
class DiscGroup:
    """Discriminant group A_L = L*/L of a nondegenerate lattice.

    `generators` are rational coordinate vectors in the lattice basis whose
    classes generate the cyclic factors; `q_values` are their discriminant
    quadratic form values in Q/2Z (reduced into [0, 2)), present only for
    even lattices.
    """

    invariant_factors: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]
    q_values: tuple[Fraction, ...] | None

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1


# ---------------------------------------------------------------------------
# operations


def direct_sum(
    parts, twists=None, label: str | None = None
) -> GramLattice:
    """Block-diagonal sum of lattices; twist k scales a part's Gram by k."""
    parts = list(parts)
    if not parts:
        raise ValueError("direct_sum needs at least one part")
    if twists is None:
        twists = [1] * len(parts)
    twists = list(twists)
    if len(twists) != len(parts):
        raise ValueError("one twist per part")
    for t in twists:
        if t == 0:
            raise InvalidTwist("zero twist")
    rank = sum(p.rank for p in parts)
    rows = [[0] * rank for _ in range(rank)]
    off = 0
    for part, t in zip(parts, twists):
        g = part.gram.data
        for i in range(part.rank):
            for j in range(part.rank):
                rows[off + i][off + j] = t * g[i][j]
        off += part.rank
    return GramLattice.from_rows(rows, label)


def determinant(L: GramLattice) -> int:
    return L.det


def signature(L: GramLattice) -> tuple[int, int, int]:
    """Sylvester signature (pos, neg, null) by exact symmetric elimination.

    Zero pivots are handled by moving a nonzero diagonal entry to the front
    when one exists, and otherwise by splitting off a hyperbolic 2x2 block,
    which contributes (1, 1).
    """
    n = L.rank
    M = la.frac_rows(L.gram.to_lists())
    pos = neg = null = 0

    def swap(i, j):
        M[i], M[j] = M[j], M[i]
        for row in M:
            row[i], row[j] = row[j], row[i]

    lo = 0
    while lo < n:
        if all(M[lo][j] == 0 for j in range(lo, n)):
            null += 1
            lo += 1
            continue
        if M[lo][lo] == 0:
            d = next((j for j in range(lo + 1, n) if M[j][j] != 0), None)
            if d is not None:
                swap(lo, d)
            else:
                # all remaining diagonal entries vanish: split a hyperbolic plane
                j = next(j for j in range(lo + 1, n) if M[lo][j] != 0)
                swap(lo + 1, j)
                b = M[lo][lo + 1]
                old = [row[:] for row in M]
                for k in range(lo + 2, n):
                    cu = old[k][lo + 1] / b  # component along the first plane vector
                    cv = old[k][lo] / b
                    for t in range(lo + 2, n):
                        M[k][t] = old[k][t] - cu * old[lo][t] - cv * old[lo + 1][t]
                    M[k][lo] = M[k][lo + 1] = Fraction(0)
                    M[lo][k] = M[lo + 1][k] = Fraction(0)
                pos += 1
                neg += 1
                lo += 2
                continue
        p = M[lo][lo]
        if p > 0:
            pos += 1
        else:
            neg += 1
        # row-only elimination leaves the symmetric Schur complement in the
        # trailing block because row lo stays pristine throughout
        for i in range(lo + 1, n):
            if M[i][lo]:
                f = M[i][lo] / p
                for j in range(lo + 1, n):
                    M[i][j] -= f * M[lo][j]
        for i in range(lo + 1, n):
            M[lo][i] = M[i][lo] = Fraction(0)
        lo += 1
    return pos, neg, null


def disc_group(L: GramLattice) -> DiscGroup:
    """Discriminant group from the Smith normal form of the Gram matrix.

    With U*G*V = D, the class of the i-th column of V divided by d_i
    generates the i-th cyclic factor (this is the dual-basis description:
    G * v_i / d_i is a standard generator of Z^n / G Z^n).
    """
    if L.det == 0:
        raise DegenerateLattice("discriminant group needs det != 0")
    G = L.gram.to_lists()
    diag, V = la.smith_normal_form(G)
    factors = []
    gens = []
    for i, d in enumerate(diag):
        if d > 1:
            factors.append(d)
            col = [Fraction(V[r][i], d) for r in range(L.rank)]
            gens.append(tuple(col))
    q_values = None
    if L.is_even:
        q_values = tuple(_q_mod2(G, g) for g in gens)
    return DiscGroup(tuple(factors), tuple(gens), q_values)


def _q_mod2(G, coords) -> Fraction:
    q = Fraction(0)
    Gv = la.mat_vec(G, coords)
    for c, p in zip(coords, Gv):
        q += c * p
    return q % 2


def span_sublattice(amb: GramLattice, vecs) -> Sublattice:
    rows = [list(_as_vector(v)) for v in vecs]
    for row in rows:
        if len(row) != amb.rank:
            raise ValueError("vector length does not match the ambient rank")
    if la.rank_int(rows) != len(rows):
        raise DependentGenerators("generators are linearly dependent")
    return Sublattice(amb, IntMatrix.from_rows(rows))


def saturate_rows(amb: GramLattice, rows) -> Sublattice:
    """Saturation of the row span: all ambient integer vectors in its rational span.

    Accepts an arbitrary (possibly dependent) generating list.  Computed as a
    double integer kernel, which lands on a saturated basis automatically.
    """
    rows = [list(_as_vector(v)) for v in rows]
    if not rows:
        raise ValueError("empty generating set")
    n = amb.rank
    ker = la.left_kernel(la.transpose(rows))  # right kernel of the row matrix
    if not ker:
        basis = la.identity(n)
    else:
        basis = la.left_kernel(la.transpose(ker))
    return Sublattice(amb, IntMatrix.from_rows(basis))


def saturation(S: Sublattice) -> tuple[Sublattice, int]:
    """Minimal primitive sublattice containing S, plus the index [sat : S]."""
    sat = saturate_rows(S.ambient, S.basis.to_lists())
    basis = sat.basis.to_lists()  # echelon by construction
    coeffs = []
    for row in S.basis.to_lists():
        c = la.hnf_solve(basis, row)
        assert c is not None and all(x.denominator == 1 for x in c)
        coeffs.append([int(x) for x in c])
    index = abs(la.det_bareiss(coeffs))
    return sat, index


def orthogonal_complement(amb: GramLattice, vecs) -> Sublattice:
    """The saturated sublattice of everything pairing to zero with the given vectors."""
    W = [list(_as_vector(v)) for v in vecs]
    for row in W:
        if len(row) != amb.rank:
            raise ValueError("vector length does not match the ambient rank")
    M = la.matmul(amb.gram.to_lists(), la.transpose(W))
    basis = la.left_kernel(M)
    return Sublattice(amb, IntMatrix.from_rows(basis))


def divisibility(amb: GramLattice, v) -> int:
    """The positive generator n of the pairing ideal (v . amb) = nZ."""
    v = _as_vector(v)
    if not any(v):
        raise ZeroVector("divisibility of the zero vector")
    return math.gcd(*(abs(p) for p in amb.basis_pairings(v)))


def is_primitive(amb: GramLattice, v) -> bool:
    """True when v is not a proper integer multiple, i.e. gcd of coordinates is 1."""
    v = _as_vector(v)
    if len(v) != amb.rank:
        raise ValueError("vector length does not match the ambient rank")
    if not any(v):
        raise ZeroVector("primitivity of the zero vector")
    return math.gcd(*(abs(e) for e in v)) == 1
