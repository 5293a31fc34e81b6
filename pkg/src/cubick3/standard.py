"""Named lattices and distinguished vectors of the cubic-fourfold / K3 correspondence.

Frozen basis conventions (all coordinates in this module refer to these):

* ``LambdaTilde`` (rank 24, the extended K3 lattice): the E8(-1)^2 block
  occupies coordinates 0..15, followed by hyperbolic pairs (e1, f1) at
  16..17, (e2, f2) at 18..19, (e3, f3) at 20..21 and (e4, f4) at 22..23.
  The last pair carries the sign-changed pairing (e4.f4) = -1.
* ``Lambda`` (rank 22, the K3 lattice): E, then (e1, f1), (e2, f2), (e3, f3).
* ``Gammabar`` (rank 23, the full cubic lattice, odd): E, then (e1, f1),
  (e2, f2), then an odd negative definite block eps1, eps2, eps3 at 20..22
  with Gram -I3.  The hyperplane-square class is h2 = eps1 + eps2 + eps3,
  of square -3.
* ``Gamma`` (rank 22, the primitive cubic lattice): E, then (e1, f1),
  (e2, f2), then an A2(-1) basis m1, m2 at 20..21.

The classes lambda1 = e4 - f4 and lambda2 = e3 + f3 + f4 span a copy of A2
inside U3 + U4; mu1 = e3 - f3 and mu2 = -e3 - e4 - f4 span the A2(-1)
orthogonal to it, so that Gamma embeds into LambdaTilde as the orthogonal
complement of A2.  Inside Gammabar the same A2(-1) is realized by
mu1 = eps1 - eps2 and mu2 = eps2 - eps3, both orthogonal to h2.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import intlinalg as la
from .errors import (
    InvalidDegree,
    InvalidNLVector,
    NotHyperbolicPair,
    NotSpecialDiscriminant,
    SearchCapExceeded,
    SearchExhausted,
    UnknownLattice,
    ZeroVector,
)
from .lattice import (
    DiscGroup,
    GramLattice,
    IntMatrix,
    Sublattice,
    Vector,
    direct_sum,
    disc_group,
    divisibility,
    is_primitive,
    orthogonal_complement,
    saturate_rows,
    saturation,
    signature,
    span_sublattice,
)

# E8 Cartan matrix: simple roots along a chain 0-1-2-3-4-5-6 with node 7
# attached to node 4 (leg lengths 4, 2, 1 off the branch node).
_E8_ROWS = (
    (2, -1, 0, 0, 0, 0, 0, 0),
    (-1, 2, -1, 0, 0, 0, 0, 0),
    (0, -1, 2, -1, 0, 0, 0, 0),
    (0, 0, -1, 2, -1, 0, 0, 0),
    (0, 0, 0, -1, 2, -1, 0, -1),
    (0, 0, 0, 0, -1, 2, -1, 0),
    (0, 0, 0, 0, 0, -1, 2, 0),
    (0, 0, 0, 0, -1, 0, 0, 2),
)

_U_ROWS = ((0, 1), (1, 0))
_U_MINUS_ROWS = ((0, -1), (-1, 0))
_A2_ROWS = ((2, -1), (-1, 2))


def _vec(rank: int, entries: dict[int, int]) -> Vector:
    v = [0] * rank
    for i, c in entries.items():
        v[i] = c
    return tuple(v)


def unit_vector(rank: int, i: int) -> Vector:
    return _vec(rank, {i: 1})


@lru_cache(maxsize=None)
def _basic(name: str) -> GramLattice:
    if name == "U":
        return GramLattice.from_rows(_U_ROWS, "U")
    if name == "Um":
        return GramLattice.from_rows(_U_MINUS_ROWS, "U(-1)-signed")
    if name == "A2":
        return GramLattice.from_rows(_A2_ROWS, "A2")
    if name == "A2m":
        return GramLattice.from_rows([[-e for e in row] for row in _A2_ROWS], "A2m")
    if name == "E8m":
        return GramLattice.from_rows([[-e for e in row] for row in _E8_ROWS], "E8(-1)")
    if name == "I03":
        return GramLattice.from_rows([[-1, 0, 0], [0, -1, 0], [0, 0, -1]], "I03")
    raise UnknownLattice(name)


@lru_cache(maxsize=None)
def standard_lattice(name: str) -> GramLattice:
    """One of the fixed lattices of the theory, with the documented basis order.

    Recognized names: ``U``, ``E``, ``A2``, ``A2m``, ``I03``, ``Gammabar``,
    ``Gamma``, ``Lambda``, ``LambdaTilde`` and parametrized ``LambdaD(d)``.

    >>> standard_lattice("Gamma").rank, standard_lattice("Gamma").abs_det
    (22, 3)
    >>> standard_lattice("LambdaD(14)").abs_det
    14
    """
    m = re.fullmatch(r"LambdaD\((\d+)\)", name)
    if m:
        return lambda_d_lattice(int(m.group(1)))
    if name in ("U", "A2", "A2m", "I03"):
        return _basic(name)
    e8 = _basic("E8m")
    u = _basic("U")
    if name == "E":
        return direct_sum([e8, e8], label="E")
    E = standard_lattice("E")
    if name == "Gammabar":
        return direct_sum([E, u, u, _basic("I03")], label="Gammabar")
    if name == "Gamma":
        return direct_sum([E, u, u, _basic("A2m")], label="Gamma")
    if name == "Lambda":
        return direct_sum([E, u, u, u], label="Lambda")
    if name == "LambdaTilde":
        return direct_sum([E, u, u, u, _basic("Um")], label="LambdaTilde")
    raise UnknownLattice(name)


def lambda_d_lattice(d: int) -> GramLattice:
    """The degree-d primitive K3 lattice E + U^2 + [-d] in block order E, U, U, [-d]."""
    if d <= 0 or d % 2:
        raise UnknownLattice(f"LambdaD needs even positive d, got {d}")
    E = standard_lattice("E")
    u = _basic("U")
    md = GramLattice.from_rows([[-d]])
    return direct_sum([E, u, u, md], label=f"LambdaD({d})")


# --- distinguished vectors ------------------------------------------------

RANK_TILDE = 24
RANK_BAR = 23
RANK_GAMMA = 22
RANK_LAMBDA = 22

# LambdaTilde index layout
E1, F1, E2, F2, E3, F3, E4, F4 = 16, 17, 18, 19, 20, 21, 22, 23
# Gammabar: eps1..eps3 at 20..22;  Gamma: m1, m2 at 20..21
EPS1, EPS2, EPS3 = 20, 21, 22
M1, M2 = 20, 21

LAMBDA1: Vector = _vec(RANK_TILDE, {E4: 1, F4: -1})
LAMBDA2: Vector = _vec(RANK_TILDE, {E3: 1, F3: 1, F4: 1})
MU1_TILDE: Vector = _vec(RANK_TILDE, {E3: 1, F3: -1})
MU2_TILDE: Vector = _vec(RANK_TILDE, {E3: -1, E4: -1, F4: -1})

H2: Vector = _vec(RANK_BAR, {EPS1: 1, EPS2: 1, EPS3: 1})
MU1_BAR: Vector = _vec(RANK_BAR, {EPS1: 1, EPS2: -1})
MU2_BAR: Vector = _vec(RANK_BAR, {EPS2: 1, EPS3: -1})


def gamma_to_gammabar(v) -> Vector:
    """Isometric embedding of Gamma into Gammabar (identity off the A2(-1) block)."""
    a, b = v[M1], v[M2]
    return tuple(v[:20]) + (a, b - a, -b)


def gamma_to_lambdatilde(v) -> Vector:
    """Isometric embedding of Gamma into LambdaTilde as the complement of A2."""
    a, b = v[M1], v[M2]
    return tuple(v[:20]) + (a - b, -a, -b, -b)


def lambda_to_lambdatilde(v) -> Vector:
    return tuple(v) + (0, 0)


# --- the canonical A2 embedding and its numerical identities ---------------


@dataclass(frozen=True)
class EmbeddingReport:
    """Computed invariants of the fixed A2 embedding into the extended K3 lattice."""

    lambda_gram: IntMatrix
    mu_gram: IntMatrix
    glue_identity_holds: bool
    a2_perp_abs_det: int
    a2_sum_saturation_index: int
    a2_sum_saturation_abs_det: int
    lambda12_square: int
    fano_sublattice_abs_det: int
    l1_perp_abs_det: int

    EXPECTED = {
        "lambda_gram": ((2, -1), (-1, 2)),
        "mu_gram": ((-2, 1), (1, -2)),
        "glue_identity_holds": True,
        "a2_perp_abs_det": 3,
        "a2_sum_saturation_index": 3,
        "a2_sum_saturation_abs_det": 1,
        "lambda12_square": 6,
        "fano_sublattice_abs_det": 18,
        "l1_perp_abs_det": 2,
    }

    def failures(self) -> list[str]:
        out = []
        for key, want in self.EXPECTED.items():
            got = getattr(self, key)
            if isinstance(got, IntMatrix):
                got = got.data
            if got != want:
                out.append(f"{key}: expected {want}, got {got}")
        return out

    def all_identities_hold(self) -> bool:
        return not self.failures()


@lru_cache(maxsize=None)
def canonical_embedding_report() -> EmbeddingReport:
    """Verify the fixed-vector identities of the A2 embedding and report them."""
    lt = standard_lattice("LambdaTilde")
    lam_gram = IntMatrix.from_rows(
        [[lt.pairing(a, b) for b in (LAMBDA1, LAMBDA2)] for a in (LAMBDA1, LAMBDA2)]
    )
    mu_gram = IntMatrix.from_rows(
        [[lt.pairing(a, b) for b in (MU1_TILDE, MU2_TILDE)] for a in (MU1_TILDE, MU2_TILDE)]
    )
    glue_lhs = tuple(3 * e for e in _vec(RANK_TILDE, {E3: 1, F4: 1}))
    glue_rhs = tuple(
        m1 - m2 - l1 + l2
        for m1, m2, l1, l2 in zip(MU1_TILDE, MU2_TILDE, LAMBDA1, LAMBDA2)
    )
    a2perp = orthogonal_complement(lt, [LAMBDA1, LAMBDA2])
    a2_sum_rows = [list(LAMBDA1), list(LAMBDA2)] + a2perp.basis.to_lists()
    sat, index = saturation(span_sublattice(lt, a2_sum_rows))
    lam12 = tuple(a + 2 * b for a, b in zip(LAMBDA1, LAMBDA2))
    fano_rows = a2perp.basis.to_lists() + [list(lam12)]
    fano = span_sublattice(lt, fano_rows)
    l1perp = orthogonal_complement(lt, [LAMBDA1])
    return EmbeddingReport(
        lambda_gram=lam_gram,
        mu_gram=mu_gram,
        glue_identity_holds=glue_lhs == glue_rhs,
        a2_perp_abs_det=a2perp.abs_det,
        a2_sum_saturation_index=index,
        a2_sum_saturation_abs_det=sat.abs_det,
        lambda12_square=lt.square(lam12),
        fano_sublattice_abs_det=fano.abs_det,
        l1_perp_abs_det=l1perp.abs_det,
    )


# --- Noether-Lefschetz vectors ---------------------------------------------


class NLCase(Enum):
    SATURATED = "saturated"
    INDEX_THREE = "index3"


def _check_special(d: int) -> None:
    if d <= 0 or d % 2 or d % 6 not in (0, 2):
        raise NotSpecialDiscriminant(f"d = {d} is not congruent to 0 or 2 mod 6")


def nl_vector(d: int) -> Vector:
    """The explicit primitive vector of discriminant d in the primitive cubic lattice.

    For d = 0 (6) this is e1 - (d/6) f1 of square -d/3; for d = 2 (6) it is
    3(e1 - ((d-2)/6) f1) + m1 - m2 of square -3d.
    """
    _check_special(d)
    if d % 6 == 0:
        return _vec(RANK_GAMMA, {E1: 1, F1: -(d // 6)})
    return _vec(RANK_GAMMA, {E1: 3, F1: -((d - 2) // 2), M1: 1, M2: -1})


def classify_nl_vector(v) -> tuple[NLCase, int]:
    """Saturation dichotomy for a primitive negative vector of the primitive cubic lattice.

    Returns (case, d): the span of h2 and v inside the full cubic lattice is
    either already saturated, with d = -3 (v)^2 = 0 (6), or of index three in
    its saturation, with d = -(v)^2 / 3 = 2 (6).
    """
    gamma = standard_lattice("Gamma")
    v = tuple(int(e) for e in v)
    if len(v) != RANK_GAMMA:
        raise InvalidNLVector("vector must be in Gamma coordinates (rank 22)")
    if not any(v):
        raise InvalidNLVector("zero vector")
    if math.gcd(*(abs(e) for e in v)) != 1:
        raise InvalidNLVector("vector is not primitive")
    sq = gamma.square(v)
    if sq >= 0:
        raise InvalidNLVector(f"square must be negative, got {sq}")
    gbar = standard_lattice("Gammabar")
    vbar = gamma_to_gammabar(v)
    _, index = saturation(span_sublattice(gbar, [H2, vbar]))
    if index == 1:
        d = -3 * sq
        assert d % 6 == 0
        return NLCase.SATURATED, d
    if index == 3:
        assert sq % 3 == 0
        d = -sq // 3
        assert d % 6 == 2
        return NLCase.INDEX_THREE, d
    raise AssertionError(f"impossible saturation index {index}")


class EichlerInvariant(NamedTuple):
    """Complete invariant of a primitive vector up to the stable orthogonal group."""

    square: int
    div: int
    disc_class: int  # 0 or +-1 in Z/3, up to a global sign choice

    def same_up_to_sign(self, other: "EichlerInvariant") -> bool:
        return (self.square, self.div) == (other.square, other.div) and (
            self.disc_class == other.disc_class or self.disc_class == -other.disc_class
        )


@lru_cache(maxsize=None)
def _gamma_disc_generator() -> tuple[Fraction, ...]:
    gens = disc_group(standard_lattice("Gamma")).generators
    assert len(gens) == 1
    return gens[0]


def eichler_invariants(v) -> EichlerInvariant:
    """Square, divisibility, and discriminant class of a primitive vector of Gamma."""
    gamma = standard_lattice("Gamma")
    v = tuple(int(e) for e in v)
    if len(v) != RANK_GAMMA:
        raise InvalidNLVector("vector must be in Gamma coordinates (rank 22)")
    if not any(v):
        raise ZeroVector("zero vector has no invariants")
    if math.gcd(*(abs(e) for e in v)) != 1:
        raise InvalidNLVector("vector is not primitive")
    sq = gamma.square(v)
    n = divisibility(gamma, v)
    if n == 1:
        cls = 0
    else:
        gen = _gamma_disc_generator()
        c = [Fraction(e, n) for e in v]
        cls = None
        for k in (0, 1, 2):
            if all((ci - k * gi).denominator == 1 for ci, gi in zip(c, gen)):
                cls = (0, 1, -1)[k]
                break
        if cls is None:
            raise AssertionError("class of v/n not found in Z/3")
    return EichlerInvariant(sq, n, cls)


# --- the associated rank-2/rank-3 lattices and their complements ------------


@dataclass(frozen=True)
class NLVectorReport:
    """Lattice data attached to the discriminant-d Noether-Lefschetz vector."""

    d: int
    case: NLCase
    v: Vector
    v_square: int
    gram_K: IntMatrix
    gram_L: IntMatrix
    gram_Gamma_d: IntMatrix
    disc_K: DiscGroup
    disc_Gamma_d: DiscGroup

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "case": self.case.value,
            "v": list(self.v),
            "gramK": self.gram_K.to_json(),
            "gramL": self.gram_L.to_json(),
            "gramGammaD": self.gram_Gamma_d.to_json(),
            "discK": list(self.disc_K.invariant_factors),
            "discGammaD": list(self.disc_Gamma_d.invariant_factors),
        }


def _expected_K_gram(d: int) -> list[list[int]]:
    if d % 6 == 0:
        return [[-3, 0], [0, -(d // 3)]]
    return [[-3, 1], [1, -((d + 1) // 3)]]


def _blockdiag(*blocks: list[list[int]]) -> list[list[int]]:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, e in enumerate(row):
                out[off + i][off + j] = e
        off += len(b)
    return out


def _same_lattice(sub: Sublattice, rows: list[list[int]]) -> bool:
    # equal covolume plus containment of a spanning set forces equality
    if any(not sub.contains(r) for r in rows):
        return False
    G = sub.ambient.gram.to_lists()
    return abs(la.det_bareiss(la.gram_product(rows, G))) == sub.abs_det


@lru_cache(maxsize=None)
def hassett_triple(d: int) -> NLVectorReport:
    """K_d, L_d and the complement Gamma_d for a special discriminant d.

    K_d is the saturation of span(h2, v_d) in the full cubic lattice, L_d the
    saturation of span(lambda1, lambda2, v_d) in the extended K3 lattice, and
    Gamma_d the orthogonal complement of v_d in the primitive cubic lattice.
    The reported Gram matrices use the canonical bases, which are verified to
    span the computed saturations.
    """
    _check_special(d)
    v = nl_vector(d)
    gamma = standard_lattice("Gamma")
    gbar = standard_lattice("Gammabar")
    ltil = standard_lattice("LambdaTilde")
    vbar = gamma_to_gammabar(v)
    vtil = gamma_to_lambdatilde(v)
    v_square = gamma.square(v)

    satK, idxK = saturation(span_sublattice(gbar, [H2, vbar]))
    satL, idxL = saturation(span_sublattice(ltil, [LAMBDA1, LAMBDA2, vtil]))
    comp = orthogonal_complement(gamma, [v])

    if d % 6 == 0:
        case = NLCase.SATURATED
        if (idxK, idxL) != (1, 1):
            raise AssertionError(f"d={d}: expected saturated spans, indices {idxK},{idxL}")
        rows_K: list[list[int]] = [list(H2), list(vbar)]
        rows_L = [list(LAMBDA1), list(LAMBDA2), list(vtil)]
        gram_L = _blockdiag([list(r) for r in _A2_ROWS], [[-(d // 3)]])
        c = d // 6
        rows_G = (
            [list(unit_vector(RANK_GAMMA, i)) for i in range(16)]
            + [list(unit_vector(RANK_GAMMA, i)) for i in (E2, F2, M1, M2)]
            + [list(_vec(RANK_GAMMA, {E1: 1, F1: c}))]
        )
        gram_G = _blockdiag(
            standard_lattice("E").gram.to_lists(),
            [list(r) for r in _U_ROWS],
            [[-e for e in row] for row in _A2_ROWS],
            [[d // 3]],
        )
    else:
        case = NLCase.INDEX_THREE
        if (idxK, idxL) != (3, 3):
            raise AssertionError(f"d={d}: expected index-three spans, indices {idxK},{idxL}")
        c = (d - 2) // 6
        x = _vec(RANK_BAR, {E1: 1, F1: -c, EPS2: -1})  # (v_d - h2)/3
        rows_K = [list(H2), list(x)]
        y3 = _vec(RANK_TILDE, {E1: 1, F1: -c, F3: -1})
        rows_L = [list(LAMBDA1), list(LAMBDA2), list(y3)]
        gram_L = [[2, -1, 0], [-1, 2, -1], [0, -1, -((d - 2) // 3)]]
        w1 = _vec(RANK_GAMMA, {M1: 1, F1: 1})
        w2 = _vec(RANK_GAMMA, {M2: 1, F1: -1})
        w3 = _vec(RANK_GAMMA, {E1: 1, F1: c + 1, M2: -1})
        rows_G = (
            [list(unit_vector(RANK_GAMMA, i)) for i in range(16)]
            + [list(unit_vector(RANK_GAMMA, i)) for i in (E2, F2)]
            + [list(w1), list(w2), list(w3)]
        )
        gram_G = _blockdiag(
            standard_lattice("E").gram.to_lists(),
            [list(r) for r in _U_ROWS],
            [[-2, 1, 0], [1, -2, 1], [0, 1, (d - 2) // 3]],
        )

    gram_K = _expected_K_gram(d)
    for sub, rows, want in ((satK, rows_K, gram_K), (satL, rows_L, gram_L), (comp, rows_G, gram_G)):
        if not _same_lattice(sub, rows):
            raise AssertionError(f"d={d}: canonical basis does not span the computed lattice")
        got = la.gram_product(rows, sub.ambient.gram.to_lists())
        if got != want:
            raise AssertionError(f"d={d}: canonical Gram mismatch: {got} != {want}")
    # independent route: the computed saturation basis must carry an integrally
    # equivalent binary form
    if not binary_grams_equivalent(satK.induced_gram.to_lists(), gram_K):
        raise AssertionError(f"d={d}: K gram not equivalent to the canonical matrix")
    if abs(la.det_bareiss(gram_K)) != d or abs(la.det_bareiss(gram_L)) != d:
        raise AssertionError(f"d={d}: discriminant mismatch")

    K_lat = GramLattice.from_rows(gram_K, f"K_{d}")
    G_lat = GramLattice.from_rows(gram_G, f"Gamma_{d}")
    return NLVectorReport(
        d=d,
        case=case,
        v=v,
        v_square=v_square,
        gram_K=IntMatrix.from_rows(gram_K),
        gram_L=IntMatrix.from_rows(gram_L),
        gram_Gamma_d=IntMatrix.from_rows(gram_G),
        disc_K=disc_group(K_lat),
        disc_Gamma_d=disc_group(G_lat),
    )


# --- binary form reduction (rank-2 integral equivalence) --------------------


def _reduced_posdef2(a: int, b: int, c: int) -> tuple[int, int, int]:
    # Lagrange-Gauss reduction to the unique GL2(Z)-reduced representative
    # with 0 <= 2b <= a <= c.
    while True:
        if a > c:
            a, c = c, a
        k = (2 * b + a) // (2 * a)  # nearest integer to b/a, ties downward
        if k:
            c = c - 2 * k * b + k * k * a
            b = b - k * a
        if a <= c:
            break
    return a, abs(b), c


def binary_grams_equivalent(G1, G2) -> bool:
    """Integral equivalence of two definite symmetric 2x2 Gram matrices."""
    def reduce(G):
        a, b, c = G[0][0], G[0][1], G[1][1]
        if G[1][0] != b:
            raise ValueError("Gram matrix must be symmetric")
        det = a * c - b * b
        if det <= 0:
            raise ValueError("form must be definite")
        if a < 0:
            a, b, c = -a, -b, -c
            sign = -1
        else:
            sign = 1
        return sign, _reduced_posdef2(a, b, c)

    return reduce(G1) == reduce(G2)


# --- the index one/two dichotomy for the stabilizer groups ------------------


@dataclass(frozen=True)
class KdooWitness:
    """Witness for the index of the pointwise stabilizer inside the full one.

    For d = 0 (6) the witness is an involution of the full cubic lattice
    fixing h2 and negating v_d; for d = 2 (6) it is the membership pair
    ((v_d - h2)/3 in K_d, (-v_d - h2)/3 not in K_d).
    """

    index: int
    involution: IntMatrix | None
    member: tuple[Fraction, ...] | None
    non_member: tuple[Fraction, ...] | None


def kdoo_index(d: int) -> tuple[int, KdooWitness]:
    _check_special(d)
    gbar = standard_lattice("Gammabar")
    v = nl_vector(d)
    vbar = gamma_to_gammabar(v)
    if d % 6 == 0:
        rows = la.identity(RANK_BAR)
        rows[E1][E1] = -1
        rows[F1][F1] = -1
        G = gbar.gram.to_lists()
        if la.gram_product(rows, G) != G:
            raise AssertionError("involution does not preserve the Gram matrix")
        if la.mat_vec(rows, H2) != list(H2):
            raise AssertionError("involution does not fix h2")
        if la.mat_vec(rows, vbar) != [-e for e in vbar]:
            raise AssertionError("involution does not negate v_d")
        return 2, KdooWitness(2, IntMatrix.from_rows(rows), None, None)
    satK, _ = saturation(span_sublattice(gbar, [H2, vbar]))
    member = tuple(Fraction(a - b, 3) for a, b in zip(vbar, H2))
    non_member = tuple(Fraction(-a - b, 3) for a, b in zip(vbar, H2))
    if not satK.contains(member):
        raise AssertionError("(v_d - h2)/3 should lie in K_d")
    if satK.contains(non_member):
        raise AssertionError("(-v_d - h2)/3 should not lie in K_d")
    return 1, KdooWitness(1, None, member, non_member)


# --- boundary divisors of the degree-d K3 moduli space ----------------------


def polarization_vector(d: int) -> Vector:
    """The degree-d polarization class e2 + (d/2) f2 of the K3 lattice."""
    if d <= 0 or d % 2:
        raise InvalidDegree(f"degree must be even positive, got {d}")
    return _vec(RANK_LAMBDA, {E2: 1, F2: d // 2})


def boundary_witnesses(d: int) -> tuple[Vector, Vector | None]:
    """Explicit (-2)-classes spanning the boundary components, one per orbit.

    delta0 = e1 - f1 always; delta1 = 2 e1 + ((d/2-1)/2) f1 + e2 - (d/2) f2
    exactly when d/2 = 1 (mod 4).  Each returned class has square -2, pairs
    to zero with the polarization, and is primitive.
    """
    if d < 2 or d % 2:
        raise InvalidDegree(f"degree must be even and at least 2, got {d}")
    lam = standard_lattice("Lambda")
    ell = polarization_vector(d)
    delta0 = _vec(RANK_LAMBDA, {E1: 1, F1: -1})
    deltas: list[Vector] = [delta0]
    half = d // 2
    delta1: Vector | None = None
    if half % 4 == 1:
        delta1 = _vec(RANK_LAMBDA, {E1: 2, F1: (half - 1) // 2, E2: 1, F2: -half})
        deltas.append(delta1)
    for delta in deltas:
        if lam.square(delta) != -2 or lam.pairing(delta, ell) != 0 or not is_primitive(lam, delta):
            raise AssertionError(f"boundary witness failed its defining checks: {delta}")
    return delta0, delta1


# --- discriminant quadratic forms and the genus comparison ------------------


@dataclass(frozen=True)
class DiscForm:
    """Finite quadratic form on a discriminant group, in invariant-factor coordinates."""

    orders: tuple[int, ...]
    pair_table: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def of(L: GramLattice) -> "DiscForm":
        if not L.is_even:
            raise ValueError("discriminant forms are defined for even lattices")
        dg = disc_group(L)
        G = L.gram.to_lists()
        gens = [list(g) for g in dg.generators]
        table = tuple(
            tuple(la.pairing(G, gi, gj) for gj in gens) for gi in gens
        )
        return DiscForm(dg.invariant_factors, table)

    @property
    def order(self) -> int:
        return math.prod(self.orders)

    def elements(self):
        return itertools.product(*(range(o) for o in self.orders))

    def element_order(self, el) -> int:
        out = 1
        for a, o in zip(el, self.orders):
            out = math.lcm(out, o // math.gcd(a, o))
        return out

    def q(self, el) -> Fraction:
        total = Fraction(0)
        k = len(self.orders)
        for i in range(k):
            total += el[i] * el[i] * self.pair_table[i][i]
            for j in range(i + 1, k):
                total += 2 * el[i] * el[j] * self.pair_table[i][j]
        return total % 2

    def b(self, e1, e2) -> Fraction:
        total = Fraction(0)
        k = len(self.orders)
        for i in range(k):
            for j in range(k):
                total += e1[i] * e2[j] * self.pair_table[i][j]
        return total % 1


def disc_forms_isomorphic(F1: DiscForm, F2: DiscForm, cap: int = 10_000) -> bool:
    """Brute-force search for a quadratic-form isomorphism of two finite forms."""
    if F1.orders != F2.orders:
        return False
    n = F1.order
    if n > cap:
        raise SearchCapExceeded(f"group order {n} exceeds cap {cap}")
    if n == 1:
        return True
    k = len(F1.orders)
    gens1 = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    q1 = [F1.q(g) for g in gens1]
    b1 = [[F1.b(gi, gj) for gj in gens1] for gi in gens1]
    all2 = list(F2.elements())
    candidates = [
        [el for el in all2 if F2.element_order(el) == F1.orders[i] and F2.q(el) == q1[i]]
        for i in range(k)
    ]

    def images_generate(images) -> bool:
        seen = {tuple(0 for _ in range(k))}
        frontier = list(seen)
        while frontier:
            nxt = []
            for el in frontier:
                for img in images:
                    new = tuple((a + b) % o for a, b, o in zip(el, img, F2.orders))
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
            frontier = nxt
        return len(seen) == n

    def extend(i, chosen):
        if i == k:
            return images_generate(chosen)
        for el in candidates[i]:
            if all(F2.b(el, prev) == b1[i][j] for j, prev in enumerate(chosen)):
                if extend(i + 1, chosen + [el]):
                    return True
        return False

    return extend(0, [])


def genus_compare(d: int, cap: int = 10_000) -> bool:
    """Whether Gamma_d and Lambda_d share rank, signature, and discriminant form."""
    _check_special(d)
    report = hassett_triple(d)
    Gd = GramLattice(report.gram_Gamma_d, f"Gamma_{d}")
    Ld = lambda_d_lattice(d)
    if Gd.rank != Ld.rank:
        return False
    if signature(Gd) != signature(Ld):
        return False
    return disc_forms_isomorphic(DiscForm.of(Gd), DiscForm.of(Ld), cap)


# --- hyperbolic planes inside saturations ------------------------------------


def find_hyperbolic_AT(e, f, bound: int = 4) -> tuple[Vector, Vector]:
    """Search the saturation of A2 + span(e, f) for a hyperbolic pair meeting A2.

    Given an isometrically embedded hyperbolic pair (e, f) in the extended K3
    lattice, enumerates vectors of the saturation with coordinates bounded by
    `bound` and returns the lexicographically least pair (e', f') with
    (e')^2 = (f')^2 = 0, (e'.f') = 1 and rank(A2 + span(e', f')) = 3.
    """
    lt = standard_lattice("LambdaTilde")
    e = tuple(int(x) for x in e)
    f = tuple(int(x) for x in f)
    if len(e) != RANK_TILDE or len(f) != RANK_TILDE:
        raise NotHyperbolicPair("vectors must be in LambdaTilde coordinates")
    # (e.f) = -1 spans the same plane after f -> -f (relevant for the pair
    # (e4, f4), whose pairing carries the changed sign)
    if lt.square(e) != 0 or lt.square(f) != 0 or abs(lt.pairing(e, f)) != 1:
        raise NotHyperbolicPair("need (e)^2 = (f)^2 = 0 and (e.f) = +-1")
    if lt.pairing(e, f) == -1:
        f = tuple(-x for x in f)
    T = saturate_rows(lt, [LAMBDA1, LAMBDA2, e, f])
    k = T.rank
    TG = T.induced_gram.to_lists()
    basis = T.basis.to_lists()
    rng = range(-bound, bound + 1)
    isotropic: list[tuple[tuple[int, ...], list[int], list[int]]] = []
    for coords in itertools.product(rng, repeat=k):
        if not any(coords):
            continue
        Gc = la.mat_vec(TG, coords)
        if la.dot(coords, Gc) == 0:
            ambient = la.mat_vec(la.transpose(basis), coords)
            isotropic.append((coords, Gc, ambient))
    for _, Ge, amb_e in isotropic:
        for cf, _, amb_f in isotropic:
            if la.dot(cf, Ge) != 1:
                continue
            if la.rank_int([list(LAMBDA1), list(LAMBDA2), amb_e, amb_f]) != 3:
                continue
            return tuple(amb_e), tuple(amb_f)
    raise SearchExhausted(f"no hyperbolic pair with coordinates bounded by {bound}")
