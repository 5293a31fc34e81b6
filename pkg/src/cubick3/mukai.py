"""Exact characteristic-class calculus on the algebraic cohomology of a cubic fourfold.

Classes live in Q[h]/(h^5), written on the basis 1, h, h^2, h^3, h^4.  The
integral of a top-degree class is 3 times its h^4 coefficient since the
fourfold has degree 3.  The Mukai pairing

    (a . b) = -integral( exp(3h/2) * a^* * b )

is intentionally not symmetric; a^* negates the h and h^3 parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from . import intlinalg as la
from .lattice import IntMatrix

_DEG = 5


def _frac5(vals) -> tuple[Fraction, ...]:
    out = tuple(Fraction(v) for v in vals)
    if len(out) != _DEG:
        raise ValueError("a cohomology class has five coefficients")
    return out


@dataclass(frozen=True)
class CohClass:
    """A class a0 + a1 h + a2 h^2 + a3 h^3 + a4 h^4 with exact rational coefficients."""

    coeffs: tuple[Fraction, Fraction, Fraction, Fraction, Fraction]

    @staticmethod
    def of(*vals) -> "CohClass":
        return CohClass(_frac5(vals))

    @staticmethod
    def zero() -> "CohClass":
        return CohClass.of(0, 0, 0, 0, 0)

    def __add__(self, other: "CohClass") -> "CohClass":
        return CohClass(_frac5(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CohClass") -> "CohClass":
        return CohClass(_frac5(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CohClass":
        return CohClass(_frac5(-a for a in self.coeffs))

    def scale(self, c) -> "CohClass":
        c = Fraction(c)
        return CohClass(_frac5(c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, CohClass):
            out = [Fraction(0)] * _DEG
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if i + j < _DEG and b:
                        out[i + j] += a * b
            return CohClass(_frac5(out))
        return self.scale(other)

    __rmul__ = __mul__

    def dual(self) -> "CohClass":
        """The involution negating the degree-2 and degree-6 parts (h and h^3 here)."""
        a0, a1, a2, a3, a4 = self.coeffs
        return CohClass((a0, -a1, a2, -a3, a4))

    def integral(self) -> Fraction:
        return 3 * self.coeffs[4]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coeffs) + ")"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


def exp_h(k) -> CohClass:
    """exp(k h) truncated at degree 4, with exact factorial denominators."""
    k = Fraction(k)
    term = Fraction(1)
    out = []
    for i in range(_DEG):
        out.append(term)
        term = term * k / (i + 1)
    return CohClass(_frac5(out))


def series_inverse(c: CohClass) -> CohClass:
    if not c.coeffs[0]:
        raise ValueError("inverse needs a unit constant term")
    out = [1 / c.coeffs[0]] + [Fraction(0)] * (_DEG - 1)
    for n in range(1, _DEG):
        s = sum(c.coeffs[k] * out[n - k] for k in range(1, n + 1))
        out[n] = -s / c.coeffs[0]
    return CohClass(_frac5(out))


def series_sqrt(c: CohClass) -> CohClass:
    """Square root with constant term 1 by Newton iteration on s -> (s + c/s)/2."""
    if c.coeffs[0] != 1:
        raise ValueError("square root needs constant term 1")
    s = CohClass.of(1, 0, 0, 0, 0)
    for _ in range(4):
        s = (s + c * series_inverse(s)).scale(Fraction(1, 2))
    if not (s * s - c).is_zero():
        raise AssertionError("Newton iteration did not converge")
    return s


class CharClasses(NamedTuple):
    chern: CohClass
    todd: CohClass
    sqrt_todd: CohClass


@lru_cache(maxsize=None)
def characteristic_classes() -> CharClasses:
    """Total Chern class, Todd class, and its square root for a smooth cubic fourfold.

    The total Chern class is the degree-4 truncation of (1+h)^6 / (1+3h); the
    Todd class comes from the universal Todd polynomial in c1..c4.
    """
    one_plus_h = CohClass.of(1, 1, 0, 0, 0)
    sixth = CohClass.of(1, 0, 0, 0, 0)
    for _ in range(6):
        sixth = sixth * one_plus_h
    chern = sixth * series_inverse(CohClass.of(1, 3, 0, 0, 0))
    c1, c2, c3, c4 = chern.coeffs[1], chern.coeffs[2], chern.coeffs[3], chern.coeffs[4]
    todd = CohClass.of(
        1,
        c1 / 2,
        (c1 * c1 + c2) / 12,
        c1 * c2 / 24,
        (-(c1**4) + 4 * c1 * c1 * c2 + c1 * c3 + 3 * c2 * c2 - c4) / 720,
    )
    return CharClasses(chern, todd, series_sqrt(todd))


def mukai_vector_line(k: int) -> CohClass:
    """Mukai vector of the k-th twist of the trivial line bundle: exp(kh) * sqrt(td).

    >>> print(mukai_vector_line(1))
    (1, 7/4, 51/32, 385/384, 2921/6144)
    """
    return exp_h(k) * characteristic_classes().sqrt_todd


@lru_cache(maxsize=None)
def u_classes() -> tuple[CohClass, CohClass]:
    """Mukai vectors of the twisted structure sheaves of a line, taken as given data.

    They are validated against the Euler-characteristic pairing identities
    rather than rederived.
    """
    u1 = CohClass.of(0, 0, 0, Fraction(1, 3), Fraction(5, 12))
    u2 = CohClass.of(0, 0, 0, Fraction(1, 3), Fraction(9, 12))
    return u1, u2


@lru_cache(maxsize=None)
def _exp_3h2() -> CohClass:
    return exp_h(Fraction(3, 2))


def mukai_pairing(a: CohClass, b: CohClass) -> Fraction:
    """-integral(exp(3h/2) * a^* * b); not symmetric."""
    return -(_exp_3h2() * a.dual() * b).integral()


def euler_line(k: int) -> int:
    """Euler characteristic of the k-th twisted line bundle: C(k+5,5) - C(k+2,5).

    >>> [euler_line(k) for k in (-3, 0, 1, 2)]
    [1, 1, 6, 21]
    """
    def binom5(m: int) -> int:
        return m * (m - 1) * (m - 2) * (m - 3) * (m - 4) // 120

    return binom5(k + 5) - binom5(k + 2)


def _w(i: int) -> CohClass:
    return mukai_vector_line(i)


def project_right(a: CohClass) -> CohClass:
    """Projection onto the right orthogonal complement of the three line-bundle vectors.

    Returns the unique p(a) = a - c0 w0 - c1 w1 - c2 w2 with (w_i . p(a)) = 0;
    solvable because the pairing on the span of the w_i is upper triangular
    with units on the diagonal.
    """
    ws = [_w(0), _w(1), _w(2)]
    M = [[mukai_pairing(wi, wj) for wj in ws] for wi in ws]
    rhs = [mukai_pairing(wi, a) for wi in ws]
    c = la.solve_rational(M, rhs)
    assert c is not None
    out = a
    for ci, wi in zip(c, ws):
        out = out - wi.scale(ci)
    return out


@lru_cache(maxsize=None)
def lambda_vectors() -> tuple[CohClass, CohClass]:
    """The images of the A2 basis under the right orthogonal projection."""
    u1, u2 = u_classes()
    return project_right(u1), project_right(u2)


def a2_mukai_gram() -> IntMatrix:
    """Gram of the projected A2 basis under the Mukai pairing.

    The pairing is already the sign-reversed Euler form, so it restricts to
    the standard positive A2 form on the projected vectors with no further
    negation.  Also asserts the six right-orthogonality pairings vanish and
    that the pairing is symmetric on the pair, so the result is a genuine
    Gram matrix.
    """
    vl1, vl2 = lambda_vectors()
    ws = [_w(0), _w(1), _w(2)]
    for wi in ws:
        for v in (vl1, vl2):
            if mukai_pairing(wi, v) != 0:
                raise AssertionError("projected vector is not right orthogonal")
    if mukai_pairing(vl1, vl2) != mukai_pairing(vl2, vl1):
        raise AssertionError("pairing is not symmetric on the right complement")
    rows = [
        [mukai_pairing(a, b) for b in (vl1, vl2)] for a in (vl1, vl2)
    ]
    if any(x.denominator != 1 for row in rows for x in row):
        raise AssertionError("A2 Gram is not integral")
    return IntMatrix.from_rows([[int(x) for x in row] for row in rows])


@dataclass(frozen=True)
class MukaiSet:
    """The seven distinguished Mukai vectors of a cubic fourfold."""

    w0: CohClass
    w1: CohClass
    w2: CohClass
    u1: CohClass
    u2: CohClass
    vl1: CohClass
    vl2: CohClass

    def to_json(self) -> dict:
        return {
            "w0": self.w0.to_json(),
            "w1": self.w1.to_json(),
            "w2": self.w2.to_json(),
            "u1": self.u1.to_json(),
            "u2": self.u2.to_json(),
            "vLambda1": self.vl1.to_json(),
            "vLambda2": self.vl2.to_json(),
        }


@lru_cache(maxsize=None)
def mukai_set() -> MukaiSet:
    u1, u2 = u_classes()
    vl1, vl2 = lambda_vectors()
    ms = MukaiSet(_w(0), _w(1), _w(2), u1, u2, vl1, vl2)
    # defining identities of the projected vectors
    if vl1 != u1 - ms.w1 + ms.w0.scale(4):
        raise AssertionError("vl1 != u1 - w1 + 4 w0")
    if vl2 != u2 - ms.w2 + ms.w1.scale(4) - ms.w0.scale(6):
        raise AssertionError("vl2 != u2 - w2 + 4 w1 - 6 w0")
    return ms
