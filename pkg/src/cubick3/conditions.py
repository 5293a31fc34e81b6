"""Number-theoretic classifiers for the special-discriminant conditions.

A positive even d is classified by the chain

    (***)  =>  (**)  =>  (**')  =>  (*)

where (*) is the residue test d = 0, 2 (mod 6), (**') asks for a vector of
square d in A2, (**) for a primitive one, and (***) for the square
presentation d = (2n^2+2n+2)/a^2.  The A2 tests run on the prime
factorization of d/2; the witness solvers are independent cross-checks.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from . import pell
from .errors import InvalidDegree, InvalidParity

CLI_INPUT_CAP = 2**63


def _factorize(n: int) -> dict[int, int]:
    if n >= CLI_INPUT_CAP:
        warnings.warn(
            "trial-division factorization beyond 64 bits may be very slow",
            RuntimeWarning,
            stacklevel=3,
        )
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def a2_represents(d: int, primitive: bool = False) -> bool:
    """Whether A2 represents d (by a primitive vector when `primitive`).

    d is represented iff every prime p = 2 (mod 3) divides d/2 to an even
    power; primitively iff no such prime divides d/2 at all and 3 divides it
    at most once.

    >>> a2_represents(18), a2_represents(18, primitive=True)
    (True, False)
    >>> a2_represents(30)
    False
    """
    if d <= 0 or d % 2:
        raise InvalidParity(f"d must be even positive, got {d}")
    for p, n in _factorize(d // 2).items():
        if p % 3 == 2:
            if primitive or n % 2:
                return False
        elif p == 3 and primitive and n > 1:
            return False
    return True


def a2_bruteforce(d: int) -> list[tuple[int, int, bool]]:
    """All (x, y) with 2x^2 - 2xy + 2y^2 = d, each tagged primitive or not.

    Exhaustive: the form dominates x^2 and y^2, so |x|, |y| <= ceil(sqrt(d)).
    """
    if d <= 0 or d % 2:
        raise InvalidParity(f"d must be even positive, got {d}")
    bound = math.isqrt(d) + 1
    out = []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if 2 * (x * x - x * y + y * y) == d:
                out.append((x, y, math.gcd(x, y) == 1))
    return out


def witness_ss(d: int) -> tuple[int, int] | None:
    """Least (n, a) with a*d = 2n^2 + 2n + 2, or None.

    The divisibility d | 2(n^2+n+1) is periodic in n with period dividing d,
    so an empty scan of n in [0, 2d] proves there is no witness.
    """
    if d <= 0 or d % 2:
        raise InvalidParity(f"d must be even positive, got {d}")
    for n in range(0, 2 * d + 1):
        t = 2 * (n * n + n + 1)
        if t % d == 0:
            return n, t // d
    return None


def witness_sss(d: int) -> tuple[int, int] | None:
    """Least (n, a) with a^2*d = 2n^2 + 2n + 2, or None (a proof, not a cutoff).

    Equivalent to the Pell-type equation x^2 - 2d y^2 = -3 with x = 2n+1
    (x is odd automatically), solved exactly by continued fractions.

    >>> witness_sss(14)
    (2, 1)
    >>> witness_sss(38)
    (30, 7)
    >>> witness_sss(74) is None
    True
    """
    if d <= 0 or d % 2:
        raise InvalidParity(f"d must be even positive, got {d}")
    sol = pell.solve_minus3(2 * d).solution
    if sol is None:
        return None
    x, y = sol
    assert x % 2 == 1
    n, a = (x - 1) // 2, y
    assert a * a * d == 2 * n * n + 2 * n + 2
    return n, a


@dataclass(frozen=True)
class ConditionFlags:
    """Classification of one even discriminant, with witnesses where they exist."""

    d: int
    star: bool
    starstar_prime: bool
    starstar: bool
    starstarstar: bool
    case_mod6: int | None  # 0, 2, or None when d is not special
    ss_witness: tuple[int, int] | None
    sss_witness: tuple[int, int] | None

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "star": self.star,
            "ss_prime": self.starstar_prime,
            "ss": self.starstar,
            "sss": self.starstarstar,
            "case_mod6": self.case_mod6,
            "ss_witness": list(self.ss_witness) if self.ss_witness else None,
            "sss_witness": list(self.sss_witness) if self.sss_witness else None,
        }


def condition_flags(d: int) -> ConditionFlags:
    """Evaluate the four conditions for an even positive d."""
    if d <= 0 or d % 2:
        raise InvalidParity(f"d must be even positive, got {d}")
    star = d % 6 in (0, 2)
    ssp = a2_represents(d, primitive=False)
    ss = a2_represents(d, primitive=True)
    w_sss = witness_sss(d)
    sss = w_sss is not None
    flags = ConditionFlags(
        d=d,
        star=star,
        starstar_prime=ssp,
        starstar=ss,
        starstarstar=sss,
        case_mod6=d % 6 if star else None,
        ss_witness=witness_ss(d) if ss else None,
        sss_witness=w_sss,
    )
    if (sss and not ss) or (ss and not ssp) or (ssp and not star):
        raise AssertionError(f"implication chain violated at d={d}: {flags}")
    return flags


def boundary_count(d: int) -> int:
    """Number of boundary components of the degree-d moduli space: 2 iff d/2 = 1 (4).

    >>> boundary_count(10), boundary_count(8)
    (2, 1)
    """
    if d < 2 or d % 2:
        raise InvalidParity(f"d must be even and at least 2, got {d}")
    return 2 if (d // 2) % 4 == 1 else 1


@dataclass(frozen=True)
class PellSolution:
    """Outcome of one exactly-solved Pell-type equation."""

    equation: str
    solution: tuple[int, int] | None
    bound_searched: int

    def to_json(self) -> dict:
        return {
            "equation": self.equation,
            "solution": list(self.solution) if self.solution else None,
            "bound_searched": self.bound_searched,
        }


def pell_brakkee(d: int) -> PellSolution:
    """Decide 3p^2 - (d/6) q^2 = -1 exactly; least positive (p, q) when solvable.

    Multiplying by 3 turns the equation into x^2 - (d/2) y^2 = -3 with
    x = 3p, and 3 | x is automatic since 3 | d/2.

    >>> pell_brakkee(42).solution
    (3, 2)
    >>> pell_brakkee(12).solution is None
    True
    """
    if d <= 0 or d % 6:
        raise InvalidDegree(f"d must be a positive multiple of 6, got {d}")
    tag = f"3p^2-{d // 6}q^2=-1"
    res = pell.solve_minus3(d // 2)
    if res.solution is None:
        return PellSolution(tag, None, res.bound_searched)
    x, q = res.solution
    assert x % 3 == 0
    p = x // 3
    assert 3 * p * p - (d // 6) * q * q == -1
    return PellSolution(tag, (p, q), res.bound_searched)


def table(max_d: int, start: int = 8) -> list[ConditionFlags]:
    """Condition flags for every special discriminant in [start, max_d], ascending."""
    if max_d < 8 or max_d % 2:
        raise InvalidDegree(f"max_d must be even and at least 8, got {max_d}")
    if start < 2 or start % 2:
        raise InvalidDegree(f"start must be even and at least 2, got {start}")
    return [
        condition_flags(d)
        for d in range(start, max_d + 1, 2)
        if d % 6 in (0, 2)
    ]


CSV_COLUMNS = (
    "d",
    "star",
    "ss_prime",
    "ss",
    "sss",
    "case_mod6",
    "ss_witness_n",
    "ss_witness_a",
    "sss_witness_n",
    "sss_witness_a",
    "boundary_components",
    "pell_3p2",
)


def csv_row(flags: ConditionFlags) -> list[str]:
    """One table row in the documented CSV schema (values T/F, integers, or empty)."""
    def tf(b: bool) -> str:
        return "T" if b else "F"

    d = flags.d
    ss_n, ss_a = flags.ss_witness if flags.ss_witness else ("", "")
    sss_n, sss_a = flags.sss_witness if flags.sss_witness else ("", "")
    pell_cell = ""
    if d % 6 == 0:
        pell_cell = tf(pell_brakkee(d).solution is not None)
    return [
        str(d),
        tf(flags.star),
        tf(flags.starstar_prime),
        tf(flags.starstar),
        tf(flags.starstarstar),
        "" if flags.case_mod6 is None else str(flags.case_mod6),
        str(ss_n),
        str(ss_a),
        str(sss_n),
        str(sss_a),
        str(boundary_count(d)),
        pell_cell,
    ]
