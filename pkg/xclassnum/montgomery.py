"""
Point counts of Montgomery curves `By² = x³ + Ax² + x` over `F_p`, and the census of how many
non-singular `(A, B)` pairs realize each trace of Frobenius.

For fixed `A` write `S_A = Σ_x χ(x³ + Ax² + x)`. Then every curve with that `A` has
`p + 1 + χ(B)·S_A` points, so half the `B` values give trace `-S_A` and the other half
(the quadratic twists) give `+S_A`. `trace_census` uses that to do one `O(p)` character sum
per `A`; `point_count_exhaustive` and `census_from_curves` count points directly and are
kept as oracles.

The census agrees with `predicted_census_count`, ie: `3(p-1)·H_w((t² - 4p)/4)` when
`4 | p + 1 - t` and `t² < 4p`, zero otherwise.
"""
from __future__ import annotations

import dataclasses
from collections import Counter
from logging import getLogger
from typing import Dict, List, Optional, Sequence

from xsentinels.default import Default, DefaultType

from .errors import ContractError, IdentityInvariantError, SingularCurveError
from .exactmath import Twelfth, character_table, is_prime, legendre_symbol
from .hurwitz import HurwitzCache, hurwitz_class_number

log = getLogger(__name__)

__all__ = [
    "CurveParams",
    "TraceCensus",
    "character_sum",
    "point_count",
    "point_count_exhaustive",
    "trace_census",
    "census_from_curves",
    "predicted_census_count",
]


def _require_census_prime(p: int):
    if p <= 3 or not is_prime(p):
        raise ContractError(f"Montgomery census needs a prime greater than 3, got ({p}).")


@dataclasses.dataclass(frozen=True)
class CurveParams:
    """ A non-singular Montgomery curve `By² = x³ + Ax² + x` over `F_p`. """
    p: int
    A: int
    B: int

    def __post_init__(self):
        p = self.p
        _require_census_prime(p)
        if not (0 <= self.A < p and 0 <= self.B < p):
            raise ContractError(
                f"Curve coefficients A ({self.A}) and B ({self.B}) must be residues in [0, {p})."
            )
        if self.B * (self.A * self.A - 4) % p == 0:
            raise SingularCurveError(
                f"Curve with p ({p}), A ({self.A}), B ({self.B}) is singular: B(A² - 4) ≡ 0."
            )

    @property
    def trace(self) -> int:
        return self.p + 1 - point_count(self)


@dataclasses.dataclass(frozen=True)
class TraceCensus:
    """
    Map of trace `t` to the number of `(A, B)` pairs whose curve has `p + 1 - t` points.
    Only traces that occur are keys; keys are ascending.
    """
    p: int
    counts: Dict[int, int]

    def count(self, t: int) -> int:
        return self.counts.get(t, 0)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def traces(self) -> List[int]:
        return list(self.counts)


def _cubic(x: int, A: int, p: int) -> int:
    return x * (x * x + A * x + 1) % p


def character_sum(p: int, A: int, *, characters: Optional[Sequence[int]] = None) -> int:
    """
    `Σ_{x in F_p} χ(x³ + Ax² + x)`, exactly.

    Args:
        p: Odd prime.
        A: Residue in `[0, p)`.
        characters: Optional `exactmath.character_table(p)`, to avoid a modular
            exponentiation per term when summing for many `A`.
    """
    if not 0 <= A < p:
        raise ContractError(f"Coefficient A ({A}) must be a residue in [0, {p}).")

    if characters is None:
        return sum(legendre_symbol(_cubic(x, A, p), p) for x in range(p))
    return sum(characters[_cubic(x, A, p)] for x in range(p))


def point_count(curve: CurveParams) -> int:
    """ `|M_{A,B}(F_p)|`, including the point at infinity; always divisible by 4. """
    p = curve.p
    return p + 1 + legendre_symbol(curve.B, p) * character_sum(p, curve.A)


def point_count_exhaustive(curve: CurveParams) -> int:
    """ Counts `(x, y)` in `F_p²` on the curve directly (`O(p²)`), plus the point at infinity. """
    p, A, B = curve.p, curve.A, curve.B
    squares = Counter(y * y % p for y in range(p))
    # `B y² = f(x)` has as many solutions `y` as `y² = f(x) / B`.
    b_inverse = pow(B, -1, p)
    return 1 + sum(squares[_cubic(x, A, p) * b_inverse % p] for x in range(p))


def trace_census(p: int) -> TraceCensus:
    """
    Census of every non-singular `(A, B)` in `F_p²` by trace, using one character sum per
    `A` (`O(p²)` character lookups overall).

    Raises:
        ContractError: Unless `p` is a prime greater than 3.
    """
    _require_census_prime(p)

    characters = character_table(p)
    half = (p - 1) // 2
    counts = Counter()
    for A in range(p):
        if (A * A - 4) % p == 0:
            continue
        s = character_sum(p, A, characters=characters)
        # χ(B) = 1 gives p + 1 + s points (trace -s); the twists give trace +s.
        counts[-s] += half
        counts[s] += half

    log.debug(f"Census for p ({p}) covers traces {sorted(counts)}.")
    return TraceCensus(p=p, counts=dict(sorted(counts.items())))


def census_from_curves(p: int) -> TraceCensus:
    """ Same result as `trace_census`, counting the points of each curve one at a time. """
    _require_census_prime(p)

    counts = Counter()
    for A in range(p):
        if (A * A - 4) % p == 0:
            continue
        for B in range(1, p):
            curve = CurveParams(p=p, A=A, B=B)
            counts[p + 1 - point_count_exhaustive(curve)] += 1
    return TraceCensus(p=p, counts=dict(sorted(counts.items())))


def predicted_census_count(
        p: int,
        t: int,
        *,
        cache: HurwitzCache | DefaultType | None = Default
) -> Twelfth:
    """
    Predicted census size for trace `t`: `3(p - 1)·H_w((t² - 4p)/4)` if `4 | p + 1 - t` and
    `t² < 4p`, zero otherwise. Always a whole number.

    Args:
        p: Prime greater than 3.
        t: Any integer.
        cache: Passed along to `xclassnum.hurwitz.hurwitz_class_number`.
    """
    _require_census_prime(p)

    if (p + 1 - t) % 4 or t * t >= 4 * p:
        return Twelfth(0)

    # 4 | p + 1 - t makes t ≡ p + 1 (mod 4), so t² - 4p ≡ 0 (mod 4).
    value = 3 * (p - 1) * hurwitz_class_number((t * t - 4 * p) // 4, cache=cache)
    if not value.is_integer():
        raise IdentityInvariantError(
            f"Predicted census size ({value}) for p ({p}), t ({t}) is not a whole number."
        )
    return value
