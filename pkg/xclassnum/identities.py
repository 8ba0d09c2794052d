"""
Verifiers for the class-number identities this library exists to check. Each `check_*`
function evaluates both sides exactly for one prime and returns an `IdentityReport`.

- `check_theorem1`: `Σ_{t² < p} H_w(t² - p) = (p - 2)/3` for every prime `p`.
- `check_classical`: `Σ_{t² < 4p} H_w(t² - 4p) = 2p`.
- `check_lemma1`: the Montgomery trace census equals `3(p-1)·H_w((t² - 4p)/4)` for each `t`.
- `check_mass_formula`: the census covers all `(p - 1)(p - 2)` non-singular pairs.
- `check_reindex`: `Σ_{t ≡ p+1 (4), t² < 4p} H_w((t² - 4p)/4)` equals the sum of `H_w(t² - p)`
    over odd `t` (when `p ≡ 1 mod 4`) or even `t` (when `p ≡ 3 mod 4`).
- `check_vanishing`: every `H_w(t² - p)` of the other parity is zero, term by term.

Put together, the last four reconstruct the first from the census. Note `(p - 2)/3` is not
an integer unless `p ≡ 2 (mod 3)`; that's expected, since `H_w` takes the fractional values
1/3 and 1/2.
"""
from __future__ import annotations

import dataclasses
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Callable, Dict, List, Tuple, Union

from xsentinels.default import Default, DefaultType

from .errors import ContractError
from .exactmath import Twelfth, is_prime
from .hurwitz import HurwitzCache, hurwitz_class_number
from .montgomery import predicted_census_count, trace_census
from .utils import traces_below

__all__ = [
    "IdentityKind",
    "IdentityReport",
    "theorem1_terms",
    "theorem1_sum",
    "listing_sum",
    "classical_sum",
    "census_theorem1_sum",
    "check_theorem1",
    "check_classical",
    "check_lemma1",
    "check_mass_formula",
    "check_reindex",
    "check_vanishing",
    "CHECKERS",
]

CacheArg = Union[HurwitzCache, DefaultType, None]


class IdentityKind(Enum):
    theorem1 = 'theorem1'
    classical2p = 'classical2p'
    lemma1_census = 'lemma1_census'
    reindex = 'reindex'
    vanishing = 'vanishing'
    mass_formula = 'mass_formula'

    @property
    def min_prime(self) -> int:
        """ Smallest prime the identity is stated for (census-based ones need `p > 3`). """
        if self in (IdentityKind.theorem1, IdentityKind.classical2p):
            return 2
        return 5


@dataclasses.dataclass(frozen=True)
class IdentityReport:
    """
    Outcome of checking one identity at one prime.

    For the scalar identities `passed` is exactly `lhs == rhs`. The vector-valued checks
    (`lemma1_census`, `vanishing`) also list the individual offending terms in `mismatches`,
    and only pass when there are none.
    """
    prime: int
    identity: IdentityKind
    lhs: Twelfth
    rhs: Twelfth
    mismatches: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs and not self.mismatches


def _require_prime(p: int, identity: IdentityKind):
    if p < identity.min_prime or not is_prime(p):
        raise ContractError(
            f"Identity ({identity.value}) is stated for primes >= {identity.min_prime}, "
            f"got ({p})."
        )


def theorem1_terms(p: int, *, cache: CacheArg = Default) -> List[Tuple[int, Twelfth]]:
    """
    `(t, H_w(t² - p))` for every `t` with `t² < p`, ascending by `t`.

    >>> [str(v) for _, v in theorem1_terms(5)]
    ['0', '1/2', '0', '1/2', '0']
    """
    _require_prime(p, IdentityKind.theorem1)
    return [(t, hurwitz_class_number(t * t - p, cache=cache)) for t in traces_below(p)]


def theorem1_sum(p: int, *, cache: CacheArg = Default) -> Twelfth:
    """ `Σ_{t² < p} H_w(t² - p)`. """
    return sum((v for _, v in theorem1_terms(p, cache=cache)), Twelfth(0))


def listing_sum(p: int, *, cache: CacheArg = Default) -> Twelfth:
    """
    Same sum as `theorem1_sum`, but over `range(-ceil(sqrt(p)), ceil(sqrt(p)))` the way a
    straightforward SageMath loop iterates. The extra `t = -ceil(sqrt(p))` term has
    `t² - p > 0` for prime `p`, so it contributes zero and both sums agree.
    """
    _require_prime(p, IdentityKind.theorem1)
    top = isqrt(p)
    if top * top < p:
        top += 1
    return sum(
        (hurwitz_class_number(t * t - p, cache=cache) for t in range(-top, top)),
        Twelfth(0)
    )


def classical_sum(p: int, *, cache: CacheArg = Default) -> Twelfth:
    """ `Σ_{t² < 4p} H_w(t² - 4p)`. """
    _require_prime(p, IdentityKind.classical2p)
    return sum(
        (hurwitz_class_number(t * t - 4 * p, cache=cache) for t in traces_below(4 * p)),
        Twelfth(0)
    )


def _census_traces(p: int) -> List[int]:
    """ Traces admitted by the census: `t² < 4p` and `4 | p + 1 - t`. """
    return [t for t in traces_below(4 * p) if (p + 1 - t) % 4 == 0]


def census_theorem1_sum(p: int) -> Twelfth:
    """ `theorem1_sum` rebuilt from the census alone: census mass divided by `3(p - 1)`. """
    _require_prime(p, IdentityKind.mass_formula)
    return Twelfth.of(Fraction(trace_census(p).total, 3 * (p - 1)))


def check_theorem1(p: int, *, cache: CacheArg = Default) -> IdentityReport:
    """ `lhs` is the sum itself, `rhs` is `(p - 2)/3`. Primes 2 and 3 are evaluated directly. """
    return IdentityReport(
        prime=p,
        identity=IdentityKind.theorem1,
        lhs=theorem1_sum(p, cache=cache),
        rhs=Twelfth.of(Fraction(p - 2, 3)),
    )


def check_classical(p: int, *, cache: CacheArg = Default) -> IdentityReport:
    return IdentityReport(
        prime=p,
        identity=IdentityKind.classical2p,
        lhs=classical_sum(p, cache=cache),
        rhs=Twelfth.of(2 * p),
    )


def check_lemma1(p: int, *, cache: CacheArg = Default) -> IdentityReport:
    """
    Compares the census with the prediction at every trace either of them mentions, and the
    census mass with `(p - 1)(p - 2)`.

    `lhs` is the census mass and `rhs` the predicted mass; per-trace disagreements are listed
    in `mismatches` even when the masses happen to agree.
    """
    _require_prime(p, IdentityKind.lemma1_census)
    census = trace_census(p)

    mismatches = []
    predicted_mass = Twelfth(0)
    for t in sorted(set(traces_below(4 * p)) | set(census.traces)):
        predicted = predicted_census_count(p, t, cache=cache)
        predicted_mass += predicted
        if census.count(t) != predicted:
            mismatches.append(f"t={t}: census {census.count(t)} != predicted {predicted}")

    expected_mass = (p - 1) * (p - 2)
    if census.total != expected_mass:
        mismatches.append(f"mass: census {census.total} != (p-1)(p-2) {expected_mass}")

    return IdentityReport(
        prime=p,
        identity=IdentityKind.lemma1_census,
        lhs=Twelfth.of(census.total),
        rhs=predicted_mass,
        mismatches=tuple(mismatches),
    )


def check_mass_formula(p: int) -> IdentityReport:
    _require_prime(p, IdentityKind.mass_formula)
    return IdentityReport(
        prime=p,
        identity=IdentityKind.mass_formula,
        lhs=Twelfth.of(trace_census(p).total),
        rhs=Twelfth.of((p - 1) * (p - 2)),
    )


def _parity_for(p: int, *, vanishing: bool) -> int:
    """
    Parity of `t` (0 even, 1 odd) kept by the reindexed sum; the other parity vanishes.
    `p ≡ 1 (mod 4)` keeps odd `t`, `p ≡ 3 (mod 4)` keeps even `t`.
    """
    kept = 1 if p % 4 == 1 else 0
    return 1 - kept if vanishing else kept


def check_reindex(p: int, *, cache: CacheArg = Default) -> IdentityReport:
    """
    `lhs`: `Σ H_w((t² - 4p)/4)` over `t ≡ p + 1 (mod 4)`, `t² < 4p`.
    `rhs`: `Σ H_w(t² - p)` over `t² < p` of the kept parity. Both evaluated term by term.
    """
    _require_prime(p, IdentityKind.reindex)
    left = sum(
        (hurwitz_class_number((t * t - 4 * p) // 4, cache=cache) for t in _census_traces(p)),
        Twelfth(0)
    )
    parity = _parity_for(p, vanishing=False)
    right = sum(
        (
            hurwitz_class_number(t * t - p, cache=cache)
            for t in traces_below(p) if t % 2 == parity
        ),
        Twelfth(0)
    )
    return IdentityReport(prime=p, identity=IdentityKind.reindex, lhs=left, rhs=right)


def check_vanishing(p: int, *, cache: CacheArg = Default) -> IdentityReport:
    """
    Every `H_w(t² - p)` with `t² < p` and `t` of the vanishing parity must be zero:
    `t² - p` is `≡ 3 (mod 4)` for even `t` when `p ≡ 1 (mod 4)`, and `≡ 2 (mod 4)` for odd `t`
    when `p ≡ 3 (mod 4)`, and so is every quotient by a square divisor.
    """
    _require_prime(p, IdentityKind.vanishing)
    parity = _parity_for(p, vanishing=True)

    total = Twelfth(0)
    mismatches = []
    for t in traces_below(p):
        if t % 2 != parity:
            continue
        value = hurwitz_class_number(t * t - p, cache=cache)
        total += value
        if value != 0:
            mismatches.append(f"t={t}: H_w({t * t - p}) = {value}")

    return IdentityReport(
        prime=p,
        identity=IdentityKind.vanishing,
        lhs=total,
        rhs=Twelfth(0),
        mismatches=tuple(mismatches),
    )


CHECKERS: Dict[IdentityKind, Callable[[int], IdentityReport]] = {
    IdentityKind.theorem1: check_theorem1,
    IdentityKind.classical2p: check_classical,
    IdentityKind.lemma1_census: check_lemma1,
    IdentityKind.mass_formula: check_mass_formula,
    IdentityKind.reindex: check_reindex,
    IdentityKind.vanishing: check_vanishing,
}
""" Checker for each identity; the CLI's `verify` command looks checkers up here. """
