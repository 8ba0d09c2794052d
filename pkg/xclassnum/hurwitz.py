"""
Kronecker-Hurwitz class number `H_w(Δ) = Σ_{d² | Δ} h_w(Δ / d²)`.

The sum is only meaningful for `Δ < 0`; like SageMath's `hurwitz_class_number`, we extend
it to every integer with `H_w(0) = -1/12` and `H_w(Δ) = 0` for `Δ > 0`.
Sums of the form `Σ_{t² < p} H_w(t² - p)` never reach those values for prime `p`, so the
extension only matters for bit-compatibility with ranges that overshoot.

Some texts write this function as `H`; here it's always `H_w`.

Batch sweeps evaluate the same `Δ` for many primes, so results are memoized in a
`HurwitzCache`. It's a `xinject.DependencyPerThread`, so each worker thread (and each worker
process) gets its own and no locking is needed:

>>> HurwitzCache.grab().prime(104729)   # optional, makes h(d) lookups a table index
>>> hurwitz_class_number(-16)
Twelfth(num=18)
"""
from __future__ import annotations

from logging import getLogger
from typing import Dict, List, Optional, Tuple

from xinject import DependencyPerThread
from xsentinels.default import Default, DefaultType

from .exactmath import Twelfth, square_divisors
from .qforms import ClassNumberTable, HwConvention, class_number_table, hw_options
from .qforms import weighted_class_number

log = getLogger(__name__)

__all__ = ["HurwitzCache", "hurwitz_terms", "hurwitz_class_number"]


class HurwitzCache(
    DependencyPerThread,
    attributes_to_skip_while_copying=['_entries', 'class_numbers']
):
    """
    Memoized `H_w` values for one thread, plus an optional precomputed class-number table.

    Unbounded; scoped to whatever owns it (normally one verification run in one worker).
    Values are only ever stored for the standard `h_w` convention, so a cached value always
    equals a fresh computation. The copy another thread gets starts out empty.
    """
    _entries: Optional[Dict[int, Twelfth]] = None
    class_numbers: Optional[ClassNumberTable] = None

    @property
    def entries(self) -> Dict[int, Twelfth]:
        if self._entries is None:
            self._entries = {}
        return self._entries

    def __len__(self):
        return len(self.entries)

    def prime(self, bound: int):
        """ Precompute `h(d)` for every discriminant down to `-bound`, unless already covered. """
        if self.class_numbers is not None and self.class_numbers.bound >= bound:
            return
        log.debug(f"Priming Hurwitz cache with class numbers down to ({-bound}).")
        self.class_numbers = class_number_table(bound)

    def clear(self):
        self._entries = None
        self.class_numbers = None


def hurwitz_terms(
        delta: int,
        *,
        class_numbers: Optional[ClassNumberTable] = None
) -> List[Tuple[int, Twelfth]]:
    """
    The individual terms of `H_w(delta)` for `delta < 0`: `(d, h_w(delta / d²))` for every
    square divisor `d`, ascending by `d`.
    """
    return [
        (d, weighted_class_number(delta // (d * d), class_numbers=class_numbers))
        for d in square_divisors(delta)
    ]


def hurwitz_class_number(
        delta: int,
        *,
        cache: HurwitzCache | DefaultType | None = Default
) -> Twelfth:
    """
    `H_w(delta)` as an exact `Twelfth`; total on the integers.

    Args:
        delta: Any integer.
        cache: `Default` uses the current thread's `HurwitzCache`; `None` computes from
            scratch. Either way the value is the same.

            The cache is bypassed whenever `hw_options.convention` is not the standard one.

    Returns:
        The square-divisor sum for `delta < 0` (never negative), `-1/12` at zero and zero
        for positive `delta`.
    """
    if delta == 0:
        return Twelfth(-1)
    if delta > 0:
        return Twelfth(0)

    if hw_options.convention is not HwConvention.standard:
        cache = None
    elif cache is Default:
        cache = HurwitzCache.grab()

    if cache is not None:
        cached = cache.entries.get(delta)
        if cached is not None:
            return cached

    class_numbers = cache.class_numbers if cache is not None else None
    value = sum((v for _, v in hurwitz_terms(delta, class_numbers=class_numbers)), Twelfth(0))

    if cache is not None:
        cache.entries[delta] = value
    return value
