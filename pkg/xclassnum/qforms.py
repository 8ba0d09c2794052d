"""
Class numbers of imaginary quadratic orders, counted as reduced, primitive, positive-definite
binary quadratic forms `ax² + bxy + cy²`, and the weighted class number `h_w`.

`h_w(d)` is `h(d)/3` at `d = -3`, `h(d)/2` at `d = -4`, `h(d)` for every other negative
`d ≡ 0, 1 (mod 4)`, and zero everywhere else. Some sources leave `h_w` undefined for
`d ≡ 2, 3 (mod 4)`; we use zero (`HwConvention.standard`). The alternative convention is
available through `HwOptions` only so that verification runs can show they detect it.
"""
from __future__ import annotations

import dataclasses
from enum import Enum
from logging import getLogger
from math import gcd, isqrt
from typing import List, Optional, Tuple

from xinject import Dependency
from xsentinels.default import Default, DefaultType

from .errors import ContractError
from .exactmath import Twelfth

log = getLogger(__name__)

__all__ = [
    "QuadForm",
    "ClassNumberTable",
    "HwConvention",
    "HwOptions",
    "hw_options",
    "is_discriminant",
    "reduced_forms",
    "class_number",
    "class_number_table",
    "weighted_class_number",
]


class HwConvention(Enum):
    """ What `weighted_class_number` returns for negative `d ≡ 2, 3 (mod 4)`. """

    standard = 'standard'
    """ Zero. """

    root_order = 'root-order'
    """ `h(4d)`, the class number of ℤ[√d]. Wrong for every identity in this library;
        exists so a verification run can be shown to fail under it.
    """


class HwOptions(Dependency):
    def __init__(self, *, convention: HwConvention = HwConvention.standard):
        self.convention = convention

    convention: HwConvention = HwConvention.standard
    """ Convention `weighted_class_number` uses when one is not passed to it directly. """


hw_options = HwOptions.proxy()
""" Proxy to the `HwOptions` currently injected. """


@dataclasses.dataclass(frozen=True)
class QuadForm:
    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def is_positive_definite(self) -> bool:
        return self.a > 0 and self.discriminant < 0

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not (-a < b <= a <= c):
            return False
        if (a == c or abs(b) == a) and b < 0:
            return False
        return True

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    def reduce(self) -> QuadForm:
        """
        The reduced form equivalent to this one: repeatedly move `b` into `(-a, a]` and swap
        `a`/`c` while `c < a`, then apply the `b >= 0` tie rule.
        """
        if not self.is_positive_definite():
            raise ContractError(f"Only positive-definite forms can be reduced, got ({self}).")

        a, b, c = self.a, self.b, self.c
        while True:
            if not -a < b <= a:
                # Substitute x -> x + ky; keeps the discriminant.
                k = (a - b) // (2 * a)
                c = a * k * k + b * k + c
                b = b + 2 * a * k
            if c < a:
                a, b, c = c, -b, a
                continue
            break

        if a == c and b < 0:
            b = -b
        return QuadForm(a, b, c)


@dataclasses.dataclass(frozen=True)
class ClassNumberTable:
    """ `h(d)` for every discriminant `-bound <= d < 0`, indexed by `-d` (zero if not one). """
    bound: int
    counts: Tuple[int, ...]

    def __contains__(self, d: int) -> bool:
        return -self.bound <= d < 0

    def __getitem__(self, d: int) -> int:
        if d not in self:
            raise KeyError(d)
        return self.counts[-d]


def is_discriminant(d: int) -> bool:
    """ True for the discriminants of imaginary quadratic orders: `d < 0`, `d ≡ 0, 1 (mod 4)`. """
    return d < 0 and d % 4 in (0, 1)


def _require_discriminant(d: int):
    if not is_discriminant(d):
        raise ContractError(
            f"Discriminant ({d}) must be negative and congruent to 0 or 1 mod 4; "
            f"use `weighted_class_number` for arbitrary integers."
        )


def reduced_forms(d: int) -> List[QuadForm]:
    """
    Reduced primitive positive-definite forms of discriminant `d`, ordered by `(a, b)`.

    Iterates `a` up to `isqrt(|d| / 3)`, and `b` over `(-a, a]` with `b ≡ d (mod 2)`;
    accepts when `4a | b² - d` and the resulting `c` makes a reduced, primitive form.
    """
    _require_discriminant(d)

    forms = []
    for a in range(1, isqrt(-d // 3) + 1):
        four_a = 4 * a
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            numerator = b * b - d
            if numerator % four_a:
                continue
            c = numerator // four_a
            if c < a or (b < 0 and c == a):
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            forms.append(QuadForm(a, b, c))
    return forms


def class_number(d: int) -> int:
    """
    Class number `h(d)` of the order of discriminant `d`. Always at least 1, as the
    principal form is always counted.

    >>> class_number(-23)
    3

    Raises:
        ContractError: If `d >= 0` or `d ≡ 2, 3 (mod 4)`.
    """
    return len(reduced_forms(d))


def class_number_table(bound: int) -> ClassNumberTable:
    """
    Computes `h(d)` for every discriminant in `[-bound, -3]` in one pass over all reduced
    primitive forms with `|b² - 4ac| <= bound`.

    Same predicates as `reduced_forms`; much faster than calling `class_number` for each `d`
    when most discriminants in a range are needed.
    """
    if bound < 0:
        raise ContractError(f"Table bound ({bound}) must be nonnegative.")

    counts = [0] * (bound + 1)
    for a in range(1, isqrt(bound // 3) + 1):
        four_a = 4 * a
        for b in range(-a + 1, a + 1):
            gcd_ab = gcd(a, b)
            c = a if b >= 0 else a + 1
            size = four_a * c - b * b
            while size <= bound:
                if gcd_ab == 1 or gcd(gcd_ab, c) == 1:
                    counts[size] += 1
                c += 1
                size += four_a

    log.debug(f"Built class-number table down to discriminant ({-bound}).")
    return ClassNumberTable(bound=bound, counts=tuple(counts))


def weighted_class_number(
        d: int,
        *,
        class_numbers: Optional[ClassNumberTable] = None,
        convention: HwConvention | DefaultType = Default
) -> Twelfth:
    """
    Weighted class number `h_w(d)`; total on the integers.

    Args:
        d: Any integer.
        class_numbers: Optional precomputed table; consulted for `d` it covers, otherwise
            `class_number` is used.
        convention: Defaults to `hw_options.convention` (normally `HwConvention.standard`).

    Returns:
        `1/3` at -3, `1/2` at -4, `h(d)` for other discriminants, otherwise zero
        (under the standard convention).
    """
    if convention is Default:
        convention = hw_options.convention

    def lookup(discriminant: int) -> int:
        if class_numbers is not None and discriminant in class_numbers:
            return class_numbers[discriminant]
        return class_number(discriminant)

    if d == -3:
        return Twelfth(4 * lookup(d))
    if d == -4:
        return Twelfth(6 * lookup(d))
    if is_discriminant(d):
        return Twelfth.of(lookup(d))
    if d < 0 and convention is HwConvention.root_order:
        return Twelfth.of(lookup(4 * d))
    return Twelfth(0)
