"""
Integer utilities and the exact value type used for every class number in this library.

Important Items

- `Twelfth`: An exact rational with the fixed denominator 12. Every value of
    `xclassnum.qforms.weighted_class_number` and `xclassnum.hurwitz.hurwitz_class_number`
    lives in (1/12)ℤ (the weights 1/3 and 1/2, and -1/12 at zero), so equality is always an
    integer comparison of numerators.
- `is_prime`: Deterministic Miller-Rabin, exact for every 64-bit input.
- `legendre_symbol`: Quadratic character via Euler's criterion.
- `factorize` / `square_divisors`: Trial-division factoring, used to enumerate the `d` with
    `d * d` dividing a discriminant.
"""
from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple, Union

from .const import MILLER_RABIN_LIMIT, MILLER_RABIN_WITNESSES, TWELFTHS
from .errors import ContractError

__all__ = [
    "Twelfth",
    "Factorization",
    "is_prime",
    "legendre_symbol",
    "character_table",
    "factorize",
    "square_divisors",
    "primes_below",
    "first_primes",
]


@dataclasses.dataclass(frozen=True, eq=False)
class Twelfth:
    """
    Exact number `num / 12`.

    Addition, subtraction and integer scaling add/scale numerators and never leave the type.
    Plain `int` values are accepted on either side of `+`, `-` and comparisons, so
    `sum(values)` works with its default `0` start, and `Twelfth(24) == 2` is True.

    >>> Twelfth(6)
    Twelfth(num=6)
    >>> str(Twelfth(6))
    '1/2'
    >>> Twelfth(4) + Twelfth(8) == 1
    True
    """
    num: int = 0

    @classmethod
    def of(cls, value: Union[int, Fraction]) -> Twelfth:
        """ Exact conversion; raises `ContractError` if `value` is not a multiple of 1/12. """
        if isinstance(value, int):
            return cls(value * TWELFTHS)

        scaled = Fraction(value) * TWELFTHS
        if scaled.denominator != 1:
            raise ContractError(f"Value ({value}) is not a whole number of twelfths.")
        return cls(scaled.numerator)

    @property
    def den(self) -> int:
        return TWELFTHS

    def is_integer(self) -> bool:
        return self.num % TWELFTHS == 0

    def to_int(self) -> int:
        if not self.is_integer():
            raise ContractError(f"Value ({self}) is not a whole number.")
        return self.num // TWELFTHS

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, TWELFTHS)

    def __str__(self):
        return str(self.to_fraction())

    def __add__(self, other):
        other_num = _numerator(other)
        if other_num is None:
            return NotImplemented
        return Twelfth(self.num + other_num)

    __radd__ = __add__

    def __sub__(self, other):
        other_num = _numerator(other)
        if other_num is None:
            return NotImplemented
        return Twelfth(self.num - other_num)

    def __rsub__(self, other):
        other_num = _numerator(other)
        if other_num is None:
            return NotImplemented
        return Twelfth(other_num - self.num)

    def __neg__(self):
        return Twelfth(-self.num)

    def __mul__(self, other):
        # Scaling by an integer only; a product of two twelfths is not a twelfth in general.
        if isinstance(other, int) and not isinstance(other, bool):
            return Twelfth(self.num * other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        other_num = _numerator(other)
        if other_num is None:
            return NotImplemented
        return self.num == other_num

    def __hash__(self):
        # Must agree with `hash(int)` whenever we compare equal to an int.
        return hash(self.to_fraction())

    def __lt__(self, other):
        other_num = _numerator(other)
        if other_num is None:
            return NotImplemented
        return self.num < other_num

    def __le__(self, other):
        other_num = _numerator(other)
        if other_num is None:
            return NotImplemented
        return self.num <= other_num

    def __gt__(self, other):
        other_num = _numerator(other)
        if other_num is None:
            return NotImplemented
        return self.num > other_num

    def __ge__(self, other):
        other_num = _numerator(other)
        if other_num is None:
            return NotImplemented
        return self.num >= other_num


def _numerator(value) -> Optional[int]:
    """ Numerator over 12 of `value`, or None if it's not something we compare/add with. """
    if isinstance(value, Twelfth):
        return value.num
    if isinstance(value, int) and not isinstance(value, bool):
        return value * TWELFTHS
    return None


@dataclasses.dataclass(frozen=True)
class Factorization:
    """ Prime factorization of `|n|`; primes strictly increasing, exponents >= 1. """
    prime_powers: Tuple[Tuple[int, int], ...] = ()

    @property
    def value(self) -> int:
        result = 1
        for prime, exponent in self.prime_powers:
            result *= prime ** exponent
        return result

    def square_divisors(self) -> List[int]:
        """ Every positive `d` with `d * d` dividing `value`, ascending. """
        divisors = [1]
        for prime, exponent in self.prime_powers:
            powers = [prime ** k for k in range(1, exponent // 2 + 1)]
            divisors += [d * power for d in divisors for power in powers]
        return sorted(divisors)


def factorize(n: int) -> Factorization:
    """
    Factors `|n|` by trial division.

    Discriminants handled by this library stay well below 10**6 in magnitude, where trial
    division is instant. Pollard-rho would be the upgrade path for much larger inputs.

    Raises:
        ContractError: If `n` is zero.
    """
    if n == 0:
        raise ContractError("Can't factor zero.")

    remaining = abs(n)
    prime_powers = []
    divisor = 2
    while divisor * divisor <= remaining:
        if remaining % divisor == 0:
            exponent = 0
            while remaining % divisor == 0:
                remaining //= divisor
                exponent += 1
            prime_powers.append((divisor, exponent))
        divisor += 1 if divisor == 2 else 2

    if remaining > 1:
        prime_powers.append((remaining, 1))
    return Factorization(tuple(prime_powers))


def square_divisors(n: int) -> List[int]:
    """
    Positive integers `d` with `d * d` dividing `n`, ascending, always including 1.

    >>> square_divisors(-16)
    [1, 2, 4]

    Raises:
        ContractError: For `n == 0`, where every square divides; callers special-case it.
    """
    if n == 0:
        raise ContractError("Every square divides zero; zero has no finite square-divisor list.")
    return factorize(n).square_divisors()


def is_prime(n: int) -> bool:
    """
    Deterministic Miller-Rabin with a witness set that is proven complete for every
    `n < 3.3 * 10**24` (so every 64-bit integer). There are no probabilistic false positives.

    Raises:
        ContractError: If `n` is negative or beyond the range the witness set is proven for.
    """
    if n < 0:
        raise ContractError(f"Primality is only defined here for nonnegative integers, got ({n}).")
    if n >= MILLER_RABIN_LIMIT:
        raise ContractError(f"Value ({n}) is beyond the deterministic Miller-Rabin range.")
    if n < 2:
        return False

    for witness in MILLER_RABIN_WITNESSES:
        if n % witness == 0:
            return n == witness

    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1

    for witness in MILLER_RABIN_WITNESSES:
        x = pow(witness, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_odd_prime(p: int):
    if p <= 2 or not is_prime(p):
        raise ContractError(f"Modulus ({p}) must be an odd prime.")


def _euler_criterion(a: int, p: int) -> int:
    residue = pow(a % p, (p - 1) // 2, p)
    return -1 if residue == p - 1 else residue


def legendre_symbol(a: int, p: int) -> int:
    """
    Quadratic character of `a` modulo the odd prime `p`: 0 if `p | a`, 1 if `a` is a nonzero
    square mod `p`, -1 otherwise.

    Raises:
        ContractError: If `p` is even or composite.
    """
    _require_odd_prime(p)
    return _euler_criterion(a, p)


def character_table(p: int) -> Tuple[int, ...]:
    """ `legendre_symbol(a, p)` for every `a` in `range(p)`, indexable by residue. """
    _require_odd_prime(p)
    return tuple(_euler_criterion(a, p) for a in range(p))


def _primes() -> Iterator[int]:
    candidate = 2
    while True:
        if is_prime(candidate):
            yield candidate
        candidate += 1


def primes_below(bound: int) -> List[int]:
    """ Ascending primes `p < bound`. """
    return [n for n in range(2, max(bound, 2)) if is_prime(n)]


def first_primes(count: int) -> List[int]:
    """ The first `count` primes; `first_primes(10000)` equals `primes_below(104730)`. """
    if count < 0:
        raise ContractError(f"Prime count ({count}) must be nonnegative.")
    primes = []
    for prime in _primes():
        if len(primes) >= count:
            break
        primes.append(prime)
    return primes
