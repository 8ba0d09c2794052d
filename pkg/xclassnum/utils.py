from math import isqrt
from typing import Iterator


def traces_below(bound: int, /) -> Iterator[int]:
    """ Yields every integer `t` with `t * t < bound`, in ascending order. """
    if bound <= 0:
        return
    top = isqrt(bound - 1)
    yield from range(-top, top + 1)
