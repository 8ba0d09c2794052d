import random
import threading

import pytest

from xclassnum.exactmath import Twelfth
from xclassnum.hurwitz import HurwitzCache, hurwitz_class_number, hurwitz_terms
from xclassnum.qforms import HwConvention, HwOptions, is_discriminant


@pytest.fixture
def cache():
    """ A fresh cache injected as the current one, so tests don't share memoized values. """
    with HurwitzCache() as fresh:
        yield fresh


@pytest.mark.parametrize("delta, expected", [
    (-3, Twelfth(4)),
    (-4, Twelfth(6)),
    (-1, Twelfth(0)),
    (-12, Twelfth(16)),
    (-16, Twelfth(18)),
    (0, Twelfth(-1)),
    (1, Twelfth(0)),
    (12345, Twelfth(0)),
])
def test_hurwitz_class_number_examples(cache, delta, expected):
    assert hurwitz_class_number(delta) == expected
    assert hurwitz_class_number(delta, cache=None) == expected


def test_hurwitz_terms():
    assert hurwitz_terms(-16) == [(1, Twelfth(12)), (2, Twelfth(6)), (4, Twelfth(0))]
    assert hurwitz_terms(-7) == [(1, Twelfth(12))]


def test_vanishes_on_two_and_three_mod_four():
    for delta in range(-10 ** 5, 0):
        if delta % 4 in (2, 3):
            assert hurwitz_class_number(delta, cache=None) == 0, delta


def test_positive_on_discriminants(cache):
    cache.prime(5000)
    for delta in range(-5000, -2):
        if is_discriminant(delta):
            assert hurwitz_class_number(delta) > 0, delta


def test_cache_is_transparent(cache):
    rng = random.Random(20240917)
    deltas = [rng.randrange(-20000, 10) for _ in range(2000)]
    uncached = [hurwitz_class_number(delta, cache=None) for delta in deltas]

    assert [hurwitz_class_number(delta) for delta in deltas] == uncached
    assert len(cache) > 0
    # Second pass is served from the memo.
    assert [hurwitz_class_number(delta) for delta in deltas] == uncached

    primed = HurwitzCache()
    primed.prime(20000)
    assert [hurwitz_class_number(delta, cache=primed) for delta in deltas] == uncached


def test_prime_only_grows(cache):
    cache.prime(100)
    table = cache.class_numbers
    cache.prime(50)
    assert cache.class_numbers is table
    cache.prime(200)
    assert cache.class_numbers.bound == 200

    cache.clear()
    assert cache.class_numbers is None
    assert len(cache) == 0


def test_cache_bypassed_for_other_conventions(cache):
    with HwOptions(convention=HwConvention.root_order):
        # -5 is squarefree, so the sum is just h_w(-5), now mapped to h(-20).
        assert hurwitz_class_number(-5) == 2
    assert len(cache) == 0
    assert hurwitz_class_number(-5) == 0


def test_each_thread_gets_its_own_cache(cache):
    seen = []

    def worker():
        assert hurwitz_class_number(-16) == Twelfth(18)
        seen.append(HurwitzCache.grab())

    thread = threading.Thread(target=worker)
    thread.start()
    thread.join()

    assert seen and seen[0] is not cache
    assert HurwitzCache.grab() is cache
    assert -16 not in cache.entries
