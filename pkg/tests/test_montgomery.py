import random
from math import isqrt

import pytest

from xclassnum.errors import ContractError, SingularCurveError
from xclassnum.exactmath import Twelfth, character_table, primes_below
from xclassnum.hurwitz import HurwitzCache
from xclassnum.montgomery import (
    CurveParams,
    census_from_curves,
    character_sum,
    point_count,
    point_count_exhaustive,
    predicted_census_count,
    trace_census,
)

census_primes = [p for p in primes_below(300) if p > 3]


@pytest.fixture
def cache():
    with HurwitzCache() as fresh:
        fresh.prime(1200)
        yield fresh


@pytest.mark.parametrize("p, A, expected", [(5, 0, -2), (5, 1, 2), (7, 3, 4)])
def test_character_sum_examples(p, A, expected):
    assert character_sum(p, A) == expected
    assert character_sum(p, A, characters=character_table(p)) == expected


def test_character_sum_within_hasse_bound():
    for p in census_primes:
        characters = character_table(p)
        for A in range(p):
            if (A * A - 4) % p:
                s = character_sum(p, A, characters=characters)
                assert s * s < 4 * p, (p, A, s)


def test_character_sum_rejects_non_residue_coefficient():
    with pytest.raises(ContractError):
        character_sum(5, 5)


@pytest.mark.parametrize("p, A, B, expected", [(5, 1, 1, 8), (5, 1, 2, 4), (7, 3, 1, 12), (7, 3, 3, 4)])
def test_point_count_examples(p, A, B, expected):
    curve = CurveParams(p=p, A=A, B=B)
    assert point_count(curve) == expected
    assert point_count_exhaustive(curve) == expected
    assert curve.trace == p + 1 - expected


def test_point_count_agrees_with_exhaustive_count():
    rng = random.Random(1729)
    checked = 0
    while checked < 100:
        p = rng.choice([p for p in census_primes if p <= 101])
        A, B = rng.randrange(p), rng.randrange(p)
        if B * (A * A - 4) % p == 0:
            continue
        curve = CurveParams(p=p, A=A, B=B)
        count = point_count(curve)
        assert count == point_count_exhaustive(curve), curve
        assert count % 4 == 0, curve
        checked += 1


@pytest.mark.parametrize("p, A, B", [(5, 2, 1), (5, 3, 4), (7, 1, 0), (11, 9, 3)])
def test_singular_curves_rejected(p, A, B):
    with pytest.raises(SingularCurveError):
        CurveParams(p=p, A=A, B=B)


@pytest.mark.parametrize("p, A, B", [(3, 0, 1), (9, 0, 1), (5, 5, 1), (5, 1, -1)])
def test_bad_curve_parameters_rejected(p, A, B):
    with pytest.raises(ContractError):
        CurveParams(p=p, A=A, B=B)


def test_census_examples():
    assert trace_census(5).counts == {-2: 6, 2: 6}
    assert trace_census(7).counts == {-4: 6, 0: 18, 4: 6}
    assert trace_census(7).total == 30
    assert trace_census(7).count(2) == 0


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17])
def test_census_agrees_with_counting_each_curve(p):
    assert trace_census(p) == census_from_curves(p)


def test_census_rejects_small_or_composite_primes():
    for p in (2, 3, 9, 15):
        with pytest.raises(ContractError):
            trace_census(p)


def test_census_properties():
    for p in census_primes:
        census = trace_census(p)
        assert census.total == (p - 1) * (p - 2), p
        assert census.traces == sorted(census.traces)
        for t, count in census.counts.items():
            assert count == census.count(-t), (p, t)
            assert t * t < 4 * p, (p, t)
            assert (p + 1 - t) % 4 == 0, (p, t)


@pytest.mark.parametrize("p, t, expected", [(5, 2, 6), (5, -2, 6), (5, 1, 0), (5, 6, 0), (7, 0, 18), (7, 4, 6)])
def test_predicted_census_count_examples(cache, p, t, expected):
    assert predicted_census_count(p, t) == expected


def test_census_matches_prediction(cache):
    for p in census_primes:
        census = trace_census(p)
        top = isqrt(4 * p) + 2
        for t in range(-top, top + 1):
            predicted = predicted_census_count(p, t)
            assert predicted.is_integer()
            assert census.count(t) == predicted, (p, t)
        assert sum((predicted_census_count(p, t) for t in range(-top, top + 1)), Twelfth(0)) == census.total
