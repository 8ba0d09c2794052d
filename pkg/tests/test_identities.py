import pytest

from xclassnum.const import LISTING_PRIME_BOUND
from xclassnum.errors import ContractError
from xclassnum.exactmath import Twelfth, primes_below
from xclassnum.hurwitz import HurwitzCache
from xclassnum.identities import (
    CHECKERS,
    IdentityKind,
    IdentityReport,
    census_theorem1_sum,
    check_classical,
    check_lemma1,
    check_mass_formula,
    check_reindex,
    check_theorem1,
    check_vanishing,
    classical_sum,
    listing_sum,
    theorem1_sum,
    theorem1_terms,
)
from xclassnum.qforms import HwConvention, HwOptions

census_primes = [p for p in primes_below(300) if p > 3]


@pytest.fixture
def cache():
    with HurwitzCache() as fresh:
        fresh.prime(8000)
        yield fresh


def test_theorem1_terms():
    assert theorem1_terms(5) == [
        (-2, Twelfth(0)), (-1, Twelfth(6)), (0, Twelfth(0)), (1, Twelfth(6)), (2, Twelfth(0))
    ]


@pytest.mark.parametrize("p, expected", [(2, Twelfth(0)), (3, Twelfth(4)), (5, Twelfth(12)),
                                         (7, Twelfth(20)), (13, Twelfth(44))])
def test_theorem1_sum_examples(p, expected):
    assert theorem1_sum(p) == expected
    assert theorem1_sum(p, cache=None) == expected


def test_theorem1_rejects_non_primes():
    for n in (1, 4, 9, 0, -7):
        with pytest.raises(ContractError):
            theorem1_sum(n)


def test_listing_sum_agrees(cache):
    for p in primes_below(2000):
        assert listing_sum(p) == theorem1_sum(p), p


@pytest.mark.parametrize("p, expected", [(2, 4), (3, 6), (5, 10), (7, 14)])
def test_classical_sum_examples(p, expected):
    assert classical_sum(p) == expected


def test_classical_holds_below_ten_thousand():
    with HurwitzCache() as cache:
        cache.prime(4 * 10 ** 4)
        primes = primes_below(10 ** 4)
        failures = [report for report in map(check_classical, primes) if not report.passed]

    assert len(primes) == 1229
    assert not failures, failures[:5]


def test_theorem1_holds_for_first_ten_thousand_primes():
    with HurwitzCache() as cache:
        cache.prime(LISTING_PRIME_BOUND)
        primes = primes_below(LISTING_PRIME_BOUND)
        failures = [report for report in map(check_theorem1, primes) if not report.passed]

    assert len(primes) == 10000
    assert not failures, failures[:5]


def test_theorem1_report():
    report = check_theorem1(13)
    assert report == IdentityReport(
        prime=13, identity=IdentityKind.theorem1, lhs=Twelfth(44), rhs=Twelfth(44)
    )
    assert report.passed
    # (p - 2)/3 is only whole for p ≡ 2 (mod 3).
    assert not report.rhs.is_integer()
    assert check_theorem1(11).rhs == 3


def test_census_identities_hold(cache):
    for p in census_primes:
        for identity in (IdentityKind.lemma1_census, IdentityKind.mass_formula,
                         IdentityKind.reindex, IdentityKind.vanishing):
            report = CHECKERS[identity](p)
            assert report.passed, report
            assert report.mismatches == ()


def test_reindex_and_census_agree_with_theorem1(cache):
    for p in census_primes:
        reindexed = check_reindex(p)
        assert reindexed.lhs == reindexed.rhs == theorem1_sum(p) == census_theorem1_sum(p), p


@pytest.mark.parametrize("p, lhs", [(5, Twelfth(12)), (7, Twelfth(20)), (11, Twelfth(36)), (13, Twelfth(44))])
def test_reindex_examples(p, lhs):
    report = check_reindex(p)
    assert report.lhs == report.rhs == lhs


def test_lemma1_and_mass_examples():
    assert check_lemma1(5).lhs == 12
    assert check_lemma1(7).rhs == 30
    assert check_mass_formula(13).lhs == 12 * 11
    assert check_vanishing(13).lhs == 0


@pytest.mark.parametrize("checker", [check_lemma1, check_mass_formula, check_reindex, check_vanishing])
def test_census_identities_need_prime_above_three(checker):
    for p in (2, 3, 25):
        with pytest.raises(ContractError):
            checker(p)
    with pytest.raises(ContractError):
        census_theorem1_sum(3)


def test_min_prime():
    assert IdentityKind.theorem1.min_prime == 2
    assert IdentityKind.classical2p.min_prime == 2
    assert IdentityKind.lemma1_census.min_prime == 5
    assert set(CHECKERS) == set(IdentityKind)


def test_wrong_convention_is_detected():
    with HwOptions(convention=HwConvention.root_order):
        assert not check_theorem1(2).passed
        vanishing = check_vanishing(5)
        assert not vanishing.passed
        # Under root-order, h_w(-1) becomes h(-4) and h_w(-5) becomes h(-20).
        assert vanishing.mismatches == (
            "t=-2: H_w(-1) = 1", "t=0: H_w(-5) = 2", "t=2: H_w(-1) = 1"
        )

    assert check_theorem1(2).passed
    assert check_vanishing(5).passed


def test_report_with_mismatches_fails():
    report = IdentityReport(
        prime=5, identity=IdentityKind.lemma1_census, lhs=Twelfth(144), rhs=Twelfth(144),
        mismatches=("t=2: census 5 != predicted 6",),
    )
    assert not report.passed
    assert not IdentityReport(prime=5, identity=IdentityKind.theorem1, lhs=Twelfth(1), rhs=Twelfth(0)).passed
