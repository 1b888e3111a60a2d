from math import comb

import pytest
from sympy import Rational

from src.config import Config
from src.engine import BFunctionEngine
from src.factored import FactoredBPoly, divides, is_symmetric_about, root_extrema
from src.partitions import IntegerPartition, integer_partitions

B_XI_3 = FactoredBPoly({'-2/3': 1, -1: 2, '-4/3': 1})
B_XI_4 = '(s + 1/2) (s + 2/3)^2 (s + 5/6) (s + 1)^3 (s + 7/6) (s + 4/3)^2 (s + 3/2)'

LOCAL_FIXTURE = [
    ([5, 5, 7], '(s + 1)'),
    ([1, 2, 3], '1'),
    ([0], '1'),
    ([0, 0], '(s + 1)'),
    ([0, 0, 0], '(s + 2/3) (s + 1)^2 (s + 4/3)'),
    (['1/2', '1/2', 3, 3], '(s + 1)^2'),
    ([7, 1, 7], '(s + 1)'),
    ([2, 2, 2, 9], '(s + 2/3) (s + 1)^2 (s + 4/3)'),
    ([1, 2, 1, 2, 1], '(s + 2/3) (s + 1)^3 (s + 4/3)'),
    ([0, 1, 2, 3, 4], '1'),
    (['-1/3', '-2/6'], '(s + 1)'),
    ([4, 4, 4, 4], B_XI_4),
    ([4, 4, 4, 4, 5], B_XI_4),
    ([3, 1, 3, 1, 3, 1], '(s + 2/3)^2 (s + 1)^4 (s + 4/3)^2'),
    ([1, 1, 2, 2, 3, 3], '(s + 1)^3'),
    ([9, 8, 9], '(s + 1)'),
    ([0, 0, 1, 1, 1], '(s + 2/3) (s + 1)^3 (s + 4/3)'),
    ([6, 5, 4, 3, 2, 1], '1'),
    ([5, 5, 6, 6, 7, 7, 8], '(s + 1)^3'),
    (['1/7', 0, '2/14'], '(s + 1)'),
]


def test_small_values(engine):
    assert engine.b_xi(0).is_one()
    assert engine.b_xi(1).is_one()
    assert engine.b_xi(2) == FactoredBPoly([-1])
    assert engine.b_xi(3) == B_XI_3
    assert str(engine.b_xi(3)) == '(s + 2/3) (s + 1)^2 (s + 4/3)'


def test_b_xi_4(engine):
    expected = FactoredBPoly({'-1/2': 1, '-2/3': 2, '-5/6': 1, -1: 3, '-7/6': 1, '-4/3': 2, '-3/2': 1})
    assert engine.b_xi(4) == expected
    assert engine.b_xi(4).degree == 11


def test_negative_n_rejected(engine):
    with pytest.raises(ValueError):
        engine.b_xi(-1)


def test_memo_hits(engine):
    engine.b_xi(5)
    hits = engine.cache_hits
    engine.b_xi(5)
    assert engine.cache_hits == hits + 1
    assert set(engine.memo) >= {1, 2, 3, 4, 5}
    assert 0 not in engine.memo


def test_seeded_cache_matches_fresh():
    fresh = BFunctionEngine()
    seeded = BFunctionEngine(cache=fresh.memo)
    fresh.b_xi(6)
    seeded_again = BFunctionEngine(cache=fresh.memo)
    assert seeded_again.b_xi(6) == fresh.b_xi(6) == seeded.b_xi(6)


def test_b_partition(engine):
    assert engine.b_partition(IntegerPartition((2, 2))) == FactoredBPoly({-1: 2})
    assert engine.b_partition(IntegerPartition((3, 2))) == FactoredBPoly({'-2/3': 1, -1: 3, '-4/3': 1})


@pytest.mark.parametrize('point, expected', LOCAL_FIXTURE)
def test_local_b_fixture(engine, point, expected):
    assert str(engine.local_b(point)) == expected


def test_local_b_at_origin_is_global(engine):
    assert engine.local_b([0, 0, 0, 0]) == engine.b_xi(4)


def test_blowup_b(engine):
    assert engine.blowup_b(3) == FactoredBPoly({'-1/3': 1, '-2/3': 1, -1: 2})
    with pytest.raises(ValueError):
        engine.blowup_b(1)


def test_upper_bound_b(engine):
    assert engine.upper_bound_b(3) == FactoredBPoly({'-2/3': 1, -1: 2, '-4/3': 1, -2: 1})


@pytest.mark.parametrize('n', range(2, 9))
def test_sandwich(engine, n):
    assert divides(engine.b_xi(n), engine.upper_bound_b(n))
    assert engine.kashiwara_cover(n, 5, 200) is not None


def test_kashiwara_cover_values(engine):
    assert engine.kashiwara_cover(2) == (0, 1)
    assert engine.kashiwara_cover(3, 5, 200) == (0, 4)
    assert engine.kashiwara_cover(4, max_m=2) is None


def test_blowup_covers(engine):
    assert engine.blowup_cover(3) == 4
    assert engine.blowup_shift_cover(3) == 1
    assert engine.blowup_shift_cover(3, max_n=0) is None


@pytest.mark.parametrize('n', range(2, 11))
def test_symmetry_about_minus_one(engine, n):
    assert is_symmetric_about(engine.b_xi(n), -1)


@pytest.mark.parametrize('n', range(2, 11))
def test_largest_root_is_minus_two_over_n(engine, n):
    assert root_extrema(engine.b_xi(n))[0] == Rational(-2, n) == -Rational(n - 1, comb(n, 2))


@pytest.mark.parametrize('n', range(2, 11))
def test_partition_divisibility(engine, n):
    b = engine.b_xi(n)
    assert all(divides(engine.b_partition(lam), b) for lam in integer_partitions(n))


def test_uses_config_bounds():
    engine = BFunctionEngine(Config(kashiwara_max_n=0, kashiwara_max_m=3))
    assert engine.kashiwara_cover(3) is None
