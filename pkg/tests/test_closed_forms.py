import math
from fractions import Fraction

import pytest

from swlab import closed_forms as cf
from swlab import generators as gen
from swlab.graph import alpha_array, mean_distance, median_distance, summary


def test_star_mean():
    assert cf.star_mean(5) == Fraction(8, 5)
    assert cf.star_mean(2) == 1
    assert cf.star_mean(100) == Fraction(198, 100) == mean_distance(alpha_array(gen.star(100)))
    with pytest.raises(cf.OracleDomainError):
        cf.star_mean(1)


@pytest.mark.parametrize("n, expected", [(2, 1), (3, 1), (4, 1.5), (5, 2), (50, 2)])
def test_star_median(n, expected):
    assert cf.star_median(n) == expected
    assert median_distance(alpha_array(gen.star(n))) == expected


def test_chain_stats():
    assert cf.chain_stats(8).mean == 3
    s = cf.chain_stats(2)
    assert (s.diameter, s.mean, s.median_exact) == (1, 1, 1)
    big = cf.chain_stats(10 ** 4)
    assert 0.283 <= big.median_exact / 10 ** 4 <= 0.303
    assert big.median_approx / 10 ** 4 == pytest.approx(1 - math.sqrt(2) / 2)


def test_chain_alpha_matches_bfs():
    for n in range(2, 40):
        assert cf.chain_alpha(n) == alpha_array(gen.chain(n))


def test_chain_median_ratio_converges():
    errs = [abs(cf.chain_stats(n).median_exact / n - (1 - math.sqrt(2) / 2)) for n in (10, 100, 1000, 10000)]
    assert errs == sorted(errs, reverse=True)


def test_chain_star_mean():
    assert cf.chain_star_mean(2, 2) == Fraction(3, 2)
    assert cf.chain_star_mean(1, 3) == cf.star_mean(4) == Fraction(3, 2)
    assert cf.chain_star_mean(4, 0) == Fraction(5, 3)
    with pytest.raises(cf.OracleDomainError):
        cf.chain_star_mean(1, 0)


def test_chain_star_total_decomposition():
    for p in range(1, 12):
        for q in range(0, 12):
            if p + q < 2:
                continue
            a = alpha_array(gen.chain_star(p, q))
            assert cf.chain_star_total(p, q) == sum(j * c for j, c in enumerate(a.alpha, 1))


def test_chain_star_mean_degenerations():
    for n in range(2, 60):
        assert cf.chain_star_mean(1, n - 1) == cf.star_mean(n)
        assert cf.chain_star_mean(n, 0) == Fraction(n + 1, 3)


def test_median_bound():
    assert cf.chain_star_median_bound(4, 12)
    assert not any(cf.chain_star_median_bound(p, p) for p in range(1, 200))
    assert not cf.chain_star_median_bound(5, 0)


def test_median_bound_implies_median_at_most_two():
    for n in range(2, 201):
        for p in range(1, n + 1):
            q = n - p
            if cf.chain_star_median_bound(p, q):
                assert median_distance(alpha_array(gen.chain_star(p, q))) <= 2


def test_sqrt_family_mean_tends_to_three():
    gaps = []
    for n in (10 ** 2, 10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6):
        p = math.isqrt(n)
        gaps.append(3 - cf.chain_star_mean(p, n - p))
    assert all(g > 0 for g in gaps)
    assert gaps == sorted(gaps, reverse=True)


def test_layered_diameter():
    assert cf.layered_diameter(1) == 2
    assert cf.layered_diameter(7) == 14
    g = gen.layered(gen.LayeredSpec("explicit", 3, values=(2, 3, 2)))
    assert summary(g).diameter == cf.layered_diameter(3) == 6


def test_er_prediction():
    assert cf.er_mean_prediction(4096, 6) == pytest.approx(4.642, abs=1e-3)
    assert cf.er_mean_prediction(math.e, math.e) == pytest.approx(1)
    assert cf.er_mean_prediction(10 ** 6, 10 ** 6 - 1) == pytest.approx(1, abs=1e-6)
    with pytest.raises(cf.OracleDomainError):
        cf.er_mean_prediction(100, 1)


def test_web_prediction():
    assert cf.web_mean_prediction(1) == pytest.approx(0.35)
    assert cf.web_mean_prediction(10) == pytest.approx(2.35)
    assert 18.1 <= cf.web_mean_prediction(8.1e8) <= 18.3
    assert cf.web_mean_prediction(8e8) == pytest.approx(18.156, abs=1e-3)
