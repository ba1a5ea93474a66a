from collections import Counter
from fractions import Fraction
from math import factorial

import pytest

from conftest import ALPHAS
from younglattice.diagrams import Partition
from younglattice.growth import (
    GrowthPath,
    GrowthSampler,
    PlancherelAlpha,
    ZMeasure,
    central_value,
    centrality_check,
    iter_paths,
    kappa_product,
    level_distribution,
    path_probability,
    sample_path,
    sample_paths,
    step_dist,
    total_variation,
)
from younglattice.jack import JackContext, ZMeasureError
from younglattice.oracle import count_syt, enumerate_partitions

F = Fraction


def test_step_dist_examples():
    assert step_dist(PlancherelAlpha(1), Partition((2, 1))).by_label() == \
        {(3, 1): F(3, 8), (2, 2): F(1, 4), (2, 1, 1): F(3, 8)}
    for a in ALPHAS:
        assert step_dist(PlancherelAlpha(a), Partition((1,))).by_label() == \
            {(2,): 1 / (1 + a), (1, 1): a / (1 + a)}
    assert step_dist(ZMeasure(1, 3, 7), Partition(())).by_label() == {(1,): 1}


def test_step_dist_propagates_positivity_errors():
    with pytest.raises(ZMeasureError):
        step_dist(ZMeasure(1, 0, -4), Partition((1,)))


def test_chain_validation():
    with pytest.raises(ValueError):
        PlancherelAlpha(0)
    with pytest.raises(ValueError):
        ZMeasure(-1, 0, 1)
    assert ZMeasure("1/2", "-1", "3") == ZMeasure(F(1, 2), -1, 3)


def test_growth_path_validation():
    path = GrowthPath(((), (1,), (1, 1), (2, 1)))
    assert path.n == 3 and path.shape == (2, 1)
    assert path.tableau() == [[1, 3], [2]]
    with pytest.raises(ValueError):
        GrowthPath(((1,), (2,)))
    with pytest.raises(ValueError):
        GrowthPath(((), (1,), (3,)))


def test_sample_path_small():
    assert sample_path(PlancherelAlpha(1), 0, seed=1).diagrams == ((),)
    for seed in range(20):
        assert sample_path(PlancherelAlpha(2), 1, seed).diagrams == ((), (1,))


def test_sampling_is_deterministic_per_seed():
    chain = ZMeasure(2, 0, 1)
    a = [p.diagrams for p in sample_paths(chain, 6, 50, seed=2024)]
    b = [p.diagrams for p in sample_paths(chain, 6, 50, seed=2024)]
    c = [p.diagrams for p in sample_paths(chain, 6, 50, seed=2025)]
    assert a == b and a != c
    assert all(GrowthPath(d).n == 6 for d in a)


def test_sampler_inverts_exact_cdf():
    sampler = GrowthSampler(PlancherelAlpha(1), seed=0)
    thresholds, targets = sampler._table(Partition((2, 1)))
    scale = 2 ** 128
    # CDF 3/8, 5/8, 1 on (3,1), (2,2), (2,1,1) sorted by content -2, 0, 2 -> (2,1,1), (2,2), (3,1)
    assert targets == [(2, 1, 1), (2, 2), (3, 1)]
    assert thresholds == [3 * scale // 8, 5 * scale // 8, scale]


def test_sampling_frequency_of_square():
    # Plancherel level 4: dim(2,2)^2 / 4! = 1/6
    count = 20_000
    paths = sample_paths(PlancherelAlpha(1), 4, count, seed=7)
    freq = sum(1 for p in paths if p.shape == (2, 2)) / count
    sigma = (F(1, 6) * F(5, 6) / count) ** 0.5
    assert abs(freq - 1 / 6) < 3 * float(sigma)


def test_level_distribution_examples():
    assert level_distribution(PlancherelAlpha(1), 0).weights == {(): 1}
    assert level_distribution(ZMeasure(2, 1, 1), 0).weights == {(): 1}
    assert level_distribution(PlancherelAlpha(1), 3).weights == {(3,): F(1, 6), (2, 1): F(2, 3), (1, 1, 1): F(1, 6)}
    for a in ALPHAS:
        assert level_distribution(PlancherelAlpha(a), 2).weights == {(2,): 1 / (a + 1), (1, 1): a / (a + 1)}


def test_level_distribution_bounds():
    with pytest.raises(ValueError):
        level_distribution(PlancherelAlpha(1), 31)
    with pytest.raises(ValueError):
        level_distribution(PlancherelAlpha(1), -1)


@pytest.mark.parametrize("chain", [PlancherelAlpha(1), PlancherelAlpha(F(1, 3)), ZMeasure(1, 1, 1),
                                   ZMeasure(F(5, 2), -2, 3)])
def test_level_distributions_sum_to_one(chain):
    for n in range(9):
        weights = level_distribution(chain, n).weights
        assert sum(weights.values()) == 1 and all(w > 0 for w in weights.values())
        assert set(weights) == set(enumerate_partitions(n))


def test_z_measure_level_matches_closed_form():
    # path probability = central value * prod(kappa) and summing over paths gives central value * dim_alpha
    chain = ZMeasure(F(1, 2), 1, 2)
    ctx = JackContext(F(1, 2))
    for n in range(7):
        weights = level_distribution(chain, n).weights
        for lam, w in weights.items():
            assert w == central_value(chain, lam) * ctx.dim_recurrent(lam)


def test_path_probability_examples():
    assert path_probability(PlancherelAlpha(1), [(), (1,)]) == 1
    chain = PlancherelAlpha(1)
    probs = [path_probability(chain, t) for t in iter_paths(Partition((2, 1)))]
    assert len(probs) == 2 and probs[0] == probs[1] == F(1, 3)
    assert sum(probs) == F(2, 3)
    z = ZMeasure(1, F(1, 2), 2)
    zp = [path_probability(z, t) for t in iter_paths(Partition((2, 1)))]
    assert zp[0] == zp[1]


def test_path_probability_plancherel_is_dim_over_factorial():
    chain = PlancherelAlpha(1)
    for n in range(6):
        for lam in enumerate_partitions(n):
            for t in iter_paths(lam):
                assert path_probability(chain, t) == F(count_syt(lam), factorial(n))


def test_kappa_normalised_path_probability_is_phi():
    chain = PlancherelAlpha(F(5, 2))
    for t in iter_paths(Partition((3, 2, 1))):
        assert path_probability(chain, t) / kappa_product(chain, t) == chain.ctx.phi((3, 2, 1))


def test_iter_paths_counts_tableaux():
    for n in range(7):
        for lam in enumerate_partitions(n):
            assert sum(1 for _ in iter_paths(lam)) == count_syt(lam)


@pytest.mark.parametrize("chain", [PlancherelAlpha(1), ZMeasure(2, 0, 1)])
def test_centrality_examples(chain):
    report = centrality_check(chain, 4)
    assert report.passed
    assert len(report.entries) == sum(len(enumerate_partitions(n)) for n in range(5))
    assert centrality_check(chain, 1).passed


def test_centrality_reports_unreachable_diagrams():
    # factor c^2 - 1 vanishes at c = -1, one box below the first
    report = centrality_check(ZMeasure(2, 0, -1), 3)
    assert not report.passed
    assert any(e.error and "-1" in e.error for e in report.failures)


def test_centrality_bound():
    with pytest.raises(ValueError):
        centrality_check(PlancherelAlpha(1), 8)


def test_total_variation():
    assert total_variation({"a": F(1)}, {"b": F(1)}) == 1
    assert total_variation({"a": F(1, 2), "b": F(1, 2)}, {"a": F(1, 4), "b": F(3, 4)}) == F(1, 4)
    counts = Counter({"a": 3})
    assert total_variation({k: F(v, 3) for k, v in counts.items()}, {"a": 1}) == 0
