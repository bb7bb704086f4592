from collections import Counter

import numpy as np
import pytest

from ppd_recognizer.classical_groups import Family, GroupCase, standard_generators
from ppd_recognizer.config import SamplerConfig
from ppd_recognizer.errors import DimensionMismatchError
from ppd_recognizer.matrices import identity, mat_det, mat_is_identity, mat_mul, mat_power
from ppd_recognizer.oracle import enumerate_group
from ppd_recognizer.random_elements import sampler_init, sampler_next


@pytest.fixture(scope="module")
def sl3_2_generators(gf2):
    return standard_generators(GroupCase(Family.LINEAR, 3, gf2))


def draw_keys(generators, seed, count, **kwargs):
    state = sampler_init(generators, seed, **kwargs)
    keys = []
    for _ in range(count):
        g, state = sampler_next(state)
        keys.append(g.key())
    return keys


def test_same_seed_same_sequence(sl3_2_generators):
    assert draw_keys(sl3_2_generators, 7, 50) == draw_keys(sl3_2_generators, 7, 50)


def test_different_seeds_diverge(sl3_2_generators):
    assert draw_keys(sl3_2_generators, 7, 50) != draw_keys(sl3_2_generators, 8, 50)


def test_draws_stay_in_the_group(sl3_2_generators, gl3_2):
    members = gl3_2.keys()
    for key in draw_keys(sl3_2_generators, 3, 200, burn_in=20):
        assert key in members


def test_slot_count_and_burn_in(sl3_2_generators):
    state = sampler_init(sl3_2_generators, 0, m=4, burn_in=0)
    assert len(state.slots) == max(10, len(sl3_2_generators) + 2)
    assert state.steps_taken == 0
    state = sampler_init(sl3_2_generators, 0, config=SamplerConfig(slots=12, burn_in=30))
    assert len(state.slots) == 12
    assert state.steps_taken == 30
    assert state.describe() == "rng=PCG64 seed=0 slots=12"


def test_inverses_track_slots(sl3_2_generators):
    state = sampler_init(sl3_2_generators, 11, burn_in=100)
    for _ in range(25):
        _, state = sampler_next(state)
    for slot, inverse in zip(state.slots, state.inverses):
        assert mat_is_identity(mat_mul(slot, inverse))


def test_empty_generators():
    with pytest.raises(DimensionMismatchError):
        sampler_init([], 0)


def test_seed_sequence_is_accepted(sl3_2_generators):
    sequence = np.random.SeedSequence([5, 1])
    assert draw_keys(sl3_2_generators, sequence, 10) == draw_keys(
        sl3_2_generators, np.random.SeedSequence([5, 1]), 10
    )


def test_distribution_on_gl_2_2_is_roughly_uniform(gf2):
    generators = standard_generators(GroupCase(Family.LINEAR, 2, gf2))
    counts = Counter(draw_keys(generators, 2024, 3000))
    assert len(counts) == 6
    assert all(350 <= n <= 650 for n in counts.values())


def test_identity_generator_only_yields_identity(gf3):
    state = sampler_init([identity(gf3, 2)], 5)
    for _ in range(20):
        g, state = sampler_next(state)
        assert mat_is_identity(g)


def test_cyclic_generator_gives_its_powers(gf2, companion_t3_t_1):
    powers = {mat_power(companion_t3_t_1, k).key() for k in range(7)}
    for key in draw_keys([companion_t3_t_1], 13, 100):
        assert key in powers


def test_sl_2_3_samples_have_determinant_one(gf3):
    generators = standard_generators(GroupCase(Family.LINEAR, 2, gf3))
    state = sampler_init(generators, 1)
    for _ in range(2000):
        g, state = sampler_next(state)
        assert int(mat_det(g)) == 1


@pytest.mark.slow
def test_sl_2_5_total_variation_to_uniform(gf5):
    generators = standard_generators(GroupCase(Family.LINEAR, 2, gf5))
    group = enumerate_group(generators)
    assert group.order == 120
    counts = Counter(draw_keys(generators, 7, 5000))
    assert set(counts) <= group.keys()
    distance = 0.5 * sum(abs(counts.get(key, 0) / 5000 - 1 / 120) for key in group.keys())
    assert distance < 0.1
