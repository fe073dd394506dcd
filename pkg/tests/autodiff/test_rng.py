import numpy as np

from autodiff.rng import create_generator, derive_generator, spawn_generator


def test_same_seed_gives_identical_draws():
    np.testing.assert_array_equal(create_generator(42).random(16), create_generator(42).random(16))


def test_spawned_streams_differ_by_key():
    a = spawn_generator(0, 1).random(8)
    b = spawn_generator(0, 2).random(8)
    assert not np.array_equal(a, b)
    np.testing.assert_array_equal(a, spawn_generator(0, 1).random(8))


def test_derived_generator_is_reproducible():
    a = derive_generator(create_generator(5)).normal(size=4)
    b = derive_generator(create_generator(5)).normal(size=4)
    np.testing.assert_array_equal(a, b)
