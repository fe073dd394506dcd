import numpy as np


def create_generator(seed: int) -> np.random.Generator:
    """Counter-based Philox stream; identical seeds give bit-identical draws."""
    return np.random.Generator(np.random.Philox(seed))


def spawn_generator(seed: int, *keys: int) -> np.random.Generator:
    """Independent stream derived from (seed, *keys), e.g. one per clip or per parameter."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, *keys])))


def derive_generator(rng: np.random.Generator) -> np.random.Generator:
    """Child stream seeded from a draw of rng, so sibling components stay independent."""
    return create_generator(int(rng.integers(0, 2**63 - 1)))
