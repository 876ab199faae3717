"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from hpcc import GeneratorParams, generate

DENSITIES = (0.0, 0.3, 0.7, 1.0)


def instances(min_n=4, max_n=9, densities=DENSITIES, max_seed=5000):
    """Random embedded instances via the seeded generator."""
    return st.builds(
        lambda n, d, seed: generate(GeneratorParams(n=n, chord_density=d, seed=seed)),
        st.integers(min_value=min_n, max_value=max_n),
        st.sampled_from(densities),
        st.integers(min_value=0, max_value=max_seed),
    )
