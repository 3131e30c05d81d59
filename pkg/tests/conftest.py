"""Shared strategies: weights on the doubled lattice, dominant weights, powers."""

from hypothesis import strategies as st

from b2tensor import WEYL_GROUP, Weight


def weights(span: int = 12):
    """Arbitrary lattice weights with doubled coordinates in [-span, span]."""

    def build(d1, d2, half):
        return Weight(2 * d1 + half, 2 * d2 + half)

    half_span = span // 2
    return st.builds(
        build,
        st.integers(-half_span, half_span),
        st.integers(-half_span, half_span),
        st.sampled_from((0, 1)),
    )


def dominant_weights(span: int = 12):
    return weights(span).map(
        lambda w: Weight(max(abs(w.d1), abs(w.d2)), min(abs(w.d1), abs(w.d2)))
    )


def weyl_elements():
    return st.sampled_from(WEYL_GROUP)


def small_powers(top: int = 6):
    return st.integers(0, top)
