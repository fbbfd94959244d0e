from hypothesis import HealthCheck, settings, strategies as st

from symfact.poly import MultiPoly

settings.register_profile(
    "ci",
    deadline=None,
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


fractions_small = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def multipolys(draw, arity=None, max_terms=4, max_exp=3):
    a = arity if arity is not None else draw(st.integers(min_value=1, max_value=3))
    n_terms = draw(st.integers(min_value=0, max_value=max_terms))
    items = []
    for _ in range(n_terms):
        exp = tuple(draw(st.integers(min_value=0, max_value=max_exp)) for _ in range(a))
        items.append((exp, draw(fractions_small)))
    return MultiPoly(a, items)


@st.composite
def multipoly_pairs(draw, max_terms=4, max_exp=3):
    a = draw(st.integers(min_value=1, max_value=3))
    return (
        draw(multipolys(arity=a, max_terms=max_terms, max_exp=max_exp)),
        draw(multipolys(arity=a, max_terms=max_terms, max_exp=max_exp)),
    )


@st.composite
def multipoly_triples(draw, max_terms=3, max_exp=2):
    a = draw(st.integers(min_value=1, max_value=3))
    return tuple(
        draw(multipolys(arity=a, max_terms=max_terms, max_exp=max_exp)) for _ in range(3)
    )


@st.composite
def points_for(draw, arity):
    return [draw(fractions_small) for _ in range(arity)]
