"""Hypothesis strategies for small frameworks."""
from hypothesis import strategies as st

from praaf.models import AAF, AttackEdge, PrAAF

NAMES = ["a", "b", "c", "d", "e"]

probabilities = st.sampled_from([0.1, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.75, 0.8, 0.9])


@st.composite
def aafs(draw, max_arguments: int = 5, max_attacks: int = 8) -> AAF:
    size = draw(st.integers(min_value=0, max_value=max_arguments))
    args = NAMES[:size]
    if not args:
        return AAF.create([])
    pairs = st.tuples(st.sampled_from(args), st.sampled_from(args))
    edges = draw(st.lists(pairs, max_size=max_attacks, unique=True))
    return AAF.create(args, [AttackEdge(s, t) for s, t in edges])


@st.composite
def praafs(
        draw,
        max_arguments: int = 4,
        max_probabilistic_arguments: int = 3,
        max_attacks: int = 5
) -> PrAAF:
    framework = draw(aafs(max_arguments, max_attacks))
    args = framework.sorted_args
    uncertain = draw(st.lists(
        st.sampled_from(args), max_size=max_probabilistic_arguments, unique=True
    )) if args else []
    p_args = {a: (draw(probabilities) if a in uncertain else 1) for a in args}
    p_atts = {e: draw(st.one_of(st.just(1), probabilities)) for e in sorted(framework.atts)}
    return PrAAF.create(p_args, p_atts)
