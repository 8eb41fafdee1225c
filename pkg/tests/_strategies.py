from hypothesis import strategies as st

from lrstretch import make_partition


@st.composite
def partitions(draw, k, max_part=4):
    parts = sorted(draw(st.lists(st.integers(0, max_part), min_size=k, max_size=k)), reverse=True)
    return make_partition(parts, k)


@st.composite
def triples(draw, k, max_part=3):
    """(nu, lam, mu) with |nu| = |lam| + |mu|: nu sorts lam + (permuted mu)."""
    lam = draw(partitions(k, max_part))
    mu = draw(partitions(k, max_part))
    perm = draw(st.permutations(range(k)))
    nu = sorted((lam[i] + mu[perm[i]] for i in range(k)), reverse=True)
    return make_partition(nu, k), lam, mu
