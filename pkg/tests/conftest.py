import pytest
from hypothesis import strategies as st

from ribbonpoly.arrows import ArrowPresentation, parse


@pytest.fixture
def loop():
    return parse("(e+ e+)")


@pytest.fixture
def twisted_loop():
    return parse("(e+ e-)")


@pytest.fixture
def bridge():
    return parse("(e+)(e+)")


@pytest.fixture
def theta():
    # the plane embedding: two vertices, three parallel edges, three faces
    return parse("(a+ b+ c+)(c+ b+ a+)")


@pytest.fixture
def torus_theta():
    return parse("(a+ b+ c+)(a+ b+ c+)")


@st.composite
def presentations(draw, max_edges=3):
    """Random small arrow presentations (every label exactly twice)."""
    n = draw(st.integers(min_value=1, max_value=max_edges))
    slots = 2 * n
    sizes = []
    left = slots
    while left > 0:
        s = draw(st.integers(min_value=1, max_value=left))
        sizes.append(s)
        left -= s
    order = draw(st.permutations(list(range(slots))))
    second_sign = [draw(st.booleans()) for _ in range(n)]
    arrow_at = {}
    for j in range(n):
        a, b = order[2 * j], order[2 * j + 1]
        arrow_at[a] = (f"e{j + 1}", 1)
        arrow_at[b] = (f"e{j + 1}", 1 if second_sign[j] else -1)
    circles = []
    pos = 0
    for s in sizes:
        circles.append(tuple(arrow_at[p] for p in range(pos, pos + s)))
        pos += s
    return ArrowPresentation(tuple(circles))
