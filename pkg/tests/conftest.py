import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from paritycount.graph import Colouring, Graph  # noqa: E402


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def coloured_graphs(draw, k: int, max_n: int = 9) -> tuple[Graph, Colouring]:
    g = draw(graphs(min_n=1, max_n=max_n))
    colours = draw(st.lists(st.integers(1, k), min_size=g.n, max_size=g.n))
    return g, Colouring(tuple(colours), k)


@pytest.fixture
def triangle_file(tmp_path):
    p = tmp_path / "triangle.txt"
    p.write_text("3 3\n0 1\n1 2\n0 2\n")
    return p
