import pytest
from hypothesis import strategies as st

from comp_algebra import Composition, comp
from lco import LcoForest, LcoVertex, Position
from path_core import DyckPath

# UUUDDUUDDD · UD · UUUDUDUUDDDUUDUDDUDD, a 16-path whose forest has three trees
FIGURE_PATH = "UUUDDUUDDD" + "UD" + "UUUDUDUUDDDUUDUDDUDD"


@st.composite
def dyck_paths(draw, min_n: int = 0, max_n: int = 40) -> DyckPath:
    """Fold a shuffled balanced word onto its absolute value."""
    n = draw(st.integers(min_n, max_n))
    word = draw(st.permutations(["U"] * n + ["D"] * n))
    h, out = 0, []
    for ch in word:
        nh = h + (1 if ch == "U" else -1)
        out.append("U" if abs(nh) > abs(h) else "D")
        h = nh
    return DyckPath("".join(out))


def compositions(max_entry: int = 6, max_len: int = 8):
    return st.lists(st.integers(1, max_entry), min_size=1, max_size=max_len).map(
        lambda e: Composition(tuple(e)))


def leaf(*entries: int) -> LcoVertex:
    return LcoVertex(comp(*entries))


@pytest.fixture
def figure_forest() -> LcoForest:
    first = LcoVertex(comp(1), None, (leaf(1, 1), leaf(1, 1)))
    third = LcoVertex(comp(1, 1), Position.BOT, (
        LcoVertex(comp(1), None, (leaf(1), leaf(1), leaf(1, 1))),
        leaf(2, 1),
    ))
    return LcoForest((first, leaf(1), third))
