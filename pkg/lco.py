import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from comp_algebra import (Composition, bits, composition_to_path, f_comp,
                          path_to_composition)
from errors import (BotWithUnitSkeleton, ContainsDUU, InvalidBody, InvalidForest,
                    NoDUU, NotPrimitive)
from path_core import DyckPath, components, heights, is_primitive, matching

UNIT = DyckPath("UD")


# =========================
# ====== DATA TYPES =======
# =========================
class Position(str, Enum):
    TOP = "top"
    BOT = "bot"

    def flipped(self) -> "Position":
        return Position.BOT if self is Position.TOP else Position.TOP


@dataclass(frozen=True)
class Decomposition:
    skeleton: DyckPath
    body: DyckPath
    pos: Position = Position.TOP


@dataclass(frozen=True)
class LcoVertex:
    label: Composition
    color: Optional[Position] = None
    children: Tuple["LcoVertex", ...] = field(default_factory=tuple)

    @property
    def is_leaf(self) -> bool:
        return not self.children


@dataclass(frozen=True)
class LcoForest:
    trees: Tuple[LcoVertex, ...] = field(default_factory=tuple)

    @property
    def size(self) -> int:
        return sum(v.label.size for v in iter_vertices(self))


def iter_vertices(F: LcoForest):
    stack = list(reversed(F.trees))
    while stack:
        v = stack.pop()
        yield v
        stack.extend(reversed(v.children))


# =========================
# ====== SKELETON/BODY ====
# =========================
def first_peak_upstep(S: DyckPath) -> int:
    return S.steps.index("UD")


def decompose(P: DyckPath) -> Decomposition:
    if not is_primitive(P):
        raise NotPrimitive(f"{P.steps or 'ε'} is not primitive")
    s = P.steps
    if "DUU" not in s:
        raise NoDUU(f"{s} avoids DUU")
    hs = heights(P)
    # rightmost of the lowest DUU valleys
    j = min((j for j in range(len(s) - 2) if s.startswith("DUU", j)), key=lambda j: (hs[j + 1], -j))
    h = hs[j + 1]
    end = matching(s)[j + 1] + 1
    body = DyckPath(s[h:end])
    skeleton = DyckPath(s[:h] + s[end:])
    f = first_peak_upstep(skeleton)
    if h == f + 1:
        pos = Position.TOP
    elif h == f:
        pos = Position.BOT
    else:
        raise AssertionError(f"body of {s} sits at {h}, first peak upstep at {f}")
    return Decomposition(skeleton, body, pos)


def _check_body(B: DyckPath) -> None:
    if len(components(B)) < 2:
        raise InvalidBody(f"body {B.steps} must have at least two components")
    if not B.steps.endswith("DD"):
        raise InvalidBody(f"body {B.steps} must end DD")


def recompose(S: DyckPath, B: DyckPath, pos: Position = Position.TOP) -> DyckPath:
    if not is_primitive(S):
        raise NotPrimitive(f"skeleton {S.steps or 'ε'} is not primitive")
    if "DUU" in S.steps:
        raise ContainsDUU(f"skeleton {S.steps} contains DUU")
    if not B.steps:
        return S
    _check_body(B)
    pos = Position(pos)
    if pos is Position.BOT and S == UNIT:
        raise BotWithUnitSkeleton("skeleton UD only takes its body on top")
    f = first_peak_upstep(S)
    at = f + 1 if pos is Position.TOP else f
    return DyckPath(S.steps[:at] + B.steps + S.steps[at:])


# =========================
# ====== FOREST CODEC =====
# =========================
def _tree_of(C: DyckPath) -> LcoVertex:
    if "DUU" not in C.steps:
        return LcoVertex(path_to_composition(C))
    d = decompose(C)
    label = path_to_composition(d.skeleton)
    kids = tuple(_tree_of(K) for K in components(d.body))
    return LcoVertex(label, d.pos if label.size >= 2 else None, kids)


def path_to_forest(P: DyckPath) -> LcoForest:
    return LcoForest(tuple(_tree_of(C) for C in components(P)))


def _check_vertex(v: LcoVertex, where: str) -> None:
    if not v.label.ends_with_one:
        raise InvalidForest(where, f"label {v.label} does not end in 1")
    if len(v.children) == 1:
        raise InvalidForest(where, "vertex has exactly one child")
    needs_color = bool(v.children) and v.label.size >= 2
    if needs_color and v.color is None:
        raise InvalidForest(where, "vertex with children and label size >= 2 must be colored")
    if not needs_color and v.color is not None:
        raise InvalidForest(where, "only vertices with children and label size >= 2 carry a color")
    if v.children and v.children[-1].is_leaf and v.children[-1].label.size < 2:
        raise InvalidForest(f"{where}.children[{len(v.children) - 1}]",
                            "rightmost leaf child needs label size >= 2")
    for i, child in enumerate(v.children):
        _check_vertex(child, f"{where}.children[{i}]")


def validate_forest(F: LcoForest) -> None:
    for i, root in enumerate(F.trees):
        _check_vertex(root, f"trees[{i}]")


def _path_of(v: LcoVertex) -> DyckPath:
    S = composition_to_path(v.label)
    if not v.children:
        return S
    body = DyckPath("".join(_path_of(c).steps for c in v.children))
    return recompose(S, body, v.color or Position.TOP)


def forest_to_path(F: LcoForest) -> DyckPath:
    validate_forest(F)
    return DyckPath("".join(_path_of(t).steps for t in F.trees))


# =========================
# ====== F ON FORESTS =====
# =========================
def _f_vertex(v: LcoVertex) -> LcoVertex:
    color = v.color
    if color is not None and v.label.length % 2 == 0:
        color = color.flipped()
    return LcoVertex(f_comp(v.label), color, tuple(_f_vertex(c) for c in v.children))


def f_forest(F: LcoForest) -> LcoForest:
    validate_forest(F)
    return LcoForest(tuple(_f_vertex(t) for t in F.trees))


def vertex_exponent(v: LcoVertex) -> int:
    s = v.label.size
    if v.color is not None:
        return bits(s - 1)
    return bits(max(s - 2, 0))


def predict_orbit_exponent(F: LcoForest) -> int:
    """log2 of the F-orbit length of the encoded path."""
    validate_forest(F)
    return max((vertex_exponent(v) for v in iter_vertices(F)), default=0)


def leaf_count(F: LcoForest) -> int:
    """Leaves once all roots hang from a new common root: every childless vertex."""
    return sum(1 for v in iter_vertices(F) if v.is_leaf)


# =========================
# ====== JSON =============
# =========================
def _vertex_to_obj(v: LcoVertex) -> Dict[str, Any]:
    obj: Dict[str, Any] = {"label": list(v.label.entries)}
    if v.color is not None:
        obj["color"] = v.color.value
    obj["children"] = [_vertex_to_obj(c) for c in v.children]
    return obj


def forest_to_json(F: LcoForest) -> str:
    return json.dumps({"trees": [_vertex_to_obj(t) for t in F.trees]}, separators=(",", ":"))


def _vertex_from_obj(obj: Any, where: str) -> LcoVertex:
    if not isinstance(obj, dict):
        raise InvalidForest(where, "vertex must be a JSON object")
    unknown = set(obj) - {"label", "color", "children"}
    if unknown:
        raise InvalidForest(where, f"unknown fields {sorted(unknown)}")
    label = obj.get("label")
    if not isinstance(label, list) or not label or not all(type(e) is int and e >= 1 for e in label):
        raise InvalidForest(where, "label must be a nonempty list of positive integers")
    color = obj.get("color")
    if color is not None and color not in ("top", "bot"):
        raise InvalidForest(where, f"color must be 'top' or 'bot', got {color!r}")
    kids = obj.get("children", [])
    if not isinstance(kids, list):
        raise InvalidForest(where, "children must be a list")
    return LcoVertex(
        Composition(tuple(label)),
        Position(color) if color is not None else None,
        tuple(_vertex_from_obj(k, f"{where}.children[{i}]") for i, k in enumerate(kids)),
    )


def forest_from_json(text: str) -> LcoForest:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidForest("$", f"not JSON: {e}") from None
    if not isinstance(data, dict) or not isinstance(data.get("trees"), list):
        raise InvalidForest("$", "expected an object with a 'trees' list")
    F = LcoForest(tuple(_vertex_from_obj(t, f"trees[{i}]") for i, t in enumerate(data["trees"])))
    validate_forest(F)
    return F


def forest_from_obj(trees: List[Any]) -> LcoForest:
    return forest_from_json(json.dumps({"trees": trees}))
