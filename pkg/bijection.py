"""The size-preserving bijection F on Dyck paths and its inverse G.

Both maps are driven by an explicit work stack over index ranges of the input,
so a path like U^n D^n costs no Python recursion depth at all.
"""
from typing import Callable, List, Tuple, Union

from path_core import DyckPath, matching

Item = Union[str, Tuple[int, int]]
Rule = Callable[[str, List[int], int, int], List[Item]]


def _rewrite(P: DyckPath, rule: Rule) -> DyckPath:
    s = P.steps
    m = matching(s)
    out: List[str] = []
    work: List[Item] = [(0, len(s))]
    while work:
        item = work.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        a, b = item
        if a == b:
            continue
        if m[a] != b - 1:
            # not primitive: map each component in place
            comps, i = [], a
            while i < b:
                comps.append((i, m[i] + 1))
                i = m[i] + 1
            work.extend(reversed(comps))
            continue
        work.extend(reversed(rule(s, m, a, b)))
    return DyckPath("".join(out))


def _f_primitive(s: str, m: List[int], a: int, b: int) -> List[Item]:
    # P = U Q (UD)^i D with Q empty or ending DD
    end, i = b - 1, 0
    while end - (a + 1) >= 2 and s[end - 2] == "U" and s[end - 1] == "D":
        end -= 2
        i += 1
    if end > a + 1 and m[a + 1] == end - 1:
        # Q = U R D
        return ["U" * (i + 1), (a + 2, end - 1), "UD" + "D" * (i + 1)]
    return ["U" * (i + 1), (a + 1, end), "D" * (i + 1)]


def _g_primitive(s: str, m: List[int], a: int, b: int) -> List[Item]:
    # P = U^(i+1) Q D^(i+1) with Q not primitive
    lo, hi, i = a, b, 0
    while hi - lo > 2 and m[lo + 1] == hi - 2:
        lo, hi, i = lo + 1, hi - 1, i + 1
    q_lo, q_hi = lo + 1, hi - 1
    if q_hi - q_lo >= 2 and s[q_hi - 2] == "U" and s[q_hi - 1] == "D":
        # Q = R UD
        return ["UU", (q_lo, q_hi - 2), "D" + "UD" * i + "D"]
    return ["U", (q_lo, q_hi), "UD" * i + "D"]


def f_map(P: DyckPath) -> DyckPath:
    return _rewrite(P, _f_primitive)


def g_map(P: DyckPath) -> DyckPath:
    return _rewrite(P, _g_primitive)


def iterate(P: DyckPath, times: int, inverse: bool = False) -> DyckPath:
    step = g_map if inverse else f_map
    for _ in range(times):
        P = step(P)
    return P
