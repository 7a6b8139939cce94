from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Sequence, Union

import config
from errors import BadChar, CapExceeded, DipsBelowGround, NotAnUpstep, OutOfRange, Unbalanced


# =========================
# ====== DATA TYPES =======
# =========================
class Step(str, Enum):
    UP = "U"
    DOWN = "D"


@dataclass(frozen=True)
class DyckPath:
    """Balanced U/D word that never dips below its starting level.

    Build one with `parse_path`; the constructor trusts its input so that
    enumeration and the bijection can skip revalidation.
    """
    steps: str = ""

    @property
    def size(self) -> int:
        return len(self.steps) // 2

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"DyckPath({self.steps or 'ε'})"

    def __add__(self, other: "DyckPath") -> "DyckPath":
        return DyckPath(self.steps + other.steps)


EMPTY = DyckPath("")

StepsLike = Union[str, Sequence[Step]]


def _as_text(steps: StepsLike) -> str:
    if isinstance(steps, str):
        return steps
    return "".join(Step(s).value for s in steps)


# =========================
# ====== PARSING ==========
# =========================
def parse_path(text: str) -> DyckPath:
    for i, ch in enumerate(text):
        if ch not in "UD":
            raise BadChar(f"bad step {ch!r} at index {i}; only 'U' and 'D' are allowed")
    h = 0
    for i, ch in enumerate(text):
        h += 1 if ch == "U" else -1
        if h < 0:
            raise DipsBelowGround(f"prefix of length {i + 1} ends at height {h}")
    if h != 0:
        raise Unbalanced(f"{text.count('U')} upsteps vs {text.count('D')} downsteps")
    return DyckPath(text)


def path_key(P: DyckPath) -> str:
    """Sort key giving lexicographic order with U < D."""
    return P.steps.replace("U", "0").replace("D", "1")


# =========================
# ====== ENUMERATION ======
# =========================
def check_cap(n: int, cap: Optional[int] = None) -> None:
    limit = config.ENUM_CAP if cap is None else cap
    if n > limit:
        raise CapExceeded(n, limit)
    if n < 0:
        raise OutOfRange(f"semilength must be nonnegative, got {n}")


def _iter_words(n: int) -> Iterator[str]:
    # explicit stack, D-branch pushed first so the U-branch is expanded first
    stack = [("", 0, 0)]
    while stack:
        prefix, ups, downs = stack.pop()
        if downs == n:
            yield prefix
            continue
        if downs < ups:
            stack.append((prefix + "D", ups, downs + 1))
        if ups < n:
            stack.append((prefix + "U", ups + 1, downs))


def iter_paths(n: int, cap: Optional[int] = None) -> Iterator[DyckPath]:
    check_cap(n, cap)
    for w in _iter_words(n):
        yield DyckPath(w)


def enumerate_paths(n: int, cap: Optional[int] = None) -> List[DyckPath]:
    return list(iter_paths(n, cap))


def iter_primitive(n: int, cap: Optional[int] = None) -> Iterator[DyckPath]:
    if n < 1:
        raise OutOfRange(f"primitive paths have semilength >= 1, got {n}")
    check_cap(n, cap)
    for w in _iter_words(n - 1):
        yield DyckPath("U" + w + "D")


def enumerate_primitive(n: int, cap: Optional[int] = None) -> List[DyckPath]:
    return list(iter_primitive(n, cap))


# =========================
# ====== STRUCTURE ========
# =========================
def heights(P: DyckPath) -> List[int]:
    """Vertex heights h[0..2n]; h[i] is the height after i steps."""
    hs = [0]
    for ch in P.steps:
        hs.append(hs[-1] + (1 if ch == "U" else -1))
    return hs


def height(P: DyckPath) -> int:
    return max(heights(P))


def matching(P: Union[DyckPath, str]) -> List[int]:
    """m[i] is the partner of step i (upstep <-> matching downstep)."""
    s = P if isinstance(P, str) else P.steps
    m = [0] * len(s)
    stack: List[int] = []
    for i, ch in enumerate(s):
        if ch == "U":
            stack.append(i)
        else:
            j = stack.pop()
            m[i], m[j] = j, i
    return m


def match_downstep(P: DyckPath, i: int) -> int:
    if not 0 <= i < len(P.steps) or P.steps[i] != "U":
        raise NotAnUpstep(f"index {i} of {P.steps or 'ε'} is not an upstep")
    h = 0
    for j in range(i, len(P.steps)):
        h += 1 if P.steps[j] == "U" else -1
        if h == 0:
            return j
    raise AssertionError("unreachable for a valid Dyck path")


def components(P: DyckPath) -> List[DyckPath]:
    out, start, h = [], 0, 0
    for i, ch in enumerate(P.steps):
        h += 1 if ch == "U" else -1
        if h == 0:
            out.append(DyckPath(P.steps[start:i + 1]))
            start = i + 1
    return out


def is_primitive(P: DyckPath) -> bool:
    if not P.steps:
        return False
    h = 0
    for ch in P.steps[:-1]:
        h += 1 if ch == "U" else -1
        if h == 0:
            return False
    return True


def reverse(P: DyckPath) -> DyckPath:
    """Mirror image: read the steps backwards and exchange U and D."""
    return DyckPath(P.steps[::-1].translate(str.maketrans("UD", "DU")))


def ends_with(P: DyckPath, suffix: StepsLike) -> bool:
    return P.steps.endswith(_as_text(suffix))


# =========================
# ====== PATTERNS =========
# =========================
WILDCARD = "+"


@dataclass(frozen=True)
class PathPattern:
    """Concrete U/D atoms around at most one `+`, which matches any nonempty Dyck path."""
    atoms: str

    @property
    def has_wildcard(self) -> bool:
        return WILDCARD in self.atoms

    @property
    def left(self) -> str:
        return self.atoms.split(WILDCARD, 1)[0]

    @property
    def right(self) -> str:
        return self.atoms.split(WILDCARD, 1)[1] if self.has_wildcard else ""

    def __str__(self) -> str:
        return self.atoms


def parse_pattern(text: str) -> PathPattern:
    for i, ch in enumerate(text):
        if ch not in "UD" + WILDCARD:
            raise BadChar(f"bad pattern atom {ch!r} at index {i}")
    if text.count(WILDCARD) > 1:
        raise BadChar("a pattern holds at most one '+' wildcard")
    return PathPattern(text)


def _as_pattern(pat: Union[str, PathPattern]) -> PathPattern:
    return pat if isinstance(pat, PathPattern) else parse_pattern(pat)


def _count_concrete(s: str, word: str) -> int:
    if not word:
        return len(s) + 1
    return sum(1 for i in range(len(s) - len(word) + 1) if s.startswith(word, i))


def _gap_ends(s: str, g: int) -> Iterator[int]:
    """End indices e such that s[g:e] is a nonempty Dyck path."""
    h = 0
    for e in range(g, len(s)):
        h += 1 if s[e] == "U" else -1
        if h < 0:
            return
        if h == 0:
            yield e + 1


def _has_gap_before(s: str, e: int) -> bool:
    # walk backwards from e; D raises, U lowers
    h = 0
    for g in range(e - 1, -1, -1):
        h += 1 if s[g] == "D" else -1
        if h < 0:
            return False
        if h == 0:
            return True
    return False


def count_pattern(P: DyckPath, pat: Union[str, PathPattern]) -> int:
    pattern = _as_pattern(pat)
    s = P.steps
    if not pattern.has_wildcard:
        return _count_concrete(s, pattern.atoms)
    left, right = pattern.left, pattern.right
    if not left:
        return sum(1 for e in range(1, len(s) + 1) if s.startswith(right, e) and _has_gap_before(s, e))
    # one occurrence per (left start, right start) pair whose gap is Dyck
    total = 0
    for i in range(len(s) - len(left) + 1):
        if not s.startswith(left, i):
            continue
        total += sum(1 for e in _gap_ends(s, i + len(left)) if s.startswith(right, e))
    return total


def wildcard_gap_lengths(P: DyckPath, left: str, right: str, start: int) -> List[int]:
    """Every gap length completing left·+·right with `left` placed at `start`."""
    s = P.steps
    if not s.startswith(left, start):
        return []
    g = start + len(left)
    return [e - g for e in _gap_ends(s, g) if s.startswith(right, e)]


def contains(P: DyckPath, pat: Union[str, PathPattern]) -> bool:
    return count_pattern(P, pat) > 0


def avoids_all(P: DyckPath, patterns: Iterable[Union[str, PathPattern]]) -> bool:
    return not any(contains(P, p) for p in patterns)
