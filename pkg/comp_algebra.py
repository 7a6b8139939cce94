from dataclasses import dataclass
from enum import IntEnum
from itertools import product
from typing import Iterator, List, Sequence, Tuple

from errors import (BadComposition, ContainsDUU, LengthMismatch, NotAnOrbit,
                    NotPrimitive, OutOfRange)
from path_core import DyckPath, heights, is_primitive


# =========================
# ====== DATA TYPES =======
# =========================
@dataclass(frozen=True)
class Composition:
    entries: Tuple[int, ...]

    def __post_init__(self):
        if not self.entries:
            raise BadComposition("a composition needs at least one entry")
        if any((not isinstance(e, int)) or e < 1 for e in self.entries):
            raise BadComposition(f"entries must be positive integers: {self.entries}")

    @property
    def size(self) -> int:
        return sum(self.entries)

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def ends_with_one(self) -> bool:
        return self.entries[-1] == 1

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return ",".join(map(str, self.entries))


def comp(*entries: int) -> Composition:
    return Composition(tuple(entries))


def parse_composition(text: str) -> Composition:
    try:
        entries = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise BadComposition(f"not a comma-separated list of integers: {text!r}") from None
    return Composition(entries)


class AugmentOp(IntEnum):
    PREPEND_ONE = 0
    INCREMENT_FIRST = 1

    def other(self) -> "AugmentOp":
        return AugmentOp(1 - self.value)


@dataclass(frozen=True)
class BitVector:
    bits: Tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise OutOfRange(f"bits must be 0 or 1: {self.bits}")

    def __len__(self) -> int:
        return len(self.bits)

    def __add__(self, other: "BitVector") -> "BitVector":
        if len(self) != len(other):
            raise LengthMismatch(f"cannot add bit vectors of lengths {len(self)} and {len(other)}")
        return BitVector(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def scale(self, bit: int) -> "BitVector":
        return self if bit % 2 else zeros(len(self))


def ones(m: int) -> BitVector:
    return BitVector((1,) * m)


def zeros(m: int) -> BitVector:
    return BitVector((0,) * m)


def bits(m: int) -> int:
    """Number of binary digits of m; bits(0) = 0."""
    return int(m).bit_length()


# =========================
# ====== PATH CODEC =======
# =========================
def path_to_composition(P: DyckPath, primitive: bool = True) -> Composition:
    """c_i = number of downsteps ending at height h - i, h = height(P).

    With primitive=False any nonempty DUU-avoiding path is accepted and the
    result may end in an entry other than 1.
    """
    if not P.steps or (primitive and not is_primitive(P)):
        raise NotPrimitive(f"{P.steps or 'ε'} is not a primitive Dyck path")
    if "DUU" in P.steps:
        raise ContainsDUU(f"{P.steps} contains DUU")
    hs = heights(P)
    h = max(hs)
    counts = [0] * h
    for i, ch in enumerate(P.steps):
        if ch == "D":
            counts[h - hs[i + 1] - 1] += 1
    return Composition(tuple(counts))


def composition_to_path(c: Composition) -> DyckPath:
    return DyckPath("U" * c.length + "".join("D" + "UD" * (e - 1) for e in c.entries))


# =========================
# ====== F ON COMPOSITIONS
# =========================
def f_comp(c: Composition) -> Composition:
    """F(c) = IncrementLast(F(c_1..c_{r-2})), 1^(c_{r-1}-1), c_r, unrolled from the right.

    IncrementLast of the empty prefix is (1), which gives F((a, b)) = (1^a, b).
    """
    e = c.entries
    pieces: List[Tuple[int, ...]] = []
    r = len(e)
    bump = 0
    while r >= 2:
        pieces.append((1,) * (e[r - 2] - 1) + (e[r - 1] + bump,))
        bump = 1
        r -= 2
    if r == 1:
        pieces.append((e[0] + bump,))
    elif bump:
        pieces.append((1,))
    out: Tuple[int, ...] = ()
    for piece in reversed(pieces):
        out += piece
    return Composition(out)


def f_comp_explicit(c: Composition) -> Composition:
    """Entry scan: every entry in even position from the end becomes c-1 ones
    and increments its left neighbour (an implicit 0 when there is none)."""
    e = c.entries
    r = len(e)
    out: List[int] = []
    if r % 2 == 0 and r >= 2:
        out.append(1)
    for idx, value in enumerate(e):
        pos = r - idx
        if pos % 2 == 0:
            out.extend([1] * (value - 1))
        elif pos >= 3:
            out.append(value + 1)
        else:
            out.append(value)
    return Composition(tuple(out))


# =========================
# ====== AUGMENTATION =====
# =========================
def augment(c: Composition, A: AugmentOp) -> Composition:
    if A == AugmentOp.PREPEND_ONE:
        return Composition((1,) + c.entries)
    return Composition((c.entries[0] + 1,) + c.entries[1:])


def parity(c: Composition) -> int:
    return c.length % 2


def partial_sum(v: BitVector) -> BitVector:
    acc, out = 0, []
    for b in v.bits:
        acc ^= b
        out.append(acc)
    return BitVector(tuple(out))


def pascal_mod2(i: int, j: int) -> int:
    if i < 0 or j < 0:
        raise OutOfRange(f"Pascal indices must be nonnegative, got ({i}, {j})")
    return 1 if i & j == 0 else 0


def pascal_block_row_sum(k: int, i: int) -> int:
    if k < 1 or not 0 <= i < 2 ** k:
        raise OutOfRange(f"need k >= 1 and 0 <= i < 2^k, got k={k}, i={i}")
    return sum(pascal_mod2(i, j) for j in range(2 ** k)) % 2


# =========================
# ====== ORBITS IN C_n ====
# =========================
def enumerate_compositions(m: int) -> Iterator[Composition]:
    """All compositions of m >= 1, ordered by their cut patterns (bit strings)."""
    if m < 1:
        raise OutOfRange(f"compositions need a positive total, got {m}")
    for cuts in product((0, 1), repeat=m - 1):
        entries, run = [], 1
        for cut in cuts:
            if cut:
                entries.append(run)
                run = 1
            else:
                run += 1
        entries.append(run)
        yield Composition(tuple(entries))


def enumerate_cn(n: int) -> List[Composition]:
    """C_n: compositions of n that end in 1."""
    if n == 1:
        return [comp(1)]
    return [Composition(c.entries + (1,)) for c in enumerate_compositions(n - 1)]


def check_orbit(orbit: Sequence[Composition]) -> None:
    if not orbit:
        raise NotAnOrbit("empty orbit")
    if len(set(orbit)) != len(orbit):
        raise NotAnOrbit("orbit repeats an element")
    for i, c in enumerate(orbit):
        nxt = orbit[(i + 1) % len(orbit)]
        if f_comp(c) != nxt:
            raise NotAnOrbit(f"F({c}) = {f_comp(c)}, expected {nxt}")


@dataclass(frozen=True)
class BumpedOrbit:
    sequence: Tuple[Composition, ...]
    closing_op: AugmentOp           # A_{m+1}
    start_op: AugmentOp             # A_1

    @property
    def closes(self) -> bool:
        return self.closing_op == self.start_op


def bump_orbit(orbit: Sequence[Composition], A1: AugmentOp) -> BumpedOrbit:
    check_orbit(orbit)
    A = AugmentOp(A1)
    seq = []
    for c in orbit:
        seq.append(augment(c, A))
        if c.length % 2 == 0:
            A = A.other()
    return BumpedOrbit(tuple(seq), A, AugmentOp(A1))


def complete_bumped_orbit(orbit: Sequence[Composition], A1: AugmentOp) -> Tuple[Composition, ...]:
    """The full F-orbit in C_{n+1} through augment(orbit[0], A1)."""
    first = bump_orbit(orbit, A1)
    if first.closes:
        return first.sequence
    return first.sequence + bump_orbit(orbit, first.closing_op).sequence


def parity_vector(orbit: Sequence[Composition], validate: bool = True) -> BitVector:
    if validate:
        check_orbit(orbit)
    return BitVector(tuple(parity(c) for c in orbit))


def predicted_bump_parity(p: BitVector, A: AugmentOp) -> BitVector:
    """Parity vector of B(c, A) from the parity vector p of c's orbit: S p + S e_m + A e_m."""
    m = len(p)
    return partial_sum(p) + partial_sum(ones(m)) + ones(m).scale(int(A))


def printed_bump_parity(p: BitVector, A: AugmentOp) -> BitVector:
    """The variant with (A + 1) e_m; it differs from the observed parities by e_m."""
    m = len(p)
    return partial_sum(p) + partial_sum(ones(m)) + ones(m).scale(int(A) + 1)

