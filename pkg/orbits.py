from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Generic, Iterator, List, Optional, Tuple, TypeVar

import config
from bijection import f_map
from comp_algebra import Composition, bits, enumerate_cn, f_comp
from errors import NonReturning, OutOfRange
from path_core import DyckPath, avoids_all, check_cap, iter_paths, iter_primitive
from report import Verdict

T = TypeVar("T")

FIXED_POINT_PATTERNS = ("DUDD", "UU+DD")


# =========================
# ====== CYCLES ===========
# =========================
def cycle_of(x: T, step: Callable[[T], T], limit: Optional[int] = None) -> List[T]:
    """Iterate `step` from x until it comes back; the elements in cycle order."""
    limit = config.ORBIT_SANITY_LIMIT if limit is None else limit
    seq = [x]
    y = step(x)
    while y != x:
        if len(seq) >= limit:
            raise NonReturning(f"no return to {x} after {limit} iterations")
        seq.append(y)
        y = step(y)
    return seq


@dataclass(frozen=True)
class Orbit(Generic[T]):
    elements: Tuple[T, ...]

    @property
    def length(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[T]:
        return iter(self.elements)

    @property
    def parity(self) -> int:
        """Total number of entries across the orbit, mod 2 (composition orbits only)."""
        return sum(c.length for c in self.elements) % 2


def orbit_of(P: DyckPath, cap: Optional[int] = None) -> Orbit[DyckPath]:
    check_cap(P.size, cap)
    return Orbit(tuple(cycle_of(P, f_map)))


def comp_orbit_of(c: Composition) -> Orbit[Composition]:
    return Orbit(tuple(cycle_of(c, f_comp)))


# =========================
# ====== PARTITIONS =======
# =========================
class Universe(str, Enum):
    ALL = "all"
    PRIMITIVE = "primitive"
    PRIMITIVE_DUU_AVOIDING = "primitive_duu_avoiding"


def universe_paths(n: int, universe: Universe = Universe.ALL, cap: Optional[int] = None) -> Iterator[DyckPath]:
    universe = Universe(universe)
    if universe is Universe.ALL:
        yield from iter_paths(n, cap)
        return
    check_cap(n, cap)
    if n == 0:
        return
    for P in iter_primitive(n, cap):
        if universe is Universe.PRIMITIVE or "DUU" not in P.steps:
            yield P


def orbit_partition(n: int, universe: Universe = Universe.ALL, cap: Optional[int] = None) -> List[Orbit[DyckPath]]:
    # paths arrive in U<D order, so each new orbit starts at its least element
    seen = set()
    orbits = []
    for P in universe_paths(n, universe, cap):
        if P.steps in seen:
            continue
        cyc = cycle_of(P, f_map)
        seen.update(Q.steps for Q in cyc)
        orbits.append(Orbit(tuple(cyc)))
    return orbits


def comp_orbit_partition(n: int) -> List[Orbit[Composition]]:
    seen = set()
    orbits = []
    for c in enumerate_cn(n):
        if c in seen:
            continue
        orb = comp_orbit_of(c)
        seen.update(orb.elements)
        orbits.append(orb)
    return orbits


# =========================
# ====== THEOREM CHECK ====
# =========================
def expected_power(n: int) -> int:
    return 0 if n == 1 else bits(n - 2)


def expected_parity(n: int) -> int:
    # 1 at n = 1 and at n = 2^k + 1, k >= 1
    return 1 if n == 1 or (n >= 3 and (n - 1) & (n - 2) == 0) else 0


@dataclass
class Theorem6Report(Verdict):
    n: int
    common_length: Optional[int]
    power: Optional[int]
    parity: Optional[int]
    uniform: bool
    expected_power: int
    expected_parity: int
    orbit_count: int
    counterexample: Optional[List[str]] = None

    @property
    def holds(self) -> bool:
        return (self.uniform and self.power == self.expected_power
                and self.parity == self.expected_parity)

    def describe(self) -> str:
        return (f"C_{self.n}: length={self.common_length} power={self.power} parity={self.parity} "
                f"uniform={self.uniform}, expected power {self.expected_power} parity {self.expected_parity}")

    def to_dict(self) -> Dict[str, Any]:
        d = {
            "n": self.n,
            "common_length": self.common_length,
            "power": self.power,
            "parity": self.parity,
            "uniform": self.uniform,
            "orbit_count": self.orbit_count,
            "holds": self.holds,
        }
        if self.counterexample:
            d["counterexample"] = self.counterexample
        return d


def verify_theorem6(n: int) -> Theorem6Report:
    if n < 1:
        raise OutOfRange(f"C_n needs n >= 1, got {n}")
    orbits = comp_orbit_partition(n)
    lengths = {o.length for o in orbits}
    parities = {o.parity for o in orbits}
    uniform = len(lengths) == 1 and len(parities) == 1
    length = orbits[0].length
    power = length.bit_length() - 1 if length & (length - 1) == 0 else None
    counterexample = None
    if not uniform:
        odd = next(o for o in orbits if o.length != length or o.parity != orbits[0].parity)
        counterexample = [str(c) for c in odd.elements]
    return Theorem6Report(
        n=n,
        common_length=length if uniform else None,
        power=power if uniform else None,
        parity=orbits[0].parity if uniform else None,
        uniform=uniform,
        expected_power=expected_power(n),
        expected_parity=expected_parity(n),
        orbit_count=len(orbits),
        counterexample=counterexample,
    )


# =========================
# ====== FIXED POINTS =====
# =========================
def fixed_points(n: int, cap: Optional[int] = None) -> List[DyckPath]:
    return [P for P in iter_paths(n, cap) if f_map(P) == P]


def avoids_fixed_point_patterns(P: DyckPath) -> bool:
    return avoids_all(P, FIXED_POINT_PATTERNS)


# =========================
# ====== CENSUS ===========
# =========================
def orbit_census(n: int, cap: Optional[int] = None) -> Dict[int, int]:
    """orbit length -> number of Dyck n-paths lying on an orbit of that length"""
    counts: Counter = Counter()
    for orb in orbit_partition(n, Universe.ALL, cap):
        counts[orb.length] += orb.length
    return dict(sorted(counts.items()))


def count_orbits_upto(n: int, k: int, cap: Optional[int] = None) -> int:
    limit = 1 << k
    return sum(1 for orb in orbit_partition(n, Universe.ALL, cap) if orb.length <= limit)


def count_paths_upto(n: int, k: int, cap: Optional[int] = None) -> int:
    limit = 1 << k
    return sum(c for length, c in orbit_census(n, cap).items() if length <= limit)
