"""Exact truncated power series and the counting side of the library.

Series live in sympy's sparse polynomial rings over QQ and are truncated with the
`ring_series` helpers, so nothing here ever touches a float. A univariate series is an
element of `R1 = QQ[x]`; the leaf series is an element of `R2 = QQ[x, y]`, truncated in x.
"""
from collections import Counter
from math import comb
from typing import Dict, List, Optional, Tuple

from sympy.polys.domains import QQ
from sympy.polys.ring_series import mul_xin, rs_mul, rs_nth_root, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement, ring

import config
from errors import CapExceeded, OutOfRange, SeriesDomainError
from lco import decompose, leaf_count, path_to_forest
from orbits import orbit_partition, Universe
from path_core import count_pattern, ends_with, iter_paths, iter_primitive

R1, X = ring("x", QQ)
R2, X2, Y2 = ring("x,y", QQ)

# a series is a ring element read modulo O(x^(order+1))
Series = PolyElement
Series2 = PolyElement


# =========================
# ====== SERIES ===========
# =========================
def _constant(p: PolyElement):
    return p.get(p.ring.zero_monom, QQ.zero)


def series_inverse(p: PolyElement, prec: int, x: Optional[PolyElement] = None) -> PolyElement:
    """1/p modulo O(x^prec); p needs a nonzero constant term."""
    x = p.ring.gens[0] if x is None else x
    if _constant(p) == 0:
        raise SeriesDomainError("divisor has a non-invertible constant term")
    return rs_series_inversion(p, x, prec)


def series_sqrt(p: PolyElement, prec: int, x: Optional[PolyElement] = None) -> PolyElement:
    """Square root modulo O(x^prec), checked by squaring back."""
    x = p.ring.gens[0] if x is None else x
    if _constant(p) != 1:
        raise SeriesDomainError("square root needs constant term 1")
    root = rs_nth_root(p, 2, x, prec)
    if rs_mul(root, root, x, prec) != rs_trunc(p, x, prec):
        raise SeriesDomainError("square root failed to reproduce the radicand")
    return root


def shift_down(p: PolyElement, k: int = 1) -> PolyElement:
    """Divide by x^k; every term must carry at least x^k."""
    if any(m[0] < k for m in p.itermonoms()):
        raise SeriesDomainError(f"series is not divisible by x^{k}")
    return mul_xin(p, 0, -k)


def integer_coeffs(p: PolyElement, order: int) -> List[int]:
    """Coefficients of x^0..x^order of a univariate series as ints."""
    return [_as_int(p.get((n,), QQ.zero), f"x^{n}") for n in range(order + 1)]


def _as_int(c, where: str) -> int:
    if QQ.denom(c) != 1:
        raise SeriesDomainError(f"coefficient of {where} is {c}, not an integer")
    return int(QQ.numer(c))


# =========================
# ====== NUMBERS ==========
# =========================
def catalan(n: int) -> int:
    if n < 0:
        raise OutOfRange(f"n must be nonnegative, got {n}")
    return comb(2 * n, n) // (n + 1)


def motzkin(n: int) -> int:
    if n < 0:
        raise OutOfRange(f"n must be nonnegative, got {n}")
    return sum(comb(n, 2 * k) * catalan(k) for k in range(n // 2 + 1))


def gen_catalan(j: int, n: int) -> int:
    """j/(2n+j)·binom(2n+j, n): the j-fold convolution of the Catalan numbers."""
    if j < 1 or n < 0:
        raise OutOfRange(f"need j >= 1 and n >= 0, got j={j}, n={n}")
    return j * comb(2 * n + j, n) // (2 * n + j)


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


# =========================
# ====== F_k SYSTEM =======
# =========================
def _check_order(N: int, cap: Optional[int] = None) -> None:
    limit = config.SERIES_MAX_ORDER if cap is None else cap
    if N < 0:
        raise OutOfRange(f"order must be nonnegative, got {N}")
    if N > limit:
        raise CapExceeded(N, limit, what="series order")


def _orbit_bound(k: int, prec: int) -> int:
    # 2^k, clamped once it outgrows the truncation
    if k < 0:
        raise OutOfRange(f"k must be nonnegative, got {k}")
    return 1 << min(k, prec.bit_length())


def _geometric_2x(k: int, prec: int) -> Series:
    # (1 - (2x)^(2^k)) / (1 - 2x), truncated
    terms = min(_orbit_bound(k, prec), prec)
    return R1.from_dict({(j,): 2 ** j for j in range(terms)})


def series_fk(k: int, N: int) -> Tuple[Series, Series, Series]:
    """Solve F = 1 + G·F, G = x + x·geo·(x + (F-1)·H), H = G - x by iteration."""
    prec = N + 1
    _check_order(N)
    xgeo = rs_mul(X, _geometric_2x(k, prec), X, prec)
    F, G = R1.one, R1.zero
    for _ in range(N + 4):
        H = G - X
        G_next = rs_trunc(X + rs_mul(xgeo, X + rs_mul(F - 1, H, X, prec), X, prec), X, prec)
        F_next = rs_trunc(1 + rs_mul(G_next, F, X, prec), X, prec)
        if F_next == F and G_next == G:
            return F, G, rs_trunc(G - X, X, prec)
        F, G = F_next, G_next
    raise SeriesDomainError(f"F_{k} system did not settle within {N + 4} rounds")


def series_fk_closed(k: int, N: int, radicand_sign: int = 1) -> Series:
    """(1 - a - sqrt(1 - 4x + s·a(2-a)x/(1-x))) / (2x - a), a = (2x)^(2^k+1), s = radicand_sign.

    Only s = +1 reproduces the system solution; s = -1 is kept for comparison.
    """
    _check_order(N)
    prec = N + 2                       # one extra term, spent dividing by x
    e = _orbit_bound(k, prec) + 1
    a = R1.from_dict({(e,): 2 ** e}) if e < prec else R1.zero
    tail = rs_mul(rs_mul(a, 2 - a, X, prec), X, X, prec)
    radicand = 1 - 4 * X + radicand_sign * rs_mul(tail, series_inverse(1 - X, prec), X, prec)
    numerator = shift_down(rs_trunc(1 - a - series_sqrt(radicand, prec), X, prec))
    denominator = shift_down(2 * X - a)
    return rs_mul(numerator, series_inverse(denominator, N + 1), X, N + 1)


def fk_orbit_counts(N: int, k: int, cap: Optional[int] = None) -> List[int]:
    """Per n <= N, the number of F-orbits (not paths) of length <= 2^k."""
    limit = 1 << k
    return [sum(1 for o in orbit_partition(n, Universe.ALL, cap) if o.length <= limit) for n in range(N + 1)]


def fk_path_counts(N: int, k: int, cap: Optional[int] = None) -> List[int]:
    """Per n <= N, the number of Dyck n-paths whose orbit has length <= 2^k."""
    limit = 1 << k
    return [sum(o.length for o in orbit_partition(n, Universe.ALL, cap) if o.length <= limit)
            for n in range(N + 1)]


# =========================
# ====== STATISTICS =======
# =========================
def stat_x(P) -> int:
    return count_pattern(P, "DUD")


def stat_y(P) -> int:
    return count_pattern(P, "DUDU") + count_pattern(P, "UU+DD") + (1 if ends_with(P, "UD") else 0)


def motzkin_path_count(n: int, cap: Optional[int] = None) -> int:
    if n < 0:
        raise OutOfRange(f"n must be nonnegative, got {n}")
    return sum(
        1 for P in iter_paths(n + 1, cap)
        if P.steps.endswith("DD") and count_pattern(P, "DUDU") == 0 and count_pattern(P, "UU+DD") == 0
    )


def dud_avoiding_count(n: int, cap: Optional[int] = None) -> int:
    if n < 0:
        raise OutOfRange(f"n must be nonnegative, got {n}")
    return sum(1 for P in iter_paths(n + 1, cap) if "DUD" not in P.steps)


# =========================
# ====== SKELETON COUNTS ==
# =========================
def _has_ground_duu(s: str) -> bool:
    h = 0
    for i, ch in enumerate(s):
        h += 1 if ch == "U" else -1
        if h == 0 and ch == "D" and s.startswith("UU", i + 1):
            return True
    return False


def lemma13_count(n: int, cap: Optional[int] = None) -> int:
    """Dyck n-paths ending DD with a DUU whose valley sits on the ground."""
    return sum(1 for P in iter_paths(n, cap) if P.steps.endswith("DD") and _has_ground_duu(P.steps))


def lemma13_convolution(n: int) -> int:
    # nonempty A, then DUU, then a nonempty path closing with DD
    if n < 3:
        return 0
    return sum(gen_catalan(2, i) * gen_catalan(2, n - 3 - i) for i in range(n - 2))


def prop14_sum(n: int):
    """2^(n-1) + sum_{k=1}^{n-2} 2^k/(n-k)·binom(2n-2k, n-2-k)"""
    if n < 1:
        raise OutOfRange(f"n must be positive, got {n}")
    total = QQ(2 ** (n - 1))
    for k in range(1, n - 1):
        total += QQ(2 ** k, n - k) * _binom(2 * n - 2 * k, n - 2 - k)
    return total


def expected_skeleton_census(n: int) -> Dict[int, int]:
    out = {k: 2 ** (k - 1) * gen_catalan(4, n - k - 2) for k in range(1, n - 1)}
    out[n + 1] = 2 ** (n - 1)
    return out


def skeleton_size_census(n: int, cap: Optional[int] = None) -> Dict[int, int]:
    """skeleton size -> number of primitive (n+1)-paths; DUU-avoiders are their own skeleton."""
    counts: Counter = Counter()
    for P in iter_primitive(n + 1, cap):
        k = decompose(P).skeleton.size if "DUU" in P.steps else n + 1
        counts[k] += 1
    return dict(sorted(counts.items()))


def prop14_check(n: int, cap: Optional[int] = None) -> bool:
    if n < 2:
        raise OutOfRange(f"n must be at least 2, got {n}")
    if prop14_sum(n) != catalan(n):
        return False
    if n <= min(config.SKELETON_BRUTE_FORCE_MAX, config.ENUM_CAP - 1):
        return skeleton_size_census(n, cap) == expected_skeleton_census(n)
    return True


# =========================
# ====== LEAF TABLE =======
# =========================
def leaf_series(N: int) -> Series2:
    """(1 - sqrt(1 - 4x(1-x)/(1-xy))) / (2x) through x^N; y marks leaves."""
    limit = config.LEAF_TABLE_MAX_N
    if N < 0:
        raise OutOfRange(f"leaf table size must be nonnegative, got {N}")
    if N > limit:
        raise CapExceeded(N, limit, what="leaf table size")
    prec = N + 2
    ratio = rs_mul(4 * X2 * (1 - X2), series_inverse(1 - X2 * Y2, prec, X2), X2, prec)
    root = series_sqrt(1 - ratio, prec, X2)
    return rs_trunc(shift_down(1 - root).mul_ground(QQ(1, 2)), X2, N + 1)


def lco_leaf_table(N: int) -> Dict[int, Tuple[int, ...]]:
    """Row n (1..N) lists the number of LCO trees of size n with k = 1..n leaves."""
    s = leaf_series(N)
    return {
        n: tuple(_as_int(s.get((n, k), QQ.zero), f"x^{n} y^{k}") for k in range(1, n + 1))
        for n in range(1, N + 1)
    }


def leaf_census(n: int, cap: Optional[int] = None) -> Tuple[int, ...]:
    """Brute force: leaves of each Dyck n-path's forest once its roots share a new parent."""
    if n < 1:
        raise OutOfRange(f"leaf census needs n >= 1, got {n}")
    counts = [0] * n
    for P in iter_paths(n, cap):
        counts[leaf_count(path_to_forest(P)) - 1] += 1
    return tuple(counts)
