import pytest
from hypothesis import HealthCheck, given, settings

from bijection import f_map, g_map, iterate
from conftest import dyck_paths
from path_core import EMPTY, components, count_pattern, enumerate_paths, is_primitive, parse_path


@pytest.mark.parametrize("before, after", [
    ("", ""),
    ("UD", "UD"),
    ("UUDD", "UUDD"),
    ("UUUDDD", "UUDUDD"),
    ("UUDUDD", "UUUDDD"),
    ("UUUUDDDD", "UUUDDUDD"),
    ("UUUDDUDD", "UUUDUDDD"),
    ("UUUDUDDD", "UUDUDUDD"),
    ("UUDUDUDD", "UUUUDDDD"),
    ("UUDUUDDD", "UUDUUDDD"),
    ("UDUUUDDD", "UDUUDUDD"),
])
def test_f_known_values(before, after):
    assert f_map(parse_path(before)).steps == after
    assert g_map(parse_path(after)).steps == before


def test_iterate():
    P = parse_path("UUUUDDDD")
    assert iterate(P, 4) == P
    assert iterate(P, 1) == parse_path("UUUDDUDD")
    assert iterate(P, 3, inverse=True) == parse_path("UUUDDUDD")
    assert iterate(P, 0) == P


@pytest.mark.parametrize("n", range(9))
def test_f_is_a_bijection_on_each_size(n):
    paths = enumerate_paths(n)
    images = [f_map(P) for P in paths]
    assert sorted(images, key=lambda p: p.steps) == sorted(paths, key=lambda p: p.steps)
    for P, Q in zip(paths, images):
        assert g_map(Q) == P, f"G(F({P})) != {P}"


@pytest.mark.slow
@pytest.mark.parametrize("n", range(9, 13))
def test_f_is_a_bijection_on_larger_sizes(n):
    seen = set()
    for P in enumerate_paths(n):
        Q = f_map(P)
        assert g_map(Q) == P
        seen.add(Q.steps)
    assert len(seen) == len(enumerate_paths(n))


@given(dyck_paths(max_n=60))
def test_f_preserves_size_components_and_duu(p):
    q = f_map(p)
    assert q.size == p.size
    assert len(components(q)) == len(components(p))
    assert count_pattern(q, "DUU") == count_pattern(p, "DUU")
    assert is_primitive(q) == is_primitive(p)


@given(dyck_paths(max_n=60))
def test_g_inverts_f(p):
    assert g_map(f_map(p)) == p
    assert f_map(g_map(p)) == p


@settings(deadline=None, max_examples=5,
          suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
@given(dyck_paths(min_n=100, max_n=200))
def test_long_random_paths(p):
    assert g_map(f_map(p)) == p


def test_deep_path_needs_no_recursion():
    n = 10_000
    P = parse_path("U" * n + "D" * n)
    Q = f_map(P)
    assert Q.size == n
    assert Q.steps.startswith("UU") and Q.steps.endswith("UDD")
    assert g_map(Q) == P


def test_empty_path():
    assert f_map(EMPTY) == EMPTY
    assert g_map(EMPTY) == EMPTY
