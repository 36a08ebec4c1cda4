import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from brauercat import _pykernels, kernels
from brauercat.brauer import partner_from_pairs

try:
    from brauercat import _ckernels
except ImportError:
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def matching(n, seed):
    rng = random.Random(seed)
    pts = list(range(n))
    rng.shuffle(pts)
    return partner_from_pairs(n, [(pts[i], pts[i + 1]) for i in range(0, n, 2)])


arities = st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)).filter(
    lambda a: (a[0] + a[1]) % 2 == 0 and (a[1] + a[2]) % 2 == 0)


def reference_compose(fp, s, t, gp, u):
    """Strand tracing written independently: union-find over glued points."""
    n = s + t + u
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    # f's points: bottom 0..s-1 -> global, top -> middle s..s+t-1
    for p, q in enumerate(fp):
        union(p, q)
    # g's bottom points are the middle, its top points follow
    for p, q in enumerate(gp):
        union(s + p, s + q)
    outer = list(range(s)) + list(range(s + t, n))
    groups = {}
    for p in outer:
        groups.setdefault(find(p), []).append(p)
    index = {p: i for i, p in enumerate(outer)}
    partner = [0] * len(outer)
    for members in groups.values():
        a, b = members
        partner[index[a]], partner[index[b]] = index[b], index[a]
    mids = {find(p) for p in range(s, s + t)} - set(groups)
    return tuple(partner), len(mids)


@given(arities, st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_python_kernel_matches_union_find(ar, seed_f, seed_g):
    s, t, u = ar
    fp, gp = matching(s + t, seed_f), matching(t + u, seed_g)
    out, loops = _pykernels.compose_matchings(fp, s, t, gp, u)
    assert (tuple(out), loops) == reference_compose(fp, s, t, gp, u)


@needs_ext
@given(arities, st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_compiled_kernel_matches_python(ar, seed_f, seed_g):
    s, t, u = ar
    fp, gp = matching(s + t, seed_f), matching(t + u, seed_g)
    py = _pykernels.compose_matchings(fp, s, t, gp, u)
    cy = _ckernels.compose_matchings(fp, s, t, gp, u)
    assert tuple(py[0]) == tuple(cy[0]) and py[1] == cy[1]


@given(st.permutations(list(range(7))))
def test_sign_parity(perm):
    expected = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                expected = -expected
    assert _pykernels.permutation_sign(perm) == expected
    if _ckernels is not None:
        assert _ckernels.permutation_sign(perm) == expected


def test_sign_on_arbitrary_keys():
    assert kernels.permutation_sign((10, 30, 20)) == -1
    assert kernels.permutation_sign(()) == 1


def test_loop_is_counted():
    # cup then cap closes one loop
    out, loops = kernels.compose_matchings((1, 0), 0, 2, (1, 0), 0)
    assert tuple(out) == () and loops == 1


@pytest.mark.parametrize("flag, expected", [("1", "python"), ("0", None)])
def test_backend_selection(flag, expected):
    env = dict(os.environ, BRAUERCAT_PURE_PYTHON=flag)
    res = subprocess.run([sys.executable, "-c", "import brauercat.kernels as k; print(k.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    backend = res.stdout.strip()
    if expected:
        assert backend == expected
    else:
        assert backend == ("cython" if _ckernels is not None else "python")


def test_is_compiled_reports_backend():
    assert kernels.is_compiled() == (kernels.BACKEND == "cython")
