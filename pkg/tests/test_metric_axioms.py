"""Metric axioms and right invariance for the unweighted measures."""
import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from weightedrank.core import RankedList, WeightTable, align
from weightedrank.measures import footrule_weighted, twice_kendall

import oracles


def dist(x, y, w=None):
    pair = align(RankedList(x), RankedList(y))
    return footrule_weighted(pair, w), twice_kendall(pair, w)


def lists_of(n):
    return [tuple(p) for p in itertools.permutations("abcdefgh"[:n])]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_triangle_symmetry_identity_exhaustive(n):
    perms = lists_of(n)
    d = {(x, y): dist(x, y) for x in perms for y in perms}
    for x, y in d:
        assert d[x, y] == d[y, x]
        assert (d[x, y] == (0, 0)) == (x == y)
        assert min(d[x, y]) >= 0
    for x, y, z in itertools.product(perms, repeat=3):
        for m in (0, 1):
            assert d[x, z][m] <= d[x, y][m] + d[y, z][m]


@settings(max_examples=300)
@given(st.permutations("abcdefg"), st.permutations("abcdefg"), st.permutations("abcdefg"),
       st.dictionaries(st.sampled_from("abcdefg"), st.floats(0.01, 100)))
def test_triangle_weighted_random(x, y, z, wd):
    w = WeightTable(wd)
    dxz, dxy, dyz = dist(x, z, w), dist(x, y, w), dist(y, z, w)
    for m in (0, 1):
        assert dxz[m] <= (dxy[m] + dyz[m]) * (1 + 1e-12)


def compose(sigma, eta):
    return tuple(sigma[e - 1] for e in eta)


def inverse(sigma):
    out = [0] * len(sigma)
    for i, r in enumerate(sigma, 1):
        out[r - 1] = i
    return tuple(out)


def rank_dist(sigma, pi):
    toks = "abcdefgh"[: len(sigma)]
    return dist(oracles.as_list(sigma, toks), oracles.as_list(pi, toks))


@pytest.mark.parametrize("n", range(1, 7))
def test_inverse_invariance_exhaustive(n):
    ident = tuple(range(1, n + 1))
    for s in oracles.all_perms(n):
        assert rank_dist(ident, s) == rank_dist(ident, inverse(s)) == rank_dist(inverse(s), ident)


def test_right_invariance_random():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(1, 8)
        s, p, e = (tuple(rng.sample(range(1, n + 1), n)) for _ in range(3))
        assert rank_dist(s, p) == rank_dist(compose(s, e), compose(p, e))
