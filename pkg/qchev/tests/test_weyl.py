#!/usr/bin/env python3
"""Tests for weyl."""

from collections import Counter

import numpy as np
import pytest

from qchev import weyl
from qchev.errors import CapExceeded, NotARoot, SystemMismatch
from qchev.roots import weyl_group_order
from qchev.weyl import WeylElement

# Every group of order at most 10**3
SMALL_GROUPS = [
    ('A', 1), ('A', 2), ('A', 3), ('A', 4), ('A', 5),
    ('B', 2), ('B', 3), ('B', 4), ('C', 2), ('C', 3), ('C', 4),
    ('D', 4), ('G', 2),
]  # fmt: skip

_SLOW = pytest.mark.slow
SWEPT_TYPES = (
    [('A', n) for n in range(1, 7)]
    + [('B', n) for n in range(2, 6)]
    + [('C', n) for n in range(2, 6)]
    + [('D', 4), ('D', 5)]
    + [
        pytest.param('A', 7, marks=_SLOW),
        pytest.param('B', 6, marks=_SLOW),
        pytest.param('C', 6, marks=_SLOW),
        pytest.param('D', 6, marks=_SLOW),
        pytest.param('E', 6, marks=_SLOW),
    ]
)

# ## Unit tests


def test_identity_and_simple(root_system):
    rs = root_system('B', 3)
    e = WeylElement.identity(rs)
    assert e.length == 0
    assert e.reduced_word() == ()
    for i in range(1, 4):
        s = WeylElement.simple(rs, i)
        assert s.length == 1
        assert s * s == e
        assert s.is_descent(i)


@pytest.mark.parametrize(
    'family, rank, exponent', [('A', 2, 3), ('B', 2, 4), ('C', 2, 4), ('G', 2, 6)]
)
def test_braid_relations(family, rank, exponent, root_system):
    rs = root_system(family, rank)
    s1s2 = WeylElement.simple(rs, 1) * WeylElement.simple(rs, 2)
    w = WeylElement.identity(rs)
    for k in range(1, exponent + 1):
        w = w * s1s2
        assert (w == WeylElement.identity(rs)) is (k == exponent)


@pytest.mark.parametrize(
    'family, rank', [('A', 1), ('A', 4), ('B', 3), ('C', 3), ('D', 4), ('G', 2), ('F', 4), ('E', 6)]
)
def test_longest_element(family, rank, root_system):
    rs = root_system(family, rank)
    w0 = weyl.longest_element(rs)
    assert w0.length == len(rs.positive_roots)
    assert all(w0.is_descent(i) for i in range(1, rank + 1))
    assert w0 * w0 == WeylElement.identity(rs)


@pytest.mark.parametrize(
    'family, rank', [('A', 3), ('B', 3), ('C', 3), ('D', 4), ('G', 2), ('F', 4)]
)
def test_enumerate_group(family, rank, root_system):
    rs = root_system(family, rank)
    group = weyl.enumerate_group(rs)
    assert group.order == weyl_group_order(rs.cartan_type)
    assert len(set(group.elements)) == group.order
    assert group.elements[0] == WeylElement.identity(rs)
    assert group.elements[-1] == weyl.longest_element(rs)
    keys = [w.sort_key for w in group.elements]
    assert keys == sorted(keys)

    # Length distribution is palindromic
    counts = Counter(w.length for w in group.elements)
    top = len(rs.positive_roots)
    assert all(counts[k] == counts[top - k] for k in range(top + 1))


def test_enumerate_group_is_cached(root_system):
    rs = root_system('A', 3)
    assert weyl.enumerate_group(rs) is weyl.enumerate_group(rs)


def test_enumerate_parabolic_subgroup(root_system):
    rs = root_system('B', 3)
    group = weyl.enumerate_group(rs, generators=[1, 2])
    # W of type A2
    assert group.order == 6
    assert all(not w.is_descent(3) for w in group.elements)


def test_reflection_from_root(root_system):
    rs = root_system('B', 3)
    e = WeylElement.identity(rs)
    for root in rs.positive_roots:
        s = weyl.reflection_from_root(rs, root)
        assert s * s == e
        assert s.apply(root) == tuple(-c for c in root)
        assert s.length % 2 == 1
    for i in range(1, 4):
        simple = tuple(int(j == i - 1) for j in range(3))
        assert weyl.reflection_from_root(rs, simple) == WeylElement.simple(rs, i)


def test_reduced_word_and_inverse(root_system):
    rs = root_system('C', 3)
    for w in weyl.enumerate_group(rs).elements[::7]:
        word = w.reduced_word()
        assert len(word) == w.length == weyl.length(w)
        rebuilt = WeylElement.identity(rs)
        for i in word:
            rebuilt = rebuilt * WeylElement.simple(rs, i)
        assert rebuilt == w
        assert w * w.inverse() == WeylElement.identity(rs)
        assert w.inverse().length == w.length


def test_is_descent_matches_length(root_system):
    rs = root_system('G', 2)
    for w in weyl.enumerate_group(rs).elements:
        for i in (1, 2):
            shorter = (w * WeylElement.simple(rs, i)).length < w.length
            assert w.is_descent(i) is shorter


def test_inverse_is_exact(root_system):
    rs = root_system('B', 3)
    e = WeylElement.identity(rs)
    for w in weyl.enumerate_group(rs).elements:
        inv = w.inverse()
        assert inv.matrix.dtype == np.int64
        assert inv * w == e
        assert inv.length == w.length
        assert inv.inverse() == w


@pytest.mark.parametrize('family, rank', SMALL_GROUPS)
def test_length_changes_by_one(family, rank, root_system):
    rs = root_system(family, rank)
    simples = [WeylElement.simple(rs, i) for i in range(1, rank + 1)]
    for w in weyl.enumerate_group(rs).elements:
        for i, s in enumerate(simples, start=1):
            step = (w * s).length - w.length
            assert step in (-1, 1)
            assert w.is_descent(i) is (step == -1)


@pytest.mark.parametrize('family, rank', SMALL_GROUPS)
def test_length_of_w0_times_w(family, rank, root_system):
    rs = root_system(family, rank)
    w0 = weyl.longest_element(rs)
    for w in weyl.enumerate_group(rs).elements:
        assert (w0 * w).length == w0.length - w.length


@pytest.mark.parametrize('family, rank', SWEPT_TYPES)
def test_enumerate_group_order(family, rank, root_system):
    rs = root_system(family, rank)
    group = weyl.enumerate_group(rs)
    assert group.order == len(group.elements) == weyl_group_order(rs.cartan_type)


def test_multiply_is_associative(root_system):
    rs = root_system('A', 3)
    a, b, c = weyl.enumerate_group(rs).elements[5:8]
    assert (a * b) * c == a * (b * c)


def test_elements_are_immutable(root_system):
    w = WeylElement.simple(root_system('A', 2), 1)
    with pytest.raises(ValueError):
        w.matrix[0, 0] = 5


# ## Break tests


def test_break_multiply(root_system):
    a = WeylElement.simple(root_system('A', 2), 1)
    b = WeylElement.simple(root_system('B', 2), 1)
    with pytest.raises(SystemMismatch) as errorinfo:
        weyl.multiply(a, b)
    assert 'Cannot multiply' in str(errorinfo.value)


def test_break_reflection_from_root(root_system):
    with pytest.raises(NotARoot):
        weyl.reflection_from_root(root_system('A', 2), (2, 2))


def test_break_enumerate_group(root_system):
    rs = root_system('A', 3)
    with pytest.raises(CapExceeded) as errorinfo:
        weyl.enumerate_group(rs, cap=10)
    assert errorinfo.value.order_lower_bound == 24
    assert errorinfo.value.cap == 10
    assert 'QCHEV_CAP' in str(errorinfo.value)

    with pytest.raises(CapExceeded) as errorinfo:
        weyl.enumerate_group(root_system('B', 4), generators=[1, 2], cap=3)
    assert errorinfo.value.order_lower_bound == 4

    with pytest.raises(ValueError) as errorinfo:
        weyl.enumerate_group(rs, cap=0)
    assert 'must be positive' in str(errorinfo.value)


def test_break_enumerate_group_e8(root_system):
    # Refused up front, without walking the group
    with pytest.raises(CapExceeded) as errorinfo:
        weyl.enumerate_group(root_system('E', 8))
    assert errorinfo.value.order_lower_bound == 696729600
