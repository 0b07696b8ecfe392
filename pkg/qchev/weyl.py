#!/usr/bin/env python3
"""
Weyl group elements as integer matrices on simple-root coordinates.

Attributes
----------
DEFAULT_CAP : int
    Default maximum number of group elements to enumerate.
LGR :
    Logger
"""

import logging
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from qchev.errors import CapExceeded, SystemMismatch
from qchev.roots import simple_reflection_action, weyl_group_order

DEFAULT_CAP = 10**6

# (root system, generators) -> GroupEnumeration
_ENUMERATIONS = {}

LGR = logging.getLogger(__name__)
LGR.setLevel(logging.INFO)


class WeylElement:
    """
    An element of the Weyl group of `root_system`.

    Column ``j`` of `matrix` is the image of ``alpha_j``. Two elements are
    equal when their matrices are.

    Parameters
    ----------
    root_system : RootSystem
        The root system the element acts on.
    matrix : array-like
        ``rank x rank`` integer matrix.
    """

    def __init__(self, root_system, matrix):
        self.root_system = root_system
        mat = np.array(matrix, dtype=np.int64)
        mat.setflags(write=False)
        self.matrix = mat
        self._key = mat.tobytes()

    @classmethod
    def identity(cls, root_system):
        """Identity element."""
        return cls(root_system, np.eye(root_system.rank, dtype=np.int64))

    @classmethod
    def simple(cls, root_system, i):
        """Simple reflection ``s_i`` (1-based)."""
        return cls(root_system, simple_reflection_action(root_system, i))

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.root_system == other.root_system and self._key == other._key

    def __hash__(self):
        return hash((self.root_system.cartan_type, self._key))

    def __mul__(self, other):
        return multiply(self, other)

    def __repr__(self):
        word = ''.join(f's{i}' for i in self.reduced_word()) or 'e'
        return f'WeylElement({self.root_system.cartan_type}, {word})'

    @property
    def sort_key(self):
        """Ordering key: length, then the flattened matrix."""
        return (self.length, tuple(int(c) for c in self.matrix.flat))

    @cached_property
    def length(self):
        """Number of positive roots sent to negative roots."""
        images = self.matrix @ self.root_system.roots_array
        return int((images < 0).any(axis=0).sum())

    def apply(self, vec):
        """Image of a vector in simple-root coordinates."""
        return tuple(int(c) for c in self.matrix @ np.asarray(vec, dtype=np.int64))

    def is_descent(self, i):
        """
        Whether ``l(w s_i) < l(w)``, i.e. ``w(alpha_i)`` is negative.

        Parameters
        ----------
        i : int
            1-based simple-root index.
        """
        return bool((self.matrix[:, i - 1] < 0).any())

    def inverse(self):
        """Inverse element, as the product of the reversed reduced word."""
        inv = WeylElement.identity(self.root_system)
        for i in reversed(self.reduced_word()):
            inv = inv * WeylElement.simple(self.root_system, i)
        return inv

    def reduced_word(self):
        """
        A reduced word ``(i_1, ..., i_k)`` with ``w = s_{i_1} ... s_{i_k}``.

        Returns
        -------
        tuple of int
            1-based indices; empty for the identity.
        """
        word = []
        w = self
        while True:
            for i in range(1, self.root_system.rank + 1):
                if w.is_descent(i):
                    word.append(i)
                    w = w * WeylElement.simple(self.root_system, i)
                    break
            else:
                break
        return tuple(reversed(word))


@dataclass(frozen=True)
class GroupEnumeration:
    """Ordered, duplicate-free list of group elements."""

    elements: tuple
    order: int


def multiply(a, b):
    """
    Compose two elements, ``(a b)(x) = a(b(x))``.

    Raises
    ------
    SystemMismatch
        If `a` and `b` act on different root systems.
    """
    if a.root_system != b.root_system:
        raise SystemMismatch(
            f'Cannot multiply an element of W({a.root_system.cartan_type}) with '
            f'one of W({b.root_system.cartan_type})'
        )
    return WeylElement(a.root_system, a.matrix @ b.matrix)


def length(w):
    """Length of `w`, as its number of inversions."""
    return w.length


@lru_cache(maxsize=None)
def longest_element(rs):
    """
    Longest element ``w_0``, reached by greedy ascent from the identity.

    Parameters
    ----------
    rs : RootSystem
        The root system.

    Returns
    -------
    WeylElement
        ``w_0``, of length ``|R+|``.
    """
    w = WeylElement.identity(rs)
    ascended = True
    while ascended:
        ascended = False
        for i in range(1, rs.rank + 1):
            if not w.is_descent(i):
                w = w * WeylElement.simple(rs, i)
                ascended = True
                break
    LGR.debug(f'w_0 of {rs.cartan_type} has length {w.length}')
    return w


def reflection_from_root(rs, root):
    """
    Reflection ``s_alpha: x -> x - <x, alpha^vee> alpha``.

    Parameters
    ----------
    rs : RootSystem
        The root system.
    root : tuple of int
        A positive root, in simple-root coordinates.

    Returns
    -------
    WeylElement
        The reflection.

    Raises
    ------
    NotARoot
        If `root` is not a positive root.
    """
    return _reflection(rs, tuple(int(c) for c in root))


@lru_cache(maxsize=4096)
def _reflection(rs, root):
    coroot = np.array(rs.coroot_of(root), dtype=np.int64)
    alpha = np.array(root, dtype=np.int64)
    # <alpha_j, alpha^vee> for every simple root alpha_j
    pairs = rs.cartan_matrix.T @ coroot
    return WeylElement(rs, np.eye(rs.rank, dtype=np.int64) - np.outer(alpha, pairs))


def _bfs(rs, generators, cap):
    gens = [WeylElement.simple(rs, i) for i in generators]
    start = WeylElement.identity(rs)
    seen = {start._key: start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for s in gens:
            ws = w * s
            if ws._key not in seen:
                seen[ws._key] = ws
                if len(seen) > cap:
                    raise CapExceeded(len(seen), cap)
                queue.append(ws)
    return sorted(seen.values(), key=lambda el: el.sort_key)


def enumerate_group(rs, cap=DEFAULT_CAP, generators=None):
    """
    Enumerate the Weyl group (or a standard parabolic subgroup) of `rs`.

    Elements are found by breadth-first search from the identity, right
    multiplying by simple reflections, then sorted by length and matrix.

    Parameters
    ----------
    rs : RootSystem
        The root system.
    cap : int, optional
        Maximum number of elements. Default: `DEFAULT_CAP`.
    generators : iterable of int or None, optional
        1-based simple reflections generating the subgroup. Default: all.

    Returns
    -------
    GroupEnumeration
        The elements and the order.

    Raises
    ------
    ValueError
        If `cap` is not positive.
    CapExceeded
        If the group has more than `cap` elements.
    """
    if cap is None:
        cap = DEFAULT_CAP
    if cap <= 0:
        raise ValueError(f'Enumeration cap must be positive, got {cap}')
    if generators is None:
        generators = tuple(range(1, rs.rank + 1))
        known = weyl_group_order(rs.cartan_type)
        if known > cap:
            raise CapExceeded(known, cap)
    else:
        generators = tuple(sorted(set(generators)))
        for i in generators:
            rs.check_index(i)

    group = _ENUMERATIONS.get((rs, generators))
    if group is None:
        LGR.info(f'Enumerate Weyl group of {rs.cartan_type} (generators {generators})')
        elements = _bfs(rs, generators, cap)
        group = GroupEnumeration(tuple(elements), len(elements))
        # Keep the few most recent enumerations, they are reused across nodes
        if len(_ENUMERATIONS) >= 8:
            _ENUMERATIONS.pop(next(iter(_ENUMERATIONS)))
        _ENUMERATIONS[(rs, generators)] = group
    elif group.order > cap:
        raise CapExceeded(group.order, cap)
    return group


"""
Copyright 2026, qchev contributors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""
