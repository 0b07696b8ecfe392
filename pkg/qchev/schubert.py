#!/usr/bin/env python3
"""
Parabolic quotients W^P with b_2 = 1 and their Schubert bases.

A maximal parabolic is given by the single simple root it excludes (``beta``).
Schubert classes are indexed by minimal-length coset representatives of
``W / W_P``; each class carries a grading flag telling whether its level is a
complex dimension (``sigma(u)``) or a complex codimension (``sigma_u``).

Attributes
----------
GRADINGS : tuple
    Allowed grading flags.
LGR :
    Logger
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from qchev.errors import GradingError, IndexOutOfRange, InvalidParabolic
from qchev.weyl import DEFAULT_CAP, WeylElement, enumerate_group, longest_element

GRADINGS = ('dimension', 'codimension')

LGR = logging.getLogger(__name__)
LGR.setLevel(logging.INFO)


@dataclass(frozen=True)
class ParabolicChoice:
    """
    A maximal parabolic subgroup, given by its excluded simple root.

    Parameters
    ----------
    root_system : RootSystem
        The root system of G.
    beta : int
        1-based index of the excluded simple root.

    Raises
    ------
    InvalidParabolic
        If `beta` is not a valid node.
    """

    root_system: object
    beta: int

    def __post_init__(self):
        try:
            self.root_system.check_index(self.beta)
        except IndexOutOfRange as err:
            raise InvalidParabolic(str(err))

    @classmethod
    def from_excluded(cls, root_system, excluded):
        """
        Build a parabolic from the set of excluded nodes.

        Parameters
        ----------
        root_system : RootSystem
            The root system.
        excluded : iterable of int
            Excluded 1-based nodes. Must contain exactly one node (b_2 = 1).

        Raises
        ------
        InvalidParabolic
            If `excluded` does not contain exactly one node.
        """
        excluded = sorted(set(excluded))
        if len(excluded) != 1:
            raise InvalidParabolic(
                f'Exactly one simple root must be excluded (b_2 = 1), got {excluded}'
            )
        return cls(root_system, excluded[0])

    def __str__(self):
        return f'{self.root_system.cartan_type}:{self.beta}'

    @property
    def included(self):
        """1-based nodes of the Levi part, i.e. all nodes but `beta`."""
        return tuple(i for i in range(1, self.root_system.rank + 1) if i != self.beta)

    @cached_property
    def parabolic_roots(self):
        """Positive roots supported on the included nodes."""
        return tuple(
            r for r in self.root_system.positive_roots if r[self.beta - 1] == 0
        )

    @cached_property
    def outside_roots(self):
        """Positive roots with a nonzero ``beta`` coordinate."""
        return tuple(r for r in self.root_system.positive_roots if r[self.beta - 1] > 0)

    @cached_property
    def s_beta(self):
        """The simple reflection ``s_beta``."""
        return WeylElement.simple(self.root_system, self.beta)


@dataclass(frozen=True)
class SchubertClass:
    """
    A Schubert class indexed by a minimal coset representative.

    Parameters
    ----------
    rep : WeylElement
        Minimal-length representative of the coset ``rep W_P``.
    grading : {'dimension', 'codimension'}
        Whether `level` is the complex dimension or codimension of the class.
    level : int
        ``l(rep)``.
    """

    rep: WeylElement
    grading: str = 'codimension'
    level: int = field(default=None)

    def __post_init__(self):
        if self.grading not in GRADINGS:
            raise GradingError(
                f'Grading {self.grading!r} not supported. Use one of {GRADINGS}'
            )
        if self.level is None:
            object.__setattr__(self, 'level', self.rep.length)

    def regrade(self, grading):
        """Same representative with another grading flag."""
        return SchubertClass(self.rep, grading, self.level)

    def real_dimension(self, n):
        """
        Real dimension of the class in a space of complex dimension `n`.

        Parameters
        ----------
        n : int
            Complex dimension of G/P.
        """
        if self.grading == 'dimension':
            return 2 * self.level
        return 2 * (n - self.level)


@dataclass(frozen=True)
class SpaceInvariants:
    """Complex dimension, Fano index and number of Schubert classes of G/P."""

    complex_dimension: int
    index: int
    schubert_count: int


def is_minimal(w, p):
    """Whether ``w(alpha_i)`` is positive for every included node ``i``."""
    return not any(w.is_descent(i) for i in p.included)


def minimal_coset_rep(w, p):
    """
    Minimal-length representative of ``w W_P``.

    Right multiplies by ``s_i``, ``i`` in the Levi part, while that shortens
    the element. Any reduction order reaches the same representative.

    Parameters
    ----------
    w : WeylElement
        Any element.
    p : ParabolicChoice
        The parabolic.

    Returns
    -------
    WeylElement
        The minimal representative.
    """
    while True:
        for i in p.included:
            if w.is_descent(i):
                w = w * WeylElement.simple(p.root_system, i)
                break
        else:
            return w


def point_class(p):
    """The codimension-n class ``sigma_{[w_0]}``, the class of a point."""
    rep = minimal_coset_rep(longest_element(p.root_system), p)
    return SchubertClass(rep, 'codimension')


def fundamental_class(p):
    """The codimension-0 class ``sigma_{[1]}``."""
    return SchubertClass(WeylElement.identity(p.root_system), 'codimension', 0)


def enumerate_schubert_basis(p, cap=DEFAULT_CAP, grading='codimension'):
    """
    Enumerate the Schubert basis of G/P.

    Parameters
    ----------
    p : ParabolicChoice
        The parabolic.
    cap : int, optional
        Enumeration cap for the Weyl group.
    grading : {'dimension', 'codimension'}, optional
        Grading flag given to every class. Default: 'codimension'.

    Returns
    -------
    list of SchubertClass
        One class per coset, sorted by level then representative.

    Raises
    ------
    CapExceeded
        If |W| exceeds `cap`.
    """
    group = enumerate_group(p.root_system, cap)
    basis = [SchubertClass(w, grading, w.length) for w in group.elements if is_minimal(w, p)]
    LGR.info(f'{p} has {len(basis)} Schubert classes')
    return basis


def dual_class(u, p):
    """
    Poincare dual class ``u -> [w_0 u]``, with the grading flipped.

    ``sigma(u) = sigma_{u^vee}`` with ``u^vee = w_0 u``, so the returned class
    is the same cohomology class seen from the other grading.

    Parameters
    ----------
    u : SchubertClass
        A basis class.
    p : ParabolicChoice
        The parabolic.

    Returns
    -------
    SchubertClass
        The dual class; ``level(u) + level(dual) = n``.
    """
    rep = minimal_coset_rep(longest_element(p.root_system) * u.rep, p)
    flipped = 'codimension' if u.grading == 'dimension' else 'dimension'
    return SchubertClass(rep, flipped)


def space_invariants(p, cap=DEFAULT_CAP):
    """
    Complex dimension, Fano index and Schubert count of G/P.

    The index is ``<sum of roots outside the Levi part, beta^vee>``, i.e. the
    first Chern class evaluated on the generator of H_2.

    Parameters
    ----------
    p : ParabolicChoice
        The parabolic.
    cap : int, optional
        Enumeration cap, used to count the Schubert classes.

    Returns
    -------
    SpaceInvariants
        The invariants.
    """
    return SpaceInvariants(
        complex_dimension=complex_dimension(p),
        index=fano_index(p),
        schubert_count=len(enumerate_schubert_basis(p, cap)),
    )


def complex_dimension(p):
    """Complex dimension ``|R+| - |R_P+|``."""
    return len(p.outside_roots)


def fano_index(p):
    """Fano index ``c_1(A)`` of G/P."""
    total = [sum(col) for col in zip(*p.outside_roots)]
    return p.root_system.pair_root_coroot(total, p.beta)


def adjacent_partner(u, p, lift=None):
    """
    Partner class ``v = [lift s_beta]^vee`` of `u`.

    ``u`` and ``v^vee`` are adjacent: the fixed points ``lift P`` and
    ``lift s_beta P`` lie on a T-stable curve of degree one, whatever lift of
    ``u`` is used.

    Parameters
    ----------
    u : SchubertClass
        A basis class.
    p : ParabolicChoice
        The parabolic.
    lift : WeylElement or None, optional
        Element of the coset ``u.rep W_P``. Default: ``u.rep``.

    Returns
    -------
    SchubertClass
        The class indexed by `v`, with the grading of `u`.

    Raises
    ------
    ValueError
        If `lift` is not in the coset of `u`.
    """
    if lift is None:
        lift = u.rep
    elif minimal_coset_rep(lift, p) != u.rep:
        raise ValueError(f'{lift} does not lie in the coset of {u.rep}')
    step = SchubertClass(minimal_coset_rep(lift * p.s_beta, p), u.grading)
    return dual_class(step, p).regrade(u.grading)


def is_cominuscule(p):
    """
    Whether G/P is a compact Hermitian symmetric space.

    This is the case when ``beta`` appears with coefficient one in the
    highest root.
    """
    return p.root_system.highest_root[p.beta - 1] == 1


def is_hermitian_symmetric(p):
    """
    Whether G/P is biholomorphic to a compact Hermitian symmetric space.

    Besides the cominuscule cases, ``B_n/P_n`` is ``D_{n+1}/P_{n+1}``,
    ``C_n/P_1`` is ``CP^{2n-1}`` and ``G_2/P_1`` is the quadric ``Q^5``.
    """
    ctype = p.root_system.cartan_type
    coincidences = {('B', ctype.rank), ('C', 1), ('G', 1)}
    return is_cominuscule(p) or (ctype.family, p.beta) in coincidences


def poincare_polynomial(basis):
    """
    Betti numbers of G/P by level.

    Parameters
    ----------
    basis : list of SchubertClass
        A Schubert basis.

    Returns
    -------
    list of int
        Entry ``k`` is the number of classes of level ``k``.
    """
    counts = Counter(u.level for u in basis)
    return [counts.get(k, 0) for k in range(max(counts) + 1)]


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
