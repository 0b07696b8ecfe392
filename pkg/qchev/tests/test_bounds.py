#!/usr/bin/env python3
"""Tests for bounds."""

import random
from fractions import Fraction

import pytest

from qchev import bounds
from qchev.bounds import ANY_CLOSED, NormalizationScale, NormalizedFactor
from qchev.errors import (
    NoHomogeneousFactor,
    NonHomogeneousFactor,
    ScaledFactorsUnsupported,
    ZeroScaling,
)

SMALL_SPACES = ['A1:1', 'A2:1', 'A3:1', 'A3:2', 'B2:1', 'C2:2', 'G2:1', 'G2:2']


def _keys(report):
    return [c.key for c in report.citations]


# ## Unit tests


@pytest.mark.parametrize('descriptor', ['A1:1', 'A3:2', 'B3:2', 'G2:2', 'F4:1'])
def test_single_space_bound(descriptor, parabolic):
    report = bounds.single_space_bound(parabolic(descriptor))
    assert report.gromov_width_upper == 1
    assert report.gw_capacity_value == 1
    assert report.seshadri_upper == 1
    assert len(report.witnesses) == 1
    keys = _keys(report)
    assert keys[-2:] == ['seshadri-transfer', 'seshadri']
    if descriptor == 'A1:1':
        assert tuple(keys[:2]) == bounds.LOW_DIMENSION_CHAIN
        assert 'gw-capacity' not in keys
    else:
        assert tuple(keys[:6]) == bounds.SINGLE_SPACE_CHAIN
        assert 'low-dimension' not in keys


def test_single_space_bound_projective_line_scaled(cp1):
    report = bounds.single_space_bound(cp1, NormalizationScale(3))
    assert report.gromov_width_upper == 3
    assert _keys(report) == ['gw-nonvanishing', 'low-dimension', 'conformality']


def test_citations():
    for key, citation in bounds.CITATIONS.items():
        assert citation.key == key
        assert citation.label and citation.statement and citation.anchor

    # Each GW capacity bounds only its own pseudo capacity
    capacity = bounds.CITATIONS['gw-capacity'].statement
    assert 'C_HZ^(2)(M, w; pt, gamma) <= GW(M, w; pt, gamma)' in capacity
    assert 'C_HZ^(2o)(M, w; pt, gamma) <= GW_0(M, w; pt, gamma)' in capacity
    assert 'C_HZ^(2o)(M, w; pt, gamma) <= GW(' not in capacity
    comparison = bounds.CITATIONS['capacity-comparison'].statement
    assert comparison.startswith('c_G(M, w) <= C_HZ^(2)')


def test_single_space_bound_scaled(gr24):
    report = bounds.single_space_bound(gr24, NormalizationScale.from_factor(-3))
    assert report.gromov_width_upper == 3
    assert report.gw_capacity_value == 3
    assert report.seshadri_upper is None
    assert _keys(report)[-1] == 'conformality'


@pytest.mark.parametrize(
    'descriptor, sharpness',
    [('A3:2', 'exact'), ('B3:3', 'exact'), ('G2:1', 'exact'), ('G2:2', 'conjectural')],
)
def test_single_space_sharpness(descriptor, sharpness, parabolic):
    assert bounds.single_space_bound(parabolic(descriptor)).sharpness == sharpness


def test_product_bound_examples(parabolic):
    report = bounds.product_bound(
        [NormalizedFactor(parabolic('A1:1')), NormalizedFactor(parabolic('A3:2'))]
    )
    assert report.gromov_width_upper == 1
    assert report.seshadri_upper == 1
    assert 'product-width' in _keys(report)

    report = bounds.product_bound(
        [
            NormalizedFactor(parabolic('A2:1'), 2),
            NormalizedFactor(parabolic('A3:1'), 3),
            NormalizedFactor(parabolic('B2:1'), Fraction(1, 2)),
        ]
    )
    assert report.gromov_width_upper == Fraction(1, 2)
    assert report.seshadri_upper is None
    assert report.gw_capacity_value is None

    report = bounds.product_bound(
        [NormalizedFactor(ANY_CLOSED), NormalizedFactor(parabolic('A2:1'), -2)]
    )
    assert report.gromov_width_upper == 2
    assert report.seshadri_upper is None
    assert len(report.witnesses) == 1
    assert _keys(report)[:5] == [
        'gw-nonvanishing',
        'gw-agreement',
        'gw-product',
        'product-capacity',
        'capacity-comparison',
    ]
    assert _keys(report)[-1] == 'mixed-width'


def test_product_bound_projective_line(cp1):
    report = bounds.product_bound([NormalizedFactor(cp1, Fraction(-1, 2))])
    assert report.gromov_width_upper == Fraction(1, 2)
    assert _keys(report) == ['gw-nonvanishing', 'low-dimension', 'conformality']

    report = bounds.product_bound([NormalizedFactor(cp1), NormalizedFactor(cp1)])
    assert 'gw-product' in _keys(report)


def test_product_bound_random(parabolic):
    rng = random.Random(20)
    spaces = [parabolic(d) for d in SMALL_SPACES]
    for _ in range(100):
        factors = []
        for _ in range(rng.randint(1, 4)):
            if rng.random() < 0.2:
                factors.append(NormalizedFactor(ANY_CLOSED))
                continue
            scaling = Fraction(rng.randint(1, 10), rng.randint(1, 4)) / 2
            scaling = min(scaling, Fraction(5)) * rng.choice([-1, 1])
            factors.append(NormalizedFactor(rng.choice(spaces), scaling))
        factors.append(NormalizedFactor(rng.choice(spaces), rng.choice([-5, 1, 5])))
        rng.shuffle(factors)

        expected = min(abs(f.scaling) for f in factors if f.homogeneous)
        assert bounds.product_bound(factors).gromov_width_upper == expected


def test_seshadri_bound(parabolic):
    rng = random.Random(7)
    for _ in range(20):
        chosen = rng.sample(SMALL_SPACES, rng.randint(1, 3))
        factors = [NormalizedFactor(parabolic(d)) for d in chosen]
        assert bounds.seshadri_bound(factors) == 1
    assert bounds.seshadri_bound([NormalizedFactor(parabolic('A2:1'))]) == 1


def test_monotone_constant(cp1, gr24):
    assert bounds.monotone_constant(cp1) == Fraction(1, 2)
    assert bounds.monotone_constant(gr24) == Fraction(1, 4)
    assert bounds.monotone_constant(gr24, NormalizationScale(2)) == Fraction(1, 2)


@pytest.mark.parametrize('n', [1, 2, 3, 5])
def test_monotone_constant_projective(n, parabolic):
    assert bounds.monotone_constant(parabolic(f'A{n}:1')) == Fraction(1, n + 1)


def test_report_to_dict(cp1, gr24):
    out = bounds.single_space_bound(cp1).to_dict()
    assert out['width_upper'] == '1 π'
    assert out['gw_capacity'] == '1 π'
    assert out['seshadri_upper'] == '1'
    assert out['sharpness'] == 'exact'
    assert out['citations'][0] == 'gw-nonvanishing'
    assert 'width_upper_decimal' not in out

    half = NormalizationScale(Fraction(1, 2))
    out = bounds.single_space_bound(gr24, half).to_dict(decimal=True)
    assert out['width_upper'] == '1/2 π'
    assert out['width_upper_decimal'] == 0.5
    assert out['seshadri_upper'] is None
    assert 'seshadri_upper_decimal' not in out


def test_any_closed_is_singleton():
    assert bounds.AnyClosedSymplectic() is ANY_CLOSED
    assert str(ANY_CLOSED) == 'any'
    assert not NormalizedFactor(ANY_CLOSED).homogeneous


# ## Break tests


def test_break_product_bound(parabolic):
    with pytest.raises(NoHomogeneousFactor) as errorinfo:
        bounds.product_bound([NormalizedFactor(ANY_CLOSED)])
    assert 'homogeneous factor is required' in str(errorinfo.value)

    with pytest.raises(NoHomogeneousFactor):
        bounds.product_bound([])


def test_break_zero_scaling(cp1):
    with pytest.raises(ZeroScaling) as errorinfo:
        NormalizedFactor(cp1, 0)
    assert 'scaled by zero' in str(errorinfo.value)

    with pytest.raises(ZeroScaling):
        NormalizationScale.from_factor(Fraction(0))

    with pytest.raises(ValueError) as errorinfo:
        NormalizationScale(-1)
    assert 'must be positive' in str(errorinfo.value)


def test_break_seshadri_bound(cp1, gr24):
    with pytest.raises(ScaledFactorsUnsupported) as errorinfo:
        bounds.seshadri_bound([NormalizedFactor(cp1), NormalizedFactor(gr24, 2)])
    assert '1 factor(s) are rescaled' in str(errorinfo.value)

    with pytest.raises(NonHomogeneousFactor) as errorinfo:
        bounds.seshadri_bound([NormalizedFactor(cp1), NormalizedFactor(ANY_CLOSED)])
    assert 'homogeneous space' in str(errorinfo.value)


def test_break_bound_report(cp1):
    report = bounds.single_space_bound(cp1)
    with pytest.raises(ValueError) as errorinfo:
        bounds.BoundReport(Fraction(0), citations=report.citations)
    assert 'must be positive' in str(errorinfo.value)

    with pytest.raises(ValueError) as errorinfo:
        bounds.BoundReport(Fraction(1), citations=report.citations[1:])
    assert 'witness citation' in str(errorinfo.value)
