#!/usr/bin/env python3
"""Tests for utils."""

import configparser
import os
import sys
from fractions import Fraction
from pathlib import Path
from unittest.mock import patch

import pytest

from qchev import _version, utils
from qchev.weyl import DEFAULT_CAP

# ## Unit tests


@pytest.mark.parametrize(
    'var, dtype, out',
    [
        (10, 'int', 10),
        (10.0, 'int', 10),
        ('10', 'int', 10),
        (None, 'int', None),
        ('', 'int', ''),
        (10, 'float', 10.0),
        ('10.0', 'float', 10.0),
        (10, 'str', '10'),
        ([10], 'str', '[10]'),
        (10, 'list', [10]),
        ([10], 'list', [10]),
        ('1/2', 'fraction', Fraction(1, 2)),
        (' -3 ', 'fraction', Fraction(-3)),
        ('0.25', 'fraction', Fraction(1, 4)),
        (2, 'fraction', Fraction(2)),
        (None, 'fraction', None),
    ],
)
def test_if_declared_force_type(var, dtype, out):
    assert utils.if_declared_force_type(var, dtype) == out


def test_if_declared_force_type_logging():
    with patch.object(utils.LGR, 'debug') as mock_debug:
        utils.if_declared_force_type(10, 'str', 'my_var')
        mock_debug.assert_called_with(
            "Changing type of variable my_var from <class 'int'> to str"
        )
        mock_debug.reset_mock()

        utils.if_declared_force_type('10', 'str', 'my_var')
        mock_debug.assert_not_called()

        utils.if_declared_force_type(10.0, 'int', 'my_var', silent=True)
        mock_debug.assert_not_called()


def test_check_ext():
    all_ext = ['.jsonl', '.json']
    assert utils.check_ext(all_ext, 'atlas.jsonl') == [True, 'atlas.jsonl']
    assert utils.check_ext(all_ext, 'atlas.JSONL', remove=True) == [
        True,
        'atlas',
        '.JSONL',
    ]
    assert utils.check_ext(all_ext, 'atlas.csv') == [False, 'atlas.csv']
    assert utils.check_ext(all_ext, 'atlas.csv', remove=True) == [
        False,
        'atlas.csv',
        None,
    ]
    assert utils.check_ext('.csv', 'out/atlas.csv', remove=True)[1] == 'out/atlas'


@pytest.mark.parametrize(
    'value, unit, out',
    [
        (Fraction(1), 'π', '1 π'),
        (Fraction(1, 2), 'π', '1/2 π'),
        (Fraction(-3, 4), 'π', '-3/4 π'),
        (3, '', '3'),
        (Fraction(6, 4), '', '3/2'),
    ],
)
def test_format_rational(value, unit, out):
    assert utils.format_rational(value, unit) == out


def test_resolve_cap(monkeypatch):
    monkeypatch.delenv(utils.CAP_ENV, raising=False)
    assert utils.resolve_cap() == DEFAULT_CAP
    assert utils.resolve_cap(10) == 10

    monkeypatch.setenv(utils.CAP_ENV, '500')
    assert utils.resolve_cap() == 500
    # The flag wins over the environment
    assert utils.resolve_cap(20) == 20

    monkeypatch.setenv(utils.CAP_ENV, '')
    assert utils.resolve_cap() == DEFAULT_CAP


def test_save_bash_call(tmp_path):
    with patch.object(sys, 'argv', ['qchev', 'atlas', '--max-rank', '2']):
        fname = utils.save_bash_call(tmp_path)
    assert os.path.dirname(fname) == os.path.join(str(tmp_path), 'logs')
    assert os.path.basename(fname).startswith('qchev_call_')
    with open(fname, encoding='utf-8') as f:
        assert f.read() == '#!/bin/bash \nqchev atlas --max-rank 2\n'



def test_version_metadata():
    setup_cfg = Path(__file__).resolve().parents[2] / 'setup.cfg'
    if not setup_cfg.exists():
        pytest.skip('Not running from a source tree')
    config = configparser.ConfigParser(interpolation=None)
    config.read(setup_cfg, encoding='utf-8')
    assert config['metadata']['version'] == 'attr: qchev._version.__version__'
    assert _version.get_versions()['version'] == _version.__version__

# ## Break tests


def test_break_if_declared_force_type():
    with pytest.raises(NotImplementedError) as errorinfo:
        utils.if_declared_force_type('obj', 'complex')
    assert 'not supported' in str(errorinfo.value)

    for var, dtype in (('abc', 'int'), ('1/0', 'fraction'), ('x', 'fraction')):
        with pytest.raises(ValueError) as errorinfo:
            utils.if_declared_force_type(var, dtype, 'scale')
        assert 'Cannot read scale' in str(errorinfo.value)


def test_break_resolve_cap(monkeypatch):
    monkeypatch.setenv(utils.CAP_ENV, 'abc')
    with pytest.raises(ValueError) as errorinfo:
        utils.resolve_cap()
    assert utils.CAP_ENV in str(errorinfo.value)

    monkeypatch.delenv(utils.CAP_ENV)
    for cap in (0, -5):
        with pytest.raises(ValueError) as errorinfo:
            utils.resolve_cap(cap)
        assert 'must be positive' in str(errorinfo.value)
