#!/usr/bin/env python3
"""
Utils functions for qchev.

Attributes
----------
CAP_ENV : str
    Name of the environment variable overriding the enumeration cap.
LGR :
    Logger
"""

import datetime
import logging
import os
import sys
from fractions import Fraction
from pathlib import Path

from qchev.weyl import DEFAULT_CAP

CAP_ENV = 'QCHEV_CAP'

LGR = logging.getLogger(__name__)
LGR.setLevel(logging.INFO)


def if_declared_force_type(var, dtype, varname='an input variable', silent=False):
    """
    Make sure `var` is of type `dtype`.

    Parameters
    ----------
    var : str, int, float, or Fraction
        Variable to change type of
    dtype : str
        Type to change `var` to
    varname : str, optional
        The name of the variable
    silent : bool, optional
        If True, don't return any message

    Returns
    -------
    int, float, str, list, Fraction, or var
        The given `var` in the given `dtype`, or `var` if '' or None

    Raises
    ------
    NotImplementedError
        If dtype is not 'int', 'float', 'str', 'list', or 'fraction'
    ValueError
        If `var` cannot be read as `dtype`
    """
    if var is None or var == '':
        return var

    converters = {
        'int': int,
        'float': float,
        'str': str,
        'list': lambda v: v if isinstance(v, list) else [v],
        'fraction': lambda v: Fraction(str(v).strip()),
    }

    if dtype not in converters:
        raise NotImplementedError(f'Type {dtype} not supported')

    try:
        tmpvar = converters[dtype](var)
    except (ValueError, ZeroDivisionError) as err:
        raise ValueError(f'Cannot read {varname} {var!r} as {dtype}: {err}')

    if not silent and type(tmpvar) is not type(var):
        name = f'variable {varname}' if varname != 'an input variable' else varname
        LGR.debug(f'Changing type of {name} from {type(var)} to {dtype}')

    return tmpvar


def check_ext(all_ext, fname, remove=False):
    """Check which extension a file has, and possibly remove it.

    Parameters
    ----------
    all_ext : list
        All possible extensions to check within.
    fname : str or os.PathLike
        The filename to check.
    remove : bool, optional
        Remove the extension from fname if it has one.

    Returns
    -------
    obj_return : Uses a list to return variable amount of options.
        has_ext : boolean
            True if the extension is found, false otherwise.
        fname : str
            If ``remove`` is True, return (extensionless) fname.
        ext : str
            If both ``remove`` and ``has_ext`` are True, returns also found extension.
    """
    all_ext = if_declared_force_type(all_ext, 'list', silent=True)
    fname = str(fname)
    ext = Path(fname).suffix
    LGR.debug(f'{fname} ends with extension {ext}')

    has_ext = ext.lower() in all_ext
    ext = '' if not has_ext else ext

    obj_return = [has_ext]

    if remove:
        obj_return += [
            fname[: -len(ext)] if ext else fname,
            None if ext == '' else ext,
        ]
    else:
        obj_return += [fname]

    return obj_return[:]


def format_rational(value, unit=''):
    """
    Render an exact rational as ``'p/q'``, or ``'p'`` if integral.

    Parameters
    ----------
    value : Fraction or int
        The value.
    unit : str, optional
        Suffix, e.g. ``'π'``, separated by a space.

    Returns
    -------
    str
        E.g. ``'1 π'``, ``'1/2 π'`` or ``'3'``.
    """
    value = Fraction(value)
    text = str(value.numerator) if value.denominator == 1 else str(value)
    return f'{text} {unit}' if unit else text


def resolve_cap(cap=None):
    """
    Enumeration cap: `cap` if given, else ``$QCHEV_CAP``, else the default.

    Raises
    ------
    ValueError
        If the resolved cap is not a positive integer.
    """
    if cap is None:
        env = os.environ.get(CAP_ENV)
        cap = DEFAULT_CAP if env in (None, '') else if_declared_force_type(
            env, 'int', CAP_ENV, silent=True
        )
    cap = int(cap)
    if cap <= 0:
        raise ValueError(f'Enumeration cap must be positive, got {cap}')
    return cap


def save_bash_call(outdir):
    """
    Save the bash call into file `logs/qchev_call_<isotime>.sh`.

    Parameters
    ----------
    outdir : str or path
        Output directory

    Returns
    -------
    str
        Path of the written file.
    """
    arg_str = ' '.join(sys.argv[1:])
    call_str = f'qchev {arg_str}'
    outdir = os.path.abspath(outdir or '.')
    log_path = os.path.join(outdir, 'logs')
    os.makedirs(log_path, exist_ok=True)
    isotime = datetime.datetime.now().strftime('%Y-%m-%dT%H%M%S')
    fname = os.path.join(log_path, f'qchev_call_{isotime}.sh')
    with open(fname, 'a', encoding='utf-8', newline='\n') as f:
        f.write(f'#!/bin/bash \n{call_str}\n')
    return fname


"""
Copyright 2021-2026, Stefano Moia & qchev contributors.

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
