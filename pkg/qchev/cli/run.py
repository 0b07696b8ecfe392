"""Parser for qchev."""

import argparse
import re

from qchev import _version, utils

__version__ = _version.get_versions()['version']

NEGATIVE_RATIONAL = re.compile(r'^-\d+(/\d+|\.\d+)?$|^-\d*\.\d+$')


def _add_common(parser):
    """Add the configuration and logging flags shared by every command."""
    opt_conf = parser.add_argument_group('Optional Arguments for configuration')
    opt_conf.add_argument(
        '--cap',
        dest='cap',
        type=int,
        help=(
            'Maximum number of Weyl group elements to enumerate. Overrides the '
            f'environment variable {utils.CAP_ENV}. Default: 1000000.'
        ),
        default=None,
    )
    opt_conf.add_argument(
        '--decimal',
        dest='decimal',
        action='store_true',
        help='Add float renderings next to the exact values.',
        default=False,
    )

    opt_log = parser.add_argument_group('Optional Arguments for logging')
    opt_log.add_argument(
        '-debug',
        '--debug',
        dest='debug',
        action='store_true',
        help='Only print debugging info to log file. Default is False.',
        default=False,
    )
    opt_log.add_argument(
        '-quiet',
        '--quiet',
        dest='quiet',
        action='store_true',
        help='Only print warnings to log file. Default is False.',
        default=False,
    )


def _add_format(parser):
    parser.add_argument(
        '--format',
        dest='fmt',
        type=str,
        choices=['json', 'table'],
        help='Format of the report printed on standard output. Default: json.',
        default='json',
    )


def _get_parser():
    """
    Parse command line inputs for this function.

    Returns
    -------
    parser.parse_args() : argparse dict

    """
    parser = argparse.ArgumentParser(
        prog='qchev',
        description=(
            '%(prog)s, exact Gromov width and Seshadri constant upper bounds of '
            'homogeneous spaces G/P with b_2 = 1.\n%(prog)s computes a '
            'nonvanishing degree-one Gromov-Witten invariant through a point '
            'with the quantum Chevalley formula, and turns it into bounds for '
            'single spaces and products.\n'
            f'Version {__version__}'
        ),
    )
    parser.add_argument(
        '-v', '--version', action='version', version=('%(prog)s ' + __version__)
    )
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    analyze = subparsers.add_parser(
        'analyze', help='Analyze a single space, e.g. "A3:2" for Gr(2, 4).'
    )
    # "--scale -1/2" is a value, not a flag
    analyze._negative_number_matcher = NEGATIVE_RATIONAL
    required = analyze.add_argument_group('Required Argument')
    required.add_argument(
        'descriptor',
        type=str,
        help=(
            'Space as FAMILYrank:node, with Bourbaki numbering of the excluded '
            'simple root.'
        ),
    )
    opt_an = analyze.add_argument_group('Optional Arguments for the bound')
    opt_an.add_argument(
        '--scale',
        dest='scale',
        type=str,
        help=(
            'Nonzero rational scaling of the symplectic form, e.g. "3" or "-1/2". '
            'Default: 1, i.e. the form takes value pi on the generator of H_2.'
        ),
        default=None,
    )
    _add_format(opt_an)
    _add_common(analyze)

    atlas = subparsers.add_parser(
        'atlas', help='Sweep every b_2 = 1 space up to a rank and export records.'
    )
    required = atlas.add_argument_group('Required Argument')
    required.add_argument(
        '--max-rank',
        dest='max_rank',
        type=int,
        help='Largest rank of the sweep.',
        required=True,
    )
    required.add_argument(
        '--out',
        dest='out',
        type=str,
        help=(
            'JSON-lines output file. A CSV summary and a timing sidecar are '
            'written next to it, logs in a "logs" folder in the same directory.'
        ),
        required=True,
    )
    opt_at = atlas.add_argument_group('Optional Arguments for the sweep')
    opt_at.add_argument(
        '--dedup',
        dest='dedup',
        action='store_true',
        help='Keep one space per orbit of the Dynkin diagram automorphisms.',
        default=False,
    )
    opt_at.add_argument(
        '--n-jobs',
        dest='n_jobs',
        type=int,
        help='Number of worker processes. Default: 1.',
        default=1,
    )
    _add_common(atlas)

    product = subparsers.add_parser(
        'product', help='Bound a product of (rescaled) spaces.'
    )
    required = product.add_argument_group('Required Argument')
    required.add_argument(
        'factors',
        type=str,
        nargs='+',
        help=(
            'Factors as FAMILYrank:node[:scaling], e.g. "A3:2:-1/2", or "any" '
            'for an arbitrary closed symplectic manifold.'
        ),
    )
    _add_format(product)
    _add_common(product)

    return parser


def _check_opt_conf(parser):
    """
    Check for particular configuration flags.

    Parameters
    ----------
    parser : argparse.Namespace
        Parsed options.

    Returns
    -------
    parser : argparse.Namespace
        Options with `cap` resolved from the flag, the environment, or the
        default, in this order.

    Raises
    ------
    ValueError
        If the cap is not a positive integer, or the atlas options are out of
        range.
    """
    parser.cap = utils.resolve_cap(parser.cap)

    if parser.command == 'atlas':
        if parser.max_rank < 1:
            raise ValueError(f'--max-rank must be at least 1, got {parser.max_rank}')
        if parser.n_jobs < 1:
            raise ValueError(f'--n-jobs must be at least 1, got {parser.n_jobs}')

    return parser


if __name__ == '__main__':
    raise RuntimeError(
        'qchev/cli/run.py should not be run directly;\n Please `pip install` '
        'qchev and use the `qchev` command'
    )


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
