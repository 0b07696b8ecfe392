#!/usr/bin/env python3
"""
Main workflows of qchev.

Attributes
----------
EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_LEMMA, EXIT_IO : int
    Exit codes of the command line interface.
LGR :
    Logger
"""

import datetime
import logging
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from qchev import _version, io, utils
from qchev.bounds import (
    NormalizationScale,
    product_bound,
    seshadri_bound,
    single_space_bound,
)
from qchev.cli.run import _check_opt_conf, _get_parser
from qchev.errors import (
    CapExceeded,
    LemmaViolation,
    NonHomogeneousFactor,
    QchevError,
    ScaledFactorsUnsupported,
)
from qchev.roots import weyl_group_order
from qchev.schubert import is_cominuscule, space_invariants

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_LEMMA = 4
EXIT_IO = 5

LGR = logging.getLogger(__name__)
LGR.setLevel(logging.INFO)


def _setup_logging(quiet=False, debug=False, logdir=None):
    """
    Configure the root logger, optionally adding a TSV log file in `logdir`.

    Returns
    -------
    logging.FileHandler or None
        The file handler, so that it can be closed at the end of the run.
    """
    if quiet:
        level = logging.WARNING
    elif debug:
        level = logging.DEBUG
    else:
        level = logging.INFO

    handlers = [logging.StreamHandler(sys.stderr)]
    log_handler = None
    if logdir is not None:
        os.makedirs(logdir, exist_ok=True)
        isotime = datetime.datetime.now().strftime('%Y-%m-%dT%H%M%S')
        logname = os.path.join(logdir, f'qchev_{isotime}.tsv')
        log_formatter = logging.Formatter(
            '%(asctime)s\t%(name)-12s\t%(levelname)-8s\t%(message)s',
            datefmt='%Y-%m-%dT%H:%M:%S',
        )
        log_handler = logging.FileHandler(logname, encoding='utf-8')
        log_handler.setFormatter(log_formatter)
        handlers.append(log_handler)

    logging.basicConfig(
        level=level,
        handlers=handlers,
        format='%(levelname)-10s %(message)s',
        force=True,
    )
    # Module loggers default to INFO
    for name in list(logging.root.manager.loggerDict):
        if name.startswith('qchev'):
            logging.getLogger(name).setLevel(level)

    version_number = _version.get_versions()['version']
    LGR.info(f'Currently running qchev version {version_number}')
    return log_handler


def analyze_space(descriptor, scale=None, cap=None, decimal=False):
    """
    Run the whole pipeline on one space and build its record.

    Parameters
    ----------
    descriptor : SpaceDescriptor
        The space.
    scale : Fraction or None, optional
        Scaling of the symplectic form. Default: ``w(A) = pi``.
    cap : int or None, optional
        Enumeration cap. Default: resolved by `utils.resolve_cap`.
    decimal : bool, optional
        Add float renderings of the bounds. Default: False.

    Returns
    -------
    dict
        The record, see ``io.ATLAS_RECORD_SCHEMA``.

    Raises
    ------
    CapExceeded
        If the Weyl group is larger than `cap`.
    LemmaViolation
        If no witness is found.
    """
    cap = utils.resolve_cap(cap)
    LGR.info(f'Analyze {descriptor}')
    p = descriptor.parabolic()
    invariants = space_invariants(p, cap)
    norm = NormalizationScale() if scale is None else NormalizationScale.from_factor(scale)
    report = single_space_bound(p, norm)
    witness = report.witnesses[0]
    n, index = invariants.complex_dimension, invariants.index

    record = _descriptor_fields(descriptor)
    record.update(
        {
            'status': 'ok',
            'complex_dimension': n,
            'index': index,
            'schubert_count': invariants.schubert_count,
            'cominuscule': is_cominuscule(p),
            'witness': {
                'alpha_dim': n - witness.alpha_class.level,
                'beta_dim': witness.beta_class.level,
                'coefficient': witness.coefficient,
                'real_dim_sum': witness.real_dim_sum,
                'dim_relation': 4 * n - 2 * index,
                'dim_relation_ok': witness.real_dim_sum == 4 * n - 2 * index,
            },
            'bounds': report.to_dict(decimal=decimal),
        }
    )
    return record


def _descriptor_fields(descriptor):
    return {
        'descriptor': str(descriptor),
        'family': descriptor.family,
        'rank': descriptor.rank,
        'node': descriptor.node,
        'canonical': descriptor.canonical,
        'weyl_order': weyl_group_order(descriptor.cartan_type),
    }


def _atlas_entry(descriptor, cap, decimal):
    """Record of one atlas descriptor, skipped if over the cap, with its wall time."""
    start = time.perf_counter()
    try:
        record = analyze_space(descriptor, cap=cap, decimal=decimal)
    except CapExceeded as err:
        LGR.warning(f'Skip {descriptor}: {err}')
        record = _descriptor_fields(descriptor)
        record.update(
            {
                'status': 'skipped',
                'reason': f'Weyl group order {err.order_lower_bound} exceeds the cap {err.cap}',
            }
        )
    return record, time.perf_counter() - start


def _progress(iterable, total, quiet):
    try:
        from tqdm import tqdm
    except ImportError:
        return iterable
    return tqdm(iterable, total=total, desc='Atlas', unit='spaces', disable=quiet)


def run_atlas(
    max_rank, out, dedup=False, cap=None, n_jobs=1, decimal=False, quiet=False
):
    """
    Sweep every b_2 = 1 homogeneous space up to `max_rank`.

    Writes a JSON-lines file at `out`, a CSV summary next to it (same stem,
    ``.csv``) and wall times in ``<stem>_timing.tsv``. Records are sorted by
    (family, rank, node) before writing.

    Parameters
    ----------
    max_rank : int
        Largest rank.
    out : str or os.PathLike
        JSON-lines output file.
    dedup : bool, optional
        Keep only canonical descriptors. Default: False.
    cap : int or None, optional
        Enumeration cap.
    n_jobs : int, optional
        Number of worker processes. Default: 1.
    decimal : bool, optional
        Add float renderings of the bounds.
    quiet : bool, optional
        Hide the progress bar.

    Returns
    -------
    list of dict
        The records, in output order.
    """
    cap = utils.resolve_cap(cap)
    descriptors = io.iter_descriptors(max_rank, dedup=dedup)
    LGR.info(f'Atlas of {len(descriptors)} spaces up to rank {max_rank} (cap {cap})')

    results = {}
    if n_jobs and n_jobs > 1:
        with ProcessPoolExecutor(max_workers=n_jobs) as pool:
            futures = {
                pool.submit(_atlas_entry, d, cap, decimal): d for d in descriptors
            }
            for fut in _progress(futures, len(futures), quiet):
                results[futures[fut]] = fut.result()
    else:
        for d in _progress(descriptors, len(descriptors), quiet):
            results[d] = _atlas_entry(d, cap, decimal)

    records = [results[d][0] for d in sorted(results)]
    timings = {str(d): results[d][1] for d in results}

    out = Path(out)
    if out.parent and not out.parent.exists():
        out.parent.mkdir(parents=True)
    io.write_jsonl(records, out)
    io.write_csv(records, out.with_suffix('.csv'))
    io.write_timing(timings, out.with_name(f'{out.stem}_timing.tsv'))

    skipped = sum(r['status'] == 'skipped' for r in records)
    LGR.info(f'{len(records) - skipped} spaces analysed, {skipped} skipped')
    return records


def run_product(factor_texts, decimal=False):
    """
    Bound the Gromov width (and, if unscaled, the Seshadri constant) of a product.

    Parameters
    ----------
    factor_texts : list of str
        Factors, e.g. ``['any', 'A2:1:-1/2']``.
    decimal : bool, optional
        Add float renderings.

    Returns
    -------
    dict
        ``factors`` and the rendered BoundReport.
    """
    factors = [io.parse_factor(t) for t in factor_texts]
    report = product_bound(factors)
    out = {'factors': [str(t).strip() for t in factor_texts]}
    out.update(report.to_dict(decimal=decimal))
    try:
        out['seshadri_upper'] = utils.format_rational(seshadri_bound(factors))
    except (ScaledFactorsUnsupported, NonHomogeneousFactor) as err:
        LGR.info(f'No Seshadri bound: {err}')
    out['citation_trail'] = [
        {
            'key': c.key,
            'label': c.label,
            'statement': c.statement,
            'anchor': c.anchor,
        }
        for c in report.citations
    ]
    return out


def _render(payload, fmt):
    if fmt == 'json':
        return io.dumps_record(payload)
    rows = []
    for key, value in payload.items():
        if key == 'citation_trail':
            continue
        if isinstance(value, dict):
            rows += [(f'{key}.{k}', v) for k, v in value.items()]
        elif isinstance(value, list):
            rows.append((key, ', '.join(str(v) for v in value)))
        else:
            rows.append((key, value))
    text = io.render_table(rows)
    for step in payload.get('citation_trail', []):
        text += f'\n  [{step["key"]}] {step["label"]}: {step["statement"]}'
        text += f'\n      {step["anchor"]}'
    return text


def qchev(
    command,
    descriptor=None,
    factors=None,
    scale=None,
    fmt='json',
    decimal=False,
    max_rank=None,
    out=None,
    dedup=False,
    n_jobs=1,
    cap=None,
    quiet=False,
    debug=False,
):
    """
    Run one qchev command and print its report on standard output.

    Parameters
    ----------
    command : {'analyze', 'atlas', 'product'}
        The command.
    descriptor : str, optional
        Space for 'analyze', e.g. ``'A3:2'``.
    factors : list of str, optional
        Factors for 'product'.
    scale : str, optional
        Rational scaling for 'analyze'.
    fmt : {'json', 'table'}, optional
        Output format of 'analyze' and 'product'.
    decimal : bool, optional
        Add float renderings next to exact values.
    max_rank : int, optional
        Largest rank for 'atlas'.
    out : str, optional
        JSON-lines output file for 'atlas'.
    dedup : bool, optional
        Keep only canonical descriptors in 'atlas'.
    n_jobs : int, optional
        Worker processes for 'atlas'.
    cap : int, optional
        Enumeration cap, already resolved.
    quiet, debug : bool, optional
        Logging verbosity.
    """
    log_handler = None
    if command == 'atlas':
        outdir = os.path.dirname(os.path.abspath(out))
        log_handler = _setup_logging(quiet, debug, os.path.join(outdir, 'logs'))
        utils.save_bash_call(outdir)
    else:
        _setup_logging(quiet, debug)

    try:
        if command == 'analyze':
            desc = io.parse_descriptor(descriptor)
            scale = utils.if_declared_force_type(scale, 'fraction', 'scale')
            record = analyze_space(desc, scale=scale, cap=cap, decimal=decimal)
            print(_render(record, fmt))
        elif command == 'product':
            print(_render(run_product(factors, decimal=decimal), fmt))
        elif command == 'atlas':
            records = run_atlas(
                max_rank, out, dedup=dedup, cap=cap, n_jobs=n_jobs, decimal=decimal,
                quiet=quiet,
            )
            rows = [
                (
                    r['descriptor'],
                    'skipped'
                    if r['status'] == 'skipped'
                    else f'n={r["complex_dimension"]} I={r["index"]} '
                    f'c_G <= {r["bounds"]["width_upper"]}',
                )
                for r in records
            ]
            print(io.render_table(rows))
        else:
            raise NotImplementedError(f'Command {command} not supported')
    finally:
        if log_handler is not None:
            logging.getLogger().removeHandler(log_handler)
            log_handler.close()


def _main(argv=None):
    options = _get_parser().parse_args(argv)

    try:
        options = _check_opt_conf(options)
    except ValueError as err:
        print(f'qchev: error: {err}', file=sys.stderr)
        return EXIT_USAGE

    try:
        qchev(**vars(options))
    except CapExceeded as err:
        LGR.error(str(err))
        return EXIT_CAP
    except LemmaViolation as err:
        LGR.error(f'Internal error, please report it: {err}')
        return EXIT_LEMMA
    except (QchevError, ValueError) as err:
        LGR.error(str(err))
        return EXIT_USAGE
    except OSError as err:
        LGR.error(f'I/O error: {err}')
        return EXIT_IO
    return EXIT_OK


def _entry():
    sys.exit(_main(sys.argv[1:]))


if __name__ == '__main__':
    _entry()


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
