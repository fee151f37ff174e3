"""Seeded trial streams, an order-preserving worker pool and CSV output."""
import csv
import logging
import multiprocessing
import os

import numpy as np
import tqdm

logger = logging.getLogger(__name__)


def trial_rng(seed, index):
    """Random stream for one trial.

    Trial `index` of a run with `seed` uses numpy's default generator
    (PCG64) seeded with the integer seed + index, so any single trial can be
    replayed on its own and results do not depend on how trials are spread
    over workers.
    """
    return np.random.default_rng(int(seed) + int(index))


def map_trials(fn, args, workers=1, progress=False, desc=None, total=None):
    """Applies fn to each item of args and returns results in input order.

    Args:
        fn (callable): top-level (picklable) function of one argument.
        args (iterable): per-trial arguments.
        workers (int): processes to use; 1 runs in this process.
        progress (bool): show a tqdm progress bar.
        desc (str): progress bar label.
        total (int): number of items, for the progress bar.

    Returns:
        list of results, ordered like args regardless of completion order.
    """
    if total is None and hasattr(args, '__len__'):
        total = len(args)
    if workers is None or workers <= 1:
        it = map(fn, args)
        return list(tqdm.tqdm(it, total=total, desc=desc,
                              disable=not progress))
    logger.debug('running %s trials on %d workers', total or '?', workers)
    with multiprocessing.Pool(processes=workers) as pool:
        # imap keeps the input order
        it = pool.imap(fn, args, chunksize=8)
        return list(tqdm.tqdm(it, total=total, desc=desc,
                              disable=not progress))


def write_csv(path, header, rows):
    """Writes a header and rows as comma separated values with LF line
    endings. `path` may also be an open text stream."""
    if hasattr(path, 'write'):
        writer = csv.writer(path, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
        return
    dirname = os.path.dirname(path)
    if dirname:
        os.makedirs(dirname, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
