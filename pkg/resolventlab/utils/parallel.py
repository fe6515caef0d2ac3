"""Ordered fan-out of independent point evaluations."""

from multiprocessing import Pool

from tqdm import tqdm

from resolventlab.utils.logging import progress_disabled


def map_points(func, items, jobs=1, desc=None, level='debug'):
    """
    Apply ``func`` to every item, keeping the input order

    Parameters
    ----------
    func : callable
        Picklable (module-level or ``functools.partial``) when ``jobs > 1``.
    items : iterable
        Work items.
    jobs : int
        Number of worker processes; 1 evaluates in-process.
    desc : str
        tqdm description.
    level : str
        Log level from which the progress bar is drawn.

    Returns
    -------
    results : list
        ``[func(item) for item in items]``.
    """
    items = list(items)
    disable = progress_disabled(level)
    if jobs is None or jobs <= 1 or len(items) < 2:
        return [func(item) for item in tqdm(items, desc=desc, disable=disable)]
    chunksize = max(1, len(items) // (4 * jobs))
    with Pool(processes=jobs) as pool:
        return list(tqdm(pool.imap(func, items, chunksize=chunksize),
                         total=len(items), desc=desc, disable=disable))
