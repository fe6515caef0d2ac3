import sys

from resolventlab.utils.scenario_utils import parse_args, run_scenario


def main(args):
    """
    resolventlab scenario script.

    Parameters
    ----------
    args : argparse.Namespace
        ``--scenario`` is a **.yaml** scenario file overriding configs/base_config.py;
        ``--out``, ``--tol``, ``--seed`` and ``--jobs`` override the matching keys.

    Returns
    -------
    code : int
        Process exit code (0 ok, 1 failed check or numerical failure, 2 bad input).
    """
    return run_scenario(args.scenario, out=args.out, tol=args.tol, seed=args.seed, jobs=args.jobs)


if __name__ == '__main__':
    sys.exit(main(parse_args()))
