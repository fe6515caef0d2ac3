from dataclasses import dataclass
from functools import partial

from resolventlab.domains.domains import contains, sample_points
from resolventlab.resolvents.resolvent import solve_resolvent
from resolventlab.utils.errors import ResolventLabError
from resolventlab.utils.parallel import map_points


@dataclass
class SelfMapReport:
    """``ok`` unless some sample point failed; ``witness`` is the first failing w."""
    ok: bool
    t: float
    n_checked: int
    witness: complex = None
    message: str = ''

    def __bool__(self):
        return self.ok

    def to_dict(self):
        data = {'ok': self.ok, 't': self.t, 'n_checked': self.n_checked, 'message': self.message}
        if self.witness is not None:
            data['witness'] = [self.witness.real, self.witness.imag]
        return data


def _self_map_point(G, t, solver_kw, w):
    try:
        z = solve_resolvent(G, t, w, **solver_kw).value
    except ResolventLabError as err:
        return complex(w), str(err)
    if not contains(G.domain, z):
        return complex(w), 'J_t(w)={} left the domain'.format(z)
    return complex(w), None


def verify_self_map(G, t, sample_n=200, seed=0, jobs=1, **solver_kw):
    """
    Check that J_t maps seeded sample points into the domain

    Parameters
    ----------
    G : Generator
    t : float
        Resolvent parameter.
    sample_n : int
        Number of sample points.
    seed : int
        Sampling seed.
    jobs : int
        Worker processes.

    Returns
    -------
    report : SelfMapReport
        Solver errors count as violations.
    """
    points = sample_points(G.domain, sample_n, seed)
    outcomes = map_points(partial(_self_map_point, G, float(t), solver_kw), points, jobs=jobs,
                          desc='self-map t={:g}'.format(t))
    for w, message in outcomes:
        if message is not None:
            return SelfMapReport(ok=False, t=float(t), n_checked=len(outcomes), witness=w, message=message)
    return SelfMapReport(ok=True, t=float(t), n_checked=len(outcomes))
