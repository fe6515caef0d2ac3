"""Generator interface shared by representation forms, catalog entries and derived fields.
"""

from enum import Enum

import numpy as np

from resolventlab.domains.domains import DomainKind, boundary_distance, require_in_domain
from resolventlab.utils.errors import ArgumentError, UnsupportedError

STENCIL_NODES = 16
STENCIL_RADIUS = 1e-2


class Classification(Enum):
    """What is known about a generator's resolvent existence window."""
    BOUNDED = 'bounded_convex_all_t'
    FINITE_DW = 'finite_DW_all_t'
    PICK = 'pick_window'
    STRIP_INFINITY = 'strip_window'


def evaluate_many(func, z):
    """Apply a scalar function elementwise to a (possibly 0-d) complex array."""
    z = np.asarray(z, dtype=complex)
    if z.ndim == 0:
        return complex(func(complex(z)))
    out = np.empty(z.shape, dtype=complex)
    for idx, value in np.ndenumerate(z):
        out[idx] = func(complex(value))
    return out


def cauchy_derivative(func, z, kind, nodes=STENCIL_NODES):
    """
    Derivative of a holomorphic function by the Cauchy integral on a small circle

    Parameters
    ----------
    func : callable
        Vectorized holomorphic function.
    z : complex or numpy.ndarray
        Evaluation point(s) inside the domain.
    kind : DomainKind
        Domain, used to keep the circle inside it.
    nodes : int
        Trapezoid nodes on the circle.

    Returns
    -------
    derivative : complex or numpy.ndarray
        ``(1/(N r)) sum_k f(z + r e^{i theta_k}) e^{-i theta_k}`` with ``r = min(1e-2, dist/2)``.
    """
    z = np.asarray(z, dtype=complex)
    radius = np.asarray(np.minimum(STENCIL_RADIUS, 0.5 * boundary_distance(kind, z)))
    shifts = np.exp(2j * np.pi * np.arange(nodes) / nodes)
    values = np.asarray(func(z[..., None] + radius[..., None] * shifts), dtype=complex)
    derivative = np.mean(values * np.conj(shifts), axis=-1) / radius
    return complex(derivative) if derivative.ndim == 0 else derivative


class Generator:
    """
    Infinitesimal generator on one of the canonical domains

    Subclasses implement ``value`` (vectorized, no domain check) and may override
    ``derivative`` and ``flow``. Metadata used by the existence window:

    - ``tau``: Denjoy-Wolff point when known (``None`` for the point at infinity or unknown);
    - ``classification``: a :class:`Classification` or ``None``;
    - ``pick_alpha``: exact angular residue ``b`` for Pick-type generators on the half-plane;
    - ``strip_c``: exact ``inf |Im G(x)|`` over the real axis for strip generators.
    """
    name = 'generator'
    domain = DomainKind.DISK
    tau = None
    classification = None
    pick_alpha = None
    strip_c = None

    def value(self, z):
        raise NotImplementedError

    def derivative(self, z):
        return cauchy_derivative(self.value, z, self.domain)

    def __call__(self, z):
        require_in_domain(self.domain, z)
        return self.value(z)

    def flow(self, t, w):
        """Closed-form semigroup F_t(w); most generators have none."""
        raise UnsupportedError('{} has no closed-form semigroup'.format(self.name))

    def to_dict(self):
        raise UnsupportedError('{} has no JSON representation'.format(self.name))

    def __repr__(self):
        return '{}(domain={})'.format(self.name, self.domain.value)


def eval_generator(G, z):
    """G(z) after checking that ``z`` lies in G's domain."""
    return G(z)


def eval_deriv(G, z):
    """G'(z): analytic for catalog entries, otherwise a Cauchy-integral stencil."""
    require_in_domain(G.domain, z)
    return G.derivative(z)


class CustomGenerator(Generator):
    """
    Generator given by a Python callable

    Parameters
    ----------
    func : callable
        z -> G(z); scalar unless ``vectorized``.
    domain : DomainKind or str
        Domain of definition.
    derivative : callable or None
        z -> G'(z); the Cauchy stencil is used when omitted.
    tau, classification, pick_alpha, strip_c :
        Metadata, see :class:`Generator`.
    flow : callable or None
        (t, w) -> F_t(w) when the semigroup is known in closed form.
    """

    def __init__(self, func, domain, derivative=None, tau=None, classification=None,
                 pick_alpha=None, strip_c=None, vectorized=False, flow=None, name='custom'):
        self.func = func
        self.domain = DomainKind.parse(domain)
        self.deriv_func = derivative
        self.tau = tau
        self.classification = classification
        self.pick_alpha = pick_alpha
        self.strip_c = strip_c
        self.vectorized = vectorized
        self.flow_func = flow
        self.name = name

    def value(self, z):
        if self.vectorized:
            return self.func(z)
        return evaluate_many(self.func, z)

    def derivative(self, z):
        if self.deriv_func is None:
            return super().derivative(z)
        if self.vectorized:
            return self.deriv_func(z)
        return evaluate_many(self.deriv_func, z)

    def flow(self, t, w):
        if self.flow_func is None:
            return super().flow(t, w)
        return self.flow_func(t, w)


def _default_classification(domain):
    return {DomainKind.DISK: Classification.BOUNDED,
            DomainKind.HALF_PLANE: Classification.PICK,
            DomainKind.STRIP: Classification.STRIP_INFINITY}[domain]


class GeneratorSum(Generator):
    """
    Non-negative combination sum_k c_k G_k of generators on a common domain

    An empty sum is the zero generator of ``domain``.
    """
    name = 'sum'

    def __init__(self, terms, domain=None):
        terms = [(float(c), G) for c, G in terms]
        if any(c < 0 for c, _ in terms):
            raise ArgumentError('generator sums need non-negative weights')
        domains = {G.domain for _, G in terms}
        if domain is not None:
            domains.add(DomainKind.parse(domain))
        if len(domains) != 1:
            raise ArgumentError('generator sum mixes domains {}'.format(sorted(d.value for d in domains)))
        self.domain = domains.pop()
        self.terms = [(c, G) for c, G in terms if c > 0]
        self._set_metadata()

    def _set_metadata(self):
        if not self.terms:
            self.classification = _default_classification(self.domain)
            self.pick_alpha = 0.0 if self.domain is DomainKind.HALF_PLANE else None
            self.strip_c = 0.0 if self.domain is DomainKind.STRIP else None
            return
        classes = {G.classification for _, G in self.terms}
        taus = {G.tau for _, G in self.terms}
        self.tau = taus.pop() if len(taus) == 1 else None
        if self.domain is DomainKind.DISK:
            self.classification = Classification.BOUNDED
        elif len(classes) == 1:
            cls = classes.pop()
            # positive combinations keep Pick and strip forms; finite DW needs a shared point
            if cls is not Classification.FINITE_DW or self.tau is not None:
                self.classification = cls
        alphas = [G.pick_alpha for _, G in self.terms]
        if self.classification is Classification.PICK and all(a is not None for a in alphas):
            self.pick_alpha = sum(c * a for (c, _), a in zip(self.terms, alphas))
        if self.classification is Classification.STRIP_INFINITY and len(self.terms) == 1:
            c, G = self.terms[0]
            self.strip_c = None if G.strip_c is None else c * G.strip_c

    def value(self, z):
        z = np.asarray(z, dtype=complex)
        total = np.zeros(z.shape, dtype=complex)
        for c, G in self.terms:
            total = total + c * np.asarray(G.value(z))
        return complex(total) if total.ndim == 0 else total

    def derivative(self, z):
        z = np.asarray(z, dtype=complex)
        total = np.zeros(z.shape, dtype=complex)
        for c, G in self.terms:
            total = total + c * np.asarray(G.derivative(z))
        return complex(total) if total.ndim == 0 else total

    def to_dict(self):
        return {'kind': 'sum', 'domain': self.domain.value,
                'terms': [{'weight': c, 'generator': G.to_dict()} for c, G in self.terms]}

    def __repr__(self):
        return 'sum({})'.format(', '.join('{:g}*{!r}'.format(c, G) for c, G in self.terms))
