"""JSON specs for generators, fields, measures and convolution-semigroup data.

A spec file holds one object with any of the keys ``generator``, ``field``,
``measure``, ``triple`` and ``mult``. Complex numbers are written as ``[re, im]``
or as a bare real. Every validation failure raises :class:`SchemaError` with the
JSON-pointer-like path of the offending field.
"""

import json
import math

from resolventlab.chains.field import HerglotzField
from resolventlab.domains.domains import DomainKind
from resolventlab.domains.maps import CAYLEY, CAYLEY_INV, STRIP_MAP, STRIP_MAP_INV, conjugate_generator
from resolventlab.freeprob import measures
from resolventlab.freeprob.additive import FIDTriple
from resolventlab.freeprob.multiplicative import MultSemigroupData, mult_generator
from resolventlab.generators.base import GeneratorSum
from resolventlab.generators.catalog import CATALOG, catalog
from resolventlab.generators.generator import BerksonPorta, HalfPlaneInterior, HalfPlanePick, StripForm
from resolventlab.generators.measures import CIRCLE, REAL, FiniteMeasure
from resolventlab.generators.representations import HerglotzData, NevanlinnaTriple
from resolventlab.utils.errors import ArgumentError, SchemaError

SPEC_KEYS = ('generator', 'field', 'measure', 'triple', 'mult')
DEFAULT_NODES = {REAL: 64, CIRCLE: 256}
MAPS = {'cayley': CAYLEY, 'cayley_inv': CAYLEY_INV, 'strip_map': STRIP_MAP, 'strip_map_inv': STRIP_MAP_INV}


def _require(obj, key, pointer):
    if not isinstance(obj, dict):
        raise SchemaError('expected an object', pointer)
    if key not in obj:
        raise SchemaError('missing required field {!r}'.format(key), pointer)
    return obj[key]


def _number(value, pointer):
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise SchemaError('expected a finite number, got {!r}'.format(value), pointer)
    return float(value)


def _complex(value, pointer):
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise SchemaError('a complex number is [re, im]', pointer)
        return complex(_number(value[0], pointer + '/0'), _number(value[1], pointer + '/1'))
    return complex(_number(value, pointer))


def _wrap(build, pointer):
    """Re-raise constructor argument errors as schema errors at ``pointer``."""
    try:
        return build()
    except SchemaError:
        raise
    except ArgumentError as e:
        raise SchemaError(str(e), pointer) from e


def measure_from_dict(data, pointer='', support=REAL, nodes=None):
    """
    FiniteMeasure from ``{"atoms": [[x, w], ...], "density": {...}, "quadrature": {...}}``

    ``density`` holds equispaced ``values`` on ``support`` ([a, b], or an angle
    range on the circle) and an optional ``n_nodes`` (default from ``nodes``, a
    support -> node count mapping); ``quadrature`` holds explicit
    ``nodes`` and ``weights``. Circle locations are angles.
    """
    if not isinstance(data, dict):
        raise SchemaError('expected a measure object', pointer)
    atoms = []
    for k, atom in enumerate(data.get('atoms', [])):
        here = '{}/atoms/{}'.format(pointer, k)
        if not isinstance(atom, (list, tuple)) or len(atom) != 2:
            raise SchemaError('an atom is [location, weight]', here)
        atoms.append((_number(atom[0], here + '/0'), _number(atom[1], here + '/1')))
    if 'density' in data and 'quadrature' in data:
        raise SchemaError('give either density or quadrature, not both', pointer)
    if 'density' in data:
        here = pointer + '/density'
        density = data['density']
        values = [_number(v, '{}/values/{}'.format(here, k))
                  for k, v in enumerate(_require(density, 'values', here))]
        interval = density.get('support')
        if interval is not None:
            if not isinstance(interval, (list, tuple)) or len(interval) != 2:
                raise SchemaError('support is [a, b]', here + '/support')
            interval = (_number(interval[0], here + '/support/0'), _number(interval[1], here + '/support/1'))
        elif support == REAL:
            raise SchemaError('a density on the line needs a support', here)
        else:
            interval = (0.0, 2.0 * math.pi)
        n_nodes = int(_number(density.get('n_nodes', (nodes or DEFAULT_NODES)[support]), here + '/n_nodes'))
        return _wrap(lambda: FiniteMeasure.from_samples(values, interval, n_nodes=n_nodes, support=support,
                                                        atoms=atoms), here)
    if 'quadrature' in data:
        here = pointer + '/quadrature'
        quad = data['quadrature']
        locations = [_number(v, '{}/nodes/{}'.format(here, k))
                     for k, v in enumerate(_require(quad, 'nodes', here))]
        weights = [_number(v, '{}/weights/{}'.format(here, k))
                   for k, v in enumerate(_require(quad, 'weights', here))]
        interval = quad.get('support')
        return _wrap(lambda: FiniteMeasure(atoms=atoms, nodes=locations, node_weights=weights, support=support,
                                           interval=interval), here)
    return _wrap(lambda: FiniteMeasure(atoms=atoms, support=support), pointer)


def _triple(data, pointer, nodes=None):
    if not isinstance(data, dict):
        raise SchemaError('expected a Nevanlinna triple object', pointer)
    return _wrap(lambda: NevanlinnaTriple(alpha=_number(data.get('alpha', 0.0), pointer + '/alpha'),
                                          beta=_number(data.get('beta', 0.0), pointer + '/beta'),
                                          rho=measure_from_dict(data, pointer, nodes=nodes)), pointer)


def _herglotz(data, pointer, nodes=None):
    if not isinstance(data, dict):
        raise SchemaError('expected a Herglotz data object', pointer)
    return _wrap(lambda: HerglotzData(imag_const=_number(data.get('imag_const', 0.0), pointer + '/imag_const'),
                                      rho=measure_from_dict(data, pointer, support=CIRCLE, nodes=nodes)), pointer)


def generator_from_dict(data, pointer='', nodes=None):
    """
    Build a generator from its JSON form

    Kinds: ``catalog`` (name, params), ``berkson_porta`` (tau, p),
    ``halfplane_pick`` (triple), ``halfplane_interior`` (sigma, triple),
    ``strip_form`` (p), ``sum`` (domain, terms), ``conjugated`` (generator, map),
    ``fid`` (a, rho) and ``mult`` (alpha, rho).
    """
    kind = _require(data, 'kind', pointer)
    if kind == 'catalog':
        name = _require(data, 'name', pointer)
        if name not in CATALOG:
            raise SchemaError('unknown catalog generator {!r}'.format(name), pointer + '/name')
        raw = data.get('params', {})
        if not isinstance(raw, dict):
            raise SchemaError('params must be an object', pointer + '/params')
        params = {}
        for key, value in raw.items():
            params[key] = value if isinstance(value, str) else _complex(value, '{}/params/{}'.format(pointer, key))
            if isinstance(params[key], complex) and params[key].imag == 0:
                params[key] = params[key].real
        return _wrap(lambda: catalog(name, **params), pointer + '/params')
    if kind == 'berkson_porta':
        tau = _complex(_require(data, 'tau', pointer), pointer + '/tau')
        p = _herglotz(_require(data, 'p', pointer), pointer + '/p', nodes)
        return _wrap(lambda: BerksonPorta(tau, p), pointer)
    if kind == 'halfplane_pick':
        return HalfPlanePick(_triple(_require(data, 'triple', pointer), pointer + '/triple', nodes))
    if kind == 'halfplane_interior':
        sigma = _complex(_require(data, 'sigma', pointer), pointer + '/sigma')
        q = _triple(_require(data, 'triple', pointer), pointer + '/triple', nodes)
        return _wrap(lambda: HalfPlaneInterior(sigma, q), pointer)
    if kind == 'strip_form':
        return StripForm(_herglotz(_require(data, 'p', pointer), pointer + '/p', nodes))
    if kind == 'sum':
        terms = []
        for k, term in enumerate(_require(data, 'terms', pointer)):
            here = '{}/terms/{}'.format(pointer, k)
            terms.append((_number(_require(term, 'weight', here), here + '/weight'),
                          generator_from_dict(_require(term, 'generator', here), here + '/generator', nodes)))
        domain = data.get('domain')
        return _wrap(lambda: GeneratorSum(terms, domain=None if domain is None else DomainKind.parse(domain)),
                     pointer)
    if kind == 'conjugated':
        name = _require(data, 'map', pointer)
        if name not in MAPS:
            raise SchemaError('unknown conformal map {!r}; expected one of {}'.format(name, sorted(MAPS)),
                              pointer + '/map')
        inner = generator_from_dict(_require(data, 'generator', pointer), pointer + '/generator', nodes)
        return _wrap(lambda: conjugate_generator(inner, MAPS[name]), pointer)
    if kind == 'fid':
        return triple_from_dict(data, pointer, nodes).generator()
    if kind == 'mult':
        return mult_generator(mult_from_dict(data, pointer, nodes))
    raise SchemaError('unknown generator kind {!r}'.format(kind), pointer + '/kind')


def field_from_dict(data, pointer='', nodes=None):
    """HerglotzField from ``{"segments": [{"start", "end" (null for inf), "generator"}, ...]}``."""
    segments = []
    raw = _require(data, 'segments', pointer)
    if not isinstance(raw, list) or not raw:
        raise SchemaError('segments must be a non-empty list', pointer + '/segments')
    for k, seg in enumerate(raw):
        here = '{}/segments/{}'.format(pointer, k)
        start = _number(_require(seg, 'start', here), here + '/start')
        end = seg.get('end')
        end = math.inf if end is None else _number(end, here + '/end')
        generator = generator_from_dict(_require(seg, 'generator', here), here + '/generator', nodes)
        segments.append((start, end, generator))
    return _wrap(lambda: HerglotzField(segments), pointer + '/segments')


def real_measure_from_dict(data, pointer='', nodes=None):
    """
    Probability measure on the line

    ``{"law": "semicircle", "mean", "variance"}``, ``{"law": "dirac", "at"}`` or a
    measure object of total mass 1.
    """
    if not isinstance(data, dict):
        raise SchemaError('expected a measure object', pointer)
    law = data.get('law')
    if law == 'semicircle':
        mean = _number(data.get('mean', 0.0), pointer + '/mean')
        variance = _number(data.get('variance', 1.0), pointer + '/variance')
        return _wrap(lambda: measures.semicircle(mean, variance, n_nodes=(nodes or DEFAULT_NODES)[REAL]), pointer)
    if law == 'dirac':
        return measures.dirac(_number(data.get('at', 0.0), pointer + '/at'))
    if law is not None:
        raise SchemaError('unknown law {!r}'.format(law), pointer + '/law')
    return _wrap(lambda: measures.RealMeasure(measure_from_dict(data, pointer, nodes=nodes)), pointer)


def triple_from_dict(data, pointer='', nodes=None):
    """FIDTriple from ``{"a": ..., "atoms": ..., "density": ...}``."""
    if not isinstance(data, dict):
        raise SchemaError('expected a triple object', pointer)
    a = _number(data.get('a', 0.0), pointer + '/a')
    return _wrap(lambda: FIDTriple(a=a, rho=measure_from_dict(data, pointer, nodes=nodes)), pointer)


def mult_from_dict(data, pointer='', nodes=None):
    """MultSemigroupData from ``{"alpha": ..., "atoms": [[angle, w], ...], ...}``."""
    if not isinstance(data, dict):
        raise SchemaError('expected a multiplicative data object', pointer)
    alpha = _number(data.get('alpha', 0.0), pointer + '/alpha')
    return _wrap(lambda: MultSemigroupData(alpha=alpha,
                                           rho=measure_from_dict(data, pointer, support=CIRCLE, nodes=nodes)),
                 pointer)


BUILDERS = {
    'generator': generator_from_dict,
    'field': field_from_dict,
    'measure': real_measure_from_dict,
    'triple': triple_from_dict,
    'mult': mult_from_dict,
}


def parse_spec(document, nodes=None):
    """Objects for every recognized key of a spec document; ``nodes`` maps support to default quadrature size."""
    if not isinstance(document, dict):
        raise SchemaError('a spec is a JSON object')
    unknown = sorted(set(document) - set(SPEC_KEYS))
    if unknown:
        raise SchemaError('unknown spec key {!r}; expected some of {}'.format(unknown[0], SPEC_KEYS),
                          '/' + unknown[0])
    if not document:
        raise SchemaError('empty spec; expected some of {}'.format(SPEC_KEYS))
    return {key: BUILDERS[key](value, '/' + key, nodes) for key, value in document.items()}


def load_spec(path, nodes=None):
    """Read and parse a JSON spec file."""
    try:
        with open(path, 'r') as f:
            document = json.load(f)
    except FileNotFoundError as e:
        raise SchemaError('spec file {} not found'.format(path)) from e
    except json.JSONDecodeError as e:
        raise SchemaError('invalid JSON in {}: {}'.format(path, e.msg)) from e
    return parse_spec(document, nodes)


def dump_spec(path, **objects):
    """Write objects with a ``to_dict`` under their spec keys."""
    unknown = sorted(set(objects) - set(SPEC_KEYS))
    if unknown:
        raise ArgumentError('unknown spec key {!r}'.format(unknown[0]))
    with open(path, 'w') as f:
        json.dump({key: obj.to_dict() for key, obj in objects.items()}, f, indent=2)
