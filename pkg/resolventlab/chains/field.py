"""Piecewise-constant Herglotz vector fields and their time integrals.
"""

import math
from dataclasses import dataclass

import numpy as np

from resolventlab.domains.domains import DomainKind
from resolventlab.generators.base import Classification, Generator, GeneratorSum
from resolventlab.generators.criteria import is_generator_disk
from resolventlab.utils.errors import ArgumentError
from resolventlab.utils.logging import log_debug

BREAK_TOL = 1e-15


@dataclass(frozen=True)
class Segment:
    start: float
    end: float
    generator: Generator

    @property
    def length(self):
        return self.end - self.start

    def overlap(self, t):
        """Length of [start, end) ∩ [0, t]."""
        return max(0.0, min(self.end, t) - self.start)


class HerglotzField:
    """
    G(t, z) = G_k(z) for t in [start_k, end_k)

    Parameters
    ----------
    segments : sequence of Segment or (start, end, Generator)
        Contiguous increasing intervals starting at 0; the last end may be ``inf``.
    """

    def __init__(self, segments):
        segments = [s if isinstance(s, Segment) else Segment(float(s[0]), float(s[1]), s[2])
                    for s in segments]
        if not segments:
            raise ArgumentError('a field needs at least one segment')
        if segments[0].start != 0.0:
            raise ArgumentError('the first segment must start at t=0')
        for k, seg in enumerate(segments):
            if not seg.end > seg.start:
                raise ArgumentError('segment {} is empty or reversed'.format(k))
            if k and abs(seg.start - segments[k - 1].end) > BREAK_TOL:
                raise ArgumentError('segments {} and {} are not contiguous'.format(k - 1, k))
            if k < len(segments) - 1 and not math.isfinite(seg.end):
                raise ArgumentError('only the last segment may be unbounded')
        domains = {seg.generator.domain for seg in segments}
        if len(domains) != 1:
            raise ArgumentError('field segments live on different domains')
        self.segments = segments
        self.domain = domains.pop()

    @classmethod
    def autonomous(cls, G, T=math.inf):
        """Constant field of an autonomous generator on [0, T)."""
        return cls([Segment(0.0, float(T), G)])

    @property
    def T_total(self):
        return self.segments[-1].end

    @property
    def breakpoints(self):
        return [seg.end for seg in self.segments[:-1]]

    @property
    def is_autonomous(self):
        return len(self.segments) == 1

    def check_time(self, t):
        t = float(t)
        if not (0.0 <= t <= self.T_total) or math.isnan(t):
            raise ArgumentError('t={} outside the field range [0, {}]'.format(t, self.T_total))
        return t

    def generator_at(self, t):
        """G(t, .) with segments closed on the left."""
        t = self.check_time(t)
        for seg in self.segments:
            if seg.start <= t < seg.end:
                return seg.generator
        return self.segments[-1].generator

    def accumulate(self, t):
        """H_t = integral of G(s, .) over [0, t], exact for piecewise-constant fields."""
        t = self.check_time(t)
        terms = [(seg.overlap(t), seg.generator) for seg in self.segments if seg.overlap(t) > 0]
        return GeneratorSum(terms, domain=self.domain)

    def to_dict(self):
        return {'segments': [{'start': seg.start, 'end': seg.end if math.isfinite(seg.end) else None,
                              'generator': seg.generator.to_dict()} for seg in self.segments]}

    def __repr__(self):
        return 'HerglotzField({})'.format(', '.join('[{:g},{:g}):{!r}'.format(s.start, s.end, s.generator)
                                                    for s in self.segments))


def as_field(F):
    """Accept a field or an autonomous generator."""
    if isinstance(F, HerglotzField):
        return F
    if isinstance(F, Generator):
        return HerglotzField.autonomous(F)
    raise ArgumentError('expected a HerglotzField or a Generator, got {!r}'.format(F))


def accumulate_field(F, t):
    """H_t(z) = sum over segments of (overlap length) * G_seg(z)."""
    return as_field(F).accumulate(t)


@dataclass
class FieldCertificate:
    """Whether every sampled H_t is a generator; ``method`` tells how it was decided."""
    certified: bool
    method: str
    failures: list

    def to_dict(self):
        return {'certified': self.certified, 'method': self.method,
                'failures': [[t, [z.real, z.imag]] for t, z in self.failures]}


def certify_field(F, times, grid_n=32, r_max=0.999):
    """
    Decide that the accumulated fields H_t are generators at the sample times

    Positive combinations of disk generators sharing a Denjoy-Wolff point, of
    Pick generators, and of strip generators with Denjoy-Wolff point at +infinity
    stay in their class. Disk fields with several candidate points are tested on
    a grid with each candidate; otherwise the field is reported unverified.
    """
    F = as_field(F)
    generators = [seg.generator for seg in F.segments]
    classes = {G.classification for G in generators}
    if F.domain is DomainKind.HALF_PLANE and classes == {Classification.PICK}:
        return FieldCertificate(True, 'pick_cone', [])
    if F.domain is DomainKind.STRIP and classes == {Classification.STRIP_INFINITY}:
        return FieldCertificate(True, 'strip_cone', [])
    taus = [G.tau for G in generators]
    if F.domain is not DomainKind.DISK or any(tau is None for tau in taus):
        return FieldCertificate(False, 'unverified', [])
    if len(set(taus)) == 1:
        return FieldCertificate(True, 'shared_tau', [])
    failures = []
    for tau in dict.fromkeys(taus):
        failures = []
        for t in times:
            H = F.accumulate(t)
            result = is_generator_disk(H, tau, grid_n=grid_n, r_max=r_max)
            if not result:
                failures.append((float(t), result.witness))
        if not failures:
            return FieldCertificate(True, 'grid_test', [])
        log_debug('candidate tau={} fails at {} times'.format(tau, len(failures)))
    return FieldCertificate(False, 'grid_test', failures)


def sample_times(F, n=8):
    """Evenly spaced times in (0, T_total], capped at the last breakpoint plus one for unbounded fields."""
    F = as_field(F)
    end = F.T_total if math.isfinite(F.T_total) else (F.breakpoints[-1] + 1.0 if F.breakpoints else 1.0)
    return list(np.linspace(end / n, end, n))
