"""Reduced Killing form on the Lie algebra of an isogeny quotient.

The Cartan part Lie(T) is a lattice between the coroot lattice and the
coweight lattice; every lattice is written in rational fundamental-weight
coordinates of the ambient system and measured with the invariant form
(long roots of squared length 2).  The root part contributes a hyperbolic
pair for each positive root beta with value b(x_beta, x_-beta) = 2/(beta, beta).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from sympy import primefactors

from .errors import InvalidInputError
from .linalg import bareiss_det, bilinear, rational_det
from .rootsys import RootSystem, RootSystemType, build


@dataclass(frozen=True)
class SimplyConnected:
    type: RootSystemType

    def __str__(self):
        return f"{self.type} (simply connected)"


@dataclass(frozen=True)
class Adjoint:
    type: RootSystemType

    def __str__(self):
        return f"{self.type} (adjoint)"


@dataclass(frozen=True)
class SO:
    """SO_dim for even dim >= 8."""
    dim: int

    def __post_init__(self):
        if self.dim % 2 or self.dim < 8:
            raise InvalidInputError(f"SO_{self.dim}: need an even dimension >= 8")

    def __str__(self):
        return f"SO{self.dim}"


@dataclass(frozen=True)
class HSpin:
    """Half-spin group HSpin_dim, dim = 2n with n even and n >= 4."""
    dim: int

    def __post_init__(self):
        if self.dim % 4 or self.dim < 8:
            raise InvalidInputError(f"HSpin_{self.dim}: need dim = 2n with n even, n >= 4")

    def __str__(self):
        return f"HSpin{self.dim}"


@dataclass(frozen=True)
class SLmodMu:
    """SL_n / mu_m with m > 1 dividing n."""
    n: int
    m: int

    def __post_init__(self):
        if self.n < 2 or self.m < 2 or self.n % self.m:
            raise InvalidInputError(f"SL_{self.n}/mu_{self.m}: need n >= 2 and 1 < m | n")

    def __str__(self):
        return f"SL{self.n}/mu{self.m}"


QuotientSpec = SimplyConnected | Adjoint | SO | HSpin | SLmodMu


@dataclass(frozen=True)
class LatticeForm:
    spec: QuotientSpec
    ambient: RootSystem
    labels: tuple[str, ...]
    basis: tuple[tuple[Fraction, ...], ...]
    gram: tuple[tuple[Fraction, ...], ...]  # b on the basis, unscaled
    det: Fraction
    e_factor: int
    scaled_gram: tuple[tuple[int, ...], ...]
    scaled_det: int

    @property
    def rank(self) -> int:
        return len(self.basis)


def _root(rs: RootSystem, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in rs.simple_roots[i].weight_coords)


def _coroot(rs: RootSystem, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) / rs.sym[i] for x in rs.simple_roots[i].weight_coords)


def _omega(rs: RootSystem, i: int, scale=1) -> tuple[Fraction, ...]:
    return tuple(Fraction(scale * int(i == j)) for j in range(rs.rank))


def _generators(spec) -> tuple[RootSystem, list[str], list[tuple[Fraction, ...]]]:
    if isinstance(spec, SimplyConnected):
        rs = build(spec.type)
        return rs, [f"coroot{i + 1}" for i in range(rs.rank)], [_coroot(rs, i) for i in range(rs.rank)]
    if isinstance(spec, Adjoint):
        rs = build(spec.type)
        vecs = [_omega(rs, i, 1 / rs.sym[i]) for i in range(rs.rank)]
        return rs, [f"coweight{i + 1}" for i in range(rs.rank)], vecs
    if isinstance(spec, SO):
        n = spec.dim // 2
        rs = build(RootSystemType("D", n))
        labels = [f"alpha{i + 1}" for i in range(n - 1)] + ["omega1"]
        return rs, labels, [_root(rs, i) for i in range(n - 1)] + [_omega(rs, 0)]
    if isinstance(spec, HSpin):
        n = spec.dim // 2
        rs = build(RootSystemType("D", n))
        labels = [f"omega{n}"] + [f"alpha{i + 1}" for i in range(1, n)]
        return rs, labels, [_omega(rs, n - 1)] + [_root(rs, i) for i in range(1, n)]
    if isinstance(spec, SLmodMu):
        n, m = spec.n, spec.m
        rs = build(RootSystemType("A", n - 1))
        idx = list(range(n - 2, 0, -1))  # alpha_{n-1}, ..., alpha_2
        labels = [f"alpha{i + 1}" for i in idx] + [f"{n // m}*omega{n - 1}"]
        return rs, labels, [_root(rs, i) for i in idx] + [_omega(rs, n - 2, n // m)]
    raise InvalidInputError(f"unknown quotient {spec!r}")


def e_factor_of(gram: Sequence[Sequence[Fraction]]) -> int:
    """Minimal e >= 1 making e*b integral and indivisible on Lie(T) plus the root part.

    Long roots contribute the value 1, so e is the lcm of the Gram denominators.
    """
    e = 1
    for row in gram:
        for x in row:
            e = lcm(e, Fraction(x).denominator)
    return e


def lattice_of(spec: QuotientSpec) -> LatticeForm:
    rs, labels, basis = _generators(spec)
    gram = tuple(tuple(Fraction(bilinear(rs.weight_gram, x, y)) for y in basis) for x in basis)
    e = e_factor_of(gram)
    scaled = tuple(tuple(int(e * x) for x in row) for row in gram)
    return LatticeForm(spec, rs, tuple(labels), tuple(basis), gram, rational_det(gram),
                       e, scaled, bareiss_det(scaled))


def e_factor(spec: QuotientSpec) -> int:
    return lattice_of(spec).e_factor


def det_A(r: int, a: int, b: int) -> int:
    """Determinant of the A_r Cartan matrix bordered by (a, 0, ..., 0 | b)."""
    if r < 1:
        raise InvalidInputError("r must be >= 1")
    m = [[0] * (r + 1) for _ in range(r + 1)]
    for i in range(r):
        m[i][i] = 2
        if i + 1 < r:
            m[i][i + 1] = m[i + 1][i] = -1
    m[0][r] = m[r][0] = a
    m[r][r] = b
    return bareiss_det(m)


def root_pair_values(rs: RootSystem) -> list[int]:
    """b(x_beta, x_-beta) = 2 / (beta, beta) for each positive root beta."""
    out = []
    for r in rs.positive_roots:
        half = bilinear(rs.root_gram, r.simple_coords, r.simple_coords) / 2
        out.append(int(1 / half))
    return out


@dataclass(frozen=True)
class KillingVerdict:
    spec: QuotientSpec
    globally_nondegenerate: bool
    degenerate_primes: tuple[int, ...]
    discriminant: int
    lattice: LatticeForm


def classify_killing(spec: QuotientSpec) -> KillingVerdict:
    """Discriminant of e*b on the whole Lie algebra, up to sign.

    Each root pair {x_beta, x_-beta} is a hyperbolic plane of determinant
    -(e v)^2, so |disc| = |det(e * Gram on Lie(T))| * prod (e v_beta)^2.
    """
    lat = lattice_of(spec)
    disc = abs(lat.scaled_det)
    for v in root_pair_values(lat.ambient):
        disc *= (lat.e_factor * v) ** 2
    primes = tuple(primefactors(disc)) if disc else ()
    return KillingVerdict(spec, disc == 1, primes, disc, lat)


def parse_quotient(text: str) -> QuotientSpec:
    """Parse ``E8``, ``ad:E6``, ``SO10``, ``HSpin16`` or ``SL8/mu2``."""
    t = text.strip()
    if m := re.fullmatch(r"(?i)ad:(.+)", t):
        return Adjoint(RootSystemType.parse(m.group(1)))
    if m := re.fullmatch(r"(?i)sc:(.+)", t):
        return SimplyConnected(RootSystemType.parse(m.group(1)))
    if m := re.fullmatch(r"(?i)hspin(\d+)", t):
        return HSpin(int(m.group(1)))
    if m := re.fullmatch(r"(?i)so(\d+)", t):
        return SO(int(m.group(1)))
    if m := re.fullmatch(r"(?i)sl(\d+)/mu(\d+)", t):
        return SLmodMu(int(m.group(1)), int(m.group(2)))
    return SimplyConnected(RootSystemType.parse(t))
