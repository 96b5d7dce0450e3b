"""Dominance order, minuscule weights and Weyl orbits."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Sequence

from .errors import InvalidInputError, ResourceLimitError
from .rootsys import (RootSystem, Weight, levi_subsystem, pairing, simple_reflect,
                      weyl_group_order, weyl_group_order_of_type)

DEFAULT_ORBIT_CAP = 10**6


def is_dominant(lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam)


def require_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    lam = rs.check_weight(lam)
    if not is_dominant(lam):
        raise InvalidInputError(f"weight {lam} is not dominant")
    return lam


def root_lattice_coords(rs: RootSystem, lam: Sequence[int]) -> tuple[Fraction, ...]:
    return rs.simple_coords(lam)


def in_root_lattice(rs: RootSystem, lam: Sequence[int]) -> bool:
    return all(c.denominator == 1 for c in rs.simple_coords(lam))


def depth(rs: RootSystem, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
    """Height of lam - mu (sum of its simple-root coordinates)."""
    return sum(rs.simple_coords([a - b for a, b in zip(lam, mu)]))


def dominance_le(rs: RootSystem, mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff lam - mu is a nonnegative integer combination of simple roots."""
    diff = [a - b for a, b in zip(lam, mu)]
    return all(c.denominator == 1 and c >= 0 for c in rs.simple_coords(diff))


def dominant_weights_below(rs: RootSystem, lam: Sequence[int]) -> list[Weight]:
    """All dominant mu <= lam, sorted by depth below lam then coordinates.

    Relies on Stembridge's lemma: each dominant mu < lam lies below some
    dominant lam - alpha with alpha a positive root, so subtracting positive
    roots while staying dominant reaches every such mu.
    """
    lam = require_dominant(rs, lam)
    return _dominant_below_cached(rs, lam)


@lru_cache(maxsize=4096)
def _dominant_below_cached(rs: RootSystem, lam: Weight) -> list[Weight]:
    roots = [r.weight_coords for r in rs.positive_roots]
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in roots:
                nu = tuple(x - y for x, y in zip(mu, a))
                if nu not in seen and is_dominant(nu):
                    seen.add(nu)
                    nxt.append(nu)
        frontier = nxt
    return sorted(seen, key=lambda mu: (depth(rs, lam, mu), mu))


def is_minuscule(rs: RootSystem, lam: Sequence[int]) -> bool:
    """Pairing criterion: dominant with <lam, alpha^vee> <= 1 for every positive root."""
    return is_dominant(lam) and all(pairing(rs, lam, a) <= 1 for a in rs.positive_roots)


@lru_cache(maxsize=None)
def minuscule_weights(rs: RootSystem) -> frozenset[Weight]:
    """Minimal elements of the dominance order on dominant weights.

    Computed from the downsets of the fundamental weights and cross-checked
    against the pairing criterion.
    """
    found = {rs.zero}
    for i in range(rs.rank):
        below = dominant_weights_below(rs, rs.fundamental(i))
        for mu in below:
            if not any(nu != mu and dominance_le(rs, nu, mu) for nu in below):
                found.add(mu)
    by_pairing = {rs.zero} | {rs.fundamental(i) for i in range(rs.rank)
                              if is_minuscule(rs, rs.fundamental(i))}
    if found != by_pairing:
        raise AssertionError(
            f"minuscule criteria disagree for {rs.type}: {sorted(found)} vs {sorted(by_pairing)}")
    return frozenset(found)


def minuscule_below(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """The minuscule weight in the same root-lattice coset as ``lam``."""
    lam = require_dominant(rs, lam)
    for mu in sorted(minuscule_weights(rs)):
        if in_root_lattice(rs, [a - b for a, b in zip(lam, mu)]):
            return mu
    raise AssertionError("no minuscule representative found")


@dataclass(frozen=True)
class OrbitSummary:
    dominant_rep: Weight
    orbit_size: int
    stabilizer_indices: tuple[int, ...]


def parabolic_order(rs: RootSystem, J: Sequence[int]) -> int:
    return prod(weyl_group_order_of_type(c.type) for c in levi_subsystem(rs, J))


def orbit_summary(rs: RootSystem, lam: Sequence[int]) -> OrbitSummary:
    lam = require_dominant(rs, lam)
    stab = tuple(i for i, x in enumerate(lam) if x == 0)
    return OrbitSummary(lam, weyl_group_order(rs) // parabolic_order(rs, stab), stab)


def weyl_orbit(rs: RootSystem, lam: Sequence[int], cap: int = DEFAULT_ORBIT_CAP) -> list[Weight]:
    """Orbit of a dominant weight, sorted by (depth below lam, coordinates)."""
    summary = orbit_summary(rs, lam)
    lam = summary.dominant_rep
    if summary.orbit_size > cap:
        raise ResourceLimitError(
            f"orbit of {lam} in {rs.type} has {summary.orbit_size} elements, cap is {cap}")
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for i in range(rs.rank):
                if mu[i] > 0:
                    nu = simple_reflect(rs, mu, i)
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
        frontier = nxt
    return sorted(seen, key=lambda mu: (depth(rs, lam, mu), mu))
