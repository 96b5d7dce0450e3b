"""Weyl dimensions, Freudenthal multiplicities and dot-action Euler characteristics."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import ResourceLimitError
from .rootsys import (RootSystem, RootSystemType, Weight, build, dominant_representative,
                      inner_product, pairing)
from .weights import dominant_weights_below, is_dominant, orbit_summary, require_dominant

DEFAULT_DIM_CAP = 10**6


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    """Weyl dimension formula, exact."""
    lam = require_dominant(rs, lam)
    return _weyl_dim(rs.type, lam)


_dim_cache: dict[tuple[RootSystemType, Weight], int] = {}
_dim_lock = threading.Lock()


def _weyl_dim(typ: RootSystemType, lam: Weight) -> int:
    key = (typ, lam)
    hit = _dim_cache.get(key)
    if hit is not None:
        return hit
    rs = build(typ)
    num = den = 1
    for a in rs.positive_roots:
        r = pairing(rs, rs.rho, a)
        num *= pairing(rs, lam, a) + r
        den *= r
    if num % den:
        raise AssertionError(f"Weyl dimension of {lam} in {typ} is not an integer")
    value = num // den
    with _dim_lock:
        _dim_cache.setdefault(key, value)
    return value


class VirtualCharacter(Mapping[Weight, int]):
    """Finite integer combination of Weyl characters chi(nu), nu dominant.

    Zero coefficients are never stored.
    """

    def __init__(self, terms: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = ()):
        self._terms: dict[Weight, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            self._add(tuple(w), c)

    def _add(self, w: Weight, c: int):
        if not c:
            return
        v = self._terms.get(w, 0) + c
        if v:
            self._terms[w] = v
        else:
            del self._terms[w]

    def __getitem__(self, w):
        return self._terms[tuple(w)]

    def __iter__(self) -> Iterator[Weight]:
        return iter(sorted(self._terms))

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, VirtualCharacter):
            return self._terms == other._terms
        if isinstance(other, Mapping):
            return self._terms == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def __add__(self, other: "VirtualCharacter") -> "VirtualCharacter":
        out = VirtualCharacter(self._terms)
        for w, c in other._terms.items():
            out._add(w, c)
        return out

    def __neg__(self):
        return VirtualCharacter({w: -c for w, c in self._terms.items()})

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = [f"{c:+d}*chi{list(w)}" for w, c in self.items()]
        return " ".join(parts)

    def is_zero(self) -> bool:
        return not self._terms

    def dimension(self, rs: RootSystem) -> int:
        return sum(c * _weyl_dim(rs.type, w) for w, c in self._terms.items())


def euler_characteristic(rs: RootSystem, mu: Sequence[int]) -> tuple[int, Weight] | None:
    """Straighten chi(mu) under the dot action.

    Returns ``None`` when mu + rho lies on a wall, else ``(det w, w . mu)``
    with ``w . mu`` dominant.
    """
    mu = rs.check_weight(mu)
    dom, sign, _ = dominant_representative(rs, [x + 1 for x in mu])
    if 0 in dom:
        return None
    return sign, tuple(x - 1 for x in dom)


def as_virtual(rs: RootSystem, mu: Sequence[int]) -> VirtualCharacter:
    chi = euler_characteristic(rs, mu)
    if chi is None:
        return VirtualCharacter()
    return VirtualCharacter({chi[1]: chi[0]})


def dot_action(rs: RootSystem, i: int, mu: Sequence[int]) -> Weight:
    """s_i . mu = s_i(mu + rho) - rho."""
    k = mu[i] + 1
    col = rs.simple_roots[i].weight_coords
    return tuple(a - k * b for a, b in zip(mu, col))


@dataclass
class MultiplicityTable:
    highest_weight: Weight
    entries: dict[Weight, int] = field(default_factory=dict)

    def total_dim(self, rs: RootSystem) -> int:
        return sum(m * orbit_summary(rs, nu).orbit_size for nu, m in self.entries.items())


def freudenthal(rs: RootSystem, lam: Sequence[int], cap: int = DEFAULT_DIM_CAP) -> MultiplicityTable:
    """Dominant weight multiplicities of V(lam) by Freudenthal's recursion."""
    lam = require_dominant(rs, lam)
    if weyl_dim(rs, lam) > cap:
        raise ResourceLimitError(f"dim V({lam}) exceeds cap {cap}")
    dominant = dominant_weights_below(rs, lam)
    mult: dict[Weight, int] = {lam: 1}
    lr = [x + 1 for x in lam]
    norm_top = inner_product(rs, lr, lr)
    roots = [a.weight_coords for a in rs.positive_roots]
    for mu in dominant[1:]:
        mr = [x + 1 for x in mu]
        gap = norm_top - inner_product(rs, mr, mr)
        total = Fraction(0)
        for a in roots:
            nu = list(mu)
            while True:
                nu = [x + y for x, y in zip(nu, a)]
                rep = tuple(nu) if is_dominant(nu) else dominant_representative(rs, nu)[0]
                m = mult.get(rep, 0)
                if not m:
                    break
                total += m * inner_product(rs, nu, a)
        value = 2 * total / gap
        if value.denominator != 1:
            raise AssertionError(f"non-integral multiplicity at {mu}")
        if value:
            mult[mu] = int(value)
    return MultiplicityTable(lam, mult)
