"""Jantzen sum formula as a characteristic-p irreducibility test.

For dominant lam and a prime p the sum

    sum_{alpha > 0} sum_{0 < mp < <lam + rho, alpha^vee>} nu_p(mp) chi(s_{alpha,mp} . lam)

equals sum_{i > 0} ch V(lam)^i over the Jantzen filtration, and vanishes
exactly when V(lam) (x) F_p is irreducible.  Here
s_{alpha,mp} . lam = lam - (<lam + rho, alpha^vee> - mp) alpha.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from sympy import isprime, multiplicity, primerange

from .characters import VirtualCharacter, euler_characteristic, weyl_dim
from .errors import InvalidInputError
from .rootsys import Root, RootSystem, Weight, pairing
from .weights import is_minuscule, require_dominant


@dataclass(frozen=True)
class JantzenTerm:
    root: Root
    m: int
    valuation: int
    chi: tuple[int, Weight] | None  # None on a wall


@dataclass
class JantzenReport:
    prime: int
    highest_weight: Weight
    sum: VirtualCharacter
    term_log: list[JantzenTerm] = field(default_factory=list)

    @property
    def irreducible(self) -> bool:
        return self.sum.is_zero()


def _check_prime(p) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not isprime(p):
        raise InvalidInputError(f"{p!r} is not a prime")
    return p


def prime_bound(rs: RootSystem, lam: Sequence[int]) -> int:
    """<lam + rho, highest coroot>; primes at or above it give an empty sum."""
    shifted = [x + 1 for x in lam]
    return max(pairing(rs, shifted, a) for a in rs.positive_roots)


@lru_cache(maxsize=8192)
def _affine_terms(rs: RootSystem, lam: Weight) -> tuple[tuple[Root, int, tuple | None], ...]:
    """(alpha, k, chi(lam - (N - k) alpha)) for every 0 < k < N = <lam + rho, alpha^vee>."""
    shifted = [x + 1 for x in lam]
    out = []
    for a in rs.positive_roots:
        top = pairing(rs, shifted, a)
        for k in range(1, top):
            shift = top - k
            mu = tuple(x - shift * y for x, y in zip(lam, a.weight_coords))
            out.append((a, k, euler_characteristic(rs, mu)))
    return tuple(out)


def jantzen_sum(rs: RootSystem, lam: Sequence[int], p: int) -> JantzenReport:
    p = _check_prime(p)
    lam = require_dominant(rs, lam)
    terms: dict[Weight, int] = {}
    log = []
    for a, k, chi in _affine_terms(rs, lam):
        if k % p:
            continue
        v = multiplicity(p, k)
        log.append(JantzenTerm(a, k // p, v, chi))
        if chi is not None:
            sign, w = chi
            terms[w] = terms.get(w, 0) + sign * v
    return JantzenReport(p, lam, VirtualCharacter(terms), log)


def irreducible_at(rs: RootSystem, lam: Sequence[int], p: int) -> bool:
    return jantzen_sum(rs, lam, p).irreducible


def reducible_primes(rs: RootSystem, lam: Sequence[int]) -> list[int]:
    lam = require_dominant(rs, lam)
    return [p for p in primerange(2, prime_bound(rs, lam))
            if not jantzen_sum(rs, lam, p).irreducible]


def globally_irreducible_oracle(rs: RootSystem, lam: Sequence[int]) -> tuple[bool, list[int]]:
    bad = reducible_primes(rs, lam)
    return not bad, bad


def two_factor_dim_L(rs: RootSystem, report: JantzenReport) -> int | None:
    """dim L(lam) when the sum is a single chi(mu) with V(mu) irreducible at p.

    Then the first Jantzen layer is L(mu) and the second vanishes, so
    dim L(lam) = dim V(lam) - dim V(mu).  Otherwise ``None``.
    """
    if len(report.sum) != 1:
        return None
    (mu, c), = report.sum.items()
    if c != 1:
        return None
    if not (is_minuscule(rs, mu) or irreducible_at(rs, mu, report.prime)):
        return None
    return weyl_dim(rs, report.highest_weight) - weyl_dim(rs, mu)


def base_p_digits(d: int, p: int) -> list[int]:
    digits = []
    while d:
        d, r = divmod(d, p)
        digits.append(r)
    return digits


def sl2_dim_L(d: int, p: int) -> int:
    """dim L(d) for SL2 in characteristic p: product of (digit + 1) over base-p digits."""
    _check_prime(p)
    if d < 0:
        raise InvalidInputError("d must be nonnegative")
    out = 1
    for c in base_p_digits(d, p):
        out *= c + 1
    return out


def sl2_irreducible(d: int, p: int) -> bool:
    """V(d) (x) F_p is irreducible iff d + 1 = c p^e with 0 < c < p."""
    _check_prime(p)
    if d < 0:
        raise InvalidInputError("d must be nonnegative")
    n = d + 1
    while n % p == 0:
        n //= p
    return n < p
