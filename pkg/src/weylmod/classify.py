"""Global irreducibility classifier with replayable witness chains.

A reducible verdict records how it was reached: a sequence of Levi
restrictions (each licensed by the fact that V(lam) (x) k irreducible forces
V_J(lam) (x) k irreducible) ending in a base case with a prime p at which the
restricted Weyl module is reducible.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence, Union

from sympy import primefactors

from .errors import ClassificationError, InvalidInputError
from .jantzen import irreducible_at, sl2_irreducible
from .rootsys import (RootSystem, RootSystemType, Weight, build, highest_root,
                      highest_short_root, levi_subsystem)
from .weights import is_minuscule, require_dominant


class Reason(enum.Enum):
    MINUSCULE = "minuscule"
    E8_ADJOINT = "e8-adjoint"


@dataclass(frozen=True)
class LeviRestrict:
    nodes: tuple[int, ...]  # J, ambient indices in Bourbaki order of the component
    type: RootSystemType
    weight: Weight


@dataclass(frozen=True)
class A1Coefficient:
    node: int
    d: int
    prime: int
    tag: str = "sl2-digit-criterion"


@dataclass(frozen=True)
class FundamentalBase:
    type: RootSystemType
    node: int
    prime: int
    tag: str


@dataclass(frozen=True)
class EndSumBase:
    type: RootSystemType
    prime: int
    tag: str


@dataclass(frozen=True)
class OracleBase:
    type: RootSystemType
    weight: Weight
    prime: int
    tag: str = "jantzen-sum"


ChainStep = Union[LeviRestrict, A1Coefficient, FundamentalBase, EndSumBase, OracleBase]


@dataclass(frozen=True)
class Verdict:
    type: RootSystemType
    weight: Weight
    reason: Reason | None = None
    witness_prime: int | None = None
    chain: tuple[ChainStep, ...] = field(default=())

    @property
    def globally_irreducible(self) -> bool:
        return self.reason is not None


def levi_restrict(rs: RootSystem, J: Sequence[int], lam: Sequence[int]) -> list[tuple[RootSystemType, Weight]]:
    """Restrict lam to each component of the Levi on J, in component numbering."""
    lam = rs.check_weight(lam)
    return [(c.type, tuple(lam[i] for i in c.nodes)) for c in levi_subsystem(rs, J)]


def _smallest_prime(n: int) -> int:
    return primefactors(n)[0]


def _path(rs: RootSystem, i: int, j: int) -> list[int]:
    """Nodes on the unique path between i and j in the (tree) Dynkin diagram."""
    parent = {i: None}
    stack = [i]
    while stack:
        u = stack.pop()
        for v in rs.neighbours(u):
            if v not in parent:
                parent[v] = u
                stack.append(v)
    out = [j]
    while out[-1] != i:
        out.append(parent[out[-1]])
    return sorted(out)


def _restricted(rs: RootSystem, J: Sequence[int], lam: Weight) -> tuple[LeviRestrict, Weight]:
    comps = levi_subsystem(rs, J)
    if len(comps) != 1:
        raise AssertionError("expected a connected J")
    c = comps[0]
    w = tuple(lam[i] for i in c.nodes)
    return LeviRestrict(c.nodes, c.type, w), w


def _through_levi(rs: RootSystem, lam: Weight, J: Sequence[int]) -> Verdict:
    step, w = _restricted(rs, J, lam)
    sub = classify_mt(build(step.type), w)
    if sub.globally_irreducible:
        raise ClassificationError(f"restriction of {lam} in {rs.type} to {step.type} is irreducible")
    return Verdict(rs.type, lam, None, sub.witness_prime, (step,) + sub.chain)


def _oracle(rs: RootSystem, lam: Weight, primes=(2, 3)) -> Verdict | None:
    for p in primes:
        if not irreducible_at(rs, lam, p):
            return Verdict(rs.type, lam, None, p, (OracleBase(rs.type, lam, p),))
    return None


def _fundamental(rs: RootSystem, lam: Weight, i: int) -> Verdict:
    fam, n = rs.type.family, rs.rank
    typ = rs.type

    def base(p, tag):
        return Verdict(typ, lam, None, p, (FundamentalBase(typ, i, p, tag),))

    if fam == "B" and i < n - 1:
        if i == 0:
            return base(2, "quadratic-form-radical-char-2")
        return _through_levi(rs, lam, range(i, n))
    if fam == "D" and 1 <= i <= n - 3:
        if i == 1:
            return base(2, "alternating-form-invariant-line-char-2")
        return _through_levi(rs, lam, range(i - 1, n))
    if fam == "C":
        if i == 1:
            return base(_smallest_prime(n), "symplectic-w2-reducible-iff-p-divides-rank")
        if 1 < i < n - 1:
            return _through_levi(rs, lam, range(i - 1, n))
        if i == n - 1:
            return _through_levi(rs, lam, [n - 2, n - 1])
    if fam == "E" and n == 8:
        for drop in reversed(range(n)):
            if drop == i:
                continue
            J = [j for j in range(n) if j != drop]
            comp = next(c for c in levi_subsystem(rs, J) if i in c.nodes)
            w = tuple(lam[k] for k in comp.nodes)
            sub = classify_mt(build(comp.type), w)
            if not sub.globally_irreducible:
                step = LeviRestrict(comp.nodes, comp.type, w)
                return Verdict(typ, lam, None, sub.witness_prime, (step,) + sub.chain)
    if fam in "EFG":
        found = _oracle(rs, lam)
        if found is not None:
            return found
    raise ClassificationError(f"no reducibility witness for {lam} in {typ}")


_END_SUM = {
    "B": "spin-tensor-vector-p-divides-2n+1",
    "C": "c2-levi-natural-module-char-2",
    "F": "steinberg-tensor-1053-vs-676",
    "G": "steinberg-tensor-64-vs-49",
    "A": "scalar-matrices-p-divides-n+1",
}


def _end_sum(rs: RootSystem, lam: Weight) -> Verdict:
    fam, n = rs.type.family, rs.rank
    p = {
        "A": lambda: _smallest_prime(n + 1),
        "B": lambda: _smallest_prime(2 * n + 1),
        "C": lambda: 2,
        "F": lambda: 2,
        "G": lambda: 3,
    }[fam]()
    return Verdict(rs.type, lam, None, p, (EndSumBase(rs.type, p, _END_SUM[fam]),))


def classify_mt(rs: RootSystem, lam: Sequence[int]) -> Verdict:
    """Decide global irreducibility of V(lam) and produce a witness if reducible."""
    lam = require_dominant(rs, lam)
    verdict = _classify(rs, lam)
    if not verdict.globally_irreducible and verdict.witness_prime > 2 * rs.rank + 1:
        raise ClassificationError(
            f"witness prime {verdict.witness_prime} for {lam} in {rs.type} exceeds 2*rank+1")
    return verdict


def _classify(rs: RootSystem, lam: Weight) -> Verdict:
    typ = rs.type
    if is_minuscule(rs, lam):
        return Verdict(typ, lam, Reason.MINUSCULE)
    if typ == RootSystemType("E", 8) and lam == highest_root(rs).weight_coords:
        return Verdict(typ, lam, Reason.E8_ADJOINT)

    for i, c in enumerate(lam):
        if c >= 2:
            p = next(q for q in (2, 3) if not sl2_irreducible(c, q))
            step = A1Coefficient(i, c, p)
            if rs.rank == 1:
                return Verdict(typ, lam, None, p, (step,))
            levi = LeviRestrict((i,), RootSystemType("A", 1), (c,))
            return Verdict(typ, lam, None, p, (levi, step))

    support = [i for i, c in enumerate(lam) if c]
    if len(support) == 1:
        return _fundamental(rs, lam, support[0])

    for a in range(len(support)):
        for b in range(a + 1, len(support)):
            J = _path(rs, support[a], support[b])
            if len(J) < rs.rank:
                return _through_levi(rs, lam, J)

    # remaining case: unbranched diagram, lam = w_1 + w_n
    return _end_sum(rs, lam)


class QMCase(enum.Enum):
    MINUSCULE = "minuscule"
    HIGHEST_SHORT_ROOT = "highest-short-root"
    BN_W1_WN = "Bn-w1+wn"
    G2_W2 = "G2-w2"
    G2_W1W2 = "G2-w1+w2"


def classify_qm(rs: RootSystem, lam: Sequence[int]) -> QMCase | None:
    """Which family (if any) makes every proper Levi restriction globally irreducible."""
    if rs.rank < 2:
        raise InvalidInputError("requires rank > 1")
    lam = require_dominant(rs, lam)
    fam, n = rs.type.family, rs.rank
    if is_minuscule(rs, lam):
        return QMCase.MINUSCULE
    if lam == highest_short_root(rs).weight_coords:
        return QMCase.HIGHEST_SHORT_ROOT
    if fam == "B" and lam == tuple(int(i in (0, n - 1)) for i in range(n)):
        return QMCase.BN_W1_WN
    if fam == "G":
        if lam == (0, 1):
            return QMCase.G2_W2
        if lam == (1, 1):
            return QMCase.G2_W1W2
    return None


def qm_bruteforce(rs: RootSystem, lam: Sequence[int]) -> bool:
    """True iff every component of every maximal proper Levi is globally irreducible."""
    if rs.rank < 2:
        raise InvalidInputError("requires rank > 1")
    lam = require_dominant(rs, lam)
    for drop in range(rs.rank):
        J = [j for j in range(rs.rank) if j != drop]
        for typ, w in levi_restrict(rs, J, lam):
            if not classify_mt(build(typ), w).globally_irreducible:
                return False
    return True


def replay_chain(verdict: Verdict) -> tuple[RootSystemType, Weight, int]:
    """Walk a reducible verdict's Levi restrictions; return the base (type, weight, prime)."""
    if verdict.globally_irreducible:
        raise InvalidInputError("verdict is not reducible")
    rs = build(verdict.type)
    lam = verdict.weight
    for step in verdict.chain:
        if isinstance(step, LeviRestrict):
            comps = levi_restrict(rs, step.nodes, lam)
            if comps != [(step.type, step.weight)]:
                raise AssertionError(f"chain step {step} does not replay from {lam} in {rs.type}")
            rs, lam = build(step.type), step.weight
        else:
            if step.prime != verdict.witness_prime:
                raise AssertionError("base step prime differs from witness prime")
            return rs.type, lam, step.prime
    raise AssertionError("chain has no base step")
