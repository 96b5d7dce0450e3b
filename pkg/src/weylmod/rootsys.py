"""Simple root systems with Bourbaki numbering, in exact arithmetic.

Conventions
-----------
* Node indices are 0-based in the Python API (node ``i`` is the simple root
  labelled ``i + 1`` in Bourbaki's tables).
* ``cartan[i][j] = <alpha_j, alpha_i^vee>``, so column ``j`` holds the
  fundamental-weight coordinates of the simple root ``alpha_j``.
* Weights are tuples of ints in the fundamental-weight basis.
* The invariant form is normalized so long roots have squared length 2.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import prod
from typing import Iterable, Sequence

from .errors import InvalidInputError
from .linalg import bareiss_det, bilinear, rational_inverse

Weight = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_EXCEPTIONAL_RANKS = {"E": (6, 7, 8), "F": (4,), "G": (2,)}

_DEGREES = {
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
    ("F", 4): (2, 6, 8, 12),
    ("G", 2): (2, 6),
}


@dataclass(frozen=True, order=True)
class RootSystemType:
    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        if fam not in "ABCDEFG" or len(fam) != 1:
            raise InvalidInputError(f"unknown family {fam!r}")
        if not isinstance(n, int) or isinstance(n, bool):
            raise InvalidInputError(f"rank must be an integer, got {n!r}")
        if fam in _MIN_RANK:
            if n < _MIN_RANK[fam]:
                raise InvalidInputError(
                    f"type {fam} requires rank >= {_MIN_RANK[fam]}, got {n}")
        elif n not in _EXCEPTIONAL_RANKS[fam]:
            allowed = ", ".join(map(str, _EXCEPTIONAL_RANKS[fam]))
            raise InvalidInputError(f"type {fam} requires rank in {{{allowed}}}, got {n}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "RootSystemType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise InvalidInputError(f"cannot parse root system type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def simply_laced(self) -> bool:
        return self.family in "ADE"


def _cartan_matrix(typ: RootSystemType) -> list[list[int]]:
    fam, n = typ.family, typ.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i, j, a_ij=-1, a_ji=-1):
        # a[i][j] = <alpha_j, alpha_i^vee>
        a[i][j] = a_ij
        a[j][i] = a_ji

    if fam in "ABC":
        for i in range(n - 1):
            bond(i, i + 1)
        if fam == "B":
            bond(n - 2, n - 1, a_ij=-1, a_ji=-2)  # alpha_n short
        elif fam == "C":
            bond(n - 2, n - 1, a_ij=-2, a_ji=-1)  # alpha_n long
    elif fam == "D":
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif fam == "E":
        bond(0, 2)
        bond(1, 3)
        for i in range(2, n - 1):
            bond(i, i + 1)
    elif fam == "F":
        bond(0, 1)
        bond(1, 2, a_ij=-1, a_ji=-2)  # alpha_3, alpha_4 short
        bond(2, 3)
    else:  # G2, alpha_1 short
        bond(0, 1, a_ij=-3, a_ji=-1)
    return a


def _symmetrizer(cartan: Sequence[Sequence[int]]) -> tuple[Fraction, ...]:
    """Half squared lengths d_i with diag(d) * cartan symmetric and max d_i = 1."""
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and cartan[i][j] != 0 and d[j] is None:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                stack.append(j)
    top = max(d)
    return tuple(x / top for x in d)


@dataclass(frozen=True)
class Root:
    simple_coords: tuple[int, ...]
    weight_coords: Weight
    coroot_coords: tuple[int, ...]  # expansion of alpha^vee in simple coroots
    is_long: bool

    @property
    def height(self) -> int:
        return sum(self.simple_coords)


class RootSystem:
    """Immutable root datum of one simple type.  Use :func:`build`."""

    def __init__(self, typ: RootSystemType):
        self.type = typ
        self.rank = typ.rank
        cartan = _cartan_matrix(typ)
        self.cartan: tuple[tuple[int, ...], ...] = tuple(map(tuple, cartan))
        self.sym = _symmetrizer(cartan)
        n = self.rank
        # (alpha_i, alpha_j) = d_i * cartan[i][j]
        self.root_gram = tuple(tuple(self.sym[i] * cartan[i][j] for j in range(n))
                               for i in range(n))
        self.simple_roots = tuple(self._make_root(tuple(int(i == j) for j in range(n)))
                                  for i in range(n))
        self.positive_roots = self._generate_positive_roots()
        self.rho: Weight = (1,) * n

    def __repr__(self):
        return f"RootSystem({self.type})"

    def __reduce__(self):
        return (build, (self.type,))

    def _make_root(self, c: tuple[int, ...]) -> Root:
        n = self.rank
        weight = tuple(sum(self.cartan[i][j] * c[j] for j in range(n)) for i in range(n))
        half_len = bilinear(self.root_gram, c, c) / 2
        coroot = []
        for k in range(n):
            x = c[k] * self.sym[k] / half_len
            assert x.denominator == 1
            coroot.append(int(x))
        return Root(c, weight, tuple(coroot), half_len == 1)

    def _generate_positive_roots(self) -> tuple[Root, ...]:
        n = self.rank
        found = {r.simple_coords for r in self.simple_roots}
        layer = sorted(found)
        while layer:
            nxt = set()
            for c in layer:
                for i in range(n):
                    # alpha_i-string through c: c - p alpha_i ... c + q alpha_i
                    p = 0
                    while True:
                        lower = list(c)
                        lower[i] -= p + 1
                        if tuple(lower) in found:
                            p += 1
                        else:
                            break
                    pair = sum(self.cartan[i][j] * c[j] for j in range(n))
                    if p - pair > 0:
                        up = list(c)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            nxt.add(up)
            found |= nxt
            layer = sorted(nxt)
        ordered = sorted(found, key=lambda c: (sum(c), c))
        return tuple(self._make_root(c) for c in ordered)

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(map(tuple, rational_inverse(self.cartan)))

    @cached_property
    def weight_gram(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix of the invariant form on fundamental weights."""
        inv = self.inverse_cartan
        n = self.rank
        return tuple(tuple(inv[i][j] * self.sym[i] for j in range(n)) for i in range(n))

    @cached_property
    def cartan_determinant(self) -> int:
        return bareiss_det(self.cartan)

    def check_weight(self, lam: Sequence[int]) -> Weight:
        lam = tuple(lam)
        if len(lam) != self.rank:
            raise InvalidInputError(
                f"weight {lam} has length {len(lam)}, expected rank {self.rank} for {self.type}")
        if not all(isinstance(x, int) for x in lam):
            raise InvalidInputError(f"weight {lam} must have integer coordinates")
        return lam

    def fundamental(self, i: int) -> Weight:
        return tuple(int(i == j) for j in range(self.rank))

    @property
    def zero(self) -> Weight:
        return (0,) * self.rank

    def simple_coords(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        """Coordinates of ``lam`` in the simple-root basis (rational in general)."""
        inv = self.inverse_cartan
        return tuple(sum(inv[i][j] * lam[j] for j in range(self.rank))
                     for i in range(self.rank))

    def is_long_simple(self, i: int) -> bool:
        return self.sym[i] == 1

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(self.rank) if j != i and self.cartan[i][j] != 0]


@lru_cache(maxsize=None)
def _build_cached(typ: RootSystemType) -> RootSystem:
    return RootSystem(typ)


def build(typ: RootSystemType | str) -> RootSystem:
    if isinstance(typ, str):
        typ = RootSystemType.parse(typ)
    return _build_cached(typ)


def pairing(rs: RootSystem, lam: Sequence[int], alpha: Root) -> int:
    """<lam, alpha^vee>."""
    if len(lam) != rs.rank or len(alpha.coroot_coords) != rs.rank:
        raise InvalidInputError("dimension mismatch between weight and root")
    return sum(x * c for x, c in zip(lam, alpha.coroot_coords))


def inner_product(rs: RootSystem, x: Sequence, y: Sequence) -> Fraction:
    return Fraction(bilinear(rs.weight_gram, x, y))


def reflect(rs: RootSystem, lam: Sequence[int], alpha: Root) -> Weight:
    k = pairing(rs, lam, alpha)
    return tuple(a - k * b for a, b in zip(lam, alpha.weight_coords))


def simple_reflect(rs: RootSystem, lam: Sequence[int], i: int) -> Weight:
    k = lam[i]
    if k == 0:
        return tuple(lam)
    col = rs.simple_roots[i].weight_coords
    return tuple(a - k * b for a, b in zip(lam, col))


def dominant_representative(rs: RootSystem, lam: Sequence[int]) -> tuple[Weight, int, int]:
    """Return ``(dominant weight, det w, number of simple reflections)``.

    Reflects in the first negative coordinate until none remain; each step
    strictly raises the weight, so this terminates.
    """
    cur = list(lam)
    n = rs.rank
    steps = 0
    cols = [r.weight_coords for r in rs.simple_roots]
    while True:
        for i in range(n):
            if cur[i] < 0:
                k = cur[i]
                col = cols[i]
                for j in range(n):
                    cur[j] -= k * col[j]
                steps += 1
                break
        else:
            return tuple(cur), (-1) ** steps, steps


def highest_root(rs: RootSystem) -> Root:
    return rs.positive_roots[-1]


def highest_short_root(rs: RootSystem) -> Root:
    short = [r for r in rs.positive_roots if not r.is_long]
    if not short:
        return highest_root(rs)
    return max(short, key=lambda r: r.height)


def weyl_group_order(rs: RootSystem) -> int:
    return weyl_group_order_of_type(rs.type)


def weyl_group_order_of_type(typ: RootSystemType) -> int:
    """|W| as the product of the fundamental degrees."""
    fam, n = typ.family, typ.rank
    if fam == "A":
        degrees = range(2, n + 2)
    elif fam in "BC":
        degrees = range(2, 2 * n + 1, 2)
    elif fam == "D":
        degrees = list(range(2, 2 * n - 1, 2)) + [n]
    else:
        degrees = _DEGREES[(fam, n)]
    return prod(degrees)


def dual_coxeter_number(rs: RootSystem) -> int:
    return 1 + pairing(rs, rs.rho, highest_root(rs))


@dataclass(frozen=True)
class LeviComponent:
    """A connected piece of a sub-diagram.

    ``nodes[k]`` is the ambient index of node ``k`` of ``type`` in Bourbaki order.
    """
    type: RootSystemType
    nodes: tuple[int, ...] = field()


def _components(rs: RootSystem, J: Iterable[int]) -> list[list[int]]:
    todo = set(J)
    out = []
    while todo:
        start = min(todo)
        comp, stack = {start}, [start]
        todo.discard(start)
        while stack:
            i = stack.pop()
            for j in rs.neighbours(i):
                if j in todo:
                    todo.discard(j)
                    comp.add(j)
                    stack.append(j)
        out.append(sorted(comp))
    return sorted(out)


def _walk(rs: RootSystem, start: int, prev: int, nodes: set[int]) -> list[int]:
    path = [start]
    while True:
        nxt = [j for j in rs.neighbours(path[-1]) if j in nodes and j != prev]
        if not nxt:
            return path
        prev = path[-1]
        path.append(nxt[0])


def _identify(rs: RootSystem, comp: list[int]) -> LeviComponent:
    nodes = set(comp)
    k = len(comp)
    if k == 1:
        return LeviComponent(RootSystemType("A", 1), tuple(comp))
    nbrs = {i: [j for j in rs.neighbours(i) if j in nodes] for i in comp}
    branch = [i for i in comp if len(nbrs[i]) == 3]
    if branch:
        b = branch[0]
        arms = [_walk(rs, j, b, nodes) for j in nbrs[b]]
        lengths = sorted(len(a) for a in arms)
        if lengths[:2] == [1, 1]:
            arms.sort(key=lambda a: (-len(a), a[0]))
            order = list(reversed(arms[0])) + [b, arms[1][0], arms[2][0]]
            return LeviComponent(RootSystemType("D", k), tuple(order))
        arms.sort(key=lambda a: (len(a), a[0]))
        short, mid, long_ = arms
        order = [mid[1], short[0], mid[0], b] + long_
        return LeviComponent(RootSystemType("E", k), tuple(order))
    ends = sorted(i for i in comp if len(nbrs[i]) == 1)
    path = _walk(rs, ends[0], -1, nodes)
    mult = [rs.cartan[a][b] * rs.cartan[b][a] for a, b in zip(path, path[1:])]
    if max(mult) == 1:
        return LeviComponent(RootSystemType("A", k), tuple(path))
    if max(mult) == 3:
        if not rs.is_long_simple(path[0]):
            return LeviComponent(RootSystemType("G", 2), tuple(path))
        return LeviComponent(RootSystemType("G", 2), tuple(reversed(path)))
    pos = mult.index(2)
    if 0 < pos < len(mult) - 1:
        if not rs.is_long_simple(path[0]):
            path.reverse()
        return LeviComponent(RootSystemType("F", 4), tuple(path))
    if pos == 0:
        path.reverse()
    # double bond now joins the last two nodes
    if k == 2:
        if not rs.is_long_simple(path[0]):
            path.reverse()
        return LeviComponent(RootSystemType("B", 2), tuple(path))
    family = "C" if rs.is_long_simple(path[-1]) else "B"
    return LeviComponent(RootSystemType(family, k), tuple(path))


def levi_subsystem(rs: RootSystem, J: Iterable[int]) -> list[LeviComponent]:
    """Connected components of the sub-diagram on ``J`` with their types.

    A C2 component is reported as B2 (long node first), B1/C1 as A1 and
    D3 as A3, so every component type is a valid :class:`RootSystemType`.
    """
    J = set(J)
    if not J <= set(range(rs.rank)):
        raise InvalidInputError(f"node set {sorted(J)} not within 0..{rs.rank - 1}")
    return [_identify(rs, comp) for comp in _components(rs, J)]
