"""Desk-scale verification harness shared by ``weylmod verify`` and the test suite.

Every check is split into independent work units so a worker pool can run
them; results are merged in plan order, so output does not depend on the
number of workers.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from sympy import primerange

from .characters import VirtualCharacter, weyl_dim
from .classify import classify_mt, classify_qm, qm_bruteforce, replay_chain
from .jantzen import (globally_irreducible_oracle, irreducible_at, jantzen_sum, prime_bound,
                      sl2_dim_L, sl2_irreducible, two_factor_dim_L)
from .killing import HSpin, SLmodMu, SO, SimplyConnected, det_A, lattice_of
from .rootsys import RootSystemType, build
from .weights import minuscule_weights, orbit_summary

MAX_FAILURES_REPORTED = 20

MT_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2"]
QM_TYPES = ["A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C3", "C4", "C5", "D4", "D5",
            "F4", "G2"]


def all_types(max_rank: int) -> list[RootSystemType]:
    out = []
    for n in range(1, max_rank + 1):
        out.append(RootSystemType("A", n))
        if n >= 2:
            out.append(RootSystemType("B", n))
        if n >= 3:
            out.append(RootSystemType("C", n))
        if n >= 4:
            out.append(RootSystemType("D", n))
        if n in (6, 7, 8):
            out.append(RootSystemType("E", n))
    if max_rank >= 4:
        out.append(RootSystemType("F", 4))
    if max_rank >= 2:
        out.append(RootSystemType("G", 2))
    return sorted(out, key=lambda t: (t.rank, t.family))


def marked_minuscule_nodes(typ: RootSystemType) -> set[int]:
    """Nodes circled in the standard table of Dynkin diagrams (1-based)."""
    fam, n = typ.family, typ.rank
    return {
        "A": set(range(1, n + 1)),
        "B": {n},
        "C": {1},
        "D": {1, n - 1, n},
        "E": {6: {1, 6}, 7: {7}, 8: set()}.get(n, set()),
        "F": set(),
        "G": set(),
    }[fam]


FUNDAMENTAL_GROUP_ORDER = {"A": lambda n: n + 1, "D": lambda n: 4,
                           "E": lambda n: {6: 3, 7: 2, 8: 1}[n]}


# --- work units: each returns (number of cases, list of failure strings) ---

def unit_mt_crossval(type_name: str, dim_cap: int):
    rs = build(type_name)
    cases, fails = 0, []
    for lam in itertools.product(range(4), repeat=rs.rank):
        if weyl_dim(rs, lam) > dim_cap:
            continue
        cases += 1
        verdict = classify_mt(rs, lam)
        ok, bad = globally_irreducible_oracle(rs, lam)
        where = f"({rs.type}, {list(lam)})"
        if verdict.globally_irreducible != ok:
            fails.append(f"{where}: classifier={verdict.globally_irreducible} oracle primes={bad}")
            continue
        if ok:
            continue
        if min(bad) > 2 * rs.rank + 1:
            fails.append(f"{where}: no reducible prime <= {2 * rs.rank + 1}, oracle={bad}")
        if verdict.witness_prime not in bad:
            fails.append(f"{where}, p={verdict.witness_prime}: witness not in oracle list {bad}")
        btyp, bw, bp = replay_chain(verdict)
        if irreducible_at(build(btyp), bw, bp):
            fails.append(f"{where}: chain base ({btyp}, {list(bw)}, p={bp}) is irreducible")
    return cases, fails


def unit_sharpness(n: int):
    rs = build(RootSystemType("B", n))
    lam = tuple(int(i in (0, n - 1)) for i in range(n))
    ok, bad = globally_irreducible_oracle(rs, lam)
    fails = []
    if bad != [2 * n + 1]:
        fails.append(f"(B{n}, {list(lam)}): reducible primes {bad}, expected [{2 * n + 1}]")
    if not irreducible_at(rs, lam, 2):
        fails.append(f"(B{n}, {list(lam)}, p=2): expected irreducible")
    if classify_mt(rs, lam).witness_prime != 2 * rs.rank + 1:
        fails.append(f"(B{n}, {list(lam)}): witness prime is not 2*rank+1")
    return 1, fails


def unit_bn_dims(n: int):
    rs = build(RootSystemType("B", n))
    lam = tuple(int(i in (0, n - 1)) for i in range(n))
    w_n = rs.fundamental(n - 1)
    p = 2 * n + 1
    fails = []
    report = jantzen_sum(rs, lam, p)
    if report.sum != VirtualCharacter({w_n: 1}):
        fails.append(f"(B{n}, {list(lam)}, p={p}): sum {report.sum} != chi({list(w_n)})")
    if weyl_dim(rs, lam) != 2 * n * 2**n:
        fails.append(f"(B{n}, {list(lam)}): dim V = {weyl_dim(rs, lam)} != {2 * n * 2**n}")
    if two_factor_dim_L(rs, report) != 2**n * (2 * n - 1):
        fails.append(f"(B{n}, {list(lam)}, p={p}): dim L != {2**n * (2 * n - 1)}")
    for q in primerange(2, prime_bound(rs, lam)):
        if q != p and not irreducible_at(rs, lam, q):
            fails.append(f"(B{n}, {list(lam)}, p={q}): unexpected reducibility")
    return 1, fails


def unit_e8_adjoint():
    rs = build(RootSystemType("E", 8))
    lam = rs.fundamental(7)
    fails = []
    bound = prime_bound(rs, lam)
    primes = list(primerange(2, 59))
    for p in primes:
        if not irreducible_at(rs, lam, p):
            fails.append(f"(E8, {list(lam)}, p={p}): sum is nonzero")
    if weyl_dim(rs, lam) != 248:
        fails.append(f"(E8, {list(lam)}): dim {weyl_dim(rs, lam)} != 248")
    if orbit_summary(rs, lam).orbit_size != 240 or weyl_dim(rs, lam) - 240 != rs.rank:
        fails.append("(E8, adjoint): 240 + 8 decomposition fails")
    if bound != 31:
        fails.append(f"(E8, adjoint): prime bound {bound} != 31")
    return len(primes), fails


def unit_minuscule(type_name: str, with_jsf: bool):
    rs = build(type_name)
    fails = []
    found = minuscule_weights(rs)
    expected = {rs.zero} | {rs.fundamental(i - 1) for i in marked_minuscule_nodes(rs.type)}
    if found != expected:
        fails.append(f"({rs.type}): minuscule set {sorted(found)} != table {sorted(expected)}")
    if len(found) != rs.cartan_determinant:
        fails.append(f"({rs.type}): {len(found)} minuscule weights, det Cartan {rs.cartan_determinant}")
    cases = 1
    if with_jsf:
        for lam in sorted(found):
            for p in primerange(2, max(prime_bound(rs, lam), 3)):
                cases += 1
                if not irreducible_at(rs, lam, p):
                    fails.append(f"({rs.type}, {list(lam)}, p={p}): sum is nonzero")
    return cases, fails


def _c_closed_form(n: int) -> Fraction:
    out = Fraction(7 * 2 ** (n - 1) * n * (2 * n + 1), n + 3)
    for i in range(6, n + 2):
        out *= Fraction(2 * i - 3, i)
    return out


def unit_dims(max_rank: int):
    fails, cases = [], 0
    for n in (4, 5, 6):
        if n > max_rank:
            continue
        rs = build(RootSystemType("C", n))
        lam = tuple(int(i in (0, n - 1)) for i in range(n))
        cases += 1
        if weyl_dim(rs, lam) != _c_closed_form(n):
            fails.append(f"(C{n}, {list(lam)}): {weyl_dim(rs, lam)} != {_c_closed_form(n)}")
    fixed = [("F4", (1, 0, 0, 1), 1053), ("G2", (1, 1), 64)]
    for name, lam, want in fixed:
        if build(name).rank > max_rank:
            continue
        cases += 1
        if weyl_dim(build(name), lam) != want:
            fails.append(f"({name}, {list(lam)}): dim != {want}")
    for n in range(2, min(max_rank, 6) + 1):
        rs = build(RootSystemType("B", n))
        for i in range(n - 1):
            cases += 1
            if weyl_dim(rs, rs.fundamental(i)) != comb(2 * n + 1, i + 1):
                fails.append(f"(B{n}, w{i + 1}): dim != C({2 * n + 1},{i + 1})")
    return cases, fails


def unit_fundamental_primes(max_rank: int):
    fails, cases = [], 0
    for n in range(2, min(max_rank, 6) + 1):
        rs = build(RootSystemType("B", n))
        for i in range(n - 1):
            cases += 1
            if irreducible_at(rs, rs.fundamental(i), 2):
                fails.append(f"(B{n}, w{i + 1}, p=2): expected reducible")
    for n in range(3, min(max_rank, 6) + 1):
        rs = build(RootSystemType("C", n))
        for p in primerange(2, 14):
            cases += 1
            if irreducible_at(rs, rs.fundamental(1), p) != (n % p != 0):
                fails.append(f"(C{n}, w2, p={p}): reducible iff p | n fails")
    if max_rank >= 4:
        cases += 1
        if irreducible_at(build("D4"), (0, 1, 0, 0), 2):
            fails.append("(D4, w2, p=2): expected reducible")
    for name in ("G2", "F4"):
        rs = build(name)
        if rs.rank > max_rank:
            continue
        for i in range(rs.rank):
            lam = rs.fundamental(i)
            if lam in minuscule_weights(rs):
                continue
            cases += 1
            if all(irreducible_at(rs, lam, p) for p in (2, 3)):
                fails.append(f"({name}, w{i + 1}): irreducible at both 2 and 3")
    return cases, fails


def unit_killing(max_rank: int):
    fails, cases = [], 0
    for r in range(1, 21):
        for a in range(-5, 6):
            for b in range(-5, 6):
                cases += 1
                if det_A(r, a, b) != b * (r + 1) - a * a * r:
                    fails.append(f"det_A({r},{a},{b}) != {b * (r + 1) - a * a * r}")
    for n in range(4, min(max_rank, 10) + 1):
        cases += 1
        if lattice_of(SO(2 * n)).det != 1:
            fails.append(f"SO{2 * n}: det {lattice_of(SO(2 * n)).det} != 1")
    for n in range(2, 26):
        if n - 1 > max_rank:
            break
        for m in range(2, n + 1):
            if n % m or m * m > n:
                continue
            cases += 1
            det = lattice_of(SLmodMu(n, m)).det
            if det != Fraction(n, m * m):
                fails.append(f"SL{n}/mu{m}: det {det} != {Fraction(n, m * m)}")
    for dim in (8, 16):
        if dim // 2 > max_rank:
            continue
        cases += 1
        if lattice_of(HSpin(dim)).det != 1:
            fails.append(f"HSpin{dim}: det != 1")
    for typ in all_types(max_rank):
        if not typ.simply_laced:
            continue
        cases += 1
        lat = lattice_of(SimplyConnected(typ))
        if [list(r) for r in lat.gram] != [list(r) for r in build(typ).cartan]:
            fails.append(f"{typ}: Gram of root lattice is not the Cartan matrix")
        if lat.det != FUNDAMENTAL_GROUP_ORDER[typ.family](typ.rank):
            fails.append(f"{typ}: det {lat.det} != fundamental group order")
    return cases, fails


def unit_qm(type_name: str):
    rs = build(type_name)
    cases, fails = 0, []
    for lam in itertools.product(range(3), repeat=rs.rank):
        cases += 1
        case = classify_qm(rs, lam)
        brute = qm_bruteforce(rs, lam)
        if (case is not None) != brute:
            fails.append(f"({rs.type}, {list(lam)}): pattern={case} bruteforce={brute}")
    return cases, fails


def unit_sl2():
    rs = build("A1")
    cases, fails = 0, []
    for d in range(201):
        for p in primerange(2, 24):
            cases += 1
            report = jantzen_sum(rs, (d,), p)
            if report.irreducible != sl2_irreducible(d, p):
                fails.append(f"(A1, [{d}], p={p}): sum zero={report.irreducible} criterion={sl2_irreducible(d, p)}")
            dim_l = two_factor_dim_L(rs, report)
            if report.irreducible and sl2_dim_L(d, p) != d + 1:
                fails.append(f"(A1, [{d}], p={p}): dim L {sl2_dim_L(d, p)} != {d + 1}")
            if dim_l is not None and dim_l != sl2_dim_L(d, p):
                fails.append(f"(A1, [{d}], p={p}): two-factor dim {dim_l} != digit product {sl2_dim_L(d, p)}")
    return cases, fails


UNITS = {f.__name__: f for f in (unit_mt_crossval, unit_sharpness, unit_bn_dims, unit_e8_adjoint,
                                 unit_minuscule, unit_dims, unit_fundamental_primes, unit_killing,
                                 unit_qm, unit_sl2)}

CHECKS = [
    ("mt-crossval", "classifier agrees with the Jantzen oracle, rank <= 4"),
    ("sharpness", "B2 and B3 w1+wn reducible exactly at 2n+1"),
    ("bn-dims", "B_n w1+wn: sum = chi(w_n) at p = 2n+1, dim L = 2^n(2n-1)"),
    ("e8-adjoint", "E8 adjoint module irreducible for every prime"),
    ("minuscule", "minuscule sets, coset count and vanishing sums"),
    ("dimensions", "Weyl dimension closed forms"),
    ("fundamental-primes", "reducibility of fundamental Weyl modules"),
    ("killing", "Gram determinants of character lattices"),
    ("qm", "proper-Levi irreducibility pattern vs brute force, rank <= 5"),
    ("sl2", "SL2 digit criterion vs Jantzen sum, d <= 200, p <= 23"),
]


def plan(max_rank: int, dim_cap: int) -> list[tuple[str, str, tuple]]:
    units: list[tuple[str, str, tuple]] = []
    for name in MT_TYPES:
        if build(name).rank <= max_rank:
            units.append(("mt-crossval", "unit_mt_crossval", (name, dim_cap)))
    for n in (2, 3):
        if n <= max_rank:
            units.append(("sharpness", "unit_sharpness", (n,)))
    for n in (2, 3, 5):
        if n <= max_rank:
            units.append(("bn-dims", "unit_bn_dims", (n,)))
    if max_rank >= 8:
        units.append(("e8-adjoint", "unit_e8_adjoint", ()))
    for typ in all_types(max_rank):
        units.append(("minuscule", "unit_minuscule", (str(typ), typ.rank <= 6)))
    if max_rank >= 2:
        units.append(("dimensions", "unit_dims", (max_rank,)))
        units.append(("fundamental-primes", "unit_fundamental_primes", (max_rank,)))
        units.append(("killing", "unit_killing", (max_rank,)))
    for name in QM_TYPES:
        if build(name).rank <= max_rank:
            units.append(("qm", "unit_qm", (name,)))
    units.append(("sl2", "unit_sl2", ()))
    return units


def _run_unit(item):
    _, fn, args = item
    start = time.perf_counter()
    cases, fails = UNITS[fn](*args)
    return cases, fails, time.perf_counter() - start


@dataclass
class CheckResult:
    id: str
    title: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    ran: bool = False

    @property
    def status(self) -> str:
        if not self.ran:
            return "skipped"
        return "pass" if not self.failures else "fail"


def run_checks(max_rank: int = 4, dim_cap: int = 5000, threads: int = 1) -> list[CheckResult]:
    items = plan(max_rank, dim_cap)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            outcomes = list(pool.map(_run_unit, items))
    else:
        outcomes = [_run_unit(it) for it in items]
    results = {cid: CheckResult(cid, title) for cid, title in CHECKS}
    for (cid, _, _), (cases, fails, secs) in zip(items, outcomes):
        r = results[cid]
        r.ran = True
        r.cases += cases
        r.failures.extend(fails)
        r.seconds += secs
    return [results[cid] for cid, _ in CHECKS]


def summary_dict(results: list[CheckResult], max_rank: int, dim_cap: int,
                 timings: bool = False) -> dict:
    checks = []
    for r in results:
        entry = {"id": r.id, "title": r.title, "status": r.status, "cases": r.cases,
                 "failures": r.failures[:MAX_FAILURES_REPORTED],
                 "failure_count": len(r.failures)}
        if timings:
            entry["seconds"] = round(r.seconds, 3)
        checks.append(entry)
    return {"max_rank": max_rank, "dim_cap": dim_cap,
            "passed": all(r.status != "fail" for r in results), "checks": checks}
