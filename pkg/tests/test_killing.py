from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from weylmod import InvalidInputError, build
from weylmod.killing import (Adjoint, HSpin, SimplyConnected, SLmodMu, SO, classify_killing,
                             det_A, e_factor, lattice_of, parse_quotient, root_pair_values)
from weylmod.rootsys import RootSystemType


def gram_det(vectors):
    g = sympy.Matrix([[sum(sympy.Rational(a) * b for a, b in zip(x, y)) for y in vectors]
                      for x in vectors])
    return g, g.det()


def denominators_lcm(g):
    return sympy.ilcm(*[sympy.fraction(x)[1] for x in g]) if g else 1


def euclid_hspin(n):
    # D_n roots e_i - e_{i+1}, e_{n-1} + e_n together with (1/2)(1, ..., 1)
    half = [sympy.Rational(1, 2)] * n
    vecs = [half]
    for i in range(1, n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        vecs.append(v)
    v = [0] * n
    v[n - 2] = v[n - 1] = 1
    vecs.append(v)
    return vecs


def euclid_sl_mod(n, m):
    # sum-zero hyperplane in R^n; roots e_i - e_{i+1} and (n/m) * omega_{n-1}
    vecs = []
    for i in range(1, n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        vecs.append(v)
    k = n // m
    vecs.append([sympy.Rational(k, n) - (k if j == n - 1 else 0) for j in range(n)])
    return vecs


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_hspin_against_euclidean_lattice(n):
    g, det = gram_det(euclid_hspin(n))
    lat = lattice_of(HSpin(2 * n))
    assert lat.det == Fraction(int(det))
    assert lat.e_factor == denominators_lcm(list(g))


@pytest.mark.parametrize("n,m", [(4, 2), (6, 2), (6, 3), (8, 2), (9, 3), (12, 2), (16, 4)])
def test_sl_mod_against_euclidean_lattice(n, m):
    g, det = gram_det(euclid_sl_mod(n, m))
    lat = lattice_of(SLmodMu(n, m))
    assert lat.det == Fraction(str(det))
    assert lat.det == Fraction(n, m * m)


def test_sl6_mod_2_is_not_integral():
    lat = lattice_of(SLmodMu(6, 2))
    assert lat.det == Fraction(3, 2) and lat.e_factor == 2
    assert lat.scaled_det == 2 ** lat.rank * Fraction(3, 2) == 48


@pytest.mark.parametrize("n", range(4, 11))
def test_so_is_unimodular(n):
    # Z^n with the standard form
    lat = lattice_of(SO(2 * n))
    assert lat.det == 1 and lat.e_factor == 1
    assert classify_killing(SO(2 * n)).globally_nondegenerate


def test_hspin12_degenerate():
    v = classify_killing(HSpin(12))
    assert v.lattice.e_factor == 2
    assert not v.globally_nondegenerate and v.degenerate_primes == (2,)


@pytest.mark.parametrize("name,order", [("A4", 5), ("D5", 4), ("E6", 3), ("E7", 2), ("E8", 1)])
def test_root_lattice_det_is_fundamental_group(name, order):
    lat = lattice_of(SimplyConnected(RootSystemType.parse(name)))
    assert lat.det == order
    assert lattice_of(Adjoint(RootSystemType.parse(name))).det == Fraction(1, order)


def test_known_discriminants():
    assert classify_killing(SimplyConnected(RootSystemType.parse("E8"))).discriminant == 1
    assert classify_killing(SLmodMu(9, 3)).globally_nondegenerate
    assert classify_killing(SLmodMu(8, 2)).degenerate_primes == (2,)
    # short roots of B_n contribute v = 2 to the discriminant
    assert 2 in classify_killing(SimplyConnected(RootSystemType.parse("B3"))).degenerate_primes


def test_root_pair_values():
    assert set(root_pair_values(build("E6"))) == {1}
    assert sorted(set(root_pair_values(build("G2")))) == [1, 3]
    assert root_pair_values(build("B2")).count(2) == 2


def test_e_factor_non_simply_laced():
    # coroots of short roots have squared length 2 * 2 / (alpha, alpha) > 2
    assert e_factor(SimplyConnected(RootSystemType.parse("B3"))) == 1
    assert e_factor(Adjoint(RootSystemType.parse("A1"))) == 2


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 20), st.integers(-5, 5), st.integers(-5, 5))
def test_det_a_against_sympy(r, a, b):
    m = sympy.zeros(r + 1, r + 1)
    for i in range(r):
        m[i, i] = 2
        if i + 1 < r:
            m[i, i + 1] = m[i + 1, i] = -1
    m[0, r] = m[r, 0] = a
    m[r, r] = b
    assert det_A(r, a, b) == m.det() == b * (r + 1) - a * a * r


@pytest.mark.parametrize("text,spec", [
    ("E8", SimplyConnected(RootSystemType("E", 8))), ("ad:E6", Adjoint(RootSystemType("E", 6))),
    ("sc:B3", SimplyConnected(RootSystemType("B", 3))), ("SO10", SO(10)),
    ("hspin16", HSpin(16)), ("SL8/mu2", SLmodMu(8, 2)),
])
def test_parse_quotient(text, spec):
    assert parse_quotient(text) == spec


@pytest.mark.parametrize("build_bad", [lambda: SO(7), lambda: HSpin(10), lambda: HSpin(12 + 1),
                                       lambda: SLmodMu(8, 3), lambda: det_A(0, 1, 1),
                                       lambda: parse_quotient("nonsense")])
def test_invalid_quotients(build_bad):
    with pytest.raises(InvalidInputError):
        build_bad()
