import random

import pytest
import sympy

from orbivertex import partition_core as pc
from orbivertex import rpc
from orbivertex.dt_vertex import (
    closed_z2z2_nolegs, closed_z2z2_staircase, corollary_rpc_closed,
    enumerate_3d, enumerate_one_leg, one_leg_zn_staircase, phi,
    pyramid_closed, skew_schur_specialized, symmetry_check, upsilon,
    vertex_closed_zn, _hook_factor, _rotation_exponents, _standard_vars,
)
from orbivertex.fock_transfer import vertex_by_transfer, zn_names
from orbivertex.pyramid import ANTI, DIAG, VARS_Z2Z2, pyramid_series
from orbivertex.qseries import (
    Series, macmahon_family, term, term_mul, term_neg, term_var,
)

import oracles


def test_enumerate_z2z2_no_leg_low_terms():
    e = enumerate_3d((), "z2z2", 3)
    assert e.coefficient((0, 0, 0, 0)) == 1
    assert e.coefficient((1, 0, 0, 0)) == 1
    assert e.coefficient((0, 1, 0, 0)) == 0
    assert e.coefficient((1, 1, 0, 0)) == 1
    assert e.coefficient((1, 0, 1, 0)) == 1
    assert e.coefficient((1, 0, 0, 1)) == 1
    assert e.coefficient((2, 0, 0, 0)) == 0
    for exps in [(2, 1, 0, 0), (2, 0, 1, 0), (2, 0, 0, 1),
                 (1, 1, 1, 0), (1, 1, 0, 1), (1, 0, 1, 1)]:
        assert e.coefficient(exps) == 1
    assert sum(e.terms.values()) == 1 + 1 + 3 + 6


def test_enumerate_leg_examples():
    assert enumerate_3d((1,), "z2z2", 0).is_one()
    e = enumerate_3d((1,), "z2z2", 2)
    assert e.coefficient((0, 1, 0, 0)) == 1
    assert e.coefficient((0, 0, 1, 0)) == 1
    assert e.coefficient((1, 0, 0, 0)) == 0
    assert e.coefficient((0, 0, 0, 1)) == 0


def test_enumerate_zn_low_terms():
    e2 = enumerate_3d((), "zn", 2, n=2)
    assert e2.coefficient((1, 1)) == 2
    assert e2.coefficient((2, 0)) == 1
    assert e2.coefficient((0, 2)) == 0
    e4 = enumerate_3d((), "zn", 2, n=4)
    assert e4.coefficient((1, 1, 0, 0)) == 1
    assert e4.coefficient((1, 0, 0, 1)) == 1
    assert e4.coefficient((2, 0, 0, 0)) == 1
    assert e4.coefficient((1, 0, 1, 0)) == 0
    leg = enumerate_3d((1,), "zn", 1, n=4)
    assert leg.coefficient((0, 1, 0, 0)) == 1
    assert leg.coefficient((0, 0, 0, 1)) == 1
    assert leg.coefficient((1, 0, 0, 0)) == 0
    assert leg.coefficient((0, 0, 1, 0)) == 0


def test_enumerate_matches_transfer():
    for leg in [(), (2,)]:
        assert enumerate_3d(leg, "z2z2", 4) == vertex_by_transfer("z2z2", leg, 4)
    assert enumerate_3d((1,), "zn", 3, n=4) == vertex_by_transfer("zn", (1,), 3, n=4)


def test_enumerate_rejects_bad_input():
    with pytest.raises(ValueError):
        enumerate_one_leg(((1,), (1,), ()), "z2z2", 2)
    with pytest.raises(ValueError):
        enumerate_3d((1,), "zn", 2)
    with pytest.raises(ValueError):
        enumerate_3d((1,), "z3z3", 2)


def test_symmetry_check():
    assert symmetry_check((), 1, 3)
    assert symmetry_check((1,), 1, 4)
    assert symmetry_check((1,), 2, 4)
    assert symmetry_check((2, 1), 2, 5)
    with pytest.raises(ValueError):
        symmetry_check((1,), 3, 2)


def test_skew_schur_basics():
    names = ("x1", "x2")
    x1, x2 = term_var(2, 0), term_var(2, 1)
    s = skew_schur_specialized((1,), (), (x1, x2), 4, names)
    assert s.coefficient((1, 0)) == 1 and s.coefficient((0, 1)) == 1
    assert s.constant() == 0
    s = skew_schur_specialized((1, 1), (), (x1, x2), 4, names)
    assert s.terms == {(1, 1): 1}
    s = skew_schur_specialized((2,), (), (x1, x2), 4, names)
    assert s.terms == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    assert skew_schur_specialized((2, 1), (2, 1), (x1, x2), 4, names).is_one()
    assert skew_schur_specialized((1,), (2,), (x1, x2), 4, names).terms == {}


def test_skew_schur_zero_and_one_values():
    names = ("x1", "x2")
    x2 = term_var(2, 1)
    s = skew_schur_specialized((1,), (), (term_var(2, 0), x2, 0, 0), 4, names)
    assert s.terms == {(1, 0): 1, (0, 1): 1}
    s = skew_schur_specialized((1,), (), (term(1, (0, 0)), x2), 4, names)
    assert s.constant() == 1 and s.coefficient((0, 1)) == 1
    with pytest.raises(ValueError):
        skew_schur_specialized((1,), (), (term(2, (0, 0)),), 4, names)


def test_vertex_z1_leg_hook_values():
    v = vertex_closed_zn(1, ((), (), (2,)), 4)
    assert v.coefficient((1,)) == 2
    assert v.coefficient((2,)) == 6
    assert v == enumerate_3d((2,), "zn", 4, n=1)
    q = sympy.symbols("q")
    expected = oracles.smul(
        oracles.smac(1, q, [q], 4),
        oracles.smul(oracles.sinv(1 - q, [q], 4),
                     oracles.sinv(1 - q ** 2, [q], 4), [q], 4),
        [q], 4)
    assert v.terms == oracles.series_to_dict(expected, [q])


def test_vertex_closed_zn_no_legs_matches_enumeration():
    for n in (1, 2, 3, 4):
        v = vertex_closed_zn(n, ((), (), ()), 4)
        assert v == enumerate_3d((), "zn", 4, n=n)
        assert v.constant() == 1


def test_vertex_closed_zn_side_legs_match_enumeration():
    for legs in [((2,), (), ()), ((), (2,), ()), ((1, 1), (), ())]:
        v = vertex_closed_zn(2, legs, 4)
        assert v == enumerate_one_leg(legs, "zn", 4, n=2)
    v = vertex_closed_zn(4, ((1,), (), ()), 3)
    assert v == enumerate_one_leg(((1,), (), ()), "zn", 3, n=4)


def test_vertex_closed_zn_third_leg():
    v = vertex_closed_zn(4, ((), (), (2, 1)), 4)
    assert v == enumerate_3d((2, 1), "zn", 4, n=4)
    assert v == vertex_by_transfer("zn", (2, 1), 4, n=4)


def test_vertex_closed_zn_random_single_legs():
    rng = random.Random(77)
    pool = [p for k in range(4) for p in pc.partitions_of(k)]
    for _ in range(10):
        n = rng.choice([1, 2, 3, 4])
        slot = rng.randrange(3)
        legs = [(), (), ()]
        legs[slot] = rng.choice(pool)
        legs = tuple(legs)
        assert vertex_closed_zn(n, legs, 3) == enumerate_one_leg(legs, "zn", 3, n=n)


def test_vertex_closed_zn_hook_and_rotation_internals():
    names = zn_names(4)
    assert _rotation_exponents((2, 1), 4) == (0, -1, 2, -1)
    for v in [(), (1,), (2, 1), (3, 1, 1)]:
        assert sum(_rotation_exponents(v, 4)) == 0
    hook = _hook_factor((2, 1), 4, names, 3)
    expect = Series.one(names, 3)
    for exps in [(0, 1, 0, 0), (0, 0, 0, 1), (1, 1, 0, 1)]:
        expect = expect * Series.one_plus(names, 3, term(-1, exps)).invert()
    assert hook == expect


def test_vertex_closed_zn_rejects_surviving_negative_exponents():
    with pytest.raises(ValueError):
        vertex_closed_zn(1, ((1,), (1,), ()), 3)
    with pytest.raises(ValueError):
        vertex_closed_zn(4, ((1,), (1,), (1,)), 3)
    with pytest.raises(ValueError):
        vertex_closed_zn(0, ((), (), ()), 3)


def test_one_leg_zn_staircase_both_branches():
    for m in range(5):
        a = one_leg_zn_staircase(4, m, 4)
        b = vertex_closed_zn(4, ((), (), pc.staircase(m)), 4)
        assert a == b
    with pytest.raises(ValueError):
        one_leg_zn_staircase(3, 1, 4)
    with pytest.raises(ValueError):
        one_leg_zn_staircase(4, -1, 4)


def test_one_leg_zn_staircase_low_terms():
    v1 = one_leg_zn_staircase(4, 1, 3)
    assert v1.coefficient((0, 1, 0, 0)) == 1
    assert v1.coefficient((0, 0, 0, 1)) == 1
    assert v1.coefficient((1, 0, 0, 0)) == 0
    assert v1.coefficient((0, 0, 1, 0)) == 0
    v3 = one_leg_zn_staircase(4, 3, 2)
    assert v3.coefficient((0, 1, 0, 0)) == 2
    assert v3.coefficient((0, 0, 0, 1)) == 2
    assert v3.coefficient((1, 0, 0, 0)) == 0
    assert one_leg_zn_staircase(4, 1, 3) == vertex_by_transfer("zn", (1,), 3, n=4)


def test_closed_z2z2_nolegs():
    c = closed_z2z2_nolegs(4)
    assert c == enumerate_3d((), "z2z2", 4)
    assert c == vertex_by_transfer("z2z2", (), 4)


def test_upsilon_factor():
    u = upsilon(None, 1, 3)
    assert u.constant() == 1
    assert u.coefficient((0, 1, 0, 0)) == 1
    assert u.coefficient((0, 0, 1, 0)) == 1
    assert u.coefficient((1, 0, 0, 0)) == -1
    assert u.coefficient((0, 0, 0, 1)) == 0
    assert upsilon(None, 0, 4).is_one()
    for m in (1, 2, 3):
        lhs = enumerate_3d(pc.staircase(m), "z2z2", 4)
        assert lhs == closed_z2z2_staircase(m, 4)


def test_phi_bridges_the_two_vertices():
    for m in range(5):
        lhs = enumerate_3d(pc.staircase(m), "z2z2", 4)
        z4 = vertex_closed_zn(4, ((), (), pc.staircase(m)), 4)
        if m % 4 in (0, 3):
            z4 = z4.map_vars(VARS_Z2Z2, (0, 2, 3, 1))
        else:
            z4 = z4.map_vars(VARS_Z2Z2, (3, 2, 0, 1))
        assert lhs == z4 * phi(None, m, 4)


def test_pyramid_closed_matches_enumeration():
    pz = pyramid_closed(4)
    assert pz == pyramid_series(4)
    assert pz.coefficient((1, 0, 0, 0)) == 1
    assert pz.coefficient((1, 1, 0, 0)) == 1
    assert pz.coefficient((1, 0, 1, 0)) == 1
    assert pz.coefficient((1, 0, 0, 1)) == 0
    assert pz.coefficient((2, 0, 0, 0)) == 0


def test_corollary_rpc_closed():
    assert corollary_rpc_closed(0, 4) == pyramid_closed(4)
    for m in (1, 2):
        v = pc.staircase(m)
        a = corollary_rpc_closed(m, 4)
        assert a == rpc.generating_function(v, 0, ANTI, 4)
        assert a == rpc.generating_function(v, 0, DIAG, 4)


def test_anti_frame_restriction_factors_the_vertex():
    names = VARS_Z2Z2
    xa, xb, xc, q = _standard_vars()
    for m in (1, 2):
        sub, ell = m % 2, (m + 1) // 2
        fam = "Mt1" if sub else "Mt0"
        gf = rpc.generating_function(pc.staircase(m), 0, ANTI, 4)
        if m % 4 in (0, 3):
            gf = gf.map_vars(names, (0, 2, 1, 3))
        else:
            gf = gf.map_vars(names, (3, 1, 2, 0))
        rhs = (macmahon_family("Mt", names, 4, term_mul(xa, xb), q)
               * macmahon_family(fam, names, 4, term_mul(xa, xb), q, l=2 * ell)
               * gf)
        assert closed_z2z2_staircase(m, 4) == rhs


def test_diag_frame_restriction_matches_z4_vertex():
    names = VARS_Z2Z2
    xa, xb, xc, q = _standard_vars()
    x0 = term_var(4, 0)
    for m in (1, 2):
        sub, ell = m % 2, (m + 1) // 2
        fam = "Mh1" if sub else "Mh0"
        other = "Mh0" if sub else "Mh1"
        if m % 4 in (0, 3):
            xlast, triple = xc, term_mul(xa, xb, xc)
        else:
            xlast, triple = x0, term_mul(xa, xb, x0)
        rhs = one_leg_zn_staircase(4, m, 4).map_vars(names, (0, 2, 3, 1))
        for x in (xa, xb, xlast, triple):
            rhs = rhs * macmahon_family("Mh", names, 4, x, q)
        for x in (xa, xb):
            rhs = rhs / macmahon_family(fam, names, 4, x, q, l=ell)
        rhs = rhs / macmahon_family(other, names, 4, xlast, q, l=ell)
        rhs = rhs / macmahon_family(fam, names, 4, triple, q, l=ell)
        assert rpc.generating_function(pc.staircase(m), 0, DIAG, 4) == rhs


def test_closed_series_coefficients_nonnegative():
    series = [closed_z2z2_nolegs(5), pyramid_closed(5),
              corollary_rpc_closed(2, 5),
              one_leg_zn_staircase(4, 3, 5),
              vertex_closed_zn(3, ((), (), (2, 1)), 4),
              closed_z2z2_staircase(2, 5)]
    for s in series:
        assert all(c >= 0 for c in s.terms.values())
