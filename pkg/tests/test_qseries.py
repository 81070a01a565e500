import json
import random

import pytest
import sympy

from orbivertex.qseries import (
    Series, macmahon, macmahon_family, pochhammer,
    term, term_mul, term_neg, term_one, term_pow, term_var,
)

import oracles

V4 = ("q0", "qa", "qb", "qc")
GENS = sympy.symbols("q0 qa qb qc")


def rand_series(rng, names, cutoff, nterms=8, unit=False):
    s = Series(names, cutoff)
    if unit:
        s._add((0,) * len(names), rng.choice([1, -1]))
    for _ in range(nterms):
        e = tuple(rng.randrange(0, 3) for _ in names)
        if unit and not any(e):
            continue
        s._add(e, rng.randrange(-5, 6))
    return s


def to_sym(s):
    expr = sympy.Integer(0)
    for e, c in s.terms.items():
        expr += c * sympy.prod(g ** x for g, x in zip(GENS, e))
    return sympy.expand(expr)


def test_ring_axioms_random():
    rng = random.Random(2024)
    for _ in range(25):
        a = rand_series(rng, V4, 5)
        b = rand_series(rng, V4, 5)
        c = rand_series(rng, V4, 5)
        assert (a + b) * c == a * c + b * c
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * Series.one(V4, 5) == a
        assert a + Series.zero(V4, 5) == a
        # cross-check one product against sympy
        got = to_sym(a * b)
        want = oracles.strunc(to_sym(a) * to_sym(b), GENS, 5)
        assert sympy.expand(got - want) == 0


def test_no_stored_zeros_or_overflow():
    rng = random.Random(5)
    for _ in range(20):
        a = rand_series(rng, V4, 4)
        b = rand_series(rng, V4, 4)
        p = a * b
        for e, c in p.terms.items():
            assert c != 0
            assert sum(e) <= 4
            assert all(x >= 0 for x in e)


def test_invert_random():
    rng = random.Random(77)
    for _ in range(20):
        a = rand_series(rng, V4, 5, unit=True)
        assert (a * a.invert()).is_one()
    with pytest.raises(ValueError):
        rand_series(rng, V4, 5).scaled(2).invert()


def test_negative_exponent_rejected():
    s = Series(V4, 4)
    with pytest.raises(ValueError):
        s._add((1, -1, 0, 0), 1)
    with pytest.raises(ValueError):
        Series.one_plus(V4, 4, term(1, (0, 0, 0, 0)))


def test_pochhammer_frozen():
    # (q; q)_infinity in one variable, cutoff 2: 1 - q - q^2
    q = term(1, (1,))
    got = pochhammer(q, q, ("q",), 2)
    assert got.terms == {(0,): 1, (1,): -1, (2,): -1}


def test_macmahon_one_variable_frozen():
    # M(1, q) counts plane partitions: 1, 1, 3, 6
    one = term(1, (0,))
    q = term(1, (1,))
    got = macmahon(one, q, ("q",), 3)
    assert got.terms == {(0,): 1, (1,): 1, (2,): 3, (3,): 6}


def q_full():
    return term(1, (1, 1, 1, 1))


def test_macmahon_vs_sympy():
    q0, qa, qb, qc = GENS
    x = term(1, (0, 1, 0, 1))           # qa*qc
    got = to_sym(macmahon(x, q_full(), V4, 6))
    want = oracles.smac(qa * qc, q0 * qa * qb * qc, GENS, 6)
    assert sympy.expand(got - want) == 0


def test_macmahon_sym_low_order():
    # M(x^-1, q) factor at n=1 produces the dual variables
    x = term(1, (0, 1, 0, 1))           # qa*qc; q/x = q0*qb
    s = macmahon_family("Mt", V4, 2, x, q_full())
    assert s.coefficient((1, 0, 1, 0)) == 1
    assert s.coefficient((0, 0, 0, 0)) == 1
    assert sum(s.terms.values()) == 2   # nothing else through degree 2


def test_macmahon_shift_identity():
    # M(x, q) = M(x q^-1, q) * (x; q)_infinity
    x = term(1, (0, 1, 1, 0))           # qa*qb
    q = q_full()
    lhs = macmahon(x, q, V4, 6)
    rhs = macmahon(term_mul(x, term_pow(q, -1)), q, V4, 6) * pochhammer(x, q, V4, 6)
    assert lhs == rhs


def test_sym_ratio_identity():
    # Mt(x, q) / Mt(q x^-1, q) = (x; q)_inf / (q x^-1; q)_inf
    x = term(1, (0, 1, 1, 0))
    q = q_full()
    qix = term_mul(q, term_pow(x, -1))
    lhs = macmahon_family("Mt", V4, 6, x, q) / macmahon_family("Mt", V4, 6, qix, q)
    rhs = pochhammer(x, q, V4, 6) / pochhammer(qix, q, V4, 6)
    assert lhs == rhs


def test_family_shift_link():
    # Mt1(q x^-1, q; l+1) = Mt0(x, q; l) * (x; q)_inf / (q x^-1; q)_inf
    x = term(1, (0, 1, 1, 0))
    q = q_full()
    qix = term_mul(q, term_pow(x, -1))
    for l in (0, 1, 2):
        lhs = macmahon_family("Mt1", V4, 6, qix, q, l=l + 1)
        rhs = (macmahon_family("Mt0", V4, 6, x, q, l=l)
               * pochhammer(x, q, V4, 6) / pochhammer(qix, q, V4, 6))
        assert lhs == rhs, l


def test_family_hat_composition():
    x = term(1, (0, 1, 0, 0))
    q = q_full()
    mt = macmahon_family("Mt", V4, 6, x, q)
    mtn = macmahon_family("Mt", V4, 6, term_neg(x), q)
    assert macmahon_family("Mh", V4, 6, x, q) == (mt * mtn).invert()
    m2 = macmahon_family("M2", V4, 6, x, q, l=2)
    m2n = macmahon_family("M2", V4, 6, term_neg(x), q, l=2)
    assert macmahon_family("Mh2", V4, 6, x, q, l=2) == m2 * m2n


def test_family_unicode_aliases():
    x = term(1, (0, 1, 0, 0))
    q = q_full()
    assert macmahon_family("M̃", V4, 4, x, q) == macmahon_family("Mt", V4, 4, x, q)
    assert macmahon_family("M~0", V4, 4, x, q, l=1) == macmahon_family(
        "Mt0", V4, 4, x, q, l=1)
    with pytest.raises(ValueError):
        macmahon_family("Mx", V4, 4, x, q)
    with pytest.raises(ValueError):
        macmahon_family("Mt0", V4, 4, x, q)   # missing l


def test_m1_family():
    x = term(1, (0, 1, 0, 0))
    y = term(1, (0, 0, 1, 0))
    q = q_full()
    got = macmahon_family("M1", V4, 6, x, q, y=y)
    want = macmahon(x, q, V4, 6) / macmahon(term_mul(x, y), q, V4, 6)
    assert got == want


def test_json_roundtrip_and_order():
    rng = random.Random(9)
    s = rand_series(rng, V4, 4)
    text = s.to_json()
    data = json.loads(text)
    exps = [tuple(t["exp"]) for t in data["terms"]]
    assert exps == sorted(exps)
    assert Series.from_json(text) == s
    # byte-identical re-serialization
    assert Series.from_json(text).to_json() == text


def test_map_vars():
    s = Series(("x", "y"), 4)
    s._add((1, 2), 3)
    t = s.map_vars(("u", "v", "w"), (2, 0))
    assert t.terms == {(2, 0, 1): 3}
    u = s.map_vars(("z",), (0, 0))
    assert u.terms == {(3,): 3}


def test_pow():
    q = Series.one_plus(("q",), 6, term(1, (1,)))
    assert (q ** 3).terms == {(0,): 1, (1,): 3, (2,): 3, (3,): 1}
    assert (q ** 0).is_one()
    inv2 = q ** -2
    assert (inv2 * q * q).is_one()
