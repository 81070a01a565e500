"""One-leg orbifold vertex series by direct box enumeration and by the
closed MacMahon-type product formulas.

The operator-transfer route lives in fock_transfer; the restricted
pyramid generating functions live in rpc.  Everything here returns
Series objects truncated by total degree, and the three routes are meant
to agree coefficient by coefficient.
"""

from __future__ import annotations

from . import partition_core as pc
from .fock_transfer import zn_names
from .pyramid import VARS_Z2Z2
from .qseries import (
    Series, macmahon, macmahon_family,
    term, term_deg, term_mul, term_neg, term_one, term_var,
)

_Z2Z2_SLOT = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 3}


# ---------------------------------------------------------------------------
# Direct enumeration
# ---------------------------------------------------------------------------


def _preds(b):
    x1, x2, x3 = b
    out = []
    if x1:
        out.append((x1 - 1, x2, x3))
    if x2:
        out.append((x1, x2 - 1, x3))
    if x3:
        out.append((x1, x2, x3 - 1))
    return out


def _succs(b):
    x1, x2, x3 = b
    return ((x1 + 1, x2, x3), (x1, x2 + 1, x3), (x1, x2, x3 + 1))


def enumerate_one_leg(legs, group, cutoff, n=None):
    """Count extra-box configurations over at most one leg cylinder.

    legs = (first, second, third) leg partitions.  Cylinder boxes weigh
    nothing; each extra box weighs one unit of its color variable.  The
    cylinders run along the first, second and third axis respectively.
    """
    lam, mu, nu = (pc.check_partition(tuple(x)) for x in legs)
    if sum(1 for x in (lam, mu, nu) if x) > 1:
        raise ValueError("at most one non-empty leg")
    if group == "z2z2":
        names = VARS_Z2Z2
        nv = 4

        def slot(b):
            return _Z2Z2_SLOT[((b[0] + b[2]) % 2, (b[1] + b[2]) % 2)]
    elif group == "zn":
        if not n or n < 1:
            raise ValueError("zn group needs n >= 1")
        names = zn_names(n)
        nv = n

        def slot(b):
            return (b[0] - b[1]) % n
    else:
        raise ValueError("unknown group %r" % group)

    def in_cyl(b):
        x1, x2, x3 = b
        return (pc.contains_cell(lam, x2, x3)
                or pc.contains_cell(mu, x3, x1)
                or pc.contains_cell(nu, x1, x2))

    have = set()

    def addable(b):
        for p in _preds(b):
            if not in_cyl(p) and p not in have:
                return False
        return True

    dims = max(pc.part(lam, 0), len(lam), pc.part(mu, 0), len(mu),
               pc.part(nu, 0), len(nu))
    bound = cutoff + dims + 2
    initial = []
    for x1 in range(bound):
        for x2 in range(bound):
            for x3 in range(bound):
                b = (x1, x2, x3)
                if not in_cyl(b) and addable(b):
                    initial.append(b)
    initial.sort()

    counts = {(0,) * nv: 1}

    def rec(cands, exps, depth):
        for i, b in enumerate(cands):
            e = list(exps)
            e[slot(b)] += 1
            te = tuple(e)
            counts[te] = counts.get(te, 0) + 1
            if depth + 1 < cutoff:
                have.add(b)
                newc = list(cands[i + 1:])
                for s in _succs(b):
                    if not in_cyl(s) and addable(s):
                        newc.append(s)
                newc.sort()
                rec(newc, te, depth + 1)
                have.discard(b)

    if cutoff >= 1:
        rec(initial, (0,) * nv, 0)
    return Series(names, cutoff, counts)


def enumerate_3d(v, group, cutoff, n=None):
    """Vertex series for a single leg in the third slot."""
    return enumerate_one_leg(((), (), v), group, cutoff, n)


def symmetry_check(leg, shift, cutoff):
    """Compare the third-slot series against the leg moved 'shift' slots
    forward, with the matching cyclic variable relabeling.  Enumeration
    on both sides; group is the order-four product of two involutions.
    """
    v = pc.check_partition(tuple(leg))
    lhs = enumerate_3d(v, "z2z2", cutoff)
    if shift == 1:
        legs, assign = (v, (), ()), (0, 3, 1, 2)
    elif shift == 2:
        legs, assign = ((), v, ()), (0, 2, 3, 1)
    else:
        raise ValueError("shift must be 1 or 2")
    rhs = enumerate_one_leg(legs, "z2z2", cutoff).map_vars(VARS_Z2Z2, assign)
    return lhs == rhs


# ---------------------------------------------------------------------------
# Skew Schur specialization
# ---------------------------------------------------------------------------


def _complete_homogeneous(vals, names, cutoff, kmax):
    h = [Series.one(names, cutoff)]
    h += [Series.zero(names, cutoff) for _ in range(kmax)]
    for val in vals:
        for k in range(1, kmax + 1):
            h[k] = h[k] + h[k - 1].mul_term(val)
    return h


def skew_schur_specialized(mu, eta, variables, cutoff, names=None):
    """Skew Schur function of mu/eta at finitely many monomial values.

    variables is a sequence of Terms (or plain 0/1 entries); zero entries
    are skipped, degree-zero entries must be exactly 1.  Expanded through
    the determinant in complete homogeneous functions.
    """
    xi = pc.check_partition(tuple(mu))
    et = pc.check_partition(tuple(eta))
    vals = []
    for t in variables:
        if t == 0:
            continue
        if t == 1:
            t = (1, (0,) * (len(names) if names else 1))
        c, e = int(t[0]), tuple(t[1])
        if c == 0:
            continue
        if sum(e) <= 0:
            if c != 1 or any(e):
                raise ValueError("degree-0 value %r is not 1" % (t,))
        vals.append((c, e))
    if names is None:
        nv = len(vals[0][1]) if vals else 1
        names = tuple("x%d" % i for i in range(nv))
    if any(pc.part(et, r) > pc.part(xi, r) for r in range(len(et))):
        return Series.zero(names, cutoff)
    ell = len(xi)
    if ell == 0:
        return Series.one(names, cutoff)
    need = [[xi[i] - pc.part(et, j) + j - i for j in range(ell)]
            for i in range(ell)]
    kmax = max(max(row) for row in need)
    h = _complete_homogeneous(vals, names, cutoff, max(kmax, 0))
    memo = {}

    def minor(cols):
        if not cols:
            return Series.one(names, cutoff)
        got = memo.get(cols)
        if got is not None:
            return got
        i = ell - len(cols)
        acc = Series.zero(names, cutoff)
        sign = 1
        for p, j in enumerate(cols):
            d = need[i][j]
            if 0 <= d:
                block = h[d]
                if block.terms:
                    acc = acc + (block * minor(cols[:p] + cols[p + 1:])).scaled(sign)
            sign = -sign
        memo[cols] = acc
        return acc

    return minor(tuple(range(ell)))


# ---------------------------------------------------------------------------
# Closed product formulas, cyclic group of order n
# ---------------------------------------------------------------------------


def _qq_exps(n, t):
    # exponent vector of the running variable product at offset t
    e = [0] * n
    if t >= 0:
        for u in range(1, t + 1):
            e[u % n] += 1
    else:
        for u in range(t + 1, 1):
            e[u % n] -= 1
    return tuple(e)


def _bar_exps(e, n):
    # indexwise negation of the color labels
    return tuple(e[(-j) % n] for j in range(n))


def _zero_zn(n, names, cutoff):
    qall = term(1, (1,) * n)
    out = macmahon(term_one(n), qall, names, cutoff) ** n
    for a in range(1, n):
        for b in range(a, n):
            x = term(1, tuple(1 if a <= i <= b else 0 for i in range(n)))
            out = out * macmahon_family("Mt", names, cutoff, x, qall)
    return out


def _hook_factor(nu, n, names, cutoff):
    out = Series.one(names, cutoff)
    for (i, j) in pc.cells(nu):
        hist = pc.hook_color_count(nu, i, j, n)
        out = out * Series.one_plus(names, cutoff, term(-1, hist)).invert()
    return out


def _rotation_exponents(nu, n):
    return tuple(-2 * pc.residue_count(nu, k, n)
                 + pc.residue_count(nu, k + 1, n)
                 + pc.residue_count(nu, k - 1, n) for k in range(n))


def _dict_mul(master, factor, cap):
    # master may hold negative exponent entries; factor must not
    fs = sorted(factor.items(), key=lambda kv: sum(kv[0]))
    out = {}
    for ea, ca in master.items():
        da = sum(ea)
        for eb, cb in fs:
            if da + sum(eb) > cap:
                break
            k = tuple(x + y for x, y in zip(ea, eb))
            v = out.get(k, 0) + ca * cb
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


def _shift_into(acc, series, shift, cap):
    for e, c in series.terms.items():
        k = tuple(x + y for x, y in zip(e, shift))
        if sum(k) > cap:
            continue
        v = acc.get(k, 0) + c
        if v:
            acc[k] = v
        else:
            acc.pop(k, None)


def _subpartitions(bound, size_cap):
    # partitions fitting under bound, total size at most size_cap
    out = []

    def rec(r, prev, left, prefix):
        out.append(prefix)
        if r >= len(bound):
            return
        top = min(bound[r], prev, left)
        for x in range(top, 0, -1):
            rec(r + 1, x, left - x, prefix + (x,))

    rec(0, size_cap, size_cap, ())
    return out


def vertex_closed_zn(n, legs, cutoff):
    """Full closed formula for the cyclic vertex with legs (lam, mu, nu).

    The inner sum is truncated at eta sizes up to the cutoff and checked
    for stabilization one layer further.  Raises if a negative exponent
    survives in the result.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    lam, mu, nu = (pc.check_partition(tuple(x)) for x in legs)
    names = zn_names(n)
    lamc = pc.conjugate(lam)
    muc = pc.conjugate(mu)
    nuc = pc.conjugate(nu)
    g = [pc.renormalization_exponent(lam, k, n) for k in range(n)]
    gbar = [0] * n
    for k in range(n):
        gbar[(-k) % n] += pc.renormalization_exponent(muc, k, n)
    tl, tm = len(nu), pc.part(nu, 0)
    slack = tl * pc.size(lam) + tm * pc.size(mu) + min(pc.size(lam), pc.size(mu))
    work = cutoff + sum(g) + sum(gbar) + slack

    fixed = (_zero_zn(n, names, work)
             * _hook_factor(nu, n, names, work))
    for k, e in enumerate(_rotation_exponents(nu, n)):
        if e:
            rot = _zero_zn(n, names, work).map_vars(
                names, tuple((i + k) % n for i in range(n)))
            fixed = fixed * rot ** e

    gshift = tuple(-(g[k] + gbar[k]) for k in range(n))
    base_l = _qq_exps(n, -tl)
    base_m = _qq_exps(n, -tm)
    bar_base_l = _bar_exps(base_l, n)

    vals_l = []
    for r in range(work + tl + 2):
        e = tuple(a - b for a, b in
                  zip(_qq_exps(n, r - pc.part(nuc, r)), base_l))
        e = _bar_exps(e, n)
        if 0 <= sum(e) <= work:
            vals_l.append(term(1, e))
    vals_m = []
    for r in range(work + tm + 2):
        e = tuple(a - b for a, b in
                  zip(_qq_exps(n, r - pc.part(nu, r)), base_m))
        if 0 <= sum(e) <= work:
            vals_m.append(term(1, e))

    iota = pc.normalize(tuple(min(pc.part(lamc, r), pc.part(mu, r))
                              for r in range(min(len(lamc), len(mu)))))
    master = {}
    layer = {}
    for eta in _subpartitions(iota, cutoff + 1):
        k = pc.size(eta)
        left = skew_schur_specialized(lamc, eta, vals_l, work, names)
        right = skew_schur_specialized(mu, eta, vals_m, work, names)
        part = left * right
        if not part.terms:
            continue
        shift = list(gshift)
        shift[0] -= k
        la, mb = pc.size(lam) - k, pc.size(mu) - k
        shift = tuple(s + la * u + mb * v
                      for s, u, v in zip(shift, bar_base_l, base_m))
        _shift_into(layer if k == cutoff + 1 else master, part, shift, cutoff)

    final = _dict_mul(master, fixed.terms, cutoff)
    if layer:
        extra = _dict_mul(layer, fixed.terms, cutoff)
        if extra:
            raise RuntimeError("inner sum not stable at size %d" % (cutoff + 1))
    for e in final:
        if any(x < 0 for x in e):
            raise ValueError("negative exponent %r survives specialization" % (e,))
    return Series(names, cutoff, final)


def one_leg_zn_staircase(n, m, cutoff):
    """Branch form of the order-four vertex with a staircase third leg."""
    if n != 4:
        raise ValueError("staircase branch form needs n = 4")
    if m < 0:
        raise ValueError("m must be >= 0")
    names = zn_names(4)
    if m == 0:
        return _zero_zn(4, names, cutoff)
    q = term(1, (1, 1, 1, 1))
    sub, ell = m % 2, (m + 1) // 2
    fam = "Mt1" if sub else "Mt0"
    other = "Mt0" if sub else "Mt1"
    if m % 4 in (0, 3):
        out = _zero_zn(4, names, cutoff)
        out = out * macmahon_family(other, names, cutoff, term_var(4, 2), q, l=ell)
        triple = term(1, (0, 1, 1, 1))
    else:
        out = _zero_zn(4, names, cutoff).map_vars(names, (2, 3, 0, 1))
        out = out * macmahon_family(other, names, cutoff, term_var(4, 0), q, l=ell)
        triple = term(1, (1, 1, 0, 1))
    out = out * macmahon_family(fam, names, cutoff, term_var(4, 3), q, l=ell)
    out = out * macmahon_family(fam, names, cutoff, term_var(4, 1), q, l=ell)
    out = out * macmahon_family(fam, names, cutoff, triple, q, l=ell)
    return out


# ---------------------------------------------------------------------------
# Closed product formulas, product of two involutions
# ---------------------------------------------------------------------------


def _standard_vars():
    return (term_var(4, 1), term_var(4, 2), term_var(4, 3),
            term(1, (1, 1, 1, 1)))


def closed_z2z2_nolegs(cutoff):
    """Zero-leg closed product over the variables q0, qa, qb, qc."""
    names = VARS_Z2Z2
    xa, xb, xc, q = _standard_vars()
    out = macmahon(term_one(4), q, names, cutoff) ** 4
    out = out * macmahon_family("Mt", names, cutoff, term_mul(xa, xb), q)
    out = out * macmahon_family("Mt", names, cutoff, term_mul(xa, xc), q)
    out = out * macmahon_family("Mt", names, cutoff, term_mul(xb, xc), q)
    for x in (xa, xb, xc, term_mul(xa, xb, xc)):
        out = out / macmahon_family("Mt", names, cutoff, term_neg(x), q)
    return out


def pyramid_closed(cutoff):
    """Closed form of the pyramid partition generating function."""
    names = VARS_Z2Z2
    xa, xb, xc, q = _standard_vars()
    out = macmahon(term_one(4), q, names, cutoff) ** 4
    out = out * macmahon_family("Mt", names, cutoff, term_mul(xa, xc), q)
    out = out * macmahon_family("Mt", names, cutoff, term_mul(xb, xc), q)
    for x in (xa, xb, xc, term_mul(xa, xb, xc)):
        out = out / macmahon_family("Mt", names, cutoff, term_neg(x), q)
    return out


def upsilon(vars, m, cutoff, names=VARS_Z2Z2):
    """Staircase-leg correction factor for the zero-leg closed product."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if vars is None:
        vars = _standard_vars()
    xa, xb, xc, q = vars
    sub, ell = m % 2, (m + 1) // 2
    fam = "Mt1" if sub else "Mt0"
    other = "Mt0" if sub else "Mt1"
    out = macmahon_family(fam, names, cutoff, term_mul(xa, xb), q, l=2 * ell)
    out = out / macmahon_family(other, names, cutoff, term_neg(xc), q, l=ell)
    for x in (xa, xb, term_mul(xa, xb, xc)):
        out = out / macmahon_family(fam, names, cutoff, term_neg(x), q, l=ell)
    return out


def closed_z2z2_staircase(m, cutoff):
    return closed_z2z2_nolegs(cutoff) * upsilon(None, m, cutoff)


def phi(vars, m, cutoff, names=VARS_Z2Z2):
    """Bridge factor between the two one-leg vertices at a staircase leg."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if vars is None:
        vars = _standard_vars()
    xa, xb, xc, q = vars
    xabc = term_mul(xa, xb, xc)
    sub, ell = m % 2, (m + 1) // 2
    fam = "Mh1" if sub else "Mh0"
    other = "Mh0" if sub else "Mh1"
    famt = "Mt1" if sub else "Mt0"
    out = Series.one(names, cutoff)
    for x in (xa, xb, xc, xabc):
        out = out * macmahon_family("Mh", names, cutoff, x, q)
    out = out * macmahon_family("Mt", names, cutoff, term_mul(xa, xb), q)
    out = out * macmahon_family(famt, names, cutoff, term_mul(xa, xb), q, l=2 * ell)
    for x in (xa, xb):
        out = out / macmahon_family(fam, names, cutoff, x, q, l=ell)
    out = out / macmahon_family(other, names, cutoff, xc, q, l=ell)
    out = out / macmahon_family(fam, names, cutoff, xabc, q, l=ell)
    return out


def corollary_rpc_closed(m, cutoff):
    """Closed form for the restricted pyramid series at a staircase leg.

    m = 0 degenerates to the plain pyramid generating function.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    names = VARS_Z2Z2
    base = pyramid_closed(cutoff)
    if m == 0:
        return base
    xa, xb, xc, q = _standard_vars()
    x0 = term_var(4, 0)
    sub, ell = m % 2, (m + 1) // 2
    fam = "Mt1" if sub else "Mt0"
    other = "Mt0" if sub else "Mt1"
    if m % 4 in (0, 3):
        out = base
        xlast = xc
        triple = term_mul(xa, xb, xc)
    else:
        out = base.map_vars(names, (3, 1, 2, 0))
        xlast = x0
        triple = term_mul(xa, xb, x0)
    out = out / macmahon_family(other, names, cutoff, term_neg(xlast), q, l=ell)
    for x in (xa, xb, triple):
        out = out / macmahon_family(fam, names, cutoff, term_neg(x), q, l=ell)
    return out
