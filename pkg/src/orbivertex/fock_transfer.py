"""Transfer-matrix evaluation of half-vertex operator products.

States are row vectors over partition basis elements carrying monomial
exponents; operators act on the left factor by factor.  Transition
operators move between interlacing partitions (plain or primed), weight
operators are diagonal and multiply in one variable per cell of the
current partition, and the even-mode exponential operators move border
strips of even length with signs.

vertex_by_transfer() assembles the weighted products whose brackets give
the zero- and one-leg orbifold series and the two restricted pyramid
series, always evaluating the product twice on nested windows and
insisting the truncations agree.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from . import partition_core as pc
from .pyramid import COLOR_SLOT, VARS_Z2Z2
from .qseries import Series
from .rpc import mho


def empty_state(nvars):
    return {((), (0,) * nvars): 1}


def basis_state(lam, nvars):
    return {(pc.check_partition(tuple(lam)), (0,) * nvars): 1}


def checkerboard_counts(lam):
    """(cells with row = col mod 2, the other cells)."""
    ev = od = 0
    for i, j in pc.cells(lam):
        if (i + j) % 2 == 0:
            ev += 1
        else:
            od += 1
    return ev, od


def normalize_state(state):
    out = {}
    for key, coef in state.items():
        if isinstance(coef, Fraction) and coef.denominator == 1:
            coef = int(coef)
        if coef:
            out[key] = coef
    return out


def weight_apply(state, exps_fn, cutoff):
    """Diagonal step: multiply each entry by its own cell-colored monomial."""
    out = {}
    for (lam, exps), coef in state.items():
        w = exps_fn(lam)
        e2 = tuple(a + b for a, b in zip(exps, w))
        if sum(e2) > cutoff:
            continue
        key = (lam, e2)
        out[key] = out.get(key, 0) + coef
    return out


def gamma_apply(state, tau, primed, arg, cutoff):
    """Transition step with argument monomial arg = (coef, exps).

    tau=+1 moves to partitions interlacing above the current one, tau=-1
    below; the argument enters with the absolute size change as exponent.
    """
    ac, ae = arg
    out = {}
    for (lam, exps), coef in state.items():
        deg = sum(exps)
        if tau == 1:
            grow = ((cutoff - deg) // sum(ae)) if sum(ae) else cutoff
            nxts = pc.partners_above(lam, sum(lam) + max(0, grow), primed)
        else:
            nxts = pc.partners_below(lam, primed)
        for mu in nxts:
            diff = abs(sum(mu) - sum(lam))
            e2 = tuple(a + diff * b for a, b in zip(exps, ae))
            if sum(e2) > cutoff:
                continue
            c2 = coef * (ac ** diff)
            key = (mu, e2)
            out[key] = out.get(key, 0) + c2
    return out


def e_apply(state, sign, xsq, cutoff):
    """Even-mode exponential: exp(sum_k arg^(2k)/k * strip move of 2k).

    xsq = (coef, exps) is the square of the argument and must have
    positive degree so the expansion truncates.  sign=+1 adds border
    strips to the bra partition, sign=-1 removes them.
    """
    xc, xe = xsq
    step = sum(xe)
    if step <= 0:
        raise ValueError("squared argument needs positive degree")
    cur = dict(state)
    for k in range(1, cutoff // step + 1):
        nxt = {}
        for (lam, exps), coef in cur.items():
            nxt[(lam, exps)] = nxt.get((lam, exps), 0) + coef
            frontier = [(lam, exps, coef)]
            j = 0
            while frontier:
                j += 1
                fresh = []
                for l2, e2, c2 in frontier:
                    moves = (pc.add_border_strips(l2, 2 * k) if sign > 0
                             else pc.remove_border_strips(l2, 2 * k))
                    for l3, sgn in moves:
                        e3 = tuple(a + k * b for a, b in zip(e2, xe))
                        if sum(e3) > cutoff:
                            continue
                        fresh.append((l3, e3, c2 * sgn))
                factor = Fraction(xc ** (k * j), (k ** j) * factorial(j))
                for l3, e3, c3 in fresh:
                    key = (l3, e3)
                    nxt[key] = nxt.get(key, 0) + c3 * factor
                frontier = fresh
        cur = nxt
    return normalize_state(cur)


def scalar_apply(state, series, cutoff):
    """Multiply a state by a scalar series (same variable slots)."""
    out = {}
    for (lam, exps), coef in state.items():
        for te, tc in series.terms.items():
            e2 = tuple(a + b for a, b in zip(exps, te))
            if sum(e2) > cutoff:
                continue
            key = (lam, e2)
            out[key] = out.get(key, 0) + coef * tc
    return normalize_state(out)


def collect(state, names, cutoff):
    """Empty-partition component of a finished bra vector, as a Series."""
    s = Series(names, cutoff)
    for (lam, exps), coef in state.items():
        if lam:
            continue
        if isinstance(coef, Fraction):
            if coef.denominator != 1:
                raise AssertionError("non-integer bracket coefficient %r" % coef)
            coef = int(coef)
        if coef:
            s._add(exps, coef)
    return s


# ---------------------------------------------------------------------------
# weight selectors
# ---------------------------------------------------------------------------


def pair_weight(h1, h2):
    """Two-color checkerboard weight, h1 on cells with row = col mod 2."""
    a, b = COLOR_SLOT[h1], COLOR_SLOT[h2]

    def wf(lam):
        ev, od = checkerboard_counts(lam)
        e = [0, 0, 0, 0]
        e[a] += ev
        e[b] += od
        return tuple(e)

    return wf


def single_weight(slot, nvars):
    def wf(lam):
        e = [0] * nvars
        e[slot] = sum(lam)
        return tuple(e)

    return wf


_DIAG_SLOT = {0: "0", 1: "b", 2: "c", 3: "a"}


def weight_selector(mode, v, s, n=None):
    """Weight function for slice s under the given product mode."""
    if mode == "standard":
        m = pc.diagonal_count(v, s) % 2
        if s % 2 == 0:
            return pair_weight(*(("0", "c") if m == 0 else ("c", "0")))
        if s > 0:
            return pair_weight(*(("a", "b") if m == 0 else ("b", "a")))
        return pair_weight(*(("a", "b") if m == 1 else ("b", "a")))
    if mode == "rpc_antidiagonal":
        m = mho(v, s) % 2
        if s % 2 == 0:
            return pair_weight(*(("0", "c") if m == 0 else ("c", "0")))
        if s > 0:
            return pair_weight(*(("b", "a") if m == 0 else ("a", "b")))
        return pair_weight(*(("b", "a") if m == 1 else ("a", "b")))
    if mode == "rpc_diagonal":
        return pair_weight(_DIAG_SLOT[s % 4], _DIAG_SLOT[s % 4])
    if mode == "zn":
        return single_weight(s % n, n)
    raise ValueError("unknown mode %r" % mode)


def zn_names(n):
    return tuple("qt%d" % i for i in range(n))


def _bracket(v, cutoff, mode, n, window):
    names = zn_names(n) if mode == "zn" else VARS_Z2Z2
    conj = pc.conjugate(v)
    rpc = mode in ("rpc_antidiagonal", "rpc_diagonal")
    one = (1, (0,) * len(names))
    state = empty_state(len(names))
    for t in range(-window, window + 1):
        wf = weight_selector(mode, v, -t, n)
        state = weight_apply(state, wf, cutoff)
        tau = pc.edge_value(conj, t)
        primed = rpc and t % 2 == 0
        state = gamma_apply(state, tau, primed, one, cutoff)
        state = {k: c for k, c in state.items()
                 if sum(k[1]) + sum(k[0]) <= cutoff}
    return collect(state, names, cutoff)


def vertex_by_transfer(group, leg, cutoff, mode="standard", n=None):
    """Vertex or restricted-pyramid series via operator transfer.

    group "z2z2" with mode standard / rpc_antidiagonal / rpc_diagonal,
    or group "zn" (needs n >= 1).  The leg sits in the third slot; the
    other two legs are empty.  Evaluates on two nested windows and
    raises if the truncations disagree.
    """
    v = pc.check_partition(tuple(leg))
    if group == "zn":
        if not n or n < 1:
            raise ValueError("zn group needs n >= 1")
        mode = "zn"
    elif group == "z2z2":
        if mode == "zn":
            raise ValueError("mode zn is for group zn")
        n = None
    else:
        raise ValueError("unknown group %r" % group)
    t0 = max(len(v), pc.part(v, 0)) + 1
    window = cutoff + t0 + 4
    if window % 2:
        window += 1
    first = _bracket(v, cutoff, mode, n, window)
    second = _bracket(v, cutoff, mode, n, window + 2)
    if first != second:
        raise RuntimeError("transfer window %d not stable for %r" % (window, v))
    return first
