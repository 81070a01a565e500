"""Restricted pyramid configurations.

For a partition v (the leg) and an integer shift l >= 0, every slice k of
a pyramid gets a rectangular admissible region with corner offsets built
from four edge-sequence counting functions of v.  Restricting a pyramid
keeps the bricks inside the regions and re-bases each slice at its
corner; the resulting slice families are exactly the finitely-supported
families satisfying a directed interlacing condition, and realize()
constructs an explicit preimage pyramid for any such family.

Everything is stated per frame (diagonal or antidiagonal); corner offsets
are identical in the two frames, the brick content is not.
"""

from __future__ import annotations

from . import partition_core as pc
from .pyramid import (
    ANTI, DIAG, VARS_Z2Z2, COLOR_SLOT, PyramidPartition, address_to_position,
    position_to_address,
)
from .qseries import Series


class EpsilonTable:
    """The four cumulative edge counters of a leg partition.

    eps(1, x) counts +1 edge values of the conjugate at even spots 0..2x,
    eps(2, x) the same at odd spots 1..2x+1; eps(3, x) counts -1 values at
    even spots -2..-2x, eps(4, x) at odd spots -1..-2x+1.  All four are
    non-decreasing, step by 0/1 and stabilize; rho1/rho2 are the limits
    paired for the row/column corner offsets.
    """

    def __init__(self, v):
        self.v = pc.check_partition(tuple(v))
        self.conj = pc.conjugate(self.v)
        self.bound = pc.edge_bound(self.conj) + 2
        e = lambda t: pc.edge_value(self.conj, t)
        self._e1 = self._accumulate([(e(2 * t) + 1) // 2
                                     for t in range(self.bound)])
        self._e2 = self._accumulate([(e(2 * t + 1) + 1) // 2
                                     for t in range(self.bound)])
        self._e3 = self._accumulate([(1 - e(-2 * t)) // 2
                                     for t in range(1, self.bound + 1)])
        self._e4 = self._accumulate([(1 - e(-2 * t + 1)) // 2
                                     for t in range(1, self.bound + 1)])
        self.rho1 = max(self._e2[-1], self._e4[-1])
        self.rho2 = max(self._e1[-1], self._e3[-1])

    @staticmethod
    def _accumulate(steps):
        out = []
        run = 0
        for s in steps:
            run += s
            out.append(run)
        return out

    def eps(self, which, x):
        if which in (1, 2):
            if x < 0:
                return 0
            table = self._e1 if which == 1 else self._e2
            return table[min(x, len(table) - 1)]
        if which in (3, 4):
            if x < 1:
                return 0
            table = self._e3 if which == 3 else self._e4
            return table[min(x - 1, len(table) - 1)]
        raise ValueError("which must be 1..4")

    def eps_limit(self, which):
        return self.eps(which, self.bound)

    def eps_hat(self, which, x):
        rho = self.rho2 if which in (1, 3) else self.rho1
        return rho - self.eps(which, x)


def epsilon_table(v):
    return EpsilonTable(v)


def region(v, l, k, table=None):
    """Admissible corner (row, column) of slice k; same in both frames."""
    t = table if table is not None else EpsilonTable(v)
    if l < 0:
        raise ValueError("shift l must be >= 0")
    if k % 2 == 0:
        h = k // 2
        if h <= 0:
            return (l + t.rho1 - t.eps(2, -h - 1), l + t.rho2 - t.eps(1, -h - 1))
        return (l + t.rho1 - t.eps(4, h), l + t.rho2 - t.eps(3, h))
    h = (k + 1) // 2
    if h <= 0:
        return (l + t.rho1 - t.eps(2, -h - 1), l + t.rho2 - t.eps(1, -h))
    return (l + t.rho1 - t.eps(4, h), l + t.rho2 - t.eps(3, h - 1))


def mho(v, k, table=None):
    """Corner coordinate sum of slice k at shift 0 (its parity drives the
    checkerboard weight swap)."""
    ci, cj = region(v, 0, k, table)
    return ci + cj


def restrict(p, v, l, frame):
    """Slice family of the bricks of p inside the regions, re-based at the
    corners: {k: partition}, empty slices dropped."""
    slices = p.slices if frame == DIAG else p.antidiagonal_slices()
    t = EpsilonTable(v)
    out = {}
    for k, sigma in slices.items():
        ci, cj = region(v, l, k, t)
        eta = tuple(x for x in
                    (max(0, sigma[r] - cj) for r in range(ci, len(sigma)))
                    if x)
        if eta:
            pc.check_partition(eta)
            out[k] = eta
    return out


def restrict_positions(p, v, l, frame):
    """The same restriction as a set of physical brick positions."""
    t = EpsilonTable(v)
    out = set()
    slices = p.slices if frame == DIAG else p.antidiagonal_slices()
    for k, sigma in slices.items():
        ci, cj = region(v, l, k, t)
        for i, row in enumerate(sigma):
            for j in range(row):
                if i >= ci and j >= cj:
                    out.add(address_to_position(frame, k, i, j))
    return frozenset(out)


def check_type_interlacing(slices, v, kind):
    """Directed interlacing of a finitely-supported slice family.

    kind="first": eta_k and eta_{k-1} interlace unprimed, direction given
    by the conjugate edge value at -k.  kind="second": same directions but
    the relation is primed exactly at even k.  Empty families pass.
    """
    if kind not in ("first", "second"):
        raise ValueError("kind must be 'first' or 'second'")
    conj = pc.conjugate(v)
    support = [k for k, s in slices.items() if s]
    if not support:
        return True
    lo, hi = min(support), max(support)
    for s in range(lo, hi + 2):
        a = tuple(slices.get(s, ()))
        b = tuple(slices.get(s - 1, ()))
        tau = pc.edge_value(conj, -s)
        primed = (kind == "second" and s % 2 == 0)
        # tau=+1: eta_s <= eta_{s-1}; tau=-1: eta_s >= eta_{s-1}
        ok = pc.interlaces(b, a, primed) if tau == 1 else pc.interlaces(a, b, primed)
        if not ok:
            return False
    return True


# ---------------------------------------------------------------------------
# realize: canonical pyramid restricting to a given family
# ---------------------------------------------------------------------------


def realize(slices, v, l, frame):
    """A pyramid whose restriction at (v, l, frame) is the given family.

    The family must satisfy the second-type interlacing for v.  The
    construction pads each admissible region with a staircase of full
    rows so the chain conditions hold across region corners.
    """
    family = {int(k): pc.check_partition(tuple(s))
              for k, s in slices.items() if tuple(s)}
    if not check_type_interlacing(family, v, "second"):
        raise ValueError("family does not satisfy the interlacing condition")
    t = EpsilonTable(v)
    support = max((abs(k) for k in family), default=0)
    hbar = max(support + 1, pc.edge_bound(t.conj), 2)
    if hbar % 2:
        hbar += 1
    half = hbar // 2
    theta = max((len(s) for s in family.values()), default=0)
    xi = max((s[0] for s in family.values()), default=0)

    def eh(which, x):
        return t.eps_hat(which, x) + l

    def eta(k):
        return family.get(k, ())

    def block(nrows, length):
        return [length] * max(0, nrows)

    built = {}
    for k in range(-half, 1):                                   # case (i)
        rows = block(eh(2, -k - 1), eh(1, -k - 1) + xi)
        rows += [eh(1, -k - 1) + pc.part(eta(2 * k), r) for r in range(theta)]
        built[2 * k] = rows
        rows = block(eh(2, -k - 1), eh(1, -k) + xi)
        rows += [eh(1, -k) + pc.part(eta(2 * k - 1), r) for r in range(theta)]
        built[2 * k - 1] = rows
    e1s, e2s = eh(1, half - 1), eh(2, half - 1)
    for k in range(-half - xi, -half):                          # case (ii)
        built[2 * k] = block(e2s, e1s + xi + k + half + 1) + block(theta, e1s)
        built[2 * k - 1] = block(e2s, e1s + xi + k + half) + block(theta, e1s)
    for k in range(-half - xi - e1s, -half - xi):               # case (iii)
        built[2 * k] = block(e2s + theta, e1s + k + half + xi + 1)
        built[2 * k - 1] = block(e2s + theta, e1s + k + half + xi)
    for k in range(1, half + 1):                                # case (v)
        rows = block(eh(4, k), eh(3, k) + xi)
        rows += [eh(3, k) + pc.part(eta(2 * k), r) for r in range(theta)]
        built[2 * k] = rows
        rows = block(eh(4, k), eh(3, k - 1) + xi)
        rows += [eh(3, k - 1) + pc.part(eta(2 * k - 1), r) for r in range(theta)]
        built[2 * k - 1] = rows
    e3s, e4s = eh(3, half), eh(4, half)
    for k in range(half + 1, half + theta + 1):                 # case (vi)
        rows = block(e4s, e3s + xi) + block(theta - k + half, e3s)
        built[2 * k] = rows
        built[2 * k - 1] = list(rows)
    for k in range(half + theta + 1, half + theta + e4s + 1):   # case (vii)
        rows = block(e4s - k + half + theta, e3s + xi)
        built[2 * k] = rows
        built[2 * k - 1] = list(rows)

    final = {}
    for k, rows in built.items():
        trimmed = tuple(x for x in rows if x > 0)
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise AssertionError("constructed slice %d not a partition: %r"
                                 % (k, rows))
        if trimmed:
            final[k] = trimmed

    if frame == DIAG:
        p = PyramidPartition(final)
    elif frame == ANTI:
        positions = []
        for k, sigma in final.items():
            for i, row in enumerate(sigma):
                for j in range(row):
                    positions.append(address_to_position(ANTI, k, i, j))
        p = PyramidPartition.from_bricks(positions)
    else:
        raise ValueError("unknown frame %r" % frame)
    p.validate()
    return p


# ---------------------------------------------------------------------------
# interlacing families and generating functions
# ---------------------------------------------------------------------------


def interlacing_families(v, budget):
    """All finitely-supported second-type families with total size <= budget."""
    conj = pc.conjugate(v)
    b = pc.edge_bound(conj)
    left = -(budget + b + 2)
    right = budget + b + 2
    out = []

    def rec(s, prev, used, current):
        if s > right:
            if not prev:
                out.append(dict(current))
            return
        tau = pc.edge_value(conj, -s)
        primed = (s % 2 == 0)
        if tau == 1:
            options = pc.partners_below(prev, primed)
        else:
            options = pc.partners_above(prev, budget - used, primed)
        for opt in options:
            cost = sum(opt)
            if used + cost > budget:
                continue
            if opt:
                # in the constant-direction zone the chain cannot shrink
                # before reaching slice -b, so it must keep paying
                steps_left = max(0, -b - s)
                if used + cost + steps_left * cost > budget:
                    continue
                current[s] = opt
                rec(s + 1, opt, used + cost, current)
                del current[s]
            else:
                rec(s + 1, (), used, current)

    rec(left, (), 0, {})
    return out


_EVEN_PAIR = ("0", "c")     # parity 0 color, parity 1 color on even slices
_ODD_POS_PAIR = ("b", "a")
_ODD_NEG_PAIR = ("a", "b")


def slice_color_counts(k, eta, frame, corner_parity):
    """Brick counts per color for one restricted slice, VARS_Z2Z2 slots."""
    counts = [0, 0, 0, 0]
    total = sum(eta)
    if frame == DIAG:
        letter = {0: "0", 1: "b", 2: "c", 3: "a"}[k % 4]
        counts[COLOR_SLOT[letter]] = total
        return tuple(counts)
    if k % 2 == 0:
        pair = _EVEN_PAIR
    elif k > 0:
        pair = _ODD_POS_PAIR
    else:
        pair = _ODD_NEG_PAIR
    # cells (i, j) of eta with i + j + corner_parity even
    even_cells = sum((row + 1 - ((i + corner_parity) % 2)) // 2
                     for i, row in enumerate(eta))
    counts[COLOR_SLOT[pair[0]]] = even_cells
    counts[COLOR_SLOT[pair[1]]] = total - even_cells
    return tuple(counts)


def generating_function(v, l, frame, cutoff, names=VARS_Z2Z2):
    """Color-graded generating function of restricted configurations."""
    if frame not in (DIAG, ANTI):
        raise ValueError("unknown frame %r" % frame)
    t = EpsilonTable(v)
    s = Series(names, cutoff)
    for family in interlacing_families(v, cutoff):
        exps = [0, 0, 0, 0]
        for k, eta in family.items():
            parity = mho(v, k, t) % 2
            for slot, c in enumerate(slice_color_counts(k, eta, frame, parity)):
                exps[slot] += c
        s._add(tuple(exps), 1)
    return s


# ---------------------------------------------------------------------------
# uniqueness of the restriction across frames
# ---------------------------------------------------------------------------


def region_complement_equal(v, l, K):
    """Compare the union of region complements across frames inside the
    window (|slice| <= K, brick coordinates <= K), matching bricks through
    their physical positions."""
    t = EpsilonTable(v)
    corners = {k: region(v, l, k, t) for k in range(-K, K + 1)}
    for k in range(-K, K + 1):
        ci, cj = corners[k]
        for i in range(0, K + 1):
            for j in range(0, K + 1):
                pos = address_to_position(ANTI, k, i, j)
                dk, di, dj = position_to_address(DIAG, *pos)
                if abs(dk) > K or di > K or dj > K:
                    continue
                in_anti_c = not (i >= ci and j >= cj)
                dci, dcj = corners[dk]
                in_diag_c = not (di >= dci and dj >= dcj)
                if in_anti_c != in_diag_c:
                    return False
    return True


def uniqueness_scan(max_leg_size, l_values, K):
    """{(leg, l): complements-equal} over all legs up to the given size."""
    out = {}
    for v in pc.partitions_up_to(max_leg_size):
        for l in l_values:
            out[(v, l)] = region_complement_equal(v, l, K)
    return out
