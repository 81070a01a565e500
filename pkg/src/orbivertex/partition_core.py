"""Integer partitions: interlacing, edge sequences, diagonals, hooks.

Partitions are plain tuples of weakly decreasing positive ints, trailing
zeros trimmed, so they hash and compare for free.  The empty partition
is ().

Cell convention used across the package: (i, j) is a cell of p iff
j < conjugate(p)[i], i.e. i indexes columns and j indexes rows.  Both
indices start at 0.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def normalize(parts):
    """Sort descending, drop zeros, return a tuple."""
    t = tuple(sorted((x for x in parts if x != 0), reverse=True))
    for x in t:
        if x < 0:
            raise ValueError("negative part: %r" % (parts,))
    return t


def check_partition(p):
    """Raise if p is not a valid partition tuple."""
    if not isinstance(p, tuple):
        raise TypeError("partition must be a tuple, got %r" % (p,))
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError("parts not weakly decreasing: %r" % (p,))
    if p and p[-1] <= 0:
        raise ValueError("parts must be positive (trim zeros): %r" % (p,))
    return p


def parse_partition(text):
    """Parse 'a,b,c' (weakly decreasing positive ints) into a tuple.

    The empty string denotes the empty partition.  Raises ValueError on
    anything else, including increasing or non-positive parts.
    """
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError("cannot parse partition from %r" % text)
    for x in parts:
        if x <= 0:
            raise ValueError("parts must be positive: %r" % text)
    return check_partition(parts)


def format_partition(p):
    return ",".join(str(x) for x in p)


def size(p):
    return sum(p)


def part(p, i):
    """i-th part, 0 beyond the end."""
    return p[i] if 0 <= i < len(p) else 0


def conjugate(p):
    """Transpose of the Young diagram."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def cells(p):
    """All cells (i, j): i = column, j = row, j-th row has p[j] cells."""
    for j, row in enumerate(p):
        for i in range(row):
            yield (i, j)


def contains_cell(p, i, j):
    return 0 <= j < len(p) and 0 <= i < p[j]


def interlaces(lam, mu, primed=False):
    """True iff lam >= mu in the interlacing order.

    Unprimed: lam_0 >= mu_0 >= lam_1 >= mu_1 >= ...  Primed is the same
    after conjugating both, equivalently lam[i] - mu[i] in {0, 1} per row.
    """
    if primed:
        for i in range(max(len(lam), len(mu))):
            if part(lam, i) - part(mu, i) not in (0, 1):
                return False
        return True
    for i in range(max(len(lam), len(mu))):
        if not (part(lam, i) >= part(mu, i) >= part(lam, i + 1)):
            return False
    return True


def interlaces_tau(a, b, tau, primed=False):
    """Directed interlacing: tau=+1 means a <= b, tau=-1 means a >= b."""
    if tau == 1:
        return interlaces(b, a, primed)
    if tau == -1:
        return interlaces(a, b, primed)
    raise ValueError("tau must be +1 or -1")


def partners_below(lam, primed=False):
    """All mu with lam >= mu in the interlacing order (finitely many)."""
    if primed:
        return [conjugate(m) for m in partners_below(conjugate(lam))]
    out = []
    ranges = [range(part(lam, i + 1), part(lam, i) + 1)
              for i in range(len(lam))]
    for choice in itertools.product(*ranges):
        out.append(normalize(choice))
    return out


def partners_above(lam, max_size, primed=False):
    """All mu with mu >= lam in the interlacing order and |mu| <= max_size."""
    if primed:
        return [conjugate(m) for m in partners_above(conjugate(lam), max_size)]
    out = []
    budget = max_size - sum(lam)
    if budget < 0:
        return out
    # mu has at most one more nonzero row than lam, so extend lam by a 0
    lam_ext = lam + (0,)

    def rec(i, prefix, spent):
        if i == len(lam_ext):
            out.append(tuple(x for x in prefix if x))
            return
        lo = lam_ext[i]
        # mu_i is capped by lam_{i-1} (interlacing), unbounded for i = 0
        hi = lam_ext[i - 1] if i > 0 else lo + (budget - spent)
        hi = min(hi, lo + (budget - spent))
        for v in range(lo, hi + 1):
            rec(i + 1, prefix + (v,), spent + (v - lo))

    rec(0, (), 0)
    return out


# ---------------------------------------------------------------------------
# Edge sequence (Maya coding)
# ---------------------------------------------------------------------------

def edge_set_members(p):
    """The finite descending list of edge-set members > -len(p)-1.

    The full edge set is this list together with every integer
    <= -len(p)-1.
    """
    return [p[j] - j - 1 for j in range(len(p))]


def in_edge_set(p, t):
    if t <= -len(p) - 1:
        return True
    return t in set(edge_set_members(p))


def edge_value(p, t):
    """+1 if t lies in the edge set of p, else -1.

    The edge set of p is {p_j - j - 1 : j >= 0}; far negative t give +1,
    far positive t give -1.
    """
    return 1 if in_edge_set(p, t) else -1


def edge_bound(p):
    """Some b >= 1 with edge_value(p, t) = -1 for t >= b and +1 for t <= -b."""
    return max(part(p, 0), len(p) + 1)


def partition_from_edge_members(members, low):
    """Rebuild a partition from its edge-set members >= low.

    `members` must be exactly the edge-set elements >= low, and every
    integer below `low` must belong to the edge set (solid tail).
    """
    s = sorted(members, reverse=True)
    parts = []
    for j, sj in enumerate(s):
        v = sj + j + 1
        if v <= 0:
            break
        parts.append(v)
    else:
        # past the explicit members the edge value is constant +1,
        # contributing low - 1 - (j - len(s)) at index j
        if len(s) + low > 0:
            raise ValueError("edge data violates charge zero")
    return check_partition(tuple(parts))


def _windowed_members(p, low):
    """Edge-set members of p that are >= low (low must be <= -len(p)-1)."""
    m = set(edge_set_members(p))
    m.update(range(low, -len(p)))
    return m


def add_border_strips(p, length):
    """All ways to add a border strip of `length` cells to p.

    Returns (result, sign) pairs, sign = (-1)**(rows spanned + 1).  Adding
    a strip moves one edge-set element t to t + length; the sign counts
    the members strictly between the two positions.
    """
    if length <= 0:
        raise ValueError("strip length must be positive")
    low = -len(p) - length - 2
    members = _windowed_members(p, low)
    out = []
    for t in sorted(members):
        if t + length not in members:
            crossed = sum(1 for s in range(t + 1, t + length) if s in members)
            new = (members - {t}) | {t + length}
            out.append((partition_from_edge_members(new, low), (-1) ** crossed))
    return out


def remove_border_strips(p, length):
    """All ways to remove a border strip of `length` cells from p."""
    if length <= 0:
        raise ValueError("strip length must be positive")
    low = -len(p) - length - 2
    members = _windowed_members(p, low)
    out = []
    for t in sorted(members):
        if t - length >= low and t - length not in members:
            crossed = sum(1 for s in range(t - length + 1, t) if s in members)
            new = (members - {t}) | {t - length}
            out.append((partition_from_edge_members(new, low), (-1) ** crossed))
    return out


# ---------------------------------------------------------------------------
# Diagonals, residues, hooks
# ---------------------------------------------------------------------------

def diagonal_count(p, k):
    """Number of cells on the diagonal i - j = k."""
    return sum(1 for (i, j) in cells(p) if i - j == k)


def residue_count(p, k, n):
    """Number of cells with i - j = k (mod n)."""
    k %= n
    return sum(1 for (i, j) in cells(p) if (i - j) % n == k)


def hook_color_count(p, i, j, n):
    """Residue histogram of the hook of cell (i, j).

    The hook is the cell itself, the cells to its right in the same row,
    and the cells below it in the same column; entry k counts hook cells
    with i' - j' = k (mod n).
    """
    if not contains_cell(p, i, j):
        raise ValueError("cell (%d, %d) not in %r" % (i, j, p))
    pc = conjugate(p)
    hist = [0] * n
    hist[(i - j) % n] += 1
    for ii in range(i + 1, p[j]):          # arm
        hist[(ii - j) % n] += 1
    for jj in range(j + 1, pc[i]):         # leg
        hist[(i - jj) % n] += 1
    return tuple(hist)


def renormalization_exponent(p, k, n):
    """Sum of floor((i + k) / n) over the cells of p (i = column index)."""
    return sum((i + k) // n for (i, j) in cells(p))


def is_staircase(p):
    """True iff p = (m, m-1, ..., 1) for some m >= 0."""
    return p == staircase(len(p))


def staircase(m):
    return tuple(range(m, 0, -1))


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n, descending-lex order, as tuples."""
    if n < 0:
        return ()
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(prefix)
            return
        for x in range(min(maxpart, remaining), 0, -1):
            rec(remaining - x, x, prefix + (x,))

    rec(n, n, ())
    return tuple(out)


def partitions_up_to(n):
    """All partitions of size <= n."""
    out = []
    for m in range(n + 1):
        out.extend(partitions_of(m))
    return out
