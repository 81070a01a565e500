"""Exact multivariate power series truncated by total degree.

Coefficients are Python ints, exponents are non-negative.  Laurent-style
intermediate data (signed monomials with possibly negative exponents) is
carried by plain Term tuples and must be combined into something
non-negative before it can enter a Series; building a factor with a
negative exponent raises.

Also holds the MacMahon-style product factory used by every closed
formula in the package.
"""

from __future__ import annotations

import json

# ---------------------------------------------------------------------------
# Terms: signed monomials (coef, exps), exponents may be negative
# ---------------------------------------------------------------------------


def term(coef, exps):
    return (int(coef), tuple(int(e) for e in exps))


def term_one(nvars):
    return (1, (0,) * nvars)


def term_var(nvars, idx, coef=1):
    e = [0] * nvars
    e[idx] = 1
    return (coef, tuple(e))


def term_mul(*ts):
    coef = 1
    exps = None
    for c, e in ts:
        coef *= c
        exps = e if exps is None else tuple(a + b for a, b in zip(exps, e))
    return (coef, exps)


def term_pow(t, k):
    c, e = t
    if k < 0 and c not in (1, -1):
        raise ValueError("cannot invert coefficient %d" % c)
    coef = c ** k if k >= 0 else c ** (-k)
    return (coef, tuple(x * k for x in e))


def term_neg(t):
    return (-t[0], t[1])


def term_deg(t):
    return sum(t[1])


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------


class Series:
    """Truncated exact power series: dict of exponent tuple -> int."""

    __slots__ = ("names", "cutoff", "terms")

    def __init__(self, names, cutoff, terms=None):
        self.names = tuple(names)
        self.cutoff = int(cutoff)
        self.terms = {}
        if terms:
            for e, c in terms.items():
                self._add(e, c)

    def _add(self, exps, coef):
        if coef == 0:
            return
        if len(exps) != len(self.names):
            raise ValueError("arity mismatch: %r with vars %r" % (exps, self.names))
        if any(x < 0 for x in exps):
            raise ValueError("negative exponent %r; combine Laurent factors first" % (exps,))
        if sum(exps) > self.cutoff:
            return
        new = self.terms.get(exps, 0) + coef
        if new:
            self.terms[exps] = new
        else:
            self.terms.pop(exps, None)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, names, cutoff):
        return cls(names, cutoff)

    @classmethod
    def one(cls, names, cutoff):
        s = cls(names, cutoff)
        s._add((0,) * len(s.names), 1)
        return s

    @classmethod
    def from_term(cls, names, cutoff, t):
        s = cls(names, cutoff)
        s._add(t[1], t[0])
        return s

    @classmethod
    def one_plus(cls, names, cutoff, t):
        """The factor 1 + t for a signed monomial t of positive degree."""
        if term_deg(t) == 0 and t[0] != 0:
            raise ValueError("degree-0 factor term %r" % (t,))
        s = cls.one(names, cutoff)
        s._add(t[1], t[0])
        return s

    # -- basics -------------------------------------------------------------

    def copy(self):
        s = Series(self.names, self.cutoff)
        s.terms = dict(self.terms)
        return s

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def constant(self):
        return self.terms.get((0,) * len(self.names), 0)

    def is_one(self):
        return self.terms == {(0,) * len(self.names): 1}

    def __eq__(self, other):
        return (isinstance(other, Series) and self.names == other.names
                and self.cutoff == other.cutoff and self.terms == other.terms)

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        raise TypeError("Series is mutable, do not hash")

    def __repr__(self):
        items = sorted(self.terms.items())[:6]
        body = ", ".join("%r: %d" % (e, c) for e, c in items)
        more = "" if len(self.terms) <= 6 else ", ... (%d terms)" % len(self.terms)
        return "Series(%s, D=%d, {%s%s})" % (",".join(self.names), self.cutoff, body, more)

    # -- arithmetic ---------------------------------------------------------

    def _check_compat(self, other):
        if self.names != other.names or self.cutoff != other.cutoff:
            raise ValueError("incompatible series: %r/%d vs %r/%d"
                             % (self.names, self.cutoff, other.names, other.cutoff))

    def __add__(self, other):
        if isinstance(other, int):
            other = Series.one(self.names, self.cutoff).scaled(other)
        self._check_compat(other)
        s = self.copy()
        for e, c in other.terms.items():
            s._add(e, c)
        return s

    def __sub__(self, other):
        if isinstance(other, int):
            other = Series.one(self.names, self.cutoff).scaled(other)
        self._check_compat(other)
        s = self.copy()
        for e, c in other.terms.items():
            s._add(e, -c)
        return s

    def scaled(self, k):
        s = Series(self.names, self.cutoff)
        if k:
            s.terms = {e: c * k for e, c in self.terms.items()}
        return s

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scaled(other)
        self._check_compat(other)
        out = Series(self.names, self.cutoff)
        D = self.cutoff
        # iterate over the smaller operand outside
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        bt = sorted(b.items(), key=lambda item: sum(item[0]))
        for ea, ca in a.items():
            da = sum(ea)
            for eb, cb in bt:
                if da + sum(eb) > D:
                    break
                out._add(tuple(x + y for x, y in zip(ea, eb)), ca * cb)
        return out

    def mul_term(self, t):
        """Multiply by a signed monomial (may have negative exponents as
        long as every surviving product exponent is non-negative)."""
        c0, e0 = t
        out = Series(self.names, self.cutoff)
        for e, c in self.terms.items():
            out._add(tuple(x + y for x, y in zip(e, e0)), c * c0)
        return out

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("integer powers only")
        if k < 0:
            return self.invert() ** (-k)
        out = Series.one(self.names, self.cutoff)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def invert(self):
        """Multiplicative inverse; the constant term must be +1 or -1."""
        c0 = self.constant()
        if c0 not in (1, -1):
            raise ValueError("series not invertible over the integers "
                             "(constant term %d)" % c0)
        # self = c0 * (1 + H) with H of positive valuation;
        # inverse = c0 * sum (-H)^k
        h = self.scaled(c0) - 1
        out = Series.one(self.names, self.cutoff)
        powh = Series.one(self.names, self.cutoff)
        sign = -1
        for _ in range(self.cutoff):
            powh = powh * h
            if not powh.terms:
                break
            out = out + powh.scaled(sign)
            sign = -sign
        return out.scaled(c0)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.invert()
        raise TypeError("divide by Series only")

    def truncate(self, new_cutoff):
        if new_cutoff > self.cutoff:
            raise ValueError("cannot raise cutoff from %d to %d"
                             % (self.cutoff, new_cutoff))
        s = Series(self.names, new_cutoff)
        for e, c in self.terms.items():
            s._add(e, c)
        return s

    def map_vars(self, new_names, assignment):
        """Reinterpret each old variable as one new variable.

        assignment[i] = index of the new variable that old variable i
        becomes.  Distinct old variables may map to the same new one.
        """
        if len(assignment) != len(self.names):
            raise ValueError("assignment arity mismatch")
        out = Series(new_names, self.cutoff)
        for e, c in self.terms.items():
            ne = [0] * len(new_names)
            for i, x in enumerate(e):
                ne[assignment[i]] += x
            out._add(tuple(ne), c)
        return out

    # -- serialization ------------------------------------------------------

    def sorted_items(self):
        return sorted(self.terms.items())

    def to_json(self):
        return json.dumps({
            "cutoff": self.cutoff,
            "vars": list(self.names),
            "terms": [{"exp": list(e), "coef": str(c)}
                      for e, c in self.sorted_items()],
        }, separators=(",", ":"))

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        s = cls(tuple(data["vars"]), data["cutoff"])
        for item in data["terms"]:
            s._add(tuple(item["exp"]), int(item["coef"]))
        return s


# ---------------------------------------------------------------------------
# q-Pochhammer and the MacMahon family
# ---------------------------------------------------------------------------


def pochhammer(a, q, names, cutoff):
    """(a; q)_infinity = prod_{k>=0} (1 - a q^k) as a Series.

    a and q are Terms; every factor must come out with non-negative
    exponents and positive degree.
    """
    out = Series.one(names, cutoff)
    k = 0
    while True:
        f = term_mul(a, term_pow(q, k))
        if f[0] == 0:
            break
        if term_deg(f) > cutoff:
            break
        if term_deg(f) <= 0:
            raise ValueError("pochhammer factor of degree %d" % term_deg(f))
        out = out * Series.one_plus(names, cutoff, term_neg(f))
        k += 1
    return out


def macmahon(x, q, names, cutoff):
    """M(x, q) = prod_{n>=1} (1 - x q^n)^(-n) as a Series.

    x may be degree 0 (e.g. the constant 1); each combined factor x*q^n
    must have positive degree and non-negative exponents.
    """
    out = Series.one(names, cutoff)
    n = 1
    while True:
        f = term_mul(x, term_pow(q, n))
        if f[0] == 0:
            break
        if term_deg(f) > cutoff:
            break
        if term_deg(f) <= 0:
            raise ValueError("MacMahon factor of degree %d at n=%d" % (term_deg(f), n))
        out = out * Series.one_plus(names, cutoff, term_neg(f)).invert() ** n
        n += 1
    return out


def _mm_sym(x, q, names, cutoff):
    # M(x, q) * M(x^-1, q)
    return (macmahon(x, q, names, cutoff)
            * macmahon(term_pow(x, -1), q, names, cutoff))


def _mm_hat(x, q, names, cutoff):
    return (_mm_sym(x, q, names, cutoff)
            * _mm_sym(term_neg(x), q, names, cutoff)).invert()


def _mm_sym0(x, q, l, names, cutoff):
    num = macmahon(term_mul(x, term_pow(q, l)), q, names, cutoff)
    den = macmahon(x, q, names, cutoff)
    poch = pochhammer(term_mul(q, term_pow(x, -1)), q, names, cutoff)
    return num * (den * poch ** l).invert()


def _mm_sym1(x, q, l, names, cutoff):
    xi = term_pow(x, -1)
    num = macmahon(term_mul(xi, term_pow(q, l)), q, names, cutoff)
    den = macmahon(xi, q, names, cutoff)
    poch = pochhammer(x, q, names, cutoff)
    return num * (den * poch ** l).invert()


def _mm_pair(x, q, names, cutoff):
    return macmahon(x, q, names, cutoff) * macmahon(term_neg(x), q, names, cutoff)


def _mm_ratio(x, y, q, names, cutoff):
    return (macmahon(x, q, names, cutoff)
            / macmahon(term_mul(x, y), q, names, cutoff))


def _mm_shift(x, q, l, names, cutoff):
    num = macmahon(term_mul(x, term_pow(q, l)), q, names, cutoff)
    den = macmahon(x, q, names, cutoff)
    poch = pochhammer(x, q, names, cutoff)
    return num * (den * poch ** l).invert()


_FAMILY_ALIASES = {
    "M̃": "Mt", "M̂": "Mh",
    "M̃0": "Mt0", "M̃1": "Mt1",
    "M̂0": "Mh0", "M̂1": "Mh1",
    "M̂1xy": "Mh1xy", "M̂2": "Mh2",
    # composed forms (tilde/hat as combining characters)
    "M~": "Mt", "M^": "Mh", "M~0": "Mt0", "M~1": "Mt1",
    "M^0": "Mh0", "M^1": "Mh1", "M^1xy": "Mh1xy", "M^2": "Mh2",
}


def macmahon_family(name, names, cutoff, x, q, l=None, y=None):
    """Dispatch over the named MacMahon-style products.

    Names (ASCII): Mt, Mh, Mt0, Mt1, Mh0, Mh1, M0, M1, M2, Mh1xy, Mh2.
    Unicode tilde/hat spellings are accepted as aliases.  x, q, y are
    Terms; l is the integer shift where applicable.
    """
    key = _FAMILY_ALIASES.get(name, name)
    need_l = {"Mt0", "Mt1", "Mh0", "Mh1", "M2", "Mh2"}
    need_y = {"M1", "Mh1xy"}
    if key in need_l and l is None:
        raise ValueError("family %s needs the shift l" % name)
    if key in need_y and y is None:
        raise ValueError("family %s needs the second monomial y" % name)
    if key == "Mt":
        return _mm_sym(x, q, names, cutoff)
    if key == "Mh":
        return _mm_hat(x, q, names, cutoff)
    if key == "Mt0":
        return _mm_sym0(x, q, l, names, cutoff)
    if key == "Mt1":
        return _mm_sym1(x, q, l, names, cutoff)
    if key == "Mh0":
        return (_mm_sym0(x, q, l, names, cutoff)
                * _mm_sym0(term_neg(x), q, l, names, cutoff))
    if key == "Mh1":
        return (_mm_sym1(x, q, l, names, cutoff)
                * _mm_sym1(term_neg(x), q, l, names, cutoff))
    if key == "M0":
        return _mm_pair(x, q, names, cutoff)
    if key == "M1":
        return _mm_ratio(x, y, q, names, cutoff)
    if key == "M2":
        return _mm_shift(x, q, l, names, cutoff)
    if key == "Mh1xy":
        return (_mm_ratio(x, y, q, names, cutoff)
                * _mm_ratio(term_neg(x), y, q, names, cutoff))
    if key == "Mh2":
        return (_mm_shift(x, q, l, names, cutoff)
                * _mm_shift(term_neg(x), q, l, names, cutoff))
    raise ValueError("unknown MacMahon family name %r" % name)
