"""Exact coefficient arithmetic.

Two kinds of scalars share one representation: plain rationals (empty
generator set) and reduced fractions of integer-coefficient polynomials
in an ordered subset of the generators q, t, r, a.  Every operation
returns a canonical form, so structural equality is mathematical
equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Mapping, Sequence

from .errors import DivisionByZero, SpecializationCollision, UsageError

GEN_ORDER = ("q", "t", "r", "a")

Terms = dict  # exponent tuple -> nonzero int coefficient

_ONE: Terms = {(): 1}


# ---------------------------------------------------------------------------
# integer-coefficient polynomial dictionaries
# ---------------------------------------------------------------------------

def _dict_const(c: int, k: int) -> Terms:
    return {(0,) * k: c} if c else {}


def _dict_add(a: Terms, b: Terms) -> Terms:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _dict_neg(a: Terms) -> Terms:
    return {e: -c for e, c in a.items()}


def _dict_mul(a: Terms, b: Terms) -> Terms:
    if not a or not b:
        return {}
    if len(b) < len(a):
        a, b = b, a
    out: Terms = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(e, 0) + ca * cb
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def _dict_scale(a: Terms, c: int) -> Terms:
    if c == 0:
        return {}
    return {e: c * x for e, x in a.items()}


def _grlex_key(e: tuple) -> tuple:
    return (sum(e), e)


def _leading_coeff(a: Terms) -> int:
    """Coefficient of the graded-lex leading term (0 for the zero poly)."""
    if not a:
        return 0
    return a[max(a, key=_grlex_key)]


def _content(a: Terms) -> int:
    g = 0
    for c in a.values():
        g = int_gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _dict_divexact_int(a: Terms, c: int) -> Terms:
    return {e: x // c for e, x in a.items()}


def _dict_divexact(a: Terms, b: Terms, k: int) -> Terms:
    """Exact multivariate division a / b; raises if not exact."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if len(b) == 1:
        (eb, cb), = b.items()
        out: Terms = {}
        for ea, ca in a.items():
            e = tuple(x - y for x, y in zip(ea, eb))
            if any(x < 0 for x in e) or ca % cb:
                raise ArithmeticError("inexact polynomial division")
            out[e] = ca // cb
        return out
    rem = dict(a)
    quot: Terms = {}
    eb = max(b, key=_grlex_key)
    cb = b[eb]
    while rem:
        ea = max(rem, key=_grlex_key)
        ca = rem[ea]
        e = tuple(x - y for x, y in zip(ea, eb))
        if any(x < 0 for x in e) or ca % cb:
            raise ArithmeticError("inexact polynomial division")
        q = ca // cb
        quot[e] = q
        for eb2, cb2 in b.items():
            et = tuple(x + y for x, y in zip(e, eb2))
            s = rem.get(et, 0) - q * cb2
            if s:
                rem[et] = s
            else:
                rem.pop(et, None)
    return quot


# --- multivariate gcd: recursive content / primitive part over a primitive
# --- pseudo-remainder sequence in the last generator ------------------------

def _split_main(a: Terms) -> dict:
    """View a k-generator poly as univariate in the last generator."""
    out: dict[int, Terms] = {}
    for e, c in a.items():
        out.setdefault(e[-1], {})[e[:-1]] = c
    return out


def _join_main(uni: Mapping[int, Terms]) -> Terms:
    out: Terms = {}
    for d, sub in uni.items():
        for e, c in sub.items():
            out[e + (d,)] = c
    return out


def _poly_content(a: Terms, k: int) -> Terms:
    """gcd of the coefficients of a, viewed in the last generator."""
    uni = _split_main(a)
    unit = {(0,) * (k - 1): 1}
    g: Terms = {}
    for sub in uni.values():
        g = _poly_gcd(g, sub, k - 1)
        if g == unit:
            break
    return g


def _uni_gcd_int(a: dict, b: dict) -> dict:
    """Primitive-PRS gcd of univariate integer polynomials given as
    degree -> coefficient maps; positive leading coefficient."""
    def content(p):
        g = 0
        for c in p.values():
            g = int_gcd(g, c)
            if g == 1:
                return 1
        return g

    ca, cb = content(a), content(b)
    c = int_gcd(ca, cb)
    f = {d: x // ca for d, x in a.items()}
    g = {d: x // cb for d, x in b.items()}
    if max(f) < max(g):
        f, g = g, f
    while g:
        dg = max(g)
        lcg = g[dg]
        r = f
        while r and max(r) >= dg:
            dr = max(r)
            lcr = r[dr]
            nr = {}
            for d, x in r.items():
                nr[d] = x * lcg
            for d, x in g.items():
                dd = d + dr - dg
                s = nr.get(dd, 0) - x * lcr
                if s:
                    nr[dd] = s
                else:
                    nr.pop(dd, None)
            r = nr
        f = g
        if r:
            cr = content(r)
            g = {d: x // cr for d, x in r.items()}
        else:
            g = {}
    if f[max(f)] < 0:
        c = -c
    return {d: c * x for d, x in f.items()}


def _uni_mul(a: Mapping[int, Terms], b: Mapping[int, Terms]) -> dict:
    out: dict[int, Terms] = {}
    for da, ca in a.items():
        for db, cb in b.items():
            d = da + db
            prod = _dict_mul(ca, cb)
            out[d] = _dict_add(out[d], prod) if d in out else prod
    return {d: c for d, c in out.items() if c}


def _uni_sub(a: Mapping[int, Terms], b: Mapping[int, Terms]) -> dict:
    out = {d: dict(c) for d, c in a.items()}
    for d, c in b.items():
        s = _dict_add(out.get(d, {}), _dict_neg(c))
        if s:
            out[d] = s
        else:
            out.pop(d, None)
    return out


def _pseudo_rem(f: dict, g: dict, k: int) -> dict:
    """Pseudo-remainder of univariate polys with k-generator coefficients."""
    dg = max(g)
    lcg = {0: g[dg]}
    r = f
    while r and max(r) >= dg:
        dr = max(r)
        lcr = r[dr]
        shifted = {d + dr - dg: c for d, c in g.items()}
        r = _uni_sub(_uni_mul(r, lcg), _uni_mul(shifted, {0: lcr}))
    return r


def _monomial_gcd(mono: Terms, other: Terms) -> Terms:
    (em, cm), = mono.items()
    g = abs(cm)
    for c in other.values():
        g = int_gcd(g, c)
        if g == 1:
            break
    exps = [min(e[i] for e in other) for i in range(len(em))]
    return {tuple(min(x, y) for x, y in zip(em, exps)): g}


def _poly_gcd(a: Terms, b: Terms, k: int) -> Terms:
    """gcd of integer-coefficient polys in k generators, with positive
    graded-lex leading coefficient."""
    if not a:
        g = dict(b)
    elif not b:
        g = dict(a)
    elif k == 0:
        return {(): int_gcd(a[()], b[()])}
    elif len(a) == 1:
        return _monomial_gcd(a, b)
    elif len(b) == 1:
        return _monomial_gcd(b, a)
    elif k == 1:
        g = _uni_gcd_int({e[0]: c for e, c in a.items()},
                         {e[0]: c for e, c in b.items()})
        return {(d,): c for d, c in g.items()}
    else:
        da = max(e[-1] for e in a)
        db = max(e[-1] for e in b)
        if da == 0 or db == 0:
            # one side is free of the main generator: its gcd with the
            # other can only involve the other's content
            flat_a = a if da else {e[:-1]: c for e, c in a.items()}
            flat_b = b if db else {e[:-1]: c for e, c in b.items()}
            ca = _poly_content(a, k) if da else flat_a
            cb = _poly_content(b, k) if db else flat_b
            g = _lift_terms_mul(_poly_gcd(ca, cb, k - 1))
        else:
            ua, ub = _split_main(a), _split_main(b)
            ca = _poly_content(a, k)
            cb = _poly_content(b, k)
            cont = _poly_gcd(ca, cb, k - 1)
            fa = {d: _dict_divexact(c, ca, k - 1) for d, c in ua.items()}
            fb = {d: _dict_divexact(c, cb, k - 1) for d, c in ub.items()}
            if max(fa) < max(fb):
                fa, fb = fb, fa
            while fb:
                r = _pseudo_rem(fa, fb, k)
                fa = fb
                if r:
                    rc = _poly_content(_join_main(r), k)
                    fb = {d: _dict_divexact(c, rc, k - 1)
                          for d, c in r.items()}
                else:
                    fb = {}
            g = _dict_mul(_join_main(fa), _lift_terms_mul(cont))
    if _leading_coeff(g) < 0:
        g = _dict_neg(g)
    return g


def _lift_terms_mul(sub: Terms) -> Terms:
    """Embed a (k-1)-generator poly as a degree-0 poly in the k-th one."""
    return {e + (0,): c for e, c in sub.items()}


def _dict_eval(a: Terms, gens: Sequence[str], at: Mapping[str, Fraction]) -> Fraction:
    total = Fraction(0)
    for e, c in a.items():
        v = Fraction(c)
        for g, p in zip(gens, e):
            if p:
                v *= Fraction(at[g]) ** p
        total += v
    return total


def _dict_degree_in(a: Terms, idx: int) -> int:
    return max((e[idx] for e in a), default=0)


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------

class Scalar:
    """Element of Q or of the fraction field Q(gens), gens an ordered
    subset of (q, t, r, a).

    Canonical form: numerator and denominator are coprime integer
    polynomials and the denominator has positive graded-lex leading
    coefficient.  Instances are immutable and hashable.
    """

    __slots__ = ("gens", "num", "den", "_hash")

    def __init__(self, gens: tuple, num: Terms, den: Terms, _canonical=False):
        if not _canonical:
            gens, num, den = _reduce_parts(gens, num, den)
        self.gens = gens
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------------

    @staticmethod
    def from_fraction(x, gens: tuple = ()) -> "Scalar":
        f = Fraction(x)
        k = len(gens)
        num = _dict_const(f.numerator, k)
        den = _dict_const(f.denominator, k)
        return Scalar(gens, num, den, _canonical=True)

    @staticmethod
    def generator(name: str, gens: tuple) -> "Scalar":
        if name not in gens:
            raise UsageError(f"generator {name!r} not among {gens}")
        e = tuple(1 if g == name else 0 for g in gens)
        return Scalar(gens, {e: 1}, _dict_const(1, len(gens)), _canonical=True)

    @staticmethod
    def zero(gens: tuple = ()) -> "Scalar":
        return Scalar(gens, {}, _dict_const(1, len(gens)), _canonical=True)

    @staticmethod
    def one(gens: tuple = ()) -> "Scalar":
        k = len(gens)
        return Scalar(gens, _dict_const(1, k), _dict_const(1, k), _canonical=True)

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == self.den

    def is_polynomial(self) -> bool:
        return self.den == _dict_const(1, len(self.gens))

    def lift(self, gens: tuple) -> "Scalar":
        """Embed into a larger ordered generator set."""
        if gens == self.gens:
            return self
        if any(g not in gens for g in self.gens):
            raise UsageError(f"cannot lift {self.gens} into {gens}")
        pos = [gens.index(g) for g in self.gens]
        k = len(gens)

        def conv(terms: Terms) -> Terms:
            out = {}
            for e, c in terms.items():
                ne = [0] * k
                for p, x in zip(pos, e):
                    ne[p] = x
                out[tuple(ne)] = c
            return out

        return Scalar(gens, conv(self.num), conv(self.den), _canonical=True)

    def _pair(self, other) -> tuple["Scalar", "Scalar"]:
        if isinstance(other, Scalar):
            if other.gens == self.gens:
                return self, other
            merged = tuple(g for g in GEN_ORDER if g in self.gens or g in other.gens)
            return self.lift(merged), other.lift(merged)
        return self, Scalar.from_fraction(other, self.gens)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> "Scalar":
        a, b = self._pair(other)
        k = len(a.gens)
        unit = _dict_const(1, k)
        if a.den == unit and b.den == unit:
            return Scalar(a.gens, _dict_add(a.num, b.num), a.den,
                          _canonical=True)
        if not a.num:
            return b
        if not b.num:
            return a
        # denominators-only reduction: with reduced inputs the result
        # below is already canonical
        g1 = _poly_gcd(a.den, b.den, k)
        if g1 == unit:
            num = _dict_add(_dict_mul(a.num, b.den), _dict_mul(b.num, a.den))
            if not num:
                return Scalar.zero(a.gens)
            return Scalar(a.gens, num, _dict_mul(a.den, b.den),
                          _canonical=True)
        db = _dict_divexact(b.den, g1, k)
        da = _dict_divexact(a.den, g1, k)
        t = _dict_add(_dict_mul(a.num, db), _dict_mul(b.num, da))
        if not t:
            return Scalar.zero(a.gens)
        g2 = _poly_gcd(t, g1, k)
        if g2 != unit:
            t = _dict_divexact(t, g2, k)
            den = _dict_mul(da, _dict_divexact(b.den, g2, k))
        else:
            den = _dict_mul(da, b.den)
        return Scalar(a.gens, t, den, _canonical=True)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(self.gens, _dict_neg(self.num), self.den, _canonical=True)

    def __sub__(self, other) -> "Scalar":
        a, b = self._pair(other)
        return a + (-b)

    def __rsub__(self, other) -> "Scalar":
        return (-self) + other

    def __mul__(self, other) -> "Scalar":
        a, b = self._pair(other)
        k = len(a.gens)
        unit = _dict_const(1, k)
        if a.den == unit and b.den == unit:
            return Scalar(a.gens, _dict_mul(a.num, b.num), a.den,
                          _canonical=True)
        if not a.num or not b.num:
            return Scalar.zero(a.gens)
        g1 = _poly_gcd(a.num, b.den, k)
        g2 = _poly_gcd(b.num, a.den, k)
        na = a.num if g1 == unit else _dict_divexact(a.num, g1, k)
        db = b.den if g1 == unit else _dict_divexact(b.den, g1, k)
        nb = b.num if g2 == unit else _dict_divexact(b.num, g2, k)
        da = a.den if g2 == unit else _dict_divexact(a.den, g2, k)
        return Scalar(a.gens, _dict_mul(na, nb), _dict_mul(da, db),
                      _canonical=True)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        a, b = self._pair(other)
        return a * b.invert()

    def __rtruediv__(self, other) -> "Scalar":
        return Scalar.from_fraction(other, self.gens) / self

    def invert(self) -> "Scalar":
        if self.is_zero():
            raise DivisionByZero("inverting zero")
        num, den = self.den, self.num
        if _leading_coeff(den) < 0:
            num, den = _dict_neg(num), _dict_neg(den)
        return Scalar(self.gens, num, den, _canonical=True)

    def __pow__(self, k: int) -> "Scalar":
        if k < 0:
            return self.invert() ** (-k)
        out = Scalar.one(self.gens)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_fraction(other, self.gens)
        if not isinstance(other, Scalar):
            return NotImplemented
        a, b = self._pair(other)
        return a.num == b.num and a.den == b.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.gens,
                               frozenset(self.num.items()),
                               frozenset(self.den.items())))
        return self._hash

    # -- specialization and substitutions -------------------------------------

    def specialize(self, assignments: Mapping[str, Fraction]) -> Fraction:
        """Exact rational value at the assignment; raises
        SpecializationCollision if the denominator vanishes there."""
        missing = [g for g in self.gens if g not in assignments
                   and (_dict_degree_in(self.num, self.gens.index(g))
                        or _dict_degree_in(self.den, self.gens.index(g)))]
        if missing:
            raise UsageError(f"assignment missing generators {missing}")
        den = _dict_eval(self.den, self.gens, assignments)
        if den == 0:
            raise SpecializationCollision(
                f"denominator vanishes at {dict(assignments)}")
        return _dict_eval(self.num, self.gens, assignments) / den

    def substitute_reciprocal(self, names: Iterable[str]) -> "Scalar":
        """Apply g -> 1/g for each named generator, clearing powers so the
        result is again a reduced polynomial fraction."""
        num, den = self.num, self.den
        for name in names:
            if name not in self.gens:
                continue
            i = self.gens.index(name)
            d = max(_dict_degree_in(num, i), _dict_degree_in(den, i))
            flip = lambda t: {e[:i] + (d - e[i],) + e[i + 1:]: c for e, c in t.items()}
            num, den = flip(num), flip(den)
        return Scalar(self.gens, num, den)

    # -- presentation ----------------------------------------------------------

    def as_fraction(self) -> Fraction:
        if self.gens:
            raise UsageError("scalar is symbolic")
        return Fraction(self.num.get((), 0), self.den[()])

    def _poly_str(self, terms: Terms) -> str:
        if not terms:
            return "0"
        parts = []
        for e in sorted(terms, key=_grlex_key, reverse=True):
            c = terms[e]
            mono = "*".join(
                f"{g}^{p}" if p != 1 else g
                for g, p in zip(self.gens, e) if p)
            if mono:
                lead = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{lead}{mono}")
            else:
                parts.append(str(c))
        s = " + ".join(parts).replace("+ -", "- ")
        return s

    def __str__(self) -> str:
        if not self.gens:
            return str(self.as_fraction())
        ns = self._poly_str(self.num)
        if self.is_polynomial():
            return ns
        ds = self._poly_str(self.den)
        if len(self.num) > 1:
            ns = f"({ns})"
        if len(self.den) > 1:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    __repr__ = __str__

    # -- serialization ----------------------------------------------------------

    def to_json(self):
        if not self.gens:
            f = self.as_fraction()
            return f"{f.numerator}/{f.denominator}"
        enc = lambda t: {",".join(map(str, e)): str(c) for e, c in t.items()}
        return {"num": enc(self.num), "den": enc(self.den), "gens": list(self.gens)}

    @staticmethod
    def from_json(data) -> "Scalar":
        if isinstance(data, str):
            if "/" in data:
                p, q = data.split("/")
                return Scalar.from_fraction(Fraction(int(p), int(q)))
            return Scalar.from_fraction(int(data))
        gens = tuple(data["gens"])
        dec = lambda t: {tuple(int(x) for x in e.split(",")) if e else (): int(c)
                         for e, c in t.items()}
        return Scalar(gens, dec(data["num"]), dec(data["den"]))


def _reduce_parts(gens: tuple, num: Terms, den: Terms) -> tuple:
    """Canonicalize a raw fraction of term dicts."""
    if not den:
        raise DivisionByZero("zero denominator")
    k = len(gens)
    if not num:
        return gens, {}, _dict_const(1, k)
    if den == _dict_const(1, k):
        return gens, num, den
    if k == 0:
        p, q = num[()], den[()]
        g = int_gcd(p, q)
        if q < 0:
            g = -g
        return gens, {(): p // g}, {(): q // g}
    g = _poly_gcd(num, den, k)
    if g != _dict_const(1, k):
        num = _dict_divexact(num, g, k)
        den = _dict_divexact(den, g, k)
    if _leading_coeff(den) < 0:
        num, den = _dict_neg(num), _dict_neg(den)
    return gens, num, den


def reduce(num: Scalar, den: Scalar) -> Scalar:
    """Canonical reduced fraction num/den of two polynomial scalars."""
    return num / den


# ---------------------------------------------------------------------------
# field configuration
# ---------------------------------------------------------------------------

VARIANT_GENS = {
    "qt": ("q", "t"),
    "r": ("r",),
    "qta": ("q", "t", "a"),
    "ra": ("r", "a"),
}


@dataclass(frozen=True)
class FieldConfig:
    """Which coefficient field to compute in.

    variant picks the generator set; assignments (a tuple of
    (name, Fraction) pairs covering exactly that set) switch from the
    symbolic fraction field to exact rational specialization.  The
    inverted flag replaces every occurrence of q, t by its reciprocal
    and is only meaningful for the qt/qta variants.
    """

    variant: str
    assignments: tuple = None
    inverted: bool = False

    def __post_init__(self):
        if self.variant not in VARIANT_GENS:
            raise UsageError(f"unknown field variant {self.variant!r}")
        if self.inverted and self.variant not in ("qt", "qta"):
            raise UsageError("inverted parameters only apply to q,t fields")
        if self.assignments is not None:
            got = tuple(sorted(name for name, _ in self.assignments))
            want = tuple(sorted(VARIANT_GENS[self.variant]))
            if got != want:
                raise UsageError(
                    f"specialized {self.variant} config must assign exactly {want}")
            for name, val in self.assignments:
                val = Fraction(val)
                if name in ("q", "t") and val in (0, 1, -1):
                    raise SpecializationCollision(
                        f"specialization {name}={val} rejected: spectral points "
                        f"collide ({name} must not be 0, 1, or -1)")

    # -- helpers -------------------------------------------------------------

    @property
    def symbolic(self) -> bool:
        return self.assignments is None

    def gens(self) -> tuple:
        return VARIANT_GENS[self.variant] if self.symbolic else ()

    def assignment_map(self) -> dict:
        return {} if self.symbolic else {n: Fraction(v) for n, v in self.assignments}

    def scalar(self, x) -> Scalar:
        return Scalar.from_fraction(x, self.gens())

    def zero(self) -> Scalar:
        return Scalar.zero(self.gens())

    def one(self) -> Scalar:
        return Scalar.one(self.gens())

    def gen(self, name: str) -> Scalar:
        """The generator as a field element, honoring specialization and
        the inverted-parameters flag."""
        if name not in VARIANT_GENS[self.variant]:
            raise UsageError(f"generator {name!r} not in variant {self.variant!r}")
        if not self.symbolic:
            v = self.assignment_map()[name]
            if self.inverted and name in ("q", "t"):
                v = 1 / v
            return Scalar.from_fraction(v)
        g = Scalar.generator(name, self.gens())
        if self.inverted and name in ("q", "t"):
            return g.invert()
        return g

    def gen_power(self, name: str, k: int) -> Scalar:
        return self.gen(name) ** k

    def with_inverted(self) -> "FieldConfig":
        return FieldConfig(self.variant, self.assignments, not self.inverted)

    def family_config(self) -> "FieldConfig":
        """Drop the evaluation parameter a, keeping the polynomial field."""
        base = {"qta": "qt", "ra": "r"}.get(self.variant, self.variant)
        if base == self.variant:
            return self
        if self.symbolic:
            return FieldConfig(base, None, self.inverted)
        kept = tuple((n, v) for n, v in self.assignments if n != "a")
        return FieldConfig(base, kept, self.inverted)

    def cache_token(self) -> str:
        if self.symbolic:
            body = "sym"
        else:
            body = ",".join(f"{n}={Fraction(v)}" for n, v in sorted(self.assignments))
        inv = ",inv" if self.inverted else ""
        return f"{self.variant}[{body}{inv}]"

    def describe(self) -> dict:
        out = {"variant": self.variant}
        if self.symbolic:
            out["mode"] = "symbolic"
        else:
            out["mode"] = "specialized"
            out["assignments"] = {n: str(Fraction(v))
                                  for n, v in sorted(self.assignments)}
        if self.inverted:
            out["inverted"] = True
        return out


def qt_config(q=None, t=None, inverted=False) -> FieldConfig:
    if q is None and t is None:
        return FieldConfig("qt", None, inverted)
    return FieldConfig("qt", (("q", Fraction(q)), ("t", Fraction(t))), inverted)


def r_config(r=None) -> FieldConfig:
    if r is None:
        return FieldConfig("r", None)
    return FieldConfig("r", (("r", Fraction(r)),))


def with_a(cfg: FieldConfig, a=None) -> FieldConfig:
    """Extend a qt/r config by the evaluation parameter a (symbolic when
    a is None and cfg is symbolic; otherwise both must be specialized)."""
    target = {"qt": "qta", "r": "ra"}[cfg.variant]
    if cfg.symbolic:
        if a is not None:
            raise UsageError("cannot mix a symbolic base field with specialized a")
        return FieldConfig(target, None, cfg.inverted)
    if a is None:
        raise UsageError("specialized base field requires a value for a")
    return FieldConfig(target, cfg.assignments + (("a", Fraction(a)),), cfg.inverted)


def seeded_rationals(rng) -> Iterable[Fraction]:
    """Deterministic stream of candidate specialization values."""
    seen = set()
    while True:
        v = Fraction(rng.randint(2, 99), rng.randint(1, 9))
        if v in seen:
            continue
        seen.add(v)
        yield v


def dumps_canonical(obj) -> str:
    """Stable JSON used everywhere reports or caches are written."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
