"""Exact arithmetic in the ground field of the metaplectic representations.

The ground field is the field of fractions of a polynomial ring over Q whose
indeterminates are q, the Hecke parameters (one per length class of the
rescaled root system), and the algebraically independent representation
parameters g_j(y).  The g-family satisfies

    g_0 = -1,   g_j(y) g_{n-j}(y) = k_y^{-2}   (j not divisible by n),

is periodic mod n, and for even n carries a fixed sign through
g_{n/2}(y) = eps_y^{-1} k_y^{-1}.  Only g_j(y) with 0 < j < n/2 are adjoined
as indeterminates; every other value is a derived rational expression.

A scalar is an unreduced fraction of two polynomial dicts (exponent tuple ->
rational coefficient).  Normalization after each operation is configurable:

* ``none``    -- store as computed,
* ``content`` -- strip the common rational content and the common monomial
                 factor (default; keeps coefficients integral and primitive),
* ``gcd``     -- additionally divide out the full multivariate gcd.

Equality is always decided by cross multiplication, so the stored form never
affects mathematical identity.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import chain

from gmpy2 import mpq, gcd as _int_gcd, lcm as _int_lcm

from .errors import DivisionByZero, NotDivisible

Mono = tuple[int, ...]
PolyDict = dict

_MPQ_ZERO = mpq(0)
_MPQ_ONE = mpq(1)

SIMPLIFY_LEVELS = ("none", "content", "gcd")


# ---------------------------------------------------------------------------
# raw polynomial-dict arithmetic (internal)
# ---------------------------------------------------------------------------

def _padd(a: PolyDict, b: PolyDict) -> PolyDict:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for mono, c in b.items():
        s = out.get(mono)
        if s is None:
            out[mono] = c
        else:
            s = s + c
            if s:
                out[mono] = s
            else:
                del out[mono]
    return out


def _pneg(a: PolyDict) -> PolyDict:
    return {m: -c for m, c in a.items()}


def _psub(a: PolyDict, b: PolyDict) -> PolyDict:
    return _padd(a, _pneg(b))


def _pmul(a: PolyDict, b: PolyDict) -> PolyDict:
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    out: PolyDict = {}
    for mb, cb in b.items():
        for ma, ca in a.items():
            mono = tuple(x + y for x, y in zip(ma, mb))
            c = ca * cb
            s = out.get(mono)
            if s is None:
                out[mono] = c
            else:
                s = s + c
                if s:
                    out[mono] = s
                else:
                    del out[mono]
    return out


def _pscale(a: PolyDict, c) -> PolyDict:
    if not c:
        return {}
    return {m: v * c for m, v in a.items()}


def _pshift(a: PolyDict, mono: Mono) -> PolyDict:
    """Multiply by the monomial with exponent vector ``mono``."""
    if not any(mono):
        return dict(a)
    return {tuple(x + y for x, y in zip(m, mono)): c for m, c in a.items()}


def _pmin_exponents(a: PolyDict) -> Mono:
    it = iter(a)
    lo = list(next(it))
    for m in it:
        for i, e in enumerate(m):
            if e < lo[i]:
                lo[i] = e
    return tuple(lo)


def _rat_content(values) -> mpq:
    """gcd of a collection of rationals, as a positive rational."""
    num_g = 0
    den_l = 1
    for c in values:
        num_g = _int_gcd(num_g, c.numerator)
        den_l = _int_lcm(den_l, c.denominator)
    return mpq(num_g, den_l)


def _plex_leading(a: PolyDict) -> Mono:
    return max(a)


def _is_const_one(a: PolyDict) -> bool:
    if len(a) != 1:
        return False
    (mono, c), = a.items()
    return not any(mono) and c == 1


def _pexact_div(a: PolyDict, b: PolyDict) -> PolyDict:
    """Exact division of polynomial dicts (non-negative exponents only).

    Raises NotDivisible when b does not divide a.
    """
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if not a:
        return {}
    rem = dict(a)
    lm_b = _plex_leading(b)
    lc_b = b[lm_b]
    quot: PolyDict = {}
    while rem:
        lm_r = _plex_leading(rem)
        mono = tuple(x - y for x, y in zip(lm_r, lm_b))
        if any(e < 0 for e in mono):
            raise NotDivisible("polynomial division is not exact")
        c = rem[lm_r] / lc_b
        quot[mono] = c
        for mb, cb in b.items():
            mm = tuple(x + y for x, y in zip(mono, mb))
            s = rem.get(mm, _MPQ_ZERO) - c * cb
            if s:
                rem[mm] = s
            else:
                rem.pop(mm, None)
    return quot


# -- multivariate gcd by primitive polynomial remainder sequences -----------

def _pgcd(a: PolyDict, b: PolyDict, nvars: int) -> PolyDict:
    """Multivariate gcd over Q (primitive, positive leading coefficient)."""
    if not a:
        return _make_primitive(b)
    if not b:
        return _make_primitive(a)
    lo = tuple(min(x, y) for x, y in zip(_pmin_exponents(a), _pmin_exponents(b)))
    if any(lo):
        neg = tuple(-e for e in lo)
        a = _pshift(a, neg)
        b = _pshift(b, neg)
    g = _pgcd_rec(_make_primitive(a), _make_primitive(b), nvars)
    return _pshift(_make_primitive(g), lo)


def _make_primitive(a: PolyDict) -> PolyDict:
    if not a:
        return {}
    c = _rat_content(a.values())
    if a[_plex_leading(a)] < 0:
        c = -c
    if c == 1:
        return dict(a)
    return {m: v / c for m, v in a.items()}


def _degree_in(a: PolyDict, v: int) -> int:
    return max(m[v] for m in a) if a else -1


def _to_univariate(a: PolyDict, v: int) -> dict:
    """View as univariate in variable v: degree -> coefficient PolyDict."""
    out: dict = {}
    for m, c in a.items():
        key = m[:v] + (0,) + m[v + 1:]
        out.setdefault(m[v], {})[key] = c
    return out


def _from_univariate(u: dict, v: int) -> PolyDict:
    out: PolyDict = {}
    for d, coeff in u.items():
        for m, c in coeff.items():
            out[m[:v] + (d,) + m[v + 1:]] = c
    return out


def _pgcd_rec(a: PolyDict, b: PolyDict, nvars: int) -> PolyDict:
    if not a:
        return b
    if not b:
        return a
    if len(a) == 1 or len(b) == 1:
        lo = tuple(min(x, y) for x, y in
                   zip(_pmin_exponents(a), _pmin_exponents(b)))
        return {lo: _MPQ_ONE}
    active = [v for v in range(nvars)
              if _degree_in(a, v) > 0 or _degree_in(b, v) > 0]
    if not active:
        return {(0,) * nvars: _MPQ_ONE}
    v, *_ = sorted(active, key=lambda w: max(_degree_in(a, w), _degree_in(b, w)))
    ua, ub = _to_univariate(a, v), _to_univariate(b, v)
    ca, cb = _upoly_content(ua, nvars), _upoly_content(ub, nvars)
    pa, pb = _upoly_div_content(ua, ca), _upoly_div_content(ub, cb)
    cont = _pgcd_rec(ca, cb, nvars)
    f, g = (pa, pb) if max(pa) >= max(pb) else (pb, pa)
    while g:
        r = _upoly_prem(f, g, nvars)
        f = g
        if r:
            g = _upoly_div_content(r, _upoly_content(r, nvars))
        else:
            g = {}
    gcd_pp = _from_univariate(_upoly_div_content(f, _upoly_content(f, nvars)), v)
    return _pmul(cont, _make_primitive(gcd_pp))


def _upoly_content(u: dict, nvars: int) -> PolyDict:
    cont: PolyDict = {}
    for coeff in u.values():
        cont = _pgcd_rec(cont, _make_primitive(coeff), nvars)
        if _is_const_one(cont):
            break
    return _make_primitive(cont)


def _upoly_div_content(u: dict, cont: PolyDict) -> dict:
    if _is_const_one(cont):
        return u
    return {d: _pexact_div(coeff, cont) for d, coeff in u.items()}


def _upoly_prem(f: dict, g: dict, nvars: int) -> dict:
    """Pseudo-remainder of univariate polys with PolyDict coefficients."""
    dg = max(g)
    lg = g[dg]
    r = {d: dict(c) for d, c in f.items()}
    while r and max(r) >= dg:
        dr = max(r)
        lr = r.pop(dr)
        shift = dr - dg
        new: dict = {d: _pmul(c, lg) for d, c in r.items()}
        for d, c in g.items():
            if d == dg:
                continue
            dd = d + shift
            val = _psub(new.get(dd, {}), _pmul(c, lr))
            if val:
                new[dd] = val
            else:
                new.pop(dd, None)
        r = new
    return r


# ---------------------------------------------------------------------------
# the scalar type
# ---------------------------------------------------------------------------

def _normalize_content(num: PolyDict, den: PolyDict):
    """Cancel the common monomial factor and make both parts jointly
    integral and primitive (denominator lex-leading coefficient positive)."""
    if not num:
        z = tuple(0 for _ in next(iter(den)))
        return {}, {z: _MPQ_ONE}
    lo = tuple(min(x, y) for x, y in
               zip(_pmin_exponents(num), _pmin_exponents(den)))
    if any(lo):
        neg = tuple(-e for e in lo)
        num = _pshift(num, neg)
        den = _pshift(den, neg)
    c = _rat_content(chain(num.values(), den.values()))
    if den[_plex_leading(den)] < 0:
        c = -c
    if c != 1:
        inv = 1 / c
        num = _pscale(num, inv)
        den = _pscale(den, inv)
    return num, den


def _reduce_gcd(num: PolyDict, den: PolyDict, nvars: int):
    if not num or _is_const_one(den):
        return num, den
    g = _pgcd(num, den, nvars)
    if _is_const_one(g):
        return num, den
    return _normalize_content(_pexact_div(num, g), _pexact_div(den, g))


class Scalar:
    """Element of the ground field, an exact fraction of polynomials."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num: PolyDict, den: PolyDict | None = None,
                 normalize: bool = True):
        if den is None:
            den = {field.zero_mono: _MPQ_ONE}
        if not den:
            raise DivisionByZero("zero denominator")
        if normalize and field.simplify != "none":
            num, den = _normalize_content(num, den)
            if field.simplify == "gcd":
                num, den = _reduce_gcd(num, den, field.nvars)
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(_MPQ_ONE):
            return self.field.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return Scalar(self.field, _padd(self.num, o.num), dict(self.den))
        return Scalar(self.field,
                      _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
                      _pmul(self.den, o.den))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return Scalar(self.field, _psub(self.num, o.num), dict(self.den))
        return Scalar(self.field,
                      _psub(_pmul(self.num, o.den), _pmul(o.num, self.den)),
                      _pmul(self.den, o.den))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Scalar(self.field, _pneg(self.num), dict(self.den),
                      normalize=False)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(self.field, _pmul(self.num, o.num),
                      _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def inverse(self) -> "Scalar":
        if not self.num:
            raise DivisionByZero("inverting zero scalar")
        return Scalar(self.field, dict(self.den), dict(self.num))

    def exact_div(self, other: "Scalar") -> "Scalar":
        """Division required to land back in the polynomial ring, used by the
        fraction-free elimination steps."""
        num = _pexact_div(_pmul(self.num, other.den),
                          _pmul(self.den, other.num))
        return Scalar(self.field, num)

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return _pmul(self.num, o.den) == _pmul(o.num, self.den)

    def __hash__(self):
        return hash(self.key())

    def reduced(self) -> "Scalar":
        """Fully gcd-reduced copy (canonical form)."""
        num, den = _normalize_content(self.num, self.den)
        num, den = _reduce_gcd(num, den, self.field.nvars)
        s = Scalar.__new__(Scalar)
        s.field, s.num, s.den = self.field, num, den
        return s

    def key(self):
        """Hashable key of the canonical reduced form."""
        r = self.reduced()
        return (frozenset(r.num.items()), frozenset(r.den.items()))

    def substitute(self, target_field, var_images: dict | None = None):
        """Image under a field homomorphism.

        ``var_images`` maps source variable indices to scalars of the target
        field; unlisted variables map to the target variable with the same
        name.
        """
        var_images = var_images or {}

        def poly_image(p: PolyDict):
            acc = target_field.zero()
            for mono, c in p.items():
                term = target_field.from_fraction(c)
                for v, e in enumerate(mono):
                    if not e:
                        continue
                    img = var_images.get(v)
                    if img is None:
                        img = target_field.var(self.field.var_names[v])
                    term = term * img ** e
                acc = acc + term
            return acc

        den_img = poly_image(self.den)
        if den_img.is_zero():
            raise DivisionByZero("substitution annihilates the denominator")
        return poly_image(self.num) / den_img

    def evaluate(self, values) -> mpq:
        """Evaluate at rational values, one per variable."""
        def ev(p: PolyDict):
            tot = _MPQ_ZERO
            for mono, c in p.items():
                t = c
                for v, e in enumerate(mono):
                    if e:
                        t = t * values[v] ** e
                tot += t
            return tot

        d = ev(self.den)
        if not d:
            raise DivisionByZero("evaluation annihilates the denominator")
        return ev(self.num) / d

    def __repr__(self):
        return f"Scalar({scalar_to_str(self)})"


# ---------------------------------------------------------------------------
# ground fields
# ---------------------------------------------------------------------------

class GroundField:
    """Symbolic ground field with named indeterminates.

    ``classes`` lists the length classes of the rescaled root system that
    carry g-parameters ("lg" alone for a single-length system, following the
    convention that a single-length system counts as all long).  ``style``
    chooses naming: "weyl" uses k_sh/k_lg with per-class g-variables, "gl"
    a single k with plain g_j.
    """

    def __init__(self, n: int, *, classes=("lg",), epsilon=None,
                 style: str = "weyl", simplify: str = "content"):
        if n < 1:
            raise ValueError("metaplectic degree n must be >= 1")
        if simplify not in SIMPLIFY_LEVELS:
            raise ValueError(f"unknown simplify level {simplify!r}")
        self.n = n
        self.style = style
        self.classes = tuple(classes)
        eps = dict(epsilon or {})
        self.epsilon = {y: int(eps.get(y, 1)) for y in self.classes}
        if any(e not in (1, -1) for e in self.epsilon.values()):
            raise ValueError("epsilon must be +1 or -1")
        self.simplify = simplify

        names = ["q"]
        self._k_index = {}
        if style == "gl":
            if self.classes != ("lg",):
                raise ValueError("gl style is single-class")
            self._k_index["lg"] = 1
            names.append("k")
        else:
            for y in ("sh", "lg"):
                self._k_index[y] = len(names)
                names.append(f"k_{y}")
        self._g_index = {}
        for j in range(1, (n - 1) // 2 + 1):
            for y in self.classes:
                self._g_index[(j, y)] = len(names)
                names.append(f"g{j}" if style == "gl" else f"g{j}_{y}")
        self.var_names = tuple(names)
        self.nvars = len(names)
        self.zero_mono = (0,) * self.nvars
        self._one = Scalar(self, {self.zero_mono: _MPQ_ONE}, normalize=False)
        self._zero = Scalar(self, {}, {self.zero_mono: _MPQ_ONE},
                            normalize=False)

    def one(self) -> Scalar:
        return self._one

    def zero(self) -> Scalar:
        return self._zero

    def from_int(self, i: int) -> Scalar:
        if i == 0:
            return self._zero
        return Scalar(self, {self.zero_mono: mpq(i)}, normalize=False)

    def from_fraction(self, f) -> Scalar:
        v = mpq(f) if isinstance(f, int) else mpq(f.numerator, f.denominator)
        if not v:
            return self._zero
        return Scalar(self, {self.zero_mono: v}, normalize=False)

    def var(self, name: str) -> Scalar:
        return self._var_pow(self.var_names.index(name), 1)

    def _var_pow(self, v: int, e: int) -> Scalar:
        if e == 0:
            return self._one
        mono = tuple(abs(e) if i == v else 0 for i in range(self.nvars))
        if e > 0:
            return Scalar(self, {mono: _MPQ_ONE}, normalize=False)
        return Scalar(self, {self.zero_mono: _MPQ_ONE}, {mono: _MPQ_ONE},
                      normalize=False)

    # -- named parameters ----------------------------------------------------

    def q_pow(self, e: int) -> Scalar:
        return self._var_pow(0, e)

    def k(self, y: str = "lg") -> Scalar:
        return self._var_pow(self._k_index[y], 1)

    def k_pow(self, y: str, e: int) -> Scalar:
        return self._var_pow(self._k_index[y], e)

    def g(self, j: int, y: str = "lg") -> Scalar:
        """Representation parameter g_j(y), index reduced mod n, derived
        values expanded through the defining relations."""
        n = self.n
        jr = j % n
        if jr == 0:
            return self.from_int(-1)
        if 2 * jr < n:
            return self._var_pow(self._g_index[(jr, y)], 1)
        if 2 * jr == n:
            # eps^{-1} k^{-1}; the sign is its own inverse
            return self.from_int(self.epsilon[y]) * self.k_pow(y, -1)
        return self.k_pow(y, -2) * self.g(n - jr, y).inverse()

    def h(self, j: int, y: str = "lg") -> Scalar:
        """Normalization parameter table: 1 for j >= 0, k_y on negative
        multiples of n, and -k_y^{-1} g_j(y)^{-1} otherwise below zero."""
        if j >= 0:
            return self.one()
        if j % self.n == 0:
            return self.k(y)
        return -(self.k_pow(y, -1) * self.g(j, y).inverse())


class SpecializedField:
    """Ground field specialized at nonzero rational parameter values.

    Mirrors the GroundField interface with plain rational scalars; used by
    the randomized fast-check mode that pre-screens operator identities
    before symbolic verification.  Callers should catch DivisionByZero and
    resample when an unlucky specialization annihilates a denominator.
    """

    simplify = "content"

    def __init__(self, n: int, *, classes=("lg",), epsilon=None,
                 style: str = "weyl", rng: random.Random | None = None,
                 values: dict | None = None):
        self.n = n
        self.style = style
        self.classes = tuple(classes)
        eps = dict(epsilon or {})
        self.epsilon = {y: int(eps.get(y, 1)) for y in self.classes}
        self.nvars = 0
        self.var_names = ()
        self.zero_mono = ()
        rng = rng or random.Random(0)
        vals = dict(values or {})

        def draw():
            while True:
                v = mpq(rng.randint(-24, 24), rng.randint(1, 24))
                if v and abs(v) != 1:
                    return v

        self._q = vals.get("q", draw())
        self._k = {}
        for y in ("sh", "lg") if style == "weyl" else ("lg",):
            key = f"k_{y}" if style == "weyl" else "k"
            self._k[y] = vals.get(key, draw())
        self._g = {}
        for j in range(1, (n - 1) // 2 + 1):
            for y in self.classes:
                key = f"g{j}_{y}" if style == "weyl" else f"g{j}"
                self._g[(j, y)] = vals.get(key, draw())

    def one(self):
        return NumericScalar(self, _MPQ_ONE)

    def zero(self):
        return NumericScalar(self, _MPQ_ZERO)

    def from_int(self, i: int):
        return NumericScalar(self, mpq(i))

    def from_fraction(self, f):
        return NumericScalar(self, mpq(f) if isinstance(f, int)
                             else mpq(f.numerator, f.denominator))

    def var(self, name: str):
        if name == "q":
            return NumericScalar(self, self._q)
        if name in ("k", "k_sh", "k_lg"):
            y = "lg" if name == "k" else name[2:]
            return NumericScalar(self, self._k[y])
        if name.startswith("g"):
            base, _, y = name.partition("_")
            return self.g(int(base[1:]), y or "lg")
        raise KeyError(name)

    def q_pow(self, e: int):
        return NumericScalar(self, self._q ** e)

    def k(self, y: str = "lg"):
        return NumericScalar(self, self._k[y])

    def k_pow(self, y: str, e: int):
        return NumericScalar(self, self._k[y] ** e)

    def g(self, j: int, y: str = "lg"):
        n = self.n
        jr = j % n
        if jr == 0:
            return self.from_int(-1)
        if 2 * jr < n:
            return NumericScalar(self, self._g[(jr, y)])
        if 2 * jr == n:
            return NumericScalar(self, mpq(self.epsilon[y]) / self._k[y])
        return self.k_pow(y, -2) * self.g(n - jr, y).inverse()

    def h(self, j: int, y: str = "lg"):
        if j >= 0:
            return self.one()
        if j % self.n == 0:
            return self.k(y)
        return -(self.k_pow(y, -1) * self.g(j, y).inverse())


class NumericScalar:
    """Rational stand-in for Scalar under a SpecializedField."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, NumericScalar):
            return other
        if isinstance(other, (int, Fraction)) or type(other) is type(_MPQ_ONE):
            return self.field.from_fraction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else \
            NumericScalar(self.field, self.value + o.value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else \
            NumericScalar(self.field, self.value - o.value)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return NumericScalar(self.field, -self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else \
            NumericScalar(self.field, self.value * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.value:
            raise DivisionByZero("division by zero specialization")
        return NumericScalar(self.field, self.value / o.value)

    def __pow__(self, e: int):
        if e < 0:
            if not self.value:
                raise DivisionByZero("inverting zero specialization")
            return NumericScalar(self.field, (1 / self.value) ** (-e))
        return NumericScalar(self.field, self.value ** e)

    def inverse(self):
        if not self.value:
            raise DivisionByZero("inverting zero specialization")
        return NumericScalar(self.field, 1 / self.value)

    def is_zero(self):
        return not self.value

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else \
            self.value == o.value

    def __hash__(self):
        return hash(self.value)

    def key(self):
        return self.value

    def reduced(self):
        return self

    def __repr__(self):
        return f"NumericScalar({self.value})"


def clear_denominators(field, row):
    """Scale a row of scalars by the product of their denominators.

    Returns polynomial scalars (trivial denominators); scaling a whole row by
    a common nonzero factor preserves linear-system kernels, which is what
    the fraction-free solver needs.
    """
    prod = {field.zero_mono: _MPQ_ONE}
    for s in row:
        prod = _pmul(prod, s.den)
    out = []
    for s in row:
        num = _pexact_div(_pmul(s.num, prod), s.den)
        out.append(Scalar(field, num))
    return out


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _mono_to_str(field, mono: Mono) -> str:
    parts = []
    for v, e in enumerate(mono):
        if e == 0:
            continue
        name = field.var_names[v]
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts)


def poly_to_str(field, p: PolyDict) -> str:
    if not p:
        return "0"
    out = []
    for mono, c in sorted(p.items(), reverse=True):
        ms = _mono_to_str(field, mono)
        if not ms:
            term = str(c)
        elif c == 1:
            term = ms
        elif c == -1:
            term = f"-{ms}"
        else:
            term = f"{c}*{ms}"
        if out:
            out.append("- " + term[1:] if term.startswith("-") else "+ " + term)
        else:
            out.append(term)
    return " ".join(out)


def scalar_to_str(s, reduce: bool = True) -> str:
    if isinstance(s, NumericScalar):
        return str(s.value)
    if reduce:
        s = s.reduced()
    num = poly_to_str(s.field, s.num)
    if _is_const_one(s.den):
        return num
    return f"({num})/({poly_to_str(s.field, s.den)})"


def scalar_to_json(s) -> dict:
    if isinstance(s, NumericScalar):
        v = s.value
        return {"num": str(v.numerator), "den": str(v.denominator)}
    s = s.reduced()
    return {"num": poly_to_str(s.field, s.num),
            "den": poly_to_str(s.field, s.den)}
