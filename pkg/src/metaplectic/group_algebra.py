"""Group algebras of weight lattices and their localizations.

Three layers, mirroring the algebraic setup:

* ``LaurentElement`` -- a finitely supported map from lattice points (integer
  exponent tuples) to scalars, i.e. an element of K[P] (or of K[Z^r] in the
  GL case, which reuses the same class);
* ``PmFraction`` -- a fraction of Laurent elements supported on the rescaled
  lattice P^m, the coefficient field of the coset decomposition.  The
  denominator is kept as a multiset of factors so that the repeated
  denominators produced by the deformed Weyl action merge instead of
  multiplying out;
* ``CosetRational`` -- an element of K(P) written in the canonical
  decomposition  sum over cosets of P/P^m of (P^m-rational) * x^rep,
  with representatives the image of the remainder map.

The coset decomposition of an arbitrary fraction clears its denominator into
K[P^m] one coordinate at a time by a Galois-norm trick: the product of the
denominator over the character orbit of the coordinate is invariant, hence
supported on the sublattice, and it is computed rationally as a resultant
(Sylvester determinant) so no cyclotomic arithmetic is needed.
"""

from __future__ import annotations

from .errors import (CosetGroupTooLarge, DenominatorZero, DivisionByZero,
                     LatticeMismatch, NotDivisible)
from .linalg import bareiss_det

Exponent = tuple[int, ...]


class LaurentElement:
    """Finitely supported map exponent -> scalar; zero terms are pruned."""

    __slots__ = ("field", "terms", "lattice")

    def __init__(self, field, terms: dict | None = None,
                 lattice: str | None = None, prune: bool = True):
        self.field = field
        if terms and prune:
            terms = {e: c for e, c in terms.items() if not c.is_zero()}
        self.terms = terms or {}
        self.lattice = lattice

    # -- constructors ---------------------------------------------------------

    @classmethod
    def monomial(cls, field, exponent, coeff=None, lattice=None):
        c = coeff if coeff is not None else field.one()
        if c.is_zero():
            return cls(field, {}, lattice)
        return cls(field, {tuple(exponent): c}, lattice, prune=False)

    @classmethod
    def one(cls, field, rank: int, lattice=None):
        return cls.monomial(field, (0,) * rank, lattice=lattice)

    @classmethod
    def zero(cls, field, lattice=None):
        return cls(field, {}, lattice)

    # -- ring operations --------------------------------------------------------

    def _merge_lattice(self, other):
        if self.lattice and other.lattice and self.lattice != other.lattice:
            raise LatticeMismatch(
                f"{self.lattice} vs {other.lattice}")
        return self.lattice or other.lattice

    def _coerce(self, other):
        """Embed scalars and integers as constants (rank from self)."""
        if isinstance(other, LaurentElement):
            return other
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not self.terms:
            raise ValueError("cannot infer rank from a zero element")
        rank = len(next(iter(self.terms)))
        return LaurentElement.monomial(self.field, (0,) * rank, other)

    def __add__(self, other):
        other = self._coerce(other)
        lat = self._merge_lattice(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return LaurentElement(self.field, out, lat, prune=False)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LaurentElement(self.field, {e: -c for e, c in self.terms.items()},
                              self.lattice, prune=False)

    def __mul__(self, other):
        if not isinstance(other, LaurentElement):
            return self.scale(other)
        lat = self._merge_lattice(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentElement(self.field, {}, lat)
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                s = out.get(e)
                if s is None:
                    if not c.is_zero():
                        out[e] = c
                else:
                    s = s + c
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
        return LaurentElement(self.field, out, lat, prune=False)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, LaurentElement):
            return laurent_exact_div(self, other)
        if isinstance(other, int):
            other = self.field.from_int(other)
        return self.scale(other.inverse())

    def __pow__(self, e: int):
        if e == 0:
            return LaurentElement.one(self.field, self.rank(), self.lattice)
        if e < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers only for monomials")
            (mono, c), = self.terms.items()
            inv = LaurentElement.monomial(
                self.field, tuple(-x for x in mono), c.inverse(), self.lattice)
            return inv ** (-e)
        out = self
        for _ in range(e - 1):
            out = out * self
        return out

    def scale(self, c):
        if isinstance(c, int):
            c = self.field.from_int(c)
        if c.is_zero():
            return LaurentElement(self.field, {}, self.lattice)
        return LaurentElement(self.field,
                              {e: v * c for e, v in self.terms.items()},
                              self.lattice, prune=False)

    def shift(self, exponent) -> "LaurentElement":
        """Multiply by the monomial x^exponent."""
        if not any(exponent):
            return self
        return LaurentElement(
            self.field,
            {tuple(x + y for x, y in zip(e, exponent)): c
             for e, c in self.terms.items()},
            self.lattice, prune=False)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, LaurentElement):
            return NotImplemented
        if set(self.terms) != set(other.terms):
            return False
        return all(c == other.terms[e] for e, c in self.terms.items())

    __hash__ = None

    def support(self):
        return set(self.terms)

    def rank(self) -> int:
        return len(next(iter(self.terms))) if self.terms else 0

    def min_exponents(self) -> Exponent:
        it = iter(self.terms)
        lo = list(next(it))
        for e in it:
            for i, x in enumerate(e):
                if x < lo[i]:
                    lo[i] = x
        return tuple(lo)

    def exact_div(self, other: "LaurentElement") -> "LaurentElement":
        return laurent_exact_div(self, other)

    def apply_coeffs(self, fn) -> "LaurentElement":
        return LaurentElement(self.field,
                              {e: fn(c) for e, c in self.terms.items()},
                              self.lattice)

    def normalized_by_min(self):
        """(unit_mono, unit_coeff, normalized element with constant term 1)."""
        lo = min(self.terms)
        unit = self.terms[lo]
        inv = unit.inverse()
        terms = {tuple(x - y for x, y in zip(e, lo)): c * inv
                 for e, c in self.terms.items()}
        return lo, unit, LaurentElement(self.field, terms, self.lattice,
                                        prune=False)

    def __repr__(self):
        from .scalars import scalar_to_str
        if not self.terms:
            return "LaurentElement(0)"
        bits = [f"({scalar_to_str(c)})*x^{list(e)}"
                for e, c in sorted(self.terms.items())]
        return "LaurentElement(" + " + ".join(bits) + ")"


def laurent_exact_div(a: LaurentElement, b: LaurentElement) -> LaurentElement:
    """Exact division in the Laurent ring; raises NotDivisible otherwise.

    Shifts both operands into the polynomial cone (extreme exponents of an
    exact quotient are differences of the operands' extremes, so the shift
    is lossless) and divides by lexicographic leading terms.
    """
    if b.is_zero():
        raise DivisionByZero("Laurent division by zero")
    if a.is_zero():
        return LaurentElement(a.field, {}, a.lattice)
    lo_a, lo_b = a.min_exponents(), b.min_exponents()
    rem = {tuple(x - y for x, y in zip(e, lo_a)): c for e, c in a.terms.items()}
    bb = {tuple(x - y for x, y in zip(e, lo_b)): c for e, c in b.terms.items()}
    lm_b = max(bb)
    lc_b_inv = bb[lm_b].inverse()
    shift = tuple(x - y for x, y in zip(lo_a, lo_b))
    quot: dict = {}
    while rem:
        lm_r = max(rem)
        mono = tuple(x - y for x, y in zip(lm_r, lm_b))
        if any(e < 0 for e in mono):
            raise NotDivisible("Laurent division is not exact")
        c = rem[lm_r] * lc_b_inv
        quot[tuple(x + y for x, y in zip(mono, shift))] = c
        for eb, cb in bb.items():
            e = tuple(x + y for x, y in zip(mono, eb))
            s = rem.get(e)
            s = (-c * cb) if s is None else s - c * cb
            if s.is_zero():
                rem.pop(e, None)
            else:
                rem[e] = s
    return LaurentElement(a.field, quot, a.lattice, prune=False)


def weyl_act_laurent(sys, w, f: LaurentElement) -> LaurentElement:
    """Field automorphism x^lam -> x^(w lam); w is a WeylElement or a word."""
    act = w.act if hasattr(w, "act") else (lambda lam: sys.act_word(w, lam))
    return LaurentElement(f.field, {act(e): c for e, c in f.terms.items()},
                          f.lattice, prune=False)


# ---------------------------------------------------------------------------
# fractions over the rescaled lattice
# ---------------------------------------------------------------------------

class PmFraction:
    """Fraction of Laurent elements supported on the rescaled lattice.

    The denominator is held as a pooled multiset of normalized factors
    (constant term 1), plus the numerator absorbing all units.  ``den``
    expands the product on demand.
    """

    __slots__ = ("num", "facs")

    def __init__(self, num: LaurentElement, facs: dict | None = None):
        self.num = num
        self.facs = facs or {}
        if num.is_zero() and self.facs:
            self.facs = {}

    @classmethod
    def from_num_den(cls, num: LaurentElement, den: LaurentElement):
        if den.is_zero():
            raise DenominatorZero("zero denominator")
        out = cls(num)
        return out.div_laurent(den)

    @classmethod
    def zero_like(cls, num: LaurentElement):
        return cls(LaurentElement(num.field, {}, num.lattice))

    @property
    def den(self) -> LaurentElement:
        out = None
        for _, (f, mult) in self.facs.items():
            for _ in range(mult):
                out = f if out is None else out * f
        if out is None:
            rk = self.num.rank() if self.num.terms else 0
            return LaurentElement.one(self.num.field, rk, self.num.lattice)
        return out

    def _den_for(self, rank: int) -> LaurentElement:
        out = LaurentElement.one(self.num.field, rank, self.num.lattice)
        for _, (f, mult) in self.facs.items():
            for _ in range(mult):
                out = out * f
        return out

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "PmFraction") -> "PmFraction":
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        merged: dict = dict(self.facs)
        num_a, num_b = self.num, other.num
        for key, (f, mb) in other.facs.items():
            ma = merged.get(key, (f, 0))[1]
            if mb > ma:
                merged[key] = (f, mb)
        for key, (f, mult) in merged.items():
            short_a = mult - self.facs.get(key, (f, 0))[1]
            short_b = mult - other.facs.get(key, (f, 0))[1]
            for _ in range(short_a):
                num_a = num_a * f
            for _ in range(short_b):
                num_b = num_b * f
        out = PmFraction(num_a + num_b, merged)
        return out.cancel()

    def __sub__(self, other):
        return self + other.negate()

    def negate(self):
        return PmFraction(-self.num, dict(self.facs))

    def __mul__(self, other: "PmFraction") -> "PmFraction":
        facs = dict(self.facs)
        for key, (f, mult) in other.facs.items():
            have = facs.get(key)
            facs[key] = (f, mult + (have[1] if have else 0))
        out = PmFraction(self.num * other.num, facs)
        return out.cancel()

    def mul_laurent(self, f: LaurentElement) -> "PmFraction":
        return PmFraction(self.num * f, dict(self.facs)).cancel()

    def mul_scalar(self, c) -> "PmFraction":
        return PmFraction(self.num.scale(c), dict(self.facs))

    def shift(self, exponent) -> "PmFraction":
        return PmFraction(self.num.shift(exponent), dict(self.facs))

    def div_laurent(self, den: LaurentElement) -> "PmFraction":
        """Divide by a Laurent element, pooling it into the factor multiset."""
        if den.is_zero():
            raise DenominatorZero("zero denominator")
        lo, unit, norm = den.normalized_by_min()
        num = self.num.shift(tuple(-x for x in lo)).scale(unit.inverse())
        if len(norm.terms) == 1:
            # the divisor was a unit (monomial): fully absorbed
            return PmFraction(num, dict(self.facs))
        key = _factor_key(norm)
        facs = dict(self.facs)
        have = facs.get(key)
        facs[key] = (norm, (have[1] if have else 0) + 1)
        return PmFraction(num, facs).cancel()

    def cancel(self) -> "PmFraction":
        """Divide the numerator by any denominator factors that divide it."""
        if self.num.is_zero():
            return PmFraction(self.num)
        facs = dict(self.facs)
        num = self.num
        for key in list(facs):
            f, mult = facs[key]
            while mult > 0:
                try:
                    num = laurent_exact_div(num, f)
                except NotDivisible:
                    break
                mult -= 1
            if mult:
                facs[key] = (f, mult)
            else:
                del facs[key]
        return PmFraction(num, facs)

    def weyl(self, sys, w) -> "PmFraction":
        out = PmFraction(weyl_act_laurent(sys, w, self.num))
        for _, (f, mult) in self.facs.items():
            g = weyl_act_laurent(sys, w, f)
            for _ in range(mult):
                out = out.div_laurent(g)
        return out

    def eq(self, other: "PmFraction") -> bool:
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        a, b = _strip_common(self, other)
        rank = a.num.rank()
        return a.num * b._den_for(rank) == b.num * a._den_for(rank)

    def to_laurent(self) -> LaurentElement:
        """Exact quotient; raises NotDivisible if the fraction is not
        polynomial."""
        out = self.num
        for _, (f, mult) in self.facs.items():
            for _ in range(mult):
                out = laurent_exact_div(out, f)
        return out

    def __repr__(self):
        return f"PmFraction({self.num!r} / {self.den!r})"


def _factor_key(norm: LaurentElement):
    return frozenset((e, c.key()) for e, c in norm.terms.items())


def _strip_common(a: PmFraction, b: PmFraction):
    common = set(a.facs) & set(b.facs)
    if not common:
        return a, b
    fa, fb = dict(a.facs), dict(b.facs)
    for key in common:
        f, ma = fa[key]
        mb = fb[key][1]
        drop = min(ma, mb)
        if ma - drop:
            fa[key] = (f, ma - drop)
        else:
            del fa[key]
        if mb - drop:
            fb[key] = (f, mb - drop)
        else:
            del fb[key]
    return PmFraction(a.num, fa), PmFraction(b.num, fb)


# ---------------------------------------------------------------------------
# the coset decomposition of K(P)
# ---------------------------------------------------------------------------

class CosetRational:
    """Element of K(P) in canonical coset form: rep -> PmFraction."""

    __slots__ = ("sys", "parts")

    def __init__(self, sys, parts: dict | None = None):
        self.sys = sys
        self.parts = {rep: f for rep, f in (parts or {}).items()
                      if not f.is_zero()}

    @classmethod
    def from_laurent(cls, sys, f: LaurentElement) -> "CosetRational":
        parts: dict = {}
        for e, c in f.terms.items():
            rep = sys.r_map(e)
            pm = tuple(x - y for x, y in zip(e, rep))
            mono = LaurentElement.monomial(f.field, pm, c)
            if rep in parts:
                parts[rep] = parts[rep] + PmFraction(mono)
            else:
                parts[rep] = PmFraction(mono)
        return cls(sys, parts)

    @classmethod
    def monomial(cls, sys, field, exponent) -> "CosetRational":
        return cls.from_laurent(
            sys, LaurentElement.monomial(field, exponent))

    def is_zero(self) -> bool:
        return not self.parts

    def __add__(self, other: "CosetRational") -> "CosetRational":
        parts = dict(self.parts)
        for rep, f in other.parts.items():
            parts[rep] = parts[rep] + f if rep in parts else f
        return CosetRational(self.sys, parts)

    def __sub__(self, other):
        return self + other.negate()

    def negate(self):
        return CosetRational(self.sys,
                             {rep: f.negate() for rep, f in self.parts.items()})

    def mul_fraction(self, g: PmFraction) -> "CosetRational":
        return CosetRational(self.sys,
                             {rep: f * g for rep, f in self.parts.items()})

    def mul_laurent_pm(self, g: LaurentElement) -> "CosetRational":
        return CosetRational(self.sys,
                             {rep: f.mul_laurent(g)
                              for rep, f in self.parts.items()})

    def mul_scalar(self, c) -> "CosetRational":
        return CosetRational(self.sys,
                             {rep: f.mul_scalar(c)
                              for rep, f in self.parts.items()})

    def add_term(self, rep, frac: PmFraction):
        """Accumulate frac * x^rep, renormalizing rep to the transversal."""
        cano = self.sys.r_map(rep)
        pm = tuple(x - y for x, y in zip(rep, cano))
        if any(pm):
            frac = frac.shift(pm)
        if cano in self.parts:
            s = self.parts[cano] + frac
            if s.is_zero():
                del self.parts[cano]
            else:
                self.parts[cano] = s
        elif not frac.is_zero():
            self.parts[cano] = frac

    def weyl(self, w) -> "CosetRational":
        out = CosetRational(self.sys)
        for rep, f in self.parts.items():
            img = w.act(rep) if hasattr(w, "act") else self.sys.act_word(w, rep)
            out.add_term(img, f.weyl(self.sys, w))
        return out

    def eq(self, other: "CosetRational") -> bool:
        for rep in set(self.parts) | set(other.parts):
            a, b = self.parts.get(rep), other.parts.get(rep)
            if a is None:
                if not b.is_zero():
                    return False
            elif b is None:
                if not a.is_zero():
                    return False
            elif not a.eq(b):
                return False
        return True

    def to_laurent(self) -> LaurentElement:
        field = self.sys.field
        out = LaurentElement.zero(field)
        for rep, f in self.parts.items():
            out = out + f.to_laurent().shift(rep)
        return out

    def __repr__(self):
        return f"CosetRational({self.parts!r})"


def decompose(sys, num: LaurentElement, den: LaurentElement,
              cap: int = 256) -> CosetRational:
    """Canonical coset decomposition of num/den in K(P).

    Clears the denominator into K[P^m] coordinate by coordinate via the
    character-orbit norm (computed as a resultant), then splits the numerator
    across coset representatives.  ``cap`` bounds the coset group order since
    the norm multiplies degrees by it.
    """
    if den.is_zero():
        raise DenominatorZero("zero denominator")
    if sys.coset_order() > cap:
        raise CosetGroupTooLarge(
            f"|P/P^m| = {sys.coset_order()} exceeds cap {cap}")
    for i, m in enumerate(sys.m_simple):
        if m == 1:
            continue
        if all(e[i] % m == 0 for e in den.terms):
            continue
        norm = _char_orbit_norm(den, i, m)
        num = num * laurent_exact_div(norm, den)
        den = norm
    out = CosetRational(sys)
    base = PmFraction.from_num_den(
        LaurentElement.one(num.field, sys.rank), den)
    for e, c in num.terms.items():
        rep = sys.r_map(e)
        pm = tuple(x - y for x, y in zip(e, rep))
        mono = LaurentElement.monomial(num.field, pm, c)
        out.add_term(rep, base.mul_laurent(mono))
    return out


def _char_orbit_norm(den: LaurentElement, coord: int, m: int) -> LaurentElement:
    """Product of den over the order-m character orbit in coordinate ``coord``.

    Writing den = sum_s d_s with d_s collecting the monomials whose coord-th
    exponent is s mod m, the norm is the resultant of z^m - 1 and
    D(z) = sum_s d_s z^s, a Laurent element with rational coefficients whose
    support lies in the sublattice for this coordinate.
    """
    field = den.field
    rank = den.rank()
    strata: dict = {}
    for e, c in den.terms.items():
        s = e[coord] % m
        strata.setdefault(s, {})[e] = c
    coeffs = {s: LaurentElement(field, t, den.lattice, prune=False)
              for s, t in strata.items()}
    deg = max(coeffs)
    if deg == 0:
        # den already invariant; callers skip this case
        return den
    one = LaurentElement.one(field, rank)
    zero = LaurentElement.zero(field)
    size = m + deg
    rows = []
    # deg rows from z^m - 1
    fcoef = {0: -(one), m: one}
    for sh in range(deg):
        row = [zero] * size
        for d, c in fcoef.items():
            row[size - 1 - (d + sh)] = c
        rows.append(row)
    # m rows from D(z)
    for sh in range(m):
        row = [zero] * size
        for d, c in coeffs.items():
            row[size - 1 - (d + sh)] = c
        rows.append(row)
    det = bareiss_det(rows)
    if det.is_zero():
        raise DenominatorZero("character norm vanished")
    return det


def rational_eq(a: CosetRational, b: CosetRational) -> bool:
    return a.eq(b)
