"""The reflection representation and the metaplectic Hecke action on K[P].

Two actions live here.  The reflection representation deforms the permutation
action of W on the weight-indexed basis v_mu by the three-case rule keyed to
the sign of the pairing with the simple coroot.  The polynomial action sends

    T_i . x^lam  =  (k_i - k_i^{-1}) nabla_i(x^lam) + p_i(lam) x^{s_i lam},

where nabla_i is the metaplectic divided difference (a finite geometric sum
determined by the rescaled-lattice part of lam) and p_i depends on lam only
through its class mod P^m.  The normalization scaffolding c (a product of
h-parameters over positive roots) and the derived d_i are what makes the
quotient construction behind this action consistent; the testable identity
is d_i = p_i on the fundamental set C.
"""

from __future__ import annotations

from .errors import NotInC
from .group_algebra import LaurentElement
from .roots import MetaRootSystem, Weight


def k_of_simple(sys: MetaRootSystem, i: int):
    """Hecke parameter of the i-th simple root (class of the rescaled root)."""
    return sys.field.k(sys.size_of_simple(i))


def k_pow_of_simple(sys: MetaRootSystem, i: int, e: int):
    return sys.field.k_pow(sys.size_of_simple(i), e)


# ---------------------------------------------------------------------------
# reflection representation on the weight-indexed vector space
# ---------------------------------------------------------------------------

class WeightVector:
    """Finitely supported map weight -> scalar (basis vectors v_lam)."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms: dict | None = None, prune: bool = True):
        self.field = field
        if terms and prune:
            terms = {w: c for w, c in terms.items() if not c.is_zero()}
        self.terms = terms or {}

    @classmethod
    def basis(cls, field, lam: Weight):
        return cls(field, {tuple(lam): field.one()}, prune=False)

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return WeightVector(self.field, out, prune=False)

    def __sub__(self, other):
        return self + other.scale(self.field.from_int(-1))

    def scale(self, c):
        if c.is_zero():
            return WeightVector(self.field)
        return WeightVector(self.field,
                            {w: v * c for w, v in self.terms.items()},
                            prune=False)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if set(self.terms) != set(other.terms):
            return False
        return all(c == other.terms[w] for w, c in self.terms.items())

    __hash__ = None

    def __repr__(self):
        return f"WeightVector({self.terms!r})"


def refl_T(sys: MetaRootSystem, i: int, v: WeightVector) -> WeightVector:
    """Action of T_i in the reflection representation."""
    field = v.field
    k = k_of_simple(sys, i)
    out = WeightVector(field)
    for mu, c in v.terms.items():
        pairing = mu[i]
        if pairing > 0:
            out = out + WeightVector(field, {sys.reflect(i, mu): c},
                                     prune=False)
        elif pairing == 0:
            out = out + WeightVector(field, {mu: c * k}, prune=False)
        else:
            kdiff = k - k_pow_of_simple(sys, i, -1)
            out = out + WeightVector(
                field, {mu: c * kdiff, sys.reflect(i, mu): c})
    return out


# ---------------------------------------------------------------------------
# metaplectic divided differences and the polynomial action
# ---------------------------------------------------------------------------

def nabla_bar(sys: MetaRootSystem, i: int, f: LaurentElement) -> LaurentElement:
    """Metaplectic divided difference, as a monomial-wise geometric sum.

    On the rescaled lattice it restricts to the classical divided difference
    for the rescaled simple root.
    """
    field = f.field
    m_i = sys.m_simple[i]
    step = sys.simple_root_m_wc(i)
    out: dict = {}

    def add(e, c):
        s = out.get(e)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(e, None)
        else:
            out[e] = s

    for lam, c in f.terms.items():
        d = (lam[i] - lam[i] % m_i) // m_i
        if d > 0:
            neg = -c
            e = lam
            for _ in range(d):
                e = tuple(x - y for x, y in zip(e, step))
                add(e, neg)
        elif d < 0:
            e = lam
            for j in range(-d):
                add(e, c)
                if j + 1 < -d:
                    e = tuple(x + y for x, y in zip(e, step))
    return LaurentElement(field, out, f.lattice, prune=False)


def p_factor(sys: MetaRootSystem, i: int, lam: Weight):
    """p_i of the class of lam mod P^m:  -k_i g_{-B(lam, alpha_i)}."""
    y = sys.size_of_simple(i)
    b = sys.b_simple(lam, i)
    return -(sys.field.k(y) * sys.field.g(-b, y))


def pi_T(sys: MetaRootSystem, i: int, f: LaurentElement) -> LaurentElement:
    """The Hecke generator acting on K[P]."""
    field = f.field
    k = k_of_simple(sys, i)
    kdiff = k - k_pow_of_simple(sys, i, -1)
    out = nabla_bar(sys, i, f).scale(kdiff)
    extra: dict = {}
    for lam, c in f.terms.items():
        e = sys.reflect(i, lam)
        v = c * p_factor(sys, i, lam)
        s = extra.get(e)
        s = v if s is None else s + v
        if s.is_zero():
            extra.pop(e, None)
        else:
            extra[e] = s
    return out + LaurentElement(field, extra, f.lattice, prune=False)


def pi_T_inv(sys: MetaRootSystem, i: int, f: LaurentElement) -> LaurentElement:
    """T_i^{-1} = T_i - (k_i - k_i^{-1}), from the quadratic relation."""
    k = k_of_simple(sys, i)
    kdiff = k - k_pow_of_simple(sys, i, -1)
    return pi_T(sys, i, f) - f.scale(kdiff)


def pi_word(sys: MetaRootSystem, word, f: LaurentElement) -> LaurentElement:
    """Apply T_{i_1} ... T_{i_l}, rightmost factor first."""
    for i in reversed(tuple(word)):
        f = pi_T(sys, i, f)
    return f


def classical_nabla(sys: MetaRootSystem, i: int,
                    f: LaurentElement) -> LaurentElement:
    """(f - s_i f)/(1 - x^{alpha_i^m}) for f supported on P^m (exact)."""
    from .group_algebra import laurent_exact_div, weyl_act_laurent
    field = f.field
    one = LaurentElement.one(field, sys.rank)
    num = f - weyl_act_laurent(sys, (i,), f)
    den = one - LaurentElement.monomial(field, sys.simple_root_m_wc(i))
    if num.is_zero():
        return num
    return laurent_exact_div(num, den)


# ---------------------------------------------------------------------------
# normalization scaffolding: h-parameters, c, and d
# ---------------------------------------------------------------------------

def c_normalizer(sys: MetaRootSystem, lam: Weight):
    """Product over positive roots of the h-parameter at B(lam, alpha)."""
    if not sys.in_C(lam):
        raise NotInC(f"{lam} is outside the fundamental set C")
    out = sys.field.one()
    for rt in sys.positive_roots:
        out = out * sys.field.h(rt.qval * rt.pair(lam), rt.size)
    return out


def d_factor(sys: MetaRootSystem, i: int, lam: Weight):
    """The four-case normalizer quotient attached to a simple reflection."""
    if not sys.in_C(lam):
        raise NotInC(f"{lam} is outside the fundamental set C")
    k = k_of_simple(sys, i)
    ratio = c_normalizer(sys, lam) / c_normalizer(sys, sys.reflect(i, lam))
    pairing = lam[i]
    m_i = sys.m_simple[i]
    if pairing == 0:
        return k * ratio
    if pairing == m_i:
        return k - k_pow_of_simple(sys, i, -1) + ratio
    return ratio
