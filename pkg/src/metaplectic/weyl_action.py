"""The deformed Weyl-group action on K(P) and everything built from it.

The action of a simple reflection on a coset term f x^lam (f rational over
the rescaled lattice) is

    sigma_i(f x^lam) = (1-k_i^2) x^{c alpha_i^m} / (1 - k_i^2 x^{alpha_i^m})
                         * (s_i f) x^lam
                     + k_i^2 g_{Q(alpha_i) - B(lam, alpha_i)}
                         * (1 - x^{-alpha_i^m}) / (1 - k_i^2 x^{alpha_i^m})
                         * (s_i f) x^{alpha_i + s_i lam},

with c the pairing of the lattice part of -lam with the rescaled coroot.
At n = 1 this collapses to the ordinary permutation action.  From sigma we
build the localized Hecke action tau (Demazure-Lusztig form), the
polynomial-preserving operators

    DL_i(f) = (1 - k_i^2 x^{alpha_i^m}) (f - x^{alpha_i^m} sigma_i f)
                  / (1 - x^{alpha_i^m})  -  f,

the symmetrizer/antisymmetrizer sums, and the Whittaker-type sums with
their two independent evaluation paths.
"""

from __future__ import annotations

from .errors import InternalMismatch, NotDominant
from .group_algebra import (CosetRational, LaurentElement, PmFraction,
                            weyl_act_laurent)
from .hecke import k_of_simple, k_pow_of_simple, pi_T, pi_T_inv
from .roots import MetaRootSystem, Root, Weight


def c_function(sys: MetaRootSystem, root: Root) -> PmFraction:
    """(1 - k_alpha^2 x^{alpha^m}) / (1 - x^{alpha^m})."""
    field = sys.field
    one = LaurentElement.one(field, sys.rank)
    mono = LaurentElement.monomial(field, root.rescaled_wc)
    k2 = field.k_pow(root.size, 2)
    return PmFraction.from_num_den(one - mono.scale(k2), one - mono)


def sigma_simple(sys: MetaRootSystem, i: int,
                 f: CosetRational) -> CosetRational:
    field = sys.field
    y = sys.size_of_simple(i)
    k2 = field.k_pow(y, 2)
    am = sys.simple_root_m_wc(i)
    one = LaurentElement.one(field, sys.rank)
    x_am = LaurentElement.monomial(field, am)
    x_am_neg = LaurentElement.monomial(field, tuple(-a for a in am))
    den = one - x_am.scale(k2)
    alpha_wc = sys.simple_root_wc(i)
    qa_i = sys.simple_root(i).qval
    m_i = sys.m_simple[i]

    out = CosetRational(sys)
    for rep, frac in f.parts.items():
        sfrac = frac.weyl(sys, (i,))
        # first term: stays on the coset of rep
        c = (-rep[i] - (-rep[i]) % m_i) // m_i
        t1 = sfrac.mul_scalar(field.one() - k2)
        if c:
            t1 = t1.shift(tuple(c * a for a in am))
        out.add_term(rep, t1.div_laurent(den))
        # second term: moves to the coset of alpha_i + s_i rep
        g = field.g(qa_i - sys.b_simple(rep, i), y)
        t2 = sfrac.mul_laurent(one - x_am_neg).mul_scalar(k2 * g)
        carrier = tuple(a + b for a, b in zip(alpha_wc, sys.reflect(i, rep)))
        out.add_term(carrier, t2.div_laurent(den))
    return out


def sigma_word(sys: MetaRootSystem, word, f: CosetRational) -> CosetRational:
    """sigma of a Weyl word, rightmost reflection applied first."""
    for i in reversed(tuple(word)):
        f = sigma_simple(sys, i, f)
    return f


def sigma_monomial(sys: MetaRootSystem, word, lam: Weight) -> CosetRational:
    return sigma_word(sys, word,
                      CosetRational.monomial(sys, sys.field, lam))


def tau_T(sys: MetaRootSystem, i: int, f: CosetRational) -> CosetRational:
    """tau(T_i) = k_i + k_i^{-1} c_i (sigma_i - 1)."""
    k = k_of_simple(sys, i)
    k_inv = k_pow_of_simple(sys, i, -1)
    c_i = c_function(sys, sys.simple_root(i))
    diff = sigma_simple(sys, i, f) - f
    return f.mul_scalar(k) + diff.mul_fraction(c_i).mul_scalar(k_inv)


def tau_word(sys: MetaRootSystem, word, f: CosetRational) -> CosetRational:
    for i in reversed(tuple(word)):
        f = tau_T(sys, i, f)
    return f


def tau_via_pi(sys: MetaRootSystem, i: int,
               f: LaurentElement) -> LaurentElement:
    """The polynomial form of tau: conjugate the Hecke action by the
    half-sum shift x^{rho - rho^m}."""
    shift = sys.rho_minus_rho_m
    inner = f.shift(tuple(-a for a in shift))
    return pi_T(sys, i, inner).shift(shift)


def dl_T(sys: MetaRootSystem, i: int, f: CosetRational) -> CosetRational:
    field = sys.field
    y = sys.size_of_simple(i)
    one = LaurentElement.one(field, sys.rank)
    x_am = LaurentElement.monomial(field, sys.simple_root_m_wc(i))
    num = f - sigma_simple(sys, i, f).mul_laurent_pm(x_am)
    ratio = num.mul_fraction(
        PmFraction.from_num_den(one - x_am.scale(field.k_pow(y, 2)),
                                one - x_am))
    return ratio - f


def dl_word(sys: MetaRootSystem, word, f: CosetRational) -> CosetRational:
    for i in reversed(tuple(word)):
        f = dl_T(sys, i, f)
    return f


def dl_monomial_poly(sys: MetaRootSystem, word, lam: Weight) -> LaurentElement:
    """DL word applied to x^lam, returned as a Laurent polynomial
    (raises NotDivisible if the result were not polynomial)."""
    out = dl_word(sys, word, CosetRational.monomial(sys, sys.field, lam))
    return out.to_laurent()


def dl_via_pi(sys: MetaRootSystem, i: int,
              f: LaurentElement) -> LaurentElement:
    """Independent route to DL_i on polynomials through the Hecke action:
    -k_i x^rho T_i^{-1} x^{-rho}, used as a cross-check."""
    rho = sys.rho
    inner = f.shift(tuple(-a for a in rho))
    out = pi_T_inv(sys, i, inner).shift(rho)
    return out.scale(-k_of_simple(sys, i))


# ---------------------------------------------------------------------------
# symmetrizers
# ---------------------------------------------------------------------------

def k_of_word(sys: MetaRootSystem, word):
    """Product of the Hecke parameters along a reduced word."""
    out = sys.field.one()
    for i in word:
        out = out * k_of_simple(sys, i)
    return out


def weyl_k_norm(sys: MetaRootSystem, sign: int = 1):
    """The normalizer sum of k_w^{+-2} over the Weyl group."""
    out = sys.field.zero()
    for el in sys.weyl_elements():
        out = out + k_of_word(sys, el.word) ** (2 * sign)
    return out


def symmetrizer_apply(sys: MetaRootSystem, sign: int,
                      f: CosetRational) -> CosetRational:
    """Apply tau of the (anti)symmetrizer: sum of k_w T_w for sign +1,
    of (-1)^{l(w)} k_w^{-1} T_w for sign -1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    total = CosetRational(sys)
    for el in sys.weyl_elements():
        kw = k_of_word(sys, el.word)
        coeff = kw if sign == 1 else kw.inverse()
        if sign == -1 and el.length % 2:
            coeff = -coeff
        total = total + tau_word(sys, el.word, f).mul_scalar(coeff)
    return total


# ---------------------------------------------------------------------------
# Whittaker sums
# ---------------------------------------------------------------------------

def whittaker_paths(sys: MetaRootSystem, lam: Weight):
    """The two evaluation paths of the Whittaker sum, as coset rationals.

    Path one sums DL_w over the Weyl group; path two multiplies the
    alternating sigma-sum by the product of c-functions and the inversion
    monomials.  They agree as an operator identity.
    """
    if not sys.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    w0 = sys.longest_element()
    start_exp = w0.act(lam)
    field = sys.field
    start = CosetRational.monomial(sys, field, start_exp)

    path_dl = CosetRational(sys)
    for el in sys.weyl_elements():
        path_dl = path_dl + dl_word(sys, el.word, start)

    c_prod = None
    for rt in sys.positive_roots:
        c = c_function(sys, rt)
        c_prod = c if c_prod is None else c_prod * c
    path_sigma = CosetRational(sys)
    for el in sys.weyl_elements():
        term = sigma_word(sys, el.word, start)
        inv_word = tuple(reversed(el.word))
        shift = [0] * sys.rank
        for rt in sys.inversion_set(inv_word):
            for a, x in enumerate(rt.rescaled_wc):
                shift[a] += x
        term = term.mul_laurent_pm(
            LaurentElement.monomial(field, tuple(shift)))
        if el.length % 2:
            term = term.negate()
        path_sigma = path_sigma + term
    path_sigma = path_sigma.mul_fraction(c_prod)
    return path_dl, path_sigma


def whittaker(sys: MetaRootSystem, lam: Weight) -> LaurentElement:
    """The Whittaker sum, computed along both paths and cross-checked."""
    path_dl, path_sigma = whittaker_paths(sys, lam)
    if not path_dl.eq(path_sigma):
        raise InternalMismatch(
            "the two Whittaker evaluation paths disagree")
    return path_dl.to_laurent()


def symmetric_hl(sys: MetaRootSystem, lam: Weight) -> LaurentElement:
    """The symmetrizer applied to x^lam: the Hall-Littlewood-flavored
    companion of the Whittaker sum (polynomial by construction)."""
    if not sys.is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    f = CosetRational.monomial(sys, sys.field, lam)
    return symmetrizer_apply(sys, 1, f).to_laurent()
