"""Root systems, metaplectic rescaling, and the Weyl group enumeration."""

import random
from math import gcd

import pytest

from metaplectic.errors import GroupTooLarge, UnsupportedType
from metaplectic.roots import build_root_system, MetaRootSystem

CLASSICAL = [("A1", 1, 2), ("A2", 3, 6), ("A3", 6, 24), ("A4", 10, 120),
             ("B2", 4, 8), ("B3", 9, 48), ("B4", 16, 384),
             ("C3", 9, 48), ("C4", 16, 384), ("D4", 12, 192),
             ("G2", 6, 12), ("F4", 24, 1152)]


@pytest.mark.parametrize("spec,npos,order", CLASSICAL)
def test_counts_and_orders(spec, npos, order):
    s = build_root_system(spec)
    assert len(s.positive_roots) == npos
    assert s.weyl_order() == order
    assert s.longest_element().length == npos


def test_unsupported_type():
    with pytest.raises(UnsupportedType):
        build_root_system("H3")
    with pytest.raises(UnsupportedType):
        build_root_system("E6")


def test_weyl_cap():
    s = MetaRootSystem("F", 4, weyl_cap=100)
    with pytest.raises(GroupTooLarge):
        s.weyl_elements()


def test_metaplectic_m():
    # n=1 forces m = 1 everywhere
    s = build_root_system("A2", n=1)
    assert all(rt.m == 1 for rt in s.positive_roots)
    # B2, n=2: short roots have Q=1 -> m=2, long have Q=2 -> m=1
    s = build_root_system("B2", n=2)
    assert {(rt.norm2, rt.m) for rt in s.positive_roots} == {(2, 2), (4, 1)}
    # A2, n=3: gcd(3, 1) = 1 for every root
    s = build_root_system("A2", n=3)
    assert all(rt.m == 3 for rt in s.positive_roots)
    assert s.m_simple == (3, 3)


def test_m_is_weyl_invariant():
    for spec, n, kappa in [("B2", 2, 1), ("G2", 3, 1), ("B3", 4, 2)]:
        s = build_root_system(spec, n=n, kappa=kappa)
        for el in s.weyl_elements():
            for rt in s.positive_roots:
                img = s._root_by_wc[el.act(rt.wc)]
                assert img.m == rt.m


def test_bilinear_form():
    # B(lam, alpha)/Q(alpha) = (lam, alpha^vee)
    for spec, n, kappa in [("A2", 1, 1), ("B2", 2, 1), ("G2", 2, 3)]:
        s = build_root_system(spec, n=n, kappa=kappa)
        rng = random.Random(0)
        for _ in range(10):
            lam = tuple(rng.randint(-3, 3) for _ in range(s.rank))
            for rt in s.positive_roots:
                assert s.bilinear_B(lam, rt.wc) == rt.qval * rt.pair(lam)
    # B(0, mu) = 0
    s = build_root_system("A2")
    assert s.bilinear_B((0, 0), (5, -2)) == 0
    # (varpi_i, alpha_i^vee) = 1
    assert s.bilinear_B((1, 0), s.simple_root_wc(0)) == \
        s.simple_root(0).qval


def test_relform_rescaled_pairing():
    # B(lam, alpha^m) = lcm(n, Q(alpha)) (lam, alpha^vee), sampled on B2
    s = build_root_system("B2", n=2, kappa=1)
    rng = random.Random(1)
    for _ in range(10):
        lam = tuple(rng.randint(-4, 4) for _ in range(2))
        for rt in s.positive_roots:
            lcm = s.n * rt.qval // gcd(s.n, rt.qval)
            assert s.bilinear_B(lam, rt.rescaled_wc) == lcm * rt.pair(lam)


def test_r_q_decomposition():
    a1 = build_root_system("A1", n=2)
    assert a1.r_map((0,)) == (0,) and a1.q_map((0,)) == (0,)
    assert a1.r_map((3,)) == (1,) and a1.q_map((3,)) == (2,)
    assert a1.r_map((-1,)) == (1,) and a1.q_map((-1,)) == (-2,)
    # lam = q + r and q in P^m, over a grid
    for spec, n in [("A2", 3), ("B2", 2), ("G2", 2)]:
        s = build_root_system(spec, n=n)
        mmax = max(s.m_simple)
        for a in range(-2 * mmax, 2 * mmax + 1):
            for b in range(-2 * mmax, 2 * mmax + 1):
                lam = (a, b)
                q, r = s.q_map(lam), s.r_map(lam)
                assert tuple(x + y for x, y in zip(q, r)) == lam
                assert s.in_Pm(q)
                assert all(0 <= c < m for c, m in zip(r, s.m_simple))


def test_pm_membership_both_characterizations():
    for spec, n in [("A2", 3), ("B2", 2), ("B2", 3), ("G2", 2)]:
        s = build_root_system(spec, n=n)
        mmax = max(s.m_simple)
        for a in range(-2 * mmax, 2 * mmax + 1):
            for b in range(-2 * mmax, 2 * mmax + 1):
                # raises if the coordinate and bilinear tests disagree
                s.in_Pm((a, b), verify_bilinear=True)


def test_pm_membership_examples():
    s = build_root_system("A2", n=3)
    assert s.in_Pm((3, 0))
    assert not s.in_Pm((1, 0))
    b2 = build_root_system("B2", n=2)
    # the long-node fundamental weight pairs oddly with a short coroot
    long_node = next(i for i in range(2) if b2.simple_root(i).norm2 == 4)
    short_node = 1 - long_node
    lam = tuple(1 if i == long_node else 0 for i in range(2))
    assert b2.m_simple[short_node] == 2
    assert b2.in_Pm(lam, verify_bilinear=True) == (
        all(lam[i] % b2.m_simple[i] == 0 for i in range(2)))


def test_C_membership():
    a2 = build_root_system("A2", n=1)
    assert a2.in_C((0, 0))
    assert a2.in_C((1, 0))                      # minuscule
    assert not a2.in_C(a2.simple_root_wc(0))    # pairing 2 > 1
    # C contains a complete set of coset representatives of P/P^m
    for spec, n in [("A1", 2), ("A2", 3), ("B2", 2)]:
        s = build_root_system(spec, n=n)
        covered = {s.r_map(lam) for lam in s.enumerate_C()}
        assert covered == set(s.coset_representatives())


def test_weyl_enumeration_lengths():
    a2 = build_root_system("A2")
    lengths = sorted(el.length for el in a2.weyl_elements())
    # length generating function 1 + 2t + 2t^2 + t^3
    assert lengths == [0, 1, 1, 2, 2, 3]
    b2 = build_root_system("B2")
    assert b2.weyl_order() == 8
    assert b2.longest_element().length == 4
    # words are reduced: length equals inversion count
    for s in (a2, b2):
        for el in s.weyl_elements():
            assert len(s.inversion_set(el.word)) == el.length


def test_rho_reflections():
    for spec in ("A2", "B2", "G2"):
        s = build_root_system(spec, n=2)
        for i in range(s.rank):
            assert s.reflect(i, s.rho) == tuple(
                a - b for a, b in zip(s.rho, s.simple_root_wc(i)))
            assert s.reflect(i, s.rho_m) == tuple(
                a - b for a, b in zip(s.rho_m, s.simple_root_m_wc(i)))


def test_orbit_descent():
    rng = random.Random(7)
    for spec, n in [("A1", 2), ("A2", 3), ("B2", 2)]:
        s = build_root_system(spec, n=n)
        for _ in range(8):
            lam = tuple(rng.randint(-4, 4) for _ in range(s.rank))
            rep = s.orbit_descend_to_C(lam)
            assert s.in_C(rep) and s.is_dominant(rep)
            # constant along the affine orbit
            for el in s.weyl_elements():
                mu = el.act(lam)
                for rt in s.positive_roots[:2]:
                    nu = tuple(x + 2 * y for x, y in zip(mu, rt.rescaled_wc))
                    assert s.orbit_descend_to_C(nu) == rep


def test_lattice_membership():
    a2 = build_root_system("A2")
    assert a2.in_lattice(a2.simple_root_wc(0), "root")
    assert not a2.in_lattice((1, 0), "root")
    assert a2.in_lattice((1, 0), "weight")
