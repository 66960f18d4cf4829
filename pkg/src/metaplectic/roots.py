"""Root systems with their metaplectic rescaling data.

Weights are stored as integer tuples in the fundamental-weight basis, so the
i-th coordinate of a weight lam is the pairing with the i-th simple coroot.
Roots are generated from the Cartan matrix by closing the simple roots under
simple reflections; each root caries its root-basis coordinates (for
positivity tests) and weight-basis coordinates (for the reflection action).

The normalization fixes the squared length of short roots to 2, and the
W-invariant quadratic form is kappa/2 times the squared norm, so its value on
a root is an integer multiple of kappa.  The metaplectic integers are

    m(alpha) = n / gcd(n, Q(alpha)),

and the rescaled system consists of the roots m(alpha) alpha.  Length classes
(used to select Hecke and representation parameters) refer to the rescaled
system, with the convention that a single-length system counts as all long.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import GroupTooLarge, UnsupportedType
from .scalars import GroundField

Weight = tuple[int, ...]

# Cartan matrices A[i][j] = (alpha_j, alpha_i^vee) and relative squared
# half-lengths d (short root = 1), Bourbaki node order.
_CARTAN: dict = {}


def _chain(r, entries=()):
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2
        if i + 1 < r:
            a[i][i + 1] = a[i + 1][i] = -1
    for (i, j, v) in entries:
        a[i][j] = v
    return tuple(tuple(row) for row in a)


for _r in range(1, 5):
    _CARTAN[("A", _r)] = (_chain(_r), (1,) * _r)
for _r in range(2, 5):
    # last node short; the short coroot row carries the -2
    _CARTAN[("B", _r)] = (_chain(_r, [(_r - 1, _r - 2, -2)]),
                          (2,) * (_r - 1) + (1,))
for _r in range(2, 5):
    _CARTAN[("C", _r)] = (_chain(_r, [(_r - 2, _r - 1, -2)]),
                          (1,) * (_r - 1) + (2,))
_CARTAN[("D", 4)] = (tuple(map(tuple, [[2, -1, 0, 0], [-1, 2, -1, -1],
                                       [0, -1, 2, 0], [0, -1, 0, 2]])),
                     (1, 1, 1, 1))
_CARTAN[("G", 2)] = (((2, -3), (-1, 2)), (1, 3))
_CARTAN[("F", 4)] = (tuple(map(tuple, [[2, -1, 0, 0], [-1, 2, -1, 0],
                                       [0, -2, 2, -1], [0, 0, -1, 2]])),
                     (2, 2, 1, 1))

WEYL_ORDER_CAP = 1152


@dataclass(frozen=True)
class Root:
    """A root with precomputed metaplectic data."""
    rc: tuple          # root-basis coordinates
    wc: Weight         # weight-basis coordinates
    norm2: int         # squared length (short root has 2)
    qval: int          # value of the quadratic form, kappa * norm2 / 2
    m: int             # metaplectic rescaling factor
    size: str          # length class of the rescaled root: "sh" or "lg"
    coroot: tuple      # (varpi_i, alpha^vee) so the pairing is a dot product

    @property
    def rescaled_wc(self) -> Weight:
        return tuple(self.m * c for c in self.wc)

    def pair(self, lam: Weight) -> int:
        """(lam, alpha^vee)."""
        return sum(c * x for c, x in zip(self.coroot, lam))


@dataclass(frozen=True)
class WeylElement:
    word: tuple        # reduced word of simple reflection indices (0-based)
    matrix: tuple      # action on weight coordinates, rows
    length: int

    def act(self, lam: Weight) -> Weight:
        return tuple(sum(r * x for r, x in zip(row, lam))
                     for row in self.matrix)


def _mat_mul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(len(b)))
                       for j in range(len(b[0]))) for i in range(len(a)))


def _fraction_inverse(mat):
    """Gauss-Jordan inverse of a small integer matrix over Q."""
    r = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(r)] +
           [Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    for col in range(r):
        piv = next(i for i in range(col, r) if aug[i][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(r):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return tuple(tuple(row[r:]) for row in aug)


class MetaRootSystem:
    """Irreducible root system plus metaplectic structure (n, kappa)."""

    def __init__(self, cartan_type: str, rank: int, n: int = 1,
                 kappa: int = 1, lattice: str = "weight",
                 epsilon_sh: int = 1, epsilon_lg: int = 1,
                 simplify: str = "content", weyl_cap: int = WEYL_ORDER_CAP):
        key = (cartan_type.upper(), rank)
        if key not in _CARTAN:
            raise UnsupportedType(f"no support for type {cartan_type}{rank}")
        if n < 1 or kappa < 1:
            raise ValueError("n and kappa must be positive integers")
        if lattice not in ("weight", "root"):
            raise ValueError("lattice selector must be 'weight' or 'root'")
        self.cartan_type, self.rank = key
        self.n = n
        self.kappa = kappa
        self.lattice = lattice
        self.weyl_cap = weyl_cap
        self.cartan, self.d = _CARTAN[key]
        r = rank

        self._cartan_inv = _fraction_inverse(self.cartan)
        # Gram matrix of fundamental weights: (varpi_i, varpi_j)
        self._gram = tuple(tuple(self._cartan_inv[i][j] * self.d[i]
                                 for j in range(r)) for i in range(r))

        self.simple_reflections = tuple(
            tuple(tuple((1 if j2 == j else 0) - (self.cartan[j][i] if j2 == i else 0)
                        for j2 in range(r)) for j in range(r))
            for i in range(r))

        self._generate_roots()

        self.m_simple = tuple(self.root_of_wc(self.simple_root_wc(i)).m
                              for i in range(r))
        self.rho = (1,) * r
        self.rho_m = tuple(self.m_simple)
        self.rho_minus_rho_m = tuple(1 - m for m in self.m_simple)

        sizes = {rt.size for rt in self.positive_roots}
        classes = ("sh", "lg") if sizes == {"sh", "lg"} else ("lg",)
        self.field = GroundField(n, classes=classes, style="weyl",
                                 epsilon={"sh": epsilon_sh, "lg": epsilon_lg},
                                 simplify=simplify)
        self._weyl = None

    # -- construction ---------------------------------------------------------

    def _generate_roots(self):
        r = self.rank
        simple_rcs = [tuple(int(i == j) for j in range(r)) for i in range(r)]
        seen = set(simple_rcs)
        frontier = list(simple_rcs)
        while frontier:
            nxt = []
            for rc in frontier:
                for i in range(r):
                    pairing = sum(rc[k] * self.cartan[i][k] for k in range(r))
                    new = tuple(c - (pairing if k == i else 0)
                                for k, c in enumerate(rc))
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
            frontier = nxt

        roots = []
        for rc in seen:
            if all(c >= 0 for c in rc):
                roots.append(self._build_root(rc))
        # sort by height then lexicographically, for reproducibility
        roots.sort(key=lambda rt: (sum(rt.rc), rt.rc))
        norms_m = {rt.m * rt.m * rt.norm2 for rt in roots}
        big = max(norms_m)
        finished = []
        for rt in roots:
            size = "lg" if len(norms_m) == 1 or rt.m * rt.m * rt.norm2 == big \
                else "sh"
            finished.append(Root(rt.rc, rt.wc, rt.norm2, rt.qval, rt.m, size,
                                 rt.coroot))
        self.positive_roots = tuple(finished)
        self._root_by_wc = {}
        for rt in self.positive_roots:
            self._root_by_wc[rt.wc] = rt
            neg = self._negate_root(rt)
            self._root_by_wc[neg.wc] = neg

    def _build_root(self, rc):
        r = self.rank
        wc = tuple(sum(self.cartan[j][k] * rc[k] for k in range(r))
                   for j in range(r))
        norm2 = sum(rc[k] * rc[l] * self.d[k] * self.cartan[k][l]
                    for k in range(r) for l in range(r))
        qval = self.kappa * norm2 // 2
        m = self.n // gcd(self.n, qval)
        coroot = tuple(2 * self.d[i] * rc[i] // norm2 for i in range(r))
        return Root(rc, wc, norm2, qval, m, "lg", coroot)

    def _negate_root(self, rt: Root) -> Root:
        return Root(tuple(-c for c in rt.rc), tuple(-c for c in rt.wc),
                    rt.norm2, rt.qval, rt.m, rt.size,
                    tuple(-c for c in rt.coroot))

    # -- basic queries ---------------------------------------------------------

    def simple_root_wc(self, i: int) -> Weight:
        return tuple(self.cartan[j][i] for j in range(self.rank))

    def simple_root_m_wc(self, i: int) -> Weight:
        m = self.m_simple[i]
        return tuple(m * c for c in self.simple_root_wc(i))

    def simple_root(self, i: int) -> Root:
        return self.root_of_wc(self.simple_root_wc(i))

    def root_of_wc(self, wc: Weight) -> Root:
        return self._root_by_wc[tuple(wc)]

    def is_positive_root_wc(self, wc) -> bool:
        rt = self._root_by_wc.get(tuple(wc))
        return rt is not None and all(c >= 0 for c in rt.rc)

    def size_of_simple(self, i: int) -> str:
        return self.simple_root(i).size

    def reflect(self, i: int, lam: Weight) -> Weight:
        c = lam[i]
        if not c:
            return tuple(lam)
        col = self.cartan
        return tuple(x - c * col[j][i] for j, x in enumerate(lam))

    def act_word(self, word, lam: Weight) -> Weight:
        """Apply s_{i_1} ... s_{i_l} to lam, rightmost factor first."""
        for i in reversed(word):
            lam = self.reflect(i, lam)
        return tuple(lam)

    def inner(self, lam: Weight, mu: Weight) -> Fraction:
        g = self._gram
        return sum(Fraction(lam[i]) * mu[j] * g[i][j]
                   for i in range(self.rank) for j in range(self.rank))

    def bilinear_B(self, lam: Weight, mu: Weight) -> Fraction:
        """kappa times the inner product; integral against roots."""
        return self.kappa * self.inner(lam, mu)

    def b_simple(self, lam: Weight, i: int) -> int:
        """B(lam, alpha_i) = Q(alpha_i) (lam, alpha_i^vee), an integer."""
        return self.simple_root(i).qval * lam[i]

    # -- metaplectic structure -------------------------------------------------

    def r_map(self, lam: Weight) -> Weight:
        return tuple(c % m for c, m in zip(lam, self.m_simple))

    def q_map(self, lam: Weight) -> Weight:
        return tuple(c - (c % m) for c, m in zip(lam, self.m_simple))

    def in_Pm(self, lam: Weight, verify_bilinear: bool = False) -> bool:
        """Membership in the rescaled weight lattice.

        With ``verify_bilinear`` the coordinate test is cross-checked against
        the equivalent characterization B(lam, alpha) = 0 mod n over all
        roots.
        """
        coord = all(c % m == 0 for c, m in zip(lam, self.m_simple))
        if verify_bilinear:
            bil = all(
                (rt.qval * rt.pair(lam)) % self.n == 0
                for rt in self.positive_roots)
            if bil != coord:
                raise AssertionError(
                    "the two lattice characterizations disagree")
        return coord

    def in_C(self, lam: Weight) -> bool:
        return all(abs(rt.pair(lam)) <= rt.m for rt in self.positive_roots)

    def is_dominant(self, lam: Weight) -> bool:
        return all(c >= 0 for c in lam)

    def in_lattice(self, lam: Weight, which: str | None = None) -> bool:
        which = which or self.lattice
        if which == "weight":
            return True
        e = self.root_coords(lam)
        return all(x.denominator == 1 for x in e)

    def root_coords(self, lam: Weight):
        inv = self._cartan_inv
        return tuple(sum(inv[i][j] * lam[j] for j in range(self.rank))
                     for i in range(self.rank))

    def coset_order(self) -> int:
        out = 1
        for m in self.m_simple:
            out *= m
        return out

    def coset_representatives(self):
        """Canonical transversal of P/P^m: images of the remainder map."""
        reps = [()]
        for m in self.m_simple:
            reps = [r + (c,) for r in reps for c in range(m)]
        return [tuple(r) for r in reps]

    def enumerate_C(self):
        box = [range(-m, m + 1) for m in self.m_simple]
        out = []

        def rec(prefix):
            if len(prefix) == self.rank:
                if self.in_C(prefix):
                    out.append(tuple(prefix))
                return
            for c in box[len(prefix)]:
                rec(prefix + (c,))
        rec(())
        return out

    # -- the Weyl group ---------------------------------------------------------

    def weyl_elements(self) -> tuple:
        """All Weyl group elements with reduced words, BFS order by length."""
        if self._weyl is None:
            r = self.rank
            ident = tuple(tuple(int(i == j) for j in range(r))
                          for i in range(r))
            elements = {ident: ()}
            frontier = [ident]
            while frontier:
                nxt = []
                for mat in frontier:
                    word = elements[mat]
                    for i in range(r):
                        new = _mat_mul(self.simple_reflections[i], mat)
                        if new not in elements:
                            if len(elements) >= self.weyl_cap:
                                raise GroupTooLarge(
                                    f"Weyl group exceeds cap {self.weyl_cap}")
                            elements[new] = (i,) + word
                            nxt.append(new)
                frontier = nxt
            out = [WeylElement(w, m, len(w)) for m, w in elements.items()]
            out.sort(key=lambda el: (el.length, el.word))
            self._weyl = tuple(out)
        return self._weyl

    def weyl_order(self) -> int:
        return len(self.weyl_elements())

    def longest_element(self) -> WeylElement:
        return max(self.weyl_elements(), key=lambda el: el.length)

    def inversion_set(self, word) -> list:
        """Positive roots sent negative by the element with this word."""
        out = []
        for rt in self.positive_roots:
            img = self.act_word(word, rt.wc)
            if not self.is_positive_root_wc(img):
                out.append(rt)
        return out

    def with_field(self, field) -> "MetaRootSystem":
        """Shallow copy bound to another coefficient field (e.g. a random
        specialization); root data and Weyl cache are shared read-only."""
        import copy
        clone = copy.copy(self)
        clone.field = field
        return clone

    def specialized(self, rng=None) -> "MetaRootSystem":
        from .scalars import SpecializedField
        f = self.field
        spec = SpecializedField(f.n, classes=f.classes, epsilon=f.epsilon,
                                style="weyl", rng=rng)
        return self.with_field(spec)

    def braid_order(self, i: int, j: int) -> int:
        """Order of s_i s_j from the Cartan integers."""
        prod = self.cartan[i][j] * self.cartan[j][i]
        return {0: 2, 1: 3, 2: 4, 3: 6}[prod]

    def orbit_descend_to_C(self, lam: Weight, max_steps: int = 10_000) -> Weight:
        """Representative of the affine orbit of lam inside C intersected
        with the dominant cone, found by reflection/translation descent."""
        lam = tuple(lam)
        for _ in range(max_steps):
            neg = next((i for i, c in enumerate(lam) if c < 0), None)
            if neg is not None:
                lam = self.reflect(neg, lam)
                continue
            big = next((rt for rt in self.positive_roots
                        if rt.pair(lam) > rt.m), None)
            if big is None:
                return lam
            lam = tuple(x - y for x, y in zip(lam, big.rescaled_wc))
        raise RuntimeError("orbit descent did not terminate")


@lru_cache(maxsize=None)
def _cached_system(type_rank: str, n: int, kappa: int, lattice: str,
                   eps_sh: int, eps_lg: int, simplify: str):
    ct, rank = type_rank[0], int(type_rank[1:])
    return MetaRootSystem(ct, rank, n=n, kappa=kappa, lattice=lattice,
                          epsilon_sh=eps_sh, epsilon_lg=eps_lg,
                          simplify=simplify)


def build_root_system(spec: str, n: int = 1, kappa: int = 1,
                      lattice: str = "weight", epsilon_sh: int = 1,
                      epsilon_lg: int = 1,
                      simplify: str = "content") -> MetaRootSystem:
    """Build (with caching) from a short specification string like "B2"."""
    spec = spec.strip().upper()
    if len(spec) < 2 or not spec[1:].isdigit():
        raise UnsupportedType(f"cannot parse root system spec {spec!r}")
    return _cached_system(spec, n, kappa, lattice, epsilon_sh, epsilon_lg,
                          simplify)
