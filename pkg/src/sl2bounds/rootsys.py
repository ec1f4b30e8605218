"""Root-system data for semisimple Lie algebras.

Conventions used throughout the package:

* Simple types are named by family letter (A..G) and rank, nodes numbered
  as in Bourbaki.
* Weights are stored in fundamental-weight coordinates: ``coords[i] =
  <mu, alpha_i_vee>``.
* Roots are stored in simple-root coordinates.
* The Cartan matrix is oriented so that ``A @ c`` gives the
  fundamental-weight coordinates of the root with simple-root coordinates
  ``c``; equivalently ``a[j][i] = <alpha_i, alpha_j_vee>``.
* The invariant form is normalized per simple block so short roots have
  squared length 2; the symmetrizers ``d[i] = (alpha_i, alpha_i)/2`` make
  ``diag(d) @ A`` symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count

import numpy as np

FAMILIES = ("A", "B", "C", "D", "E", "F", "G")

# minimal rank accepted per family
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3, "F": 4, "G": 2}

_POSROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
}
_EXCEPTIONAL_POSROOTS = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120,
                         ("F", 4): 24, ("G", 2): 6}

DEFAULT_ORBIT_CAP = 10**7


class RootSystemError(ValueError):
    """Invalid root-system input (bad family letter or rank)."""


@dataclass(frozen=True)
class SimpleComponent:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise RootSystemError(f"unknown family {self.family!r}")
        lo = _MIN_RANK.get(self.family)
        if self.family == "E":
            if self.rank not in (6, 7, 8):
                raise RootSystemError(f"E rank must be 6, 7 or 8, got {self.rank}")
        elif self.family == "F":
            if self.rank != 4:
                raise RootSystemError(f"F rank must be 4, got {self.rank}")
        elif self.family == "G":
            if self.rank != 2:
                raise RootSystemError(f"G rank must be 2, got {self.rank}")
        elif self.rank < lo:
            raise RootSystemError(
                f"{self.family} rank must be >= {lo}, got {self.rank}")

    @property
    def dim(self) -> int:
        """Dimension of the simple Lie algebra of this type."""
        n = self.rank
        if self.family == "A":
            return (n + 1) ** 2 - 1
        if self.family in ("B", "C"):
            return n * (2 * n + 1)
        if self.family == "D":
            return n * (2 * n - 1)
        if self.family == "E":
            return {6: 78, 7: 133, 8: 248}[n]
        if self.family == "F":
            return 52
        return 14  # G2

    @property
    def num_positive_roots(self) -> int:
        key = (self.family, self.rank)
        if key in _EXCEPTIONAL_POSROOTS:
            return _EXCEPTIONAL_POSROOTS[key]
        return _POSROOT_COUNT[self.family](self.rank)

    def __str__(self):
        return f"{self.family}{self.rank}"


def _simple_block(comp: SimpleComponent):
    """Return (cartan, d) for one simple component, Bourbaki numbering.

    cartan is oriented so cartan[j][i] = <alpha_i, alpha_j_vee>; d are the
    half squared lengths (short root length^2 = 2).
    """
    n = comp.rank
    fam = comp.family
    # symmetric Gram matrix S[i][j] = (alpha_i, alpha_j), then A = D^-1 S
    S = [[0] * n for _ in range(n)]
    d = [1] * n

    def chain(pairs):
        for i, j, v in pairs:
            S[i][j] = S[j][i] = v

    if fam == "A":
        for i in range(n):
            S[i][i] = 2
        chain([(i, i + 1, -1) for i in range(n - 1)])
    elif fam == "B":
        # alpha_1..alpha_{n-1} long, alpha_n short
        d = [2] * (n - 1) + [1]
        for i in range(n):
            S[i][i] = 2 * d[i]
        chain([(i, i + 1, -2) for i in range(n - 1)])
    elif fam == "C":
        # alpha_1..alpha_{n-1} short, alpha_n long
        d = [1] * (n - 1) + [2]
        for i in range(n):
            S[i][i] = 2 * d[i]
        chain([(i, i + 1, -1) for i in range(n - 2)])
        chain([(n - 2, n - 1, -2)])
    elif fam == "D":
        for i in range(n):
            S[i][i] = 2
        chain([(i, i + 1, -1) for i in range(n - 2)])
        chain([(n - 3, n - 1, -1)])
    elif fam == "E":
        for i in range(n):
            S[i][i] = 2
        # Bourbaki: chain 1-3-4-5-...-n, node 2 attached to node 4
        edges = [(0, 2), (2, 3), (1, 3)] + [(i, i + 1) for i in range(3, n - 1)]
        chain([(i, j, -1) for i, j in edges])
    elif fam == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short; double bond 2=>3
        d = [2, 2, 1, 1]
        for i in range(4):
            S[i][i] = 2 * d[i]
        chain([(0, 1, -2), (1, 2, -2), (2, 3, -1)])
    else:  # G2: alpha_1 short, alpha_2 long (so that dim L(omega_1) = 7)
        d = [1, 3]
        S = [[2, -3], [-3, 6]]

    cartan = [[S[i][j] // d[i] for j in range(n)] for i in range(n)]
    return cartan, d


@dataclass(frozen=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.coords))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return "(" + ",".join(map(str, self.coords)) + ")"


@dataclass(frozen=True, eq=False)
class RootSystem:
    components: tuple
    rank: int
    cartan: tuple          # rows: tuple of tuples of int
    symmetrizers: tuple    # d[i], positive int
    positive_roots: tuple  # each a tuple of simple-root coordinates
    dynkin_edges: tuple    # ((i, j, bond_multiplicity), ...) 0-indexed
    # derived arrays, filled in build()
    _np: dict = field(default_factory=dict, repr=False)

    @property
    def rho(self) -> Weight:
        return Weight((1,) * self.rank)

    @property
    def fingerprint(self) -> str:
        return "+".join(str(c) for c in self.components)

    @property
    def dim(self) -> int:
        return sum(c.dim for c in self.components)

    def summary(self) -> dict:
        """JSON-ready summary (used by the CLI describe command)."""
        return {
            "type": self.fingerprint,
            "rank": self.rank,
            "num_positive_roots": len(self.positive_roots),
            "dim": self.dim,
            "cartan": [list(row) for row in self.cartan],
            "symmetrizers": list(self.symmetrizers),
        }


def _positive_roots_closure(cartan, rank):
    """All positive roots in simple-root coordinates, by height closure.

    beta + alpha_i is a root iff p - <beta, alpha_i_vee> > 0 where p is the
    largest k with beta - k*alpha_i a root (root-string property).
    """
    A = np.array(cartan, dtype=np.int64)
    simple = [tuple(int(v) for v in np.eye(rank, dtype=np.int64)[i])
              for i in range(rank)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for beta in frontier:
            b = np.array(beta, dtype=np.int64)
            pair = A @ b  # pair[i] = <beta, alpha_i_vee>
            for i in range(rank):
                cand = list(beta)
                cand[i] += 1
                cand = tuple(cand)
                if cand in roots:
                    continue
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if down[i] < 0 or tuple(down) not in roots:
                        break
                    p += 1
                if p - pair[i] > 0:
                    roots.add(cand)
                    new.append(cand)
        frontier = new
    return sorted(roots, key=lambda c: (sum(c), c))


def _invert_rational(mat):
    """Exact inverse of a small integer matrix, as Fractions."""
    n = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(n)] +
           [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def build(components) -> RootSystem:
    """Construct the root system of a semisimple type.

    ``components`` is a list of SimpleComponent (or (family, rank) pairs).
    The Cartan matrix is block diagonal with Bourbaki numbering inside each
    block; positive roots are generated by height closure.
    """
    comps = tuple(c if isinstance(c, SimpleComponent) else SimpleComponent(*c)
                  for c in components)
    if not comps:
        raise RootSystemError("component list must be nonempty")
    rank = sum(c.rank for c in comps)
    cartan = [[0] * rank for _ in range(rank)]
    d = [0] * rank
    off = 0
    for comp in comps:
        blk, bd = _simple_block(comp)
        for i in range(comp.rank):
            d[off + i] = bd[i]
            for j in range(comp.rank):
                cartan[off + i][off + j] = blk[i][j]
        off += comp.rank

    roots = _positive_roots_closure(cartan, rank)
    expected = sum(c.num_positive_roots for c in comps)
    if len(roots) != expected:
        raise RootSystemError(
            f"positive-root closure produced {len(roots)} roots, "
            f"expected {expected}")

    edges = []
    for i in range(rank):
        for j in range(i + 1, rank):
            if cartan[i][j]:
                edges.append((i, j, cartan[i][j] * cartan[j][i]))

    rs = RootSystem(
        components=comps,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        symmetrizers=tuple(d),
        positive_roots=tuple(roots),
        dynkin_edges=tuple(edges),
    )
    A = np.array(cartan, dtype=np.int64)
    rootmat = np.array(roots, dtype=np.int64)           # (nroots, rank)
    rs._np["A"] = A
    rs._np["Ainv"] = _invert_rational(cartan)
    rs._np["AinvT"] = _invert_rational([list(r) for r in zip(*cartan)])
    rs._np["d"] = np.array(d, dtype=np.int64)
    rs._np["roots"] = rootmat
    rs._np["roots_wc"] = rootmat @ A.T                  # weight coords per root
    # (alpha, alpha) per root: sum_i c_i d_i <alpha, alpha_i_vee> d_i ... via
    # (alpha, alpha_i) = d_i * wc(alpha)_i
    rs._np["roots_norm"] = (rootmat * rs._np["d"] * rs._np["roots_wc"]).sum(axis=1)

    # fix of orientation required by the G2 labeling: dim L(omega_1) = 7
    off = 0
    for comp in comps:
        if comp.family == "G":
            lam = Weight(tuple(1 if i == off else 0 for i in range(rank)))
            if weyl_dimension(rs, lam) != 7:
                raise RootSystemError("G2 orientation check failed")
        off += comp.rank
    return rs


def root_to_weight_coords(rs: RootSystem, root) -> Weight:
    """Fundamental-weight coordinates of a vector given in simple-root
    coordinates (transpose-Cartan change of basis)."""
    c = np.asarray(root, dtype=np.int64)
    if c.shape != (rs.rank,):
        raise RootSystemError(f"expected vector of length {rs.rank}")
    return Weight(tuple(int(v) for v in rs._np["A"] @ c))


def weight_to_root_coords(rs: RootSystem, mu: Weight):
    """Simple-root coordinates of a weight, as exact Fractions."""
    Ainv = rs._np["Ainv"]
    return [sum(Ainv[i][j] * mu.coords[j] for j in range(rs.rank))
            for i in range(rs.rank)]


def inner_product(rs: RootSystem, mu: Weight, nu: Weight) -> Fraction:
    """Invariant form on weights, exact rational.

    (mu, nu) = sum_j c_j d_j mu_j where c = simple-root coordinates of nu.
    """
    c = weight_to_root_coords(rs, nu)
    d = rs.symmetrizers
    return sum((c[j] * d[j] * mu.coords[j] for j in range(rs.rank)),
               start=Fraction(0))


def simple_reflection(rs: RootSystem, j: int, mu: Weight) -> Weight:
    """s_j(mu) = mu - <mu, alpha_j_vee> * alpha_j, in weight coordinates."""
    m = mu.coords[j]
    if m == 0:
        return mu
    alpha_wc = rs._np["A"][:, j]  # weight coords of alpha_j
    return Weight(tuple(mu.coords[i] - m * int(alpha_wc[i])
                        for i in range(rs.rank)))


def dominant_representative(rs: RootSystem, mu: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit of mu."""
    cap = len(rs.positive_roots) * (sum(abs(c) for c in mu.coords) + 1) + 1
    cur = mu
    for _ in range(cap):
        j = next((i for i, c in enumerate(cur.coords) if c < 0), None)
        if j is None:
            return cur
        cur = simple_reflection(rs, j, cur)
    raise RootSystemError("dominant_representative failed to terminate")


def weyl_orbit(rs: RootSystem, mu: Weight, cap: int = DEFAULT_ORBIT_CAP):
    """Full Weyl orbit of a dominant weight, as a set of Weight."""
    if not mu.is_dominant:
        raise RootSystemError("weyl_orbit expects a dominant weight")
    seen = {mu.coords}
    frontier = [mu]
    while frontier:
        new = []
        for w in frontier:
            for j in range(rs.rank):
                im = simple_reflection(rs, j, w)
                if im.coords not in seen:
                    seen.add(im.coords)
                    new.append(im)
                    if len(seen) > cap:
                        raise RootSystemError("weyl_orbit cap exceeded")
        frontier = new
    return {Weight(c) for c in seen}


def weyl_dimension(rs: RootSystem, lam: Weight) -> int:
    """dim L(lambda) by the Weyl dimension formula, exact."""
    if not lam.is_dominant:
        raise RootSystemError("weyl_dimension expects a dominant weight")
    d = rs.symmetrizers
    num = 1
    den = 1
    for root in rs.positive_roots:
        top = sum(root[i] * d[i] * (lam.coords[i] + 1) for i in range(rs.rank))
        bot = sum(root[i] * d[i] for i in range(rs.rank))
        num *= top
        den *= bot
    dim, r = divmod(num, den)
    if r:
        raise RootSystemError("Weyl dimension product not integral")
    return dim
