"""Classical root systems (exact rational vectors) and angle representations
of signed graphs via Gram matrices.

Membership and verification are exact; only the eigendecomposition-based
construction uses floating point, behind an explicit tolerance (1e-8).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import numpy as np

from .core import EdgeKind, SgError, SignedGraph
from .matrices import adjacency_matrix

TOL = 1e-8

MODES = ("gramian", "antigramian", "angleonly")


@dataclass(frozen=True)
class RootSystem:
    name: str
    n: int
    vectors: frozenset  # tuples of Fraction

    def __len__(self):
        return len(self.vectors)


def _e(n, i, c=1):
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return tuple(v)


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def _negv(v):
    return tuple(-a for a in v)


def root_system(name, n=None) -> RootSystem:
    """A(n-1) in R^n, B(n), C(n), D(n), or E8 (n forced to 8)."""
    name = name.upper()
    if name == "E8":
        n = 8
    if n is None or n < 1:
        raise SgError("root system needs n >= 1")
    vs = set()
    if name == "A":
        for i in range(n):
            for j in range(n):
                if i != j:
                    vs.add(_add(_e(n, j), _negv(_e(n, i))))
        return RootSystem("A", n, frozenset(vs))
    if name in ("B", "C", "D", "E8"):
        dim = 8 if name == "E8" else n
        for i in range(dim):
            for j in range(i + 1, dim):
                for si, sj in product((1, -1), repeat=2):
                    vs.add(_add(_e(dim, i, si), _e(dim, j, sj)))
        if name == "B":
            for i in range(n):
                vs.add(_e(n, i, 1))
                vs.add(_e(n, i, -1))
        elif name == "C":
            for i in range(n):
                vs.add(_e(n, i, 2))
                vs.add(_e(n, i, -2))
        elif name == "E8":
            half = Fraction(1, 2)
            for signs in product((1, -1), repeat=8):
                if signs.count(-1) % 2 == 0:
                    vs.add(tuple(half * s for s in signs))
        return RootSystem(name, dim if name == "E8" else n, frozenset(vs))
    raise SgError(f"unknown root system {name!r}")


# ---------------------------------------------------------------------------
# angle representations


@dataclass(frozen=True)
class AngleRepresentation:
    """rho: one vector per vertex (tuples, rational or float); nu > 0;
    mode in {gramian, antigramian, angleonly}."""

    rho: tuple
    nu: object
    mode: str = "gramian"

    def __post_init__(self):
        if self.mode not in MODES:
            raise SgError(f"unknown mode {self.mode!r}")
        if not self.nu > 0:
            raise SgError("nu must be positive")
        dims = {len(v) for v in self.rho}
        if len(dims) > 1:
            raise SgError("representation vectors have mixed dimensions")

    @property
    def dimension(self):
        return len(self.rho[0]) if self.rho else 0


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _simple_adjacency(g: SignedGraph):
    if any(e.kind is not EdgeKind.LINK for e in g.edges):
        raise SgError("angle representations need a simple link graph")
    a = adjacency_matrix(g)
    for i in range(g.n):
        for j in range(g.n):
            if i != j and abs(a[i][j]) > 1:
                raise SgError("angle representations need a simple graph")
    return a


def verify_representation(g: SignedGraph, rep: AngleRepresentation) -> bool:
    """Exact check of the defining dot-product conditions.

    angleonly compares normalized dot products through their squares (so the
    norms never need square roots); the two Gram modes compare unnormalized
    dot products against a_vw + nu on the diagonal (negated adjacency for
    antigramian)."""
    a = _simple_adjacency(g)
    if len(rep.rho) != g.n:
        raise SgError("one vector per vertex required")
    flip = -1 if rep.mode == "antigramian" else 1
    nu = Fraction(rep.nu) if not isinstance(rep.nu, float) else rep.nu
    exact = all(
        not isinstance(x, float) for v in rep.rho for x in v
    ) and not isinstance(rep.nu, float)

    def eq(x, y):
        return x == y if exact else abs(x - y) <= TOL

    for v in range(g.n):
        for w in range(v, g.n):
            d = _dot(rep.rho[v], rep.rho[w])
            if rep.mode == "angleonly":
                if v == w:
                    if d == 0:
                        return False
                    continue
                target = Fraction(flip * a[v][w], 1) / nu
                nv = _dot(rep.rho[v], rep.rho[v])
                nw = _dot(rep.rho[w], rep.rho[w])
                if not eq(d * d, target * target * nv * nw):
                    return False
                if (d > 0) != (target > 0) and not eq(d, 0) and target != 0:
                    return False
                if eq(d, 0) != (target == 0):
                    return False
            else:
                target = flip * a[v][w] + (nu if v == w else 0)
                if not eq(d, target):
                    return False
    return True


def construct_gramian(g: SignedGraph, nu, anti=False, tol=TOL):
    """Factor A + nu*I (or -A + nu*I) as a Gram matrix by eigendecomposition.

    Returns None when the smallest eigenvalue of (possibly negated) A is
    below -nu - tol; otherwise the vectors span dimension rank(A + nu*I)."""
    a = np.array(_simple_adjacency(g), dtype=float)
    if a.size == 0:
        return AngleRepresentation((), nu, "antigramian" if anti else "gramian")
    if anti:
        a = -a
    m = a + float(nu) * np.eye(g.n)
    w, vecs = np.linalg.eigh(m)
    if w.min() < -tol:
        return None
    w = np.clip(w, 0.0, None)
    keep = [i for i in range(len(w)) if w[i] > tol]
    rho = tuple(
        tuple(vecs[v, i] * math.sqrt(w[i]) for i in keep) for v in range(g.n)
    )
    return AngleRepresentation(rho, nu, "antigramian" if anti else "gramian")


def _rational_sqrt(x: Fraction):
    """sqrt(x) as a Fraction if x is a perfect rational square, else None."""
    if x < 0:
        return None
    p, q = x.numerator, x.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def normalize(rep: AngleRepresentation) -> AngleRepresentation:
    """Rescale every vector to norm sqrt(nu) (exactly when the scale factor
    is rational, else in floating point)."""
    out = []
    for v in rep.rho:
        sq = _dot(v, v)
        if sq == 0:
            raise SgError("cannot normalize a zero vector")
        ratio = None
        if not any(isinstance(x, float) for x in v) and not isinstance(rep.nu, float):
            ratio = _rational_sqrt(Fraction(rep.nu) / Fraction(sq))
        if ratio is None:
            ratio = math.sqrt(float(rep.nu) / float(sq))
            out.append(tuple(float(x) * ratio for x in v))
        else:
            out.append(tuple(x * ratio for x in v))
    return AngleRepresentation(tuple(out), rep.nu, rep.mode)


def membership_in_root_system(rep, rs: RootSystem) -> bool:
    """True iff every vector (up to sign) lies in the root system, exactly.

    rep may be an AngleRepresentation or a bare iterable of vectors."""
    vectors = rep.rho if isinstance(rep, AngleRepresentation) else tuple(rep)
    for v in vectors:
        if len(v) != rs.n:
            raise SgError(f"dimension mismatch: {len(v)} vs {rs.n}")
        t = tuple(Fraction(x) for x in v)
        if t not in rs.vectors and _negv(t) not in rs.vectors:
            return False
    return True


def pairwise_angle_cosines(rs: RootSystem):
    """Set of exact squared-cosine values (with sign) between distinct,
    non-parallel norm-2-squared vectors; used for the angle catalog checks."""
    vs = sorted(rs.vectors)
    out = set()
    for u, v in combinations(vs, 2):
        if _dot(u, u) != 2 or _dot(v, v) != 2:
            continue
        if u == _negv(v):
            continue
        d = _dot(u, v)
        out.add(Fraction(d, 2))
    return out
