"""Routing k-faces through unused vertices: multipoints, the homology oracle, collisions and phi."""
from __future__ import annotations

import hashlib
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from . import gfp
from .chains import Chain, ChainMap, apply_chain_map, cycle_space_basis, simplex_boundary, z_cycle
from .errors import NotFound, ParameterError
from .simplex import Simplex, lex_k_faces, skeleton

HomologyClass = tuple[int, ...]


@dataclass(frozen=True)
class Multipoint:
    """An affine GF(p)-combination of unused vertices (coefficients sum to 1)."""

    terms: tuple[tuple[int, int], ...]
    p: int

    def __init__(self, coefficients: Mapping[int, int] | Iterable[tuple[int, int]], p: int):
        items = coefficients.items() if isinstance(coefficients, Mapping) else coefficients
        acc: dict[int, int] = defaultdict(int)
        for u, c in items:
            acc[int(u)] += int(c)
        terms = tuple(sorted((u, c % p) for u, c in acc.items() if c % p))
        if sum(c for _, c in terms) % p != 1 % p:
            raise ParameterError(f"multipoint coefficients sum to {sum(c for _, c in terms) % p}, not 1 (mod {p})")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "p", p)

    @classmethod
    def point(cls, u: int, p: int) -> "Multipoint":
        return cls({u: 1}, p)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(u for u, _ in self.terms)

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def disjoint(self, other: "Multipoint") -> bool:
        return not set(self.support) & set(other.support)

    def to_json(self) -> dict:
        return {"p": self.p, "terms": [list(t) for t in self.terms]}

    @classmethod
    def from_json(cls, data: dict) -> "Multipoint":
        return cls([tuple(t) for t in data["terms"]], data["p"])


def affine_combination(mus: Sequence[Multipoint], weights: Sequence[int]) -> Multipoint:
    """sum_i weights_i * mu_i; the weights must sum to 1 mod p."""
    p = mus[0].p
    acc: dict[int, int] = defaultdict(int)
    for mu, w in zip(mus, weights):
        for u, c in mu.terms:
            acc[u] += w * c
    return Multipoint(acc, p)


# -- the homology oracle -----------------------------------------------------------

@dataclass
class HomologyOracle:
    """A linear functional on k-chains of the k-skeleton of the n-simplex into GF(p)^b.

    Restricted to cycles it stands in for the map induced in homology by a map
    into a manifold with k-th Betti number b. Values on k-simplices are either
    explicit (missing simplices count as 0) or derived deterministically from
    the seed by keyed hashing, so nothing is materialized for large n.
    """

    s: int
    k: int
    n: int
    b: int
    p: int
    seed: int | None = None
    values: dict[Simplex, HomologyClass] | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        gfp.check_prime(self.p)
        if self.b < 0:
            raise ParameterError(f"b must be >= 0, got {self.b}")
        if self.n <= self.s:
            raise ParameterError(f"need n > s, got n={self.n}, s={self.s}")
        if self.values is not None:
            self.values = {tuple(sorted(sm)): tuple(int(x) % self.p for x in v) for sm, v in self.values.items()}
            for sm, v in self.values.items():
                if len(v) != self.b or len(sm) != self.k + 1:
                    raise ParameterError(f"bad explicit oracle entry {sm}: {v}")

    @property
    def unused(self) -> range:
        return range(self.s + 2, self.n + 2)

    @property
    def m(self) -> int:
        return comb(self.s + 1, self.k + 1)

    def simplex_value(self, sm: Simplex) -> HomologyClass:
        if self.b == 0:
            return ()
        if self.values is not None:
            return self.values.get(tuple(sm), (0,) * self.b)
        v = self._cache.get(sm)
        if v is None:
            h = hashlib.blake2b(repr((self.seed, sm)).encode(), digest_size=8 * self.b).digest()
            v = tuple(int.from_bytes(h[8 * i:8 * i + 8], "little") % self.p for i in range(self.b))
            self._cache[sm] = v
        return v

    def evaluate(self, c: Chain) -> HomologyClass:
        if c.p != self.p:
            raise ParameterError(f"chain over GF({c.p}) given to an oracle over GF({self.p})")
        if c.terms and c.degree != self.k:
            raise ParameterError(f"oracle evaluates {self.k}-chains, got degree {c.degree}")
        acc = [0] * self.b
        for sm, coeff in c.terms.items():
            for i, x in enumerate(self.simplex_value(sm)):
                acc[i] += coeff * x
        return tuple(a % self.p for a in acc)

    def generator(self, sigma: Sequence[int], u: int) -> HomologyClass:
        """Class of z(sigma, u)."""
        return self.evaluate(z_cycle(sigma, u, self.p))

    def tau_class(self, tau: Sequence[int]) -> HomologyClass:
        """Class of the boundary of a (k+1)-face tau."""
        return self.evaluate(simplex_boundary(tuple(sorted(tau)), self.p))

    def to_json(self) -> dict:
        out = {"seed": self.seed, "p": self.p, "b": self.b, "s": self.s, "k": self.k, "n": self.n}
        if self.values is not None:
            out["values"] = [[list(sm), list(v)] for sm, v in sorted(self.values.items())]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "HomologyOracle":
        values = data.get("values")
        if values is not None:
            values = {tuple(sm): tuple(v) for sm, v in values}
        return cls(data["s"], data["k"], data["n"], data["b"], data["p"], data.get("seed"), values)


def random_oracle(s: int, k: int, n: int, b: int, p: int, seed: int) -> HomologyOracle:
    return HomologyOracle(s, k, n, b, p, seed=seed)


def zero_vector(o: HomologyOracle) -> HomologyClass:
    return (0,) * o.b


# -- multipoints and the v-map ---------------------------------------------------------

def z_multi(sigma: Sequence[int], mu: Multipoint) -> Chain:
    """sum over u of lambda_u * z(sigma, u)."""
    if set(mu.support) & set(sigma):
        raise ParameterError(f"support of {mu} meets {tuple(sigma)}")
    acc: dict[Simplex, int] = defaultdict(int)
    for u, lam in mu.terms:
        for sm, c in z_cycle(sigma, u, mu.p):
            acc[sm] += lam * c
    return Chain(len(sigma) - 1, mu.p, acc)


def v_map(o: HomologyOracle, mu: Multipoint) -> list[HomologyClass]:
    """The classes of z(sigma_i, mu) for the k-faces sigma_1..sigma_m of the s-simplex."""
    return [o.evaluate(z_multi(sigma, mu)) for sigma in lex_k_faces(skeleton(o.s, o.k))]


def v_point(o: HomologyOracle, u: int) -> tuple[int, ...]:
    """v(u) flattened to one vector of length m*b."""
    out: list[int] = []
    for sigma in lex_k_faces(skeleton(o.s, o.k)):
        out.extend(o.generator(sigma, u))
    return tuple(out)


def pigeonhole_points(o: HomologyOracle, U: Iterable[int] | None = None, m: int | None = None) -> list[int]:
    """m distinct vertices of U sharing the same v-value.

    Scans U in increasing order; the first value class to reach m members wins.
    """
    U = sorted(o.unused if U is None else U)
    m = o.m if m is None else m
    buckets: dict[tuple, list[int]] = defaultdict(list)
    for u in U:
        bucket = buckets[v_point(o, u)]
        bucket.append(u)
        if len(bucket) == m:
            return bucket
    raise NotFound(f"no {m} vertices among {len(U)} share a v-value")


def affine_dim(values: Sequence[Sequence[int]], p: int) -> int:
    if not values:
        return 0
    return gfp.affine_rank(np.array(values, dtype=np.int64).reshape(len(values), -1), p)


def dim_v_image(o: HomologyOracle, U: Iterable[int] | None = None) -> int:
    """Dimension of the affine image of the multipoint space under v."""
    U = sorted(o.unused if U is None else U)
    return affine_dim([v_point(o, u) for u in U], o.p)


# -- collisions -------------------------------------------------------------------------

def _greedy_affine_basis(cands: Sequence[int], vals: Mapping[int, np.ndarray], p: int) -> list[int]:
    target = affine_dim([vals[u] for u in cands], p)
    basis = [cands[0]]
    for u in cands[1:]:
        if len(basis) - 1 == target:
            break
        if affine_dim([vals[x] for x in basis] + [vals[u]], p) == len(basis):
            basis.append(u)
    return basis


def _common_point(groups: Sequence[Sequence[int]], vals: Mapping[int, np.ndarray], width: int, p: int) -> np.ndarray:
    eqs, rhs = [], []
    for group in groups:
        pts = np.array([vals[u] for u in group], dtype=np.int64).reshape(len(group), width)
        normals = gfp.nullspace((pts[1:] - pts[0]) % p, p, ncols=width)
        for y in normals:
            eqs.append(y)
            rhs.append(int(y @ pts[0]) % p)
    if not eqs:
        return np.zeros(width, dtype=np.int64)
    sol = gfp.solve(np.array(eqs, dtype=np.int64).reshape(len(eqs), width), rhs, p)
    if sol is None:
        raise AssertionError("affine hulls do not meet; greedy bases are not nested")
    return gfp.lex_least(*sol, p)


def find_collisions(
    psi: Callable[[int], Sequence[int]] | Mapping[int, Sequence[int]],
    U: Iterable[int],
    r: int,
    p: int,
) -> list[Multipoint]:
    """r pairwise disjoint multipoints with a common psi-value.

    psi is an affine map on multipoints, given by its values on the vertices
    of U. Peels off greedy affine bases I_r, I_{r-1}, ... of what is left of
    U, then writes the lexicographically least common point of their affine
    hulls as an affine combination over each of them.
    """
    gfp.check_prime(p)
    U = sorted(U)
    if r < 1 or not U:
        raise ParameterError("need r >= 1 and a nonempty U")
    get = psi.__getitem__ if isinstance(psi, Mapping) else psi
    vals = {u: np.array(get(u), dtype=np.int64).reshape(-1) % p for u in U}
    width = len(vals[U[0]])
    d = affine_dim([vals[u] for u in U], p)
    if len(U) < (d + 1) * (r - 1) + 1:
        raise ParameterError(f"|U| = {len(U)} < (dim+1)(r-1)+1 = {(d + 1) * (r - 1) + 1}")
    groups = []
    remaining = list(U)
    for _ in range(r):
        basis = _greedy_affine_basis(remaining, vals, p)
        groups.append(basis)
        used = set(basis)
        remaining = [u for u in remaining if u not in used]
    a = _common_point(groups, vals, width, p)
    out = []
    for group in groups:
        lam = gfp.affine_coefficients([vals[u] for u in group], a, p)
        out.append(Multipoint({u: int(c) for u, c in zip(group, lam)}, p))
    return out


def evaluate_affine(psi, mu: Multipoint) -> tuple[int, ...]:
    get = psi.__getitem__ if isinstance(psi, Mapping) else psi
    acc = None
    for u, lam in mu.terms:
        v = np.array(get(u), dtype=np.int64).reshape(-1)
        acc = lam * v if acc is None else acc + lam * v
    return tuple(int(x) % mu.p for x in acc)


def collision_problems(psi, mus: Sequence[Multipoint], U: Iterable[int] | None = None) -> list[str]:
    """Independent post-check for find_collisions: disjoint supports, equal values."""
    problems = []
    allowed = set(U) if U is not None else None
    for i, j in combinations(range(len(mus)), 2):
        if not mus[i].disjoint(mus[j]):
            problems.append(f"multipoints {i} and {j} share support")
    if allowed is not None:
        for i, mu in enumerate(mus):
            if not set(mu.support) <= allowed:
                problems.append(f"multipoint {i} leaves U")
    values = {evaluate_affine(psi, mu) for mu in mus}
    if len(values) > 1:
        problems.append(f"{len(values)} distinct values")
    return problems


# -- Kneser coloring -------------------------------------------------------------------

@dataclass(frozen=True)
class KneserColoring:
    s: int
    k: int
    faces: tuple[Simplex, ...]
    colors: dict[int, int]  # 1-based face index -> color

    def color_of(self, face: Sequence[int]) -> int:
        return self.colors[self.faces.index(tuple(face)) + 1]

    @property
    def num_colors(self) -> int:
        return len(set(self.colors.values()))


def kneser_color(s: int, k: int) -> KneserColoring:
    """Color k-faces by their smallest vertex, lumping the last 2k+1 vertices into one color."""
    if s < 2 * k + 1:
        raise ParameterError(f"need s >= 2k+1, got s={s}, k={k}")
    faces = tuple(lex_k_faces(skeleton(s, k)))
    cut = s - 2 * k
    colors = {i: (f[0] if f[0] <= cut else cut + 1) for i, f in enumerate(faces, 1)}
    return KneserColoring(s, k, faces, colors)


# -- the chain map phi -----------------------------------------------------------------

def _lower_faces(s: int, k: int) -> list[Simplex]:
    return [f for j in range(k) for f in combinations(range(1, s + 2), j + 1)]


def build_phi_weak(o: HomologyOracle, s: int, k: int, points: Sequence[int]) -> ChainMap:
    """phi(sigma_i) = sigma_i + (-1)^k z(sigma_i, u_i); identity below degree k."""
    faces = lex_k_faces(skeleton(s, k))
    if len(points) != len(faces):
        raise ParameterError(f"need {len(faces)} points, got {len(points)}")
    if len(set(points)) != len(points):
        raise ParameterError("routing points must be pairwise distinct")
    if set(points) & set(range(1, s + 2)):
        raise ParameterError("routing points must be unused vertices")
    p = o.p
    images = {f: Chain.of(f, p) for f in _lower_faces(s, k)}
    sign = (-1) ** k
    for sigma, u in zip(faces, points):
        images[sigma] = Chain.of(sigma, p) + z_cycle(sigma, u, p) * sign
    return ChainMap(images, p, "phi")


def build_phi_strong(
    o: HomologyOracle, s: int, k: int, multipoints: Sequence[Multipoint], coloring: KneserColoring
) -> ChainMap:
    """phi(sigma_i) = sigma_i + (-1)^k z(sigma_i, mu_c(i)), with multipoints indexed by color 1..r."""
    for a, b in combinations(range(len(multipoints)), 2):
        if not multipoints[a].disjoint(multipoints[b]):
            raise ParameterError(f"multipoints {a + 1} and {b + 1} are not disjoint")
    used = set(range(1, s + 2))
    for mu in multipoints:
        if set(mu.support) & used:
            raise ParameterError("multipoint support meets the s-simplex")
    p = o.p
    images = {f: Chain.of(f, p) for f in _lower_faces(s, k)}
    sign = (-1) ** k
    for i, sigma in enumerate(coloring.faces, 1):
        mu = multipoints[coloring.colors[i] - 1]
        images[sigma] = Chain.of(sigma, p) + z_multi(sigma, mu) * sign
    return ChainMap(images, p, "phi")


def tau_faces(s: int, k: int) -> list[Simplex]:
    return list(combinations(range(1, s + 2), k + 2))


def triviality_classes(phi: ChainMap, o: HomologyOracle, s: int, k: int) -> dict[Simplex, HomologyClass]:
    """Class of phi(d tau) for every (k+1)-face tau of the s-simplex."""
    return {tau: o.evaluate(apply_chain_map(phi, simplex_boundary(tau, phi.p))) for tau in tau_faces(s, k)}


def verify_triviality(phi: ChainMap, o: HomologyOracle, s: int, k: int) -> bool:
    zero = zero_vector(o)
    return all(v == zero for v in triviality_classes(phi, o, s, k).values())


def kills_all_cycles(m: ChainMap, o: HomologyOracle, s: int, k: int) -> bool:
    """o(m(z)) = 0 for a basis z of the k-cycles of the k-skeleton of the s-simplex."""
    zero = zero_vector(o)
    return all(o.evaluate(apply_chain_map(m, z)) == zero for z in cycle_space_basis(skeleton(s, k), k, m.p))


def phi_support_problems(phi: ChainMap, s: int, k: int) -> list[tuple[Simplex, Simplex]]:
    """Pairs of disjoint faces whose phi-images share a vertex."""
    faces = [f for f in phi.generators if len(f) <= k + 1]
    verts = {f: phi[f].vertices() for f in faces}
    return [
        (a, b)
        for a, b in combinations(faces, 2)
        if not set(a) & set(b) and verts[a] & verts[b]
    ]
