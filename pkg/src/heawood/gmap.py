"""Integer lifts of multipoints and the simplicial map from D into the k-skeleton of the n-simplex."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .chains import Chain, ChainMap, chain_map_differences, compose_chain_maps
from .errors import ParameterError
from .routing import KneserColoring, Multipoint
from .simplex import Simplex
from .subdivision import GeometricSubdivision


@dataclass(frozen=True)
class IntegerLift:
    """Integer weights kappa_u summing to exactly 1, congruent to a multipoint mod p."""

    weights: tuple[tuple[int, int], ...]
    pivot: int

    @property
    def total(self) -> int:
        return sum(abs(w) for _, w in self.weights)

    def as_dict(self) -> dict[int, int]:
        return dict(self.weights)

    def to_json(self) -> dict:
        return {"pivot": self.pivot, "weights": [list(w) for w in self.weights]}

    @classmethod
    def from_json(cls, data: dict) -> "IntegerLift":
        return cls(tuple(tuple(w) for w in data["weights"]), data["pivot"])


def lift_multipoint(mu: Multipoint) -> IntegerLift:
    """Read coefficients as integers in 0..p-1 and fix the smallest support vertex so the sum is 1.

    The total |kappa| is then odd, since it is congruent to the sum mod 2.
    """
    if not mu.terms:
        raise ParameterError("cannot lift a multipoint with empty support")
    pivot = mu.support[0]
    rest = {u: c for u, c in mu.terms if u != pivot}
    weights = dict(rest)
    weights[pivot] = 1 - sum(rest.values())
    lift = IntegerLift(tuple(sorted((u, w) for u, w in weights.items() if w)), pivot)
    assert sum(w for _, w in lift.weights) == 1 and lift.total % 2 == 1
    return lift


@dataclass(frozen=True)
class SimplicialVertexMap:
    assignment: dict[int, int]

    def __getitem__(self, v: int) -> int:
        return self.assignment[v]

    def image(self, face: Sequence[int]) -> set[int]:
        return {self.assignment[v] for v in face}

    def to_json(self) -> dict:
        return {str(v): t for v, t in sorted(self.assignment.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "SimplicialVertexMap":
        return cls({int(v): int(t) for v, t in data.items()})


def _k_faces(D: GeometricSubdivision) -> list[Simplex]:
    k = max(len(f) for f in D.base_faces) - 1
    return [f for f in D.base_faces if len(f) == k + 1]


def assign_apices(lift: IntegerLift, ell: int) -> dict[int, int]:
    """Map apex index j (1..ell) to a target vertex.

    U-vertices are taken in increasing order; a positive weight consumes that
    many odd j, a negative weight that many even j, each pool in increasing j.
    """
    if lift.total != ell:
        raise ParameterError(f"lift total {lift.total} does not match ladder length {ell}")
    odd = list(range(1, ell + 1, 2))
    even = list(range(2, ell + 1, 2))
    out: dict[int, int] = {}
    for u, w in lift.weights:
        if w < 0 and u != lift.pivot:
            raise ParameterError(f"negative weight at non-pivot vertex {u}")
        pool = odd if w > 0 else even
        if len(pool) < abs(w):
            raise ParameterError("parity budget exceeded while assigning apices")
        for j in pool[: abs(w)]:
            out[j] = u
        del pool[: abs(w)]
    if odd or even:
        raise ParameterError("apices left unassigned")
    return out


def face_lifts(lifts: Mapping[int, IntegerLift] | Sequence[IntegerLift], coloring: KneserColoring | None, m: int) -> dict[int, IntegerLift]:
    """Per-face lifts; with a coloring, ``lifts`` is indexed by color, otherwise by face (both 1-based)."""
    get = (lambda i: lifts[i]) if isinstance(lifts, Mapping) else (lambda i: lifts[i - 1])
    if coloring is None:
        return {i: get(i) for i in range(1, m + 1)}
    return {i: get(coloring.colors[i]) for i in range(1, m + 1)}


def build_gsimp(
    D: GeometricSubdivision,
    lifts: Mapping[int, IntegerLift] | Sequence[IntegerLift],
    coloring: KneserColoring | None = None,
) -> SimplicialVertexMap:
    """Originals go to themselves, interior w_a to the a-th vertex of the carrier, apices into U."""
    faces = _k_faces(D)
    index = {f: i for i, f in enumerate(faces, 1)}
    per_face = face_lifts(lifts, coloring, len(faces))
    apices: dict[Simplex, dict[int, int]] = defaultdict(dict)
    for v, lab in D.labels.items():
        if lab.kind == "x":
            apices[D.vertex_carrier(v)][lab.index] = v
    targets = {}
    for sigma, xs in apices.items():
        if sigma not in index:
            raise ParameterError(f"apex carried by {sigma}, which is not a k-face")
        if sorted(xs) != list(range(1, len(xs) + 1)):
            raise ParameterError(f"apex labels of {sigma} are not x_1..x_ell")
        for j, u in assign_apices(per_face[index[sigma]], len(xs)).items():
            if u in D.base_vertices:
                raise ParameterError(f"apex target {u} is not an unused vertex")
            targets[xs[j]] = u
    out = {}
    for v, lab in D.labels.items():
        if v in D.base_vertex:
            out[v] = D.base_vertex[v]
        elif lab.kind == "w":
            out[v] = D.vertex_carrier(v)[lab.index - 1]
        elif v in targets:
            out[v] = targets[v]
        else:
            raise ParameterError(f"apex {v} lies in a face without a lift")
    return SimplicialVertexMap(out)


def _perm_sign(seq: Sequence[int]) -> int:
    inversions = sum(1 for a, b in combinations(seq, 2) if a > b)
    return -1 if inversions % 2 else 1


def chain_of_simplicial_map(g: SimplicialVertexMap, faces: Iterable[Simplex], p: int) -> ChainMap:
    """Induced chain map: degenerate images vanish, others carry the sign of the sorting permutation."""
    images = {}
    for f in faces:
        img = [g[v] for v in f]
        if len(set(img)) < len(img):
            images[f] = Chain.zero(len(f) - 1, p)
        else:
            images[f] = Chain.of(img, p, _perm_sign(img))
    return ChainMap(images, p, "g#")


def composition_differences(g_sharp: ChainMap, rho_map: ChainMap, phi: ChainMap) -> list[Simplex]:
    return chain_map_differences(compose_chain_maps(g_sharp, rho_map), phi)


def verify_composition(g_sharp: ChainMap, rho_map: ChainMap, phi: ChainMap) -> bool:
    """g# . rho == phi on every generator."""
    return not composition_differences(g_sharp, rho_map, phi)


def image_sets(g: SimplicialVertexMap, D: GeometricSubdivision, base_faces: Iterable[Simplex] | None = None) -> dict[Simplex, frozenset[int]]:
    """For each base face, the g-images of the D-vertices lying in it."""
    faces = list(D.base_faces if base_faces is None else base_faces)
    carried: dict[Simplex, set[int]] = {f: set() for f in faces}
    for v in D.points:
        c = set(D.vertex_carrier(v))
        for f in faces:
            if c <= set(f):
                carried[f].add(g[v])
    return {f: frozenset(s) for f, s in carried.items()}


def almost_embedding_violations(
    g: SimplicialVertexMap, D: GeometricSubdivision, base_faces: Iterable[Simplex] | None = None
) -> list[tuple[Simplex, Simplex]]:
    images = image_sets(g, D, base_faces)
    return [
        (a, b)
        for a, b in combinations(images, 2)
        if not set(a) & set(b) and images[a] & images[b]
    ]


def check_almost_embedding(
    g: SimplicialVertexMap, D: GeometricSubdivision, base_faces: Iterable[Simplex] | None = None, q: int = 2
) -> bool:
    """Disjoint base faces have vertex-disjoint images.

    Pairwise disjointness also certifies the q-fold condition for any q >= 2.
    """
    if q < 2:
        raise ParameterError(f"q must be >= 2, got {q}")
    return not almost_embedding_violations(g, D, base_faces)


def image_face_problems(g: SimplicialVertexMap, D: GeometricSubdivision, n: int, k: int) -> list[Simplex]:
    """D-faces whose image is not a face of the k-skeleton of the n-simplex."""
    bad = []
    for f in D.all_faces():
        img = g.image(f)
        if len(img) > k + 1 or not all(1 <= t <= n + 1 for t in img):
            bad.append(f)
    return bad
