"""Sparse simplicial chains over GF(p), the ordered boundary operator and chain maps."""
from __future__ import annotations

import json
from typing import Callable, Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import gfp
from .errors import ParameterError
from .simplex import Simplex, SimplicialComplex, SkeletonComplex


class Chain:
    """A homogeneous chain: simplex -> nonzero coefficient mod p.

    Treat instances as immutable. Simplices are sorted vertex tuples, so the
    orientation of every generator is the one induced by the vertex order.
    """

    __slots__ = ("degree", "p", "terms", "_hash")

    def __init__(self, degree: int, p: int, terms: Mapping[Simplex, int] | Iterable = ()):
        self.degree = degree
        self.p = p
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Simplex, int] = {}
        for s, c in items:
            s = tuple(s)
            if len(s) != degree + 1:
                raise ParameterError(f"simplex {s} does not have dimension {degree}")
            acc[s] = (acc.get(s, 0) + int(c)) % p
        self.terms = {s: c for s, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def _raw(cls, degree: int, p: int, terms: dict) -> "Chain":
        # terms already reduced mod p, zero-free
        self = cls.__new__(cls)
        self.degree, self.p, self._hash = degree, p, None
        self.terms = dict(sorted(terms.items()))
        return self

    @classmethod
    def of(cls, s: Sequence[int], p: int, coeff: int = 1) -> "Chain":
        s = tuple(sorted(s))
        return cls(len(s) - 1, p, {s: coeff})

    @classmethod
    def zero(cls, degree: int, p: int) -> "Chain":
        return cls._raw(degree, p, {})

    def __iter__(self) -> Iterator[tuple[Simplex, int]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, s: Simplex) -> int:
        return self.terms.get(tuple(s), 0)

    def _check(self, other: "Chain"):
        if not isinstance(other, Chain):
            return NotImplemented
        if other.p != self.p:
            raise ParameterError(f"mixing chains over GF({self.p}) and GF({other.p})")
        if other.degree != self.degree and self.terms and other.terms:
            raise ParameterError(f"degree mismatch: {self.degree} vs {other.degree}")
        return None

    def _combine(self, other: "Chain", sign: int) -> "Chain":
        if self._check(other) is NotImplemented:
            return NotImplemented
        degree = self.degree if self.terms else other.degree
        acc = dict(self.terms)
        p = self.p
        for s, c in other.terms.items():
            v = (acc.get(s, 0) + sign * c) % p
            if v:
                acc[s] = v
            else:
                acc.pop(s, None)
        return Chain._raw(degree, p, acc)

    def __add__(self, other: "Chain") -> "Chain":
        return self._combine(other, 1)

    def __sub__(self, other: "Chain") -> "Chain":
        return self._combine(other, -1)

    def __neg__(self) -> "Chain":
        return self.scale(-1)

    def scale(self, a: int) -> "Chain":
        a %= self.p
        if not a:
            return Chain.zero(self.degree, self.p)
        return Chain._raw(self.degree, self.p, {s: (a * c) % self.p for s, c in self.terms.items()})

    def __mul__(self, a: int) -> "Chain":
        return self.scale(int(a))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        if self.p != other.p:
            return False
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.p, self.degree if self.terms else None, tuple(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        if not self.terms:
            return f"Chain(0, deg={self.degree}, p={self.p})"
        body = " + ".join(f"{c}*{list(s)}" for s, c in self.terms.items())
        return f"Chain({body}, p={self.p})"

    @property
    def support(self) -> list[Simplex]:
        return list(self.terms)

    def vertices(self) -> set[int]:
        return {v for s in self.terms for v in s}

    def to_json(self) -> dict:
        return {"degree": self.degree, "p": self.p, "terms": [[list(s), c] for s, c in self.terms.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "Chain":
        return cls(data["degree"], data["p"], [(tuple(s), c) for s, c in data["terms"]])


def chain_sum(chains: Iterable[Chain], degree: int, p: int) -> Chain:
    acc: dict[Simplex, int] = {}
    for ch in chains:
        for s, c in ch.terms.items():
            acc[s] = acc.get(s, 0) + c
    return Chain(degree, p, acc)


def simplex_boundary(s: Sequence[int], p: int) -> Chain:
    """Ordered boundary: sum over l of (-1)^l * (s with its l-th vertex removed), l from 0."""
    s = tuple(s)
    if len(s) <= 1:
        return Chain.zero(len(s) - 2, p)
    terms = {}
    for i in range(len(s)):
        terms[s[:i] + s[i + 1:]] = (1 if i % 2 == 0 else -1) % p
    return Chain._raw(len(s) - 2, p, {f: c for f, c in terms.items() if c})


def boundary(c: Chain) -> Chain:
    if c.degree <= 0:
        return Chain.zero(c.degree - 1, c.p)
    acc: dict[Simplex, int] = {}
    for s, coeff in c.terms.items():
        for i in range(len(s)):
            f = s[:i] + s[i + 1:]
            acc[f] = acc.get(f, 0) + (coeff if i % 2 == 0 else -coeff)
    return Chain(c.degree - 1, c.p, acc)


def z_cycle(sigma: Sequence[int], u: int, p: int) -> Chain:
    """The cycle d(sigma + u): the reroute of sigma through the vertex u."""
    if u in sigma:
        raise ParameterError(f"vertex {u} already lies in {tuple(sigma)}")
    return simplex_boundary(tuple(sorted((*sigma, u))), p)


# -- matrices and cycle spaces -------------------------------------------------

def boundary_matrix(rows: Sequence[Simplex], cols: Sequence[Simplex], p: int) -> np.ndarray:
    index = {s: i for i, s in enumerate(rows)}
    m = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, s in enumerate(cols):
        for f, c in simplex_boundary(s, p):
            m[index[f], j] = c
    return m


def _faces(c, degree: int) -> list[Simplex]:
    if isinstance(c, SkeletonComplex):
        return list(c.faces(degree))  # raises above the cap
    if isinstance(c, SimplicialComplex):
        return c.faces(degree)
    return sorted({tuple(sorted(f)) for f in c if len(f) == degree + 1})


def cycle_space_basis(c: SkeletonComplex | SimplicialComplex, degree: int, p: int) -> list[Chain]:
    """Basis of ker(boundary) in the given degree, by elimination over GF(p)."""
    gfp.check_prime(p)
    cols = _faces(c, degree)
    if not cols:
        return []
    if degree == 0:
        return [Chain.of(s, p) for s in cols]
    rows = _faces(c, degree - 1)
    null = gfp.nullspace(boundary_matrix(rows, cols, p), p, ncols=len(cols))
    return [Chain(degree, p, {cols[j]: int(v) for j, v in enumerate(vec) if v}) for vec in null]


def chains_to_matrix(chains: Sequence[Chain], basis: Sequence[Simplex]) -> np.ndarray:
    index = {s: i for i, s in enumerate(basis)}
    m = np.zeros((len(chains), len(basis)), dtype=np.int64)
    for r, ch in enumerate(chains):
        for s, c in ch.terms.items():
            m[r, index[s]] = c
    return m


def span_rank(chains: Sequence[Chain], p: int) -> int:
    if not chains:
        return 0
    basis = sorted({s for ch in chains for s in ch.terms})
    return gfp.rank(chains_to_matrix(chains, basis), p) if basis else 0


def same_span(a: Sequence[Chain], b: Sequence[Chain], p: int) -> bool:
    ra, rb = span_rank(a, p), span_rank(b, p)
    return ra == rb == span_rank(list(a) + list(b), p)


# -- chain maps ----------------------------------------------------------------

class ChainMap:
    """A chain map given by its values on generators (simplices of the source)."""

    def __init__(self, images: Mapping[Simplex, Chain], p: int, name: str = ""):
        self.images = {tuple(g): ch for g, ch in sorted(images.items())}
        self.p = p
        self.name = name
        for g, ch in self.images.items():
            if ch.p != p:
                raise ParameterError(f"image of {g} lives over GF({ch.p}), expected GF({p})")
            if ch.terms and ch.degree != len(g) - 1:
                raise ParameterError(f"image of {g} has degree {ch.degree}")

    def __call__(self, c: Chain) -> Chain:
        return apply_chain_map(self, c)

    def __getitem__(self, g: Simplex) -> Chain:
        return self.images[tuple(g)]

    def __contains__(self, g) -> bool:
        return tuple(g) in self.images

    @property
    def generators(self) -> list[Simplex]:
        return list(self.images)

    def __repr__(self) -> str:
        return f"ChainMap({self.name or '?'}, {len(self.images)} generators, p={self.p})"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "name": self.name,
            "images": [[list(g), ch.to_json()] for g, ch in self.images.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ChainMap":
        return cls({tuple(g): Chain.from_json(ch) for g, ch in data["images"]}, data["p"], data.get("name", ""))


def apply_chain_map(m: ChainMap, c: Chain) -> Chain:
    if c.p != m.p:
        raise ParameterError(f"chain over GF({c.p}) fed to a map over GF({m.p})")
    acc: dict[Simplex, int] = {}
    degree = c.degree
    for s, coeff in c.terms.items():
        try:
            img = m.images[s]
        except KeyError:
            raise ParameterError(f"{m.name or 'chain map'} is not defined on {s}") from None
        for t, v in img.terms.items():
            acc[t] = acc.get(t, 0) + coeff * v
    return Chain(degree, m.p, acc)


def compose_chain_maps(a: ChainMap, b: ChainMap) -> ChainMap:
    """The composite a . b (apply b first)."""
    if a.p != b.p:
        raise ParameterError("cannot compose maps over different fields")
    name = f"{a.name}.{b.name}" if a.name and b.name else ""
    return ChainMap({g: apply_chain_map(a, ch) for g, ch in b.images.items()}, a.p, name)


def chain_maps_equal(a: ChainMap, b: ChainMap) -> bool:
    if a.p != b.p or set(a.images) != set(b.images):
        return False
    return all(a.images[g] == b.images[g] for g in a.images)


def chain_map_differences(a: ChainMap, b: ChainMap) -> list[Simplex]:
    """Generators on which a and b disagree (missing generators count)."""
    gens = sorted(set(a.images) | set(b.images), key=lambda g: (len(g), g))
    zero = lambda g: Chain.zero(len(g) - 1, a.p)  # noqa: E731
    return [g for g in gens if a.images.get(g, zero(g)) != b.images.get(g, zero(g))]


def chain_map_violations(m: ChainMap) -> list[Simplex]:
    """Generators g with d(m(g)) != m(d(g))."""
    bad = []
    for g, img in m.images.items():
        if len(g) == 1:
            continue
        try:
            rhs = apply_chain_map(m, simplex_boundary(g, m.p))
        except ParameterError:
            bad.append(g)
            continue
        if boundary(img) != rhs:
            bad.append(g)
    return bad


def is_chain_map(m: ChainMap) -> bool:
    return not chain_map_violations(m)


def identity_map(faces: Iterable[Simplex], p: int, name: str = "id") -> ChainMap:
    return ChainMap({tuple(f): Chain.of(f, p) for f in faces}, p, name)


def zero_map(faces: Iterable[Simplex], p: int, name: str = "0") -> ChainMap:
    return ChainMap({tuple(f): Chain.zero(len(f) - 1, p) for f in faces}, p, name)


def map_from_function(faces: Iterable[Simplex], fn: Callable[[Simplex], Chain], p: int, name: str = "") -> ChainMap:
    return ChainMap({tuple(f): fn(tuple(f)) for f in faces}, p, name)


def dumps_chain(c: Chain) -> str:
    return json.dumps(c.to_json(), sort_keys=True)


def loads_chain(text: str) -> Chain:
    return Chain.from_json(json.loads(text))


__all__ = [
    "Chain",
    "ChainMap",
    "apply_chain_map",
    "boundary",
    "boundary_matrix",
    "chain_map_differences",
    "chain_map_violations",
    "chain_maps_equal",
    "chain_sum",
    "compose_chain_maps",
    "cycle_space_basis",
    "identity_map",
    "is_chain_map",
    "same_span",
    "simplex_boundary",
    "span_rank",
    "z_cycle",
    "zero_map",
]
