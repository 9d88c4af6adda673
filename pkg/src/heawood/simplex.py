"""Skeleta of simplices and small explicit simplicial complexes.

Vertices are 1-based integers; a simplex is a strictly increasing tuple of
vertex ids. The global vertex order is the integer order.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import ParameterError

Simplex = tuple[int, ...]

DEFAULT_ENUMERATION_CAP = 2_000_000


def simplex(*vertices: int) -> Simplex:
    """Build a canonical simplex from vertex ids (any order, no repeats)."""
    s = tuple(sorted(vertices))
    if len(set(s)) != len(s):
        raise ParameterError(f"repeated vertex in {vertices}")
    if s and s[0] < 1:
        raise ParameterError(f"vertex ids are 1-based, got {vertices}")
    return s


def dim(s: Simplex) -> int:
    return len(s) - 1


def are_disjoint(a: Sequence[int], b: Sequence[int]) -> bool:
    return not set(a) & set(b)


def faces_of(s: Simplex, d: int) -> Iterator[Simplex]:
    """All d-dimensional faces of s, lexicographically."""
    return combinations(s, d + 1)


def all_faces(s: Simplex, max_dim: int | None = None) -> Iterator[Simplex]:
    top = len(s) - 1 if max_dim is None else min(max_dim, len(s) - 1)
    for d in range(top + 1):
        yield from combinations(s, d + 1)


@dataclass(frozen=True)
class SkeletonComplex:
    """The k-skeleton of the n-simplex on vertices 1..n+1.

    Faces are implicit: any set of at most k+1 vertices is a face. Nothing is
    materialized unless ``faces`` is called.
    """

    n: int
    k: int
    cap: int = DEFAULT_ENUMERATION_CAP

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"n must be >= 1, got {self.n}")
        if not 0 <= self.k <= self.n:
            raise ParameterError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")

    @property
    def vertices(self) -> range:
        return range(1, self.n + 2)

    @property
    def dimension(self) -> int:
        return self.k

    def face_count(self, j: int) -> int:
        if j < 0 or j > self.k:
            return 0
        return comb(self.n + 1, j + 1)

    def contains(self, s: Sequence[int]) -> bool:
        return (
            0 < len(s) <= self.k + 1
            and all(1 <= v <= self.n + 1 for v in s)
            and len(set(s)) == len(s)
        )

    def faces(self, j: int) -> Iterator[Simplex]:
        count = self.face_count(j)
        if count > self.cap:
            raise ParameterError(
                f"refusing to enumerate {count} faces of dimension {j} (cap {self.cap})"
            )
        return combinations(self.vertices, j + 1)

    def all_faces(self) -> Iterator[Simplex]:
        for j in range(self.k + 1):
            yield from self.faces(j)


def skeleton(n: int, k: int) -> SkeletonComplex:
    return SkeletonComplex(n, k)


def lex_k_faces(c: SkeletonComplex) -> list[Simplex]:
    """The k-faces sigma_1..sigma_m of the skeleton in lexicographic order."""
    return list(c.faces(c.k))


@dataclass(frozen=True)
class SimplicialComplex:
    """An explicit finite complex, stored as the downward closure of its maximal faces."""

    maximal: tuple[Simplex, ...]
    _faces: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        tops = {simplex(*f) for f in self.maximal}
        closure = set()
        for f in tops:
            closure.update(all_faces(f))
        maximal = tuple(sorted(f for f in tops if not any(f != g and set(f) <= set(g) for g in tops)))
        object.__setattr__(self, "maximal", maximal)
        object.__setattr__(self, "_faces", frozenset(closure))

    @classmethod
    def from_faces(cls, faces: Iterable[Sequence[int]]) -> "SimplicialComplex":
        return cls(tuple(tuple(f) for f in faces))

    @property
    def vertices(self) -> list[int]:
        return sorted(v for (v,) in (f for f in self._faces if len(f) == 1))

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.maximal), default=-1)

    def contains(self, s: Sequence[int]) -> bool:
        return tuple(sorted(s)) in self._faces

    def faces(self, j: int) -> list[Simplex]:
        return sorted(f for f in self._faces if len(f) == j + 1)

    def face_count(self, j: int) -> int:
        return sum(1 for f in self._faces if len(f) == j + 1)

    def all_faces(self) -> list[Simplex]:
        return sorted(self._faces, key=lambda f: (len(f), f))

    def is_maximal(self, s: Sequence[int]) -> bool:
        return tuple(sorted(s)) in self.maximal


def as_explicit(c: SkeletonComplex | SimplicialComplex) -> SimplicialComplex:
    if isinstance(c, SimplicialComplex):
        return c
    return SimplicialComplex(tuple(c.faces(c.k)))


def boundary_complex(d: int) -> SimplicialComplex:
    """The boundary of the d-simplex on vertices 1..d+1 (a (d-1)-sphere)."""
    return SimplicialComplex(tuple(combinations(range(1, d + 2), d)))


# -- text complex format -------------------------------------------------------

def format_complex(faces: Iterable[Sequence[int]], comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {line}" for line in comment.splitlines())
    lines.extend(" ".join(map(str, f)) for f in faces)
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> list[Simplex]:
    faces = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            faces.append(simplex(*(int(tok) for tok in line.split())))
        except ValueError as exc:
            raise ParameterError(f"line {lineno}: {exc}") from None
    return faces
