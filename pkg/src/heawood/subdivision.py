"""Geometric subdivisions with exact rational coordinates.

Every vertex of a subdivision carries barycentric coordinates with respect to
the vertices of the base complex (the base complex is realized as a face of
the standard simplex). The carrier of a face is then just the support of its
coordinates, and mutual orientations are determinant signs of small rational
matrices. There are no tolerances anywhere.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .chains import Chain, ChainMap, z_cycle
from .errors import ParameterError
from .simplex import Simplex, SimplicialComplex, all_faces, lex_k_faces, skeleton

Point = tuple[Fraction, ...]


@dataclass(frozen=True, order=True)
class Label:
    kind: str  # "w", "x", or "v" for an original vertex of a larger base complex
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    @classmethod
    def parse(cls, text: str) -> "Label":
        return cls(text[0], int(text[1:]))


def det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = -result
        result *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return result


def barycenter(points: Sequence[Point]) -> Point:
    n = len(points)
    return tuple(sum(cs, Fraction(0)) / n for cs in zip(*points))


@dataclass(frozen=True)
class GeometricSubdivision:
    """A subdivision S of a base complex K.

    ``points[v]`` are the barycentric coordinates of vertex v with respect to
    ``base_vertices``. The vertex order of S is the integer order of its ids.
    """

    base_vertices: tuple[int, ...]
    base_faces: tuple[Simplex, ...]
    points: Mapping[int, Point]
    labels: Mapping[int, Label]
    maximal: tuple[Simplex, ...]
    base_vertex: Mapping[int, int]  # S vertex -> base vertex, for original vertices

    @cached_property
    def _base_index(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.base_vertices)}

    @property
    def vertices(self) -> list[int]:
        return sorted(self.points)

    @cached_property
    def original_of(self) -> dict[int, int]:
        """base vertex -> S vertex"""
        return {b: v for v, b in self.base_vertex.items()}

    @cached_property
    def _all_faces(self) -> frozenset[Simplex]:
        out = set()
        for f in self.maximal:
            out.update(all_faces(f))
        return frozenset(out)

    def faces(self, j: int) -> list[Simplex]:
        return sorted(f for f in self._all_faces if len(f) == j + 1)

    def all_faces(self) -> list[Simplex]:
        return sorted(self._all_faces, key=lambda f: (len(f), f))

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.maximal) - 1

    def vertex_carrier(self, v: int) -> Simplex:
        return tuple(self.base_vertices[i] for i, c in enumerate(self.points[v]) if c)

    def carrier(self, face: Sequence[int]) -> Simplex:
        support = set()
        for v in face:
            support.update(i for i, c in enumerate(self.points[v]) if c)
        return tuple(self.base_vertices[i] for i in sorted(support))

    @cached_property
    def _by_carrier(self) -> dict[Simplex, list[Simplex]]:
        groups: dict[Simplex, list[Simplex]] = defaultdict(list)
        for f in self._all_faces:
            groups[self.carrier(f)].append(f)
        for fs in groups.values():
            fs.sort()
        return dict(groups)

    def subdividing(self, theta: Sequence[int]) -> list[Simplex]:
        """Faces of S of the same dimension as theta that subdivide theta."""
        theta = tuple(theta)
        return [f for f in self._by_carrier.get(theta, []) if len(f) == len(theta)]

    def label_in(self, v: int, sigma: Sequence[int]) -> Label:
        """Label of v inside the subdivided face sigma (originals read as w_i)."""
        lab = self.labels[v]
        if lab.kind == "v":
            return Label("w", list(sigma).index(lab.index) + 1)
        return lab

    def coords_in(self, v: int, theta: Sequence[int]) -> tuple[Fraction, ...]:
        """Barycentric coordinates of v with respect to the base face theta."""
        pt = self.points[v]
        idx = self._base_index
        out = tuple(pt[idx[b]] for b in theta)
        if sum(out) != 1:
            raise ParameterError(f"vertex {v} does not lie in {tuple(theta)}")
        return out

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "base_vertices": list(self.base_vertices),
            "base_faces": [list(f) for f in self.base_faces],
            "vertices": [
                {
                    "id": v,
                    "coords": [[c.numerator, c.denominator] for c in self.points[v]],
                    "label": str(self.labels[v]),
                    "base": self.base_vertex.get(v),
                }
                for v in self.vertices
            ],
            "faces": [list(f) for f in self.maximal],
            "carriers": [[list(f), list(self.carrier(f))] for f in self.maximal],
        }

    @classmethod
    def from_json(cls, data: dict) -> "GeometricSubdivision":
        verts = data["vertices"]
        return cls(
            base_vertices=tuple(data["base_vertices"]),
            base_faces=tuple(tuple(f) for f in data["base_faces"]),
            points={d["id"]: tuple(Fraction(n, m) for n, m in d["coords"]) for d in verts},
            labels={d["id"]: Label.parse(d["label"]) for d in verts},
            maximal=tuple(tuple(f) for f in data["faces"]),
            base_vertex={d["id"]: d["base"] for d in verts if d["base"] is not None},
        )


# -- orientation and the subdivision chain map ---------------------------------

def orientation(S: GeometricSubdivision, eta: Sequence[int], theta: Sequence[int]) -> int:
    """Mutual orientation of eta (vertices of S, in S-order) and the base face theta.

    +1 when the affine map taking theta's ordered vertices to eta's ordered
    vertices preserves orientation. eta need not be a face of S (the spanning
    simplex of a stellar block is not), but its points must lie in |theta|.
    """
    eta, theta = tuple(eta), tuple(theta)
    if len(eta) != len(theta):
        raise ParameterError(f"dimension mismatch between {eta} and {theta}")
    coords = [S.coords_in(v, theta) for v in eta]
    base = coords[0]
    d = det([[c[i] - base[i] for i in range(1, len(theta))] for c in coords[1:]])
    if d == 0:
        raise ParameterError(f"{eta} is degenerate")
    return 1 if d > 0 else -1


def relative_volume(S: GeometricSubdivision, eta: Sequence[int], theta: Sequence[int]) -> Fraction:
    coords = [S.coords_in(v, theta) for v in eta]
    base = coords[0]
    return abs(det([[c[i] - base[i] for i in range(1, len(theta))] for c in coords[1:]]))


def rho(S: GeometricSubdivision, p: int) -> ChainMap:
    """The subdivision chain map: theta -> sum of Or(eta, theta) * eta."""
    images = {}
    for theta in S.base_faces:
        terms = {eta: orientation(S, eta, theta) for eta in S.subdividing(theta)}
        images[theta] = Chain(len(theta) - 1, p, terms)
    return ChainMap(images, p, "rho")


# -- constructions -------------------------------------------------------------

def _unit(n: int, i: int) -> Point:
    return tuple(Fraction(int(j == i)) for j in range(n))


def stellar_subdivide(base: SimplicialComplex, theta: Sequence[int]) -> GeometricSubdivision:
    """Replace the maximal face theta by the cone over its boundary (apex at the barycenter)."""
    theta = tuple(sorted(theta))
    if not base.is_maximal(theta):
        raise ParameterError(f"{theta} is not a maximal face")
    bverts = tuple(base.vertices)
    n = len(bverts)
    points = {v: _unit(n, i) for i, v in enumerate(bverts)}
    apex = max(bverts) + 1
    points[apex] = barycenter([points[v] for v in theta])
    labels = {v: Label("v", v) for v in bverts}
    labels[apex] = Label("x", 1)
    cone = [tuple(sorted(set(theta) - {w})) + (apex,) for w in theta]
    maximal = tuple(sorted([f for f in base.maximal if f != theta] + cone))
    return GeometricSubdivision(
        base_vertices=bverts,
        base_faces=tuple(base.all_faces()),
        points=points,
        labels=labels,
        maximal=maximal,
        base_vertex={v: v for v in bverts},
    )


def _label_key(lab: Label) -> tuple[int, int]:
    return (0 if lab.kind == "w" else 1, lab.index)


@lru_cache(maxsize=None)
def ladder_subdivide(k: int, ell: int) -> GeometricSubdivision:
    """Subdivide the standard k-simplex w_1..w_{k+1} into ell alternating stellar blocks.

    The (k-1)-skeleton is left alone. Block X_j has apex x_j; its spanning
    simplex is labelled w_1..w_{k+1} and is positively oriented iff j is odd.
    Every other k-face carries a repeated label. Vertex ids follow the label
    order w_1 < ... < w_{k+1} < x_1 < ... < x_ell (originals first within a label).
    """
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    if ell < 1 or ell % 2 == 0:
        raise ParameterError(f"ell must be a positive odd integer, got {ell}")
    n = k + 1
    # provisional names: ("o", a) originals, ("i", t) interior w-vertices, ("x", j) apices
    pts: dict[tuple, Point] = {("o", a): _unit(n, a - 1) for a in range(1, n + 1)}
    labs: dict[tuple, Label] = {("o", a): Label("w", a) for a in range(1, n + 1)}
    tops: list[tuple] = []

    if ell == 1:
        pts[("x", 1)] = barycenter([pts[("o", a)] for a in range(1, n + 1)])
        labs[("x", 1)] = Label("x", 1)
        for a in range(1, n + 1):
            tops.append(tuple(("o", b) for b in range(1, n + 1) if b != a) + (("x", 1),))
    elif k == 1:
        # edge path w1 x1 w2 x2 w1 x3 ... x_ell w2
        path = []
        for i in range(2 * ell + 1):
            t = Fraction(i, 2 * ell)
            pt = (1 - t, t)
            if i == 0:
                name = ("o", 1)
            elif i == 2 * ell:
                name = ("o", 2)
            elif i % 2:
                name = ("x", (i + 1) // 2)
                labs[name] = Label("x", (i + 1) // 2)
            else:
                name = ("i", i // 2)
                labs[name] = Label("w", 1 if (i // 2) % 2 == 0 else 2)
            pts[name] = pt
            path.append(name)
        tops = [(path[i], path[i + 1]) for i in range(2 * ell)]
    else:
        w = {a: ("o", a) for a in range(1, n + 1)}
        rest = [w[a] for a in range(3, n + 1)]
        center = barycenter([pts[w[a]] for a in range(1, n + 1)])
        # the sliced edge of the inner simplex, from w_1 to the new w_2-vertex
        ladder = [w[1]]
        for t in range(1, ell + 1):
            name = ("i", t)
            s = Fraction(t, ell)
            pts[name] = tuple(a + s * (c - a) for a, c in zip(pts[w[1]], center))
            labs[name] = Label("w", 2 if t % 2 else 1)
            ladder.append(name)
        for t in range(1, ell + 1):
            block = [ladder[t - 1], ladder[t]] + rest
            apex = ("x", t)
            pts[apex] = barycenter([pts[y] for y in block])
            labs[apex] = Label("x", t)
            for y in block:
                tops.append(tuple(z for z in block if z != y) + (apex,))
        # cone the rest of the inner simplex's boundary to the original w_2
        tops.append((w[2], ladder[-1], *rest))
        for a in range(3, n + 1):
            others = [y for y in rest if y != w[a]]
            for t in range(1, ell + 1):
                tops.append((w[2], ladder[t - 1], ladder[t], *others))

    order = sorted(pts, key=lambda name: (_label_key(labs[name]), name[0] != "o", name))
    ids = {name: i for i, name in enumerate(order, 1)}
    return GeometricSubdivision(
        base_vertices=tuple(range(1, n + 1)),
        base_faces=tuple(all_faces(tuple(range(1, n + 1)))),
        points={ids[nm]: pts[nm] for nm in order},
        labels={ids[nm]: labs[nm] for nm in order},
        maximal=tuple(sorted(tuple(sorted(ids[y] for y in f)) for f in tops)),
        base_vertex={ids[("o", a)]: a for a in range(1, n + 1)},
    )


def build_D(s: int, k: int, ells: int | Sequence[int] | Mapping[int, int]) -> GeometricSubdivision:
    """Subdivide every k-face sigma_i of the k-skeleton of the s-simplex by its own ladder.

    ``ells`` gives ell_i per face (1-based face index in lexicographic order),
    or a single value for all faces. All ell_i = 1 is the plain stellar case.
    """
    faces = lex_k_faces(skeleton(s, k))
    m = len(faces)
    if isinstance(ells, int):
        ell_of = {i: ells for i in range(1, m + 1)}
    elif isinstance(ells, Mapping):
        ell_of = dict(ells)
    else:
        ell_of = {i: e for i, e in enumerate(ells, 1)}
    if set(ell_of) != set(range(1, m + 1)):
        raise ParameterError(f"need one ell per k-face (m={m})")
    for i, e in ell_of.items():
        if e < 1 or e % 2 == 0:
            raise ParameterError(f"ell_{i} = {e} is not a positive odd integer")

    n = s + 1
    keyed_points: dict[tuple, Point] = {}
    keyed_labels: dict[tuple, Label] = {}
    originals = {}
    for t in range(1, n + 1):
        key = (t, 0, 0, 0)
        keyed_points[key] = _unit(n, t - 1)
        keyed_labels[key] = Label("v", t)
        originals[key] = t
    tops_keyed = []
    for i, sigma in enumerate(faces, 1):
        L = ladder_subdivide(k, ell_of[i])
        local_key = {}
        for v, pt in L.points.items():
            if v in L.base_vertex:
                local_key[v] = (sigma[L.base_vertex[v] - 1], 0, 0, 0)
                continue
            lab = L.labels[v]
            if lab.kind == "w":
                key = (sigma[lab.index - 1], 1, i, v)
            else:
                key = (n + 1, i, lab.index, 0)
            g = [Fraction(0)] * n
            for a, c in enumerate(pt):
                g[sigma[a] - 1] = c
            keyed_points[key] = tuple(g)
            keyed_labels[key] = lab
            local_key[v] = key
        tops_keyed.extend(tuple(local_key[v] for v in f) for f in L.maximal)

    order = sorted(keyed_points)
    ids = {key: i for i, key in enumerate(order, 1)}
    return GeometricSubdivision(
        base_vertices=tuple(range(1, n + 1)),
        base_faces=tuple(f for j in range(k + 1) for f in combinations(range(1, n + 1), j + 1)),
        points={ids[key]: keyed_points[key] for key in order},
        labels={ids[key]: keyed_labels[key] for key in order},
        maximal=tuple(sorted(tuple(sorted(ids[x] for x in f)) for f in tops_keyed)),
        base_vertex={ids[key]: t for key, t in originals.items()},
    )


# -- checks ----------------------------------------------------------------------

def validity_problems(S: GeometricSubdivision) -> list[str]:
    """Geometric validity: containment, nondegeneracy, exact volume sums, manifold facets."""
    problems = []
    base = set(S.base_faces)
    for v, pt in S.points.items():
        if any(c < 0 for c in pt) or sum(pt) != 1:
            problems.append(f"vertex {v} lies outside the base simplex")
        elif S.vertex_carrier(v) not in base:
            problems.append(f"vertex {v} has carrier {S.vertex_carrier(v)} outside the base complex")
    if problems:
        return problems
    for f in S.maximal:
        car = S.carrier(f)
        if car not in base:
            problems.append(f"face {f} has carrier {car} outside the base complex")
        elif len(car) != len(f) or relative_volume(S, f, car) == 0:
            problems.append(f"face {f} is degenerate in its carrier {car}")
    if problems:
        return problems
    for theta in S.base_faces:
        pieces = S.subdividing(theta)
        total = sum((relative_volume(S, eta, theta) for eta in pieces), Fraction(0))
        if total != 1:
            problems.append(f"pieces of {theta} have total volume {total}")
        if len(theta) < 2:
            continue
        # interior facets of the pieces of theta are shared by exactly two pieces
        count: dict[Simplex, int] = defaultdict(int)
        for eta in pieces:
            for facet in combinations(eta, len(eta) - 1):
                count[facet] += 1
        for facet, c in count.items():
            expected = 2 if S.carrier(facet) == theta else 1
            if c != expected:
                problems.append(f"facet {facet} of the pieces of {theta} is used {c} times")
    return problems


def unsubdivided(S: GeometricSubdivision, theta: Sequence[int]) -> bool:
    """theta appears in S as a single face spanned by its own original vertices."""
    theta = tuple(theta)
    try:
        image = tuple(sorted(S.original_of[b] for b in theta))
    except KeyError:
        return False
    inside = [v for v in S.points if set(S.vertex_carrier(v)) <= set(theta)]
    return sorted(inside) == sorted(image) and S.subdividing(theta) == [image]


@dataclass(frozen=True)
class StellarBlock:
    index: int  # j, from the apex label x_j
    apex: int
    span: Simplex  # the k-simplex theta_j spanned by the block (not a face of S)
    faces: tuple[Simplex, ...]


def stellar_blocks(S: GeometricSubdivision, sigma: Sequence[int] | None = None) -> list[StellarBlock]:
    """Recover the blocks X_j of a ladder subdivision of sigma; raises if malformed."""
    sigma = tuple(sigma) if sigma is not None else max(S.base_faces, key=len)
    k = len(sigma) - 1
    tops = S.subdividing(sigma)
    apices = sorted(
        (S.labels[v].index, v) for v in S.points if S.labels[v].kind == "x" and S.vertex_carrier(v) == sigma
    )
    blocks = []
    for j, (idx, apex) in enumerate(apices, 1):
        if idx != j:
            raise ParameterError(f"apex labels in {sigma} are not x_1..x_ell")
        star = [f for f in tops if apex in f]
        span = tuple(sorted({v for f in star for v in f} - {apex}))
        if len(star) != k + 1 or len(span) != k + 1:
            raise ParameterError(f"x_{j} is not the apex of a stellar block in {sigma}")
        expected = sorted(tuple(sorted(set(span) - {y} | {apex})) for y in span)
        if sorted(star) != expected:
            raise ParameterError(f"star of x_{j} is not a cone over a simplex boundary")
        labels = [S.label_in(v, sigma) for v in span]
        if labels != [Label("w", a) for a in range(1, k + 2)]:
            raise ParameterError(f"block X_{j} is labelled {list(map(str, labels))}")
        blocks.append(StellarBlock(j, apex, span, tuple(expected)))
    return blocks


def ladder_properties(S: GeometricSubdivision, sigma: Sequence[int] | None = None, ell: int | None = None) -> dict[str, bool]:
    """Check the four ladder properties plus geometric validity for one subdivided k-face."""
    sigma = tuple(sigma) if sigma is not None else max(S.base_faces, key=len)
    k = len(sigma) - 1
    tops = S.subdividing(sigma)
    in_sigma = [v for v in S.points if set(S.vertex_carrier(v)) <= set(sigma)]
    out = {}

    out["originals_labelled"] = all(
        S.original_of.get(b) is not None and S.label_in(S.original_of[b], sigma) == Label("w", a)
        for a, b in enumerate(sigma, 1)
    )
    full = {Label("w", a) for a in range(1, k + 2)}
    out["no_rainbow_face"] = all({S.label_in(v, sigma) for v in f} != full for f in tops)

    x_labels = sorted(S.labels[v].index for v in in_sigma if S.labels[v].kind == "x")
    try:
        blocks = stellar_blocks(S, sigma)
    except ParameterError:
        blocks = None
    n_apices = ell if ell is not None else len(x_labels)
    out["unique_apices_in_blocks"] = (
        blocks is not None and x_labels == list(range(1, n_apices + 1)) and len(blocks) == n_apices
    )
    if blocks is None:
        out["alternating_orientation"] = False
    else:
        out["alternating_orientation"] = all(
            orientation(S, b.span, sigma) == (1 if b.index % 2 else -1) for b in blocks
        )
    rank = {v: _label_key(S.label_in(v, sigma)) for v in in_sigma}
    ordered = sorted(in_sigma)
    out["order_respects_labels"] = all(rank[a] <= rank[b] for a, b in zip(ordered, ordered[1:]))
    out["boundary_untouched"] = all(unsubdivided(S, f) for f in all_faces(sigma, k - 1))
    sub = _restrict(S, sigma)
    out["geometrically_valid"] = not validity_problems(sub)
    return out


def _restrict(S: GeometricSubdivision, sigma: Simplex) -> GeometricSubdivision:
    """The part of S lying in |sigma|, as a subdivision of sigma alone."""
    keep = set(sigma)
    idx = [S._base_index[b] for b in sigma]
    verts = [v for v in S.points if set(S.vertex_carrier(v)) <= keep]
    return GeometricSubdivision(
        base_vertices=sigma,
        base_faces=tuple(all_faces(sigma)),
        points={v: tuple(S.points[v][i] for i in idx) for v in verts},
        labels={v: S.labels[v] for v in verts},
        maximal=tuple(S.subdividing(sigma)),
        base_vertex={v: b for v, b in S.base_vertex.items() if b in keep},
    )


@dataclass(frozen=True)
class LadderDecomposition:
    blocks: tuple[tuple[Simplex, int, int], ...]  # (theta_j, x_j, sign)
    residual: Chain
    rhs: Chain
    rho_sigma: Chain

    @property
    def holds(self) -> bool:
        return self.rhs == self.rho_sigma

    @property
    def signs_alternate(self) -> bool:
        return all(sign == (1 if j % 2 else -1) for j, (_, _, sign) in enumerate(self.blocks, 1))


def rho_ladder_decomposition(S: GeometricSubdivision, p: int, sigma: Sequence[int] | None = None) -> LadderDecomposition:
    """Split rho(sigma) into signed stellar blocks plus the remaining pieces.

    rho(sigma) = sum_j sign_j (theta_j + (-1)^k z(theta_j, x_j)) + sum_eta Or(eta, sigma) eta,
    with sign_j the orientation of the block's spanning simplex. Both sides
    are computed independently and compared by the caller via ``holds``.
    """
    sigma = tuple(sigma) if sigma is not None else max(S.base_faces, key=len)
    k = len(sigma) - 1
    blocks = stellar_blocks(S, sigma)
    rho_sigma = rho_face(S, sigma, p)
    in_blocks = {f for b in blocks for f in b.faces}
    residual = Chain(k, p, {eta: orientation(S, eta, sigma) for eta in S.subdividing(sigma) if eta not in in_blocks})
    rhs = residual
    out = []
    for b in blocks:
        sign = orientation(S, b.span, sigma)
        stellar = Chain.of(b.span, p) + z_cycle(b.span, b.apex, p) * (-1) ** k
        rhs = rhs + stellar * sign
        out.append((b.span, b.apex, sign))
    return LadderDecomposition(tuple(out), residual, rhs, rho_sigma)


def rho_face(S: GeometricSubdivision, theta: Sequence[int], p: int) -> Chain:
    theta = tuple(theta)
    return Chain(len(theta) - 1, p, {eta: orientation(S, eta, theta) for eta in S.subdividing(theta)})


# -- export ------------------------------------------------------------------------

def to_off(S: GeometricSubdivision) -> str:
    """OFF text for a 2-dimensional subdivision with at most 3 ambient coordinates."""
    if S.dimension != 2 or len(S.base_vertices) > 3:
        raise ParameterError("OFF export needs a 2-dimensional subdivision in at most 3 coordinates")
    verts = S.vertices
    index = {v: i for i, v in enumerate(verts)}
    lines = ["OFF", f"{len(verts)} {len(S.maximal)} 0"]
    for v in verts:
        pt = list(S.points[v]) + [Fraction(0)] * (3 - len(S.points[v]))
        lines.append(" ".join(repr(float(c)) for c in pt))
    for f in S.maximal:
        lines.append(f"{len(f)} " + " ".join(str(index[v]) for v in f))
    return "\n".join(lines) + "\n"


def parse_off(text: str) -> tuple[list[tuple[float, ...]], list[tuple[int, ...]]]:
    rows = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or rows[0] != "OFF":
        raise ParameterError("not an OFF file")
    nv, nf, _ = map(int, rows[1].split())
    verts = [tuple(map(float, r.split())) for r in rows[2:2 + nv]]
    faces = []
    for r in rows[2 + nv:2 + nv + nf]:
        toks = list(map(int, r.split()))
        faces.append(tuple(toks[1:1 + toks[0]]))
    return verts, faces


def euler_characteristic(faces: Iterable[Sequence[int]]) -> int:
    closure = set()
    for f in faces:
        closure.update(all_faces(tuple(sorted(f))))
    return sum((-1) ** (len(f) - 1) for f in closure)
