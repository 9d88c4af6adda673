"""End-to-end construction: oracle, routing, subdivision, simplicial map, verdicts."""
from __future__ import annotations

import hashlib
import json
import time
from dataclasses import asdict, dataclass, field
from math import comb
from pathlib import Path

from . import bounds
from .chains import ChainMap, is_chain_map
from .errors import NotFound, ParameterError
from .gfp import check_prime, prime_power_base
from .gmap import (
    IntegerLift,
    SimplicialVertexMap,
    build_gsimp,
    chain_of_simplicial_map,
    check_almost_embedding,
    image_face_problems,
    lift_multipoint,
    verify_composition,
)
from .routing import (
    HomologyOracle,
    Multipoint,
    build_phi_strong,
    build_phi_weak,
    collision_problems,
    dim_v_image,
    find_collisions,
    kneser_color,
    pigeonhole_points,
    random_oracle,
    triviality_classes,
    v_point,
    zero_vector,
)
from .simplex import lex_k_faces, skeleton
from .subdivision import GeometricSubdivision, build_D, rho, validity_problems

SCHEMA_VERSION = 1

EXIT_OK, EXIT_BEST_EFFORT_FAIL, EXIT_GUARANTEE_FAIL, EXIT_PARAM = 0, 1, 2, 3

# the verdicts a run guarantees once n reaches the threshold
GUARANTEED = ("chain_map", "triviality", "almost_embedding", "composition")


@dataclass
class PipelineConfig:
    k: int
    s: int
    n: int
    b: int
    p: int
    path: str = "strong"
    seed: int = 0
    q: int = 2
    best_effort: bool = False
    check_subdivision: bool = True

    def validate(self) -> None:
        check_prime(self.p)
        if prime_power_base(self.q) is None:
            raise ParameterError(f"q must be a prime power, got {self.q}")
        if self.path not in ("weak", "strong"):
            raise ParameterError(f"path must be weak or strong, got {self.path!r}")
        if self.k < 1 or self.b < 0:
            raise ParameterError("need k >= 1 and b >= 0")
        if self.path == "strong" and self.s < 2 * self.k + 1:
            raise ParameterError(f"strong path needs s >= 2k+1, got s={self.s}, k={self.k}")
        if self.s < self.k + 1:
            raise ParameterError(f"need s >= k+1, got s={self.s}, k={self.k}")
        if self.n <= self.s:
            raise ParameterError(f"need n > s, got n={self.n}, s={self.s}")
        if not self.guaranteed and not self.best_effort:
            raise ParameterError(f"n={self.n} is below the threshold n0={self.n0}; pass best_effort to run anyway")

    @property
    def n0(self) -> int:
        if self.path == "weak":
            return bounds.n0_weak(self.k, self.b, self.s, self.p)
        return bounds.n0_strong(self.k, self.b, self.s)

    @property
    def guaranteed(self) -> bool:
        return self.n >= self.n0


@dataclass
class PipelineResult:
    config: PipelineConfig
    oracle: HomologyOracle
    verdicts: dict[str, bool]
    details: dict
    phi: ChainMap | None = None
    D: GeometricSubdivision | None = None
    g: SimplicialVertexMap | None = None
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.verdicts.values())

    @property
    def exit_code(self) -> int:
        if self.passed:
            return EXIT_OK
        if self.config.guaranteed and any(not self.verdicts.get(v, True) for v in GUARANTEED + ("routing",)):
            return EXIT_GUARANTEE_FAIL
        return EXIT_BEST_EFFORT_FAIL

    def artifacts(self) -> dict[str, dict]:
        out = {"oracle": self.oracle.to_json()}
        if self.phi is not None:
            out["phi"] = self.phi.to_json()
        if self.D is not None:
            out["D"] = self.D.to_json()
        if self.g is not None:
            out["g"] = self.g.to_json()
        return out

    def report(self, timings: bool = False) -> dict:
        rep = {
            "schema_version": SCHEMA_VERSION,
            "params": asdict(self.config),
            "n0": str(self.config.n0),
            "guaranteed": self.config.guaranteed,
            "verdicts": self.verdicts,
            "passed": self.passed,
            "details": self.details,
            "artifact_sha256": {name: sha256_json(obj) for name, obj in self.artifacts().items()},
        }
        if timings:
            rep["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return rep


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def sha256_json(obj) -> str:
    return hashlib.sha256(canonical_json(obj).encode()).hexdigest()


class _Clock:
    def __init__(self):
        self.marks: dict[str, float] = {}
        self._t = time.perf_counter()

    def mark(self, name: str):
        now = time.perf_counter()
        self.marks[name] = now - self._t
        self._t = now


def _route_strong(cfg: PipelineConfig, o: HomologyOracle, details: dict):
    coloring = kneser_color(cfg.s, cfg.k)
    r = coloring.num_colors
    values = {u: v_point(o, u) for u in o.unused}
    mus = find_collisions(values, o.unused, r, cfg.p)
    problems = collision_problems(values, mus, o.unused)
    details["colors"] = r
    details["multipoints"] = [mu.to_json() for mu in mus]
    details["collision_problems"] = problems
    phi = build_phi_strong(o, cfg.s, cfg.k, mus, coloring)
    lifts = [lift_multipoint(mu) for mu in mus]
    details["lifts"] = [lift.to_json() for lift in lifts]
    ells = {i: lifts[c - 1].total for i, c in coloring.colors.items()}
    return phi, lifts, coloring, ells, not problems


def _route_weak(cfg: PipelineConfig, o: HomologyOracle, details: dict):
    points = pigeonhole_points(o)
    details["points"] = points
    phi = build_phi_weak(o, cfg.s, cfg.k, points)
    lifts = {i: IntegerLift(((u, 1),), u) for i, u in enumerate(points, 1)}
    return phi, lifts, None, 1, True


def run_pipeline(cfg: PipelineConfig, oracle: HomologyOracle | None = None) -> PipelineResult:
    """Run the whole construction and collect verdicts. Raises ParameterError on bad input."""
    cfg.validate()
    clock = _Clock()
    o = oracle or random_oracle(cfg.s, cfg.k, cfg.n, cfg.b, cfg.p, cfg.seed)
    details: dict = {"m": comb(cfg.s + 1, cfg.k + 1)}
    verdicts: dict[str, bool] = {}
    if cfg.path == "strong":
        dim = dim_v_image(o)
        details["dim_v_image"] = dim
        details["dim_v_image_bound"] = cfg.b * comb(cfg.s, cfg.k)
        verdicts["im_vk_bound"] = dim <= cfg.b * comb(cfg.s, cfg.k)
    clock.mark("oracle")
    try:
        route = _route_strong if cfg.path == "strong" else _route_weak
        phi, lifts, coloring, ells, routing_ok = route(cfg, o, details)
    except (NotFound, ParameterError) as exc:
        details["routing_error"] = str(exc)
        verdicts["routing"] = False
        return PipelineResult(cfg, o, verdicts, details, timings=clock.marks)
    verdicts["routing"] = routing_ok
    clock.mark("routing")

    verdicts["chain_map"] = is_chain_map(phi)
    classes = triviality_classes(phi, o, cfg.s, cfg.k)
    zero = zero_vector(o)
    details["tau_classes"] = [[list(t), list(c)] for t, c in classes.items()]
    verdicts["triviality"] = all(c == zero for c in classes.values())
    clock.mark("phi_checks")

    D = build_D(cfg.s, cfg.k, ells)
    details["D"] = {"vertices": len(D.points), "top_faces": len(D.maximal)}
    if cfg.check_subdivision:
        verdicts["subdivision_valid"] = not validity_problems(D)
    clock.mark("subdivision")

    g = build_gsimp(D, lifts, coloring)
    verdicts["image_faces"] = not image_face_problems(g, D, cfg.n, cfg.k)
    verdicts["almost_embedding"] = check_almost_embedding(g, D, q=cfg.q)
    rho_map = rho(D, cfg.p)
    g_sharp = chain_of_simplicial_map(g, D.all_faces(), cfg.p)
    verdicts["composition"] = verify_composition(g_sharp, rho_map, phi)
    clock.mark("gmap_checks")
    return PipelineResult(cfg, o, verdicts, details, phi, D, g, clock.marks)


# -- saved artifacts ----------------------------------------------------------------------

def save_run(result: PipelineResult, out_dir: str | Path, timings: bool = False) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, obj in result.artifacts().items():
        (out / f"{name}.json").write_text(canonical_json(obj) + "\n")
    path = out / "report.json"
    path.write_text(json.dumps(result.report(timings), indent=2, sort_keys=True) + "\n")
    return path


def verify_saved(out_dir: str | Path) -> tuple[dict[str, bool], dict]:
    """Re-check a saved run from its artifacts alone (phi, D, g, oracle)."""
    out = Path(out_dir)
    report = json.loads((out / "report.json").read_text())
    params = report["params"]
    loaded = {name: json.loads((out / f"{name}.json").read_text()) for name in ("oracle", "phi", "D", "g") if (out / f"{name}.json").exists()}
    verdicts: dict[str, bool] = {}
    verdicts["hashes_match"] = all(
        sha256_json(obj) == report["artifact_sha256"].get(name) for name, obj in loaded.items()
    )
    o = HomologyOracle.from_json(loaded["oracle"])
    if "phi" not in loaded:
        verdicts["artifacts_present"] = False
        return verdicts, report
    phi = ChainMap.from_json(loaded["phi"])
    D = GeometricSubdivision.from_json(loaded["D"])
    g = SimplicialVertexMap.from_json(loaded["g"])
    s, k = params["s"], params["k"]
    verdicts["chain_map"] = is_chain_map(phi)
    zero = zero_vector(o)
    verdicts["triviality"] = all(c == zero for c in triviality_classes(phi, o, s, k).values())
    verdicts["almost_embedding"] = check_almost_embedding(g, D, q=params["q"])
    g_sharp = chain_of_simplicial_map(g, D.all_faces(), o.p)
    verdicts["composition"] = verify_composition(g_sharp, rho(D, o.p), phi)
    verdicts["matches_report"] = all(report["verdicts"].get(v) == verdicts[v] for v in GUARANTEED)
    return verdicts, report


def multipoints_of(result: PipelineResult) -> list[Multipoint]:
    return [Multipoint.from_json(d) for d in result.details.get("multipoints", [])]
