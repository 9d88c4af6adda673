"""Chain-level constructions behind generalized Heawood bounds, with exact verification."""
from .bounds import (
    generalized_heawood_check,
    heawood_check,
    heawood_max_n,
    n0_strong,
    n0_weak,
    thm2_bound,
    thm3_bound,
)
from .chains import Chain, ChainMap, boundary, is_chain_map, z_cycle
from .errors import NotFound, ParameterError
from .gmap import build_gsimp, check_almost_embedding, lift_multipoint, verify_composition
from .pipeline import PipelineConfig, run_pipeline
from .routing import HomologyOracle, Multipoint, find_collisions, kneser_color, random_oracle
from .simplex import lex_k_faces, skeleton
from .subdivision import build_D, ladder_subdivide, rho, stellar_subdivide

__version__ = "0.1.0"
