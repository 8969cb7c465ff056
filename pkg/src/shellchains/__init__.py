"""Chains of simplices over the circle with a rotation: shells, fills and rewriting."""
from .chains import Chain, Permutation, PrimitiveCategory, boundary, is_cycle, is_shell, sigma_star, subchain_of
from .circle import (
    ModelParams,
    canonical_rep,
    lascar_distance,
    pick_generic,
    rotate,
    s_hat_pred,
    s_pred,
    same_type,
    shd,
)
from .errors import *  # noqa: F401,F403
from .oracles import lascar_distance_grid, oracle_min_fill
from .rewriting import (
    ChainKind,
    ChainWalk,
    CrSite,
    apply_cr,
    apply_rs,
    classify,
    extract_chain_walk,
    find_cr_sites,
    is_minimal,
    reduct,
    to_standard_rn,
)
from .shells import (
    FillReport,
    Shell1,
    ShellSpec,
    build_shell,
    check_weak_3a,
    construct_min_fill,
    fill_shell_lascar,
    n_s_of,
    realize_distance_walk,
    walk_to_points,
)
from .simplex import FunctorSimplex, make_simplex, simplex_from_distances, strong_amalgam

__version__ = "0.1.0"
