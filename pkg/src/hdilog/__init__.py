"""Generalized cluster algebra seeds, tropical data, F-polynomials and
higher-degree dilogarithm identities, checked exactly where possible."""

from .config import FIXTURES, ConfigError, SeedConfig, fixture_config, load_config, parse_config
from .dilog import (
    DilogParams,
    GenericConditionError,
    check_generic,
    gid4_sum,
    li2_hd,
    random_phi,
    rogers_hd_tilde,
    rogers_inf,
    verify_identity,
)
from .exact import MPoly, RatFunc
from .fpoly import check_f_periodicity, check_separation, f_polynomials
from .quantum import verify_quantum_identity
from .seed import (
    GCASeed,
    MutationTrajectory,
    check_sigma_period,
    make_initial_seed,
    mutate_seed,
    run_sequence,
    skew_symmetrizer,
)
from .semifield import SubtractionFreeElem
from .tropical import c_matrices, g_matrices, tropical_signs
from .wedge import v_sequence, verify_constancy

__version__ = "0.1.0"

__all__ = [
    "FIXTURES", "ConfigError", "SeedConfig", "fixture_config", "load_config", "parse_config",
    "DilogParams", "GenericConditionError", "check_generic", "gid4_sum", "li2_hd", "random_phi",
    "rogers_hd_tilde", "rogers_inf", "verify_identity",
    "MPoly", "RatFunc",
    "check_f_periodicity", "check_separation", "f_polynomials",
    "verify_quantum_identity",
    "GCASeed", "MutationTrajectory", "check_sigma_period", "make_initial_seed", "mutate_seed",
    "run_sequence", "skew_symmetrizer",
    "SubtractionFreeElem",
    "c_matrices", "g_matrices", "tropical_signs",
    "v_sequence", "verify_constancy",
]
