"""Exact cohomology of first Frobenius kernels of SL2, B and U over F_p."""

import json

from ._core import (
    DomainError,
    WeightModule,
    b1_cohomology,
    block_projection_principal,
    collapse_check,
    decompose,
    duality_pairing_rank,
    g1_cohomology_char,
    g1_invariants,
    hh_table,
    ip_expected_dims,
    kernel_basis,
    module_hom_dim,
    rank,
    run_cli,
    simple_char,
    simple_model,
    sym_power,
    tilting_char,
    trivial_module,
    truncated_sym,
    u1_cohomology,
    u_cohomology,
    weyl_chi,
)
from ._core import verify_appendix_json as _verify_appendix_json
from ._core import verify_propositions_json as _verify_propositions_json

EXIT_PASS, EXIT_FAIL, EXIT_FLAGGED, EXIT_USAGE = 0, 1, 2, 3


def verify_appendix(p, maxdeg=8, use_fixture=True):
    """Report dict {suite, checks: [{name, status, expected, computed}]}."""
    return json.loads(_verify_appendix_json(p, maxdeg, use_fixture))


def verify_propositions(p):
    return json.loads(_verify_propositions_json(p))


def dimension(character):
    return sum(character.values())


__all__ = [name for name in dir() if not name.startswith("_")]
