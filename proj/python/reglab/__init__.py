"""Numerical laboratory for circle Dirac spectral invariants, Toeplitz
determinants, cyclic cocycles, and Deligne pairings."""

from _reglab import (
    ReglabError,
    TrigPoly,
    UnitFunction,
    cochain_pair,
    deligne_pairing,
    deligne_pairing_cech,
    det_mult_commutator,
    eq_mod_z,
    eta_xi,
    eta_zeta_oracle,
    exp_unit,
    log_unit,
    reduce_mod_z,
    registered_scenarios,
    rho_line_bundle,
    run_scenario,
    sigma2,
    toeplitz_index,
)

__all__ = [
    "ReglabError",
    "TrigPoly",
    "UnitFunction",
    "cochain_pair",
    "deligne_pairing",
    "deligne_pairing_cech",
    "det_mult_commutator",
    "eq_mod_z",
    "eta_xi",
    "eta_zeta_oracle",
    "exp_unit",
    "log_unit",
    "reduce_mod_z",
    "registered_scenarios",
    "rho_line_bundle",
    "run_scenario",
    "sigma2",
    "toeplitz_index",
]
