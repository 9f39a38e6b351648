"""Relativistic bound states of the complex PT-symmetric Poschl-Teller potential.

The heavy lifting lives in the compiled extension; this package re-exports it.
"""

from ._ptdirac import (  # noqa: F401
    CPS_REFERENCE,
    CS_REFERENCE,
    EnergySolution,
    ExponentSet,
    PotentialParams,
    PtdiracError,
    SolveOutcome,
    SolverOptions,
    centrifugal_approx,
    complex_pt_potential,
    deformed_cosh,
    deformed_sinh,
    gauss_2f1,
    gauss_2f1_derivative,
    jacobi_p,
    oracle_energy,
    pochhammer,
    pspin_energy_residual,
    pspin_lower_component,
    pspin_upper_component,
    real_pt_potential,
    run_validation,
    solve_pspin_energy,
    solve_spin_energy,
    spin_energy_residual,
    spin_lower_component,
    spin_upper_component,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
