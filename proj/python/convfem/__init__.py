"""Convolutional finite elements in time for m u'' + k u = f."""

from ._core import (
    Element,
    ErrorReport,
    Forcing,
    GlobalSystem,
    LocalSystem,
    Mesh,
    MeshCheck,
    OscillatorProblem,
    QuadratureSpec,
    ReducedSystem,
    SingularSystemError,
    Trajectory,
    amplification_eigenvalues,
    assemble_global,
    convolve,
    convolve_shifted,
    critical_period_ratio,
    error_metrics,
    exact_solution,
    fem_trajectory,
    global_system_direct,
    impose_initial_conditions,
    local_force,
    local_matrices,
    march,
    march_on_mesh,
    natural_frequency,
    recover_final_velocity,
    solve_reduced,
    stability_limit,
    uniform_mesh,
    validate_mesh,
)

__all__ = [name for name in dir() if not name.startswith("_")]
