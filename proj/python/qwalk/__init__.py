"""Classical vs quantum walk analysis on weighted networks."""

from qwalk._core import (
    DataError,
    DegreeVector,
    DensityState,
    FitResult,
    Graph,
    NumericalError,
    PoissonFit,
    PowerLawFit,
    Trajectory,
    TrajectoryPoint,
    WalkSummary,
    __version__,
    classical_generator,
    classical_stationary,
    degrees,
    energy,
    energy_uniform_closed_form,
    entropy_bound,
    finite_time_average,
    fit_correction_exponent,
    fit_poisson_quantumness,
    fit_power_law,
    fit_power_law_log,
    from_edge_list,
    general_eigenvalues,
    generate_ba,
    generate_er,
    generate_rg,
    generate_ws,
    giant_component,
    ground_state,
    group_eigenspaces,
    is_connected,
    l1_distance,
    laplacian,
    load_edge_list,
    make_complete,
    make_path,
    make_ring,
    make_star,
    mc_step,
    optimize_quantumness,
    quantum_hamiltonian,
    quantum_long_time_average,
    quantumness_ba_analytic,
    quantumness_poisson,
    quantumness_uniform,
    renyi_entropy,
    rg_radius_for_mean_degree,
    save_edge_list,
    shannon_entropy,
    spectral_gap,
    spectrum,
    to_edge_list,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
