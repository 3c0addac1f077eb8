"""Look-and-say sequences in small bases: particles, decay and growth."""

from ._core import (
    ConsistencyError,
    ContractError,
    ConvergenceError,
    ResourceError,
    characteristic_polynomial,
    counting_step,
    decay_chart,
    decompose,
    dominant_eigenvalue,
    eigenvalues,
    empirical_growth,
    enumerate_essential_ancient,
    evolve,
    f_closed,
    f_recursive,
    fermion_order,
    fixed_points,
    identify,
    is_ancient,
    is_flf,
    is_run_bounded,
    iterate,
    iterations_to_common,
    k_value,
    limit_sets,
    limiting_frequencies,
    particles,
    primitivity_power,
    selfdesc_step,
    split_points,
    step,
    token_step,
    transition_matrix,
    verify,
)


def dotted(s, mode="full"):
    """Render a decomposition as '10.110.2110.211 = E.U.D.Ph'."""
    parts = decompose(s, mode)
    segments = ".".join(seg for seg, _ in parts)
    names = ".".join(sym or "?" for _, sym in parts)
    return f"{segments} = {names}"


__all__ = [name for name in dir() if not name.startswith("_")]
