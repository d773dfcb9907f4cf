"""Minimum-jerk trajectories for straight and via-point planar movements."""

from ._core import (
    CostScanResult,
    MjtError,
    MotionSpec,
    Point2,
    Polynomial,
    RootCandidate,
    TrajectorySample,
    ViaConstants,
    ViaMotionSpec,
    ViaSolution,
    compute_constants,
    cost_vs_tau1_scan,
    curved_position,
    curved_velocity,
    find_real_roots,
    hamiltonian_residual,
    jerk_cost,
    run_cli,
    sample_curved,
    sample_straight,
    solve_via,
    straight_position,
    straight_velocity,
    tau1_polynomial,
    to_csv,
    validate_motion_spec,
    validate_via_spec,
)

__all__ = [name for name in dir() if not name.startswith("_")]
