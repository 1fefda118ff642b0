"""Covert multi-hop route planning: warden-exposure link costs, shortest-path
routing, closed-form power allocation, and exact relative-entropy
certification, with a seeded Monte Carlo sweep harness."""

from covertroute._core import (  # noqa: F401
    BruteForceResult,
    CovertBudget,
    ExperimentResult,
    GaussianPair,
    InfeasibleLinkError,
    LinkParams,
    NoRouteError,
    Path,
    PathPlan,
    Point,
    Regime,
    RouteResult,
    Scenario,
    SuiteReport,
    SummaryRow,
    SweepAxis,
    SweepSpec,
    SystemNode,
    TrialRecord,
    ValidationError,
    VerifyOptions,
    Warden,
    allocate,
    allocate_closed_form,
    allocate_numeric_oracle,
    bound_ik,
    bound_sk,
    brute_force_route,
    distance,
    exact_kl_ik,
    exact_kl_sk,
    generate_random,
    is_mt,
    kl_gaussian_oracle,
    link_cost,
    link_exposure,
    link_params,
    load_scenario,
    regime_from_name,
    regime_name,
    route,
    run_sweep,
    run_verification,
    save_scenario,
    scenario_from_json,
    scenario_to_json,
    summarize,
)
