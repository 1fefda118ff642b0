import math

import pytest

import covertroute as cr


@pytest.fixture
def scenario():
    return cr.generate_random(
        seed=42, n_nodes=10, n_wardens=8, dimension=100.0,
        alpha=3.0, node_noise=1.0, warden_noise=1.0,
    )


def test_scenario_roundtrip(scenario):
    text = cr.scenario_to_json(scenario)
    again = cr.scenario_from_json(text)
    assert cr.scenario_to_json(again) == text
    assert len(scenario.nodes) == 12
    assert len(scenario.wardens) == 8


def test_validation_error():
    s = cr.generate_random(1, 2, 2, 100.0, 2.5, 1.0, 1.0)
    s.alpha = 1.0
    with pytest.raises(cr.ValidationError, match="alpha < 2"):
        s.validate()


def test_route_all_regimes(scenario):
    budget = cr.CovertBudget(0.05)
    for regime in (cr.Regime.MT_SK, cr.Regime.MD_SK, cr.Regime.MT_IK, cr.Regime.MD_IK):
        result = cr.route(scenario, budget, regime)
        assert result.path.nodes[0] == scenario.source
        assert result.path.nodes[-1] == scenario.dest
        assert result.path_cost >= 0.0
        plan = result.plan
        if cr.is_mt(regime):
            assert plan.rate_coeff > 0.0
        else:
            assert plan.delay_total > 0.0


def test_covertness_certificate(scenario):
    budget = cr.CovertBudget(0.05)
    plan = cr.route(scenario, budget, cr.Regime.MT_SK).plan
    n = 10_000
    terms = plan.warden_terms(n)
    kl = cr.exact_kl_sk(terms, n)
    assert 0.0 < kl <= budget.delta
    assert cr.bound_sk(terms, n) == pytest.approx(budget.delta, rel=1e-9)


def test_allocation_matches_oracle():
    links = [cr.LinkParams(omega=w, gain=g) for w, g in [(0.5, 2.0), (2.0, 1.0), (0.1, 3.0)]]
    budget = cr.CovertBudget(0.08)
    for regime in (cr.Regime.MT_SK, cr.Regime.MD_SK, cr.Regime.MT_IK, cr.Regime.MD_IK):
        closed = cr.allocate_closed_form(regime, links, budget)
        numeric = cr.allocate_numeric_oracle(regime, links, budget)
        if cr.is_mt(regime):
            assert closed.rate_coeff == pytest.approx(numeric.rate_coeff, rel=1e-6)
        else:
            assert closed.delay_total == pytest.approx(numeric.delay_total, rel=1e-6)


def test_sweep_deterministic():
    spec = cr.SweepSpec()
    spec.axis = cr.SweepAxis.DELTA
    spec.values = [0.01, 0.05]
    spec.trials = 3
    spec.n_nodes = 6
    spec.n_wardens = 4
    spec.base_seed = 7
    spec.jobs = 1
    serial = cr.run_sweep(spec)
    spec.jobs = 4
    parallel = cr.run_sweep(spec)
    assert serial.raw_csv() == parallel.raw_csv()
    assert serial.summary_csv() == parallel.summary_csv()
    assert serial.raw_csv().startswith(
        "axis,axis_value,regime,trial,seed,rate_coeff,delay_coeff,path_len,path_cost\n"
    )


def test_sqrt_delta_scaling():
    s = cr.generate_random(3, 5, 5, 100.0, 3.0, 1.0, 1.0)
    lo = cr.route(s, cr.CovertBudget(0.01), cr.Regime.MT_SK).plan.rate_coeff
    hi = cr.route(s, cr.CovertBudget(0.04), cr.Regime.MT_SK).plan.rate_coeff
    assert hi == pytest.approx(2.0 * lo, rel=1e-12)
    assert math.isfinite(lo)
