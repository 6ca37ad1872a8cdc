"""Exit criteria. Each test records one PASS/FAIL line, shown in the
``acceptance criteria`` section of the pytest terminal summary."""

import json
import time

import numpy as np
import pytest

from laqc.bases import CaseLabel, ProbeBasis, p_phi_closed_form, r_coefficients, r_coefficients_bd, transform_to_optimal_basis
from laqc.cli import main
from laqc.info import mutual_information_tables
from laqc.quantifiers import (
    GridSpec,
    classical_correlations_bd,
    classical_correlations_numeric,
    classical_correlations_relative_entropy,
    laqc_bd,
    laqc_numeric,
    maximize_phases,
)
from laqc.states import BDTriple, UnphysicalStateError, bd_to_density, werner

from conftest import h_oracle, sample_states

pytestmark = pytest.mark.acceptance

GRID = GridSpec()  # 256 x 256, 3 refinement rounds, shrink 0.1, 512-point phase grid


def angle_gap(a, b, period):
    d = abs(a - b) % period
    return min(d, period - d)


def test_1_closed_form_reproduction(acceptance_report):
    state = BDTriple(0.1, 0.2, 0.6)
    c = classical_correlations_bd(state)
    l = laqc_bd(state)
    err_c = abs(c.value - h_oracle(0.1))
    err_l = abs(l.value - h_oracle(0.6))
    ok = err_c <= 1e-12 and err_l <= 1e-12 and c.extremal_coefficient == 0.1 and l.extremal_coefficient == 0.6
    acceptance_report("1 closed-form reproduction", ok, f"|C-h(0.1)|={err_c:.1e}, |L-h(0.6)|={err_l:.1e}")
    assert ok


def test_2a_classical_argmin_case_II(acceptance_report):
    states = sample_states(2001, 50, lambda c: abs(c[0]) < abs(c[1]) and abs(c[0]) < abs(c[2]))
    misses = []
    for state in states:
        r = classical_correlations_numeric(state, GRID, general=False)
        theta_cell, phi_cell = r.diagnostics["cell"]
        # theta -> pi - theta maps pi/2 to itself, so distance to pi/2 mod pi
        hit = (angle_gap(r.arg_angles["theta"], np.pi / 2, np.pi) <= theta_cell
               and angle_gap(r.arg_angles["phi"], 0.0, 2 * np.pi) <= phi_cell)
        if not hit:
            misses.append(state.as_tuple())
    ok = not misses
    detail = f"{50 - len(misses)}/50 argmins at (pi/2, 0)"
    if misses:
        detail += f"; first miss c={tuple(round(x, 4) for x in misses[0])}"
    acceptance_report("2a classical argmin at theta=pi/2, phi=0 when |c1| is smallest", ok, detail)
    assert ok, detail


def test_2b_laqc_basis_theta_half_pi(acceptance_report):
    states = sample_states(2002, 50, lambda c: abs(c[2]) > abs(c[0]) and abs(c[2]) > abs(c[1]))
    misses = []
    worst = 0.0
    for state in states:
        r = laqc_numeric(state, GRID)
        cell = r.diagnostics["classical"].diagnostics["cell"][0]
        delta = abs(r.value - h_oracle(abs(state.c3)))
        worst = max(worst, delta)
        if angle_gap(r.arg_angles["theta"], np.pi / 2, np.pi) > cell or delta > 1e-6:
            misses.append(state.as_tuple())
    ok = not misses
    detail = f"{50 - len(misses)}/50 at theta=pi/2 with L=h(|c3|); max |L-h(|c3|)|={worst:.2e}"
    acceptance_report("2b LAQC optimum uses theta=pi/2 when |c3| is largest", ok, detail)
    assert ok, detail


def test_3_rewritten_state_not_invariant(acceptance_report):
    states = sample_states(2003, 20, lambda c: abs(c[0] - c[2]) > 1e-3)
    diffs = [np.abs(transform_to_optimal_basis(s, CaseLabel.II) - bd_to_density(s)).max() for s in states]
    werner_diffs = [
        np.abs(transform_to_optimal_basis(werner(z), case) - bd_to_density(werner(z))).max()
        for z in np.linspace(0, 1, 11)
        for case in CaseLabel
    ]
    ok = min(diffs) > 1e-6 and max(werner_diffs) <= 1e-12
    acceptance_report("3 non-invariance of rewritten BD state", ok,
                      f"min change {min(diffs):.2e} over 20 states; Werner max change {max(werner_diffs):.1e}")
    assert ok


def test_4_oracle_equivalence(acceptance_report, tmp_path):
    out = tmp_path / "oracle.json"
    start = time.perf_counter()
    code = main(["oracle-compare", "--count", "500", "--seed", "0", "--format", "json", "--output", str(out)])
    elapsed = time.perf_counter() - start
    summary = json.loads(out.read_text())["meta"]["summary"]
    ok = code == 0 and summary["max_delta_C"] <= 1e-6 and summary["max_delta_L"] <= 1e-6 and elapsed < 120
    acceptance_report(
        "4 oracle-compare --count 500",
        ok,
        f"max dC={summary['max_delta_C']:.3e}, max dL={summary['max_delta_L']:.3e}, "
        f"{summary['failures']}/500 over 1e-6, {elapsed:.0f}s",
    )
    assert elapsed < 120
    assert ok, summary


def test_5_relative_entropy_equals_mutual_information(acceptance_report):
    worst = 0.0
    for state in sample_states(2005, 100):
        r = classical_correlations_numeric(state, GRID, general=False)
        basis = ProbeBasis.symmetric(r.arg_angles["theta"], r.arg_angles["phi"])
        via_rel = classical_correlations_relative_entropy(state, basis)
        via_mi = float(mutual_information_tables(r_coefficients(bd_to_density(state), basis).p))
        worst = max(worst, abs(via_rel - via_mi), abs(via_mi - r.value))
    ok = worst <= 1e-8
    acceptance_report("5 relative-entropy vs mutual-information path", ok, f"max diff {worst:.1e} over 100 states")
    assert ok


def test_6_two_phase_equals_single_phase(acceptance_report):
    worst = 0.0
    fine = np.linspace(0, np.pi, 4097)  # contains 0 and pi/2 exactly
    for state in sample_states(2006, 100):
        case = classical_correlations_bd(state).case
        rho_tilde = transform_to_optimal_basis(state, case)
        two_phase = maximize_phases(rho_tilde, GRID).value
        single = float(mutual_information_tables(p_phi_closed_form(state, case, fine)).max())
        worst = max(worst, abs(two_phase - single))
    ok = worst <= 1e-8
    acceptance_report("6 two-phase vs single-phase maximum", ok, f"max diff {worst:.1e} over 100 states")
    assert ok


def test_7_invariant_suite(acceptance_report):
    import itertools

    states = sample_states(2007, 500)
    failures = []
    for state in states:
        c = np.array(state.as_tuple())
        ref_c, ref_l = classical_correlations_bd(state).value, laqc_bd(state).value
        for perm in itertools.permutations(range(3)):
            for signs in itertools.product((1, -1), repeat=3):
                other = BDTriple(*(np.array(signs) * c[list(perm)]))
                try:
                    if (classical_correlations_bd(other).value, laqc_bd(other).value) != (ref_c, ref_l):
                        failures.append(("symmetry", state.as_tuple()))
                except UnphysicalStateError:
                    continue
        if ref_l < ref_c:
            failures.append(("L>=C", state.as_tuple()))
    rng = np.random.default_rng(2007)
    for state in states:
        rho = bd_to_density(state)
        theta, phi = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)
        tables = [r_coefficients_bd(state, theta, phi), r_coefficients(rho, ProbeBasis(*rng.uniform(0, np.pi, 4)))]
        for t in tables:
            if not (np.allclose(t.marginal_a, 0.5, atol=1e-12) and np.allclose(t.marginal_b, 0.5, atol=1e-12)):
                failures.append(("marginals", state.as_tuple()))
    for z in np.linspace(0, 1, 11):
        w = werner(z)
        if classical_correlations_bd(w).value != laqc_bd(w).value:
            failures.append(("werner", z))
    zero = BDTriple(0, 0, 0)
    if classical_correlations_bd(zero).value != 0 or laqc_bd(zero).value != 0:
        failures.append(("zero", 0))
    ok = not failures
    acceptance_report("7 invariant suite (500 states)", ok, f"{len(failures)} violations")
    assert ok, failures[:5]
