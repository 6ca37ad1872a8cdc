"""
Classical correlations C and local available quantum correlations L of
Bell-diagonal states.

Two independent routes are provided for each quantifier:

* closed forms, C = h(c_m) and L = h(c_M), with c_m / c_M the smallest /
  largest of |c1|, |c2|, |c3| and h the binary correlation entropy;
* brute force, which minimizes the mutual information of the probe-basis
  statistics over (theta, phi), rewrites the state in the minimizing basis,
  and maximizes the mutual information of the complementary-basis statistics
  over both local phases.

The routes agree when c1, c2, c3 share a sign. With mixed signs, some
symmetric probe direction has zero correlation, so the brute-force C is 0.
:func:`minimal_symmetric_correlation` gives that exact minimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

import numpy as np

from laqc.bases import (
    TWO_PI,
    CaseLabel,
    ProbeBasis,
    chi_of_rho,
    mu_vectors,
    project_product_states,
    r_table_bd,
    rewrite_in_basis,
    transform_to_optimal_basis,
    u_table_grid,
)
from laqc.info import binary_correlation_entropy, mutual_information_tables, relative_entropy
from laqc.optimize import grid_refine
from laqc.states import BDTriple, bd_to_density, partial_trace, require_physical

TIE_TOL = 1e-9
EXTREMAL_TIE_TOL = 1e-12


@dataclass(frozen=True)
class GridSpec:
    """Resolution of the brute-force searches.

    ``theta_steps`` x ``phi_steps`` is the probe-angle grid; ``phase_steps``
    is the per-phase grid of the complementary-basis search, whose refinement
    rounds use ``phase_refine_steps`` points per phase. Every grid is refined
    ``refine_rounds`` times with window factor ``refine_shrink``.
    ``general_steps`` sets the per-angle grid of the four-angle probe search.
    """

    theta_steps: int = 256
    phi_steps: int = 256
    refine_rounds: int = 3
    refine_shrink: float = 0.1
    phase_steps: int = 512
    phase_refine_steps: int = 64
    general_steps: int = 16

    def __post_init__(self) -> None:
        for name in ("theta_steps", "phi_steps", "phase_steps", "phase_refine_steps", "general_steps"):
            if int(getattr(self, name)) < 8:
                raise ValueError(f"{name} must be at least 8")
        if self.refine_rounds < 0:
            raise ValueError("refine_rounds must be non-negative")
        if not 0.0 < self.refine_shrink < 1.0:
            raise ValueError("refine_shrink must lie in (0, 1)")


@dataclass(frozen=True)
class QuantifierResult:
    value: float
    arg_angles: dict[str, float]
    case: CaseLabel | Literal["numeric"]
    extremal_coefficient: float
    tie: bool = False
    diagnostics: dict = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.value < -1e-12:
            raise ValueError(f"quantifier value must be non-negative, got {self.value}")
        if not -1e-12 <= self.extremal_coefficient <= 1 + 1e-12:
            raise ValueError("extremal_coefficient must lie in [0, 1]")

    @property
    def case_name(self) -> str:
        return self.case.value if isinstance(self.case, CaseLabel) else str(self.case)


def select_extremal(
    state: BDTriple, mode: Literal["min", "max"], tol: float = EXTREMAL_TIE_TOL
) -> tuple[float, int, bool]:
    """Smallest or largest |c_i| with its 1-based index and a tie flag.

    The first attaining index in the order c1, c2, c3 is returned.
    """
    mags = np.array(state.abs_values())
    if mode == "min":
        target = mags.min()
    elif mode == "max":
        target = mags.max()
    else:
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
    hits = np.flatnonzero(np.abs(mags - target) <= tol)
    return float(target), int(hits[0]) + 1, bool(hits.size > 1)


def _tied_axes(state: BDTriple, target: float, tol: float = EXTREMAL_TIE_TOL) -> list[int]:
    return [k + 1 for k, m in enumerate(state.abs_values()) if abs(m - target) <= tol]


def _lowest_case(axes: Iterable[int]) -> CaseLabel:
    cases = [CaseLabel.for_axis(a) for a in axes]
    return min(cases, key=lambda c: list(CaseLabel).index(c))


def classical_correlations_bd(state: BDTriple) -> QuantifierResult:
    """C = h(c_m), read out in the basis of the axis that attains c_m.

    On ties the lowest-numbered case is reported and ``tie`` is set.
    """
    require_physical(state)
    cm, _, tie = select_extremal(state, "min")
    case = _lowest_case(_tied_axes(state, cm))
    theta, phi = case.angles
    return QuantifierResult(
        value=binary_correlation_entropy(cm),
        arg_angles={"theta": theta, "phi": phi},
        case=case,
        extremal_coefficient=cm,
        tie=tie,
    )


def laqc_bd(state: BDTriple) -> QuantifierResult:
    """L = h(c_M).

    ``case`` is the optimal computational basis (the c_m axis), whose
    complementary plane holds the axis attaining c_M. ``Phi`` is 0 when
    the first coefficient of the rewritten state is the larger one, and
    pi/2 otherwise.
    """
    require_physical(state)
    cM, _, tie = select_extremal(state, "max")
    basis = classical_correlations_bd(state)
    case = basis.case
    c = state.abs_values()
    first, second = {
        CaseLabel.I: (c[0], c[1]),
        CaseLabel.II: (c[2], c[1]),
        CaseLabel.III: (c[2], c[0]),
    }[case]
    phase = 0.0 if first >= second else np.pi / 2
    return QuantifierResult(
        value=binary_correlation_entropy(cM),
        arg_angles={**basis.arg_angles, "Phi1": phase, "Phi2": phase},
        case=case,
        extremal_coefficient=cM,
        tie=tie or basis.tie,
    )


def minimal_symmetric_correlation(state: BDTriple) -> float:
    """Exact min over symmetric probe directions n of |sum_i c_i n_i^2|.

    Equals c_m when c1, c2, c3 share a strict sign, and 0 otherwise.
    """
    c = state.as_array()
    if c.min() <= 0.0 <= c.max():
        return 0.0
    return float(np.abs(c).min())


def _symmetric_objective(state: BDTriple):
    def objective(axes):
        theta, phi = np.meshgrid(axes[0], axes[1], indexing="ij")
        return mutual_information_tables(r_table_bd(state, theta, phi))

    return objective


def general_probe_minimum(state: BDTriple, grid: GridSpec = GridSpec()) -> QuantifierResult:
    """Minimize the probe mutual information over independent bases on A and B.

    Uses the projection route on the density matrix. For BD states this
    minimum is 0 because orthogonal probe directions on A and B decorrelate
    the outcomes.
    """
    require_physical(state)
    rho = bd_to_density(state)

    def objective(axes):
        ta, pa, tb, pb = axes
        va = mu_vectors(*np.meshgrid(ta, pa, indexing="ij"))
        vb = mu_vectors(*np.meshgrid(tb, pb, indexing="ij"))
        return mutual_information_tables(project_product_states(rho, va, vb))

    n = grid.general_steps
    opt = grid_refine(
        objective,
        lower=[0.0, 0.0, 0.0, 0.0],
        upper=[np.pi, TWO_PI, np.pi, TWO_PI],
        steps=[n, n, n, n],
        rounds=grid.refine_rounds,
        shrink=grid.refine_shrink,
        periodic=[False, True, False, True],
    )
    basis = ProbeBasis(*opt.x)
    table = project_product_states(
        rho, mu_vectors(basis.theta_a, basis.phi_a), mu_vectors(basis.theta_b, basis.phi_b)
    )
    return QuantifierResult(
        value=max(opt.value, 0.0),
        arg_angles={
            "theta_a": basis.theta_a,
            "phi_a": basis.phi_a,
            "theta_b": basis.theta_b,
            "phi_b": basis.phi_b,
        },
        case="numeric",
        extremal_coefficient=float(min(abs(table[0, 0] + table[1, 1] - table[0, 1] - table[1, 0]), 1.0)),
        diagnostics={"evaluations": opt.evaluations},
    )


def classical_correlations_numeric(
    state: BDTriple, grid: GridSpec = GridSpec(), general: bool = True
) -> QuantifierResult:
    """Brute-force C: the smallest probe mutual information over symmetric bases.

    With ``general=True`` the four-angle search of
    :func:`general_probe_minimum` also runs. Its result goes into
    ``diagnostics["general"]`` and does not replace the symmetric optimum.
    """
    require_physical(state)
    opt = grid_refine(
        _symmetric_objective(state),
        lower=[0.0, 0.0],
        upper=[np.pi, TWO_PI],
        steps=[grid.theta_steps, grid.phi_steps],
        rounds=grid.refine_rounds,
        shrink=grid.refine_shrink,
        periodic=[False, True],
    )
    theta, phi = (float(v) for v in opt.x)
    table = r_table_bd(state, theta, phi)
    diagnostics = {"cell": opt.cell.tolist(), "evaluations": opt.evaluations}
    if general:
        diagnostics["general"] = general_probe_minimum(state, grid)
    return QuantifierResult(
        value=max(opt.value, 0.0),
        arg_angles={"theta": theta, "phi": phi},
        case="numeric",
        extremal_coefficient=float(min(abs(4.0 * table[0, 0] - 1.0), 1.0)),
        diagnostics=diagnostics,
    )


def maximize_phases(rho_tilde: np.ndarray, grid: GridSpec = GridSpec()):
    """Max over (Phi_1, Phi_2) of the complementary-basis mutual information."""

    def objective(axes):
        return mutual_information_tables(u_table_grid(rho_tilde, axes[0], axes[1]))

    n = grid.phase_steps
    return grid_refine(
        objective,
        lower=[0.0, 0.0],
        upper=[TWO_PI, TWO_PI],
        steps=[n, n],
        rounds=grid.refine_rounds,
        shrink=grid.refine_shrink,
        periodic=[True, True],
        maximize=True,
        refine_steps=[grid.phase_refine_steps] * 2,
    )


def optimal_basis_candidates(
    state: BDTriple, classical: QuantifierResult, tie_tol: float = TIE_TOL
) -> list[tuple[CaseLabel | Literal["numeric"], float, float, np.ndarray]]:
    """Candidate optimal computational bases as ``(label, theta, phi, rho_tilde)``.

    These are the named cases whose probe mutual information is within
    ``tie_tol`` of the numeric minimum, followed by the numeric minimizer.
    """
    candidates = []
    objective = _symmetric_objective(state)
    for case in CaseLabel:
        theta, phi = case.angles
        value = float(objective([np.array([theta]), np.array([phi])])[0, 0])
        if value <= classical.value + tie_tol:
            candidates.append((case, theta, phi, transform_to_optimal_basis(state, case)))
    theta, phi = classical.arg_angles["theta"], classical.arg_angles["phi"]
    candidates.append(("numeric", theta, phi, rewrite_in_basis(bd_to_density(state), theta, phi)))
    return candidates


def laqc_numeric(
    state: BDTriple,
    grid: GridSpec = GridSpec(),
    classical: QuantifierResult | None = None,
) -> QuantifierResult:
    """Brute-force L, maximized over every candidate optimal computational basis.

    A precomputed symmetric ``classical`` result may be passed to skip the
    probe search. Named cases win exact ties against the numeric minimizer.
    """
    require_physical(state)
    if classical is None:
        classical = classical_correlations_numeric(state, grid, general=False)
    candidates = optimal_basis_candidates(state, classical)

    best = None
    for label, theta, phi, rho_tilde in candidates:
        opt = maximize_phases(rho_tilde, grid)
        if best is None or opt.value > best[0].value + 1e-12:
            best = (opt, label, theta, phi, rho_tilde)
    opt, label, theta, phi, rho_tilde = best
    phi1, phi2 = (float(v) for v in opt.x)
    table = u_table_grid(rho_tilde, np.array([phi1]), np.array([phi2]))[0, 0]
    return QuantifierResult(
        value=max(opt.value, 0.0),
        arg_angles={"theta": theta, "phi": phi, "Phi1": phi1, "Phi2": phi2},
        case=label,
        extremal_coefficient=float(min(abs(table[0, 0] + table[1, 1] - table[0, 1] - table[1, 0]), 1.0)),
        tie=len(candidates) > 2,
        diagnostics={"candidates": [getattr(c[0], "value", c[0]) for c in candidates], "classical": classical},
    )


def classical_correlations_relative_entropy(state: BDTriple, basis: ProbeBasis) -> float:
    """S(X || Pi_X) with X the state dephased in ``basis`` and Pi_X = X_A ⊗ X_B.

    The product of the marginals is the nearest product state to X, so this
    is the relative-entropy form of the classical correlations at ``basis``.
    """
    require_physical(state)
    chi = chi_of_rho(bd_to_density(state), basis)
    product = np.kron(partial_trace(chi, 0), partial_trace(chi, 1))
    return relative_entropy(chi, product)
