"""Compare the closed forms C = h(c_m), L = h(c_M) with a grid search.

For triples whose entries share a sign the two agree to machine precision.
"""

from laqc import BDTriple
from laqc.quantifiers import GridSpec, classical_correlations_bd, classical_correlations_numeric, laqc_bd, laqc_numeric

grid = GridSpec(theta_steps=64, phi_steps=64)
for c in [(0.1, 0.2, 0.6), (0.3, 0.2, 0.1), (-0.4, -0.3, -0.2)]:
    state = BDTriple(*c)
    closed_c, closed_l = classical_correlations_bd(state), laqc_bd(state)
    num_c = classical_correlations_numeric(state, grid, general=False)
    num_l = laqc_numeric(state, grid, classical=num_c)
    print(f"c={c}")
    print(f"  C closed={closed_c.value:.10f} numeric={num_c.value:.10f} case {closed_c.case_name}")
    print(f"  L closed={closed_l.value:.10f} numeric={num_l.value:.10f}")
