"""Why sign structure matters.

The symmetric-probe correlation is c_eff = c3 cos^2(t) + sin^2(t)(c1 cos^2(p) + c2 sin^2(p)),
a convex combination of c1, c2, c3. With mixed signs some probe makes it
vanish, so the minimal mutual information is 0 rather than h(c_m).
"""

from laqc import BDTriple
from laqc.quantifiers import GridSpec, classical_correlations_bd, classical_correlations_numeric, minimal_symmetric_correlation

grid = GridSpec(theta_steps=64, phi_steps=64)
for c in [(0.3, 0.2, 0.1), (-0.2, 0.3, -0.4)]:
    state = BDTriple(*c)
    numeric = classical_correlations_numeric(state, grid, general=False)
    print(f"c={c}: h(c_m)={classical_correlations_bd(state).value:.6f}  "
          f"grid minimum={numeric.value:.6f}  min |c_eff|={minimal_symmetric_correlation(state):.3f}")
