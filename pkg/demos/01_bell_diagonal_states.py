"""Build a few Bell-diagonal states and look at their spectra.

Run with ``python demos/01_bell_diagonal_states.py``.
"""

import numpy as np

from laqc import BDTriple, bd_eigenvalues, bd_to_density, is_physical, werner
from laqc.info import von_neumann_entropy

for label, state in [
    ("maximally mixed", BDTriple(0.0, 0.0, 0.0)),
    ("Werner z=0.5", werner(0.5)),
    ("generic", BDTriple(0.3, -0.2, 0.1)),
    ("singlet", BDTriple(-1.0, -1.0, -1.0)),
]:
    rho = bd_to_density(state)
    print(f"{label:>16}: c={state.as_tuple()}")
    print(f"{'':>16}  eigenvalues={np.round(bd_eigenvalues(state), 4)}  S={von_neumann_entropy(rho):.4f}")

# Outside the tetrahedron one eigenvalue goes negative.
print("(0.9, 0.9, 0.9) physical?", is_physical(BDTriple(0.9, 0.9, 0.9)))
