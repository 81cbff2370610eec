from sglab.spectral.bounds import (
    all_bounds,
    hong_bound,
    stanic_bound,
    stanic_edge_requirement,
    turan_bound,
    turan_clique_guarantee,
    wyq_bound,
)
from sglab.spectral.charpoly import char_poly, char_poly_C3K, cubic_factor_C3K
from sglab.spectral.cliques import (
    balanced_clique_number,
    clique_number,
    max_balanced_clique,
    max_clique,
)
from sglab.spectral.eigen import eigenvalues, jacobi_eigenvalues, spectral_radius

__all__ = [
    "all_bounds",
    "balanced_clique_number",
    "char_poly",
    "char_poly_C3K",
    "clique_number",
    "cubic_factor_C3K",
    "eigenvalues",
    "hong_bound",
    "jacobi_eigenvalues",
    "max_balanced_clique",
    "max_clique",
    "spectral_radius",
    "stanic_bound",
    "stanic_edge_requirement",
    "turan_bound",
    "turan_clique_guarantee",
    "wyq_bound",
]
