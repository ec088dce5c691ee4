"""Numerical semigroups, Kunz coordinates and the fibers of S -> S/2."""

from .counting import (
    CountRecord,
    N_gamma,
    N_m_gamma,
    closed_form_N2,
    monotonicity_report,
    n_g,
    torres_nonempty,
)
from .fiber import (
    FiberSystem,
    build_fiber_system,
    enumerate_fiber,
    fiber_lattice_points,
    fiber_size,
)
from .kunz import (
    LinearSystem,
    build_kunz_system,
    count_by_multiplicity,
    enumerate_kunz_solutions,
)
from .semigroup import (
    AperySet,
    KunzVector,
    NumericalSemigroup,
    SemigroupError,
    apery_set,
    contains,
    even_gap_count,
    from_gaps,
    from_generators,
    from_kunz,
    kunz_vector,
    parse_semigroup,
    quotient,
)

__all__ = [
    "AperySet", "CountRecord", "FiberSystem", "KunzVector", "LinearSystem",
    "NumericalSemigroup", "SemigroupError", "N_gamma", "N_m_gamma", "apery_set",
    "build_fiber_system", "build_kunz_system", "closed_form_N2", "contains",
    "count_by_multiplicity", "enumerate_fiber", "enumerate_kunz_solutions",
    "even_gap_count", "fiber_lattice_points", "fiber_size", "from_gaps",
    "from_generators", "from_kunz", "kunz_vector", "monotonicity_report", "n_g",
    "parse_semigroup", "quotient", "torres_nonempty",
]
