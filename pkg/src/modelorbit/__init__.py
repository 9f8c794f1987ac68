"""Multiplicities of irreducibles in rings of functions on nilpotent orbits,
computed from a weighted Dynkin diagram by Levi branching of S(o) and a
signed sum over the Weyl group."""

from .errors import (
    InvalidType,
    LieDataError,
    NegativeMultiplicity,
    NotDominant,
    NotInCoweightLattice,
    NotWeylInvariant,
    Unsupported,
)
from .grading import (
    Coweight,
    Grading,
    LeviWeight,
    coweight_from_diagram,
    dims_report,
    g2_model_grading,
    grade_roots,
    grading_from_diagram,
    o_space,
)
from .levi_decomp import (
    LeviConstituent,
    WeightMultiset,
    g2_closed_form_sk,
    levi_irrep_extract,
    sym_power_multiset,
    verify_sk_equality,
)
from .orbit_mult import (
    MultiplicityReport,
    bruteforce_multiplicity_g2,
    multiplicity,
    s_lambda_set,
    truncation_bound,
    verify_model,
)
from .rootsys import (
    Root,
    RootSystem,
    WeylElement,
    apply,
    build_root_system,
    dual_weight,
    freudenthal_multiplicities,
    is_dominant,
    weyl_dimension,
)

__version__ = "0.1.0"
