"""Good semigroups of N^d by their small elements: Apery level partitions,
symmetry duality, non-local products, well-behaved complements, and the
plane-curve blowup shift."""

from .lattice import (
    Point,
    IndexSet,
    consecutive_in,
    delta,
    dominates,
    leq,
    leqleq,
    meet,
)
from .semigroup import (
    GoodSemigroup,
    NumericalSemigroup,
    ValidationReport,
    absolute_elements,
    direct_product,
    from_numerical,
    full_monoid,
    is_absolute,
    is_almost_symmetric,
    is_local,
    is_symmetric,
    multiplicity,
    numerical_from_good,
    projection,
    pseudo_frobenius,
    validate,
)
from .ideal import (
    CappedComplement,
    GoodIdeal,
    apery_set,
    complement,
    principal_ideal,
    product_ideal,
    validate_ideal,
)
from .levels import (
    InfimumWitness,
    LevelPartition,
    apery_levels,
    complete_infimum,
    domination_partition,
    level_function,
    partition,
    partition_points,
)
from .duality import (
    DualPartition,
    build_Z_W,
    check_almost_symmetric_duality,
    check_duality,
    dual_levels,
    is_symmetric_complement,
)
from .products import ProductContext, apery_nonlocal_d2, build_product_context, product_level
from .wellbehaved import (
    LevelStructure,
    classify_level,
    d2_equivalences,
    gamma_line_levels,
    is_well_behaved,
    projection_level_bound,
    single_line_level,
)
from .planecurve import (
    PlaneBranchProfile,
    TwoBranchBlowupResult,
    blowup_numerical,
    check_absolute_levels,
    compare_partitions_planecurve,
    is_plane_branch,
    omega_jk,
    plane_branch_profile,
    reconstruct_from_blowup,
    tau_values,
    verify_apery_shift,
)
from .fileio import emit_semigroup, load_semigroup, save_semigroup
from .fixtures import catalog, fixture_path, load_fixture

__version__ = "0.1.0"
