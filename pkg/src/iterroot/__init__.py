"""Iterative roots of multifunctions on finite ground sets: nonexistence
certificates, pullback theory, fixed-point order exclusions, polynomial
advice, and exhaustive search oracles."""

from .core import (
    GroundSet,
    Multifunction,
    SingleMap,
    StructuralProfile,
    as_single_map,
    compose,
    compose_map,
    equals,
    identity_map,
    identity_multifunction,
    image,
    inverse_image,
    invert,
    iterate,
    iterate_map,
    profile,
)
from .criteria import (
    Certificate,
    Conclusion,
    Rule,
    check_forward_paths,
    check_forward_points,
    check_inverse_paths,
    check_inverse_points,
    scan,
)
from .fixedpoint import (
    FixedPointProfile,
    OrderExclusion,
    fixed_point_profile,
    non_isolated_exclusion,
    rice_exclusion,
)
from .instances import (
    InstanceSpec,
    build,
    cyclic_power,
    f1,
    f2,
    fig67,
    random_multifunction,
    random_permutation,
    random_single_map,
)
from .mfnio import ParseError, parse, serialize
from .paths import PathCountMatrix, count_paths, count_paths_dfs, path_matrix
from .poly import ComplexPolynomial, PolyAdvice, advise, first_solar, solar_criterion
from .pullback import (
    PullbackWitness,
    decomposition_check,
    is_pullback,
    pullback_of,
    transfer_root,
)
from .search import (
    RootConstraint,
    SearchResult,
    UNCONSTRAINED,
    find_multi_root,
    find_single_root,
    max_in_degree,
    max_out_degree,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
