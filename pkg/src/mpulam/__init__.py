"""The r-regular Ulam metric on multipermutations: distances, sphere sizes, code bounds."""

from .core import (
    Multipermutation,
    Permutation,
    Translocation,
    act,
    apply_translocation,
    compose,
    equivalence_class,
    format_sequence,
    identity_multipermutation,
    parse_sequence,
    project,
)
from .exceptions import (
    CapacityError,
    DimensionError,
    MPUlamError,
    ParameterError,
    StructuralError,
    UnsupportedRegimeError,
)
from .metric import (
    bfs_translocation_distance,
    class_min_distance_oracle,
    distance,
    lcs_length,
    ulam_distance_perm,
    ulam_distance_r,
)
from .tableaux import (
    Partition,
    Tableau,
    count_content_tableaux,
    hook_length_count,
    partitions_with_min_first_part,
    rsk,
    schensted_insert,
    sphere_size_identity,
)
from .spheres import (
    alternating_runs,
    duplication_set_D,
    duplication_set_E_bruteforce,
    duplication_set_E_size,
    extremal_center_scan,
    omega_center,
    sphere_enumerate,
    sphere_size_radius1,
    unique_translocations,
)
from .bounds import CodeSet, gv_lower, greedy_code, perfect_code_lower, sphere_packing_upper, verify_code
from .enumeration import distance_matrix, enumerate_space, histogram_sphere_sizes, space_size

__version__ = "0.1.0"
