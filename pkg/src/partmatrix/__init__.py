"""Integer partitions through binary multiplicity matrices.

Bijections between restricted partition classes (Euler/Glaisher, even parts
to repeated parts, high 2-adic valuation to high multiplicity) and exhaustive
checks of the counting identities they support.
"""

from .bijections import (
    BijectionReport,
    FamilySelector,
    glaisher_d_forward,
    glaisher_d_inverse,
    thm3_inverse,
    thm3_map,
    thm5_inverse,
    thm5_map,
    verify_bijection,
)
from .bitmatrix import (
    BitMatrix,
    CellCollisionError,
    PartKey,
    apply_cell_permutation,
    decode,
    diagonal,
    encode,
    matrix_weight,
    split_part,
)
from .partition import (
    ALL,
    DISTINCT,
    ODD,
    ClassPredicate,
    DomainError,
    Kind,
    Partition,
    class_part_stats,
    format_partition,
    gen_partitions,
    num_distinct_parts,
    num_parts,
    parse_partition,
)

__version__ = "0.1.0"
