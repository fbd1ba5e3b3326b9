"""Exact representation of diagram monoids and their idempotent counts.

The package has three layers: core diagram arithmetic (partitions of 2n
points, the stacking product, structural invariants), a counting engine
built on exact integer combinatorics (several independent routes to every
count), and a brute-force oracle plus verifier that plays the routes
against exhaustive enumeration of the small cases.
"""

from .combinat import (
    IntegerPartitionSpec,
    base_sequence,
    bell,
    binomial,
    e_nrs,
    integer_partitions,
    involutions,
    odd_double_factorial,
    pi_count,
    stirling2,
)
from .core import (
    DiagramPartition,
    EquivalenceRelation,
    LambdaGraph,
    MonoidFamily,
    StructuralProfile,
    decompose_irreducible,
    family_check,
    format_diagram,
    identity,
    lambda_graph,
    make_partition,
    multiply,
    parse_diagram,
    profile,
)
from .counting import (
    CountTable,
    a_nr,
    a_nrt,
    b_nr,
    c_values,
    cache_load,
    cache_save,
    completely_regular_count,
    e_rank,
    e_total,
    exi_rank,
    exi_total,
    ideal_idempotent_count,
    rho,
)
from .errors import (
    CoverageError,
    DiagramError,
    DimensionMismatchError,
    DomainError,
    EmptyBlockError,
    NotBalancedError,
    NotDecomposableError,
    NotPartialBrauerError,
    OverlapError,
    ParityError,
    TooLargeError,
    VertexRangeError,
)
from .idempotency import (
    ComponentType,
    TwistOrder,
    classify_lambda_components,
    is_balanced,
    is_idempotent_direct,
    is_idempotent_structural,
    is_twisted_idempotent,
    rank_from_components,
)
from .oracle import (
    BruteReport,
    brute_report,
    enumerate_elements,
    green_signature,
    predicted_element_count,
)
from .tables import build_table, compare_table, known_discrepancies, printed_table, render_table
from .verify import run_full, run_quick

__version__ = "0.1.0"

__all__ = [
    "BruteReport",
    "ComponentType",
    "CountTable",
    "CoverageError",
    "DiagramError",
    "DiagramPartition",
    "DimensionMismatchError",
    "DomainError",
    "EmptyBlockError",
    "EquivalenceRelation",
    "IntegerPartitionSpec",
    "LambdaGraph",
    "MonoidFamily",
    "NotBalancedError",
    "NotDecomposableError",
    "NotPartialBrauerError",
    "OverlapError",
    "ParityError",
    "StructuralProfile",
    "TooLargeError",
    "TwistOrder",
    "VertexRangeError",
    "a_nr",
    "a_nrt",
    "b_nr",
    "base_sequence",
    "bell",
    "binomial",
    "brute_report",
    "build_table",
    "c_values",
    "cache_load",
    "cache_save",
    "classify_lambda_components",
    "compare_table",
    "completely_regular_count",
    "decompose_irreducible",
    "e_nrs",
    "e_rank",
    "e_total",
    "enumerate_elements",
    "exi_rank",
    "exi_total",
    "family_check",
    "format_diagram",
    "green_signature",
    "ideal_idempotent_count",
    "identity",
    "integer_partitions",
    "involutions",
    "is_balanced",
    "is_idempotent_direct",
    "is_idempotent_structural",
    "is_twisted_idempotent",
    "known_discrepancies",
    "lambda_graph",
    "make_partition",
    "multiply",
    "odd_double_factorial",
    "parse_diagram",
    "pi_count",
    "predicted_element_count",
    "printed_table",
    "profile",
    "rank_from_components",
    "render_table",
    "rho",
    "run_full",
    "run_quick",
    "stirling2",
]
