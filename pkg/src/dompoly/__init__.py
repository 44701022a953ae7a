"""Exact domination polynomials of small graphs.

Count dominating sets by brute force, evaluate the cycle-family
recurrences in exact integer arithmetic, and verify at desk scale that
a cycle's domination polynomial identifies it uniquely.
"""

from .cycles import (
    Ord3Class,
    a_value,
    alpha,
    b_value,
    beta,
    cycle_polynomial,
    ord3_classification,
    theta,
)
from .errors import (
    Graph6FormatError,
    Graph6ParseError,
    Graph6RangeError,
    InternalInconsistencyError,
    ParameterDomainError,
    SizeGuardError,
    ValuationError,
)
from .graphs import (
    Graph,
    build_family,
    complete,
    complete_cycle_join,
    cycle,
    disjoint_union,
    encode_graph6,
    has_duplicate_closed_neighborhoods,
    iter_graph6_records,
    join,
    parse_family_spec,
    parse_graph6,
    path,
    wheel,
)
from .oracle import (
    DEFAULT_GUARD,
    domination_number,
    domination_polynomial,
    domination_profile,
)
from .polynomials import IntPolynomial, ord_p
from .verify import (
    CorpusClassification,
    EquivalenceClassReport,
    VerificationReport,
    classify_corpus,
    enumerate_partitions,
    partition_polynomial,
    run_all,
    verify_cycle_uniqueness,
    verify_path_class,
    verify_ten_case_table,
    verify_wheel_uniqueness,
)

__version__ = "0.1.0"
