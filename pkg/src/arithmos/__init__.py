"""Exact Book VII arithmetic, the square/oblong partition, and certificates
for the rationality of square and cube roots of naturals."""

from .classify import (
    ClassificationTable,
    CubeEquilateral,
    Oblong,
    Parallelepipedal,
    SquareEquilateral,
    classification_table,
    classify_plane,
    classify_solid,
    oblong_factorizations,
    power_count,
)
from .commensurability import (
    AuditReport,
    Commensurable,
    Incommensurable,
    Irrational,
    LineKind,
    RationalInteger,
    Surd,
    classify_line,
    decide_rationality,
    equivalence1_check,
    partition_audit,
    surd_ratio_commensurable,
)
from .errors import ArithmosError, ContractViolation, PreconditionError
from .euclid import (
    Ratio,
    ReductionWitness,
    are_relatively_prime,
    coprime_power_lemma,
    gcd,
    integer_root,
    mul_repeated,
    prestet_divisor,
    reduce,
)
from .oracle import OracleResult, oracle_root_rational, oracle_surd_ratio
from .proof import ProofTrace, build_trace, replay

__version__ = "0.1.0"
