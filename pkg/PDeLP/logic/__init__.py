"""逻辑子系统：领域类型与 GMP 演算"""

from .core import (
    Atom,
    Clause,
    Literal,
    Program,
    ValidationReport,
    WeightedClause,
    complement,
    to_degree,
    validate_program,
)
from .deduction import (
    ContradictionWitness,
    ProofTree,
    best_proof,
    degree_table,
    depends_on,
    is_contradictory,
    max_degree,
)

__all__ = [
    "Atom",
    "Clause",
    "Literal",
    "Program",
    "ValidationReport",
    "WeightedClause",
    "complement",
    "to_degree",
    "validate_program",
    "ContradictionWitness",
    "ProofTree",
    "best_proof",
    "degree_table",
    "depends_on",
    "is_contradictory",
    "max_degree",
]
