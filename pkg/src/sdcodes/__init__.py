"""Self-dual linear codes over GF(p): construction, verification, search.

The toolkit centres on symmetric self-dual codes, those with generator (I | A) where
A is symmetric and A.A = -I, built step by step from smaller ones, together
with double circulant and extended quadratic residue constructions, a
minimum-weight engine, monomial-equivalence tools and a fixture catalog.
"""

from .buildup import (
    BuildStep,
    Chain,
    Sample,
    admissible_steps,
    eigen_candidates,
    extend,
    reduce,
    replay_chain,
    search_chain,
)
from .code import (
    LinearCode,
    SymmetricSD,
    WeightReport,
    direct_sum,
    is_mds,
    is_self_dual,
    min_weight,
    min_weight_exhaustive,
    to_symmetric,
)
from .constructions import (
    CirculantSpec,
    QRExtended,
    QRSpec,
    circulant,
    double_circulant_code,
    qr_cyclic,
    qr_extended,
)
from .equiv import (
    EquivalenceResult,
    Fingerprint,
    MonomialTransform,
    apply,
    fingerprint,
    is_equivalent_small,
    transpose_equivalent,
)
from .gf import (
    ExtField,
    ExtFieldElement,
    FieldElement,
    GF,
    Polynomial,
    PrimeField,
    find_irreducible,
    is_nonzero_square,
    primitive_root_of_unity,
    roots_of_minus_one,
    sqrt,
)
from .linalg import Matrix, Vector, block2x2, dot, eigenspace, kernel, mat_mul, outer, rref

__all__ = [
    "BuildStep",
    "Chain",
    "CirculantSpec",
    "EquivalenceResult",
    "ExtField",
    "ExtFieldElement",
    "FieldElement",
    "Fingerprint",
    "GF",
    "LinearCode",
    "Matrix",
    "MonomialTransform",
    "Polynomial",
    "PrimeField",
    "QRExtended",
    "QRSpec",
    "Sample",
    "SymmetricSD",
    "Vector",
    "WeightReport",
    "admissible_steps",
    "apply",
    "block2x2",
    "circulant",
    "direct_sum",
    "dot",
    "double_circulant_code",
    "eigen_candidates",
    "eigenspace",
    "extend",
    "find_irreducible",
    "fingerprint",
    "is_equivalent_small",
    "is_mds",
    "is_nonzero_square",
    "is_self_dual",
    "kernel",
    "mat_mul",
    "min_weight",
    "min_weight_exhaustive",
    "outer",
    "primitive_root_of_unity",
    "qr_cyclic",
    "qr_extended",
    "reduce",
    "replay_chain",
    "roots_of_minus_one",
    "rref",
    "search_chain",
    "sqrt",
    "to_symmetric",
    "transpose_equivalent",
]

__version__ = "0.1.0"
