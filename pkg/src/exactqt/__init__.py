"""exactqt: exact-arithmetic quantum formalism over fields with involution."""

from .autocode import (
    SCAN_LIMIT,
    FixedPointReport,
    ProjectivePoint,
    SemilinearMap,
    fixed_points,
    square_is_linear,
)
from .compose import (
    BipartiteState,
    NoCloningWitness,
    is_product,
    no_cloning_witness,
    tensor_op,
    tensor_state,
)
from .embed import (
    EmbeddingCertificate,
    FieldEmbedding,
    build_embedding,
    extend_matrix,
    extend_state,
)
from .errors import (
    DimensionMismatch,
    EvenExtensionDegree,
    ExactQTError,
    FieldMismatch,
    ImproperField,
    IsotropicVector,
    NonSquare,
    NotHermitian,
    NotHomogeneous,
    NotUnitary,
    ParseError,
    WrongField,
    ZeroState,
)
from .forms import (
    EigenDecomposition,
    EigenPair,
    Matrix,
    Polynomial,
    StateVector,
    char_poly,
    conj_transpose,
    eigen_decompose,
    herm_form,
    is_hermitian,
    is_unitary,
    null_space,
    rank,
    solve,
)
from .lefschetz import (
    CurvesMeetReport,
    SampleReport,
    TernaryForm,
    TowerVerdict,
    alpha_rename,
    curves_meet,
    eval_closure,
    eval_finite,
    expand_literals,
    free_variables,
    lefschetz_sample,
    parse_sentence,
    parse_ternary_polynomial,
    pretty,
)
from .qcore import (
    MeasurementOutcome,
    MeasurementReport,
    Observable,
    collapse,
    evolve,
    make_observable,
    measure,
    probability_profile,
    projector_onto,
)
from .sampling import (
    fixed_pool,
    norm_one_elements,
    norm_split,
    random_element,
    random_hermitian,
    random_invertible,
    random_matrix,
    random_observable_matrix,
    random_semilinear,
    random_state,
    random_unitary,
    rotation_block,
)
from .starfield import (
    Element,
    FieldDescriptor,
    GaussianRationals,
    PrimeField,
    QuadExt,
    fixed_field_coordinates,
    involute,
    is_fixed,
    make_field,
    parse_field,
)

__version__ = "0.1.0"

__all__ = [
    "BipartiteState",
    "CurvesMeetReport",
    "DimensionMismatch",
    "EigenDecomposition",
    "EigenPair",
    "Element",
    "EmbeddingCertificate",
    "EvenExtensionDegree",
    "ExactQTError",
    "FieldDescriptor",
    "FieldEmbedding",
    "FieldMismatch",
    "FixedPointReport",
    "GaussianRationals",
    "ImproperField",
    "IsotropicVector",
    "Matrix",
    "MeasurementOutcome",
    "MeasurementReport",
    "NoCloningWitness",
    "NonSquare",
    "NotHermitian",
    "NotHomogeneous",
    "NotUnitary",
    "Observable",
    "ParseError",
    "Polynomial",
    "PrimeField",
    "ProjectivePoint",
    "QuadExt",
    "SCAN_LIMIT",
    "SampleReport",
    "SemilinearMap",
    "StateVector",
    "TernaryForm",
    "TowerVerdict",
    "WrongField",
    "ZeroState",
    "alpha_rename",
    "build_embedding",
    "char_poly",
    "collapse",
    "conj_transpose",
    "curves_meet",
    "eigen_decompose",
    "eval_closure",
    "eval_finite",
    "evolve",
    "expand_literals",
    "extend_matrix",
    "extend_state",
    "fixed_field_coordinates",
    "fixed_points",
    "fixed_pool",
    "free_variables",
    "herm_form",
    "involute",
    "is_fixed",
    "is_hermitian",
    "is_product",
    "is_unitary",
    "lefschetz_sample",
    "make_field",
    "make_observable",
    "measure",
    "no_cloning_witness",
    "norm_one_elements",
    "norm_split",
    "null_space",
    "parse_field",
    "parse_sentence",
    "parse_ternary_polynomial",
    "pretty",
    "probability_profile",
    "projector_onto",
    "random_element",
    "random_hermitian",
    "random_invertible",
    "random_matrix",
    "random_observable_matrix",
    "random_semilinear",
    "random_state",
    "random_unitary",
    "rank",
    "rotation_block",
    "solve",
    "square_is_linear",
    "tensor_op",
    "tensor_state",
    "__version__",
]
