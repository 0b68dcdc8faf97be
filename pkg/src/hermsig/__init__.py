"""Exact enumeration of theta-stable parabolic signatures for Hermitian symmetric pairs."""

from .errors import (
    BadGeneratorIndex,
    ConstraintViolation,
    DegenerateBasis,
    DimensionMismatch,
    HermsigError,
    InvalidParabolicSubset,
    NotTabulated,
    OrbitLimitExceeded,
    ParameterOutOfRange,
    SingularSystem,
    ZeroRoot,
)
from .rootsys import CartanType, PairDescriptor, RatVec, RootDatum, build_root_datum, eval_root, reflect
from .weyl import WeylWord, apply_word, coset_representatives, flag_poincare, orbit_bfs
from .signatures import Signature, SignatureSet, attainable_rminus, attainable_signatures, r_signature
from .closed_forms import CellComparison, Status, closed_form_rminus, compare_cell
from .hodge import (
    HodgeDiamond,
    PicardReport,
    VanishingVerdict,
    Verdict,
    h11_structure,
    leray_hirsch,
    picard_reports,
    vanish_h0q,
    vanish_h1q,
)
