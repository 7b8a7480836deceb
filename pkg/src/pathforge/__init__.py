"""Bi-banded and peak-counting lattice paths, and the bijection between them."""
from .bijection import check_weight_correspondence, mapping_record, phi, phi_inverse
from .checkmark import (
    CheckmarkPair,
    from_checkmarks,
    is_dyck_pair,
    parse_checkmarks,
    to_checkmarks,
)
from .enumeration import (
    Scheme,
    VerifyReport,
    WeightPolynomial,
    bilateral_coeff,
    catalan,
    closed_form_polynomial,
    enumerate_paths,
    narayana,
    verify,
    weight_polynomial,
)
from .errors import (
    ArithmeticOverflow,
    EmptyWord,
    IllegalCharacter,
    LimitExceeded,
    MalformedPair,
    OddLength,
    PathforgeError,
    UnbalancedWord,
    WalkError,
)
from .path import (
    Lattice,
    Path,
    Step,
    TurnList,
    Word,
    classify,
    heights,
    parse_word,
    path_from_text,
    render_word,
    turns,
)
from .weighting import (
    Band,
    BiBandedMonomial,
    PeakMonomial,
    band_of,
    bibanded_monomial,
    peak_monomial,
)

__version__ = "0.1.0"
