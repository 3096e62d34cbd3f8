"""Rectangle Delaunay triangulations with exact predicates, tight
spanning-ratio analysis, and certified bounded-length paths."""

from .analysis import (
    BoundViolation,
    StretchReport,
    all_pairs_stretch,
    bound_formula,
    directional_bound,
    shortest_path_lengths,
)
from .chains import TriangleChain, triangle_chain
from .delaunay import (
    EmptyBox,
    Triangulation,
    build_triangulation,
    circumhomothets_of_triple,
    has_edge,
)
from .errors import (
    CertificateError,
    DegenerateInputError,
    DisconnectedGraphError,
    GeneralPositionError,
    RectDelError,
)
from .generate import generate_points
from .geometry import (
    AspectRatio,
    Homothet,
    Point,
    PointSet,
    Side,
    classify_edge,
    locate_point,
    perimeter_distance_clockwise,
    slope_class,
    smallest_homothet_scale,
    validate_general_position,
)
from .proof_path import (
    Certificate,
    CertStep,
    LemmaCheck,
    ProofPathExtractor,
    classify_region,
    extract_all_pairs,
    extract_proof_path,
    has_potential,
    inductive_info,
    maximal_path,
    replay_lemmas,
)
from .search import worst_case_search
from .structure import count_report, planarity_violations, verify_structure
from .triples import build_by_triples, circumhomothets_by_oracle
from .verify_cert import VerifierContext, verify_certificate

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
