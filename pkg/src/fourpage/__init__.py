"""Four-page presentations of knots and links built from planar diagrams."""
from .analysis import Report, analyze
from .binding import (
    CircularPresentation,
    alpha4_upper_bound,
    build_presentation,
    choose_tree_for_strictness,
    page_assignment,
    repair_nonalternating,
    verify,
)
from .diagram import (
    Diagram,
    checkerboard,
    compute_faces,
    is_alternating,
    is_nonsplit,
    is_reduced,
    parse_pd,
)
from .estimator import FourPagePresenter
from .fixtures import get_fixture, load_fixtures
from .ribbon import ribbon_bound, ribbon_plan, ribbon_schematic
from .state import (
    build_tait,
    enumerate_spanning_trees,
    euler_tour,
    kauffman_state,
    spanning_tree,
    trace_circles,
)

__version__ = "0.1.0"

__all__ = [
    "CircularPresentation",
    "Diagram",
    "FourPagePresenter",
    "Report",
    "alpha4_upper_bound",
    "analyze",
    "build_presentation",
    "build_tait",
    "checkerboard",
    "choose_tree_for_strictness",
    "compute_faces",
    "enumerate_spanning_trees",
    "euler_tour",
    "get_fixture",
    "is_alternating",
    "is_nonsplit",
    "is_reduced",
    "kauffman_state",
    "load_fixtures",
    "page_assignment",
    "parse_pd",
    "repair_nonalternating",
    "ribbon_bound",
    "ribbon_plan",
    "ribbon_schematic",
    "spanning_tree",
    "trace_circles",
    "verify",
]
