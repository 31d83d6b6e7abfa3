"""Exact Gauss-diagram invariants for long knots and 3-component links.

The package computes the Casson knot invariant and the Milnor triple
linking number directly from diagrams that may contain transverse
multiple crossings, resolves such crossings into double crossings
without changing the invariants, ingests polygonal 3-space links, and
cross-checks everything against independent oracles (Conway skein
recursion, Magnus expansion, Gauss linking integral).
"""

from .core import (
    ANGLE_TOL,
    Chord,
    Crossing,
    GaussDiagram,
    KNOT_PATTERN_KEYS,
    LINK_PATTERN_KEYS,
    LONG_KNOT,
    LONG_LINK3,
    Pass,
    PatternCounts,
    StrandPoint,
    build_diagram,
    casson,
    count_knot_patterns,
    count_link_patterns,
    crossing_sign,
    derive_chords,
    insert_kink,
    linking,
    mirror,
    mu123,
)
from .corpus import CorpusEntry, corpus_get, corpus_list
from .errors import (
    DegenerateHeight,
    DegenerateProjection,
    GaussForgeError,
    GenerationExhausted,
    IntersectingInputs,
    IsotopyViolation,
    NonGenericOffsets,
    NonIntegerInvariant,
    NonTransverse,
    NonzeroPairwiseLinking,
    NotATriple,
    ParamCollision,
    ScaleOverflow,
    SizeLimit,
    SnapAmbiguity,
    UnknownEntry,
    ValidationError,
)
from .files import (
    load_diagram,
    load_polyline,
    loads_diagram,
    loads_polyline,
    dumps_diagram,
    dumps_polyline,
    save_diagram,
    save_polyline,
)
from .geometry import (
    Extraction,
    GenericityReport,
    PolyLink,
    bounding_diameter,
    close_link,
    extract_diagram,
    perturb,
    poly_link,
    project,
    random_long_link,
)
from .oracles import (
    ConwayPoly,
    casson_oracle,
    conway,
    gauss_linking_integral,
    magnus_mu123,
)
from .pd import ClosedDiagram, PDCrossing, close_diagram, emit_pd, parse_pd
from .resolve import (
    LEFT,
    OffsetAssignment,
    RIGHT,
    TriplePointType,
    classify_triple,
    resolve_all,
    resolve_crossing,
    resolve_crossing_seeded,
)

__version__ = "0.1.0"
