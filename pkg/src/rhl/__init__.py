"""Rainbow path search and structure certification for 3-uniform hypergraphs."""

from .errors import (
    BadParameters,
    HypothesisNotMet,
    InvalidPermutation,
    NotAnEdge,
    OutOfRange,
    ParseError,
    PreconditionFailed,
    RHLError,
    SearchInconclusive,
    TheoremViolation,
    TooLarge,
)
from .hypergraph import (
    Coloring,
    ColorSummary,
    HostGraph,
    color_summary,
    edge_rank,
    edge_unrank,
    loads_coloring,
    dumps_coloring,
    normalize_colors,
    read_coloring,
    relabel_vertices,
    write_coloring,
)
from .patterns import (
    CATALOG,
    Embedding,
    Pattern,
    count_copies,
    enumerate_embeddings,
    find_monochromatic_copy,
    find_rainbow_copy,
    get_pattern,
)
from .certifiers import (
    certify_loose,
    certify_loose_plus,
    certify_messy,
    certify_tight,
    certify_tripartite,
    verify_certificate,
)
from .constructions import build, sample_structured
from .search import (
    INCONCLUSIVE,
    PROVED,
    SearchBudget,
    SearchOutcome,
    anti_ramsey,
    canonical_existence_check,
    constrained_ramsey_check,
    enumerate_color_partitions,
    max_rainbow_free_colors,
    ramsey2_search,
)

__version__ = "0.1.0"
