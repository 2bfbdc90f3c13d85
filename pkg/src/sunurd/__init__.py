"""Uniformly resolvable decompositions of K_v into perfect matchings and
sun-graph factors: spectrum arithmetic, constructions, and an independent
verifier."""

from .base_designs import UrgddKind, one_factorization, urd6_h3, urd12_h3, urgdd_ch2
from .builder import (
    BuildPlan,
    InadmissibleTuple,
    Route,
    build,
    build_all,
    build_with_plan,
    inflate_cycle,
    plan,
)
from .core import (
    Decomposition,
    Edge,
    Finding,
    HostGraph,
    ParallelClass,
    Sun,
    VerificationReport,
    canonical_cycle,
    canonical_decomposition,
    canonicalize_sun,
    edge,
    host_edges,
    host_vertices,
    sun_edges,
    verify,
    vertex_profile,
)
from .factorizations import (
    CycleFactorization,
    IngredientSource,
    IngredientUnavailable,
    SearchResult,
    SeedCatalogError,
    cycle_factorization_minus_f,
    cycle_factorization_odd,
    load_seed_catalog,
    search_cycle_factorization,
    validate_cycle_factorization,
)
from .serialization import (
    Document,
    DocumentFormatError,
    dumps_document,
    from_document,
    loads_document,
    to_document,
)
from .spectrum import (
    Admissibility,
    ParamTuple,
    Reason,
    SpectrumPair,
    admissible_pairs,
    check_necessary,
    enumerate_by_counting,
    inadmissibility_reason,
)

__version__ = "0.1.0"
