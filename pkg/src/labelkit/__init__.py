"""labelkit: adjacency labeling schemes and density experiments for
subgraph-closed graph classes.

The package splits into exact small-graph primitives (graphs), degeneracy
labels and universal graphs (labeling), subgraph-density certification
(goodness), growth functions with decency certificates (growth), seeded
random-graph experiments (randgraphs), and closure censuses plus the
counting ledger (census).  The ``labelkit`` command exposes all of it.
"""

from .errors import (
    DomainError,
    GraphParseError,
    LabelkitError,
    SizeGuardError,
)
from .graphs import (
    Graph,
    IsoCertificate,
    are_isomorphic,
    automorphism_count,
    canonical_form,
    complete_graph,
    count_embeddings,
    count_subgraph_copies,
    cycle_graph,
    empty_graph,
    enumerate_unlabeled,
    induced_subgraph,
    labeled_count,
    parse_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from .labeling import (
    Label,
    PeelOrdering,
    SchemeParams,
    build_universal_graph,
    decode,
    degeneracy,
    degeneracy_ordering,
    embed_into_universal,
    encode,
    monotone_class_bound,
)
from .goodness import (
    GoodnessReport,
    is_f_good,
    max_edges_k_subgraph,
    naive_goodness_oracle,
    threshold,
)
from .growth import (
    DecencyCertificate,
    GrowthFunction,
    certify_builtin,
    falsify_decency,
    parse_growth_spec,
    ratio_inequalities,
    scale_constants,
)
from .randgraphs import (
    ExperimentConfig,
    RngStream,
    chernoff_tail,
    run_goodness_experiment,
    run_transfer_experiment,
    sample_gnm,
    sample_gnp,
)
from .census import (
    CensusTable,
    bounded_degree_max_tree,
    counting_ledger,
    dense_core,
    mon_closure_census,
    smallness_probe,
    spanning_family,
)

__version__ = "0.1.0"
