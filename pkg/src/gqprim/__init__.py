"""Point-primitive group actions on thick finite generalised quadrangles."""

from .arith import (
    ELIMINATE,
    KEEP,
    SOUND,
    STRICT,
    KnapsackSolution,
    OrderCandidate,
    enumerate_orders,
    knapsack,
    line_orbit_candidates,
    line_orbits_test,
    orders_of_elements_test,
)
from .bundleio import (
    Bundle,
    GroupFile,
    MaximalEntry,
    data_path,
    emit_report,
    list_corpus,
    load_bundle,
    load_gq,
    load_group,
    load_report,
    save_gq,
    save_group,
)
from .errors import (
    BundleFormatError,
    GqprimError,
    MalformedInputError,
    NotAnAutomorphismError,
    NotASubgroupError,
    RejectedCombinationError,
    ResourceLimitError,
    StageTimeoutError,
)
from .gq import (
    LineOrbitReport,
    PseudoGeometric,
    QuadrangleData,
    classify_quadrangle,
    extract_gq,
    line_orbits,
    verify_cover,
)
from .graphs import (
    CollinearityGraph,
    SrgCheckResult,
    SrgParameters,
    build_orbital_graph,
    check_srg,
    edge_list_lines,
)
from .permgroup import (
    CosetActionData,
    PermGroup,
    Permutation,
    build_group,
    coset_action,
    orbital_pairing,
    subgroup_index,
)
from .pipeline import (
    CandidateRecord,
    CaseInput,
    CaseRecord,
    PipelineOptions,
    neighborhood_combinations,
    overall_verdict,
    run_bundle,
    run_case,
    run_cases,
)

__version__ = "0.1.0"
