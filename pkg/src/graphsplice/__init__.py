"""Cut-and-recombine splicing engine for graphs in pseudo-linear form.

Graphs live on integer positions along a line; cutting rules sever the
edges crossing a gap (or split a vertex), and splicing rejoins the
fragments of two graphs crosswise in every possible way.  The analysis
module checks the engine's structural laws exhaustively on small graphs,
and the language module iterates splicing into a bounded closure.
"""

from ._kernels import BACKEND
from .analysis import (
    CycleCertificate,
    TheoremReport,
    check_bipartite_criterion,
    check_cycle_theorem,
    check_degree_balance,
    check_iso_splice,
    check_power_formula,
    check_splice_theorems,
    cycle_certificate,
    verify_all,
)
from .cutting import (
    CutResult,
    CuttingRule,
    Fragment,
    HangingEdge,
    cut,
    ecut,
    power,
    power_by_formula,
    valid_rules,
    vcut,
)
from .errors import (
    CapExceededError,
    GraphSpliceError,
    InvalidGraphError,
    InvalidOrderingError,
    InvalidRuleError,
    JoinError,
    NotApplicableError,
    ParseError,
    SystemDefinitionError,
)
from .graphs import (
    DegreeProfile,
    Ordering,
    PlfGraph,
    all_relabelings,
    canonical_form,
    complete,
    complete_bipartite,
    cycle,
    degree_profile,
    double_edge,
    enumerate_simple_graphs,
    has_cycle,
    is_bipartite,
    is_connected,
    is_isomorphic,
    is_regular,
    is_simple,
    path,
    relabel,
    to_plf,
)
from .language import (
    ClassInfo,
    IterationTrace,
    LanguageConfig,
    LanguageResult,
    SplicingSystem,
    contains,
    language,
    sigma_step,
)
from .splicing import (
    Recombination,
    SpliceProduct,
    SplicingRule,
    applicable,
    join,
    make_rule,
    max_product_order,
    products_first,
    products_second,
    sigma_pair,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CapExceededError",
    "ClassInfo",
    "CutResult",
    "CuttingRule",
    "CycleCertificate",
    "DegreeProfile",
    "Fragment",
    "GraphSpliceError",
    "HangingEdge",
    "InvalidGraphError",
    "InvalidOrderingError",
    "InvalidRuleError",
    "IterationTrace",
    "JoinError",
    "LanguageConfig",
    "LanguageResult",
    "NotApplicableError",
    "Ordering",
    "ParseError",
    "PlfGraph",
    "Recombination",
    "SpliceProduct",
    "SplicingRule",
    "SplicingSystem",
    "SystemDefinitionError",
    "TheoremReport",
    "all_relabelings",
    "applicable",
    "canonical_form",
    "check_bipartite_criterion",
    "check_cycle_theorem",
    "check_degree_balance",
    "check_iso_splice",
    "check_power_formula",
    "check_splice_theorems",
    "complete",
    "complete_bipartite",
    "contains",
    "cut",
    "cycle",
    "cycle_certificate",
    "degree_profile",
    "double_edge",
    "ecut",
    "enumerate_simple_graphs",
    "has_cycle",
    "is_bipartite",
    "is_connected",
    "is_isomorphic",
    "is_regular",
    "is_simple",
    "join",
    "language",
    "make_rule",
    "max_product_order",
    "path",
    "power",
    "power_by_formula",
    "products_first",
    "products_second",
    "relabel",
    "sigma_pair",
    "sigma_step",
    "to_plf",
    "valid_rules",
    "vcut",
    "verify_all",
    "__version__",
]
