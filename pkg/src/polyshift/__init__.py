"""polyshift: homological shift ideals, socles and Betti tables of monomial
ideals, with exchange-property classifiers and a conjecture-fuzzing lab."""

from .errors import (
    DegreeMismatchError,
    DimensionMismatchError,
    FamilySpecError,
    LinearityError,
    NotStronglyStableError,
    ParseError,
    PolyshiftError,
    PreconditionError,
    ResourceCapError,
    RouteDisagreementError,
    SupportError,
    UnsupportedFamilyError,
    ZeroIdealError,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    VariableOrder,
    bounding_multidegree,
    distance,
    gcd,
    ideal_power,
    ideal_product,
    lcm,
    lcm_many,
    minimal_generators,
    monomial_multiples,
    restrict_to_support,
    support_filter,
    unit_exchange,
    x_of,
)
from .quotients import (
    AdmissibleOrderFailure,
    OrderSearch,
    QuotientCertificate,
    certify_lex,
    certify_order,
    find_admissible_order,
    first_shift_by_distance,
    homological_shift,
    shift_multiset,
    shifts_by_distance,
    taylor_shifts,
    total_betti_from_certificate,
    within_taylor_bound,
)
from .families import (
    BorelSpec,
    ExchangeResult,
    ExplicitSpec,
    FamilySpec,
    GenBudget,
    LPSpec,
    PLPSpec,
    PowerSpec,
    ProductSpec,
    TransversalSpec,
    VeroneseSpec,
    borel_closure,
    borel_generators,
    check_exchange,
    is_matroidal,
    is_polymatroidal,
    is_strongly_stable,
    plp_factor,
    prime_ideal,
    random_polymatroidal,
    realize,
    veronese_shift,
)
from .oracle import (
    BettiTable,
    SimplicialComplexFrame,
    betti_table,
    cross_prime_agreement,
    ek_betti,
    hs_oracle,
    lcm_lattice,
    oracle_pd,
    reduced_homology_ranks,
    upper_koszul,
)
from .socle import (
    IntersectionGraph,
    PersistenceCheck,
    SocleReport,
    colon_maximal,
    family_max_pd,
    family_socle,
    has_ambient_max_pd,
    ideal_intersection,
    intersection_graph,
    max_pd,
    power_persistence,
    socle_colon,
    socle_exchange,
    socle_report,
    spanning_tree_socle,
    spanning_trees,
    top_shift,
)
from .fuzzlab import CampaignConfig, CampaignSummary, check_instance, run_campaign
from .textio import (
    IdealSource,
    format_ideal,
    format_spec,
    parse_ideal,
    parse_monomial,
    parse_variable_order,
    spec_from_doc,
    spec_to_doc,
)

__version__ = "0.1.0"
