"""Socle ideals, maximal projective dimension, and the top shift ideal.

For an ideal with a d-linear resolution the socle ideal collects the
degree-(d-1) generators of I : (x_1,...,x_n); it is nonzero exactly when the
projective dimension is maximal (n - 1 for full support), and the top shift
ideal is x_1...x_n times the socle.  Two general routes are implemented (the
colon computation and the generator-exchange formula for lex-certified
ideals) plus closed forms for the constructible families, the intersection
graph criterion for transversal ideals, and the spanning-tree candidate set
for their socles.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import (
    DegreeMismatchError,
    LinearityError,
    PreconditionError,
    ResourceCapError,
    SupportError,
    UnsupportedFamilyError,
    ZeroIdealError,
)
from .families import (
    BorelSpec,
    FamilySpec,
    LPSpec,
    PLPSpec,
    PowerSpec,
    TransversalSpec,
    VeroneseSpec,
    borel_closure,
    check_exchange,
    prime_ideal,
    realize,
    windowed_monomials,
    bounded_degree_monomials,
)
from .monomials import (
    Monomial,
    MonomialIdeal,
    ideal_power,
    ideal_product,
    lcm,
    monomial_multiples,
    restrict_to_support,
    x_of,
)
from .oracle import betti_table
from .quotients import QuotientCertificate, certify_lex

SPANNING_TREE_CAP = 10_000


# ---------------------------------------------------------------------------
# colon machinery
# ---------------------------------------------------------------------------


def colon_by_variable(I: MonomialIdeal, i: int) -> MonomialIdeal:
    """I : x_i, by decrementing the exponent of x_i where possible."""
    gens = []
    for g in I.gens:
        gens.append(g.div_var(i) if g.deg(i) > 0 else g)
    return MonomialIdeal(I.n, gens)


def ideal_intersection(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    """Intersection of monomial ideals: pairwise lcms, minimalized."""
    out = []
    for g in A.gens:
        for h in B.gens:
            out.append(lcm(g, h))
    return MonomialIdeal(A.n, out)


def colon_maximal(I: MonomialIdeal) -> MonomialIdeal:
    """I : (x_1,...,x_n) as the intersection of the single-variable colons."""
    if I.is_zero:
        return MonomialIdeal(I.n)
    acc = colon_by_variable(I, 1)
    for i in range(2, I.n + 1):
        acc = ideal_intersection(acc, colon_by_variable(I, i))
    return acc


def socle_colon(
    I: MonomialIdeal,
    d: Optional[int] = None,
    *,
    linearity_certified: bool = False,
) -> MonomialIdeal:
    """Socle by the defining colon: degree-(d-1) generators of I : m.

    Meaningful as *the* socle ideal only when I has a d-linear resolution;
    pass ``linearity_certified=True`` once that has been established (via a
    linear-quotients certificate or the Betti table), otherwise a warning is
    issued and the raw colon computation is returned regardless.
    """
    if I.is_zero:
        raise ZeroIdealError("the zero ideal has no socle")
    if d is None:
        d = I.generation_degree
    elif I.generation_degree != d:
        raise DegreeMismatchError(
            f"ideal is generated in degree {I.generation_degree}, not {d}"
        )
    if not linearity_certified:
        warnings.warn(
            "socle requested without a certified linear resolution", stacklevel=2
        )
    quotient = colon_maximal(I)
    return MonomialIdeal(I.n, [g for g in quotient.gens if g.degree == d - 1])


def socle_exchange(cert: QuotientCertificate) -> MonomialIdeal:
    """Socle from the generator-exchange formula.

    For an equigenerated ideal certified under a variable order with full
    support, the socle generators are exactly the u / x_last whose every
    variable multiple x_i * (u / x_last) is again a minimal generator, where
    x_last is the least variable of the order.
    """
    I = cert.ideal
    if cert.variable_order is None:
        raise ValueError(
            "socle_exchange needs a certificate produced by certify_lex"
        )
    if I.support != tuple(range(1, I.n + 1)):
        raise SupportError(
            "ideal does not involve every variable; restrict_to_support first"
        )
    I.generation_degree  # raises unless equigenerated
    last = cert.variable_order.least
    out = []
    for u in I.gens:
        if u.deg(last) == 0:
            continue
        w = u.div_var(last)
        if all(I.is_generator(w.times_var(i)) for i in range(1, I.n + 1)):
            out.append(w)
    return MonomialIdeal(I.n, out)


def _certified_socle(I: MonomialIdeal) -> MonomialIdeal:
    """Best-route socle: exchange formula under a lex certificate when
    available, else the colon with oracle-certified linearity."""
    d = I.generation_degree
    cert = certify_lex(I)
    if isinstance(cert, QuotientCertificate):
        if I.support == tuple(range(1, I.n + 1)):
            return socle_exchange(cert)
        return socle_colon(I, linearity_certified=True)
    table = betti_table(I)
    if not table.is_linear(d):
        raise LinearityError(
            "socle is undefined: the ideal has no linear resolution"
        )
    return socle_colon(I, linearity_certified=True)


def top_shift(I: MonomialIdeal) -> MonomialIdeal:
    """The highest possible shift ideal, x_1...x_n times the socle."""
    soc = _certified_socle(I)
    if soc.is_zero:
        return MonomialIdeal(I.n)
    return monomial_multiples(soc, x_of(range(1, I.n + 1), I.n))


def max_pd(I: MonomialIdeal) -> bool:
    """Whether the projective dimension is maximal relative to the support:
    pd(I) = |supp(I)| - 1.  The ideal is restricted to its support first."""
    if I.is_zero:
        raise ZeroIdealError("the zero ideal has no projective dimension")
    J, _ = restrict_to_support(I)
    if J.n == 0:
        return True  # unit ideal: nothing to resolve
    if J.is_equigenerated:
        cert = certify_lex(J)
        if isinstance(cert, QuotientCertificate):
            return not socle_exchange(cert).is_zero
    return betti_table(J).pd == J.n - 1


def has_ambient_max_pd(I: MonomialIdeal) -> bool:
    """Maximal projective dimension relative to all n ambient variables:
    full support plus support-relative maximality."""
    return I.support == tuple(range(1, I.n + 1)) and max_pd(I)


@dataclass(frozen=True)
class SocleReport:
    """Bundle of the socle with the facts derived from it."""

    socle: MonomialIdeal
    max_pd: bool
    witness: Optional[Monomial]  # generator u with u / x_n in the socle
    route: str  # "colon" | "exchange-formula" | "closed-form"


def socle_report(I: MonomialIdeal) -> SocleReport:
    d = I.generation_degree
    cert = certify_lex(I)
    full_support = I.support == tuple(range(1, I.n + 1))
    if isinstance(cert, QuotientCertificate) and full_support:
        soc = socle_exchange(cert)
        route = "exchange-formula"
    else:
        if isinstance(cert, QuotientCertificate):
            soc = socle_colon(I, linearity_certified=True)
        else:
            table = betti_table(I)
            if not table.is_linear(d):
                raise LinearityError(
                    "socle is undefined: the ideal has no linear resolution"
                )
            soc = socle_colon(I, linearity_certified=True)
        route = "colon"
    witness = None
    if not soc.is_zero and I.n >= 1:
        w = soc.gens[0]
        candidate = w.times_var(I.n)
        if I.is_generator(candidate):
            witness = candidate
    return SocleReport(soc, not soc.is_zero, witness, route)


# ---------------------------------------------------------------------------
# transversal ideals: intersection graph and spanning trees
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntersectionGraph:
    """Factor-overlap graph of a transversal ideal: vertex k is the k-th
    prime factor, and {k, l} is an edge when the variable sets intersect."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def neighbors(self, k: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == k:
                out.append(b)
            elif b == k:
                out.append(a)
        return sorted(out)

    def component_count(self) -> int:
        parent = list(range(self.num_vertices + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        return len({find(v) for v in range(1, self.num_vertices + 1)})

    @property
    def is_connected(self) -> bool:
        return self.component_count() <= 1


def intersection_graph(spec: TransversalSpec) -> IntersectionGraph:
    """Build the factor-overlap graph; warns when the sets do not cover all
    ambient variables (the maximality criterion then applies to the cover)."""
    covered = set()
    for A in spec.sets:
        covered.update(A)
    if covered != set(range(1, spec.n + 1)):
        warnings.warn(
            "transversal factors do not cover every variable; "
            "conclusions apply to the restriction",
            stacklevel=2,
        )
    edges = []
    for k in range(1, spec.t + 1):
        for l in range(k + 1, spec.t + 1):
            if spec.sets[k - 1] & spec.sets[l - 1]:
                edges.append((k, l))
    return IntersectionGraph(spec.t, tuple(edges))


def _is_tree(edges: tuple[tuple[int, int], ...], picked: tuple[int, ...], t: int) -> bool:
    parent = list(range(t + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx in picked:
        a, b = edges[idx]
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def spanning_trees(
    graph: IntersectionGraph, cap: int = SPANNING_TREE_CAP
) -> Iterator[tuple[int, ...]]:
    """Yield every spanning tree as a tuple of edge indices; capped."""
    t = graph.num_vertices
    if t == 1:
        yield ()
        return
    count = 0
    for picked in itertools.combinations(range(len(graph.edges)), t - 1):
        if _is_tree(graph.edges, picked, t):
            count += 1
            if count > cap:
                raise ResourceCapError(
                    f"more than {cap} spanning trees; raise the cap to proceed"
                )
            yield picked


def spanning_tree_socle(
    spec: TransversalSpec, cap: int = SPANNING_TREE_CAP
) -> MonomialIdeal:
    """Candidate socle of a transversal ideal from its spanning trees.

    For each spanning tree of the intersection graph, every product of one
    variable per tree edge (chosen in the overlap of the edge's two factor
    sets) lies in the socle; the candidates from all trees are collected and
    minimalized.  Whether they exhaust the socle is exactly what the fuzzing
    lab records per instance.
    """
    graph = intersection_graph(spec)
    n = spec.n
    if not graph.is_connected:
        return MonomialIdeal(n)
    if spec.t == 1:
        return MonomialIdeal(n, [Monomial.unit(n)])
    out = []
    seen: set[tuple[int, ...]] = set()
    for tree in spanning_trees(graph, cap):
        overlaps = []
        for idx in tree:
            a, b = graph.edges[idx]
            overlaps.append(sorted(spec.sets[a - 1] & spec.sets[b - 1]))
        for choice in itertools.product(*overlaps):
            exps = [0] * n
            for var in choice:
                exps[var - 1] += 1
            key = tuple(exps)
            if key not in seen:
                seen.add(key)
                out.append(Monomial(key))
    return MonomialIdeal(n, out)


# ---------------------------------------------------------------------------
# family closed forms
# ---------------------------------------------------------------------------


def _shift_vector(v: tuple[int, ...], delta: int) -> tuple[int, ...]:
    return tuple(x + delta for x in v)


def _plp_socle_type(
    upper: tuple[int, ...], alpha: tuple[int, ...], beta: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Shifted parameters (upper-1 | alpha - e_n, beta-1) of the socle."""
    n = len(upper)
    alpha_star = list(alpha)
    alpha_star[n - 1] -= 1
    return (
        _shift_vector(upper, -1),
        tuple(alpha_star),
        _shift_vector(beta, -1),
    )


def family_socle(spec: FamilySpec, k: int = 1) -> MonomialIdeal:
    """Closed-form socle for the families that have one.

    Supported: veronese, basic PLP, LP, (equigenerated) borel, and powers of
    those.  Anything else raises UnsupportedFamilyError, pointing to the
    direct colon route.  Families without maximal projective dimension
    realize to the zero ideal here, matching the colon.
    """
    if isinstance(spec, PowerSpec):
        return family_socle(spec.base, k=k * spec.exponent)
    if isinstance(spec, VeroneseSpec):
        n = spec.n
        b = tuple(x * k for x in spec.bounds)
        d = spec.degree * k
        return MonomialIdeal(
            n, bounded_degree_monomials(_shift_vector(b, -1), d - 1, n)
        )
    if isinstance(spec, PLPSpec):
        if not spec.is_basic:
            raise UnsupportedFamilyError(
                "closed-form socle covers basic PLP types only; use socle_colon"
            )
        upper = tuple(x * k for x in spec.upper)
        alpha = tuple(x * k for x in spec.alpha)
        beta = tuple(x * k for x in spec.beta)
        u1, a1, b1 = _plp_socle_type(upper, alpha, beta)
        return MonomialIdeal(
            spec.n, windowed_monomials((0,) * spec.n, u1, a1, b1)
        )
    if isinstance(spec, LPSpec):
        if k != 1:
            raise UnsupportedFamilyError(
                "socles of LP powers are not implemented; use socle_colon"
            )
        if not family_max_pd(spec):
            return MonomialIdeal(spec.n)
        result = MonomialIdeal(spec.n, [Monomial.unit(spec.n)])
        for i in range(spec.t - 1):
            result = ideal_product(
                result, prime_ideal(range(spec.alpha[i + 1], spec.beta[i] + 1), spec.n)
            )
        return result
    if isinstance(spec, BorelSpec):
        closure = borel_closure(spec.generators, spec.n)
        if not closure.is_equigenerated:
            raise DegreeMismatchError(
                "socle of a non-equigenerated stable ideal is undefined"
            )
        if k != 1:
            if len(spec.generators) != 1:
                raise UnsupportedFamilyError(
                    "power socles are closed-form only for a single stable generator"
                )
            u = spec.generators[0]
            if u.max_var != spec.n:
                return MonomialIdeal(spec.n)
            return borel_closure([(u ** k).div_var(spec.n)], spec.n)
        tops = [g for g in spec.generators if g.max_var == spec.n]
        if not tops:
            return MonomialIdeal(spec.n)
        return borel_closure([g.div_var(spec.n) for g in tops], spec.n)
    raise UnsupportedFamilyError(
        f"no closed-form socle for family tag {spec.tag!r}; use socle_colon"
    )


def family_max_pd(spec: FamilySpec) -> bool:
    """Closed-form test for maximal projective dimension relative to all n
    ambient variables (equivalently: the ambient socle is nonzero)."""
    if isinstance(spec, PowerSpec):
        return _family_max_pd_scaled(spec.base, spec.exponent)
    return _family_max_pd_scaled(spec, 1)


def _family_max_pd_scaled(spec: FamilySpec, k: int) -> bool:
    if isinstance(spec, PowerSpec):
        return _family_max_pd_scaled(spec.base, k * spec.exponent)
    if isinstance(spec, VeroneseSpec):
        b = tuple(x * k for x in spec.bounds)
        d = spec.degree * k
        return bool(bounded_degree_monomials(_shift_vector(b, -1), d - 1, spec.n))
    if isinstance(spec, PLPSpec):
        if not spec.is_basic:
            raise UnsupportedFamilyError(
                "closed-form maximality covers basic PLP types only"
            )
        upper = tuple(x * k for x in spec.upper)
        alpha = tuple(x * k for x in spec.alpha)
        beta = tuple(x * k for x in spec.beta)
        # a zero bound freezes its variable out of every generator, which
        # already rules out full ambient support
        if any(b < 1 for b in upper):
            return False
        return _plp_inequalities_hold(upper, alpha, beta)
    if isinstance(spec, LPSpec):
        return (
            spec.alpha[0] == 1
            and spec.beta[-1] == spec.n
            and all(
                spec.alpha[i + 1] <= spec.beta[i] for i in range(spec.t - 1)
            )
        )
    if isinstance(spec, TransversalSpec):
        covered = set()
        for A in spec.sets:
            covered.update(A)
        if covered != set(range(1, spec.n + 1)):
            return False
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return intersection_graph(spec).is_connected
    if isinstance(spec, BorelSpec):
        closure = borel_closure(spec.generators, spec.n)
        return any(g.max_var == spec.n for g in closure.gens)
    raise UnsupportedFamilyError(
        f"no closed-form maximality test for family tag {spec.tag!r}; use max_pd"
    )


def _plp_inequalities_hold(
    upper: tuple[int, ...], alpha: tuple[int, ...], beta: tuple[int, ...]
) -> bool:
    """Explicit maximality inequalities for a basic PLP type:
    beta_i + upper_{i+1} + ... + upper_j >= alpha_j + (j + 1 - i) for all
    1 <= i <= j < n, and >= alpha_n + (n - i) at j = n."""
    n = len(upper)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            lhs = beta[i - 1] + sum(upper[i:j])
            if j < n:
                needed = alpha[j - 1] + (j + 1 - i)
            else:
                needed = alpha[n - 1] + (n - i)
            if lhs < needed:
                return False
    return True


# ---------------------------------------------------------------------------
# persistence of maximality under powers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PersistenceCheck:
    ok: bool
    k: int
    witness: Optional[Monomial] = None  # element of the socle of the power
    failed_variable: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def power_persistence(I: MonomialIdeal, k: int) -> PersistenceCheck:
    """Verify that the k-th power keeps maximal projective dimension.

    Preconditions: I is polymatroidal with full support and maximal
    projective dimension.  The witness is u^k / x_n for a generator u with
    u / x_n in the socle; each variable multiple is checked against G(I^k).
    """
    if k < 1:
        raise ValueError("power exponent must be at least 1")
    if not check_exchange(I, "exchange").holds:
        raise PreconditionError("power persistence requires a polymatroidal ideal")
    if I.support != tuple(range(1, I.n + 1)):
        raise SupportError("restrict the ideal to its support first")
    soc = _certified_socle(I)
    if soc.is_zero:
        raise PreconditionError(
            "power persistence requires maximal projective dimension"
        )
    n = I.n
    w0 = soc.gens[0]
    u = w0.times_var(n)
    assert I.is_generator(u)
    witness = (u ** k).div_var(n)
    power = ideal_power(I, k)
    for i in range(1, n + 1):
        if not power.is_generator(witness.times_var(i)):
            return PersistenceCheck(False, k, witness, i)
    return PersistenceCheck(True, k, witness)
