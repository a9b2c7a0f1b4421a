"""Constructors and exchange-property classifiers for polymatroidal families.

The constructible families: Veronese-type ideals (degree-d monomials with
componentwise exponent bounds), principal and multi-generator Borel ideals
(strongly stable closures), PLP ideals (bound vectors plus prefix-sum
windows), LP ideals (products of interval primes), transversal ideals
(products of arbitrary monomial primes), and products / powers / explicit
generator lists.  Every realized family is polymatroidal, which the random
generator asserts on each draw.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .errors import FamilySpecError, ResourceCapError, ZeroIdealError
from .monomials import (
    Monomial,
    MonomialIdeal,
    ideal_power,
    ideal_product,
    support_filter,
)


# ---------------------------------------------------------------------------
# family specifications
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VeroneseSpec:
    """All degree-d monomials with exponents bounded componentwise by b."""

    bounds: tuple[int, ...]
    degree: int
    tag = "veronese"

    def __post_init__(self):
        if self.degree < 0:
            raise FamilySpecError("veronese degree must be nonnegative")
        if any(b < 0 for b in self.bounds):
            raise FamilySpecError("veronese bounds must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.bounds)


@dataclass(frozen=True)
class BorelSpec:
    """Smallest strongly stable ideal containing the given generators."""

    generators: tuple[Monomial, ...]
    n: int
    tag = "borel"

    def __post_init__(self):
        if not self.generators:
            raise FamilySpecError("borel spec needs at least one generator")
        for g in self.generators:
            if len(g.exponents) != self.n:
                raise FamilySpecError("borel generator in the wrong ring")


@dataclass(frozen=True)
class PLPSpec:
    """Monomials c with lower <= c <= upper and alpha_i <= c_1+...+c_i <= beta_i.

    The window sequences are nondecreasing and end at the common generator
    degree: alpha_n = beta_n = d >= 1.
    """

    lower: tuple[int, ...]
    upper: tuple[int, ...]
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    tag = "plp"

    def __post_init__(self):
        n = len(self.upper)
        if not (len(self.lower) == len(self.alpha) == len(self.beta) == n):
            raise FamilySpecError("plp vectors must share one length")
        if any(a < 0 for a in self.lower) or any(
            lo > hi for lo, hi in zip(self.lower, self.upper)
        ):
            raise FamilySpecError("plp needs 0 <= lower <= upper componentwise")
        if any(x > y for x, y in zip(self.alpha, self.beta)):
            raise FamilySpecError("plp needs alpha <= beta componentwise")
        if list(self.alpha) != sorted(self.alpha) or list(self.beta) != sorted(self.beta):
            raise FamilySpecError("plp window sequences must be nondecreasing")
        if self.alpha[-1] != self.beta[-1] or self.alpha[-1] < 1:
            raise FamilySpecError("plp windows must close at the degree: alpha_n = beta_n = d >= 1")

    @property
    def n(self) -> int:
        return len(self.upper)

    @property
    def degree(self) -> int:
        return self.alpha[-1]

    @property
    def is_basic(self) -> bool:
        return all(a == 0 for a in self.lower)


@dataclass(frozen=True)
class LPSpec:
    """Product of interval primes p_[alpha_i, beta_i]."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    n: int
    tag = "lp"

    def __post_init__(self):
        t = len(self.alpha)
        if len(self.beta) != t or t == 0:
            raise FamilySpecError("lp needs matching nonempty alpha and beta")
        if list(self.alpha) != sorted(self.alpha) or list(self.beta) != sorted(self.beta):
            raise FamilySpecError("lp interval endpoints must be nondecreasing")
        if any(a < 1 or a > b for a, b in zip(self.alpha, self.beta)):
            raise FamilySpecError("lp needs 1 <= alpha_i <= beta_i")
        if self.beta[-1] > self.n:
            raise FamilySpecError("lp interval exceeds the ambient variable count")

    @property
    def t(self) -> int:
        return len(self.alpha)


@dataclass(frozen=True)
class TransversalSpec:
    """Product of the monomial primes p_A over the listed variable sets."""

    sets: tuple[frozenset[int], ...]
    n: int
    tag = "transversal"

    def __post_init__(self):
        if not self.sets:
            raise FamilySpecError("transversal spec needs at least one set")
        for A in self.sets:
            if not A:
                raise FamilySpecError("transversal sets must be nonempty")
            if any(i < 1 or i > self.n for i in A):
                raise FamilySpecError("transversal set index out of range")

    @property
    def t(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple["FamilySpec", ...]
    tag = "product"

    def __post_init__(self):
        if len(self.factors) < 2:
            raise FamilySpecError("product spec needs at least two factors")

    @property
    def n(self) -> int:
        return self.factors[0].n


@dataclass(frozen=True)
class PowerSpec:
    base: "FamilySpec"
    exponent: int
    tag = "power"

    def __post_init__(self):
        if self.exponent < 0:
            raise FamilySpecError("power exponent must be nonnegative")

    @property
    def n(self) -> int:
        return self.base.n


@dataclass(frozen=True)
class ExplicitSpec:
    ideal: MonomialIdeal
    tag = "explicit"

    @property
    def n(self) -> int:
        return self.ideal.n


FamilySpec = Union[
    VeroneseSpec,
    BorelSpec,
    PLPSpec,
    LPSpec,
    TransversalSpec,
    ProductSpec,
    PowerSpec,
    ExplicitSpec,
]


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------


def bounded_degree_monomials(
    bounds: Iterable[int], degree: int, n: int
) -> list[Monomial]:
    """All exponent vectors summing to ``degree`` with c_i <= bounds[i].

    Negative bounds make the coordinate infeasible, so the list is empty.
    """
    bounds = list(bounds)
    if any(b < 0 for b in bounds) or degree < 0:
        return []
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + bounds[i]
    out: list[Monomial] = []
    prefix: list[int] = []

    def rec(i: int, remaining: int):
        if i == n:
            if remaining == 0:
                out.append(Monomial(tuple(prefix)))
            return
        hi = min(bounds[i], remaining)
        lo = max(0, remaining - suffix[i + 1])
        for c in range(hi, lo - 1, -1):
            prefix.append(c)
            rec(i + 1, remaining - c)
            prefix.pop()

    rec(0, degree)
    return out


def windowed_monomials(
    lower: Iterable[int],
    upper: Iterable[int],
    alpha: Iterable[int],
    beta: Iterable[int],
) -> list[Monomial]:
    """Exponent vectors with lower <= c <= upper and prefix sums inside the
    [alpha_i, beta_i] windows.  Tolerates infeasible (negative / crossing)
    parameters by returning the empty list, which the socle closed forms rely
    on."""
    lower = list(lower)
    upper = list(upper)
    alpha = list(alpha)
    beta = list(beta)
    n = len(upper)
    if n == 0:
        return [Monomial(())]
    if alpha[-1] != beta[-1]:
        return []
    out: list[Monomial] = []
    prefix: list[int] = []

    def rec(i: int, total: int):
        if i == n:
            out.append(Monomial(tuple(prefix)))
            return
        lo = max(lower[i], alpha[i] - total)
        hi = min(upper[i], beta[i] - total)
        for c in range(hi, lo - 1, -1):
            prefix.append(c)
            rec(i + 1, total + c)
            prefix.pop()

    rec(0, 0)
    return out


def prime_ideal(indices: Iterable[int], n: int) -> MonomialIdeal:
    """The monomial prime generated by the variables with the given indices."""
    return MonomialIdeal(n, [Monomial.variable(i, n) for i in sorted(set(indices))])


def realize(spec: FamilySpec) -> MonomialIdeal:
    """Minimal generating set of the ideal a family spec describes."""
    if isinstance(spec, VeroneseSpec):
        if sum(min(b, spec.degree) for b in spec.bounds) < spec.degree:
            warnings.warn(
                "veronese bounds cannot reach the requested degree; the ideal is zero",
                stacklevel=2,
            )
        return MonomialIdeal(
            spec.n, bounded_degree_monomials(spec.bounds, spec.degree, spec.n)
        )
    if isinstance(spec, BorelSpec):
        return borel_closure(spec.generators, spec.n)
    if isinstance(spec, PLPSpec):
        return MonomialIdeal(
            spec.n, windowed_monomials(spec.lower, spec.upper, spec.alpha, spec.beta)
        )
    if isinstance(spec, LPSpec):
        result = prime_ideal(range(spec.alpha[0], spec.beta[0] + 1), spec.n)
        for a, b in zip(spec.alpha[1:], spec.beta[1:]):
            result = ideal_product(result, prime_ideal(range(a, b + 1), spec.n))
        return result
    if isinstance(spec, TransversalSpec):
        result = prime_ideal(spec.sets[0], spec.n)
        for A in spec.sets[1:]:
            result = ideal_product(result, prime_ideal(A, spec.n))
        return result
    if isinstance(spec, ProductSpec):
        result = realize(spec.factors[0])
        for f in spec.factors[1:]:
            result = ideal_product(result, realize(f))
        return result
    if isinstance(spec, PowerSpec):
        return ideal_power(realize(spec.base), spec.exponent)
    if isinstance(spec, ExplicitSpec):
        return spec.ideal
    raise FamilySpecError(f"unknown family spec {spec!r}")


def plp_factor(spec: PLPSpec) -> tuple[Monomial, PLPSpec]:
    """Split a PLP spec into its monomial part and a basic PLP spec.

    The realized ideal equals the monomial times the basic realization.
    """
    a = spec.lower
    prefix_a = []
    total = 0
    for v in a:
        total += v
        prefix_a.append(total)
    alpha_star = tuple(
        max(x - p, 0) for x, p in zip(spec.alpha, prefix_a)
    )
    beta_star = tuple(y - p for y, p in zip(spec.beta, prefix_a))
    upper_star = tuple(u - lo for u, lo in zip(spec.upper, a))
    # re-monotonize: prefix sums are nondecreasing, so tightening the windows
    # from the left (alpha) and right (beta) does not change the solution set
    alpha_fixed = list(alpha_star)
    for i in range(1, len(alpha_fixed)):
        alpha_fixed[i] = max(alpha_fixed[i], alpha_fixed[i - 1])
    beta_fixed = list(beta_star)
    for i in range(len(beta_fixed) - 2, -1, -1):
        beta_fixed[i] = min(beta_fixed[i], beta_fixed[i + 1])
    basic = PLPSpec(
        (0,) * spec.n, upper_star, tuple(alpha_fixed), tuple(beta_fixed)
    )
    return Monomial(a), basic


# ---------------------------------------------------------------------------
# strongly stable ideals
# ---------------------------------------------------------------------------


def borel_closure(gens: Iterable[Monomial], n: Optional[int] = None) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the generators.

    Closure under the moves x_j * (u / x_i) for j < i, i in supp(u), followed
    by minimalization.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("borel closure of an empty set is undefined")
    if n is None:
        n = gens[0].n
    seen: set[tuple[int, ...]] = set()
    queue = list(gens)
    collected: list[Monomial] = []
    while queue:
        u = queue.pop()
        if u.exponents in seen:
            continue
        seen.add(u.exponents)
        collected.append(u)
        for i in u.support:
            for j in range(1, i):
                queue.append(u.exchange(j, i))
    return MonomialIdeal(n, collected)


@dataclass(frozen=True)
class StabilityResult:
    holds: bool
    witness: Optional[tuple[Monomial, int, int]] = None  # (u, i, j): x_j(u/x_i) missing

    def __bool__(self) -> bool:
        return self.holds


def is_strongly_stable(I: MonomialIdeal) -> StabilityResult:
    """Whether every move x_j(u/x_i), j < i, lands back in the ideal."""
    if I.is_zero:
        raise ZeroIdealError("stability is undefined for the zero ideal")
    for u in I.gens:
        for i in u.support:
            for j in range(1, i):
                if not I.contains(u.exchange(j, i)):
                    return StabilityResult(False, (u, i, j))
    return StabilityResult(True)


def borel_generators(I: MonomialIdeal) -> tuple[Monomial, ...]:
    """The unique smallest generator set whose closure is the stable ideal I:
    the generators that no stability move of another generator produces."""
    from .errors import NotStronglyStableError

    if not is_strongly_stable(I).holds:
        raise NotStronglyStableError("ideal is not strongly stable")
    produced: set[tuple[int, ...]] = set()
    for u in I.gens:
        for i in u.support:
            for j in range(1, i):
                produced.add(u.exchange(j, i).exponents)
    return tuple(u for u in I.gens if u.exponents not in produced)


# ---------------------------------------------------------------------------
# exchange properties
# ---------------------------------------------------------------------------


EXCHANGE_MODES = ("exchange", "symmetric", "strong")


@dataclass(frozen=True)
class ExchangeResult:
    holds: bool
    witness: Optional[tuple] = None
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds


def check_exchange(I: MonomialIdeal, mode: str = "exchange") -> ExchangeResult:
    """Decide the exchange property of the generator set.

    ``exchange`` decides polymatroidality; ``symmetric`` and ``strong`` test
    the stronger variants.  Witnesses: (u, v, i) for exchange, (u, v, j) for
    symmetric, (u, v, i, j) for strong.  Non-equigenerated input fails with a
    reason instead of raising, so fuzz pipelines keep going.
    """
    if mode not in EXCHANGE_MODES:
        raise ValueError(f"unknown exchange mode {mode!r}")
    if I.is_zero:
        raise ZeroIdealError("exchange properties are undefined for the zero ideal")
    if not I.is_equigenerated:
        return ExchangeResult(False, None, "not equigenerated")
    gset = I.exponent_set
    gens = I.gens
    n = I.n

    def has_move(ue, i, j):
        moved = list(ue)
        moved[i] -= 1
        moved[j] += 1
        return tuple(moved) in gset

    for u in gens:
        ue = u.exponents
        for v in gens:
            if u is v:
                continue
            ve = v.exponents
            ups = [i for i in range(n) if ue[i] > ve[i]]
            downs = [j for j in range(n) if ue[j] < ve[j]]
            if mode == "exchange":
                for i in ups:
                    if not any(has_move(ue, i, j) for j in downs):
                        return ExchangeResult(False, (u, v, i + 1))
            elif mode == "symmetric":
                for j in downs:
                    if not any(has_move(ue, i, j) for i in ups):
                        return ExchangeResult(False, (u, v, j + 1))
            else:
                for i in ups:
                    for j in downs:
                        if not has_move(ue, i, j):
                            return ExchangeResult(False, (u, v, i + 1, j + 1))
    return ExchangeResult(True)


def is_polymatroidal(I: MonomialIdeal) -> bool:
    return check_exchange(I, "exchange").holds


def is_matroidal(I: MonomialIdeal) -> bool:
    return I.is_squarefree and is_polymatroidal(I)


def veronese_shift(spec: VeroneseSpec, level: int) -> MonomialIdeal:
    """Closed form for the level-th shift ideal of a Veronese-type ideal:
    realize the same bounds at degree d + level, keep support size > level."""
    if level < 0:
        raise ValueError("shift level must be nonnegative")
    raised = VeroneseSpec(spec.bounds, spec.degree + level)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        realized = realize(raised)
    return support_filter(realized, level)


# ---------------------------------------------------------------------------
# random instances for the fuzzing lab
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GenBudget:
    n_max: int = 6
    degree_max: int = 6
    gen_max: int = 200

    def __post_init__(self):
        if self.n_max < 2 or self.degree_max < 1 or self.gen_max < 1:
            raise FamilySpecError("generation budget must be positive")


def _draw_spec(rng: random.Random, budget: GenBudget, n: int, deg: int, depth: int) -> FamilySpec:
    tags = ["veronese", "sqfree", "borel", "lp", "plp", "transversal"]
    weights = [3, 2, 2, 2, 2, 3]
    if depth == 0 and deg >= 2:
        tags += ["product", "power"]
        weights += [2, 1]
    tag = rng.choices(tags, weights)[0]
    if tag == "product":
        d1 = rng.randint(1, deg - 1)
        return ProductSpec(
            (
                _draw_spec(rng, budget, n, d1, depth + 1),
                _draw_spec(rng, budget, n, deg - d1, depth + 1),
            )
        )
    if tag == "power":
        k = rng.randint(2, max(2, min(3, deg)))
        base_deg = max(1, deg // k)
        return PowerSpec(_draw_spec(rng, budget, n, base_deg, depth + 1), k)
    if tag == "veronese":
        bounds = [rng.randint(0, deg) if rng.random() < 0.3 else rng.randint(1, deg) for _ in range(n)]
        while sum(min(b, deg) for b in bounds) < deg:
            i = rng.randrange(n)
            bounds[i] = min(deg, bounds[i] + 1)
        return VeroneseSpec(tuple(bounds), deg)
    if tag == "sqfree":
        d = min(deg, n)
        return VeroneseSpec((1,) * n, d)
    if tag == "borel":
        # only principal stable closures are polymatroidal in general
        exps = [0] * n
        for _ in range(deg):
            exps[rng.randrange(n)] += 1
        return BorelSpec((Monomial(tuple(exps)),), n)
    if tag == "lp":
        tmax = min(4, deg)
        t = rng.choices(range(1, tmax + 1), weights=range(1, tmax + 1))[0]
        alpha = sorted(rng.randint(1, n) for _ in range(t))
        beta = []
        running = 0
        for a in alpha:
            b = rng.randint(a, n)
            running = max(running, b)
            beta.append(running)
        return LPSpec(tuple(alpha), tuple(beta), n)
    if tag == "transversal":
        tmax = min(4, deg)
        t = rng.choices(range(1, tmax + 1), weights=range(1, tmax + 1))[0]
        sets = []
        for _ in range(t):
            size = rng.randint(1, n)
            sets.append(frozenset(rng.sample(range(1, n + 1), size)))
        return TransversalSpec(tuple(sets), n)
    # plp: draw windows around a random feasible exponent path
    upper = [rng.randint(0, deg) for _ in range(n)]
    while sum(upper) < deg:
        upper[rng.randrange(n)] += 1
    path = []
    remaining = deg
    for i in range(n):
        hi = min(upper[i], remaining)
        lo = max(0, remaining - sum(upper[i + 1 :]))
        c = rng.randint(lo, hi)
        path.append(c)
        remaining -= c
    prefixes = []
    total = 0
    for c in path:
        total += c
        prefixes.append(total)
    alpha = [max(0, p - rng.randint(0, deg)) for p in prefixes]
    beta = [min(deg, p + rng.randint(0, deg)) for p in prefixes]
    for i in range(1, n):
        alpha[i] = max(alpha[i], alpha[i - 1])
    for i in range(n - 2, -1, -1):
        beta[i] = min(beta[i], beta[i + 1])
    alpha[-1] = beta[-1] = deg
    for i in range(n - 1):
        alpha[i] = min(alpha[i], deg)
        beta[i] = min(beta[i], deg)
    return PLPSpec((0,) * n, tuple(upper), tuple(alpha), tuple(beta))


def random_polymatroidal(
    seed: int, budget: GenBudget = GenBudget(), max_attempts: int = 400
) -> tuple[FamilySpec, MonomialIdeal]:
    """Deterministically draw one random polymatroidal ideal.

    Composes the family constructors (with occasional products and powers)
    under the budget, retrying until the realization is a nonzero, non-unit
    ideal within the generator cap.  The exchange property of the output is
    asserted, not assumed.
    """
    rng = random.Random(seed)
    degrees = list(range(1, budget.degree_max + 1))
    for _ in range(max_attempts):
        n = rng.randint(2, budget.n_max)
        deg = rng.choices(degrees, weights=degrees)[0]
        try:
            spec = _draw_spec(rng, budget, n, deg, 0)
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                ideal = realize(spec)
        except FamilySpecError:
            continue
        if ideal.is_zero or ideal.is_unit or ideal.num_gens > budget.gen_max:
            continue
        result = check_exchange(ideal, "exchange")
        assert result.holds, f"family realization is not polymatroidal: {spec!r}"
        return spec, ideal
    raise ResourceCapError(
        f"no polymatroidal instance found for seed {seed} within {max_attempts} attempts"
    )
