"""Shared helpers and frozen expected values for the test suite."""

from __future__ import annotations

import itertools

from polyshift import Monomial, MonomialIdeal, parse_ideal, parse_monomial


def M(text: str, n: int | None = None) -> Monomial:
    return parse_monomial(text, n)


def ideal(text: str) -> MonomialIdeal:
    return parse_ideal(text).ideal


def gens_set(I: MonomialIdeal) -> set[str]:
    return {str(g) for g in I.gens}


def all_monomials(n: int, degree: int) -> list[Monomial]:
    """Every monomial of the given total degree, by brute-force enumeration."""
    out = []
    for combo in itertools.combinations_with_replacement(range(n), degree):
        exps = [0] * n
        for i in combo:
            exps[i] += 1
        out.append(Monomial(tuple(exps)))
    return out


# The running 5-variable example: the product of the primes on {1,2,3,4} and
# {3,4,5}, whose 11 generators, colon-variable table and shift ideals are all
# known in closed form.
EXAMPLE_GENS = (
    "x1*x3", "x1*x4", "x1*x5", "x2*x3", "x2*x4", "x2*x5",
    "x3^2", "x3*x4", "x3*x5", "x4^2", "x4*x5",
)

EXAMPLE_SET_TABLE = {
    "x1*x3": (),
    "x1*x4": (3,),
    "x1*x5": (3, 4),
    "x2*x3": (1,),
    "x2*x4": (1, 3),
    "x2*x5": (1, 3, 4),
    "x3^2": (1, 2),
    "x3*x4": (1, 2, 3),
    "x3*x5": (1, 2, 3, 4),
    "x4^2": (1, 2, 3),
    "x4*x5": (1, 2, 3, 4),
}

EXAMPLE_HS1 = {
    "x1*x2*x3", "x1*x2*x4", "x1*x2*x5", "x1*x3^2", "x1*x3*x4", "x1*x3*x5",
    "x1*x4^2", "x1*x4*x5", "x2*x3^2", "x2*x3*x4", "x2*x3*x5", "x2*x4^2",
    "x2*x4*x5", "x3^2*x4", "x3^2*x5", "x3*x4^2", "x3*x4*x5", "x4^2*x5",
}

EXAMPLE_HS2 = {
    "x1*x2*x3^2", "x1*x2*x3*x4", "x1*x2*x3*x5", "x1*x2*x4^2", "x1*x2*x4*x5",
    "x1*x3^2*x4", "x1*x3^2*x5", "x1*x3*x4^2", "x1*x3*x4*x5", "x1*x4^2*x5",
    "x2*x3^2*x4", "x2*x3^2*x5", "x2*x3*x4^2", "x2*x3*x4*x5", "x2*x4^2*x5",
    "x3^2*x4*x5", "x3*x4^2*x5",
}

# one published listing of the third shift ideal omits x1*x2*x3*x4^2; the
# closed form at degree 5 includes it, and so do all computation routes
EXAMPLE_HS3_LISTED = {
    "x1*x2*x3^2*x4", "x1*x2*x3^2*x5", "x1*x2*x3*x4*x5", "x1*x2*x4^2*x5",
    "x1*x3^2*x4*x5", "x1*x3*x4^2*x5", "x2*x3^2*x4*x5", "x2*x3*x4^2*x5",
}
EXAMPLE_HS3_OMITTED = "x1*x2*x3*x4^2"
EXAMPLE_HS3 = EXAMPLE_HS3_LISTED | {EXAMPLE_HS3_OMITTED}

EXAMPLE_HS4 = {"x1*x2*x3^2*x4*x5", "x1*x2*x3*x4^2*x5"}
