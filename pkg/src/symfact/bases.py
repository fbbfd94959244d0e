"""The three symmetric-polynomial bases and expansions of symmetric polynomials.

Monomial sums m, products of elementary symmetric polynomials E, and Schur
functions s (built as the bialternant: alternant determinant divided exactly
by the Vandermonde).  Every basis element also comes in a normalized form
with value 1 at the all-ones point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, dominance_leq
from .poly import (
    InvariantViolation,
    MultiPoly,
    NotSymmetric,
    PolyError,
    default_names,
    det,
)

BASIS_TAGS = ("m", "E", "s")


@dataclass(frozen=True)
class NormalizedBasisPoly:
    """A basis polynomial together with its value at (1,...,1)."""

    raw: MultiPoly
    value_at_one: Fraction
    normalized: MultiPoly


@lru_cache(maxsize=None)
def vandermonde(n: int) -> MultiPoly:
    """prod_{i<j} (x_i - x_j)."""
    acc = MultiPoly.one(n)
    for i in range(n):
        for j in range(i + 1, n):
            acc = acc * (MultiPoly.variable(i, n) - MultiPoly.variable(j, n))
    return acc


def alternant(mu: tuple[int, ...], n: int) -> MultiPoly:
    """det{x_i^(mu_j)} with row index i, column index j."""
    if len(mu) != n:
        raise PolyError("exponent vector length must equal n")
    matrix = [
        [
            MultiPoly(n, {tuple(mu[j] if k == i else 0 for k in range(n)): 1})
            for j in range(n)
        ]
        for i in range(n)
    ]
    return det(matrix)


@lru_cache(maxsize=None)
def monomial_sym(lam: Partition) -> NormalizedBasisPoly:
    """Sum of all distinct permutations of the exponent vector lam."""
    n = lam.n
    perms = set(itertools.permutations(lam.parts))
    raw = MultiPoly(n, {exp: 1 for exp in perms})
    value = Fraction(len(perms))
    return NormalizedBasisPoly(raw, value, raw * (1 / value))


@lru_cache(maxsize=None)
def elementary_sym(r: int, n: int) -> MultiPoly:
    """Sum of all products of r distinct variables out of n."""
    if not 0 <= r <= n:
        raise PolyError(f"need 0 <= r <= n, got r={r}, n={n}")
    terms = {}
    for subset in itertools.combinations(range(n), r):
        exp = tuple(1 if i in subset else 0 for i in range(n))
        terms[exp] = 1
    return MultiPoly(n, terms)


@lru_cache(maxsize=None)
def elementary_generating(n: int) -> MultiPoly:
    """w_n(t) = prod_i (1 + t x_i), in slots (x_1..x_n, t)."""
    names = default_names("x", n) + ("t",)
    acc = MultiPoly.one(n + 1, names)
    t = MultiPoly.variable(n, n + 1, names)
    for i in range(n):
        acc = acc * (MultiPoly.one(n + 1, names) + t * MultiPoly.variable(i, n + 1, names))
    return acc


@lru_cache(maxsize=None)
def elementary_power(j: int, p: int, n: int) -> MultiPoly:
    return elementary_sym(j, n) ** p


@lru_cache(maxsize=None)
def elementary_product(lam: Partition) -> NormalizedBasisPoly:
    """E_lam = prod_j e_j^(lam_j - lam_{j+1}), with value prod C(n,j)^(...)."""
    n = lam.n
    raw = MultiPoly.one(n)
    value = Fraction(1)
    for j in range(1, n + 1):
        mult = lam.diff(j, j + 1)
        if mult:
            raw = raw * elementary_power(j, mult, n)
            value *= Fraction(math.comb(n, j)) ** mult
    return NormalizedBasisPoly(raw, value, raw * (1 / value))


def schur_value_at_one(lam: Partition) -> Fraction:
    """Closed form prod_{i<j} (mu_i - mu_j)/(j - i)."""
    mu = lam.shifted().parts
    n = lam.n
    value = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            value *= Fraction(mu[i] - mu[j], j - i)
    return value


@lru_cache(maxsize=None)
def schur_poly(lam: Partition) -> NormalizedBasisPoly:
    """Bialternant Schur polynomial: alternant / Vandermonde, exactly.

    The value at the all-ones point is computed both by direct evaluation
    and by the closed product formula; disagreement is an internal error.
    """
    n = lam.n
    mu = lam.shifted().parts
    raw = alternant(mu, n).divide_exact(vandermonde(n))
    direct = raw.eval([1] * n)
    closed = schur_value_at_one(lam)
    if direct != closed:
        raise InvariantViolation(
            f"normalization mismatch for {lam}: direct {direct} vs closed {closed}"
        )
    return NormalizedBasisPoly(raw, direct, raw * (1 / direct))


def restricted_schur(lam: Partition, k: int) -> tuple[MultiPoly, MultiPoly]:
    """Numerator and denominator of the Schur restriction x_k = ... = x_n = 1.

    The numerator is a mixed determinant: k-1 rows of powers of the free
    variables, then rows of descending powers of the shifted parts mu_j.
    The denominator is the closed-form product; their exact ratio equals
    the Schur polynomial with its last n-k+1 arguments set to 1.
    """
    n = lam.n
    if not 1 <= k <= n:
        raise PolyError(f"need 1 <= k <= n, got k={k}")
    mu = lam.shifted().parts
    arity = k - 1
    matrix = []
    for i in range(k - 1):
        matrix.append(
            [
                MultiPoly(arity, {tuple(mu[j] if s == i else 0 for s in range(arity)): 1})
                for j in range(n)
            ]
        )
    for e in range(n - k, -1, -1):
        matrix.append(
            [MultiPoly.const(arity, Fraction(mu[j]) ** e) for j in range(n)]
        )
    num = det(matrix)
    den = MultiPoly.const(arity, math.prod(math.factorial(i) for i in range(1, n - k + 1)))
    for j in range(k - 1):
        den = den * (MultiPoly.variable(j, arity) - 1) ** (n - k + 1)
    den = den * vandermonde(arity)
    return num, den


def basis_poly(basis: str, lam: Partition) -> NormalizedBasisPoly:
    if basis == "m":
        return monomial_sym(lam)
    if basis == "E":
        return elementary_product(lam)
    if basis == "s":
        return schur_poly(lam)
    raise PolyError(f"unknown basis tag {basis!r}")


@dataclass(frozen=True)
class SymExpansion:
    """Coefficients of a symmetric polynomial over one (raw) basis."""

    basis: str
    n: int
    coeffs: dict[Partition, Fraction]

    def reconstruct(self) -> MultiPoly:
        acc = MultiPoly.zero(self.n)
        for lam, c in self.coeffs.items():
            acc = acc + basis_poly(self.basis, lam).raw * c
        return acc

    def sorted_items(self) -> list[tuple[Partition, Fraction]]:
        return sorted(self.coeffs.items(), key=lambda t: (t[0].weight(), tuple(-p for p in t[0].parts)))

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "n": self.n,
            "coeffs": [
                {"lambda": lam.to_json(), "c": str(c)} for lam, c in self.sorted_items()
            ],
        }


def expand_in_basis(f: MultiPoly, basis: str) -> SymExpansion:
    """Write a symmetric polynomial exactly over one of the three bases.

    m: group monomials by their sorted exponent vector.  E: repeatedly
    strip the lex-leading monomial, which pins the E-exponent.  s: strip
    the lex-greatest weakly decreasing monomial; dominance triangularity
    of the Schur expansion makes this terminate.
    """
    n = f.arity
    if basis not in BASIS_TAGS:
        raise PolyError(f"unknown basis tag {basis!r}")
    if not f.is_symmetric():
        raise NotSymmetric("input polynomial is not symmetric")
    coeffs: dict[Partition, Fraction] = {}
    if basis == "m":
        for exp, c in f.terms.items():
            if all(a >= b for a, b in zip(exp, exp[1:])):
                coeffs[Partition(exp)] = c
        return SymExpansion(basis, n, coeffs)
    work = f
    while not work.is_zero:
        lead = work.leading_exp("lex")
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise InvariantViolation("lex-leading monomial of a symmetric poly not sorted")
        lam = Partition(lead)
        c = work.terms[lead]
        coeffs[lam] = c
        work = work - basis_poly(basis, lam).raw * c
    return SymExpansion(basis, n, coeffs)


def schur_in_monomials(lam: Partition) -> SymExpansion:
    """Monomial-basis expansion of a Schur polynomial (for triangularity checks)."""
    return expand_in_basis(schur_poly(lam).raw, "m")


def is_dominance_triangular(lam: Partition) -> bool:
    """Schur-in-m support lies weakly below lam with leading coefficient 1."""
    exp = schur_in_monomials(lam)
    if exp.coeffs.get(lam) != 1:
        return False
    return all(dominance_leq(nu, lam) for nu in exp.coeffs)
