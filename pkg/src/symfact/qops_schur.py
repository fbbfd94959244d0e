"""Operators factorizing the Schur basis.

The eigenvalue polynomial of the Q-operator is (n-1)! phi(z) / (z-1)^(n-1),
where phi is the unique combination of the powers z^(mu_j) (mu the shifted
partition) divisible by (z-1)^(n-1) and normalized to value 1 at z = 1.
The Hamiltonians are Euler-operator polynomials conjugated by the
Vandermonde; the separating map has an exact differential-operator inverse
built from K_n = prod_{i<j} (D_i - D_j).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import qops_monomial
from .bases import expand_in_basis, restricted_schur, schur_poly, vandermonde
from .partitions import Partition, ShiftedPartition
from .poly import (
    InvariantViolation,
    MultiPoly,
    NotDivisible,
    PolyError,
    UniPoly,
    default_names,
)


@dataclass(frozen=True)
class PhiData:
    """Shifted exponents mu, interpolation weights c_j, and phi = sum c_j z^mu_j."""

    mu: ShiftedPartition
    c: tuple[Fraction, ...]
    phi: UniPoly


def phi_data(lam: Partition) -> PhiData:
    """Build phi with c_j = prod_{k != j} (mu_j - mu_k)^(-1) and verify it.

    Verified on construction: the power sums sum_j mu_j^k c_j vanish for
    k = 0..n-2 and equal 1 at k = n-1, which is exactly divisibility of phi
    by (z-1)^(n-1) plus the normalization of the eigenvalue polynomial.
    """
    mu = lam.shifted()
    n = lam.n
    cs = []
    for j in range(n):
        denom = Fraction(1)
        for k in range(n):
            if k != j:
                denom *= mu.parts[j] - mu.parts[k]
        cs.append(1 / denom)
    phi = UniPoly.zero()
    for j in range(n):
        phi = phi + UniPoly.monomial(mu.parts[j], cs[j])
    for k in range(n):
        moment = sum(Fraction(mu.parts[j]) ** k * cs[j] for j in range(n))
        expected = Fraction(1 if k == n - 1 else 0)
        if moment != expected:
            raise InvariantViolation(f"moment condition k={k} fails for {lam}")
    return PhiData(mu, tuple(cs), phi)


def q_poly(lam: Partition) -> UniPoly:
    """(n-1)! phi(z) / (z-1)^(n-1), an exact polynomial with q(1) = 1."""
    n = lam.n
    data = phi_data(lam)
    try:
        q = (data.phi * math.factorial(n - 1)).divide_exact(UniPoly([-1, 1]) ** (n - 1))
    except NotDivisible as exc:
        raise InvariantViolation(f"phi for {lam} not divisible by (z-1)^(n-1)") from exc
    if q.eval(1) != 1:
        raise InvariantViolation(f"q(1) != 1 for {lam}")
    return q


def q_at_zero(lam: Partition) -> Fraction:
    """Closed form of q(0): zero unless the last part vanishes."""
    n = lam.n
    if lam.parts[-1] != 0:
        return Fraction(0)
    mu = lam.shifted().parts
    return Fraction(math.factorial(n - 1), math.prod(mu[:-1])) if n > 1 else Fraction(1)


def _to_unipoly(p: MultiPoly) -> UniPoly:
    if p.arity != 1:
        raise PolyError("need a univariate polynomial")
    coeffs = [Fraction(0)] * (p.total_degree() + 1)
    for exp, c in p.terms.items():
        coeffs[exp[0]] = c
    return UniPoly(coeffs)


def q_via_restriction(lam: Partition) -> UniPoly:
    """Oracle route: the normalized Schur polynomial at (z, 1, ..., 1)."""
    n = lam.n
    restricted = schur_poly(lam).normalized.partial_eval({i: 1 for i in range(1, n)})
    return _to_unipoly(restricted)


def q_via_restricted_determinant(lam: Partition) -> UniPoly:
    """Second oracle: the mixed-determinant restriction with k = 2."""
    num, den = restricted_schur(lam, 2)
    ratio = _to_unipoly(num.divide_exact(den))
    return ratio * (1 / schur_poly(lam).value_at_one)


def phi_ode_residual(lam: Partition) -> UniPoly:
    """Apply prod_j (z d/dz - mu_j) to phi; must vanish."""
    p = phi_data(lam).phi
    for m in lam.shifted().parts:
        p = p.euler() - p * m
    return p


def _hamiltonian_eigenvalues(lam: Partition) -> list[Fraction]:
    mu = lam.shifted().parts
    return [
        Fraction(sum(math.prod(sub) for sub in itertools.combinations(mu, k)))
        for k in range(1, lam.n + 1)
    ]


def _apply_big_z(num: UniPoly, order: int, n: int) -> tuple[UniPoly, int]:
    """One application of z (d/dz + (n-1)/(z-1)) on num / (z-1)^order."""
    z = UniPoly([0, 1])
    zm1 = UniPoly([-1, 1])
    return z * (num.derivative() * zm1 + num * (n - 1 - order)), order + 1


def separated_residual(lam: Partition, q: UniPoly | None = None) -> UniPoly:
    """Numerator of [Z^n + sum_k (-1)^k h_k Z^(n-k)] q over (z-1)^n.

    Z = z (d/dz + (n-1)/(z-1)) and h_k are the Hamiltonian eigenvalues of
    lam; rational functions are carried exactly as numerator/pole-order
    pairs.  A polynomial q satisfies lam's separated equation iff the
    returned numerator is the zero polynomial.
    """
    n = lam.n
    if q is None:
        q = q_poly(lam)
    powers: list[tuple[UniPoly, int]] = [(q, 0)]
    for _ in range(n):
        powers.append(_apply_big_z(*powers[-1], n))
    h = _hamiltonian_eigenvalues(lam)
    zm1 = UniPoly([-1, 1])
    num, order = powers[n]
    residual = num * zm1 ** (n - order)
    for k in range(1, n + 1):
        num, order = powers[n - k]
        residual = residual + num * zm1 ** (n - order) * (h[k - 1] * (-1) ** k)
    return residual


def apply_h(f: MultiPoly, j: int) -> MultiPoly:
    """Multiply by the Vandermonde, apply the Euler-operator elementary
    symmetric polynomial, divide back out exactly."""
    n = f.arity
    vand = vandermonde(n)
    g = qops_monomial.apply_h(f * vand, j)
    try:
        return g.divide_exact(vand)
    except NotDivisible as exc:
        raise InvariantViolation("conjugated Hamiltonian left the symmetric ring") from exc


def spectral_q() -> qops_monomial.DiagonalOperator:
    return qops_monomial.DiagonalOperator("s", q_poly)


def apply_q(f: MultiPoly, n_x: int | None = None, z_name: str = "z") -> MultiPoly:
    """Spectral Q-operator: expand over the Schur basis, scale, reassemble."""
    return spectral_q().apply(f, n_x, z_name)


def apply_k(f: MultiPoly) -> MultiPoly:
    """K_n = prod_{i<j} (D_i - D_j): scales x^a by prod_{i<j} (a_i - a_j)."""
    n = f.arity

    def weight(exp):
        w = 1
        for i in range(n):
            for j in range(i + 1, n):
                w *= exp[i] - exp[j]
        return w

    return f.scale_terms(weight)


def separate(f: MultiPoly) -> MultiPoly:
    """Factorizing map: each Schur component contributes prod_j q(z_j)."""
    n = f.arity
    expn = expand_in_basis(f, "s")
    names = default_names("z", n)
    acc = MultiPoly.zero(n, names)
    for lam, c in expn.coeffs.items():
        q = q_poly(lam)
        term = MultiPoly.const(n, c * schur_poly(lam).value_at_one, names)
        for j in range(n):
            term = term * q.as_multipoly(n, j, names)
        acc = acc + term
    return acc


def separate_inverse(g: MultiPoly) -> MultiPoly:
    """Differential-operator inverse of the separating map.

    Multiply by prod_k (x_k - 1)^(n-1), apply K_n, divide by the Vandermonde
    exactly, and scale; sends prod_j q_lam(x_j) back to the normalized Schur
    polynomial.  A nonzero division remainder means the input was not in the
    image.
    """
    n = g.arity
    h = g.rename(default_names("x", n))
    for k in range(n):
        h = h * (MultiPoly.variable(k, n) - 1) ** (n - 1)
    h = apply_k(h)
    try:
        h = h.divide_exact(vandermonde(n))
    except NotDivisible as exc:
        raise InvariantViolation("input is not in the image of the separating map") from exc
    delta_staircase = math.prod(math.factorial(i) for i in range(1, n))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return h * Fraction(sign * delta_staircase, math.factorial(n - 1) ** n)


def lift(f: MultiPoly) -> MultiPoly:
    """Spectral lifting: each Schur component of length n-1 gains a zero part."""
    m = f.arity
    n = m + 1
    expn = expand_in_basis(f, "s")
    acc = MultiPoly.zero(n)
    for lam, c in expn.coeffs.items():
        lifted = lam.with_trailing_zero()
        scale = c * schur_poly(lam).value_at_one / schur_poly(lifted).value_at_one
        acc = acc + schur_poly(lifted).raw * scale
    return acc
