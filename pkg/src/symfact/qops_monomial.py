"""Operators factorizing the monomial symmetric basis.

The one-parameter operator family Q_z acts by the substitution average
(1/n) sum_j f(..., z x_j, ...); the commuting Hamiltonians H_j are the
elementary symmetric polynomials in the Euler operators x_i d/dx_i.  The
separating map S_n = rho_0 Q_{z_1}...Q_{z_n} factorizes each normalized
basis element into a product of univariate eigenvalue polynomials, and
admits an equivalent triangular chain of k-variable operators A_k.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .bases import basis_poly, expand_in_basis
from .partitions import Partition
from .poly import InvariantViolation, MultiPoly, NotSymmetric, PolyError, UniPoly, default_names


def q_poly(lam: Partition) -> UniPoly:
    """Eigenvalue polynomial (1/n) sum_j z^(lam_j); equals m-bar at (z,1,..,1)."""
    n = lam.n
    coeffs = [Fraction(0)] * (lam.parts[0] + 1)
    for p in lam.parts:
        coeffs[p] += Fraction(1, n)
    return UniPoly(coeffs)


def apply_h(f: MultiPoly, j: int, n: int | None = None) -> MultiPoly:
    """j-th elementary symmetric polynomial in the Euler operators."""
    n = f.arity if n is None else n
    if not 1 <= j <= n:
        raise PolyError(f"need 1 <= j <= n, got j={j}")
    acc = MultiPoly.zero(f.arity, f.names)
    for subset in itertools.combinations(range(n), j):
        g = f
        for slot in subset:
            g = g.euler(slot)
        acc = acc + g
    return acc


def apply_q(f: MultiPoly, n_x: int | None = None, z_name: str = "z") -> MultiPoly:
    """Substitution average (1/n) sum_j f(..., z x_j, ...), new z slot last.

    Well defined on any polynomial, symmetric or not.  ``n_x`` restricts the
    average to the leading slots when trailing slots hold earlier z's.
    """
    n = f.arity if n_x is None else n_x
    if not 1 <= n <= f.arity:
        raise PolyError("n_x out of range")
    out: dict[tuple[int, ...], Fraction] = {}
    inv = Fraction(1, n)
    for exp, c in f.terms.items():
        for j in range(n):
            new = exp + (exp[j],)
            s = out.get(new, Fraction(0)) + c * inv
            if s:
                out[new] = s
            else:
                out.pop(new, None)
    return MultiPoly(f.arity + 1, out, f.names + (z_name,))


@dataclass(frozen=True)
class ProjectorPjk:
    """Substitution x_j <- x_j x_k, x_k <- 1 (1-based, j < k)."""

    j: int
    k: int

    def __post_init__(self):
        if not 1 <= self.j < self.k:
            raise PolyError(f"need 1 <= j < k, got j={self.j}, k={self.k}")

    def apply(self, f: MultiPoly) -> MultiPoly:
        if self.k > f.arity:
            raise PolyError("projector index exceeds arity")
        sj, sk = self.j - 1, self.k - 1
        out: dict[tuple[int, ...], Fraction] = {}
        for exp, c in f.terms.items():
            new = list(exp)
            new[sk] = exp[sj]
            key = tuple(new)
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return MultiPoly(f.arity, out, f.names)


def apply_projector(f: MultiPoly, j: int, k: int) -> MultiPoly:
    return ProjectorPjk(j, k).apply(f)


def apply_a(f: MultiPoly, k: int, n: int) -> MultiPoly:
    """Projector average (1/n)(n-k+1 + sum_{j<k} P_jk); slot k doubles as z_k.

    Only the first k slots are touched, so trailing slots may hold the z's
    produced by later links of the chain.
    """
    if not 1 <= k <= n:
        raise PolyError(f"need 1 <= k <= n, got k={k}")
    if f.arity < k:
        raise PolyError("polynomial must have at least k slots")
    acc = f * Fraction(n - k + 1, n)
    for j in range(1, k):
        acc = acc + apply_projector(f, j, k) * Fraction(1, n)
    return acc


def apply_a_inv(f: MultiPoly, k: int, n: int) -> MultiPoly:
    """Inverse of the projector average, from P_jk P_lk = P_jk."""
    if not 1 <= k <= n:
        raise PolyError(f"need 1 <= k <= n, got k={k}")
    acc = f * Fraction(n, n - k + 1)
    for j in range(1, k):
        acc = acc - apply_projector(f, j, k) * Fraction(1, n - k + 1)
    return acc


def rho(f: MultiPoly, k: int) -> MultiPoly:
    """Restriction setting all slots past the first k to 1."""
    if not 0 <= k <= f.arity:
        raise PolyError(f"need 0 <= k <= arity, got k={k}")
    return f.partial_eval({i: 1 for i in range(k, f.arity)})


def separate_via_q(f: MultiPoly) -> MultiPoly:
    """rho_0 composed with n substitution-average Q's, output in z_1..z_n."""
    n = f.arity
    h = f
    for i in range(n, 0, -1):
        h = apply_q(h, n_x=n, z_name=f"z{i}")
    h = h.partial_eval({i: 1 for i in range(n)})
    return h.permute(list(range(n - 1, -1, -1)))


def separate(f: MultiPoly, check_routes: bool = True) -> MultiPoly:
    """Factorizing map: on a normalized basis element, prod_j q(z_j).

    Runs the triangular A-chain; with ``check_routes`` the rho-Q composition
    is computed as well and any disagreement raises.
    """
    n = f.arity
    if not f.is_symmetric():
        raise NotSymmetric("separation needs a symmetric polynomial")
    g = f
    for k in range(n, 0, -1):
        g = apply_a(g, k, n)
    g = g.rename(default_names("z", n))
    if check_routes and g != separate_via_q(f):
        raise InvariantViolation("A-chain and Q-composition routes disagree")
    return g


def lift(f: MultiPoly) -> MultiPoly:
    """Variable-adding operator: (1/n) sum_j f with argument j omitted.

    Sends the normalized basis element of a length n-1 partition to the one
    with a zero part appended.
    """
    n = f.arity + 1
    acc = MultiPoly.zero(n)
    for j in range(n):
        acc = acc + f.insert_slot(j, "_")
    return (acc * Fraction(1, n)).rename(default_names("x", n))


def separation_residual(lam: Partition) -> UniPoly:
    """Apply prod_j (z d/dz - lam_j) to the eigenvalue polynomial."""
    p = q_poly(lam)
    for part in lam.parts:
        p = p.euler() - p * part
    return p


@dataclass(frozen=True)
class DiagonalOperator:
    """Expand, scale each basis coefficient by q_lam(z), reassemble.

    The spectral form of a Q-operator: diagonal on one of the three bases
    with a univariate eigenvalue polynomial per partition.  Output gains one
    z slot appended after the input slots.
    """

    basis: str
    eigenvalue: Callable[[Partition], UniPoly]

    def apply(self, f: MultiPoly, n_x: int | None = None, z_name: str = "z") -> MultiPoly:
        n = f.arity if n_x is None else n_x
        groups: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
        for exp, c in f.terms.items():
            groups.setdefault(exp[n:], {})[exp[:n]] = c
        out: dict[tuple[int, ...], Fraction] = {}
        for tail, heads in groups.items():
            expn = expand_in_basis(MultiPoly(n, heads), self.basis)
            for lam, c in expn.coeffs.items():
                q = self.eigenvalue(lam)
                raw = basis_poly(self.basis, lam).raw
                for d, qc in enumerate(q.coeffs):
                    if not qc:
                        continue
                    for hexp, hc in raw.terms.items():
                        key = hexp + tail + (d,)
                        s = out.get(key, Fraction(0)) + c * qc * hc
                        if s:
                            out[key] = s
                        else:
                            out.pop(key, None)
        return MultiPoly(f.arity + 1, out, f.names + (z_name,))


def diagonal_q() -> DiagonalOperator:
    """The spectral route for the substitution-average Q (cross-check)."""
    return DiagonalOperator("m", q_poly)
