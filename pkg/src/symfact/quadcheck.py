"""Numerical verification of the integral forms of the Schur-case operators.

The delta constraint prod x_i = z prod y_i is always eliminated analytically
(solve for the last variable, Jacobian 1/(x_1...x_{n-1})); what remains is a
Laurent-polynomial integrand over an interleaved domain.  At n = 2 that
integral is evaluated in closed form with exact rational arithmetic; at
n = 3 the remaining two-dimensional integral is done by deterministic
adaptive quadrature.  Floating point enters only at the final evaluation
step.

The integral form of the Q-operator can be normalized with its (z-1)^(n-1)
factor either multiplying or dividing, and only one choice reproduces the
eigenvalue polynomial; both are computed and the exact spectral oracle
adjudicates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from scipy import integrate

from . import qops_schur
from .bases import alternant, schur_poly, vandermonde
from .partitions import Partition
from .poly import InvariantViolation, MultiPoly, PolyError

Scalar = int | Fraction


def _as_fractions(values) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class OrderedDomain:
    """Interleaved domain 0 < y_1 < x_1 < y_2 < ... < x_{n-1} < y_n < x_n.

    The delta constraint fixes prod x_i = z prod y_i; the tail constraint is
    the literal x_n > y_n inequality (at n = 2 it is provably value-neutral,
    which the suite checks rather than assumes).
    """

    y: tuple[Fraction, ...]
    z: Fraction
    tail_constraint: bool = True

    def __post_init__(self):
        if any(b <= a for a, b in zip(self.y, self.y[1:])):
            raise PolyError("bounds must be strictly increasing")
        if self.y[0] <= 0:
            raise PolyError("bounds must be positive")
        if self.z <= 1:
            raise PolyError("the delta support requires z > 1")

    @property
    def n(self) -> int:
        return len(self.y)

    def delta_value(self) -> Fraction:
        return self.z * math.prod(self.y)


@dataclass(frozen=True)
class QuadratureResult:
    """Value, a nonnegative error estimate, and the evaluation count."""

    value: float
    error_estimate: float
    evaluations: int


def _vandermonde_value(values: tuple[Fraction, ...]) -> Fraction:
    acc = Fraction(1)
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            acc *= values[i] - values[j]
    return acc


def _exact_delta_integral_2d(p: MultiPoly, c: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    """Integral over (lo, hi) of p(x, c/x) / x for an antisymmetric p.

    Each term x^a y^b contributes c^b x^(a-b-1); antisymmetry rules out
    a = b, so every antiderivative is a pure power and no logarithms occur.
    """
    if p.arity != 2:
        raise PolyError("need a two-variable polynomial")
    total = Fraction(0)
    for (a, b), coeff in p.terms.items():
        if a == b:
            raise InvariantViolation("diagonal term would integrate to a logarithm")
        e = a - b
        total += coeff * c**b * (hi**e - lo**e) / e
    return total


def _adaptive_delta_integral_3d(
    p: MultiPoly,
    c: Fraction,
    outer: tuple[Fraction, Fraction],
    inner: tuple[Fraction, Fraction],
    tail_bound: Fraction | None,
) -> QuadratureResult:
    """Integrate p(x1, x2, c/(x1 x2)) / (x1 x2) over an interleaved cell.

    Domain: outer[0] < x1 < outer[1], inner[0] < x2 < inner[1], and (when
    ``tail_bound`` is given) the eliminated variable above it, i.e.
    x1 x2 < c / tail_bound.  The x1 range is split at the hyperbola kink so
    each adaptive call sees a smooth integrand; subdivision is deterministic.
    """
    if p.arity != 3:
        raise PolyError("need a three-variable polynomial")
    terms = []
    for (a, b, d), coeff in p.terms.items():
        if a == d or b == d:
            raise InvariantViolation("diagonal term would integrate to a logarithm")
        terms.append((a - d - 1, b - d - 1, float(coeff * c**d)))

    evaluations = 0

    def integrand(x2: float, x1: float) -> float:
        nonlocal evaluations
        evaluations += 1
        return math.fsum(co * x1**e1 * x2**e2 for e1, e2, co in terms)

    a1, b1 = outer
    a2, b2 = inner
    if tail_bound is None:
        cap = b1 * b2 + 1  # never binds: x1 x2 < b1 b2 on the cell
    else:
        cap = c / tail_bound  # x1 * x2 must stay below this
    hi1 = min(b1, cap / a2)
    if hi1 <= a1:
        return QuadratureResult(0.0, 0.0, 0)
    kink = cap / b2
    pieces: list[tuple[Fraction, Fraction, bool]] = []
    if kink > a1:
        pieces.append((a1, min(hi1, kink), True))  # full inner range
    if kink < hi1:
        pieces.append((max(a1, kink), hi1, False))  # hyperbola-capped range
    total = 0.0
    err = 0.0
    capf = float(cap)
    b2f = float(b2)
    a2f = float(a2)
    for lo, hi, full in pieces:
        if hi <= lo:
            continue
        upper = (lambda x: b2f) if full else (lambda x: min(b2f, capf / x))
        val, abserr = integrate.dblquad(
            integrand, float(lo), float(hi), lambda x: a2f, upper,
            epsabs=1e-13, epsrel=1e-13,
        )
        total += val
        err += abserr
    if err > max(1e-8, 1e-8 * abs(total)):
        raise InvariantViolation(
            f"adaptive quadrature did not converge: value {total}, "
            f"error estimate {err}, {evaluations} evaluations"
        )
    return QuadratureResult(total, err, evaluations)


def box_integral(p: MultiPoly, bounds: list[tuple[Fraction, Fraction]]) -> Fraction:
    """Exact iterated integral of a polynomial over an axis-aligned box."""
    if len(bounds) != p.arity:
        raise PolyError("need one bound pair per slot")
    total = Fraction(0)
    for exp, coeff in p.terms.items():
        factor = coeff
        for (lo, hi), a in zip(bounds, exp):
            factor *= (hi ** (a + 1) - lo ** (a + 1)) / (a + 1)
        total += factor
    return total


# -- Q_z integral ------------------------------------------------------------


def core_alternant_integral(
    lam: Partition, y, z, tail_constraint: bool = True
) -> tuple[Fraction | float, Fraction, QuadratureResult]:
    """The prefactor-free heart of the Q_z theorem.

    Integrates the alternant of the shifted partition against the delta
    constraint over the interleaved domain; the exact right-hand side is
    alternant(y) * phi(z).  Returns (computed, oracle, result record).
    """
    dom = OrderedDomain(_as_fractions(y), Fraction(z), tail_constraint)
    n = dom.n
    if lam.n != n:
        raise PolyError("partition length must match the number of bounds")
    a_mu = alternant(lam.shifted().parts, n)
    oracle = a_mu.eval(dom.y) * qops_schur.phi_data(lam).phi.eval(dom.z)
    computed, result = _delta_integral(a_mu, dom)
    return computed, oracle, result


def _delta_integral(p: MultiPoly, dom: OrderedDomain) -> tuple[Fraction | float, QuadratureResult]:
    """Integrate an antisymmetric polynomial against the delta constraint."""
    n = dom.n
    c = dom.delta_value()
    y = dom.y
    if n == 2:
        hi = min(y[1], c / y[1]) if dom.tail_constraint else y[1]
        value = _exact_delta_integral_2d(p, c, y[0], hi)
        return value, QuadratureResult(float(value), 0.0, len(p.terms))
    if n == 3:
        tail = y[2] if dom.tail_constraint else None
        result = _adaptive_delta_integral_3d(p, c, (y[0], y[1]), (y[1], y[2]), tail)
        return result.value, result
    raise PolyError("delta-constrained integrals are implemented for n = 2, 3")


@dataclass(frozen=True)
class PrefactorAdjudication:
    """Both prefactor conventions for the Q-operator integral, judged by the oracle.

    The position of the (z-1)^(n-1) factor names each convention:
    ``denominator`` is (n-1)! / ((z-1)^(n-1) Delta(y)), ``numerator`` is
    (n-1)! (z-1)^(n-1) / Delta(y).
    """

    denominator: QuadratureResult
    numerator: QuadratureResult
    oracle: Fraction
    rel_err_denominator: float
    rel_err_numerator: float
    convention: str


def _rel_err(value: float, oracle: Fraction) -> float:
    o = float(oracle)
    if o == 0.0:
        return abs(value)
    return abs(value - o) / abs(o)


def integral_q(f: MultiPoly, z, y, tail_constraint: bool = True, tol: float = 1e-6) -> PrefactorAdjudication:
    """Evaluate [Q_z f](y) by the delta-constrained integral, both conventions.

    The spectral operator supplies the exact oracle; exactly one prefactor
    convention must match it (choose z != 2 so the two differ).
    """
    dom = OrderedDomain(_as_fractions(y), Fraction(z), tail_constraint)
    n = dom.n
    if f.arity != n:
        raise PolyError("polynomial arity must match the number of bounds")
    spectral = qops_schur.apply_q(f)
    oracle = spectral.eval(list(dom.y) + [dom.z])
    integrand = vandermonde(n) * f
    raw, result = _delta_integral(integrand, dom)
    base = Fraction(math.factorial(n - 1)) / _vandermonde_value(dom.y)
    pole = (dom.z - 1) ** (n - 1)
    if isinstance(raw, Fraction):
        v_den = float(raw * base / pole)
        v_num = float(raw * base * pole)
    else:
        v_den = raw * float(base / pole)
        v_num = raw * float(base * pole)
    den = QuadratureResult(v_den, result.error_estimate * abs(float(base / pole)), result.evaluations)
    num = QuadratureResult(v_num, result.error_estimate * abs(float(base * pole)), result.evaluations)
    e_den = _rel_err(v_den, oracle)
    e_num = _rel_err(v_num, oracle)
    if e_den <= tol and not e_num <= tol:
        convention = "denominator"
    elif e_num <= tol and not e_den <= tol:
        convention = "numerator"
    else:
        convention = "ambiguous"
    return PrefactorAdjudication(den, num, oracle, e_den, e_num, convention)


# -- A_k integral ------------------------------------------------------------


@dataclass(frozen=True)
class IntegralCheck:
    """One integral identity next to its exact oracle."""

    computed: QuadratureResult
    oracle: Fraction
    rel_err: float


def integral_a(lam: Partition, k: int, z_k, ytilde) -> IntegralCheck:
    """The k-variable chain-link integral against the restriction identity.

    Input is the normalized Schur polynomial restricted to its first k
    variables; the oracle is the shorter restriction at the shifted bounds
    times the eigenvalue polynomial at z_k.  Domain: 1 < x_1 < ytilde_1 <
    ... < ytilde_{k-1} < x_k with prod x = z_k prod ytilde.
    """
    n = lam.n
    if not 1 <= k <= n:
        raise PolyError(f"need 1 <= k <= n, got k={k}")
    yt = _as_fractions(ytilde)
    if len(yt) != k - 1:
        raise PolyError("need k-1 interleaving bounds")
    if any(b <= a for a, b in zip((Fraction(1),) + yt, yt)):
        raise PolyError("bounds must be strictly increasing and above 1")
    z = Fraction(z_k)
    if z <= 1:
        raise PolyError("the delta support requires z_k > 1")
    sbar = schur_poly(lam).normalized
    f = sbar.partial_eval({i: 1 for i in range(k, n)})
    oracle = sbar.eval(list(yt) + [1] * (n - k + 1)) * qops_schur.q_poly(lam).eval(z)

    prefactor = Fraction((-1) ** (k - 1) * math.factorial(n - 1), math.factorial(n - k))
    prefactor /= (z - 1) ** (n - 1)
    prefactor /= _vandermonde_value(yt)
    for yj in yt:
        prefactor /= (yj - 1) ** (n - k + 1)

    integrand = vandermonde(k) * f
    for j in range(k):
        integrand = integrand * (MultiPoly.variable(j, k) - 1) ** (n - k)
    c = z * math.prod(yt)

    if k == 1:
        # the delta pins the single variable at z; no quadrature needed
        value = prefactor * integrand.eval([z])
        result = QuadratureResult(float(value), 0.0, 1)
        return IntegralCheck(result, oracle, _rel_err(result.value, oracle))
    if k == 2:
        hi = min(yt[0], c / yt[0])
        raw = _exact_delta_integral_2d(integrand, c, Fraction(1), hi)
        value = prefactor * raw
        result = QuadratureResult(float(value), 0.0, len(integrand.terms))
        return IntegralCheck(result, oracle, _rel_err(result.value, oracle))
    if k == 3:
        raw = _adaptive_delta_integral_3d(
            integrand, c, (Fraction(1), yt[0]), (yt[0], yt[1]), yt[1]
        )
        value = raw.value * float(prefactor)
        result = QuadratureResult(value, raw.error_estimate * abs(float(prefactor)), raw.evaluations)
        return IntegralCheck(result, oracle, _rel_err(value, oracle))
    raise PolyError("chain-link integrals are implemented for k <= 3")


# -- lifting integral ---------------------------------------------------------


def integral_q0prime(f: MultiPoly, y) -> tuple[Fraction, QuadratureResult]:
    """Plain interleaved-box integral for the variable-adding operator.

    No delta constraint here: the integrand is polynomial, each row
    integrates in closed form, and the result is exact.
    """
    yy = _as_fractions(y)
    n = len(yy)
    if f.arity != n - 1:
        raise PolyError("polynomial must have one slot fewer than the bounds")
    if any(b <= a for a, b in zip(yy, yy[1:])) or yy[0] <= 0:
        raise PolyError("bounds must be strictly increasing and positive")
    integrand = vandermonde(n - 1) * f
    raw = box_integral(integrand, [(yy[i], yy[i + 1]) for i in range(n - 1)])
    value = raw * (-1) ** (n - 1) * math.factorial(n - 1) / _vandermonde_value(yy)
    return value, QuadratureResult(float(value), 0.0, len(integrand.terms))


# -- determinant identities ----------------------------------------------------


def det_fractions(matrix: list[list[Fraction]]) -> Fraction:
    """Exact determinant of a rational matrix by fraction-free elimination."""
    n = len(matrix)
    m = [list(map(Fraction, row)) for row in matrix]
    if any(len(row) != n for row in m):
        raise PolyError("matrix is not square")
    sign = 1
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                for cc in range(col, n):
                    m[r][cc] -= factor * m[col][cc]
    return det * sign


def matrix_identity_check(k: int, t: list[list[Scalar]]) -> bool:
    """Border identity: the difference determinant equals (+-) the bordered one.

    ``t`` has n rows and n-1 columns (the k-th column of an n-column array
    deleted).  Left side: the (n-1) x (n-1) determinant of consecutive row
    differences.  Right side: (-1)^(k-1) times the n x n determinant with a
    column of ones restored at position k.
    """
    n = len(t)
    rows = [[Fraction(v) for v in row] for row in t]
    if any(len(row) != n - 1 for row in rows):
        raise PolyError("need n rows and n-1 columns")
    if not 1 <= k <= n:
        raise PolyError(f"need 1 <= k <= n, got k={k}")
    lhs_rows = [
        [rows[i + 1][j] - rows[i][j] for j in range(n - 1)] for i in range(n - 1)
    ]
    lhs = det_fractions(lhs_rows) if n > 1 else Fraction(1)
    rhs_rows = [
        row[: k - 1] + [Fraction(1)] + row[k - 1 :] for row in rows
    ]
    rhs = det_fractions(rhs_rows) * (-1) ** (k - 1)
    return lhs == rhs


def delta_integration_identity(v: list[Scalar]) -> bool:
    """Iterated integral of a Vandermonde over an interleaved box.

    With m = len(v) - 1 integration variables u_i in (v_i, v_{i+1}), the
    integral of prod_{i<j} (u_i - u_j) equals (-1)^m / m! times the
    Vandermonde of the bounds.
    """
    vv = _as_fractions(v)
    m = len(vv) - 1
    if m < 1:
        raise PolyError("need at least two bounds")
    lhs = box_integral(vandermonde(m), [(vv[i], vv[i + 1]) for i in range(m)])
    rhs = _vandermonde_value(vv) * Fraction((-1) ** m, math.factorial(m))
    return lhs == rhs
