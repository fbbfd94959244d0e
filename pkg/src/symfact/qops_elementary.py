"""Operators factorizing products of elementary symmetric polynomials.

The ring of symmetric polynomials is identified with a free polynomial ring
in coordinates eps_j = e_j(x).  Every operator here acts on those
coordinates by substitution: Q_z scales eps_j by 1 + (z-1) j / n, the
separating map sends eps_j to C(n,j) prod_i (1 + (z_i-1) j / n), and the
chain links A_k act on the elementary polynomials of the first k variables
by a two-term rule.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .bases import elementary_power, elementary_sym, expand_in_basis
from .partitions import Partition
from .poly import (
    InvariantViolation,
    MultiPoly,
    NotSymmetric,
    PolyError,
    UniPoly,
    default_names,
)

Exponent = tuple[int, ...]


def _eps_names(n: int) -> tuple[str, ...]:
    return default_names("eps", n)


def to_eps(f: MultiPoly) -> MultiPoly:
    """Rewrite a symmetric polynomial as a polynomial in eps_1..eps_n."""
    n = f.arity
    expn = expand_in_basis(f, "E")
    terms = {}
    for lam, c in expn.coeffs.items():
        exp = tuple(lam.diff(j, j + 1) for j in range(1, n + 1))
        terms[exp] = c
    return MultiPoly(n, terms, _eps_names(n))


def from_eps(p: MultiPoly, n: int | None = None) -> MultiPoly:
    """Substitute eps_j <- e_j(x), recovering the symmetric polynomial."""
    n = p.arity if n is None else n
    if p.arity != n:
        raise PolyError("eps polynomial arity must equal n")
    acc = MultiPoly.zero(n)
    for exp, c in p.terms.items():
        term = MultiPoly.const(n, c)
        for j, e in enumerate(exp, start=1):
            if e:
                term = term * elementary_power(j, e, n)
        acc = acc + term
    return acc


def apply_h(f: MultiPoly, j: int) -> MultiPoly:
    """Euler operator eps_j d/deps_j conjugated back to the x variables."""
    n = f.arity
    if not 1 <= j <= n:
        raise PolyError(f"need 1 <= j <= n, got j={j}")
    return from_eps(to_eps(f).euler(j - 1), n)


def h_explicit_value(f: MultiPoly, j: int, point: list[Fraction]) -> Fraction:
    """The same operator as an explicit first-order form, at one point.

    e_j(x) sum_i (-x_i)^(n-j) / prod_{m != i} (x_m - x_i) * df/dx_i evaluated
    at a point with pairwise distinct coordinates (exact rationals).
    """
    n = f.arity
    if not 1 <= j <= n:
        raise PolyError(f"need 1 <= j <= n, got j={j}")
    pt = [Fraction(v) for v in point]
    if len(set(pt)) != n:
        raise PolyError("point must have pairwise distinct coordinates")
    total = Fraction(0)
    for i in range(n):
        denom = Fraction(1)
        for m in range(n):
            if m != i:
                denom *= pt[m] - pt[i]
        total += (-pt[i]) ** (n - j) / denom * f.diff(i).eval(pt)
    return elementary_sym(j, n).eval(pt) * total


def q_poly(lam: Partition) -> UniPoly:
    """prod_j (1 + (z-1) j / n)^(lam_j - lam_{j+1}); value 1 at z = 1."""
    n = lam.n
    acc = UniPoly.const(1)
    for j in range(1, n + 1):
        mult = lam.diff(j, j + 1)
        if mult:
            acc = acc * UniPoly([Fraction(n - j, n), Fraction(j, n)]) ** mult
    return acc


def q_ode_residual(lam: Partition, q: UniPoly | None = None) -> UniPoly:
    """Denominator-cleared residual of dq/dz = sum_j (lam_j - lam_{j+1}) q / (z + (n-j)/j).

    Clearing multiplies through by prod_j (j z + n - j); the result must be
    the zero polynomial for lam's own eigenvalue polynomial (the default q).
    """
    n = lam.n
    if q is None:
        q = q_poly(lam)
    linear = [UniPoly([Fraction(n - j), Fraction(j)]) for j in range(1, n + 1)]
    full = UniPoly.const(1)
    for w in linear:
        full = full * w
    residual = q.derivative() * full
    for j in range(1, n + 1):
        mult = lam.diff(j, j + 1)
        if not mult:
            continue
        rest = UniPoly.const(1)
        for m, w in enumerate(linear, start=1):
            if m != j:
                rest = rest * w
        residual = residual - rest * q * Fraction(mult * j)
    return residual


@lru_cache(maxsize=None)
def _q_scale(j: int, n: int) -> UniPoly:
    return UniPoly([Fraction(n - j, n), Fraction(j, n)])


def apply_q(f: MultiPoly, n_x: int | None = None, z_name: str = "z") -> MultiPoly:
    """Scale eps_j by 1 + (z-1) j / n and map back; new z slot appended.

    Trailing slots past ``n_x`` (earlier z's) ride along untouched.
    """
    n = f.arity if n_x is None else n_x
    groups: dict[Exponent, dict[Exponent, Fraction]] = {}
    for exp, c in f.terms.items():
        groups.setdefault(exp[n:], {})[exp[:n]] = c
    out: dict[Exponent, Fraction] = {}
    for tail, heads in groups.items():
        eps = to_eps(MultiPoly(n, heads))
        for eexp, c in eps.terms.items():
            zfactor = UniPoly.const(1)
            xfactor = MultiPoly.const(n, 1)
            for j, e in enumerate(eexp, start=1):
                if not e:
                    continue
                zfactor = zfactor * _q_scale(j, n) ** e
                xfactor = xfactor * elementary_power(j, e, n)
            for xexp, xc in xfactor.terms.items():
                for d, qc in enumerate(zfactor.coeffs):
                    if not qc:
                        continue
                    key = xexp + tail + (d,)
                    s = out.get(key, Fraction(0)) + c * xc * qc
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
    return MultiPoly(f.arity + 1, out, f.names + (z_name,))


@lru_cache(maxsize=None)
def _chain_image(j: int, k: int, n: int) -> MultiPoly:
    """Image of e_j of the first k variables under the k-th chain link.

    Lives in k slots: the first k-1 are x's, the last is z_k.
    """
    names = default_names("x", k - 1) + (f"z{k}",)
    z = MultiPoly.variable(k - 1, k, names)
    one = MultiPoly.one(k, names)

    def embed(i: int) -> MultiPoly:
        if i == 0:
            return one
        return elementary_sym(i, k - 1).extend(1, (f"z{k}",)).rename(names)

    if j == k:
        return z * embed(k - 1)
    u = one * Fraction(n - j, n) + z * Fraction(j, n)
    v = one * Fraction(k - j, n) + z * Fraction(n - k + j, n)
    return embed(j) * u + embed(j - 1) * v


def apply_a(f: MultiPoly, k: int, n: int) -> MultiPoly:
    """Chain link: substitute the two-term rule into the e-coordinates.

    Expects symmetry in the first k slots; trailing slots are inert.  On
    output slot k holds z_k.
    """
    if not 1 <= k <= n:
        raise PolyError(f"need 1 <= k <= n, got k={k}")
    if f.arity < k:
        raise PolyError("polynomial must have at least k slots")
    if not f.is_symmetric(k):
        raise NotSymmetric("input must be symmetric in its first k slots")
    groups: dict[Exponent, dict[Exponent, Fraction]] = {}
    for exp, c in f.terms.items():
        groups.setdefault(exp[k:], {})[exp[:k]] = c
    out: dict[Exponent, Fraction] = {}
    powers: dict[tuple[int, int], MultiPoly] = {}
    for tail, heads in groups.items():
        eps = to_eps(MultiPoly(k, heads))
        for eexp, c in eps.terms.items():
            image = MultiPoly.one(k)
            for j, e in enumerate(eexp, start=1):
                if not e:
                    continue
                if (j, e) not in powers:
                    powers[(j, e)] = _chain_image(j, k, n) ** e
                image = image * powers[(j, e)]
            for hexp, hc in image.terms.items():
                key = hexp + tail
                s = out.get(key, Fraction(0)) + c * hc
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
    return MultiPoly(f.arity, out, f.names)


@lru_cache(maxsize=None)
def _separating_image(j: int, n: int) -> MultiPoly:
    """C(n,j) prod_i (1 + (z_i - 1) j / n) over the n z-slots."""
    import math

    names = default_names("z", n)
    acc = MultiPoly.const(n, math.comb(n, j), names)
    for i in range(n):
        acc = acc * (
            MultiPoly.const(n, Fraction(n - j, n), names)
            + MultiPoly.variable(i, n, names) * Fraction(j, n)
        )
    return acc


def separate_via_q(f: MultiPoly) -> MultiPoly:
    """rho_0 composed with n eps-scaling Q's, output in z_1..z_n."""
    n = f.arity
    h = f
    for i in range(n, 0, -1):
        h = apply_q(h, n_x=n, z_name=f"z{i}")
    h = h.partial_eval({i: 1 for i in range(n)})
    return h.permute(list(range(n - 1, -1, -1)))


def separate_via_chain(f: MultiPoly) -> MultiPoly:
    n = f.arity
    g = f
    for k in range(n, 0, -1):
        g = apply_a(g, k, n)
    return g.rename(default_names("z", n))


def separate(f: MultiPoly, check_routes: bool = True) -> MultiPoly:
    """eps-substitution separating map; optionally checked against the chain."""
    n = f.arity
    eps = to_eps(f)
    out = MultiPoly.zero(n, default_names("z", n))
    powers: dict[tuple[int, int], MultiPoly] = {}
    for eexp, c in eps.terms.items():
        image = MultiPoly.one(n, out.names)
        for j, e in enumerate(eexp, start=1):
            if not e:
                continue
            if (j, e) not in powers:
                powers[(j, e)] = _separating_image(j, n) ** e
            image = image * powers[(j, e)]
        out = out + image * c
    if check_routes and out != separate_via_chain(f):
        raise InvariantViolation("eps-substitution and A-chain routes disagree")
    return out


def lift(f: MultiPoly) -> MultiPoly:
    """Variable-adding operator: eps_j <- ((n-j)/n) e_j of the n variables."""
    m = f.arity
    n = m + 1
    eps = to_eps(f)
    acc = MultiPoly.zero(n)
    for eexp, c in eps.terms.items():
        term = MultiPoly.const(n, c)
        for j, e in enumerate(eexp, start=1):
            if e:
                term = term * Fraction(n - j, n) ** e * elementary_power(j, e, n)
        acc = acc + term
    return acc
