"""Monomial-basis operator suite: frozen examples plus sweep identities."""

from fractions import Fraction as F

import pytest

from symfact import qops_monomial as qm
from symfact.bases import monomial_sym
from symfact.partitions import Partition, enumerate_partitions
from symfact.poly import MultiPoly, UniPoly


def mbar(*parts):
    return monomial_sym(Partition(parts)).normalized


class TestHamiltonians:
    def test_pure_powers(self):
        f = MultiPoly(2, {(2, 0): 1, (0, 2): 1})
        assert qm.apply_h(f, 1) == f * 2  # e_1(2,0) = 2
        assert qm.apply_h(f, 2).is_zero  # e_2(2,0) = 0

    def test_product_monomial(self):
        f = MultiPoly(2, {(1, 1): 1})
        assert qm.apply_h(f, 2) == f

    def test_per_term_eigenvalue_oracle(self):
        # independent oracle: H_j scales x^a by the elementary symmetric e_j(a)
        import itertools
        import math

        f = MultiPoly(3, {(3, 1, 0): F(2, 3), (1, 1, 1): -1, (0, 0, 2): 5})
        for j in (1, 2, 3):
            oracle = MultiPoly(
                3,
                {
                    exp: c * sum(math.prod(s) for s in itertools.combinations(exp, j))
                    for exp, c in f.terms.items()
                },
            )
            assert qm.apply_h(f, j) == oracle

    def test_commutators_vanish(self):
        f = MultiPoly(3, {(2, 1, 0): 1, (1, 1, 1): F(1, 2)})
        for j in (1, 2, 3):
            for k in (1, 2, 3):
                assert qm.apply_h(qm.apply_h(f, j), k) == qm.apply_h(qm.apply_h(f, k), j)


class TestEigenvaluePolynomial:
    def test_frozen_values(self):
        assert qm.q_poly(Partition((2, 0))) == UniPoly([F(1, 2), 0, F(1, 2)])
        assert qm.q_poly(Partition((0, 0, 0))) == UniPoly([1])
        assert qm.q_poly(Partition((2, 1, 0))) == UniPoly([F(1, 3), F(1, 3), F(1, 3)])

    def test_matches_restriction_oracle(self):
        # q(z) is the normalized basis polynomial at (z, 1, ..., 1)
        for lam in enumerate_partitions(5, 3):
            restricted = monomial_sym(lam).normalized.partial_eval({1: 1, 2: 1})
            coeffs = [F(0)] * (lam.parts[0] + 1)
            for (e,), c in restricted.terms.items():
                coeffs[e] = c
            assert qm.q_poly(lam) == UniPoly(coeffs)

    def test_value_one_at_one(self):
        for lam in enumerate_partitions(6, 4):
            assert qm.q_poly(lam).eval(1) == 1


class TestQOperator:
    def test_eigenrelation_frozen(self):
        out = qm.apply_q(mbar(2, 0))
        expected = MultiPoly(
            3, {(2, 0, 0): F(1, 4), (0, 2, 0): F(1, 4), (2, 0, 2): F(1, 4), (0, 2, 2): F(1, 4)}
        )
        assert out == expected

    def test_constant(self):
        assert qm.apply_q(MultiPoly.one(2)) == MultiPoly.one(3)

    def test_nonsymmetric_input(self):
        out = qm.apply_q(MultiPoly.variable(0, 2))
        assert out == MultiPoly(3, {(1, 0, 1): F(1, 2), (1, 0, 0): F(1, 2)})

    def test_eigenrelation_sweep(self):
        for lam in enumerate_partitions(5, 3):
            f = monomial_sym(lam).normalized
            q = qm.q_poly(lam)
            assert qm.apply_q(f) == f.extend(1, ("z",)) * q.as_multipoly(4, 3)

    def test_agrees_with_spectral_route(self):
        spectral = qm.diagonal_q()
        for lam in enumerate_partitions(4, 3):
            f = monomial_sym(lam).normalized
            assert qm.apply_q(f) == spectral.apply(f)

    def test_commutativity_on_symmetric_input(self):
        f = mbar(2, 1, 0) + mbar(1, 1, 1) * F(1, 3)
        ab = qm.apply_q(qm.apply_q(f, n_x=3, z_name="z2"), n_x=3, z_name="z1")
        ba = qm.apply_q(qm.apply_q(f, n_x=3, z_name="z1"), n_x=3, z_name="z2")
        assert ab == ba.swap_slots(3, 4)


class TestProjectorChain:
    def test_projector_action(self):
        f = MultiPoly(2, {(2, 1): 1})
        assert qm.apply_projector(f, 1, 2) == MultiPoly(2, {(2, 2): 1})

    def test_projector_idempotence_composition(self):
        f = MultiPoly(3, {(2, 1, 3): 1, (0, 1, 2): -2})
        p12 = qm.apply_projector(qm.apply_projector(f, 1, 3), 2, 3)
        assert p12 == qm.apply_projector(f, 2, 3)

    def test_chain_value_frozen(self):
        out = qm.apply_a(mbar(2, 0), 2, 2)
        assert out == MultiPoly(
            2, {(2, 2): F(1, 4), (2, 0): F(1, 4), (0, 2): F(1, 4), (0, 0): F(1, 4)}
        )

    def test_first_link_is_identity(self):
        f = MultiPoly(2, {(2, 1): F(5, 3)})
        assert qm.apply_a(f, 1, 2) == f

    def test_inverse_round_trip(self):
        f = MultiPoly(2, {(2, 0): 1, (0, 2): 1})
        assert qm.apply_a_inv(qm.apply_a(f, 2, 2), 2, 2) == f

    def test_chain_link_identity_sweep(self):
        # restriction of Q equals the chain link applied to the restriction
        n = 3
        for lam in enumerate_partitions(4, n):
            f = monomial_sym(lam).normalized
            for k in range(1, n + 1):
                lhs = qm.apply_q(f).partial_eval({i: 1 for i in range(k - 1, n)})
                rhs = qm.apply_a(qm.rho(f, k), k, n)
                assert lhs == rhs, (lam, k)


class TestSeparation:
    def test_frozen_products(self):
        assert qm.separate(mbar(2, 0)) == MultiPoly(
            2, {(2, 2): F(1, 4), (2, 0): F(1, 4), (0, 2): F(1, 4), (0, 0): F(1, 4)}
        )
        assert qm.separate(MultiPoly.one(2)) == MultiPoly.one(2)
        assert qm.separate(mbar(1, 1)) == MultiPoly(2, {(1, 1): 1})

    def test_products_of_eigenvalues_sweep(self):
        for lam in enumerate_partitions(4, 3):
            q = qm.q_poly(lam)
            expected = MultiPoly.one(3)
            for j in range(3):
                expected = expected * q.as_multipoly(3, j)
            assert qm.separate(monomial_sym(lam).normalized) == expected

    def test_route_check_is_active(self):
        # both routes agree on symmetric input (raises otherwise)
        f = mbar(2, 1) + mbar(1, 1) * 3
        qm.separate(f, check_routes=True)

    def test_symmetry_required(self):
        with pytest.raises(Exception):
            qm.separate(MultiPoly.variable(0, 2))


class TestLift:
    def test_single_variable(self):
        assert qm.lift(MultiPoly.variable(0, 1)) == MultiPoly(2, {(1, 0): F(1, 2), (0, 1): F(1, 2)})

    def test_constant(self):
        assert qm.lift(MultiPoly.one(1)) == MultiPoly.one(2)

    def test_power(self):
        assert qm.lift(MultiPoly(1, {(2,): 1})) == MultiPoly(2, {(2, 0): F(1, 2), (0, 2): F(1, 2)})

    def test_lifts_basis_elements(self):
        for lam_short in enumerate_partitions(4, 2):
            lifted = qm.lift(monomial_sym(lam_short).normalized)
            assert lifted == monomial_sym(lam_short.with_trailing_zero()).normalized


def test_separation_equation_residual():
    for lam in enumerate_partitions(5, 3):
        assert qm.separation_residual(lam).is_zero
