"""Lattice operations against their worked examples."""

import json
from fractions import Fraction

import pytest

from cubick3 import (
    DegenerateLattice,
    DependentGenerators,
    GramLattice,
    InvalidTwist,
    ZeroVector,
    direct_sum,
    determinant,
    disc_group,
    divisibility,
    is_primitive,
    orthogonal_complement,
    saturation,
    signature,
    span_sublattice,
)
from cubick3 import intlinalg as la
from cubick3.standard import (
    H2,
    LAMBDA1,
    LAMBDA2,
    MU1_BAR,
    MU1_TILDE,
    MU2_BAR,
    MU2_TILDE,
    gamma_to_gammabar,
    lambda_to_lambdatilde,
    nl_vector,
    polarization_vector,
    standard_lattice,
    unit_vector,
)

U = standard_lattice("U")
A2 = standard_lattice("A2")


class TestDirectSum:
    def test_two_hyperbolic_planes(self):
        L = direct_sum([U, U])
        assert L.rank == 4
        assert L.abs_det == 1

    def test_full_cubic_lattice(self):
        gbar = direct_sum(
            [standard_lattice("E"), U, U, standard_lattice("I03")]
        )
        assert gbar.rank == 23
        assert signature(gbar) == (2, 21, 0)

    def test_twist(self):
        L = direct_sum([A2], twists=[-1])
        assert L.gram.to_lists() == [[-2, 1], [1, -2]]

    def test_zero_twist(self):
        with pytest.raises(InvalidTwist):
            direct_sum([U], twists=[0])


class TestSignature:
    def test_a2(self):
        assert signature(A2) == (2, 0, 0)

    def test_lambda_d(self):
        assert signature(standard_lattice("LambdaD(14)")) == (2, 19, 0)

    def test_l14(self):
        L14 = GramLattice.from_rows([[2, -1, 0], [-1, 2, -1], [0, -1, -4]])
        assert signature(L14) == (2, 1, 0)

    def test_degenerate(self):
        assert signature(GramLattice.from_rows([[0]])) == (0, 0, 1)

    def test_sum_is_componentwise(self):
        parts = [A2, U, standard_lattice("I03")]
        sigs = [signature(p) for p in parts]
        total = signature(direct_sum(parts))
        assert total == tuple(sum(c) for c in zip(*sigs))
        # twist -1 swaps positive and negative counts
        pos, neg, null = signature(direct_sum([A2], twists=[-1]))
        assert (pos, neg, null) == (0, 2, 0)


class TestDeterminant:
    def test_a2(self):
        assert determinant(A2) == 3

    def test_k14_cofactor_oracle(self):
        K14 = GramLattice.from_rows([[-3, 1], [1, -5]])
        # cofactor expansion: (-3)(-5) - 1*1
        assert determinant(K14) == (-3) * (-5) - 1 * 1 == 14

    def test_u(self):
        assert determinant(U) == -1
        assert U.abs_det == 1


class TestDiscGroup:
    def test_k12_cyclic(self):
        dg = disc_group(GramLattice.from_rows([[-3, 0], [0, -4]]))
        assert dg.invariant_factors == (12,)
        assert dg.is_cyclic

    def test_k18_not_cyclic(self):
        dg = disc_group(GramLattice.from_rows([[-3, 0], [0, -6]]))
        assert dg.invariant_factors == (3, 6)
        assert not dg.is_cyclic

    def test_a2_generator_and_q(self):
        dg = disc_group(A2)
        assert dg.invariant_factors == (3,)
        # oracle: the q value of any generator of Z/3 on A2 is 2/3 mod 2Z,
        # computable from the rational Gram inverse
        ginv = la.frac_inv(A2.gram.to_lists())
        (gen,) = dg.generators
        y = la.mat_vec(A2.gram.to_lists(), list(gen))
        assert all(f.denominator == 1 for f in y)
        q_dual = sum(a * b for a, b in zip(y, la.mat_vec(ginv, y))) % 2
        assert dg.q_values == (Fraction(2, 3),)
        assert q_dual == dg.q_values[0]

    def test_degenerate(self):
        with pytest.raises(DegenerateLattice):
            disc_group(GramLattice.from_rows([[0]]))

    def test_order_equals_abs_det(self):
        for name in ("A2", "Gamma", "LambdaD(20)"):
            L = standard_lattice(name)
            assert disc_group(L).order == L.abs_det

    def test_q_two_routes_agree(self):
        for name in ("A2", "A2m", "Gamma", "LambdaD(12)"):
            L = standard_lattice(name)
            dg = disc_group(L)
            G = L.gram.to_lists()
            ginv = la.frac_inv(G)
            for gen, q in zip(dg.generators, dg.q_values):
                y = la.mat_vec(G, list(gen))
                q2 = sum(a * b for a, b in zip(y, la.mat_vec(ginv, y))) % 2
                assert q == q2
                assert q == (sum(c * p for c, p in zip(gen, y)) % 2)

    def test_odd_lattice_has_no_q(self):
        dg = disc_group(GramLattice.from_rows([[-3, 0], [0, -4]]))
        assert dg.q_values is None

    def test_generator_orders(self):
        # order of each generator class: the smallest m with m*g integral
        for name in ("A2", "Gamma", "LambdaD(18)", "LambdaD(36)"):
            L = standard_lattice(name)
            dg = disc_group(L)
            for gen, d in zip(dg.generators, dg.invariant_factors):
                denoms = [c.denominator for c in gen]
                from math import lcm

                assert lcm(*denoms) == d
                # the pairing with every basis vector must be integral
                assert all(
                    p.denominator == 1
                    for p in [
                        sum(Fraction(gij) * ci for gij, ci in zip(row, gen))
                        for row in L.gram.to_lists()
                    ]
                )


class TestSpanAndSaturation:
    def test_lambda_span(self):
        lt = standard_lattice("LambdaTilde")
        S = span_sublattice(lt, [LAMBDA1, LAMBDA2])
        assert S.induced_gram.to_lists() == [[2, -1], [-1, 2]]

    def test_k12_span(self):
        gbar = standard_lattice("Gammabar")
        v12 = gamma_to_gammabar(nl_vector(12))
        S = span_sublattice(gbar, [H2, v12])
        assert S.induced_gram.to_lists() == [[-3, 0], [0, -4]]

    def test_isotropic_sum(self):
        S = span_sublattice(U, [(1, 1)])
        assert S.induced_gram.to_lists() == [[2]]

    def test_dependent(self):
        with pytest.raises(DependentGenerators):
            span_sublattice(U, [(1, 0), (2, 0)])

    def test_index_three_saturation(self):
        gbar = standard_lattice("Gammabar")
        v8 = gamma_to_gammabar(nl_vector(8))
        _, idx = saturation(span_sublattice(gbar, [H2, v8]))
        assert idx == 3

    def test_a2_pair_in_two_planes(self):
        amb = direct_sum([U, standard_lattice("U")], twists=[1, -1])
        # A2 and A2(-1) bases written in U3+U4 coordinates
        lam1, lam2 = (0, 0, 1, -1), (1, 1, 0, 1)
        mu1, mu2 = (1, -1, 0, 0), (-1, 0, -1, -1)
        _, idx = saturation(span_sublattice(amb, [lam1, lam2, mu1, mu2]))
        assert idx == 3

    def test_content_removal(self):
        S = span_sublattice(U, [(2, 0)])
        sat, idx = saturation(S)
        assert sat.basis.to_lists() == [[1, 0]]
        assert idx == 2

    def test_idempotent(self):
        S = span_sublattice(U, [(2, 4)])
        sat, _ = saturation(S)
        again, idx = saturation(sat)
        assert idx == 1
        assert again.basis == sat.basis


class TestOrthogonalComplement:
    def test_a2_perp(self):
        lt = standard_lattice("LambdaTilde")
        C = orthogonal_complement(lt, [LAMBDA1, LAMBDA2])
        assert C.rank == 22
        assert C.abs_det == 3

    def test_lambda1_perp(self):
        lt = standard_lattice("LambdaTilde")
        C = orthogonal_complement(lt, [LAMBDA1])
        assert C.rank == 23
        assert C.abs_det == 2

    def test_polarization_complement(self):
        lam = standard_lattice("Lambda")
        E = standard_lattice("E").gram.to_lists()
        for d in (8, 12, 14):
            C = orthogonal_complement(lam, [polarization_vector(d)])
            Ld = standard_lattice(f"LambdaD({d})")
            assert C.rank == Ld.rank == 21
            assert C.abs_det == Ld.abs_det == d
            CL = C.as_lattice()
            assert signature(CL) == signature(Ld) == (2, 19, 0)
            assert disc_group(CL).invariant_factors == disc_group(Ld).invariant_factors
            # the canonical kernel basis realizes the block Gram exactly
            g = C.induced_gram.to_lists()
            assert [row[:16] for row in g[:16]] == E
            assert [row[16:] for row in g[16:]] == [
                [0, 1, 0, 0, 0],
                [1, 0, 0, 0, 0],
                [0, 0, -d, 0, 0],
                [0, 0, 0, 0, 1],
                [0, 0, 0, 1, 0],
            ]

    def test_complement_is_saturated(self):
        lt = standard_lattice("LambdaTilde")
        C = orthogonal_complement(lt, [LAMBDA1])
        _, idx = saturation(C)
        assert idx == 1


class TestDivisibilityPrimitivity:
    def test_divisibility(self):
        gamma = standard_lattice("Gamma")
        assert divisibility(gamma, nl_vector(14)) == 3
        assert divisibility(gamma, nl_vector(12)) == 1
        assert divisibility(U, (1, 0)) == 1

    def test_divisibility_zero(self):
        with pytest.raises(ZeroVector):
            divisibility(U, (0, 0))

    def test_primitive(self):
        gbar = standard_lattice("Gammabar")
        assert is_primitive(gbar, H2)
        assert not is_primitive(U, (2, 0))
        lt = standard_lattice("LambdaTilde")
        e3_plus_f4 = tuple(
            a + b for a, b in zip(unit_vector(24, 20), unit_vector(24, 23))
        )
        assert is_primitive(lt, e3_plus_f4)

    def test_primitive_zero(self):
        with pytest.raises(ZeroVector):
            is_primitive(U, (0, 0))


class TestInvariants:
    def test_disc_index_squared(self):
        gbar = standard_lattice("Gammabar")
        for d in (8, 14, 20):
            v = gamma_to_gammabar(nl_vector(d))
            S = span_sublattice(gbar, [H2, v])
            sat, idx = saturation(S)
            assert S.det == idx * idx * sat.det

    def test_mu_vectors_match_embeddings(self):
        gbar = standard_lattice("Gammabar")
        lt = standard_lattice("LambdaTilde")
        for mus, L in ((( MU1_BAR, MU2_BAR), gbar), ((MU1_TILDE, MU2_TILDE), lt)):
            m1, m2 = mus
            assert L.square(m1) == -2 and L.square(m2) == -2
            assert L.pairing(m1, m2) == 1

    def test_embeddings_isometric(self):
        import random

        gamma = standard_lattice("Gamma")
        gbar = standard_lattice("Gammabar")
        lt = standard_lattice("LambdaTilde")
        lam = standard_lattice("Lambda")
        rng = random.Random(5)
        for _ in range(25):
            u = tuple(rng.randint(-3, 3) for _ in range(22))
            v = tuple(rng.randint(-3, 3) for _ in range(22))
            assert gamma.pairing(u, v) == gbar.pairing(
                gamma_to_gammabar(u), gamma_to_gammabar(v)
            )
            from cubick3.standard import gamma_to_lambdatilde

            assert gamma.pairing(u, v) == lt.pairing(
                gamma_to_lambdatilde(u), gamma_to_lambdatilde(v)
            )
            assert lam.pairing(u, v) == lt.pairing(
                lambda_to_lambdatilde(u), lambda_to_lambdatilde(v)
            )
            # the image of the primitive cubic lattice lands in the
            # complement of the embedded A2
            for lam_vec in (LAMBDA1, LAMBDA2):
                assert lt.pairing(gamma_to_lambdatilde(u), lam_vec) == 0


def test_json_roundtrip():
    L = standard_lattice("Gamma")
    obj = json.loads(json.dumps(L.to_json()))
    back = GramLattice.from_json(obj)
    assert back.gram == L.gram
    assert back.label == "Gamma"


def test_json_big_integers_as_strings():
    big = 2**80
    L = GramLattice.from_rows([[big]])
    obj = L.to_json()
    assert obj["gram"] == [[str(big)]]
    assert GramLattice.from_json(obj).gram.data == ((big,),)
