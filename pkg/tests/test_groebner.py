import pytest

from linprod.groebner import (Budget, BudgetExceeded, Ideal, alpha_invariant, buchberger,
                              eliminate, graded_contains, graded_piece_dim, hilbert_function,
                              ideal_equal, intersect, membership, quotient, quotient_ideal,
                              reduce, saturate)
from linprod.poly import DEGREVLEX, LEX, Ring, UndefinedDegree

R2 = Ring(("x", "y"))
R3 = Ring(("x", "y", "z"))


def gens(R):
    return R.gens()


class TestReduce:
    def test_both_terms_divisible(self):
        x, y = gens(R2)
        assert reduce(x ** 2 + x * y, [x]) == R2.zero()

    def test_leftover(self):
        x, y = gens(R2)
        assert reduce(x ** 2 + y ** 2, [x]) == y ** 2

    def test_hand_division(self):
        x, y = gens(R2)
        assert reduce(x * y, [x - y], DEGREVLEX) == y ** 2


class TestBuchberger:
    def test_already_reduced(self):
        x, y, z = gens(R3)
        G = buchberger([x * y, x * z])
        assert sorted(map(str, G.polys)) == ["x*y", "x*z"]
        assert G.s_pairs_reduce_to_zero() and G.is_reduced()

    def test_single(self):
        x, y = gens(R2)
        assert [str(g) for g in buchberger([x])] == ["x"]

    def test_linear_rows(self):
        x, y = gens(R2)
        assert sorted(map(str, buchberger([x + y, x - y]).polys)) == ["x", "y"]

    @pytest.mark.parametrize("order", [DEGREVLEX, LEX])
    def test_cyclic4_self_checks(self, order):
        R = Ring(("a", "b", "c", "d"))
        a, b, c, d = R.gens()
        cyc = [a + b + c + d, a * b + b * c + c * d + d * a,
               a * b * c + b * c * d + c * d * a + d * a * b, a * b * c * d - 1]
        G = buchberger(cyc, order)
        assert G.s_pairs_reduce_to_zero() and G.is_reduced()
        assert all(G.contains(f) for f in cyc)

    def test_budget(self):
        R = Ring(("a", "b", "c", "d"))
        a, b, c, d = R.gens()
        cyc = [a + b + c + d, a * b + b * c + c * d + d * a,
               a * b * c + b * c * d + c * d * a + d * a * b, a * b * c * d - 1]
        with pytest.raises(BudgetExceeded) as err:
            buchberger(cyc, LEX, Budget(max_pairs=2))
        assert err.value.reason == "pairs"


class TestMembership:
    def test_multiple_of_generator(self):
        x, y, z = gens(R3)
        assert membership(x ** 2 * y, Ideal(R3, [x * y, x * z]))

    def test_not_member(self):
        x, y, z = gens(R3)
        assert not membership(x, Ideal(R3, [x * y, x * z]))

    def test_equality(self):
        x, y = gens(R2)
        assert ideal_equal(Ideal(R2, [x + y, x - y]), Ideal(R2, [x, y]))


class TestOps:
    def test_product(self):
        x, y = gens(R2)
        assert Ideal(R2, [x]) * Ideal(R2, [y]) == Ideal(R2, [x * y])

    def test_square(self):
        x, y = gens(R2)
        sq = Ideal.maximal(R2) ** 2
        assert sorted(map(str, sq.gens)) == sorted(["x^2", "x*y", "y^2"])

    def test_zeroth_power(self):
        x, y = gens(R2)
        assert Ideal(R2, [x, y]) ** 0 == Ideal.unit(R2)


class TestIntersect:
    def test_coprime_principal(self):
        x, y = gens(R2)
        assert intersect(Ideal(R2, [x]), Ideal(R2, [y])) == Ideal(R2, [x * y])

    def test_against_explicit(self):
        x, y = gens(R2)
        J = intersect(Ideal(R2, [x]), Ideal.maximal(R2) ** 2)
        assert J == Ideal(R2, [x ** 2, x * y])

    def test_unit_is_identity(self):
        x, y, z = gens(R3)
        I = Ideal(R3, [x * y - z ** 2, y ** 3])
        assert intersect(I, Ideal.unit(R3)) == I

    def test_inclusions(self):
        x, y, z = gens(R3)
        I, J = Ideal(R3, [x * y, z]), Ideal(R3, [x + z, y ** 2])
        K = intersect(I, J)
        assert I.contains_ideal(K) and J.contains_ideal(K)
        assert K.contains_ideal(I * J)


class TestQuotient:
    def test_divide_intersection(self):
        x, y = gens(R2)
        assert quotient(Ideal(R2, [x ** 2, x * y]), x) == Ideal(R2, [x, y])

    def test_unit_quotient(self):
        x, y = gens(R2)
        assert quotient(Ideal(R2, [x, y]), x).is_unit()

    def test_by_one(self):
        x, y = gens(R2)
        I = Ideal(R2, [x ** 2, y ** 3])
        assert quotient(I, R2.one()) == I

    def test_ideal_quotient(self):
        x, y = gens(R2)
        assert quotient_ideal(Ideal(R2, [x ** 2, x * y]), Ideal.maximal(R2)) == Ideal(R2, [x])


class TestSaturate:
    def test_embedded_component(self):
        x, y = gens(R2)
        assert saturate(Ideal(R2, [x ** 2, x * y]), Ideal.maximal(R2)) == Ideal(R2, [x])

    def test_already_saturated(self):
        x, y = gens(R2)
        assert saturate(Ideal(R2, [x]), Ideal.maximal(R2)) == Ideal(R2, [x])

    def test_primary_to_maximal(self):
        m = Ideal.maximal(R3)
        assert saturate(m ** 3, m).is_unit()

    def test_monotone(self):
        x, y, z = gens(R3)
        I = Ideal(R3, [x ** 2 * y, x * y * z])
        Ig = quotient(I, x)
        assert Ig.contains_ideal(I)
        assert saturate(I, Ideal(R3, [x])).contains_ideal(Ig)


class TestEliminate:
    def test_intersection_trick(self):
        R = Ring(("u", "x", "y"))
        u, x, y = R.gens()
        J = eliminate(Ideal(R, [u * x, (1 - u) * y]), ["u"])
        assert J.ring.names == ("x", "y")
        X, Y = J.ring.gens()
        assert J == Ideal(J.ring, [X * Y])

    def test_transcendental(self):
        R = Ring(("x", "t"))
        x, t = R.gens()
        assert eliminate(Ideal(R, [t - x ** 2]), ["x"]).is_zero()

    def test_nothing_to_eliminate(self):
        x, y = gens(R2)
        I = Ideal(R2, [x * y])
        assert eliminate(I, []) is I

    def test_front_variables_absent(self):
        R = Ring(("a", "x", "y"))
        a, x, y = R.gens()
        J = eliminate(Ideal(R, [x - a ** 2, y - a ** 3]), ["a"], keep_ring=True)
        assert all(not g.variables() & {0} for g in J.gens)
        assert J.contains(x ** 3 - y ** 2)


class TestGraded:
    def test_piece_dim(self):
        assert graded_piece_dim(Ideal.maximal(R3) ** 2, 2) == 6

    def test_alpha(self):
        x, y = gens(R2)
        assert alpha_invariant(Ideal(R2, [x ** 2, x * y])) == 2

    def test_alpha_zero_ideal(self):
        with pytest.raises(UndefinedDegree):
            alpha_invariant(Ideal(R2, []))

    def test_piece_bounded_by_monomials(self):
        x, y, z = gens(R3)
        I = Ideal(R3, [x * y, y * z - x ** 2])
        for d in range(6):
            assert graded_piece_dim(I, d) <= len(R3.monomials_of_degree(d))
            assert graded_piece_dim(I, d) + hilbert_function(I, d) == len(R3.monomials_of_degree(d))

    def test_graded_contains_matches_gb(self):
        x, y, z = gens(R3)
        G = [x * y, y * z - x ** 2]
        I = Ideal(R3, G)
        for f in [x ** 3, x ** 2 * y, y ** 2 * z - x ** 2 * y, z ** 3, x * y * z]:
            assert graded_contains(f, G) == I.contains(f)

    def test_equality_is_equivalence(self):
        x, y = gens(R2)
        A = Ideal(R2, [x + y, x - y])
        B = Ideal(R2, [x, y])
        C = Ideal.maximal(R2)
        assert A == A and (A == B) == (B == A) and A == C
