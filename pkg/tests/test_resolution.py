import pytest

from linprod import catalog
from linprod.fold import fold_ideal
from linprod.groebner import Ideal
from linprod.linalg import rank
from linprod.poly import Ring
from linprod.resolution import (BettiTable, NotEquigenerated, Resolution, ResolutionStep,
                                betti_table, free_resolution, is_linear, minimize,
                                minimize_resolution, regularity, syzygies)

R2 = Ring(("x", "y"))
R3 = Ring(("x", "y", "z"))
x, y, z = R3.gens()


def twists(res):
    return [sorted(step.source) for step in res.steps]


def _syzygy_dim_by_linear_algebra(gens, d):
    """dim of {(a_i) : a_i of degree d - deg g_i, sum a_i g_i = 0} via a coefficient matrix."""
    ring = gens[0].ring
    cols = []
    for g in gens:
        for m in ring.monomials_of_degree(d - g.degree()):
            cols.append(g.mul_term(m, 1))
    target = ring.monomials_of_degree(d)
    matrix = [[c.terms.get(t, 0) for c in cols] for t in target]
    return len(cols) - rank(matrix)


class TestSyzygies:
    def test_koszul_pair(self):
        cols = syzygies([x * y, x * z])
        assert len(cols) == 1
        a, b = cols[0]
        assert a * (x * y) + b * (x * z) == R3.zero()
        assert {a.degree(), b.degree()} == {1}

    def test_free(self):
        assert syzygies([x]) == []

    def test_three_products(self):
        gens = [x * y, x * z, y * z]
        cols = syzygies(gens)
        assert len(cols) == 2
        for col in cols:
            assert sum((c * g for c, g in zip(col, gens)), R3.zero()) == R3.zero()
            assert all(c.degree() == 1 for c in col if c)
        assert _syzygy_dim_by_linear_algebra(gens, 3) == 2

    def test_counts_against_linear_algebra(self):
        gens = [x ** 2, x * y, y ** 2, x * z]
        cols = syzygies(gens)
        low = min(min(c.degree() + g.degree() for c, g in zip(col, gens) if c) for col in cols)
        assert len(cols) == _syzygy_dim_by_linear_algebra(gens, low)


class TestFreeResolution:
    def test_principal(self):
        res = free_resolution(Ideal(R3, [x]))
        assert twists(res) == [[1]]

    def test_square_of_maximal(self):
        res = minimize_resolution(free_resolution(Ideal.maximal(R2) ** 2))
        assert twists(res) == [[2, 2, 2], [3, 3]]
        assert res.is_complex()

    def test_star_triangle(self):
        res = free_resolution(Ideal(R3, [x * y, x * z, y * z]))
        assert res.is_complex()
        assert minimize(res).data == {(0, 2): 3, (1, 3): 2}

    def test_length_bounded_and_exact(self):
        for A in catalog.decomposition_catalog(5):
            for a in range(1, A.n + 1):
                res = free_resolution(fold_ideal(A, a))
                assert res.length <= A.k
                assert res.is_complex()
                assert all(s.degrees_consistent() for s in res.steps)


class TestMinimize:
    def test_already_minimal(self):
        res = minimize_resolution(free_resolution(Ideal(R3, [x * y, x * z, y * z])))
        assert minimize(res) == res.betti_table()

    def test_padded_identity_removed(self):
        X, Y = R2.gens()
        one, zero = R2.one(), R2.zero()
        padded = Resolution(R2, [
            ResolutionStep([1, 2], [0], [[X, zero]]),
            ResolutionStep([2], [1, 2], [[zero], [one]]),
        ])
        assert padded.is_complex()
        out = minimize_resolution(padded)
        assert out.betti_table().data == {(0, 1): 1}
        assert len(out.steps) == 1

    def test_idempotent(self):
        for name in ("generic4", "near_pencil4", "double_generic4"):
            A = catalog.get(name)
            for a in range(1, A.n + 1):
                once = minimize_resolution(free_resolution(fold_ideal(A, a)))
                assert minimize(once) == once.betti_table()


class TestRegularity:
    def test_boolean_i2(self):
        I = fold_ideal(catalog.get("boolean3"), 2)
        assert regularity(I) == 1 and is_linear(I)

    def test_mixed_degrees(self):
        with pytest.raises(NotEquigenerated):
            is_linear(Ideal(R2, [R2.parse("x^2"), R2.parse("y^3")]))

    def test_cube_of_maximal(self):
        I = Ideal.maximal(R2) ** 3
        table = betti_table(I)
        assert table.data == {(0, 3): 4, (1, 4): 3}
        assert is_linear(I) and regularity(I) == 2

    def test_non_linear_example(self):
        X, Y = R2.gens()
        I = Ideal(R2, [X ** 2, Y ** 2])
        assert betti_table(I).data == {(0, 2): 2, (1, 4): 1}
        assert not is_linear(I) and regularity(I) == 2

    def test_euler_characteristic(self):
        for A in catalog.decomposition_catalog(5):
            for a in range(1, A.n + 1):
                I = fold_ideal(A, a)
                table = betti_table(I)
                assert table.hilbert_series_check(A.ring, I, table.regularity() + 2)

    def test_diagram_layout(self):
        text = betti_table(fold_ideal(catalog.get("generic4"), 2)).diagram()
        assert text.splitlines()[1].split() == ["total:", "6", "8", "3"]
        assert text.splitlines()[2].split() == ["2:", "6", "8", "3"]

    def test_unit_ideal_has_empty_table(self):
        assert betti_table(Ideal.unit(R2)) == BettiTable({})
