import json
from itertools import combinations
from math import comb

import pytest

from linprod import catalog
from linprod.arrangement import Arrangement, canonicalize, parse_arrangement
from linprod.fold import standard_generators
from linprod.groebner import Ideal
from linprod.poly import ParseError, Ring

R2 = Ring(("x", "y"))
R3 = Ring(("x", "y", "z"))


def arr(ring, *forms):
    return Arrangement.from_strings(ring, list(forms))


def prime_strings(A):
    return sorted(P.label(A) for P in A.gamma())


@pytest.mark.parametrize("raw, expected", [((0, -2, -4), (0, 1, 2)),
                                           (("1/2", "1/3", 0), (3, 2, 0)),
                                           ((5, 0, 0), (1, 0, 0))])
def test_canonicalize(raw, expected):
    assert canonicalize(raw) == expected


def test_canonicalize_rejects_zero():
    with pytest.raises(ValueError):
        canonicalize((0, 0))


def test_rank():
    assert arr(R2, "x", "y", "x+y").rank == 2
    assert arr(R3, "x", "y", "z", "x+y+z").rank == 3
    double = arr(R2, "x", "x")
    assert double.rank == 1 and double.mults == (2,)


def test_gamma_pencil():
    assert prime_strings(arr(R2, "x", "y", "x+y")) == sorted(["<x>", "<y>", "<x + y>", "<x, y>"])


def test_gamma_boolean():
    got = prime_strings(arr(R3, "x", "y", "z"))
    assert len(got) == 7 and "<x, y, z>" in got and "<x, z>" in got


def test_gamma_single():
    assert prime_strings(arr(R2, "x")) == ["<x>"]


def test_gamma_closed_under_intersection():
    for A in catalog.decomposition_catalog(6):
        members = {P.members for P in A.gamma()}
        for P, Q in combinations(A.gamma(), 2):
            meet = P.members & Q.members
            if meet:
                # the span of the common members is again a listed prime
                assert A.closure_of(sorted(meet)) in members


def test_closure_nu():
    A = arr(R3, "x", "x", "y")
    P = A.prime_of([0])
    assert A.nu(P) == 2
    B = arr(R2, "x", "y", "x+y")
    assert B.closure_nu(Ideal.maximal(R2))[1] == 3
    C = arr(R3, "x", "y", "z", "x+y")
    x, y, z = R3.gens()
    assert C.closure_nu(Ideal(R3, [x, y]))[1] == 3


def test_prime_predicate_examples():
    A = arr(R3, "x", "y", "z")
    x, y, z = R3.gens()
    assert A.lemma21_predicate(Ideal(R3, [x, y]), 2)
    assert not A.lemma21_predicate(Ideal(R3, [x]), 2)
    for P in A.gamma():
        assert A.lemma21_predicate(P, A.n)


def test_prime_predicate_matches_membership():
    for A in catalog.decomposition_catalog(5):
        for P in A.gamma():
            ideal = P.ideal(A.ring)
            for a in range(1, A.n + 1):
                direct = all(ideal.contains(g) for g in standard_generators(A, a))
                assert A.lemma21_predicate(P, a) == direct, (A.label(), P.label(A), a)


def test_circuits():
    circ = arr(R2, "x", "y", "x+y").circuits(3)
    assert [(c.indices, c.coeffs) for c in circ] == [((0, 1, 2), (1, 1, -1))]
    g4 = catalog.get("generic4")
    assert [(c.indices, c.coeffs) for c in g4.circuits()] == [((0, 1, 2, 3), (1, 1, 1, -1))]
    assert not g4.circuits(3)
    assert len(g4.dependent_quadruples()) == 1


def test_circuit_dependencies_vanish():
    for name in catalog.names():
        A = catalog.get(name)
        for c in A.circuits() + A.dependent_quadruples():
            total = sum((k * A.form(i) for i, k in zip(c.indices, c.coeffs)), A.ring.zero())
            assert not total


def test_singular_points():
    pts = catalog.get("generic4").singular_points()
    assert len(pts) == 6 and {p.multiplicity for p in pts} == {2}
    near = catalog.get("near_pencil4").singular_points()
    triple = [p for p in near if p.multiplicity == 3]
    assert len(triple) == 1 and triple[0].point == (0, 0, 1)
    assert sorted(p.multiplicity for p in near) == [2, 2, 2, 3]
    with pytest.raises(ValueError):
        arr(R3, "x", "y").singular_points()


def test_singular_pairs_count():
    for name in ("generic4", "near_pencil4", "generic5", "pencil_plus_line5", "two_triples5"):
        A = catalog.get(name)
        assert sum(comb(p.multiplicity, 2) for p in A.singular_points()) == comb(A.s, 2)


def test_meets_properly():
    assert catalog.get("generic4").meets_properly()
    assert not catalog.get("near_pencil4").meets_properly()
    assert arr(R3, "x+y").meets_properly()


def test_parse_merges_proportional():
    A = parse_arrangement('{"vars":["x","y"],"forms":[{"coeffs":[1,0]},{"coeffs":[2,0]}]}')
    assert A.support == ((1, 0),) and A.mults == (2,)
    assert A.warnings


def test_parse_errors():
    with pytest.raises(ParseError) as err:
        parse_arrangement('{"vars": ["x"],\n "forms": [}')
    assert err.value.line == 2
    with pytest.raises(ValueError):
        parse_arrangement({"vars": ["x", "y"], "forms": [{"coeffs": [1, 0, 0]}]})
    with pytest.raises(ValueError):
        parse_arrangement({"vars": ["x", "y"], "forms": [{"coeffs": [0, 0]}]})


def test_json_round_trip(tmp_path):
    A = catalog.get("double_near_pencil4")
    path = tmp_path / "a.json"
    path.write_text(json.dumps(A.to_json()))
    B = parse_arrangement(str(path))
    assert B.support == A.support and B.mults == A.mults


def test_catalog_names():
    assert catalog.get("near_pencil4").support == ((1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1))
    with pytest.raises(KeyError):
        catalog.get("nope")
