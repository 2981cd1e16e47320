from math import comb

import pytest

from quivertt.fields import QQ, PrimeField
from quivertt.quiver import Arrow, Path, Quiver, Relation
from quivertt.path_algebra import (PathAlgebra, build_path_algebra,
                                   compatibility, is_tensor_relations,
                                   module_hom_space)
from quivertt.randgen import random_tensor_quiver

from conftest import load_fixture


def kronecker(n_arrows):
    q = Quiver(("1", "2"),
               tuple(Arrow(f"x{i}", "1", "2") for i in range(n_arrows)))
    return q


class TestBasis:
    def test_kronecker2_dimension(self):
        spec = load_fixture("kronecker2")
        alg = build_path_algebra(spec.quiver, spec.relations)
        assert alg.dim == 4
        assert alg.dim_pair("1", "2") == 2

    def test_beilinson_dimensions_match_closed_form(self):
        # dim e_i (kS_m/R) e_j is the number of degree-(j-i) monomials in
        # m+1 commuting variables: C(m + j - i, j - i)
        for m in (1, 2, 3):
            spec = load_fixture(f"beilinson{m}")
            alg = build_path_algebra(spec.quiver, spec.relations)
            total = 0
            for i in range(1, m + 2):
                for j in range(i, m + 2):
                    d = j - i
                    expected = comb(m + d, d)
                    assert alg.dim_pair(str(i), str(j)) == expected
                    total += expected
            assert alg.dim == total

    def test_beilinson2_known_values(self):
        spec = load_fixture("beilinson2")
        alg = build_path_algebra(spec.quiver, spec.relations)
        assert alg.dim == 15
        assert alg.dim_pair("1", "3") == 6

    def test_basis_is_greedy_deterministic(self):
        spec = load_fixture("kronecker3")
        alg = build_path_algebra(spec.quiver, spec.relations)
        assert [p.word() for p in alg.basis] == ["e_1", "x0", "x1", "x2", "e_2"]

    def test_relations_have_zero_normal_form(self, fixture_spec):
        alg = build_path_algebra(fixture_spec.quiver, fixture_spec.relations,
                                 fixture_spec.field)
        for gen in fixture_spec.relations:
            assert alg.nf_terms(gen.terms) == {}

    def test_prime_field_quotient(self):
        spec = load_fixture("beilinson2")
        f5 = PrimeField(5)
        alg = PathAlgebra(spec.quiver, tuple(
            Relation(r.source, r.target,
                     tuple((f5(int(c)), p) for c, p in r.terms))
            for r in spec.relations), f5)
        assert alg.dim == 15


class TestProduct:
    def test_unit_is_identity(self, fixture_spec):
        alg = build_path_algebra(fixture_spec.quiver, fixture_spec.relations)
        unit = alg.unit()
        for i in range(alg.dim):
            x = {i: QQ.one}
            assert alg.product(unit, x) == x
            assert alg.product(x, unit) == x

    def test_associativity_on_all_basis_triples(self):
        spec = load_fixture("square")
        alg = build_path_algebra(spec.quiver, spec.relations)
        elems = [{i: QQ.one} for i in range(alg.dim)]
        for a in elems:
            for b in elems:
                ab = alg.product(a, b)
                for c in elems:
                    assert alg.product(ab, c) == \
                        alg.product(a, alg.product(b, c))

    def test_orthogonal_idempotents(self):
        spec = load_fixture("chain4")
        alg = build_path_algebra(spec.quiver, spec.relations)
        for v in spec.quiver.vertices:
            for w in spec.quiver.vertices:
                prod = alg.product(alg.idempotent(v), alg.idempotent(w))
                assert prod == (alg.idempotent(v) if v == w else {})

    def test_product_respects_relation(self):
        # in kQ/(ab - cd) the two composites coincide
        spec = load_fixture("square")
        alg = build_path_algebra(spec.quiver, spec.relations)
        q = spec.quiver
        ab = alg.nf_path(Path.from_arrows([q.arrow("a"), q.arrow("b")]))
        cd = alg.nf_path(Path.from_arrows([q.arrow("c"), q.arrow("d")]))
        assert ab == cd and ab != {}


class TestTensorCriterion:
    def test_fixture_relations_pass(self, fixture_spec):
        alg = build_path_algebra(fixture_spec.quiver, fixture_spec.relations)
        assert is_tensor_relations(alg).ok

    def test_single_path_fails_unit(self):
        spec = load_fixture("chain4")
        q = spec.quiver
        p = Path.from_arrows([q.arrow("a"), q.arrow("b")])
        alg = build_path_algebra(q, (Relation("1", "3", ((QQ.one, p),)),))
        check = is_tensor_relations(alg)
        assert not check.ok and check.failed_test == "unit"

    def test_alternating_sum_fails_diagonal(self):
        # x0 - x1 + x2 - x3 on the 4-arrow Kronecker quiver: coefficient
        # sum vanishes but the diagonal tensor does not
        q = kronecker(4)
        terms = tuple((QQ((-1) ** i), Path.from_arrows([q.arrow(f"x{i}")]))
                      for i in range(4))
        alg = build_path_algebra(q, (Relation("1", "2", terms),))
        check = is_tensor_relations(alg)
        assert not check.ok and check.failed_test == "diagonal"

    def test_commutativity_difference_passes(self):
        q = kronecker(2)
        terms = ((QQ.one, Path.from_arrows([q.arrow("x0")])),
                 (-QQ.one, Path.from_arrows([q.arrow("x1")])))
        alg = build_path_algebra(q, (Relation("1", "2", terms),))
        assert is_tensor_relations(alg).ok


class TestCompatibility:
    def test_square_example(self):
        spec = load_fixture("square")
        result = compatibility(spec.quiver, spec.relations, ["1", "2", "4"])
        assert not result.compatible
        assert len(result.r_bar) == 1
        assert result.r_bar[0].pretty() == "a*b"
        assert result.witness.pretty() == "a*b"
        assert result.r_cap == ()

    def test_suffix_subquivers_always_compatible(self, fixture_spec):
        from quivertt.quiver import admissible_order
        order = admissible_order(fixture_spec.quiver)
        for start in range(len(order)):
            result = compatibility(fixture_spec.quiver,
                                   fixture_spec.relations, order[start:])
            assert result.compatible

    def test_one_vertex_always_compatible(self, fixture_spec):
        for v in fixture_spec.quiver.vertices:
            assert compatibility(fixture_spec.quiver,
                                 fixture_spec.relations, [v]).compatible

    def test_full_quiver_trivially_compatible(self, fixture_spec):
        result = compatibility(fixture_spec.quiver, fixture_spec.relations,
                               fixture_spec.quiver.vertices)
        assert result.compatible and result.r_bar == ()


class TestModuleHomSpace:
    def test_dimension_matches_pair_component(self, fixture_spec):
        alg = build_path_algebra(fixture_spec.quiver, fixture_spec.relations)
        for n in fixture_spec.quiver.vertices:
            for m in fixture_spec.quiver.vertices:
                maps = module_hom_space(alg, n, m)
                assert len(maps) == alg.dim_pair(n, m)

    def test_maps_commute_with_right_action(self, rng):
        quiver, relations = random_tensor_quiver(rng)
        alg = build_path_algebra(quiver, relations)
        for n in quiver.vertices:
            for m in quiver.vertices:
                for f in module_hom_space(alg, n, m):
                    for j in range(alg.dim):
                        lhs = f @ alg.right_mult_on_module(m, j)
                        rhs = alg.right_mult_on_module(n, j) @ f
                        assert lhs == rhs

    def test_endomorphisms_of_projective_contain_identity(self):
        spec = load_fixture("beilinson2")
        alg = build_path_algebra(spec.quiver, spec.relations)
        maps = module_hom_space(alg, "1", "1")
        size = len(alg.module_basis("1"))
        from quivertt.linalg import Matrix
        assert Matrix.identity(size) in maps
