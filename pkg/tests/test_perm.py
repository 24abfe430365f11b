"""Permutation and group engine tests against closure-based oracles."""

import pytest

from nilbound.constructions import iterated_wreath_sylow, product_action
from nilbound.perm import (
    GroupError,
    GuardExceeded,
    NotNilpotentError,
    PermGroup,
    Permutation,
    center,
    commutator,
    commutator_subgroup,
    lower_central_series,
    nilpotency_class,
)

from conftest import NAIVE_CLOSURE_LIMIT, cyclic, klein_four, naive_closure, sym3


class TestPermutation:
    def test_identity_compose(self):
        e = Permutation.identity(4)
        assert e * e == e

    def test_involution_squares_to_identity(self):
        t = Permutation.from_cycles(2, (0, 1))
        assert (t * t).is_identity()

    def test_three_cycle_square(self):
        # hand evaluation: images of (0 1 2) are (1, 2, 0); composing with
        # itself sends 0->2, 1->0, 2->1
        a = Permutation.from_cycles(3, (0, 1, 2))
        assert (a * a).images == (2, 0, 1)
        assert a * a == Permutation.from_cycles(3, (0, 2, 1))

    def test_right_action_order(self):
        # a then b, not b then a
        a = Permutation.from_cycles(3, (0, 1))
        b = Permutation.from_cycles(3, (1, 2))
        assert (a * b).images == (2, 0, 1)

    def test_compose_inverse(self):
        p = Permutation((2, 0, 3, 1))
        assert (p * p.inverse()).is_identity()
        assert (p.inverse() * p).is_identity()

    def test_degree_mismatch(self):
        with pytest.raises(ValueError, match="degree mismatch"):
            Permutation.identity(3) * Permutation.identity(4)

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))
        with pytest.raises(ValueError):
            Permutation((0, 1, 3))

    def test_pow(self):
        c = Permutation.from_cycles(5, (0, 1, 2, 3, 4))
        assert c**5 == Permutation.identity(5)
        assert c**-1 == c.inverse()
        assert c**7 == c * c

    def test_commutator_convention(self):
        # [x, y] = x^-1 y^-1 x y
        x = Permutation.from_cycles(4, (0, 1, 2, 3))
        y = Permutation.from_cycles(4, (0, 2))
        assert commutator(x, y) == x.inverse() * y.inverse() * x * y


class TestGroupBasics:
    def test_empty_generating_set(self):
        G = PermGroup(4)
        assert G.order() == 1
        assert G.is_trivial()
        assert Permutation.identity(4) in G

    def test_cyclic_order(self):
        assert cyclic(4).order() == 4

    def test_dihedral_from_generators(self):
        gens = [Permutation.from_cycles(4, (0, 1, 2, 3)), Permutation.from_cycles(4, (0, 2))]
        G = PermGroup(4, gens)
        assert G.order() == len(naive_closure(4, gens)) == 8

    def test_generator_degree_mismatch(self):
        with pytest.raises(ValueError):
            PermGroup(4, [Permutation.identity(3)])

    def test_wreath_tower_order(self):
        # exponent 1 + 2 + 4 of the degree-8 tower, checked by closure
        W = iterated_wreath_sylow(2, 3)
        assert W.order() == 128
        assert len(naive_closure(8, W.generators)) == 128

    def test_membership_matches_closure(self):
        G = iterated_wreath_sylow(2, 2)
        closure = naive_closure(4, G.generators)
        for images in closure:
            assert Permutation(images) in G
        outside = Permutation.from_cycles(4, (0, 1, 2))  # odd order, not in a 2-group
        assert outside not in G

    def test_identity_and_generators_are_members(self, corpus):
        for _, G in corpus:
            assert G.identity in G
            for g in G.generators:
                assert g in G


class TestOrbitsAndStabilizers:
    def test_trivial_group_orbit(self):
        assert PermGroup(4).orbit(0) == [0]

    def test_full_cycle_orbit(self):
        assert cyclic(4).orbit(2) == [0, 1, 2, 3]

    def test_partial_orbit(self):
        G = PermGroup(4, [Permutation.from_cycles(4, (0, 1), (2, 3))])
        assert G.orbit(0) == [0, 1]

    def test_point_out_of_range(self):
        with pytest.raises(ValueError):
            cyclic(4).orbit(4)
        with pytest.raises(ValueError):
            cyclic(4).point_stabilizer(-1)

    def test_regular_group_has_trivial_stabilizer(self):
        for G in (cyclic(5), klein_four()):
            for point in range(G.degree):
                assert G.point_stabilizer(point).order() == 1

    def test_dihedral_stabilizer(self):
        # order 8, orbit 4, so the stabilizer has order 2
        G = iterated_wreath_sylow(2, 2)
        assert G.point_stabilizer(0).order() == 2

    def test_product_with_fixed_point(self):
        G = iterated_wreath_sylow(2, 2)
        P = product_action(G, PermGroup(1))
        assert P.degree == G.degree
        assert P.point_stabilizer(0).order() == G.point_stabilizer(0).order()

    def test_transitive_regular_flags(self):
        assert cyclic(6).is_transitive() and cyclic(6).is_regular()
        assert not PermGroup(3).is_transitive()
        D4 = iterated_wreath_sylow(2, 2)
        assert D4.is_transitive() and not D4.is_regular()


class TestNormalClosureAndCommutators:
    def test_empty_seeds(self):
        G = iterated_wreath_sylow(2, 2)
        assert G.normal_closure([]).order() == 1

    def test_full_seeds(self):
        G = iterated_wreath_sylow(2, 2)
        assert G.normal_closure(list(G.generators)).order() == G.order()

    def test_dihedral_center_seed(self):
        # the square of the 4-cycle generates a normal subgroup of order 2
        r = Permutation.from_cycles(4, (0, 1, 2, 3))
        G = PermGroup(4, [r, Permutation.from_cycles(4, (0, 2))])
        N = G.normal_closure([r * r])
        assert N.order() == 2
        # oracle: closed under conjugation by everything
        for images in naive_closure(4, G.generators):
            g = Permutation(images)
            assert (r * r).conjugate(g) in N

    def test_seed_not_member(self):
        G = cyclic(4)
        with pytest.raises(GroupError):
            G.normal_closure([Permutation.from_cycles(4, (0, 1))])

    def test_commutator_trivial_cases(self):
        G = iterated_wreath_sylow(2, 2)
        triv = PermGroup(4)
        assert commutator_subgroup(G, triv, G).order() == 1
        A = cyclic(4)
        assert commutator_subgroup(A, A, A).order() == 1

    def test_commutator_membership_precondition(self):
        G = cyclic(4)
        H = PermGroup(4, [Permutation.from_cycles(4, (0, 1))])
        with pytest.raises(GroupError):
            commutator_subgroup(G, H, G)

    def test_dihedral_derived_subgroup_brute_force(self):
        # oracle: commutators of all element pairs of the order-8 group
        G = iterated_wreath_sylow(2, 2)
        elements = [Permutation(i) for i in naive_closure(4, G.generators)]
        pair_comms = {commutator(a, b).images for a in elements for b in elements}
        oracle = naive_closure(4, [Permutation(i) for i in pair_comms])
        derived = commutator_subgroup(G, G, G)
        assert derived.order() == len(oracle) == 2
        for images in oracle:
            assert Permutation(images) in derived


class TestCentralSeries:
    def test_abelian_series(self):
        G = cyclic(6)
        series = lower_central_series(G)
        assert series.order_profile() == [6, 1]
        assert series.nilpotency_class == 1

    def test_dihedral_series(self):
        series = lower_central_series(iterated_wreath_sylow(2, 2))
        assert series.order_profile() == [8, 2, 1]
        assert series.nilpotency_class == 2

    def test_degree8_tower_class(self):
        series = lower_central_series(iterated_wreath_sylow(2, 3))
        assert series.nilpotency_class == 4

    def test_not_nilpotent_marker(self):
        series = lower_central_series(sym3())
        assert series.nilpotency_class is None
        assert not series.is_nilpotent
        assert series.order_profile()[-1] > 1
        with pytest.raises(NotNilpotentError, match="not nilpotent"):
            nilpotency_class(sym3())

    def test_class_values(self):
        assert nilpotency_class(PermGroup(3)) == 0
        assert nilpotency_class(cyclic(5)) == 1

    def test_series_containment(self, corpus):
        for _, G in corpus:
            series = lower_central_series(G)
            for prev, nxt in zip(series.terms, series.terms[1:]):
                assert prev.contains_group(nxt)
            if series.nilpotency_class is not None:
                assert series.terms[-1].order() == 1
                nontrivial = sum(1 for t in series.terms if t.order() > 1)
                assert series.nilpotency_class == nontrivial


class TestCenter:
    def test_abelian_center_is_whole_group(self):
        G = klein_four()
        assert center(G).order() == G.order()

    def test_dihedral_center(self):
        assert center(iterated_wreath_sylow(2, 2)).order() == 2

    def test_affine_center_equals_second_term(self):
        from nilbound.constructions import affine_unitriangular

        G = affine_unitriangular(2, 2, 1)
        Z = center(G)
        g2 = lower_central_series(G).terms[1]
        assert Z.order() == g2.order() == 2
        assert Z.contains_group(g2) and g2.contains_group(Z)

    def test_center_guard(self):
        big = iterated_wreath_sylow(2, 3)
        with pytest.raises(GuardExceeded, match="too large for center scan"):
            center(big, limit=100)

    def test_center_elements_commute_with_everything(self, corpus):
        for _, G in corpus:
            if G.order() > NAIVE_CLOSURE_LIMIT:
                continue
            elements = [Permutation(i) for i in naive_closure(G.degree, G.generators)]
            Z = center(G)
            central = {z.images for z in Z.elements()}
            for z_images in central:
                z = Permutation(z_images)
                assert all(z * g == g * z for g in elements)
            # and conversely, the scan found everything central
            for g in elements:
                if all(g * h == h * g for h in elements):
                    assert g.images in central


class TestJsonInterchange:
    def test_round_trip(self):
        G = iterated_wreath_sylow(2, 2)
        data = G.to_json()
        H = PermGroup.from_json(data)
        assert H.degree == G.degree
        assert H.generators == G.generators
        assert H.order() == G.order()

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError, match=r"generators\[0\]"):
            PermGroup.from_json({"degree": 3, "generators": [[0, 0, 1]]})

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError, match=r"generators\[1\]"):
            PermGroup.from_json({"degree": 3, "generators": [[0, 1, 2], [1, 0]]})


class TestEngineInvariants:
    def test_order_oracle(self, corpus):
        for name, G in corpus:
            if G.order() > NAIVE_CLOSURE_LIMIT:
                continue
            assert G.order() == len(naive_closure(G.degree, G.generators)), name

    def test_orbit_stabilizer(self, corpus):
        for name, G in corpus:
            for point in range(G.degree):
                stab = G.point_stabilizer(point)
                assert G.order() == len(G.orbit(point)) * stab.order(), (name, point)

    def test_elements_enumeration_matches_closure(self, corpus):
        for name, G in corpus:
            if G.order() > 1000:
                continue
            via_chain = {g.images for g in G.elements()}
            assert via_chain == naive_closure(G.degree, G.generators), name

    def test_abelian_transitive_implies_regular(self, corpus):
        for name, G in corpus:
            if G.is_abelian() and G.is_transitive():
                assert G.is_regular(), name

    def test_central_elements_of_transitive_groups_fix_nothing(self, corpus):
        # a nonidentity element commuting with a transitive group moves
        # every point
        for name, G in corpus:
            if not G.is_transitive() or G.order() > NAIVE_CLOSURE_LIMIT:
                continue
            for z in center(G).elements():
                if z.is_identity():
                    continue
                assert all(z.images[x] != x for x in range(G.degree)), name

    def test_index_intersection_bound(self):
        # subgroups of common index k intersect in index at most k^l
        K = iterated_wreath_sylow(2, 3)
        stabs = [K.point_stabilizer(point) for point in (0, 3, 5)]
        k = K.order() // stabs[0].order()
        assert all(K.order() // s.order() == k for s in stabs)
        common = set(g.images for g in stabs[0].elements())
        for s in stabs[1:]:
            common &= set(g.images for g in s.elements())
        index = K.order() // len(common)
        assert index <= k ** len(stabs)
