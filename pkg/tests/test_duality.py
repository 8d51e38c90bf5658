import itertools

import pytest
from hypothesis import given, settings

from ribbonpoly.arrows import RibbonError, face_count, invariants, parse, serialize
from ribbonpoly.canonical import canonical_key, canonical_map_key, equivalent, graphs_up_to
from ribbonpoly.duality import (
    GROUP_ELEMENTS,
    apply_gamma,
    apply_word,
    contract,
    ge_inverse,
    ge_mul,
    geometric_dual,
    normal_form,
    orbit,
    parse_gamma,
    partial_dual,
    twist,
)

from conftest import presentations


class TestGroup:
    def test_normal_forms(self):
        assert normal_form("tt") == "1"
        assert normal_form("") == "1"
        assert normal_form("1") == "1"
        assert normal_form("tdt") == "tdt"
        assert normal_form("dtd") == "tdt"
        assert normal_form("tdtdtd") == "1"

    def test_six_elements(self):
        forms = {normal_form("".join(w)) for n in range(5)
                 for w in itertools.product("td", repeat=n)}
        assert forms == set(GROUP_ELEMENTS)

    def test_multiplication_table_closed(self):
        for a in GROUP_ELEMENTS:
            for b in GROUP_ELEMENTS:
                assert ge_mul(a, b) in GROUP_ELEMENTS
        for a in GROUP_ELEMENTS:
            assert ge_mul(a, ge_inverse(a)) == "1"

    def test_relations(self):
        assert ge_mul("t", "t") == "1"
        assert ge_mul("d", "d") == "1"
        td = ge_mul("t", "d")
        assert ge_mul(td, ge_mul(td, td)) == "1"


class TestEdgeOperations:
    def test_twist_definition(self, loop, twisted_loop):
        assert equivalent(twist(loop, "e"), twisted_loop)
        assert equivalent(twist(twist(loop, "e"), "e"), loop)

    def test_twist_bridge_keeps_one_face(self, bridge):
        assert face_count(twist(bridge, "e")) == 1

    def test_partial_dual_loop_bridge(self, loop, bridge, twisted_loop):
        assert equivalent(partial_dual(loop, "e"), bridge)
        assert equivalent(partial_dual(bridge, "e"), loop)
        assert equivalent(partial_dual(twisted_loop, "e"), twisted_loop)

    def test_partial_dual_vertex_counts(self, loop, theta):
        from ribbonpoly.arrows import spanning_subgraph
        for g in (loop, theta):
            labels = g.labels()
            # dualizing everything swaps in the face count
            assert invariants(apply_gamma(g, {l: "d" for l in labels})).v == face_count(g)
            # one edge at a time: the spanning-subgraph face count
            for e in labels:
                assert invariants(partial_dual(g, e)).v == \
                    face_count(spanning_subgraph(g, [e]))

    def test_unknown_label(self, loop):
        for op in (twist, partial_dual, contract):
            with pytest.raises(RibbonError):
                op(loop, "zz")

    @given(presentations(max_edges=2))
    @settings(max_examples=40)
    def test_involutions(self, ap):
        for e in ap.labels():
            assert equivalent(apply_word(ap, e, "tt"), ap)
            assert equivalent(apply_word(ap, e, "dd"), ap)
            assert equivalent(apply_word(ap, e, "tdtdtd"), ap)

    @given(presentations(max_edges=3))
    @settings(max_examples=30)
    def test_distinct_edges_commute(self, ap):
        labels = ap.labels()
        if len(labels) < 2:
            return
        e, f = labels[0], labels[1]
        for a in "td":
            for b in "td":
                lhs = apply_word(apply_word(ap, e, a), f, b)
                rhs = apply_word(apply_word(ap, f, b), e, a)
                assert equivalent(lhs, rhs)

    @given(presentations(max_edges=2))
    @settings(max_examples=30)
    def test_twists_preserve_the_map(self, ap):
        for e in ap.labels():
            assert canonical_map_key(twist(ap, e)) == canonical_map_key(ap)
            assert twist(ap, e).edge_count() == ap.edge_count()


class TestAssignments:
    def test_identity_assignment(self, theta):
        assert equivalent(apply_gamma(theta, {l: "1" for l in theta.labels()}), theta)

    def test_composition_convention(self, loop):
        # the word dt acts as: twist first, then dual
        lhs = apply_gamma(loop, {"e": "dt"})
        rhs = partial_dual(twist(loop, "e"), "e")
        assert equivalent(lhs, rhs)

    def test_order_independence(self, theta):
        import random
        rng = random.Random(1)
        for _ in range(10):
            gamma = {l: rng.choice(GROUP_ELEMENTS) for l in theta.labels()}
            out = apply_gamma(theta, gamma)
            shuffled = dict(reversed(list(gamma.items())))
            assert equivalent(out, apply_gamma(theta, shuffled))

    def test_unknown_label(self, loop):
        with pytest.raises(RibbonError):
            apply_gamma(loop, {"f": "t"})

    def test_parse_gamma(self):
        gamma = parse_gamma("tau(e1,e2),delta(e3),taudelta(e4)")
        assert gamma == {"e1": "t", "e2": "t", "e3": "d", "e4": "td"}
        assert parse_gamma("td(e1)") == {"e1": "td"}
        assert parse_gamma("") == {}
        with pytest.raises(RibbonError):
            parse_gamma("bogus(e1)")


class TestGeometricDual:
    def test_dual_of_theta_is_triangle(self, theta):
        d = geometric_dual(theta)
        inv = invariants(d)
        assert (inv.v, inv.e, inv.f, inv.euler_genus) == (3, 3, 2, 0)

    def test_involution_and_exchange(self):
        for g in graphs_up_to(2):
            gi = invariants(g)
            d = geometric_dual(g)
            di = invariants(d)
            assert (di.v, di.f) == (gi.f, gi.v)
            assert di.euler_genus == gi.euler_genus
            assert equivalent(geometric_dual(d), g)


class TestContraction:
    def test_bridge(self, bridge):
        assert serialize(contract(bridge, "e")) == "()"

    def test_orientable_loop_creates_vertex(self, loop):
        assert serialize(contract(loop, "e")) == "()()"

    def test_twisted_loop(self, twisted_loop):
        assert serialize(contract(twisted_loop, "e")) == "()"

    @given(presentations(max_edges=3))
    @settings(max_examples=40)
    def test_contraction_preserves_faces(self, ap):
        for e in ap.labels():
            assert face_count(contract(ap, e)) == face_count(ap)


class TestOrbits:
    def test_full_orbit_of_loop(self, loop):
        members = orbit(loop, "full")
        assert len(members) == 3
        assert {canonical_key(g) for g in members} == \
            {canonical_key(g) for g in graphs_up_to(1)}

    def test_delta_orbit_of_loop(self, loop, bridge):
        members = orbit(loop, "delta")
        assert len(members) == 2
        keys = {canonical_key(g) for g in members}
        assert canonical_key(bridge) in keys and canonical_key(loop) in keys

    def test_tau_orbit(self, loop, twisted_loop):
        keys = {canonical_key(g) for g in orbit(loop, "tau")}
        assert keys == {canonical_key(loop), canonical_key(twisted_loop)}

    def test_cyclic_subgroup_orbits_of_one_edge_graphs(self, loop, bridge, twisted_loop):
        # the order-3 element sweeps out everything; its conjugate fixes the loop
        # and swaps the bridge with the twisted loop
        assert len(orbit(loop, "taudelta")) == 3
        assert len(orbit(loop, ["td"])) == 3
        assert [serialize(g) for g in orbit(loop, "deltataudelta")] == ["(e1+ e1+)"]
        keys = {canonical_key(g) for g in orbit(bridge, "deltataudelta")}
        assert keys == {canonical_key(bridge), canonical_key(twisted_loop)}

    def test_star_fixed_by_all_twists(self):
        star = parse("(s1+)(s2+)(s3+)(s1+ s2+ s3+)")
        twisted = apply_gamma(star, {l: "t" for l in star.labels()})
        assert equivalent(twisted, star)

    def test_nontrivial_twisted_duals_exist_beyond_one_edge(self):
        # some two-edge graph is not a twisted dual of some other two-edge graph
        two = graphs_up_to(2)[3:]
        orb = {canonical_key(h) for h in orbit(two[0], "full")}
        assert any(canonical_key(g) not in orb for g in two)

    def test_bound(self, theta):
        with pytest.raises(RibbonError):
            orbit(theta, "full", max_edges=2)

    def test_bad_subgroup(self, loop):
        with pytest.raises(RibbonError):
            orbit(loop, "nope")
