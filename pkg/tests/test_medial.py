import itertools
import random

import pytest
from hypothesis import given, settings

from ribbonpoly.arrows import RibbonError, face_count, invariants, parse, serialize, underlying_abstract
from ribbonpoly.canonical import abstract_iso, canonical_key, canonical_map_key, equivalent, graphs_up_to
from ribbonpoly.duality import GROUP_ELEMENTS, apply_gamma, geometric_dual, orbit_keys
from ribbonpoly.medial import (
    ALL_MARKED_STATES,
    BLACK,
    CROSS,
    WHITE,
    MarkedState,
    all_cycle_family_graphs,
    apply_state_action,
    count_admissible_valuations,
    cycle_family_graph,
    element_to_state,
    is_checkerboard_colourable,
    medial,
    state_components,
    state_components_traced,
    state_to_element,
    tait_black,
    tait_white,
)

from conftest import presentations


class TestMedialConstruction:
    def test_loop_medial_counts(self, loop):
        m = medial(loop)
        inv = invariants(m.graph)
        assert (inv.v, inv.e, inv.f) == (1, 2, 3)

    @given(presentations(max_edges=3))
    @settings(max_examples=40)
    def test_contract_invariants(self, ap):
        gi = invariants(ap)
        mi = invariants(medial(ap).graph)
        assert mi.v == gi.e + sum(1 for c in ap.circles if not c)
        assert mi.e == 2 * gi.e
        assert mi.f == gi.f + gi.v
        assert mi.euler_genus == gi.euler_genus
        assert mi.orientable == gi.orientable

    def test_isolated_vertex_passes_through(self):
        m = medial(parse("(e+ e+)()"))
        assert () in m.graph.circles
        assert None in m.origin

    def test_tait_round_trips(self, theta):
        for g in graphs_up_to(2) + [theta]:
            m = medial(g)
            assert equivalent(tait_black(m), g)
            assert equivalent(tait_white(m), geometric_dual(g))

    def test_duals_share_a_medial(self, loop, bridge):
        assert equivalent(medial(loop).graph, medial(bridge).graph)


class TestCheckerboard:
    def test_medials_are_colourable(self):
        for g in graphs_up_to(2):
            ok, colouring = is_checkerboard_colourable(medial(g).graph)
            assert ok and colouring is not None

    def test_canonical_colours_of_loop_medial(self, loop):
        m = medial(loop)
        colours = m.face_colours
        assert colours.count("black") == 1  # one vertex of the loop
        assert colours.count("white") == 2  # two faces of the loop

    def test_some_four_regular_graph_is_not_colourable(self):
        two = [g for g in graphs_up_to(2) if all(len(c) == 4 for c in g.circles)]
        results = [is_checkerboard_colourable(g)[0] for g in two]
        assert False in results and True in results

    def test_non_four_regular_rejected(self, theta):
        with pytest.raises(RibbonError):
            is_checkerboard_colourable(theta)


class TestCycleFamilyGraphs:
    def test_black_and_white_duality_states(self, theta):
        m = medial(theta)
        black = {l: MarkedState(BLACK, 1) for l in theta.labels()}
        white = {l: MarkedState(WHITE, 1) for l in theta.labels()}
        assert equivalent(cycle_family_graph(m, black), theta)
        assert equivalent(cycle_family_graph(m, white), geometric_dual(theta))

    def test_orbit_theorems(self):
        for g in graphs_up_to(2):
            m = medial(g)
            assert {canonical_key(h) for h in all_cycle_family_graphs(m)} == \
                orbit_keys(g, "full")
            assert {canonical_key(h) for h in all_cycle_family_graphs(m, duality_only=True)} == \
                orbit_keys(g, "delta")

    def test_loop_medial_has_three(self, loop):
        assert len(all_cycle_family_graphs(medial(loop))) == 3

    def test_pairwise_twisted_duals(self, loop):
        m = medial(loop)
        members = all_cycle_family_graphs(m)
        orb = orbit_keys(members[0], "full")
        assert all(canonical_key(h) in orb for h in members)

    def test_same_abstract_graph_same_family(self):
        # two embeddings of the same 4-regular abstract graph
        f1 = parse("(a+ b+ a+ b+)")
        f2 = parse("(a+ b+ a+ b-)")
        k1 = {canonical_key(h) for h in all_cycle_family_graphs(f1)}
        k2 = {canonical_key(h) for h in all_cycle_family_graphs(f2)}
        assert k1 == k2

    def test_medials_of_family_members(self):
        for g in graphs_up_to(2):
            m = medial(g)
            names = [x for x in m.origin if x is not None]
            f_abs = underlying_abstract(m.graph)
            for combo in itertools.product(ALL_MARKED_STATES, repeat=len(names)):
                h = cycle_family_graph(m, dict(zip(names, combo)))
                hm = medial(h).graph
                assert abstract_iso(underlying_abstract(hm), f_abs)
                if all(st.is_duality() for st in combo):
                    assert canonical_map_key(hm) == canonical_map_key(m.graph)

    def test_incomplete_state_rejected(self, theta):
        m = medial(theta)
        with pytest.raises(RibbonError):
            cycle_family_graph(m, {"a": MarkedState(BLACK, 1)})

    def test_bound(self, theta):
        with pytest.raises(RibbonError):
            all_cycle_family_graphs(medial(theta), max_vertices=2)


class TestStates:
    def test_component_counts_black_white(self, theta):
        labels = theta.labels()
        assert state_components(theta, {l: BLACK for l in labels}) == 2   # vertices
        assert state_components(theta, {l: WHITE for l in labels}) == 3   # faces

    def test_formula_matches_traced_oracle(self):
        for g in graphs_up_to(2):
            m = medial(g)
            labels = g.labels()
            for combo in itertools.product((WHITE, BLACK, CROSS), repeat=len(labels)):
                asg = dict(zip(labels, combo))
                assert state_components(g, asg) == state_components_traced(m, asg)

    def test_incomplete_assignment(self, theta):
        with pytest.raises(RibbonError):
            state_components(theta, {"a": WHITE})

    def test_penrose_states_of_theta(self, theta):
        # the eight white/crossing states give the classical component counts
        labels = theta.labels()
        counts = sorted(
            state_components(theta, dict(zip(labels, combo)))
            for combo in itertools.product((WHITE, CROSS), repeat=3)
        )
        assert counts == [1, 1, 1, 1, 2, 2, 2, 3]


class TestStateText:
    def test_round_trip(self):
        from ribbonpoly.medial import states_from_text, states_to_text
        states = {"e1": MarkedState(WHITE, 1), "e2": MarkedState(CROSS, -1)}
        text = states_to_text(states)
        assert text == "e1:wh+flat e2:cr+twisted"
        assert states_from_text(text) == states
        assert states_from_text("e:bl") == {"e": MarkedState(BLACK, 1)}

    def test_bad_tokens(self):
        from ribbonpoly.medial import states_from_text
        with pytest.raises(RibbonError):
            states_from_text("e:xx")
        with pytest.raises(RibbonError):
            states_from_text("e:wh+sideways")


class TestPairings:
    def test_loop_medial_pairings(self, loop):
        m = medial(loop)
        pairs = m.pairings("e")
        # black groups the corners at each end of the ribbon
        assert sorted(sorted(p) for p in pairs[BLACK]) == [["c1", "c2"], ["c1", "c2"]]
        # white strands follow the faces; each face of the loop meets one corner twice
        assert all(len(set(p)) == 1 for p in pairs[WHITE])

    def test_unknown_edge(self, loop):
        with pytest.raises(RibbonError):
            medial(loop).pairings("zz")


class TestStateAction:
    def test_element_state_bijection(self):
        seen = {state_to_element(element_to_state(el)) for el in GROUP_ELEMENTS}
        assert seen == set(GROUP_ELEMENTS)

    def test_identity(self):
        s = {"e": MarkedState(CROSS, -1)}
        assert apply_state_action(s, {"e": "1"}) == s

    def test_relations_on_states(self):
        s = {"e": MarkedState(WHITE, -1)}
        for el in ("t", "d"):
            twice = apply_state_action(apply_state_action(s, {"e": el}), {"e": el})
            assert twice == s

    def test_geometric_identity(self):
        rng = random.Random(9)
        for g in graphs_up_to(2):
            m = medial(g)
            labels = g.labels()
            for _ in range(8):
                s = {l: rng.choice(ALL_MARKED_STATES) for l in labels}
                gamma = {l: rng.choice(GROUP_ELEMENTS) for l in labels}
                lhs = cycle_family_graph(m, apply_state_action(s, gamma))
                rhs = apply_gamma(cycle_family_graph(m, s), gamma)
                assert equivalent(lhs, rhs)


class TestValuations:
    def test_theta(self, theta):
        assert count_admissible_valuations(theta, 3) == 6

    def test_loop(self, loop):
        assert count_admissible_valuations(loop, 2) == 2
        assert count_admissible_valuations(loop, 3) == 6

    def test_allow_equal_changes_the_count(self, loop):
        # every colouring is white-admissible once equal pair colours count
        assert count_admissible_valuations(loop, 2, allow_equal=True) == 4

    def test_bounds(self, theta):
        with pytest.raises(RibbonError):
            count_admissible_valuations(theta, 0)
        with pytest.raises(RibbonError):
            count_admissible_valuations(theta, 100, max_assignments=10)
