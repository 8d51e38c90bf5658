"""Medial graphs, vertex states, cycle family graphs, Tait graphs, valuations.

The medial of an embedded graph G has one 4-valent vertex per edge of G and
one edge per corner of G (a corner is a gap between consecutive arrows in a
vertex rotation).  Built directly on the arrow presentation: the medial
circle of edge e, whose occurrences are A and B, reads

    [corner at tail(A), corner at head(A), corner at tail(B), corner at head(B)]

and the medial arrow abutting an occurrence carries that occurrence's sign.
This propagates the twist structure correctly: the black-split duality state
of the result traces the vertex-disc boundaries of G and recovers G exactly
(the ``tait_black`` round-trip below), while the white-split duality state
traces the face boundaries and recovers the geometric dual.

Vertex states at a medial vertex are the three pairings of the four slots:

    black split  {1,2},{3,4}   strands follow the vertex discs of G
    white split  {2,3},{4,1}   strands follow the faces of G
    crossing     {1,3},{2,4}

An arrow-marked state adds one labelled arrow per strand; only the relative
direction of the two arrows matters (reversing both is an equivalence), so a
marked state is (pairing, rel) with rel = +1 for flat and -1 for twisted
markings.  The six marked states per vertex correspond to the six ribbon
group elements, and reading the state curves as circles with the strand
arrows gives the cycle family graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Set, Tuple

from .arrows import (
    ArrowPresentation,
    RibbonError,
    boundary_data,
    face_count,
    occurrences,
    spanning_subgraph,
)
from .canonical import canonical_embedded, canonical_key
from .duality import ge_mul, twist_edges

BLACK, WHITE, CROSS = "bl", "wh", "cr"
PAIRINGS = (BLACK, WHITE, CROSS)

#: slot pairs of each state, in the canonical slot frame [tA, hA, tB, hB]
_STATE_PAIRS = {
    BLACK: ((0, 1), (2, 3)),
    WHITE: ((1, 2), (3, 0)),
    CROSS: ((0, 2), (1, 3)),
}

#: marked state <-> ribbon group element, in the canonical medial frame
_STATE_TO_ELEMENT = {
    (BLACK, 1): "1", (BLACK, -1): "t",
    (WHITE, 1): "d", (WHITE, -1): "td",
    (CROSS, -1): "dt", (CROSS, 1): "tdt",
}
_ELEMENT_TO_STATE = {v: k for k, v in _STATE_TO_ELEMENT.items()}


@dataclass(frozen=True)
class MarkedState:
    """Arrow-marked vertex state: pairing plus relative arrow direction."""

    pairing: str
    rel: int = 1

    def is_split(self) -> bool:
        return self.pairing in (BLACK, WHITE)

    def is_duality(self) -> bool:
        return self.is_split() and self.rel == 1


ALL_MARKED_STATES = tuple(
    MarkedState(p, r) for p in PAIRINGS for r in (1, -1)
)
DUALITY_STATES = (MarkedState(BLACK, 1), MarkedState(WHITE, 1))


def states_to_text(states: Mapping[str, MarkedState]) -> str:
    """Serialize a graph state as ``e1:wh+flat e2:cr+twisted ...``."""
    parts = []
    for lbl in sorted(states):
        st = states[lbl]
        parts.append(f"{lbl}:{st.pairing}+{'flat' if st.rel == 1 else 'twisted'}")
    return " ".join(parts)


def states_from_text(text: str) -> Dict[str, MarkedState]:
    """Parse the state format; the arrow marking defaults to flat."""
    out: Dict[str, MarkedState] = {}
    for token in text.split():
        head, _, marking = token.partition("+")
        lbl, _, kind = head.partition(":")
        if kind not in PAIRINGS:
            raise RibbonError(f"unknown vertex state {kind!r} in {token!r}")
        if marking not in ("", "flat", "twisted"):
            raise RibbonError(f"unknown arrow marking {marking!r} in {token!r}")
        out[lbl] = MarkedState(kind, -1 if marking == "twisted" else 1)
    return out


@dataclass(frozen=True)
class Medial:
    """A 4-regular embedded graph together with its checkerboard structure.

    ``graph`` is the medial as an arrow presentation whose circles, for
    non-isolated vertices, store the four slots in the canonical frame.
    ``origin`` maps each circle index to the edge of the base graph it sits
    on (None for isolated vertices).  ``face_colours`` maps each boundary
    walk index of ``graph`` to "black" (contains a base vertex) or "white".
    """

    graph: ArrowPresentation
    base: ArrowPresentation
    origin: Tuple[Optional[str], ...]

    def circle_of_edge(self, label: str) -> int:
        for i, lbl in enumerate(self.origin):
            if lbl == label:
                return i
        raise RibbonError(f"no medial vertex for edge {label!r}")

    def pairings(self, label: str) -> Dict[str, Tuple[Tuple[str, str], Tuple[str, str]]]:
        """The three half-edge pairings at the medial vertex over an edge.

        Returns the corner labels grouped per strand for the black split,
        white split and crossing states of that vertex.
        """
        circle = self.graph.circles[self.circle_of_edge(label)]
        slots = tuple(lbl for lbl, _ in circle)
        return {
            kind: tuple(tuple(slots[i] for i in pair) for pair in pairs)
            for kind, pairs in _STATE_PAIRS.items()
        }

    @property
    def face_colours(self) -> Tuple[str, ...]:
        return _medial_face_colours(self.graph)


def medial(ap: ArrowPresentation) -> Medial:
    """Construct the embedded medial graph with its canonical colouring."""
    occ = occurrences(ap)
    corner_name: Dict[Tuple[int, int], str] = {}
    for ci, circle in enumerate(ap.circles):
        for gi in range(len(circle)):
            corner_name[(ci, gi)] = f"c{len(corner_name) + 1}"

    def gap_at(o, endpoint):
        ci, ai = o
        k = len(ap.circles[ci])
        s = ap.circles[ci][ai][1]
        at_end = (endpoint == "H") == (s == 1)
        return (ci, ai) if at_end else (ci, (ai - 1) % k)

    circles: List[Tuple[Tuple[str, int], ...]] = []
    origin: List[Optional[str]] = []
    for lbl in sorted(occ):
        a, b = occ[lbl]
        sa = ap.circles[a[0]][a[1]][1]
        sb = ap.circles[b[0]][b[1]][1]
        circles.append((
            (corner_name[gap_at(a, "T")], sa),
            (corner_name[gap_at(a, "H")], sa),
            (corner_name[gap_at(b, "T")], sb),
            (corner_name[gap_at(b, "H")], sb),
        ))
        origin.append(lbl)
    for circle in ap.circles:
        if not circle:
            circles.append(())
            origin.append(None)
    return Medial(ArrowPresentation(tuple(circles)).check(), ap, tuple(origin))


def _medial_face_colours(graph: ArrowPresentation) -> Tuple[str, ...]:
    """Canonical colouring: a walk through black corners bounds a vertex disc.

    Corner parity in the canonical slot frame: the gaps after slots 1 and 3
    (0-indexed 0 and 2) separate same-end slot pairs, so they are the black
    corners; the other two are white.  Each boundary walk must be pure.
    """
    data = boundary_data(graph)
    colours = []
    for walk in data.walks:
        kinds = {("black" if gi % 2 == 0 else "white") for (ci, gi) in walk if gi >= 0}
        if not kinds:
            colours.append("black")  # isolated medial vertex: its face holds the base vertex
            continue
        if len(kinds) != 1:
            raise RibbonError("medial boundary walk mixes corner parities")
        colours.append(kinds.pop())
    return tuple(colours)


def is_checkerboard_colourable(graph: ArrowPresentation) -> Tuple[bool, Optional[Dict[int, str]]]:
    """Face 2-colourability of a 4-regular embedded graph.

    Faces are boundary walks; the two walks along the sides of each edge
    ribbon must receive different colours.  Returns the colouring found (walk
    index to colour) or None.
    """
    for circle in graph.circles:
        if len(circle) not in (0, 4):
            raise RibbonError("input is not 4-regular")
    data = boundary_data(graph)
    adj: Dict[int, List[int]] = {i: [] for i in range(len(data.walks))}
    for lbl, (w1, w2) in data.edge_sides.items():
        adj[w1].append(w2)
        adj[w2].append(w1)
    colour: Dict[int, str] = {}
    for root in range(len(data.walks)):
        if root in colour:
            continue
        colour[root] = "black"
        stack = [root]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                want = "white" if colour[u] == "black" else "black"
                if v not in colour:
                    colour[v] = want
                    stack.append(v)
                elif colour[v] != want:
                    return False, None
    return True, colour


# ---------------------------------------------------------------------------
# state curves and cycle family graphs
# ---------------------------------------------------------------------------


def _slot_links(graph: ArrowPresentation) -> Dict[Tuple[int, int], Tuple[int, int]]:
    """Pair up slots joined by an edge of the 4-regular graph."""
    occ: Dict[str, List[Tuple[int, int]]] = {}
    for ci, circle in enumerate(graph.circles):
        for ai, (lbl, _) in enumerate(circle):
            occ.setdefault(lbl, []).append((ci, ai))
    links = {}
    for lbl, pair in occ.items():
        if len(pair) != 2:
            raise RibbonError(f"label {lbl!r} does not appear twice")
        a, b = pair
        links[a] = b
        links[b] = a
    return links


def _vertex_names(graph: ArrowPresentation, origin=None) -> List[str]:
    if origin is not None:
        return list(origin)
    return [f"v{i + 1}" for i in range(len(graph.circles))]


def cycle_family_graph(source, states: Mapping) -> ArrowPresentation:
    """Read the arrow presentation off an arrow-marked graph state.

    ``source`` is a Medial or a 4-regular ArrowPresentation; ``states`` maps
    the vertex key (origin edge label for a Medial, circle index otherwise)
    to a MarkedState.  Each strand of a state carries one arrow labelled by
    its vertex; tracing the disjoint state curves through the edge ribbons
    and reading those arrows gives the new graph.  Isolated vertices pass
    through unchanged.
    """
    if isinstance(source, Medial):
        graph = source.graph
        names = list(source.origin)
    else:
        graph = source
        names = _vertex_names(graph)
    links = _slot_links(graph)

    strand_at: Dict[Tuple[int, int], Tuple[int, int, int]] = {}
    strands: List[Tuple[Tuple[int, int], Tuple[int, int], str, int]] = []
    for ci, circle in enumerate(graph.circles):
        if not circle:
            continue
        if len(circle) != 4:
            raise RibbonError("state curves need a 4-regular graph")
        name = names[ci]
        if name is None or name not in states:
            raise RibbonError(f"no state assigned at vertex {name or ci!r}")
        st = states[name]
        pairs = _STATE_PAIRS[st.pairing]
        dirs = (1, st.rel)
        for si, ((p, q), d) in enumerate(zip(pairs, dirs)):
            idx = len(strands)
            strands.append(((ci, p), (ci, q), name, d))
            strand_at[(ci, p)] = (idx, 0)
            strand_at[(ci, q)] = (idx, 1)

    circles: List[Tuple[Tuple[str, int], ...]] = [
        () for ci, c in enumerate(graph.circles) if not c
    ]
    visited: Set[int] = set()
    for start in range(len(strands)):
        if start in visited:
            continue
        circle: List[Tuple[str, int]] = []
        idx, entry = start, 0
        while idx not in visited:
            visited.add(idx)
            p, q, name, d = strands[idx]
            if entry == 0:
                circle.append((name, d))
                exit_slot = q
            else:
                circle.append((name, -d))
                exit_slot = p
            partner = links[exit_slot]
            idx, entry = strand_at[partner]
        circles.append(tuple(circle))
    return ArrowPresentation(tuple(circles)).check()


def tait_black(m: Medial) -> ArrowPresentation:
    states = {lbl: MarkedState(BLACK, 1) for lbl in m.origin if lbl is not None}
    return cycle_family_graph(m, states)


def tait_white(m: Medial) -> ArrowPresentation:
    states = {lbl: MarkedState(WHITE, 1) for lbl in m.origin if lbl is not None}
    return cycle_family_graph(m, states)


def all_cycle_family_graphs(source, duality_only: bool = False,
                            max_vertices: int = 6) -> List[ArrowPresentation]:
    """All cycle family graphs up to embedded equivalence.

    Enumerates the six inequivalent arrow-marked states per vertex (two when
    ``duality_only``), generates, canonicalizes and deduplicates.
    """
    if isinstance(source, Medial):
        graph = source.graph
        names = [n for n in source.origin if n is not None]
    else:
        graph = source
        names = [
            _vertex_names(graph)[ci]
            for ci, c in enumerate(graph.circles) if c
        ]
        source = graph
    if len(names) > max_vertices:
        raise RibbonError(f"state enumeration bound exceeded: {len(names)} > {max_vertices}")
    menu = DUALITY_STATES if duality_only else ALL_MARKED_STATES
    seen = {}
    for combo in itertools.product(menu, repeat=len(names)):
        states = dict(zip(names, combo))
        g = cycle_family_graph(source, states)
        key = canonical_key(g)
        if key not in seen:
            seen[key] = canonical_embedded(g)
    return sorted(seen.values(), key=str)


# ---------------------------------------------------------------------------
# graph states of a medial: component counts and the ribbon group action
# ---------------------------------------------------------------------------


def state_components(ap: ArrowPresentation, assignment: Mapping[str, str]) -> int:
    """Number of closed curves of a medial graph state.

    Computed without building the medial: delete the black-split edges, add a
    half-twist on the crossing edges, and count boundary components.  The
    direct curve tracing on the medial is ``state_components_traced``.
    """
    labels = set(ap.labels())
    if set(assignment) != labels:
        missing = labels - set(assignment)
        extra = set(assignment) - labels
        raise RibbonError(f"state assignment mismatch: missing {sorted(missing)}, extra {sorted(extra)}")
    bad = {v for v in assignment.values() if v not in PAIRINGS}
    if bad:
        raise RibbonError(f"unknown vertex states {sorted(bad)!r}")
    keep = [lbl for lbl, st in assignment.items() if st != BLACK]
    reduced = spanning_subgraph(ap, keep)
    reduced = twist_edges(reduced, [lbl for lbl in keep if assignment[lbl] == CROSS])
    return face_count(reduced)


def state_components_traced(m: Medial, assignment: Mapping[str, str]) -> int:
    """Oracle: count the state curves on the medial itself."""
    links = _slot_links(m.graph)
    curves = 0
    visited: Set[Tuple[int, int]] = set()
    partner_in_strand: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for ci, circle in enumerate(m.graph.circles):
        if not circle:
            curves += 1
            continue
        lbl = m.origin[ci]
        pairs = _STATE_PAIRS[assignment[lbl]]
        for p, q in pairs:
            partner_in_strand[(ci, p)] = (ci, q)
            partner_in_strand[(ci, q)] = (ci, p)
    for slot in partner_in_strand:
        if slot in visited:
            continue
        curves += 1
        cur = slot
        while cur not in visited:
            visited.add(cur)
            out = partner_in_strand[cur]
            visited.add(out)
            cur = links[out]
    return curves


def apply_state_action(states: Mapping[str, MarkedState],
                       gamma: Mapping[str, str]) -> Dict[str, MarkedState]:
    """Act on an arrow-marked state of a medial by a group assignment.

    The twist reverses one arrow at the vertex; the dual exchanges the flat
    black and white splits and works out on the rest by the group law, so the
    action is left multiplication under the state-to-element correspondence.
    """
    out: Dict[str, MarkedState] = dict(states)
    for lbl, element in gamma.items():
        if lbl not in out:
            raise RibbonError(f"no state at vertex {lbl!r}")
        st = out[lbl]
        current = _STATE_TO_ELEMENT[(st.pairing, st.rel)]
        pairing, rel = _ELEMENT_TO_STATE[ge_mul(element, current)]
        out[lbl] = MarkedState(pairing, rel)
    return out


def state_to_element(st: MarkedState) -> str:
    return _STATE_TO_ELEMENT[(st.pairing, st.rel)]


def element_to_state(element: str) -> MarkedState:
    pairing, rel = _ELEMENT_TO_STATE[element]
    return MarkedState(pairing, rel)


# ---------------------------------------------------------------------------
# admissible k-valuations
# ---------------------------------------------------------------------------


def count_admissible_valuations(ap: ArrowPresentation, k: int,
                                allow_equal: bool = False,
                                max_assignments: int = 4_000_000) -> int:
    """Count edge k-colourings of the medial that are admissible.

    Every medial vertex must look like a white split (side pairs
    monochromatic) or a crossing (crossing pairs monochromatic), with the two
    pair colours distinct unless ``allow_equal``.
    """
    if k < 1:
        raise RibbonError("k must be positive")
    m = medial(ap)
    corner_labels = sorted({lbl for c in m.graph.circles for lbl, _ in c})
    if k ** len(corner_labels) > max_assignments:
        raise RibbonError(
            f"valuation bound exceeded: {k}^{len(corner_labels)} assignments")
    index = {lbl: i for i, lbl in enumerate(corner_labels)}
    vertex_slots = [
        tuple(index[lbl] for lbl, _ in circle)
        for circle in m.graph.circles if circle
    ]
    count = 0
    for phi in itertools.product(range(k), repeat=len(corner_labels)):
        ok = True
        for s in vertex_slots:
            c1, c2, c3, c4 = phi[s[0]], phi[s[1]], phi[s[2]], phi[s[3]]
            white = c2 == c3 and c4 == c1 and (allow_equal or c1 != c2)
            cross = c1 == c3 and c2 == c4 and (allow_equal or c1 != c2)
            if not (white or cross):
                ok = False
                break
        if ok:
            count += 1
    return count
