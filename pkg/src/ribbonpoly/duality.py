"""The two edge operations, the six-element ribbon group, and orbits.

The twist at an edge reverses one of its two marking arrows.  The partial
dual at an edge cuts both of its arrows out (with their arcs) and rewires:
a fresh arrow runs from the head of one old arrow to the tail of the other,
and vice versa; the new segments become arcs of the rewired circles.

Per edge these generate a six-element group with normal forms
1, t, d, td, dt, tdt and relations t^2 = d^2 = (td)^3 = 1 (isomorphic to the
symmetric group on the three vertex states).  A word acts right to left:
"td" means dual first, then twist, matching the composition convention of
assignments (applying "td" to edge e is the same as applying "d" then "t").

Operations at distinct edges commute, so an assignment of group elements to
edges acts in any edge order.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Sequence, Set, Tuple

from .arrows import ArrowPresentation, RibbonError, occurrences, delete_edge
from .canonical import canonical_embedded, canonical_key

GROUP_ELEMENTS = ("1", "t", "d", "td", "dt", "tdt")

#: Subgroup names accepted by orbit computations.
SUBGROUPS: Dict[str, Tuple[str, ...]] = {
    "full": ("t", "d"),
    "delta": ("d",),
    "tau": ("t",),
    "taudelta": ("td",),
    "deltataudelta": ("tdt",),  # dtd equals tdt in the group
}


def _act_letters(word: str, triple):
    """Apply a word's letters right to left as permutations of a state triple."""
    a, b, c = triple
    for letter in reversed(word):
        if letter == "t":
            a, c = c, a
        elif letter == "d":
            a, b = b, a
        else:
            raise RibbonError(f"bad letter {letter!r} in group word")
    return (a, b, c)


_CANON_BY_PERM = {}
for _w in GROUP_ELEMENTS:
    _CANON_BY_PERM[_act_letters("" if _w == "1" else _w, (0, 1, 2))] = _w


def normal_form(word: str) -> str:
    """Reduce an arbitrary word over {t, d} to one of the six normal forms."""
    w = "" if word == "1" else word
    return _CANON_BY_PERM[_act_letters(w, (0, 1, 2))]


def ge_mul(x: str, y: str) -> str:
    """Group product x*y; the product acts as y first, then x."""
    wx = "" if x == "1" else x
    wy = "" if y == "1" else y
    return normal_form(wx + wy)


def ge_inverse(x: str) -> str:
    for y in GROUP_ELEMENTS:
        if ge_mul(x, y) == "1":
            return y
    raise AssertionError


def triple_action(element: str, triple):
    """Permute a (white, black, crossing) triple by the given element."""
    return _act_letters("" if element == "1" else element, triple)


# ---------------------------------------------------------------------------
# the two generators
# ---------------------------------------------------------------------------


def twist(ap: ArrowPresentation, label: str) -> ArrowPresentation:
    """Reverse exactly one marking arrow of the label (the first one stored)."""
    if not ap.has_label(label):
        raise RibbonError(f"unknown label {label!r}")
    done = False
    circles = []
    for circle in ap.circles:
        new = []
        for lbl, s in circle:
            if lbl == label and not done:
                new.append((lbl, -s))
                done = True
            else:
                new.append((lbl, s))
        circles.append(tuple(new))
    return ArrowPresentation(tuple(circles))


def twist_edges(ap: ArrowPresentation, labels: Iterable[str]) -> ArrowPresentation:
    out = ap
    for lbl in labels:
        out = twist(out, lbl)
    return out


def partial_dual(ap: ArrowPresentation, label: str) -> ArrowPresentation:
    """Rewire the circles at one edge: head(A)->tail(B) and head(B)->tail(A).

    Implemented on the 1-complex of arrow endpoints: every kept arrow is a
    directed segment between its tail and head nodes, consecutive endpoints
    around each circle are joined by connector arcs, and the two arrows of
    the label are replaced by the two new crossing segments.  The resulting
    degree-2 complex is traced back into circles.
    """
    occ = occurrences(ap)
    if label not in occ:
        raise RibbonError(f"unknown label {label!r}")
    a_occ, b_occ = occ[label]

    # nodes are (occurrence, 'T'|'H'); each touches one segment, one connector
    connectors: Dict[Tuple, Tuple] = {}
    for ci, circle in enumerate(ap.circles):
        k = len(circle)
        for ai in range(k):
            x = (ci, ai)
            nxt = (ci, (ai + 1) % k)
            sx = circle[ai][1]
            sn = circle[(ai + 1) % k][1]
            out_node = (x, "H" if sx == 1 else "T")
            in_node = (nxt, "T" if sn == 1 else "H")
            connectors[out_node] = in_node
            connectors[in_node] = out_node

    segments: Dict[Tuple, Tuple[Tuple, str]] = {}  # node -> (other node, label), tail->head
    seg_dir: Dict[Tuple[Tuple, Tuple], bool] = {}
    def add_segment(tail, head, lbl):
        segments[tail] = (head, lbl)
        segments[head] = (tail, lbl)
        seg_dir[(tail, head)] = True
        seg_dir[(head, tail)] = False

    for lbl, pair in occ.items():
        if lbl == label:
            continue
        for o in pair:
            add_segment((o, "T"), (o, "H"), lbl)
    add_segment((a_occ, "H"), (b_occ, "T"), label)
    add_segment((b_occ, "H"), (a_occ, "T"), label)

    circles: List[Tuple[Tuple[str, int], ...]] = [
        () for c in ap.circles if not c
    ]
    visited: Set[Tuple] = set()
    for start in sorted(segments):
        if start in visited:
            continue
        circle: List[Tuple[str, int]] = []
        node = start
        while node not in visited:
            other, lbl = segments[node]
            visited.add(node)
            visited.add(other)
            circle.append((lbl, 1 if seg_dir[(node, other)] else -1))
            node = connectors[other]
        circles.append(tuple(circle))
    return ArrowPresentation(tuple(circles))


_LETTER_OPS = {"t": twist, "d": partial_dual}


def apply_word(ap: ArrowPresentation, label: str, word: str) -> ArrowPresentation:
    """Apply a group word at one edge, rightmost letter first."""
    out = ap
    w = "" if word == "1" else word
    for letter in reversed(w):
        out = _LETTER_OPS[letter](out, label)
    return out


def apply_gamma(ap: ArrowPresentation, gamma: Mapping[str, str]) -> ArrowPresentation:
    """Apply an edge-to-element assignment (edges absent default to 1)."""
    known = set(ap.labels())
    unknown = set(gamma) - known
    if unknown:
        raise RibbonError(f"assignment mentions unknown labels {sorted(unknown)!r}")
    out = ap
    for lbl in sorted(gamma):
        out = apply_word(out, lbl, normal_form(gamma[lbl]))
    return out


def geometric_dual(ap: ArrowPresentation) -> ArrowPresentation:
    return apply_gamma(ap, {lbl: "d" for lbl in ap.labels()})


def contract(ap: ArrowPresentation, label: str) -> ArrowPresentation:
    """Contraction as dual-then-delete; contracting a loop can create a vertex."""
    return delete_edge(partial_dual(ap, label), label)


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------


def orbit(ap: ArrowPresentation, generators: Sequence[str] | str = "full",
          max_edges: int = 6) -> List[ArrowPresentation]:
    """Closure of the graph under the generators applied at every edge.

    ``generators`` is a subgroup name or an explicit collection of group
    words.  Members are returned as sorted canonical forms.
    """
    if ap.edge_count() > max_edges:
        raise RibbonError(
            f"orbit bound exceeded: {ap.edge_count()} edges > {max_edges}")
    gens: Tuple[str, ...]
    if isinstance(generators, str):
        if generators not in SUBGROUPS:
            raise RibbonError(f"unknown subgroup {generators!r}")
        gens = SUBGROUPS[generators]
    else:
        gens = tuple(normal_form(g) for g in generators)

    start = canonical_embedded(ap)
    seen = {canonical_key(start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for lbl in g.labels():
                for gen in gens:
                    h = canonical_embedded(apply_word(g, lbl, gen))
                    key = canonical_key(h)
                    if key not in seen:
                        seen[key] = h
                        nxt.append(h)
        frontier = nxt
    return sorted(seen.values(), key=str)


def orbit_keys(ap: ArrowPresentation, generators: Sequence[str] | str = "full",
               max_edges: int = 6) -> Set:
    return {canonical_key(g) for g in orbit(ap, generators, max_edges)}


# ---------------------------------------------------------------------------
# assignment parsing (CLI / service surface)
# ---------------------------------------------------------------------------

_GAMMA_NAMES = {
    "tau": "t", "delta": "d", "taudelta": "td", "deltatau": "dt",
    "taudeltatau": "tdt", "deltataudelta": "tdt", "one": "1", "id": "1",
}


def parse_gamma(text: str) -> Dict[str, str]:
    """Parse assignments like ``tau(e1,e2),delta(e3),taudelta(e4)``.

    Group-element literals 1, t, d, td, dt, tdt are also accepted as names.
    """
    gamma: Dict[str, str] = {}
    rest = text.strip()
    if not rest:
        return gamma
    import re

    for m in re.finditer(r"([A-Za-z0-9]+)\s*\(([^)]*)\)", rest):
        name, labels = m.group(1), m.group(2)
        if name in _GAMMA_NAMES:
            word = _GAMMA_NAMES[name]
        elif name in GROUP_ELEMENTS:
            word = name
        else:
            raise RibbonError(f"unknown group element name {name!r}")
        for lbl in labels.split(","):
            lbl = lbl.strip()
            if not lbl:
                continue
            if lbl in gamma:
                gamma[lbl] = ge_mul(word, gamma[lbl])
            else:
                gamma[lbl] = word
    covered = re.sub(r"([A-Za-z0-9]+)\s*\(([^)]*)\)", "", rest).replace(",", "").strip()
    if covered:
        raise RibbonError(f"unparsed assignment fragment {covered!r}")
    return gamma
