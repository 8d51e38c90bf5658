"""Arrow presentations of embedded graphs.

An embedded (ribbon) graph is stored as a set of circles, each carrying a
cyclic sequence of directed, labelled arrows; every label appears on exactly
two arrows.  A circle is a vertex disc boundary, a label is an edge, and the
two arrows of a label mark where the edge ribbon is glued on.

Encoding: ``circles`` is a tuple of circles; a circle is a tuple of arrows;
an arrow is ``(label, sign)`` with ``sign`` +1 or -1 giving the arrow's
direction relative to the stored reading direction of its circle.  The
reading direction of a circle is a presentation choice, not data: re-reading
a circle backwards (reverse the order, negate every sign) describes the same
embedded graph.

Sign calibration (fixed by the boundary tracer below): ``(e+ e+)`` is the
orientable loop (annulus, two boundary components) and ``(e+ e-)`` the
twisted loop (Moebius band, one boundary component).

Text format::

    graph  := circle+
    circle := "(" arrow* ")"
    arrow  := label sign        # sign is "+" or "-", labels are [A-Za-z_]\\w*

Whitespace separates arrows.  ``()`` is an isolated vertex.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, List, Tuple

Arrow = Tuple[str, int]
Circle = Tuple[Arrow, ...]


class RibbonError(ValueError):
    """Domain error: malformed presentation or unknown label."""


class RibbonSyntaxError(RibbonError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class ArrowPresentation:
    circles: Tuple[Circle, ...]

    def labels(self) -> List[str]:
        seen = []
        met = set()
        for circle in self.circles:
            for lbl, _ in circle:
                if lbl not in met:
                    met.add(lbl)
                    seen.append(lbl)
        return sorted(seen)

    def edge_count(self) -> int:
        return sum(len(c) for c in self.circles) // 2

    def vertex_count(self) -> int:
        return len(self.circles)

    def has_label(self, label: str) -> bool:
        return any(lbl == label for c in self.circles for lbl, _ in c)

    def check(self) -> "ArrowPresentation":
        counts: Dict[str, int] = {}
        for circle in self.circles:
            for lbl, sign in circle:
                if sign not in (1, -1):
                    raise RibbonError(f"bad sign {sign!r} on label {lbl!r}")
                counts[lbl] = counts.get(lbl, 0) + 1
        bad = {lbl: n for lbl, n in counts.items() if n != 2}
        if bad:
            lbl, n = next(iter(bad.items()))
            raise RibbonError(f"label {lbl!r} appears on {n} arrows, expected 2")
        return self

    def __str__(self) -> str:
        return serialize(self)


# ---------------------------------------------------------------------------
# parsing and serialization
# ---------------------------------------------------------------------------

_ARROW_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)\s*([+-])")


def parse(text: str) -> ArrowPresentation:
    """Parse the text format, reporting the offset of the first bad character."""
    circles: List[Circle] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise RibbonSyntaxError(f"expected '(' but found {ch!r}", i)
        i += 1
        arrows: List[Arrow] = []
        while True:
            while i < n and text[i].isspace():
                i += 1
            if i >= n:
                raise RibbonSyntaxError("unclosed circle", i)
            if text[i] == ")":
                i += 1
                break
            m = _ARROW_RE.match(text, i)
            if not m:
                raise RibbonSyntaxError(f"expected arrow or ')' but found {text[i]!r}", i)
            arrows.append((m.group(1), 1 if m.group(2) == "+" else -1))
            i = m.end()
        circles.append(tuple(arrows))
    if not circles:
        raise RibbonSyntaxError("empty input: expected at least one circle", 0)
    return ArrowPresentation(tuple(circles)).check()


def serialize(ap: ArrowPresentation) -> str:
    return "".join(
        "(" + " ".join(f"{lbl}{'+' if s > 0 else '-'}" for lbl, s in circle) + ")"
        for circle in ap.circles
    )


def parse_signed(text: str) -> Tuple[ArrowPresentation, Dict[str, int]]:
    """Parse a presentation with an optional ``signs: e=+ f=-`` suffix.

    Edges without an explicit sign default to +1.
    """
    head, sep, tail = text.partition("signs:")
    ap = parse(head)
    signs = {lbl: 1 for lbl in ap.labels()}
    if sep:
        for token in tail.split():
            m = re.fullmatch(r"([A-Za-z_][A-Za-z0-9_]*)=([+-])", token)
            if not m:
                raise RibbonSyntaxError(f"bad sign token {token!r}", text.find(token))
            if m.group(1) not in signs:
                raise RibbonError(f"sign given for unknown label {m.group(1)!r}")
            signs[m.group(1)] = 1 if m.group(2) == "+" else -1
    return ap, signs


def serialize_signed(ap: ArrowPresentation, signs: Dict[str, int]) -> str:
    body = serialize(ap)
    if all(s == 1 for s in signs.values()):
        return body
    suffix = " ".join(f"{lbl}={'+' if signs[lbl] > 0 else '-'}" for lbl in sorted(signs))
    return f"{body} signs: {suffix}"


def to_json_dict(ap: ArrowPresentation) -> dict:
    return {
        "circles": [
            [{"label": lbl, "dir": "+" if s > 0 else "-"} for lbl, s in circle]
            for circle in ap.circles
        ]
    }


def from_json_dict(data: dict) -> ArrowPresentation:
    try:
        circles = tuple(
            tuple((a["label"], 1 if a["dir"] == "+" else -1) for a in circle)
            for circle in data["circles"]
        )
    except (KeyError, TypeError) as exc:
        raise RibbonError(f"malformed JSON presentation: {exc}") from exc
    return ArrowPresentation(circles).check()


# ---------------------------------------------------------------------------
# occurrences, gaps, boundary tracing
# ---------------------------------------------------------------------------
#
# Occurrence (ci, ai): arrow ai on circle ci.  Reading circle ci forwards,
# occurrence X with sign s has a start endpoint and an end endpoint; the
# start is the tail of the marking arrow when s=+1 and the head when s=-1.
#
# Gap (ci, ai): the free arc after arrow ai and before arrow ai+1 (cyclic).
# Gaps are the pieces of the surface boundary on the vertex discs; the other
# boundary pieces are the two free sides of each edge ribbon, one joining
# head(A) to tail(B) and one joining head(B) to tail(A), where A and B are
# the two arrows of the label.

Occ = Tuple[int, int]


def occurrences(ap: ArrowPresentation) -> Dict[str, List[Occ]]:
    occ: Dict[str, List[Occ]] = {}
    for ci, circle in enumerate(ap.circles):
        for ai, (lbl, _) in enumerate(circle):
            occ.setdefault(lbl, []).append((ci, ai))
    return occ


def _sign(ap: ArrowPresentation, occ: Occ) -> int:
    return ap.circles[occ[0]][occ[1]][1]


def _gap_at(ap: ArrowPresentation, occ: Occ, endpoint: str) -> Tuple[int, int]:
    """Gap adjacent to the tail ('T') or head ('H') endpoint of an occurrence."""
    ci, ai = occ
    k = len(ap.circles[ci])
    s = _sign(ap, occ)
    at_end = (endpoint == "H") == (s == 1)  # end endpoint iff head for +, tail for -
    return (ci, ai) if at_end else (ci, (ai - 1) % k)


@dataclass(frozen=True)
class BoundaryData:
    """Boundary walks of the ribbon-graph surface.

    ``walks[i]`` lists the gaps used by walk i (each gap of the presentation is
    used by exactly one walk).  ``edge_sides[label]`` gives the pair of walk
    indices along the two free sides of that edge ribbon: index 0 is the side
    from head(first occurrence) to tail(second), index 1 the other side.
    Isolated circles contribute a walk with a single ``(ci, -1)`` marker.
    """

    walks: Tuple[Tuple[Tuple[int, int], ...], ...]
    edge_sides: Dict[str, Tuple[int, int]]

    @property
    def count(self) -> int:
        return len(self.walks)


def boundary_data(ap: ArrowPresentation) -> BoundaryData:
    occ = occurrences(ap)
    partner: Dict[Occ, Occ] = {}
    first: Dict[str, Occ] = {}
    for lbl, (a, b) in ((l, tuple(o)) for l, o in occ.items()):
        partner[a] = b
        partner[b] = a
        first[lbl] = a

    walks: List[Tuple[Tuple[int, int], ...]] = []
    edge_sides: Dict[str, List[int]] = {lbl: [-1, -1] for lbl in occ}
    visited = set()

    for ci, circle in enumerate(ap.circles):
        if not circle:
            walks.append(((ci, -1),))
            continue
        for g0 in range(len(circle)):
            if (ci, g0) in visited:
                continue
            walk: List[Tuple[int, int]] = []
            cur = (ci, g0, 1)
            while True:
                wci, wgi, d = cur
                gap = (wci, wgi)
                if gap in visited:
                    break
                visited.add(gap)
                walk.append(gap)
                k = len(ap.circles[wci])
                if d == 1:
                    x = (wci, (wgi + 1) % k)  # arrive at start endpoint of next arrow
                    s = _sign(ap, x)
                    at = "T" if s == 1 else "H"
                else:
                    x = (wci, wgi)  # arrive at end endpoint of this arrow
                    s = _sign(ap, x)
                    at = "H" if s == 1 else "T"
                y = partner[x]
                lbl = ap.circles[x[0]][x[1]][0]
                # crossing from head(X) uses the side head(X)->tail(Y); from
                # tail(X) we run the side head(Y)->tail(X) backwards.
                head_occ = x if at == "H" else y
                side = 0 if head_occ == first[lbl] else 1
                edge_sides[lbl][side] = len(walks)
                enter = "T" if at == "H" else "H"
                sy = _sign(ap, y)
                cj, aj = y
                kj = len(ap.circles[cj])
                at_end = (enter == "H") == (sy == 1)
                cur = (cj, aj, 1) if at_end else (cj, (aj - 1) % kj, -1)
            walks.append(tuple(walk))

    return BoundaryData(tuple(walks), {l: (s[0], s[1]) for l, s in edge_sides.items()})


def boundary_components(ap: ArrowPresentation) -> Tuple[int, Tuple[Tuple[Tuple[int, int], ...], ...]]:
    data = boundary_data(ap)
    return data.count, data.walks


def face_count(ap: ArrowPresentation) -> int:
    return boundary_data(ap).count


# ---------------------------------------------------------------------------
# derived structures
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RotationSystem:
    """Vertex rotations of half-edge identifiers plus per-edge twist bits."""

    vertices: Tuple[Tuple[str, ...], ...]
    edges: Dict[str, Tuple[Tuple[str, str], int]]


@dataclass(frozen=True)
class CombinatorialMap:
    """Cyclic label sequences with directions forgotten."""

    circles: Tuple[Tuple[str, ...], ...]


@dataclass(frozen=True)
class AbstractGraph:
    """Underlying multigraph: labelled edges over vertex indices, loops allowed."""

    vertex_count: int
    edges: Tuple[Tuple[int, int, str], ...]  # (u, v, label) with u <= v

    def degree(self, v: int) -> int:
        return sum((u == v) + (x == v) for u, x, _ in self.edges)


def to_rotation(ap: ArrowPresentation) -> RotationSystem:
    occ = occurrences(ap)
    half_ids: Dict[Occ, str] = {}
    edges: Dict[str, Tuple[Tuple[str, str], int]] = {}
    for lbl, (a, b) in ((l, tuple(o)) for l, o in occ.items()):
        ha, hb = f"{lbl}.a", f"{lbl}.b"
        half_ids[a], half_ids[b] = ha, hb
        twist = 0 if _sign(ap, a) == _sign(ap, b) else 1
        edges[lbl] = ((ha, hb), twist)
    vertices = tuple(
        tuple(half_ids[(ci, ai)] for ai in range(len(circle)))
        for ci, circle in enumerate(ap.circles)
    )
    return RotationSystem(vertices, edges)


def from_rotation(rs: RotationSystem) -> ArrowPresentation:
    half_sign: Dict[str, int] = {}
    for lbl, ((ha, hb), twist) in rs.edges.items():
        half_sign[ha] = 1
        half_sign[hb] = 1 if twist == 0 else -1
    circles = []
    for rotation in rs.vertices:
        circle = []
        for hid in rotation:
            lbl = hid.rsplit(".", 1)[0]
            circle.append((lbl, half_sign[hid]))
        circles.append(tuple(circle))
    return ArrowPresentation(tuple(circles)).check()


def underlying_map(ap: ArrowPresentation) -> CombinatorialMap:
    return CombinatorialMap(tuple(tuple(lbl for lbl, _ in c) for c in ap.circles))


def underlying_abstract(ap: ArrowPresentation) -> AbstractGraph:
    occ = occurrences(ap)
    edges = []
    for lbl in sorted(occ):
        (c1, _), (c2, _) = occ[lbl]
        u, v = sorted((c1, c2))
        edges.append((u, v, lbl))
    return AbstractGraph(len(ap.circles), tuple(edges))


# ---------------------------------------------------------------------------
# invariants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantRecord:
    v: int
    e: int
    f: int
    k: int
    orientable: bool

    @property
    def r(self) -> int:
        return self.v - self.k

    @property
    def n(self) -> int:
        return self.e - self.r

    @property
    def euler_genus(self) -> int:
        return 2 * self.k - self.v + self.e - self.f

    @property
    def genus(self) -> int:
        return self.euler_genus // 2 if self.orientable else self.euler_genus

    def as_dict(self) -> dict:
        return {
            "v": self.v, "e": self.e, "f": self.f, "k": self.k,
            "r": self.r, "n": self.n, "euler_genus": self.euler_genus,
            "genus": self.genus, "orientable": self.orientable,
        }


def component_count(ap: ArrowPresentation) -> int:
    parent = list(range(len(ap.circles)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, (a, b) in occurrences(ap).items():
        ra, rb = find(a[0]), find(b[0])
        if ra != rb:
            parent[ra] = rb
    return len({find(i) for i in range(len(ap.circles))})


def is_orientable(ap: ArrowPresentation) -> bool:
    """Orientable iff some re-reading of the circles clears every twist bit.

    A loop's bit is reading-invariant, so a twisted loop is always fatal; for
    the rest the bits must form a trivial cocycle over the circle set.
    """
    occ = occurrences(ap)
    adj: Dict[int, List[Tuple[int, int]]] = {i: [] for i in range(len(ap.circles))}
    for lbl, (a, b) in occ.items():
        bit = 0 if _sign(ap, a) == _sign(ap, b) else 1
        if a[0] == b[0]:
            if bit:
                return False
            continue
        adj[a[0]].append((b[0], bit))
        adj[b[0]].append((a[0], bit))
    colour: Dict[int, int] = {}
    for root in range(len(ap.circles)):
        if root in colour:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v, bit in adj[u]:
                want = colour[u] ^ bit
                if v not in colour:
                    colour[v] = want
                    stack.append(v)
                elif colour[v] != want:
                    return False
    return True


def invariants(ap: ArrowPresentation) -> InvariantRecord:
    return InvariantRecord(
        v=len(ap.circles),
        e=ap.edge_count(),
        f=face_count(ap),
        k=component_count(ap),
        orientable=is_orientable(ap),
    )


def is_plane(ap: ArrowPresentation) -> bool:
    inv = invariants(ap)
    return inv.euler_genus == 0 and inv.orientable


# ---------------------------------------------------------------------------
# edge surgery
# ---------------------------------------------------------------------------


def delete_edge(ap: ArrowPresentation, label: str) -> ArrowPresentation:
    """Remove both arrows of ``label``, splicing their arcs; circles survive."""
    if not ap.has_label(label):
        raise RibbonError(f"unknown label {label!r}")
    circles = tuple(
        tuple(a for a in circle if a[0] != label) for circle in ap.circles
    )
    return ArrowPresentation(circles)


def delete_edges(ap: ArrowPresentation, labels) -> ArrowPresentation:
    drop = set(labels)
    unknown = drop - set(ap.labels())
    if unknown:
        raise RibbonError(f"unknown labels {sorted(unknown)!r}")
    circles = tuple(
        tuple(a for a in circle if a[0] not in drop) for circle in ap.circles
    )
    return ArrowPresentation(circles)


def spanning_subgraph(ap: ArrowPresentation, keep) -> ArrowPresentation:
    """Spanning subgraph on the given edge set: all circles, other edges gone."""
    keep = set(keep)
    circles = tuple(
        tuple(a for a in circle if a[0] in keep) for circle in ap.circles
    )
    return ArrowPresentation(circles)


def relabel(ap: ArrowPresentation, mapping: Dict[str, str]) -> ArrowPresentation:
    circles = tuple(
        tuple((mapping.get(lbl, lbl), s) for lbl, s in circle) for circle in ap.circles
    )
    return ArrowPresentation(circles).check()


def add_isolated_vertices(ap: ArrowPresentation, count: int) -> ArrowPresentation:
    return ArrowPresentation(ap.circles + ((),) * count)
