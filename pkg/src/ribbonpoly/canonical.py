"""Canonical forms and equivalence tests for embedded graphs.

Embedded equivalence is generated by relabelling, flipping both arrows of a
label, rotating a circle's reading start, and reflecting a circle (reverse
its cyclic order and negate its arrow directions).  Reflection of a single
circle is the vertex-flip move; together with label pair-flips it realizes
every homeomorphism of the ribbon-graph surface, and it is what makes the
count of one-edge embedded graphs come out to exactly three.

The canonical representative is the lexicographically least serialization
over all these choices, found by a depth-first search with prefix pruning.
Feasible at desk scale (up to roughly eight edges).

Map equivalence forgets arrow directions and quotients by relabelling,
rotations and, in the default achiral mode, a simultaneous reflection of all
circles in a connected component.  Abstract equivalence is plain multigraph
isomorphism by exhaustive search.
"""

from __future__ import annotations

import functools
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from .arrows import (
    AbstractGraph,
    ArrowPresentation,
    RibbonError,
    occurrences,
    underlying_abstract,
    underlying_map,
)

CircleKey = Tuple[Tuple[int, int], ...]


def _components(ap: ArrowPresentation) -> List[List[int]]:
    n = len(ap.circles)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for _, (a, b) in occurrences(ap).items():
        ra, rb = find(a[0]), find(b[0])
        if ra != rb:
            parent[ra] = rb
    groups: Dict[int, List[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _circle_variants(circle: Sequence[Tuple[str, int]]):
    """All rotations of the circle and of its reflection."""
    k = len(circle)
    if k == 0:
        yield []
        return
    fwd = list(circle)
    rev = [(lbl, -s) for lbl, s in reversed(fwd)]
    for base in (fwd, rev):
        for r in range(k):
            yield base[r:] + base[:r]


def _emit(variant, labelmap: Dict[str, Tuple[int, int]], next_idx: int):
    """Serialize one circle variant, extending the label map.

    The first occurrence of a label fixes its index and its flip gauge so it
    reads +1; the second occurrence then encodes the relative direction.
    """
    lm = dict(labelmap)
    idx = next_idx
    out = []
    for lbl, s in variant:
        if lbl not in lm:
            lm[lbl] = (idx, s)
            idx += 1
            out.append((lm[lbl][0], 1))
        else:
            j, flip = lm[lbl]
            out.append((j, s * flip))
    return tuple(out), lm, idx


def _canonical_component(circles: List[Sequence[Tuple[str, int]]]):
    """Lex-least (circle keys, label map) for one connected component."""
    best: Optional[List[CircleKey]] = None
    best_map: Dict[str, int] = {}
    n = len(circles)

    def rec(chosen: List[CircleKey], labelmap, next_idx, remaining):
        nonlocal best, best_map
        depth = len(chosen)
        if best is not None and chosen and chosen[depth - 1] > best[depth - 1]:
            return
        if best is not None and chosen and chosen[depth - 1] < best[depth - 1]:
            best = None  # prefix strictly better: current branch supersedes
        if not remaining:
            if best is None or chosen < best:
                best = list(chosen)
                best_map = {lbl: j for lbl, (j, _) in labelmap.items()}
            return
        for ci in list(remaining):
            rest = remaining - {ci}
            for variant in _circle_variants(circles[ci]):
                key, lm, idx = _emit(variant, labelmap, next_idx)
                if best is not None and depth < len(best):
                    if key > best[depth]:
                        continue
                chosen.append(key)
                rec(chosen, lm, idx, rest)
                chosen.pop()

    rec([], {}, 0, frozenset(range(n)))
    assert best is not None
    return tuple(best), best_map


def _canonical_full(ap: ArrowPresentation):
    comps = _components(ap)
    results = []
    for comp in comps:
        circles = [ap.circles[i] for i in comp]
        key, lmap = _canonical_component(circles)
        results.append((key, lmap))
    results.sort(key=lambda kv: kv[0])
    offset = 0
    out_circles: List[Tuple[Tuple[str, int], ...]] = []
    full_map: Dict[str, str] = {}
    full_key: List[CircleKey] = []
    for key, lmap in results:
        for circle_key in key:
            out_circles.append(tuple((f"e{j + 1 + offset}", s) for j, s in circle_key))
        for lbl, j in lmap.items():
            full_map[lbl] = f"e{j + 1 + offset}"
        full_key.extend(
            tuple((j + offset, s) for j, s in circle_key) for circle_key in key
        )
        offset += len(lmap)
    return ArrowPresentation(tuple(out_circles)), full_map, tuple(full_key)


@functools.lru_cache(maxsize=262144)
def _canonical_cached(ap: ArrowPresentation):
    return _canonical_full(ap)


def _labelled_component_key(circles: List[Sequence[Tuple[str, int]]]):
    """Lex-least serialization holding labels fixed (no relabelling move).

    Pair flips are still free, so the first emitted occurrence of each label
    is normalized to +1.
    """
    best: Optional[List[Tuple[Tuple[str, int], ...]]] = None
    n = len(circles)

    def rec(chosen, flips, remaining):
        nonlocal best
        depth = len(chosen)
        if best is not None and chosen and chosen[depth - 1] > best[depth - 1]:
            return
        if best is not None and chosen and chosen[depth - 1] < best[depth - 1]:
            best = None
        if not remaining:
            if best is None or chosen < best:
                best = list(chosen)
            return
        for ci in list(remaining):
            rest = remaining - {ci}
            for variant in _circle_variants(circles[ci]):
                fl = dict(flips)
                key = []
                for lbl, s in variant:
                    if lbl not in fl:
                        fl[lbl] = s
                        key.append((lbl, 1))
                    else:
                        key.append((lbl, s * fl[lbl]))
                key = tuple(key)
                if best is not None and depth < len(best) and key > best[depth]:
                    continue
                chosen.append(key)
                rec(chosen, fl, rest)
                chosen.pop()

    rec([], {}, frozenset(range(n)))
    assert best is not None
    return tuple(best)


@functools.lru_cache(maxsize=131072)
def canonical_labelled_key(ap: ArrowPresentation):
    """Identity of the embedded graph with its edge labelling held fixed."""
    keys = []
    for comp in _components(ap):
        keys.append(_labelled_component_key([ap.circles[i] for i in comp]))
    return tuple(sorted(keys))


def equivalent_labelled(a: ArrowPresentation, b: ArrowPresentation) -> bool:
    """Embedded equality respecting the edge identification (no relabelling)."""
    return canonical_labelled_key(a) == canonical_labelled_key(b)


def canonical_embedded(ap: ArrowPresentation) -> ArrowPresentation:
    return _canonical_cached(ap)[0]


def canonical_with_map(ap: ArrowPresentation) -> Tuple[ArrowPresentation, Dict[str, str]]:
    form, lmap, _ = _canonical_cached(ap)
    return form, dict(lmap)


def canonical_key(ap: ArrowPresentation):
    """Hashable identity of the embedded-equivalence class."""
    return _canonical_cached(ap)[2]


# ---------------------------------------------------------------------------
# map-level canonical form
# ---------------------------------------------------------------------------


def _map_component_key(circles: List[Tuple[str, ...]], reflections: Sequence[bool]):
    best: Optional[List[Tuple[int, ...]]] = None
    n = len(circles)

    def variants(ci: int):
        base = list(circles[ci])
        if not base:
            yield []
            return
        if reflections[ci]:
            base = list(reversed(base))
        for r in range(len(base)):
            yield base[r:] + base[:r]

    def rec(chosen, labelmap, next_idx, remaining):
        nonlocal best
        depth = len(chosen)
        if best is not None and chosen and chosen[depth - 1] > best[depth - 1]:
            return
        if best is not None and chosen and chosen[depth - 1] < best[depth - 1]:
            best = None
        if not remaining:
            if best is None or chosen < best:
                best = list(chosen)
            return
        for ci in list(remaining):
            rest = remaining - {ci}
            for variant in variants(ci):
                lm = dict(labelmap)
                idx = next_idx
                key = []
                for lbl in variant:
                    if lbl not in lm:
                        lm[lbl] = idx
                        idx += 1
                    key.append(lm[lbl])
                key = tuple(key)
                if best is not None and depth < len(best) and key > best[depth]:
                    continue
                chosen.append(key)
                rec(chosen, lm, idx, rest)
                chosen.pop()

    rec([], {}, 0, frozenset(range(n)))
    assert best is not None
    return tuple(best)


@functools.lru_cache(maxsize=131072)
def canonical_map_key(ap: ArrowPresentation, chiral: bool = False):
    """Identity of the combinatorial-map class (achiral by default)."""
    cmap = underlying_map(ap)
    comps = _components(ap)
    keys = []
    for comp in comps:
        circles = [cmap.circles[i] for i in comp]
        k = _map_component_key(circles, [False] * len(circles))
        if not chiral:
            k = min(k, _map_component_key(circles, [True] * len(circles)))
        keys.append(k)
    return tuple(sorted(keys))


# ---------------------------------------------------------------------------
# abstract-graph isomorphism and properties
# ---------------------------------------------------------------------------


def abstract_iso(g: AbstractGraph, h: AbstractGraph) -> bool:
    if g.vertex_count != h.vertex_count or len(g.edges) != len(h.edges):
        return False

    def profile(graph: AbstractGraph):
        from collections import Counter

        deg = Counter()
        loops = Counter()
        for u, v, _ in graph.edges:
            if u == v:
                loops[u] += 1
                deg[u] += 2
            else:
                deg[u] += 1
                deg[v] += 1
        return deg, loops

    gd, gl = profile(g)
    hd, hl = profile(h)
    if sorted(gd.values()) != sorted(hd.values()):
        return False
    if sorted(gl.values()) != sorted(hl.values()):
        return False

    def multiset(graph: AbstractGraph):
        from collections import Counter

        return Counter((u, v) for u, v, _ in graph.edges)

    gm = multiset(g)
    n = g.vertex_count
    hm = multiset(h)
    for perm in permutations(range(n)):
        ok = True
        for v in range(n):
            if gd.get(v, 0) != hd.get(perm[v], 0) or gl.get(v, 0) != hl.get(perm[v], 0):
                ok = False
                break
        if not ok:
            continue
        from collections import Counter

        mapped = Counter(tuple(sorted((perm[u], perm[v]))) for (u, v) in gm.elements())
        if mapped == hm:
            return True
    return False


def is_bipartite(g: AbstractGraph) -> bool:
    """Loops count as odd cycles; parallel edges are harmless."""
    colour: Dict[int, int] = {}
    adj: Dict[int, List[int]] = {i: [] for i in range(g.vertex_count)}
    for u, v, _ in g.edges:
        if u == v:
            return False
        adj[u].append(v)
        adj[v].append(u)
    for root in range(g.vertex_count):
        if root in colour:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in colour:
                    colour[v] = colour[u] ^ 1
                    stack.append(v)
                elif colour[v] == colour[u]:
                    return False
    return True


def equivalent(a: ArrowPresentation, b: ArrowPresentation, level: str = "embedded",
               chiral_maps: bool = False) -> bool:
    if level == "embedded":
        return canonical_key(a) == canonical_key(b)
    if level == "map":
        return canonical_map_key(a, chiral_maps) == canonical_map_key(b, chiral_maps)
    if level == "abstract":
        return abstract_iso(underlying_abstract(a), underlying_abstract(b))
    raise ValueError(f"unknown equivalence level {level!r}")


# ---------------------------------------------------------------------------
# exhaustive enumeration of small embedded graphs
# ---------------------------------------------------------------------------


def _partitions(total: int, most: Optional[int] = None):
    if total == 0:
        yield []
        return
    if most is None:
        most = total
    for part in range(min(total, most), 0, -1):
        for rest in _partitions(total - part, part):
            yield [part] + rest


def _matchings(items: List[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for more in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + more


def enumerate_graphs(n: int, max_edges: int = 4) -> List[ArrowPresentation]:
    """All embedded-equivalence classes with exactly ``n`` edges.

    Brute force over circle partitions of the 2n arrow slots, slot pairings,
    and relative directions, deduplicated by canonical form.  No arrowless
    circles are included.
    """
    if n > max_edges:
        raise RibbonError(f"enumeration bound exceeded: {n} > {max_edges}")
    if n == 0:
        return []
    seen = {}
    slots = 2 * n
    for sizes in _partitions(slots):
        bounds = []
        start = 0
        for s in sizes:
            bounds.append((start, start + s))
            start += s
        for matching in _matchings(list(range(slots))):
            for signbits in range(1 << n):
                arrows: Dict[int, Tuple[str, int]] = {}
                for j, (p, q) in enumerate(matching):
                    lbl = f"e{j + 1}"
                    s2 = 1 if not (signbits >> j) & 1 else -1
                    arrows[p] = (lbl, 1)
                    arrows[q] = (lbl, s2)
                circles = tuple(
                    tuple(arrows[pos] for pos in range(lo, hi)) for lo, hi in bounds
                )
                ap = ArrowPresentation(circles)
                key = canonical_key(ap)
                if key not in seen:
                    seen[key] = canonical_embedded(ap)
    return sorted(seen.values(), key=lambda a: str(a))


def graphs_up_to(n: int, max_edges: int = 4) -> List[ArrowPresentation]:
    out: List[ArrowPresentation] = []
    for k in range(1, n + 1):
        out.extend(enumerate_graphs(k, max_edges=max_edges))
    return out
