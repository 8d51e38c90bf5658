"""Graph polynomials of embedded graphs, each with independent routes.

All arithmetic is exact (integer coefficients, doubled exponents for the
half-integer powers of the signed polynomial).  Wherever a polynomial has
both a state-sum and a recursive or subset route, both are implemented and
the test suite holds them equal.

Weight systems assign each edge an ordered triple (white split, black split,
crossing) of ring values; the ribbon group permutes the triple positions
through the usual isomorphism with the symmetric group on three letters.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from .arrows import (
    AbstractGraph,
    ArrowPresentation,
    RibbonError,
    face_count,
    invariants,
    is_plane,
    spanning_subgraph,
    underlying_abstract,
)
from .canonical import canonical_with_map
from .duality import apply_word, contract, triple_action, twist_edges
from .laurent import LaurentPoly, ONE

WeightTriple = Tuple[LaurentPoly, LaurentPoly, LaurentPoly]
WeightSystem = Dict[str, WeightTriple]

_STATE_INDEX = {"wh": 0, "bl": 1, "cr": 2}


# ---------------------------------------------------------------------------
# weight systems
# ---------------------------------------------------------------------------


def symbolic_weights(ap: ArrowPresentation) -> WeightSystem:
    return {
        lbl: (
            LaurentPoly.var(f"alpha_{lbl}"),
            LaurentPoly.var(f"beta_{lbl}"),
            LaurentPoly.var(f"gamma_{lbl}"),
        )
        for lbl in ap.labels()
    }


def constant_weights(ap: ArrowPresentation, white: int, black: int, crossing: int) -> WeightSystem:
    triple = (LaurentPoly.const(white), LaurentPoly.const(black), LaurentPoly.const(crossing))
    return {lbl: triple for lbl in ap.labels()}


def penrose_weights(ap: ArrowPresentation) -> WeightSystem:
    return constant_weights(ap, 1, 0, -1)


def z_weights(ap: ArrowPresentation) -> WeightSystem:
    one = ONE
    zero = LaurentPoly()
    return {lbl: (LaurentPoly.var(f"b_{lbl}"), one, zero) for lbl in ap.labels()}


def permute_weights(weights: WeightSystem, gamma: Mapping[str, str]) -> WeightSystem:
    out = dict(weights)
    for lbl, element in gamma.items():
        if lbl not in out:
            raise RibbonError(f"no weight triple for edge {lbl!r}")
        out[lbl] = triple_action(element, out[lbl])
    return out


# ---------------------------------------------------------------------------
# the transition polynomial
# ---------------------------------------------------------------------------


def transition_statesum(ap: ArrowPresentation, weights: WeightSystem,
                        tvar: str = "t", max_edges: int = 10) -> LaurentPoly:
    """Sum over the 3^e medial graph states of weight times t^components."""
    labels = ap.labels()
    if len(labels) > max_edges:
        raise RibbonError(f"state sum bound exceeded: {len(labels)} > {max_edges} edges")
    missing = [l for l in labels if l not in weights]
    if missing:
        raise RibbonError(f"missing weight triples for {missing!r}")
    total = LaurentPoly()
    for combo in itertools.product(("wh", "bl", "cr"), repeat=len(labels)):
        keep = [l for l, st in zip(labels, combo) if st != "bl"]
        reduced = spanning_subgraph(ap, keep)
        reduced = twist_edges(
            reduced, [l for l, st in zip(labels, combo) if st == "cr"])
        c = face_count(reduced)
        term = LaurentPoly.var(tvar, 2 * c)
        for lbl, st in zip(labels, combo):
            term = term * weights[lbl][_STATE_INDEX[st]]
            if term.is_zero():
                break
        total = total + term
    return total


def _rename_edge_vars(poly: LaurentPoly, label_map: Mapping[str, str]) -> LaurentPoly:
    """Rename per-edge symbols ``<base>_<label>`` along a label bijection."""
    vmap: Dict[str, str] = {}
    for var in poly.variables():
        best: Optional[str] = None
        for old in label_map:
            if var.endswith("_" + old) and len(var) > len(old) + 1:
                if best is None or len(old) > len(best):
                    best = old
        if best is not None:
            vmap[var] = var[: -len(best)] + label_map[best]
    return poly.rename_vars(vmap) if vmap else poly


def _triple_signature(triple: WeightTriple, label_map: Mapping[str, str]):
    return tuple(_rename_edge_vars(p, label_map).to_text() for p in triple)


def transition_recursive(ap: ArrowPresentation, weights: WeightSystem,
                         tvar: str = "t",
                         memo: Optional[dict] = None) -> LaurentPoly:
    """Edge recursion with memoization on canonical forms.

    At an edge e the polynomial splits into the white, black and crossing
    resolutions: contract, delete, and twist-then-contract.  Memo entries are
    stored under the canonical embedded form with the per-edge weight symbols
    re-indexed along the canonical relabelling, then renamed back on a hit.
    """
    if memo is None:
        memo = {}

    def rec(g: ArrowPresentation) -> LaurentPoly:
        labels = g.labels()
        if not labels:
            return LaurentPoly.var(tvar, 2 * len(g.circles))
        canon, cmap = canonical_with_map(g)
        signature = (
            str(canon),
            tuple(sorted((cmap[l], _triple_signature(weights[l], cmap)) for l in labels)),
        )
        inverse = {v: k for k, v in cmap.items()}
        hit = memo.get(signature)
        if hit is not None:
            return _rename_edge_vars(hit, inverse)
        e = labels[0]
        wh, bl, cr = weights[e]
        result = LaurentPoly()
        if not wh.is_zero():
            result = result + wh * rec(contract(g, e))
        if not bl.is_zero():
            result = result + bl * rec(
                spanning_subgraph(g, [l for l in labels if l != e]))
        if not cr.is_zero():
            result = result + cr * rec(contract(apply_word(g, e, "t"), e))
        memo[signature] = _rename_edge_vars(result, cmap)
        return result

    missing = [l for l in ap.labels() if l not in weights]
    if missing:
        raise RibbonError(f"missing weight triples for {missing!r}")
    return rec(ap)


# ---------------------------------------------------------------------------
# the Penrose polynomial (three routes)
# ---------------------------------------------------------------------------


def penrose(ap: ArrowPresentation, var: str = "x") -> LaurentPoly:
    """Penrose polynomial via the twist-subset expansion (the cheap route)."""
    labels = ap.labels()
    total = LaurentPoly()
    for r in range(len(labels) + 1):
        for subset in itertools.combinations(labels, r):
            f = face_count(twist_edges(ap, subset))
            total = total + LaurentPoly.var(var, 2 * f, coeff=(-1) ** r)
    return total


def penrose_statesum(ap: ArrowPresentation, var: str = "x") -> LaurentPoly:
    return transition_statesum(ap, penrose_weights(ap), tvar=var)


def penrose_recursive(ap: ArrowPresentation, var: str = "x") -> LaurentPoly:
    return transition_recursive(ap, penrose_weights(ap), tvar=var)


def penrose_chromatic_sum(ap: ArrowPresentation, var: str = "x") -> LaurentPoly:
    """Plane-only route: sum of chromatic polynomials of duals of twists."""
    if not is_plane(ap):
        raise RibbonError("the chromatic-sum route needs a plane graph")
    from .duality import geometric_dual

    labels = ap.labels()
    total = LaurentPoly()
    for r in range(len(labels) + 1):
        for subset in itertools.combinations(labels, r):
            dual = geometric_dual(twist_edges(ap, subset))
            total = total + chromatic(underlying_abstract(dual), var=var)
    return total


# ---------------------------------------------------------------------------
# chromatic polynomial of a multigraph
# ---------------------------------------------------------------------------


def chromatic(g: AbstractGraph, var: str = "x") -> LaurentPoly:
    """Deletion-contraction; a loop kills the polynomial."""

    def rec(n: int, edges: List[Tuple[int, int]]) -> LaurentPoly:
        for u, v in edges:
            if u == v:
                return LaurentPoly()
        if not edges:
            return LaurentPoly.var(var, 2 * n)
        (u, v), rest = edges[0], edges[1:]
        deleted = rec(n, rest)
        merged = []
        for a, b in rest:
            a2 = u if a == v else a
            b2 = u if b == v else b
            a2 = a2 - 1 if a2 > v else a2
            b2 = b2 - 1 if b2 > v else b2
            merged.append(tuple(sorted((a2, b2))))
        return deleted - rec(n - 1, merged)

    return rec(g.vertex_count, [(u, v) for u, v, _ in g.edges])


def count_proper_edge_colourings(g: AbstractGraph, k: int) -> int:
    """Brute force: edge colourings where edges sharing a vertex differ."""
    edges = [(u, v) for u, v, _ in g.edges]
    for u, v in edges:
        if u == v:
            return 0
    count = 0
    for combo in itertools.product(range(k), repeat=len(edges)):
        ok = True
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                if combo[i] == combo[j] and set(edges[i]) & set(edges[j]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            count += 1
    return count


# ---------------------------------------------------------------------------
# topochromatic polynomial and its relatives
# ---------------------------------------------------------------------------


def _subsets(labels: List[str]) -> Iterable[Tuple[str, ...]]:
    for r in range(len(labels) + 1):
        yield from itertools.combinations(labels, r)


def _check_subset_bound(ap: ArrowPresentation, max_edges: int):
    if ap.edge_count() > max_edges:
        raise RibbonError(
            f"subset expansion bound exceeded: {ap.edge_count()} > {max_edges} edges")


def topochromatic(ap: ArrowPresentation, max_edges: int = 12) -> LaurentPoly:
    """Spanning-subgraph sum  a^k(H) (prod b_e) c^f(H) w^t(H)."""
    _check_subset_bound(ap, max_edges)
    labels = ap.labels()
    total = LaurentPoly()
    for subset in _subsets(labels):
        h = spanning_subgraph(ap, subset)
        inv = invariants(h)
        powers = {"a": 2 * inv.k, "c": 2 * inv.f}
        if not inv.orientable:
            powers["w"] = 2
        for lbl in subset:
            powers[f"b_{lbl}"] = 2
        total = total + LaurentPoly.monomial(powers)
    return total


def bollobas_riordan(ap: ArrowPresentation, max_edges: int = 12) -> LaurentPoly:
    """Subset expansion (x-1)^(r-r(A)) y^n(A) z^eulerGenus(A) w^t(A)."""
    _check_subset_bound(ap, max_edges)
    labels = ap.labels()
    rG = invariants(ap).r
    xm1 = LaurentPoly.var("x") - ONE
    powers = [ONE]
    for _ in range(rG):
        powers.append(powers[-1] * xm1)
    total = LaurentPoly()
    for subset in _subsets(labels):
        h = spanning_subgraph(ap, subset)
        inv = invariants(h)
        mono = {"y": 2 * inv.n, "z": 2 * inv.euler_genus}
        if not inv.orientable:
            mono["w"] = 2
        total = total + powers[rG - inv.r] * LaurentPoly.monomial(mono)
    return total


def las_vergnas(ap: ArrowPresentation, max_edges: int = 12) -> LaurentPoly:
    """Subset expansion with the rank functions of the bond and circuit
    geometries translated to (x-1)^(r-r(A)) (y-1)^(n(A)-2g(A)) z^(2g(G)-2g(A)).

    Defined for orientable graphs, where the genus g is half the Euler genus.
    """
    _check_subset_bound(ap, max_edges)
    base = invariants(ap)
    if not base.orientable:
        raise RibbonError("the Las Vergnas polynomial needs an orientable graph")
    labels = ap.labels()
    xm1 = LaurentPoly.var("x") - ONE
    ym1 = LaurentPoly.var("y") - ONE
    total = LaurentPoly()
    gG = base.euler_genus // 2
    for subset in _subsets(labels):
        h = spanning_subgraph(ap, subset)
        inv = invariants(h)
        if inv.euler_genus % 2:
            raise AssertionError("orientable subgraph with odd Euler genus")
        gA = inv.euler_genus // 2
        term = (xm1 ** (base.r - inv.r)) * (ym1 ** (inv.n - 2 * gA))
        term = term * LaurentPoly.monomial({"z": 4 * (gG - gA)})
        total = total + term
    return total


def signed_topochromatic(ap: ArrowPresentation, signs: Mapping[str, int],
                         max_edges: int = 12) -> LaurentPoly:
    """Signed spanning-subgraph sum with half-integer exponents of q.

    The exponent of q is k(H) + (e-(H) - e-(complement))/2; the edge product
    runs over the positive edges of H and the negative edges of the
    complement.
    """
    _check_subset_bound(ap, max_edges)
    labels = ap.labels()
    missing = [l for l in labels if l not in signs]
    if missing:
        raise RibbonError(f"missing signs for {missing!r}")
    total = LaurentPoly()
    for subset in _subsets(labels):
        inside = set(subset)
        h = spanning_subgraph(ap, subset)
        inv = invariants(h)
        minus_in = sum(1 for l in inside if signs[l] < 0)
        minus_out = sum(1 for l in labels if l not in inside and signs[l] < 0)
        qexp2 = 2 * inv.k + (minus_in - minus_out)
        powers = {"q": qexp2, "c": 2 * inv.f}
        for lbl in labels:
            if (lbl in inside and signs[lbl] > 0) or (lbl not in inside and signs[lbl] < 0):
                powers[f"alpha_{lbl}"] = powers.get(f"alpha_{lbl}", 0) + 2
        total = total + LaurentPoly.monomial(powers)
    return total


def flip_signs_on(signs: Mapping[str, int], flipped: Iterable[str]) -> Dict[str, int]:
    out = dict(signs)
    for lbl in flipped:
        out[lbl] = -out[lbl]
    return out


# ---------------------------------------------------------------------------
# named evaluations used throughout the identity suite
# ---------------------------------------------------------------------------


def topochromatic_b_c(ap: ArrowPresentation) -> LaurentPoly:
    """Z(G; 1, b, c, 1): the two-variable-per-edge specialization."""
    return topochromatic(ap).substitute_one("a").substitute_one("w")


def quasi_tree_count(ap: ArrowPresentation) -> int:
    labels = ap.labels()
    return sum(
        1 for subset in _subsets(labels)
        if face_count(spanning_subgraph(ap, subset)) == 1
    )
