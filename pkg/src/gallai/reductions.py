"""Reducible configurations: detection, reduction, and decomposition lifting.

Five local patterns make a connected graph of maximum degree at most five
reducible: a smaller graph (or several) can be solved instead, and any good
decomposition of the pieces can be rewritten into a good decomposition of
the original graph.

C1  a degree-2 vertex whose two neighbours are not adjacent;
C2  a cut edge whose endpoints both have even degree;
C3  an edge between two degree-4 vertices with exactly two common
    neighbours;
C4  an edge between two degree-4 vertices whose side neighbourhoods each
    contain a non-adjacent pair, with distinct leftover vertices;
C5  a triangle with one degree-4 corner and the other corners of degree 2
    or 4.

``detect`` scans under the priority C1 < C2 < C3 < C4 < C5 with
ascending-id tie-breaking.  The priority is load-bearing: the C4 and C5
rewrite recipes are only guaranteed to apply when the earlier
configurations are absent, so ``reduce`` re-checks the facts it relies on
and fails loudly rather than patching around a priority violation.

Each reduction records a ``LiftPlan`` naming the sub-case it chose;
``lift`` replays the matching rewrite recipe on the children's
decompositions, verifies the result, and enforces the sub-case's path
accounting before returning it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Union

from .graphs import Edge, Graph, VertexMap, edge
from .paths import (
    Path,
    PathDecomposition,
    add_path,
    extend,
    paths_ending_at,
    replace_subpath,
    verify,
)
from .search import cover_with_paths


class ReductionError(RuntimeError):
    """An occurrence failed validation or no rewrite sub-case applies."""


class LiftError(ReductionError):
    """A lift recipe's precondition failed; never silently repaired."""


# -- occurrences -----------------------------------------------------------


@dataclass(frozen=True)
class C1:
    """Degree-2 vertex ``u`` with non-adjacent neighbours ``v`` and ``w``."""

    u: int
    v: int
    w: int
    tag = "C1"

    def validate(self, g: Graph) -> None:
        if g.degree(self.u) != 2 or set(g.neighbors(self.u)) != {self.v, self.w}:
            raise ReductionError(f"{self} does not match the neighbourhood")
        if g.has_edge(self.v, self.w):
            raise ReductionError(f"{self}: neighbours are adjacent")


@dataclass(frozen=True)
class C2:
    """Cut edge ``uv`` whose two endpoint degrees are both even."""

    u: int
    v: int
    tag = "C2"

    def validate(self, g: Graph) -> None:
        if not g.has_edge(self.u, self.v):
            raise ReductionError(f"{self} is not an edge")
        if g.degree(self.u) % 2 or g.degree(self.v) % 2:
            raise ReductionError(f"{self}: endpoint of odd degree")
        if edge(self.u, self.v) not in g.bridges():
            raise ReductionError(f"{self} is not a cut edge")


@dataclass(frozen=True)
class C3:
    """Edge ``uv``, both ends of degree 4, with exactly two common
    neighbours ``x`` and ``y``; ``u_extra``/``v_extra`` are the remaining
    private neighbours."""

    u: int
    v: int
    x: int
    y: int
    u_extra: int
    v_extra: int
    tag = "C3"

    def validate(self, g: Graph) -> None:
        if not g.has_edge(self.u, self.v):
            raise ReductionError(f"{self} is not an edge")
        if g.degree(self.u) != 4 or g.degree(self.v) != 4:
            raise ReductionError(f"{self}: degrees are not both 4")
        if set(g.common_neighbors(self.u, self.v)) != {self.x, self.y}:
            raise ReductionError(f"{self}: common neighbours mismatch")
        if set(g.neighbors(self.u)) != {self.v, self.x, self.y, self.u_extra}:
            raise ReductionError(f"{self}: u_extra mismatch")
        if set(g.neighbors(self.v)) != {self.u, self.x, self.y, self.v_extra}:
            raise ReductionError(f"{self}: v_extra mismatch")


@dataclass(frozen=True)
class C4:
    """Edge ``uv`` with both degrees 4, ``t1..t3``/``w1..w3`` the other
    neighbours of ``u``/``v``, where ``t1 t2`` and ``w1 w2`` are non-edges
    and ``t3 != w3``."""

    u: int
    v: int
    t1: int
    t2: int
    t3: int
    w1: int
    w2: int
    w3: int
    tag = "C4"

    def validate(self, g: Graph) -> None:
        if not g.has_edge(self.u, self.v):
            raise ReductionError(f"{self} is not an edge")
        if g.degree(self.u) != 4 or g.degree(self.v) != 4:
            raise ReductionError(f"{self}: degrees are not both 4")
        if set(g.neighbors(self.u)) != {self.v, self.t1, self.t2, self.t3}:
            raise ReductionError(f"{self}: t-side mismatch")
        if set(g.neighbors(self.v)) != {self.u, self.w1, self.w2, self.w3}:
            raise ReductionError(f"{self}: w-side mismatch")
        if g.has_edge(self.t1, self.t2) or g.has_edge(self.w1, self.w2):
            raise ReductionError(f"{self}: named non-edge is present")
        if self.t3 == self.w3:
            raise ReductionError(f"{self}: leftover vertices coincide")


@dataclass(frozen=True)
class C5:
    """Triangle ``uvw`` with degree(u) = 4 and the other two corners of
    degree 2 or 4."""

    u: int
    v: int
    w: int
    tag = "C5"

    def validate(self, g: Graph) -> None:
        for a, b in ((self.u, self.v), (self.u, self.w), (self.v, self.w)):
            if not g.has_edge(a, b):
                raise ReductionError(f"{self} is not a triangle")
        if g.degree(self.u) != 4:
            raise ReductionError(f"{self}: degree(u) != 4")
        for corner in (self.v, self.w):
            if g.degree(corner) not in (2, 4):
                raise ReductionError(f"{self}: corner degree not in {{2, 4}}")


Occurrence = Union[C1, C2, C3, C4, C5]

CONFIGURATION_TAGS = ("C1", "C2", "C3", "C4", "C5")

SUBCASES = {
    "C1": ("splice",),
    "C2": ("join",),
    "C3": ("sparse_ring", "full_ring", "partial_ring"),
    "C4": ("triple_common", "hub_split", "four_components", "paired_nonedges"),
    "C5": (
        "two_gaps",
        "one_gap",
        "common_triangle",
        "degree_two",
        "hub_contraction",
        "bridge_spread",
    ),
}


# -- detection -------------------------------------------------------------


def detect_c1(g: Graph) -> C1 | None:
    for u in range(g.n):
        if g.degree(u) == 2:
            v, w = g.neighbors(u)
            if not g.has_edge(v, w):
                return C1(u, v, w)
    return None


def detect_c2(g: Graph) -> C2 | None:
    cut = g.bridges()
    for u, v in g.edges():
        if (u, v) in cut and g.degree(u) % 2 == 0 and g.degree(v) % 2 == 0:
            return C2(u, v)
    return None


def detect_c3(g: Graph) -> C3 | None:
    for u, v in g.edges():
        if g.degree(u) != 4 or g.degree(v) != 4:
            continue
        commons = g.common_neighbors(u, v)
        if len(commons) != 2:
            continue
        x, y = commons
        (u_extra,) = set(g.neighbors(u)) - {v, x, y}
        (v_extra,) = set(g.neighbors(v)) - {u, x, y}
        return C3(u, v, x, y, u_extra, v_extra)
    return None


def detect_c4(g: Graph) -> C4 | None:
    for u, v in g.edges():
        if g.degree(u) != 4 or g.degree(v) != 4:
            continue
        ts = sorted(set(g.neighbors(u)) - {v})
        ws = sorted(set(g.neighbors(v)) - {u})
        for t1, t2 in itertools.combinations(ts, 2):
            if g.has_edge(t1, t2):
                continue
            (t3,) = set(ts) - {t1, t2}
            for w1, w2 in itertools.combinations(ws, 2):
                if g.has_edge(w1, w2):
                    continue
                (w3,) = set(ws) - {w1, w2}
                if t3 != w3:
                    return C4(u, v, t1, t2, t3, w1, w2, w3)
    return None


def detect_c5(g: Graph) -> C5 | None:
    for a in range(g.n):
        for b in g.neighbors(a):
            if b <= a:
                continue
            for c in g.common_neighbors(a, b):
                if c <= b:
                    continue
                degrees = {x: g.degree(x) for x in (a, b, c)}
                if any(d not in (2, 4) for d in degrees.values()):
                    continue
                fours = [x for x in (a, b, c) if degrees[x] == 4]
                if not fours:
                    continue
                u = fours[0]
                v, w = sorted({a, b, c} - {u})
                return C5(u, v, w)
    return None


_DETECTORS = (detect_c1, detect_c2, detect_c3, detect_c4, detect_c5)


def detect(g: Graph) -> Occurrence | None:
    """First occurrence under the priority C1 < C2 < C3 < C4 < C5."""
    for detector in _DETECTORS:
        occ = detector(g)
        if occ is not None:
            return occ
    return None


# -- reduction plumbing ------------------------------------------------------


@dataclass(frozen=True)
class Child:
    """One reduced graph plus the relabelling that produced it; synthetic
    edges (present in the child but not the parent) are in child ids."""

    graph: Graph
    vmap: VertexMap
    synthetic: tuple[Edge, ...] = ()


@dataclass(frozen=True)
class LiftPlan:
    tag: str
    subcase: str
    parent: Graph
    children: tuple[Child, ...]
    anchors: dict[str, int] = field(default_factory=dict)


@dataclass(frozen=True)
class ReducedInstance:
    children: tuple[tuple[Graph, VertexMap], ...]
    plan: LiftPlan


def _child(
    g: Graph, keep: set[int], synthetic_parent: tuple[Edge, ...] = ()
) -> Child:
    """Induced child on ``keep`` plus synthetic edges given in parent ids."""
    sub, vmap = g.delete_vertices(set(range(g.n)) - keep)
    synthetic = []
    for a, b in synthetic_parent:
        if g.has_edge(a, b):
            raise ReductionError(f"synthetic edge ({a}, {b}) exists in parent")
        ca, cb = vmap.new_id(a), vmap.new_id(b)
        sub = sub.add_edge(ca, cb)
        synthetic.append(edge(ca, cb))
    return Child(sub, vmap, tuple(synthetic))


def _finish(plan: LiftPlan) -> ReducedInstance:
    g = plan.parent
    total = 0
    for child in plan.children:
        if not child.graph.is_connected():
            raise ReductionError(f"{plan.tag}/{plan.subcase}: child disconnected")
        if child.graph.n >= g.n:
            raise ReductionError(f"{plan.tag}/{plan.subcase}: child not smaller")
        if child.graph.m and child.graph.max_degree() > max(5, g.max_degree()):
            raise ReductionError(f"{plan.tag}/{plan.subcase}: degree inflated")
        total += child.graph.n
    if total > g.n:
        raise ReductionError(f"{plan.tag}/{plan.subcase}: children too large")
    return ReducedInstance(
        tuple((c.graph, c.vmap) for c in plan.children), plan
    )


def reduce(g: Graph, occ: Occurrence) -> ReducedInstance:
    """Build the reduced graph(s) and the plan for lifting back."""
    occ.validate(g)
    build = {
        "C1": _reduce_c1,
        "C2": _reduce_c2,
        "C3": _reduce_c3,
        "C4": _reduce_c4,
        "C5": _reduce_c5,
    }[occ.tag]
    return _finish(build(g, occ))


# -- C1: splice the degree-2 vertex into the bypass edge ---------------------


def _reduce_c1(g: Graph, occ: C1) -> LiftPlan:
    keep = set(range(g.n)) - {occ.u}
    child = _child(g, keep, (edge(occ.v, occ.w),))
    anchors = {"u": occ.u, "v": occ.v, "w": occ.w}
    return LiftPlan("C1", "splice", g, (child,), anchors)


def _lift_c1(plan: LiftPlan, decomps: list[PathDecomposition]) -> PathDecomposition:
    a = plan.anchors
    d = _translate(decomps[0], plan.children[0].vmap)
    return _replace_edge(d, edge(a["v"], a["w"]), (a["v"], a["u"], a["w"]))


# -- C2: solve the two sides and join two of their paths ---------------------


def _reduce_c2(g: Graph, occ: C2) -> LiftPlan:
    cut = g.delete_edge(occ.u, occ.v)
    comps = cut.components()
    if len(comps) != 2:
        raise ReductionError(f"{occ}: deleting the edge left {len(comps)} parts")
    side_u = next(set(c) for c in comps if occ.u in c)
    side_v = set(range(g.n)) - side_u
    child_u = _child(cut, side_u)
    child_v = _child(cut, side_v)
    anchors = {"u": occ.u, "v": occ.v}
    return LiftPlan("C2", "join", g, (child_u, child_v), anchors)


def _lift_c2(plan: LiftPlan, decomps: list[PathDecomposition]) -> PathDecomposition:
    a = plan.anchors
    du = _translate(decomps[0], plan.children[0].vmap)
    dv = _translate(decomps[1], plan.children[1].vmap)
    ends_u = paths_ending_at(du, a["u"])
    ends_v = paths_ending_at(dv, a["v"])
    if not ends_u or not ends_v:
        raise LiftError("no path ends at a cut-edge endpoint of odd degree")
    pu, pv = ends_u[0], ends_v[0]
    joined = Path(_oriented(pu, last=a["u"]) + _oriented(pv, first=a["v"]))
    rest_u = tuple(p for p in du.paths if p != pu)
    rest_v = tuple(p for p in dv.paths if p != pv)
    return PathDecomposition(rest_u + rest_v + (joined,))


# -- C3: bypass two degree-4 endpoints around their common pair --------------


def _c3_relabel(occ: C3, swap_xy: bool, swap_uv: bool) -> C3:
    u, v, x, y, ue, ve = occ.u, occ.v, occ.x, occ.y, occ.u_extra, occ.v_extra
    if swap_xy:
        x, y = y, x
    if swap_uv:
        u, v = v, u
        ue, ve = ve, ue
    return C3(u, v, x, y, ue, ve)


def _c3_ring_edges(occ: C3) -> tuple[Edge, Edge, Edge, Edge]:
    return (
        edge(occ.x, occ.u_extra),
        edge(occ.u_extra, occ.y),
        edge(occ.y, occ.v_extra),
        edge(occ.v_extra, occ.x),
    )


# Relabelling (swap x/y, swap u/v) carrying ring position i to position 0.
_C3_TO_FRONT = {0: (False, False), 1: (True, False), 2: (True, True), 3: (False, True)}


def _reduce_c3(g: Graph, occ: C3) -> LiftPlan:
    present = [g.has_edge(*e) for e in _c3_ring_edges(occ)]
    keep = set(range(g.n)) - {occ.u, occ.v}
    if sum(present) <= 1:
        if sum(present) == 1:
            occ = _c3_relabel(occ, *_C3_TO_FRONT[present.index(True)])
        synthetic = [edge(occ.u_extra, occ.y), edge(occ.v_extra, occ.x)]
        # When the two bypass edges do not reconnect the remainder, the
        # x-y bridge is guaranteed absent from the parent and restores
        # connectivity.
        if not _child(g, keep, tuple(synthetic)).graph.is_connected():
            synthetic.append(edge(occ.x, occ.y))
        child = _child(g, keep, tuple(synthetic))
        subcase = "sparse_ring"
    elif sum(present) == 4:
        child = _child(g, keep)
        subcase = "full_ring"
    else:
        chosen = None
        for i, has in enumerate(present):
            if has:
                continue
            candidate = _c3_relabel(occ, *_C3_TO_FRONT[i])
            trial = _child(g, keep, (edge(candidate.x, candidate.u_extra),))
            if trial.graph.is_connected():
                chosen, occ = trial, candidate
                break
        if chosen is None:
            raise ReductionError(f"{occ}: no missing ring edge reconnects")
        child = chosen
        subcase = "partial_ring"
    anchors = {
        "u": occ.u,
        "v": occ.v,
        "x": occ.x,
        "y": occ.y,
        "u_extra": occ.u_extra,
        "v_extra": occ.v_extra,
    }
    return LiftPlan("C3", subcase, g, (child,), anchors)


def _lift_c3(plan: LiftPlan, decomps: list[PathDecomposition]) -> PathDecomposition:
    a = plan.anchors
    u, v, x, y, ue, ve = (a[k] for k in ("u", "v", "x", "y", "u_extra", "v_extra"))
    d = _translate(decomps[0], plan.children[0].vmap)
    if plan.subcase == "sparse_ring":
        if len(plan.children[0].synthetic) == 3:
            d = _lift_c3_sparse_with_bridge(plan, d)
        else:
            d = _replace_edge(d, edge(ve, x), (x, v, ve))
            d = _replace_edge(d, edge(ue, y), (ue, u, y))
            d = add_path(d, Path((x, u, v, y)))
    elif plan.subcase == "full_ring":
        d = _replace_edge(d, edge(x, ue), (x, v, u, ue))
        d = add_path(d, Path((ue, x, u, y, v, ve)))
    else:  # partial_ring
        d = _replace_edge(d, edge(x, ue), (x, v, u, ue))
        d = add_path(d, Path((x, u, y, v, ve)))
    return d


def _lift_c3_sparse_with_bridge(
    plan: LiftPlan, d: PathDecomposition
) -> PathDecomposition:
    """Sparse ring when the child also carries the synthetic x-y edge.

    Each synthetic edge is normally bypassed in place, but when the path
    holding x-y also holds a second synthetic edge at x or y, the bypasses
    would revisit an inserted vertex.  That host is then split into two
    paths carrying the same coverage, which still gains at most one path.
    """
    a = plan.anchors
    u, v, x, y, ue, ve = (a[k] for k in ("u", "v", "x", "y", "u_extra", "v_extra"))
    host = _path_with_edge(d, edge(x, y))
    hv = host.vertices
    if hv.index(x) > hv.index(y):
        hv = hv[::-1]
    i = hv.index(x)
    before_is_ve = i > 0 and hv[i - 1] == ve
    after_is_ue = i + 2 < len(hv) and hv[i + 2] == ue
    rest = tuple(p for p in d.paths if p != host)
    if before_is_ve and after_is_ue:
        part_a = Path(hv[: i - 1] + (ve, v, x, u, y))
        part_b = Path((y, v, u, ue) + hv[i + 3 :])
        return PathDecomposition(rest + (part_a, part_b))
    if before_is_ve:
        part_a = Path(hv[: i - 1] + (ve, v, x, u))
        part_b = Path((u, v, y) + hv[i + 2 :])
        d = PathDecomposition(rest + (part_a, part_b))
        return _replace_edge(d, edge(ue, y), (ue, u, y))
    if after_is_ue:
        part_a = Path(hv[i + 3 :][::-1] + (ue, u, y, v))
        part_b = Path((v, u, x) + hv[:i][::-1])
        d = PathDecomposition(rest + (part_a, part_b))
        return _replace_edge(d, edge(ve, x), (x, v, ve))
    d = _replace_edge(d, edge(x, y), (x, u, v, y))
    d = _replace_edge(d, edge(ve, x), (x, v, ve))
    return _replace_edge(d, edge(ue, y), (ue, u, y))


# -- C4: peel off two adjacent degree-4 vertices ------------------------------


def _reduce_c4(g: Graph, occ: C4) -> LiftPlan:
    u, v = occ.u, occ.v
    if edge(u, v) in g.bridges():
        raise ReductionError(f"{occ}: the edge is a cut edge (C2 was skipped)")
    commons = g.common_neighbors(u, v)
    if len(commons) == 2:
        raise ReductionError(f"{occ}: exactly two common neighbours (C3 present)")
    if len(commons) == 3:
        return _reduce_c4_triple(g, occ, commons)
    if len(_components_without(g, {u})) >= 3:
        return _reduce_c4_hub(g, occ, u, v)
    if len(_components_without(g, {v})) >= 3:
        return _reduce_c4_hub(g, occ, v, u)
    if len(_components_without(g, {u, v})) >= 4:
        return _reduce_c4_four(g, occ)
    return _reduce_c4_paired(g, occ)


def _components_without(g: Graph, drop: set[int]) -> list[tuple[int, ...]]:
    """Components of g minus ``drop``, each given in parent ids."""
    sub, vmap = g.delete_vertices(drop)
    return [
        tuple(sorted(vmap.old_id(x) for x in comp)) for comp in sub.components()
    ]


def _reduce_c4_triple(g: Graph, occ: C4, commons: tuple[int, ...]) -> LiftPlan:
    nonedges = [
        (a, b)
        for a, b in itertools.combinations(sorted(commons), 2)
        if not g.has_edge(a, b)
    ]
    if len(nonedges) < 2:
        raise ReductionError(f"{occ}: common triple has fewer than two gaps")
    first, second = nonedges[0], nonedges[1]
    (y,) = set(first) & set(second)
    (x,) = set(first) - {y}
    (z,) = set(second) - {y}
    keep = set(range(g.n)) - {occ.u, occ.v}
    child = _child(g, keep, (edge(x, y), edge(y, z)))
    anchors = {"u": occ.u, "v": occ.v, "x": x, "y": y, "z": z}
    return LiftPlan("C4", "triple_common", g, (child,), anchors)


def _reduce_c4_hub(g: Graph, occ: C4, hub: int, other: int) -> LiftPlan:
    side = sorted(set(g.neighbors(hub)) - {other})
    comps = _components_without(g, {hub})
    lone = [c for c in comps if other not in c]
    main = [c for c in comps if other in c]
    if len(lone) != 2 or len(main) != 1:
        raise ReductionError(f"{occ}: unexpected split around the hub")
    t_lone = [[t for t in side if t in c] for c in lone]
    t_main = [t for t in side if t in main[0]]
    if any(len(ts) != 1 for ts in t_lone) or len(t_main) != 1:
        raise ReductionError(f"{occ}: hub neighbours spread unexpectedly")
    t1, t2, t3 = t_lone[0][0], t_lone[1][0], t_main[0]
    pair = _child(g, set(lone[0]) | set(lone[1]), (edge(t1, t2),))
    rest = _child(g, set(main[0]))
    anchors = {"hub": hub, "other": other, "t1": t1, "t2": t2, "t3": t3}
    return LiftPlan("C4", "hub_split", g, (pair, rest), anchors)


def _reduce_c4_four(g: Graph, occ: C4) -> LiftPlan:
    u, v = occ.u, occ.v
    ts = set(g.neighbors(u)) - {v}
    ws = set(g.neighbors(v)) - {u}
    comps = _components_without(g, {u, v})
    if len(comps) != 4:
        raise ReductionError(f"{occ}: expected exactly four components")
    both = [c for c in comps if set(c) & ts and set(c) & ws]
    only_t = [c for c in comps if set(c) & ts and not set(c) & ws]
    only_w = [c for c in comps if set(c) & ws and not set(c) & ts]
    if len(both) != 2 or len(only_t) != 1 or len(only_w) != 1:
        raise ReductionError(f"{occ}: component split does not match")
    (t1,) = set(both[0]) & ts
    (w1,) = set(both[0]) & ws
    (t2,) = set(both[1]) & ts
    (w2,) = set(both[1]) & ws
    (t3,) = set(only_t[0]) & ts
    (w3,) = set(only_w[0]) & ws
    near = _child(g, set(both[0]) | set(both[1]), (edge(t1, t2), edge(w1, w2)))
    far = _child(g, set(only_t[0]) | set(only_w[0]), (edge(t3, w3),))
    anchors = {
        "u": u, "v": v, "t1": t1, "t2": t2, "t3": t3,
        "w1": w1, "w2": w2, "w3": w3,
    }
    return LiftPlan("C4", "four_components", g, (near, far), anchors)


def _reduce_c4_paired(g: Graph, occ: C4) -> LiftPlan:
    u, v = occ.u, occ.v
    ts = sorted(set(g.neighbors(u)) - {v})
    ws = sorted(set(g.neighbors(v)) - {u})
    keep = set(range(g.n)) - {u, v}
    for t1, t2 in itertools.combinations(ts, 2):
        if g.has_edge(t1, t2):
            continue
        (t3,) = set(ts) - {t1, t2}
        for w1, w2 in itertools.combinations(ws, 2):
            if g.has_edge(w1, w2):
                continue
            (w3,) = set(ws) - {w1, w2}
            if t3 == w3:
                continue
            child = _child(g, keep, (edge(t1, t2), edge(w1, w2)))
            if child.graph.is_connected():
                anchors = {
                    "u": u, "v": v, "t1": t1, "t2": t2, "t3": t3,
                    "w1": w1, "w2": w2, "w3": w3,
                }
                return LiftPlan("C4", "paired_nonedges", g, (child,), anchors)
    raise ReductionError(f"{occ}: no reconnecting relabelling exists")


def _lift_c4(plan: LiftPlan, decomps: list[PathDecomposition]) -> PathDecomposition:
    a = plan.anchors
    if plan.subcase == "triple_common":
        d = _translate(decomps[0], plan.children[0].vmap)
        d = _replace_edge(d, edge(a["x"], a["y"]), (a["x"], a["u"], a["y"]))
        d = _replace_edge(d, edge(a["y"], a["z"]), (a["y"], a["v"], a["z"]))
        return add_path(d, Path((a["x"], a["v"], a["u"], a["z"])))
    if plan.subcase == "hub_split":
        return _lift_c4_hub(plan, decomps)
    if plan.subcase == "four_components":
        near = _translate(decomps[0], plan.children[0].vmap)
        far = _translate(decomps[1], plan.children[1].vmap)
        near = _replace_edge(near, edge(a["t1"], a["t2"]), (a["t1"], a["u"], a["t2"]))
        near = _replace_edge(near, edge(a["w1"], a["w2"]), (a["w1"], a["v"], a["w2"]))
        far = _replace_edge(
            far, edge(a["t3"], a["w3"]), (a["t3"], a["u"], a["v"], a["w3"])
        )
        return PathDecomposition(near.paths + far.paths)
    d = _translate(decomps[0], plan.children[0].vmap)
    d = _replace_edge(d, edge(a["t1"], a["t2"]), (a["t1"], a["u"], a["t2"]))
    d = _replace_edge(d, edge(a["w1"], a["w2"]), (a["w1"], a["v"], a["w2"]))
    return add_path(d, Path((a["t3"], a["u"], a["v"], a["w3"])))


def _lift_c4_hub(plan: LiftPlan, decomps: list[PathDecomposition]) -> PathDecomposition:
    a = plan.anchors
    hub, other, t1, t2, t3 = a["hub"], a["other"], a["t1"], a["t2"], a["t3"]
    pair = _translate(decomps[0], plan.children[0].vmap)
    rest = _translate(decomps[1], plan.children[1].vmap)
    host = _path_with_edge(pair, edge(t1, t2))
    left, right = _split_on_edge(host, edge(t1, t2))
    if left[-1] == t1:
        t1_part, t2_part = left, right[::-1]
    else:
        t1_part, t2_part = right[::-1], left
    enders = paths_ending_at(rest, other)
    if not enders:
        raise LiftError("no path ends at the surviving endpoint")
    q = enders[0]
    first = Path(t1_part + (hub,) + _oriented(q, first=other))
    second = Path(t2_part + (hub, t3))
    keep_pair = tuple(p for p in pair.paths if p != host)
    keep_rest = tuple(p for p in rest.paths if p != q)
    return PathDecomposition(keep_pair + keep_rest + (first, second))


# -- C5: shrink a triangle with even corner degrees ---------------------------


def _reduce_c5(g: Graph, occ: C5) -> LiftPlan:
    corners = (occ.u, occ.v, occ.w)
    for a, b in itertools.combinations(sorted(corners), 2):
        if len(g.common_neighbors(a, b)) == 3:
            return _reduce_c5_common3(g, a, b)
    for a, b in itertools.combinations(sorted(corners), 2):
        (c,) = set(corners) - {a, b}
        if set(g.common_neighbors(a, b)) != {c}:
            raise ReductionError(
                f"{occ}: corners share an outside neighbour (C3/C4 order broken)"
            )
    if g.degree(occ.v) == 2 or g.degree(occ.w) == 2:
        return _reduce_c5_degree_two(g, occ)
    return _reduce_c5_dense(g, occ)


def _reduce_c5_common3(g: Graph, a: int, b: int) -> LiftPlan:
    """The corner pair (a, b) sees three common vertices, one of them the
    third corner; the sub-case depends on the gaps among those three."""
    trio = sorted(g.common_neighbors(a, b))
    missing = [
        (p, q) for p, q in itertools.combinations(trio, 2) if not g.has_edge(p, q)
    ]
    keep = set(range(g.n)) - {a, b}
    if len(missing) >= 2:
        center = next(s for s in trio if sum(s in pair for pair in missing) >= 2)
        o1, o2 = sorted(set(trio) - {center})
        child = _child(g, keep, (edge(center, o1), edge(center, o2)))
        anchors = {"u": a, "v": b, "center": center, "o1": o1, "o2": o2}
        return LiftPlan("C5", "two_gaps", g, (child,), anchors)
    if len(missing) == 1:
        x, y = missing[0]
        (apex,) = set(trio) - {x, y}
        child = _child(g, keep, (edge(x, y),))
        anchors = {"u": a, "v": b, "x": x, "y": y, "apex": apex}
        return LiftPlan("C5", "one_gap", g, (child,), anchors)
    child = _child(g, keep)
    anchors = {"u": a, "v": b, "c1": trio[0], "c2": trio[1], "c3": trio[2]}
    return LiftPlan("C5", "common_triangle", g, (child,), anchors)


def _reduce_c5_degree_two(g: Graph, occ: C5) -> LiftPlan:
    u, v, w = occ.u, occ.v, occ.w
    if g.degree(v) != 2:
        v, w = w, v
    x1, x2 = sorted(set(g.neighbors(u)) - {v, w})
    trimmed, drop_map = g.delete_vertices({v})
    merged, contract_map = trimmed.contract_edge(
        drop_map.new_id(u), drop_map.new_id(w)
    )
    child = Child(merged, drop_map.compose(contract_map))
    anchors = {"u": u, "v": v, "w": w, "x1": x1, "x2": x2}
    return LiftPlan("C5", "degree_two", g, (child,), anchors)


def _reduce_c5_dense(g: Graph, occ: C5) -> LiftPlan:
    """All corners have degree 4 and private outer neighbour pairs."""
    corners = {occ.u, occ.v, occ.w}
    outer = []
    for corner in sorted(corners):
        if g.degree(corner) != 4:
            raise ReductionError(f"{occ}: corner degrees must all be 4 here")
        for nb in sorted(set(g.neighbors(corner)) - corners):
            outer.append((corner, nb))
    cut = g.bridges()
    loose = [(a, b) for a, b in outer if edge(a, b) not in cut]
    if loose:
        host, x1 = loose[0]
        v2, w2 = sorted(corners - {host})
        (x2,) = set(g.neighbors(host)) - corners - {x1}
        return _reduce_c5_hub(g, host, v2, w2, x1, x2)
    return _reduce_c5_bridges(g, occ, outer)


def _reduce_c5_hub(
    g: Graph, u: int, v: int, w: int, x1: int, x2: int
) -> LiftPlan:
    trimmed, drop_map = g.delete_vertices({u})
    merged, contract_map = trimmed.contract_edge(
        drop_map.new_id(v), drop_map.new_id(w)
    )
    vmap = drop_map.compose(contract_map)
    assert vmap.merged is not None
    s = vmap.merged[1]
    cx2 = vmap.new_id(x2)
    final = merged.add_edge(s, cx2)
    child = Child(final, vmap, (edge(s, cx2),))
    anchors = {"u": u, "v": v, "w": w, "x1": x1, "x2": x2}
    return LiftPlan("C5", "hub_contraction", g, (child,), anchors)


def _reduce_c5_bridges(
    g: Graph, occ: C5, outer: list[tuple[int, int]]
) -> LiftPlan:
    u, v, w = occ.u, occ.v, occ.w
    x1, x2 = sorted(nb for c, nb in outer if c == u)
    y1, y2 = sorted(nb for c, nb in outer if c == v)
    z1, z2 = sorted(nb for c, nb in outer if c == w)
    comps = _components_without(g, {u, v, w})
    if len(comps) != 6:
        raise ReductionError(f"{occ}: expected six satellite components")
    home = {}
    for vertex in (x1, x2, y1, y2, z1, z2):
        (comp,) = [c for c in comps if vertex in c]
        home[vertex] = set(comp)
    first = _child(g, home[x1] | home[y1], (edge(x1, y1),))
    second = _child(g, home[x2] | home[y2], (edge(x2, y2),))
    third = _child(g, home[z1] | home[z2], (edge(z1, z2),))
    anchors = {
        "u": u, "v": v, "w": w,
        "x1": x1, "x2": x2, "y1": y1, "y2": y2, "z1": z1, "z2": z2,
    }
    return LiftPlan("C5", "bridge_spread", g, (first, second, third), anchors)


def _lift_c5(plan: LiftPlan, decomps: list[PathDecomposition]) -> PathDecomposition:
    a = plan.anchors
    if plan.subcase == "two_gaps":
        d = _translate(decomps[0], plan.children[0].vmap)
        u, v, c = a["u"], a["v"], a["center"]
        d = _replace_edge(d, edge(a["o1"], c), (a["o1"], u, c))
        d = _replace_edge(d, edge(c, a["o2"]), (c, v, a["o2"]))
        return add_path(d, Path((a["o1"], v, u, a["o2"])))
    if plan.subcase == "one_gap":
        d = _translate(decomps[0], plan.children[0].vmap)
        u, v, x, y = a["u"], a["v"], a["x"], a["y"]
        d = _replace_edge(d, edge(x, y), (x, u, v, y))
        return add_path(d, Path((x, v, a["apex"], u, y)))
    if plan.subcase == "common_triangle":
        return _lift_c5_triangle(plan, decomps)
    if plan.subcase == "degree_two":
        return _lift_c5_degree_two(plan, decomps)
    if plan.subcase == "hub_contraction":
        return _lift_c5_hub(plan, decomps)
    return _lift_c5_bridges(plan, decomps)


def _lift_c5_triangle(
    plan: LiftPlan, decomps: list[PathDecomposition]
) -> PathDecomposition:
    """Both removed corners see all of the triangle {c1, c2, c3}.

    The rewrite needs a role assignment (w, x, y) of the triangle where w
    has no neighbours outside the triangle in the child, the x-w and w-y
    edges lie on different paths, and x-y and w-y lie on different paths.
    When every admissible assignment is blocked (both child edges at every
    candidate w share one path), fall back to an exact re-partition of the
    affected paths, which keeps the same accounting.
    """
    a = plan.anchors
    u, v = a["u"], a["v"]
    trio = (a["c1"], a["c2"], a["c3"])
    child = plan.children[0]
    d = _translate(decomps[0], child.vmap)

    def holder(e: Edge) -> int:
        return _find_edge_index(d, e)[0]

    roles = None
    for wr, xr, yr in itertools.permutations(trio):
        if child.graph.degree(child.vmap.new_id(wr)) != 2:
            continue
        if holder(edge(xr, wr)) == holder(edge(wr, yr)):
            continue
        if holder(edge(xr, yr)) == holder(edge(wr, yr)):
            continue
        roles = (wr, xr, yr)
        break
    if roles is None:
        return _lift_c5_triangle_repair(plan, d)
    wr, xr, yr = roles

    # Reroute the path through x-w to end at u instead of w.
    q_old = _path_with_edge(d, edge(xr, wr))
    q_vertices = _oriented(q_old, last=wr)
    if q_vertices[-2] != xr:
        raise LiftError("triangle corner is not terminal in its path")
    q_new = Path(q_vertices[:-1] + (u,))
    d = PathDecomposition(tuple(q_new if p == q_old else p for p in d.paths))

    p_old = _path_with_edge(d, edge(xr, yr))
    left, right = _split_on_edge(p_old, edge(xr, yr))
    if left[-1] == xr:
        x_part, y_part = left, right
    else:
        x_part, y_part = right[::-1], left[::-1]
    p1 = Path(x_part + (yr, v, wr))
    p2 = Path(y_part[::-1] + (u, v, xr, wr))

    r_old = _path_with_edge(d, edge(yr, wr))
    if r_old == p_old:
        raise LiftError("triangle role separation failed")
    r_new = Path(_oriented(r_old, last=wr) + (u,))

    remaining = tuple(p for p in d.paths if p not in (p_old, r_old))
    return PathDecomposition(remaining + (p1, p2, r_new))


_REPAIR_BUDGET = 2_000_000


def _lift_c5_triangle_repair(
    plan: LiftPlan, translated: PathDecomposition
) -> PathDecomposition:
    a = plan.anchors
    u, v = a["u"], a["v"]
    trio = (a["c1"], a["c2"], a["c3"])
    tri_edges = {edge(p, q) for p, q in itertools.combinations(trio, 2)}
    hosts = []
    for p in translated.paths:
        if tri_edges & set(p.edges()) and p not in hosts:
            hosts.append(p)
    fresh = {edge(u, v)} | {edge(u, t) for t in trio} | {edge(v, t) for t in trio}
    pool = frozenset(
        {e for host in hosts for e in host.edges()} | fresh
    )
    cover = cover_with_paths(pool, len(hosts) + 1, budget=_REPAIR_BUDGET)
    if cover is None:
        raise LiftError("triangle repair found no small re-partition")
    kept = tuple(p for p in translated.paths if p not in hosts)
    return PathDecomposition(kept + tuple(Path(seq) for seq in cover))


def _lift_c5_degree_two(
    plan: LiftPlan, decomps: list[PathDecomposition]
) -> PathDecomposition:
    a = plan.anchors
    u, v, w, x1, x2 = a["u"], a["v"], a["w"], a["x1"], a["x2"]
    child = plan.children[0]
    # The merged vertex plays w; its edges towards x1/x2 stand for parent
    # edges at u.
    d = _translate_merged_as(decomps[0], child.vmap, w)
    hinge = None
    for p in d.paths:
        for i, vertex in enumerate(p.vertices):
            if vertex != w:
                continue
            around = {p.vertices[j] for j in (i - 1, i + 1) if 0 <= j < len(p)}
            if around == {x1, x2}:
                hinge = p
    if hinge is None:
        d = _replace_edge(d, edge(w, x1), (w, u, x1))
        d = _replace_edge(d, edge(w, x2), (w, v, u, x2))
        return d
    at = hinge.vertices.index(w)
    first = Path(hinge.vertices[: at] + (u, w))
    second = Path((w, v, u) + hinge.vertices[at + 1 :])
    rest = tuple(p for p in d.paths if p != hinge)
    return PathDecomposition(rest + (first, second))


def _translate_merged_as(
    d: PathDecomposition, vmap: VertexMap, stand_in: int
) -> PathDecomposition:
    """Translate a contracted child's paths, reading the merged vertex as
    ``stand_in`` everywhere."""
    if vmap.merged is None:
        raise LiftError("child was not produced by a contraction")
    merged_new = vmap.merged[1]
    inverse = {new: old for old, new in vmap.forward.items() if new != merged_new}
    inverse[merged_new] = stand_in
    return PathDecomposition(
        tuple(Path(tuple(inverse[x] for x in p.vertices)) for p in d.paths)
    )


def _lift_c5_hub(plan: LiftPlan, decomps: list[PathDecomposition]) -> PathDecomposition:
    a = plan.anchors
    g = plan.parent
    u, v, w, x1, x2 = a["u"], a["v"], a["w"], a["x1"], a["x2"]
    child = plan.children[0]
    s = child.vmap.merged[1]
    inverse = {new: old for old, new in child.vmap.forward.items() if new != s}
    v_side = set(g.neighbors(v)) - {u, w}
    w_side = set(g.neighbors(w)) - {u, v}

    def side(child_vertex: int) -> str:
        old = inverse[child_vertex]
        if old == x2:
            return "x"
        if old in v_side:
            return "v"
        if old in w_side:
            return "w"
        raise LiftError(f"unexpected neighbour {old} of the merged pair")

    crossings = 0
    translated: list[Path] = []
    for p in decomps[0].paths:
        vertices: list[int] = []
        for i, cv in enumerate(p.vertices):
            if cv != s:
                vertices.append(inverse[cv])
                continue
            before = p.vertices[i - 1] if i > 0 else None
            after = p.vertices[i + 1] if i + 1 < len(p) else None
            if before is not None and after is not None:
                kinds = (side(before), side(after))
                if kinds in (("v", "w"), ("w", "v")):
                    crossings += 1
                    if crossings > 2:
                        raise LiftError("too many crossings of the merged pair")
                    detour = (v, w) if crossings == 1 else (v, u, w)
                    if kinds[0] == "w":
                        detour = detour[::-1]
                    vertices.extend(detour)
                elif "x" in kinds:
                    t_kind = kinds[1] if kinds[0] == "x" else kinds[0]
                    corner = v if t_kind == "v" else w
                    piece = (u, corner) if kinds[0] == "x" else (corner, u)
                    vertices.extend(piece)
                else:
                    vertices.append(v if kinds[0] == "v" else w)
            else:
                kind = side(after if before is None else before)
                vertices.append({"x": u, "v": v, "w": w}[kind])
        translated.append(Path(tuple(vertices)))

    d = PathDecomposition(tuple(translated))
    covered = {e for p in d.paths for e in p.edges()}
    residual = {e for e in g.edges() if e not in covered}
    if edge(u, x1) not in residual:
        raise LiftError("the spared outer edge is unexpectedly covered")
    sequence = _edges_as_path(residual)
    if sequence is None:
        d, residual = _extend_into_residual(d, residual, (u, v, w))
        sequence = _edges_as_path(residual)
        if sequence is None:
            raise LiftError("residual edges do not form a path")
    return add_path(d, Path(sequence))


def _extend_into_residual(
    d: PathDecomposition, residual: set[Edge], corners: tuple[int, int, int]
) -> tuple[PathDecomposition, set[Edge]]:
    u, v, w = corners
    for host in d.paths:
        for endpoint in dict.fromkeys(host.ends):
            if endpoint not in corners:
                continue
            for candidate in (edge(w, u), edge(w, v)):
                if candidate not in residual or endpoint not in candidate:
                    continue
                other = candidate[0] if candidate[1] == endpoint else candidate[1]
                if other in host:
                    continue
                if _edges_as_path(residual - {candidate}) is None:
                    continue
                return (
                    extend(d, host, Path((endpoint, other))),
                    residual - {candidate},
                )
    raise LiftError("no corner extension straightens the residual")


def _edges_as_path(edges: set[Edge]) -> tuple[int, ...] | None:
    """Vertex sequence if the edge set induces a single simple path."""
    if not edges:
        return None
    degree: dict[int, int] = {}
    adjacency: dict[int, list[int]] = {}
    for a, b in edges:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)
    if len(edges) != len(degree) - 1:
        return None
    if any(count > 2 for count in degree.values()):
        return None
    ends = sorted(vertex for vertex, count in degree.items() if count == 1)
    if len(ends) != 2:
        return None
    sequence = [ends[0]]
    seen = {ends[0]}
    while len(sequence) < len(degree):
        options = [nb for nb in adjacency[sequence[-1]] if nb not in seen]
        if len(options) != 1:
            return None
        sequence.append(options[0])
        seen.add(options[0])
    return tuple(sequence)


def _lift_c5_bridges(plan: LiftPlan, decomps: list[PathDecomposition]) -> PathDecomposition:
    a = plan.anchors
    u, v, w = a["u"], a["v"], a["w"]
    first = _translate(decomps[0], plan.children[0].vmap)
    second = _translate(decomps[1], plan.children[1].vmap)
    third = _translate(decomps[2], plan.children[2].vmap)
    first = _replace_edge(first, edge(a["x1"], a["y1"]), (a["x1"], u, v, a["y1"]))
    second = _replace_edge(
        second, edge(a["x2"], a["y2"]), (a["x2"], u, w, v, a["y2"])
    )
    third = _replace_edge(third, edge(a["z1"], a["z2"]), (a["z1"], w, a["z2"]))
    return PathDecomposition(first.paths + second.paths + third.paths)


# -- lifting ------------------------------------------------------------------


_LIFTERS = {
    "C1": _lift_c1,
    "C2": _lift_c2,
    "C3": _lift_c3,
    "C4": _lift_c4,
    "C5": _lift_c5,
}

# Paths gained relative to the children's total, per sub-case; a range
# (lo, hi) where the recipe itself branches.
_COUNT_DELTA = {
    ("C1", "splice"): (0, 0),
    ("C2", "join"): (-1, -1),
    ("C3", "sparse_ring"): (0, 1),
    ("C3", "full_ring"): (1, 1),
    ("C3", "partial_ring"): (1, 1),
    ("C4", "triple_common"): (1, 1),
    ("C4", "hub_split"): (0, 0),
    ("C4", "four_components"): (0, 0),
    ("C4", "paired_nonedges"): (1, 1),
    ("C5", "two_gaps"): (1, 1),
    ("C5", "one_gap"): (1, 1),
    ("C5", "common_triangle"): (1, 1),
    ("C5", "degree_two"): (0, 1),
    ("C5", "hub_contraction"): (1, 1),
    ("C5", "bridge_spread"): (0, 0),
}


def lift(
    occ: Occurrence,
    plan: LiftPlan,
    children_decomps: list[PathDecomposition],
) -> PathDecomposition:
    """Rewrite good child decompositions into one for the parent graph.

    The children must verify valid and good against their child graphs; the
    result is verified against the parent and must obey the sub-case's path
    accounting, so a bad recipe fails here instead of corrupting a solve.
    """
    if occ.tag != plan.tag:
        raise LiftError(f"plan is for {plan.tag}, occurrence is {occ.tag}")
    if len(children_decomps) != len(plan.children):
        raise LiftError("one decomposition per child is required")
    total = 0
    for child, decomp in zip(plan.children, children_decomps):
        report = verify(child.graph, decomp)
        if not report.valid:
            raise LiftError(f"child decomposition invalid:\n{report}")
        if not report.good:
            raise LiftError("child decomposition is valid but not good")
        total += len(decomp)
    lifted = _LIFTERS[plan.tag](plan, children_decomps)
    report = verify(plan.parent, lifted)
    if not report.valid:
        raise LiftError(f"lifted decomposition invalid:\n{report}")
    lo, hi = _COUNT_DELTA[(plan.tag, plan.subcase)]
    if not (total + lo <= len(lifted) <= total + hi):
        raise LiftError(
            f"{plan.tag}/{plan.subcase} produced {len(lifted)} paths "
            f"from {total}, outside [{total + lo}, {total + hi}]"
        )
    if not report.good:
        raise LiftError(f"{plan.tag}/{plan.subcase} lost goodness")
    return lifted


# -- structural consequence ----------------------------------------------------


def check_structure(g: Graph) -> bool:
    """For an irreducible graph, the even-degree core must be a forest.

    Preconditions: connected, max degree at most 5, no configuration
    present, and not one of the two exceptional cliques (K3, K5).
    """
    if not g.is_connected():
        raise ValueError("graph must be connected")
    if g.n and g.max_degree() > 5:
        raise ValueError("maximum degree exceeds 5")
    if _is_clique(g, 3) or _is_clique(g, 5):
        raise ValueError("K3 and K5 are excluded")
    if detect(g) is not None:
        raise ValueError("graph still contains a configuration")
    core, _ = g.induced_even_subgraph()
    return core.is_forest()


def _is_clique(g: Graph, size: int) -> bool:
    return g.n == size and g.m == size * (size - 1) // 2


# -- shared helpers --------------------------------------------------------------


def _translate(d: PathDecomposition, vmap: VertexMap) -> PathDecomposition:
    if vmap.merged is not None:
        raise LiftError("plain translation cannot undo a contraction")
    inverse = {new: old for old, new in vmap.forward.items()}
    return PathDecomposition(
        tuple(Path(tuple(inverse[x] for x in p.vertices)) for p in d.paths)
    )


def _find_edge_index(d: PathDecomposition, e: Edge) -> tuple[int, int]:
    hits = [
        (i, j)
        for i, p in enumerate(d.paths)
        for j, f in enumerate(p.edges())
        if f == e
    ]
    if len(hits) != 1:
        raise LiftError(f"edge {e} occurs {len(hits)} times in the decomposition")
    return hits[0]


def _path_with_edge(d: PathDecomposition, e: Edge) -> Path:
    return d.paths[_find_edge_index(d, e)[0]]


def _replace_edge(
    d: PathDecomposition, e: Edge, via: tuple[int, ...]
) -> PathDecomposition:
    host = _path_with_edge(d, e)
    return replace_subpath(d, host, Path(e), Path(via))


def _split_on_edge(p: Path, e: Edge) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two sides of a path around one of its edges (either side can be
    a single vertex)."""
    vs = p.vertices
    for i in range(len(vs) - 1):
        if edge(vs[i], vs[i + 1]) == e:
            return vs[: i + 1], vs[i + 1 :]
    raise LiftError(f"edge {e} not on path {vs}")


def _oriented(
    p: Path, first: int | None = None, last: int | None = None
) -> tuple[int, ...]:
    vs = p.vertices
    if first is not None:
        return vs if vs[0] == first else vs[::-1]
    return vs if vs[-1] == last else vs[::-1]
