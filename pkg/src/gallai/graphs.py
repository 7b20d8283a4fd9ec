"""Immutable simple graphs and the structural queries the reductions rely on.

Vertices are the integers ``0..n-1``.  Adjacency is stored as one bitmask per
vertex, which keeps degree/common-neighbour/connectivity queries cheap at the
sizes this library targets (a few dozen vertices).  Every mutating operation
returns a new ``Graph``; values are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


Edge = tuple[int, int]


def edge(u: int, v: int) -> Edge:
    """Canonical (smaller endpoint first) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class VertexMap:
    """Relabelling produced by a vertex deletion or an edge contraction.

    ``forward`` maps surviving old ids to new ids.  It is injective except
    when ``merged`` is set, in which case both endpoints of the contracted
    edge map to the same new id.
    """

    forward: dict[int, int]
    merged: tuple[Edge, int] | None = None

    def new_id(self, old: int) -> int:
        return self.forward[old]

    def old_ids(self, new: int) -> tuple[int, ...]:
        """All preimages of a new id (two of them for the merged vertex)."""
        return tuple(sorted(o for o, x in self.forward.items() if x == new))

    def old_id(self, new: int) -> int:
        """The unique preimage of a new id; raises on the merged vertex."""
        olds = self.old_ids(new)
        if len(olds) != 1:
            raise ValueError(f"new id {new} has {len(olds)} preimages")
        return olds[0]

    def compose(self, later: "VertexMap") -> "VertexMap":
        """Map of applying ``self`` first and ``later`` second."""
        forward = {
            old: later.forward[mid]
            for old, mid in self.forward.items()
            if mid in later.forward
        }
        merged = None
        if self.merged is not None:
            (a, b), mid = self.merged
            if mid in later.forward:
                merged = ((a, b), later.forward[mid])
        if later.merged is not None:
            if merged is not None:
                raise ValueError("cannot compose two contractions")
            (a, b), new = later.merged
            olds = [o for o, mid in self.forward.items() if mid in (a, b)]
            if len(olds) != 2:
                raise ValueError("contracted pair lost under composition")
            merged = (edge(olds[0], olds[1]), new)
        return VertexMap(forward, merged)


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adj_masks: Sequence[int]):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(adj_masks) != n:
            raise ValueError("adjacency length does not match vertex count")
        for v, mask in enumerate(adj_masks):
            if mask >> n:
                raise ValueError(f"neighbour of {v} out of range")
            if mask & (1 << v):
                raise ValueError(f"self-loop at {v}")
        for v, mask in enumerate(adj_masks):
            for u in _bits(mask):
                if not adj_masks[u] & (1 << v):
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_adj", tuple(adj_masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "Graph":
        masks = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if masks[u] & (1 << v):
                raise ValueError(f"duplicate edge ({u}, {v})")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return cls(n, masks)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    # -- basic queries ----------------------------------------------------

    @property
    def m(self) -> int:
        return sum(mask.bit_count() for mask in self._adj) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def max_degree(self) -> int:
        if self.n == 0:
            raise ValueError("max degree of the empty graph is undefined")
        return max(mask.bit_count() for mask in self._adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_bits(self._adj[v]))

    def neighbor_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] & (1 << v))

    def edges(self) -> Iterator[Edge]:
        """All edges, ascending by (u, v)."""
        for u in range(self.n):
            for v in _bits(self._adj[u] >> (u + 1), offset=u + 1):
                yield (u, v)

    def vertices(self) -> range:
        return range(self.n)

    def common_neighbors(self, u: int, v: int) -> tuple[int, ...]:
        if u == v:
            raise ValueError("common neighbours of a vertex with itself")
        return tuple(_bits(self._adj[u] & self._adj[v]))

    # -- connectivity -----------------------------------------------------

    def components(self) -> list[tuple[int, ...]]:
        """Connected components, ascending by smallest member."""
        seen = 0
        out = []
        for start in range(self.n):
            if seen & (1 << start):
                continue
            comp = self._reach(start)
            seen |= comp
            out.append(tuple(_bits(comp)))
        return out

    def component_mask(self, start: int) -> int:
        self._check_vertex(start)
        return self._reach(start)

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def _reach(self, start: int) -> int:
        comp = 1 << start
        frontier = comp
        while frontier:
            grown = 0
            for v in _bits(frontier):
                grown |= self._adj[v]
            frontier = grown & ~comp
            comp |= grown
        return comp

    def bridges(self) -> set[Edge]:
        """Edges whose removal increases the component count.

        Iterative low-link computation, linear in n + m.
        """
        disc = [-1] * self.n
        low = [0] * self.n
        out: set[Edge] = set()
        timer = 0
        for root in range(self.n):
            if disc[root] != -1:
                continue
            # stack entries: (vertex, parent, iterator over neighbours)
            stack = [(root, -1, iter(self.neighbors(root)))]
            disc[root] = low[root] = timer
            timer += 1
            while stack:
                v, parent, it = stack[-1]
                advanced = False
                for w in it:
                    if disc[w] == -1:
                        disc[w] = low[w] = timer
                        timer += 1
                        stack.append((w, v, iter(self.neighbors(w))))
                        advanced = True
                        break
                    if w != parent:
                        low[v] = min(low[v], disc[w])
                if not advanced:
                    stack.pop()
                    if stack:
                        p = stack[-1][0]
                        low[p] = min(low[p], low[v])
                        if low[v] > disc[p]:
                            out.add(edge(p, v))
        return out

    # -- derived graphs ---------------------------------------------------

    def delete_vertices(self, drop: Iterable[int]) -> tuple["Graph", VertexMap]:
        """Induced subgraph on the surviving vertices, ids compacted."""
        dropped = set(drop)
        for v in dropped:
            self._check_vertex(v)
        keep = [v for v in range(self.n) if v not in dropped]
        forward = {old: new for new, old in enumerate(keep)}
        masks = [0] * len(keep)
        for old in keep:
            new = forward[old]
            for w in _bits(self._adj[old]):
                if w in forward:
                    masks[new] |= 1 << forward[w]
        return Graph(len(keep), masks), VertexMap(forward)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ValueError(f"self-loop at {u}")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        masks = list(self._adj)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        return Graph(self.n, masks)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        masks = list(self._adj)
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
        return Graph(self.n, masks)

    def contract_edge(self, u: int, v: int) -> tuple["Graph", VertexMap]:
        """Merge the endpoints of an edge whose ends share no neighbour.

        The merged vertex takes the compacted slot of min(u, v); ids above
        max(u, v) shift down by one.
        """
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) not present")
        if self._adj[u] & self._adj[v]:
            raise ValueError(
                f"contracting ({u}, {v}) would create a parallel edge"
            )
        a, b = edge(u, v)
        keep = [x for x in range(self.n) if x != b]
        forward = {old: new for new, old in enumerate(keep)}
        c = forward[a]
        forward[b] = c
        masks = [0] * len(keep)
        for old in range(self.n):
            if old in (a, b):
                continue
            new = forward[old]
            for w in _bits(self._adj[old]):
                masks[new] |= 1 << forward[w]
        merged_mask = (self._adj[a] | self._adj[b]) & ~(1 << a) & ~(1 << b)
        for w in _bits(merged_mask):
            masks[c] |= 1 << forward[w]
        return Graph(len(keep), masks), VertexMap(forward, ((a, b), c))

    def induced_even_subgraph(self) -> tuple["Graph", VertexMap]:
        """Subgraph induced by the vertices of even degree."""
        odd = [v for v in range(self.n) if self.degree(v) % 2 == 1]
        return self.delete_vertices(odd)

    # -- predicates --------------------------------------------------------

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_odd_semi_clique(self) -> bool:
        """True for a clique on 2k+1 vertices minus at most k-1 edges."""
        if self.n < 3 or self.n % 2 == 0:
            return False
        k = (self.n - 1) // 2
        return self.m >= self.n * (self.n - 1) // 2 - (k - 1)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")


def _bits(mask: int, offset: int = 0) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1 + offset
        mask ^= low
