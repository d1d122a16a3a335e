"""Graph-side admissibility test.

A complex is read as a simple graph on the 8 points.  Its incidence matrix
has rank (#vertices - #bipartite components) over the rationals, isolated
vertices counting as bipartite components, so a complex is admissible exactly
when it covers every point and no component can be properly 2-coloured.

The helpers taking ``(n, edges)`` work on any simple graph with up to 16
vertices; they are what the property tests exercise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .geometry import N_POINTS, Complex

MAX_VERTICES = 16


class ComponentKind(enum.Enum):
    TREE = "tree"
    UNICYCLIC_ODD = "unicyclic_odd"
    UNICYCLIC_EVEN = "unicyclic_even"
    MULTICYCLIC = "multicyclic"


@dataclass(frozen=True)
class ComponentSummary:
    vertices: frozenset[int]
    edge_count: int
    kind: ComponentKind
    cycle_length: Optional[int] = None
    bipartite: bool = False

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class AdmissibilityVerdict:
    admissible: bool
    omitted_points: frozenset[int]
    bipartite_components: int

    def diagnosis(self) -> str:
        if self.admissible:
            return "admissible"
        parts = []
        if self.omitted_points:
            pts = ", ".join(str(p) for p in sorted(self.omitted_points))
            parts.append(f"omits point(s) {pts}")
        if self.bipartite_components:
            parts.append(f"{self.bipartite_components} bipartite component(s)")
        return "inadmissible: " + "; ".join(parts)


def _adjacency(n: int, edges: Iterable[Sequence[int]]) -> list[int]:
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
    adj = [0] * n
    for a, b in edges:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"edge ({a}, {b}) has an endpoint outside 0..{n - 1}")
        if a == b:
            raise ValueError(f"loop at vertex {a}")
        if adj[a] >> b & 1:
            raise ValueError(f"repeated edge ({a}, {b})")
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _cycle_residue(vertex_mask: int, adj: list[int]) -> int:
    """Strip degree-1 vertices until none remain; returns the surviving vertex set."""
    alive = vertex_mask
    deg = {v: (adj[v] & alive).bit_count() for v in _bits(alive)}
    stack = [v for v, d in deg.items() if d <= 1]
    while stack:
        v = stack.pop()
        if not alive >> v & 1:
            continue
        alive &= ~(1 << v)
        for u in _bits(adj[v] & alive):
            deg[u] -= 1
            if deg[u] == 1:
                stack.append(u)
    return alive


def _component_masks(adj: list[int], vertex_mask: int) -> list[int]:
    comps = []
    remaining = vertex_mask
    while remaining:
        seed = remaining & -remaining
        comp = frontier = seed
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def _is_bipartite(comp: int, adj: list[int]) -> bool:
    seed = (comp & -comp).bit_length() - 1
    colour = {seed: 0}
    stack = [seed]
    while stack:
        v = stack.pop()
        for u in _bits(adj[v]):
            if u not in colour:
                colour[u] = colour[v] ^ 1
                stack.append(u)
            elif colour[u] == colour[v]:
                return False
    return True


def graph_components(n: int, edges: Iterable[Sequence[int]],
                     include_isolated: bool = False) -> list[ComponentSummary]:
    """Connected components, ordered by smallest vertex.

    Vertices touching no edge are skipped unless ``include_isolated`` is set,
    in which case each appears as a one-vertex TREE.
    """
    adj = _adjacency(n, edges)
    if include_isolated:
        vertex_mask = (1 << n) - 1
    else:
        vertex_mask = 0
        for v in range(n):
            if adj[v]:
                vertex_mask |= 1 << v
    out = []
    for comp in _component_masks(adj, vertex_mask):
        verts = _bits(comp)
        e = sum((adj[v] & comp).bit_count() for v in verts) // 2
        nv = len(verts)
        bip = _is_bipartite(comp, adj)
        cycle_length = None
        if e == nv - 1:
            kind = ComponentKind.TREE
        elif e == nv:
            cycle_length = _cycle_residue(comp, adj).bit_count()
            kind = ComponentKind.UNICYCLIC_EVEN if cycle_length % 2 == 0 else ComponentKind.UNICYCLIC_ODD
        else:
            kind = ComponentKind.MULTICYCLIC
        out.append(ComponentSummary(frozenset(verts), e, kind, cycle_length, bip))
    return out


def bipartite_component_count(n: int, edges: Iterable[Sequence[int]]) -> int:
    """Components admitting a proper 2-colouring, isolated vertices included."""
    return sum(c.bipartite for c in graph_components(n, edges, include_isolated=True))


def incidence_rank_by_graph(n: int, edges: Iterable[Sequence[int]]) -> int:
    """Rational rank of the edge-vertex incidence matrix, read off the graph."""
    return n - bipartite_component_count(n, edges)


def degrees(c: Complex) -> list[int]:
    deg = [0] * N_POINTS
    for a, b in c.pairs:
        deg[a] += 1
        deg[b] += 1
    return deg


def covered_points(c: Complex) -> frozenset[int]:
    return frozenset(p for pair in c.pairs for p in pair)


def omitted_points(c: Complex) -> frozenset[int]:
    return frozenset(range(N_POINTS)) - covered_points(c)


def components(c: Complex) -> list[ComponentSummary]:
    """Components of the complex's graph on its covered points."""
    return graph_components(N_POINTS, c.pairs)


def is_admissible_graph(c: Complex) -> AdmissibilityVerdict:
    omitted = omitted_points(c)
    # omitted points are singleton components and count as bipartite
    bip = len(omitted) + sum(comp.bipartite for comp in components(c))
    return AdmissibilityVerdict(
        admissible=not omitted and bip == 0,
        omitted_points=omitted,
        bipartite_components=bip,
    )

