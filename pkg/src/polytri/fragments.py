"""Bounded exhaustive enumeration of fragments of a triangulation.

A fragment is an edge subset I of T; the counting inequalities are stated
in terms of its parameters

    i   = |I|                  edge count
    v   = v(I)                 vertices touched
    c   = c(I)                 connected components
    c_S = c_S(I)               components containing an internal vertex
    g   = g(I)                 internal vertices touched
    r   = r(I)                 4-cliques inside I
    t   = t(I)                 total arc count over internal vertices

t charges each internal vertex u of I with the number of connected pieces
its neighborhood N(u) is cut into by u's own component of I (0 if the full
link cycle of u is present).  Summing within components is what the
component-wise density inequalities add up over, and is the reading under
which they hold for disconnected fragments as well.

Enumeration is exhaustive with hard budgets: growth like (e*Delta)^i makes
silent blowups unacceptable, so exceeding a budget raises BudgetExceeded
with the partial count attached.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb as binom

from .triangulation import Triangulation

__all__ = [
    "BudgetExceeded",
    "Fragment",
    "EdgeIndex",
    "FaceStructure",
    "fragment_params",
    "enumerate_connected_subgraphs",
    "all_connected_subgraphs",
    "rooted_subgraph_counts",
    "rooted_count_bound_ok",
    "enumerate_simple_cycles",
    "count_bound_check_subgraphs",
    "E_LO",
]

# Rational lower bound on e, used wherever the paper's bounds carry a
# factor of e: replacing e by E_LO only strengthens the checked bound, so
# an exact rational comparison against it is sound.
E_LO = Fraction(2718281828459045, 10**15)

DEFAULT_BUDGET = 20_000_000


class BudgetExceeded(RuntimeError):
    """Enumeration aborted; carries how much work was done before the cap."""

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes


@dataclass(frozen=True)
class Fragment:
    """Exact parameters of an edge subset of a triangulation."""

    edges: tuple[tuple[int, int], ...]
    i: int
    v: int
    c: int
    c_s: int
    g: int
    r: int
    t: int


class EdgeIndex:
    """Edge ids, incidence lists and bitmask tables for one triangulation."""

    def __init__(self, t: Triangulation):
        self.t = t
        self.edges = t.edges()
        self.eid = {e: i for i, e in enumerate(self.edges)}
        self.ends = self.edges
        n = t.n
        self.einc: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            self.einc[u].append(i)
            self.einc[v].append(i)
        self.vbit = [1 << v for v in range(n)]
        self.ebit = [1 << i for i in range(len(self.edges))]

    def edge_mask(self, edges) -> int:
        m = 0
        for e in edges:
            u, v = e
            m |= self.ebit[self.eid[(min(u, v), max(u, v))]]
        return m

    def mask_edges(self, mask: int) -> tuple[tuple[int, int], ...]:
        out = []
        i = 0
        while mask:
            if mask & 1:
                out.append(self.edges[i])
            mask >>= 1
            i += 1
        return tuple(out)


def iter_connected_masks(idx: EdgeIndex, root: int, max_edges: int,
                         min_vertex: int = 0, budget: int | None = DEFAULT_BUDGET,
                         prune_v: list[int] | None = None):
    """Every connected edge subset containing `root`, exactly once.

    Yields (edge_mask, vert_mask, i, v).  Only vertices >= min_vertex are
    used, so running this for every root with min_vertex = root enumerates
    every connected fragment of the graph exactly once (at its minimal
    vertex).  Exactly-once comes from the branch rule: the j-th candidate
    extension is taken with all earlier candidates forbidden in that
    subtree, partitioning the supersets by their smallest usable
    extension.

    prune_v, when given, skips the subtree below any yielded fragment with
    v >= prune_v[i].  Vertex counts never decrease along a subtree, so
    this is sound for any check whose requirement at every larger size is
    at most prune_v[i]: all skipped fragments satisfy it automatically.
    """
    ends = idx.ends
    einc = idx.einc
    ebit = idx.ebit
    vbit = idx.vbit
    nodes = 0
    root_ext = [e for e in einc[root]
                if ends[e][0] >= min_vertex and ends[e][1] >= min_vertex]
    # stack holds (edge_mask, vert_mask, i, v, ext, next_branch_index)
    stack = [(0, vbit[root], 0, 1, root_ext, 0)]
    while stack:
        em, vm, i, v, ext, j = stack.pop()
        if j < len(ext):
            stack.append((em, vm, i, v, ext, j + 1))
            e = ext[j]
            a, b = ends[e]
            new = a if not (vm & vbit[a]) else (b if not (vm & vbit[b]) else -1)
            em2 = em | ebit[e]
            if new < 0:
                vm2, v2 = vm, v
            else:
                vm2, v2 = vm | vbit[new], v + 1
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceeded(
                    f"connected-subgraph budget {budget} exceeded at root {root}",
                    nodes)
            yield em2, vm2, i + 1, v2
            if i + 1 < max_edges and (prune_v is None or v2 < prune_v[i + 1]):
                if new < 0:
                    ext2 = ext[j + 1:]
                else:
                    ext2 = ext[j + 1:]
                    for f in einc[new]:
                        x, y = ends[f]
                        other = y if x == new else x
                        if other >= min_vertex and not (vm & vbit[other]):
                            ext2.append(f)
                stack.append((em2, vm2, i + 1, v2, ext2, 0))


def enumerate_connected_subgraphs(t: Triangulation, root: int, max_edges: int,
                                  budget: int | None = DEFAULT_BUDGET):
    """Stream of connected edge subsets (as edge tuples) containing root."""
    idx = EdgeIndex(t)
    for em, _vm, _i, _v in iter_connected_masks(idx, root, max_edges, 0, budget):
        yield idx.mask_edges(em)


def all_connected_subgraphs(t: Triangulation, max_edges: int,
                            budget: int | None = DEFAULT_BUDGET,
                            idx: EdgeIndex | None = None):
    """Every connected fragment of t exactly once, as (root, masks...) tuples.

    The budget applies per enumeration stream (one stream per root), which
    keeps results identical however the streams are scheduled.
    """
    if idx is None:
        idx = EdgeIndex(t)
    for root in range(t.n):
        for item in iter_connected_masks(idx, root, max_edges, root, budget):
            yield item


def rooted_subgraph_counts(t: Triangulation, root: int, max_edges: int,
                           budget: int | None = DEFAULT_BUDGET) -> dict[int, int]:
    """Exact count of connected i-edge subgraphs containing root, per i."""
    idx = EdgeIndex(t)
    counts: dict[int, int] = {i: 0 for i in range(1, max_edges + 1)}
    for _em, _vm, i, _v in iter_connected_masks(idx, root, max_edges, 0, budget):
        counts[i] += 1
    return counts


def rooted_count_bound_ok(count: int, i: int, max_degree: int) -> bool:
    """Exact check of count < (e*Delta)^i via the rational lower bound on e."""
    return Fraction(count) < (E_LO * max_degree) ** i


# ---------------------------------------------------------------------------
# Fragment parameters

def _components(edges) -> list[tuple[set[int], list[tuple[int, int]]]]:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen: set[int] = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        cedges = [e for e in edges if e[0] in comp]
        comps.append((comp, cedges))
    return comps


def _count_k4(edge_set: frozenset[tuple[int, int]]) -> int:
    nbr: dict[int, set[int]] = {}
    for u, v in edge_set:
        nbr.setdefault(u, set()).add(v)
        nbr.setdefault(v, set()).add(u)
    total = 0
    for u, v in edge_set:
        common = sorted(nbr[u] & nbr[v])
        for a, b in itertools.combinations(common, 2):
            if (min(a, b), max(a, b)) in edge_set:
                total += 1
    assert total % 6 == 0
    return total // 6


def _arc_count(t: Triangulation, u: int, comp_vertices: set[int],
               comp_edges: frozenset[tuple[int, int]]) -> int:
    """t_I(u) within u's component: 0 if the full link cycle is present,
    else the number of components of the neighborhood graph."""
    link = t.rotations[u]
    d = len(link)
    full = all(
        (min(link[i], link[(i + 1) % d]), max(link[i], link[(i + 1) % d]))
        in comp_edges
        for i in range(d)
    )
    if full:
        return 0
    present = [x for x in link if x in comp_vertices]
    if not present:
        return 0
    pset = set(present)
    adj = {x: [] for x in present}
    for x, y in comp_edges:
        if x in pset and y in pset:
            adj[x].append(y)
            adj[y].append(x)
    seen: set[int] = set()
    comps = 0
    for x in present:
        if x in seen:
            continue
        comps += 1
        stack = [x]
        seen.add(x)
        while stack:
            a = stack.pop()
            for bter in adj[a]:
                if bter not in seen:
                    seen.add(bter)
                    stack.append(bter)
    return comps


def fragment_params(t: Triangulation, edges) -> Fragment:
    """All seven fragment parameters of an edge subset, computed exactly."""
    eset = frozenset((min(u, v), max(u, v)) for u, v in edges)
    tset = t.edge_set()
    for e in eset:
        if e not in tset:
            raise ValueError(f"edge {e} not in the triangulation")
    verts = {x for e in eset for x in e}
    comps = _components(sorted(eset))
    s_verts = t.internal
    c_s = 0
    tsum = 0
    for comp, cedges in comps:
        hub_hits = comp & s_verts
        if hub_hits:
            c_s += 1
        ceset = frozenset(cedges)
        for u in sorted(hub_hits):
            tsum += _arc_count(t, u, comp, ceset)
    return Fragment(
        edges=tuple(sorted(eset)),
        i=len(eset),
        v=len(verts),
        c=len(comps),
        c_s=c_s,
        g=len(verts & s_verts),
        r=_count_k4(eset),
        t=tsum,
    )


# ---------------------------------------------------------------------------
# Faces, cycle enumeration and plane interiors

class FaceStructure:
    """Faces of the embedding plus the dual adjacency used for interiors."""

    def __init__(self, t: Triangulation):
        from .triangulation import _face_orbits, outer_face_index

        self.t = t
        self.faces = _face_orbits(t)
        outer = outer_face_index(self.faces, t.boundary)
        if outer is None:
            raise ValueError("no unique outer face; triangulation invalid")
        self.outer = outer
        self.edge_faces: dict[tuple[int, int], list[int]] = {}
        for fi, f in enumerate(self.faces):
            L = len(f)
            for i in range(L):
                u, v = f[i], f[(i + 1) % L]
                self.edge_faces.setdefault((min(u, v), max(u, v)), []).append(fi)
        self.vertex_faces: list[list[int]] = [[] for _ in range(t.n)]
        for fi, f in enumerate(self.faces):
            for v in set(f):
                self.vertex_faces[v].append(fi)

    def faces_cut_from_outer(self, blocked_edges) -> set[int]:
        """Faces not dual-reachable from the outer face when the given
        edges may not be crossed."""
        blocked = {(min(u, v), max(u, v)) for u, v in blocked_edges}
        seen = {self.outer}
        stack = [self.outer]
        while stack:
            fi = stack.pop()
            f = self.faces[fi]
            L = len(f)
            for i in range(L):
                e = (min(f[i], f[(i + 1) % L]), max(f[i], f[(i + 1) % L]))
                if e in blocked:
                    continue
                for gj in self.edge_faces[e]:
                    if gj not in seen:
                        seen.add(gj)
                        stack.append(gj)
        return set(range(len(self.faces))) - seen

    def cycle_interior(self, cycle: tuple[int, ...]):
        """(v_inside, strictly_inside) for a simple cycle of the embedding.

        The interior is the side of the cycle away from the outer face;
        v_inside counts the cycle's own vertices too.
        """
        L = len(cycle)
        cedges = [(cycle[i], cycle[(i + 1) % L]) for i in range(L)]
        inside_faces = self.faces_cut_from_outer(cedges)
        cset = set(cycle)
        strict: set[int] = set()
        for fi in inside_faces:
            for v in self.faces[fi]:
                if v not in cset:
                    strict.add(v)
        return L + len(strict), strict


def enumerate_simple_cycles(t: Triangulation, max_len: int,
                            budget: int | None = DEFAULT_BUDGET,
                            fs: FaceStructure | None = None):
    """All simple cycles of length <= max_len, with interior counts.

    Yields (cycle, v_inside, t_inside): v_inside counts the interior
    including the cycle's vertices, t_inside only the strictly interior
    ones.  Each cycle appears once: it is grown from its smallest vertex
    and its orientation is fixed by second-vertex < last-vertex.
    """
    if fs is None:
        fs = FaceStructure(t)
    n = t.n
    rot = t.rotations
    nodes = 0
    for start in range(n):
        path = [start]
        onpath = {start}

        def extend():
            nonlocal nodes
            v = path[-1]
            for w in rot[v]:
                if w == start and len(path) >= 3:
                    if path[1] < path[-1]:
                        cyc = tuple(path)
                        v_in, strict = fs.cycle_interior(cyc)
                        yield cyc, v_in, len(strict)
                elif w > start and w not in onpath and len(path) < max_len:
                    nodes += 1
                    if budget is not None and nodes > budget:
                        raise BudgetExceeded(
                            f"cycle budget {budget} exceeded at start {start}",
                            nodes)
                    path.append(w)
                    onpath.add(w)
                    yield from extend()
                    onpath.discard(w)
                    path.pop()

        yield from extend()


# ---------------------------------------------------------------------------
# Counting subgraphs with prescribed parameters (wheel-chain bound)

def count_bound_check_subgraphs(t: Triangulation, i: int, c: int, tpar: int,
                                j_edges=None,
                                budget: int | None = 5_000_000):
    """Exact number of subgraphs I of J with |I| = i, c(I) = c, t(I) = tpar,
    against the wheel-regime counting bound (2048 e)^i C(2j, c) l^t.

    Returns (count, bound) with bound a certified rational lower bound of
    the true transcendental expression; count <= bound therefore implies
    the true inequality.  i must be >= 1.
    """
    from .constructors import wheel_structure

    if i < 1:
        raise ValueError("enumeration starts at i >= 1")
    rim_len, _hubs = wheel_structure(t)
    if j_edges is None:
        j_edges = t.edges()
    j_edges = sorted((min(u, v), max(u, v)) for u, v in j_edges)
    j = len(j_edges)
    if binom(j, i) > (budget or 10**18):
        raise BudgetExceeded(f"C({j},{i}) subsets exceed budget {budget}",
                             binom(j, i))
    count = 0
    for subset in itertools.combinations(j_edges, i):
        fr = fragment_params(t, subset)
        if fr.c == c and fr.t == tpar:
            count += 1
    bound = (Fraction(2048) * E_LO) ** i * binom(2 * j, c) * rim_len ** tpar
    return count, bound
