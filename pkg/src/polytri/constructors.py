"""The four explicit (n,k)-triangulation families and their shared pieces.

Every constructor lays its graph out with explicit plane coordinates and
derives the rotation system by sorting each vertex's neighbors by angle;
`validate` then certifies the embedding by face tracing.  Vertex ids are
dense and canonical per constructor, so the same (n, k) always produces
byte-identical JSON.

Canonical numbering:

* nested       ring-major then angular: ring i (1..c) occupies ids
               (i-1)k .. ik-1, boundary is ring 1; the r residual vertices
               get ids ck .. ck+r-1 in angular order.
* two-ring     boundary 0..k-1 in cycle order, inner cycle k..n-1.
* k4-sprinkle  polygon 0..k-1, face centers k..n-1 in comb-face order.
* wheel-chain  boundary 0..k-1 along the outer cycle starting at the
               bottom-left corner of the first wheel, hubs k..n-1 left to
               right.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .triangulation import Triangulation, edge_count_formula

__all__ = [
    "ConstructionError",
    "ConstructionParams",
    "even_edge_select",
    "arc_bound_violations",
    "comb_triangulate",
    "comb_faces",
    "construct_nested",
    "construct_two_ring",
    "construct_k4_sprinkle",
    "construct_wheel_chain",
    "construct_comb_polygon",
    "auto_construct",
    "wheel_rim_range",
    "nested_layout",
]

TAU = 2.0 * math.pi


class ConstructionError(ValueError):
    """Parameter outside a constructor's regime, or no feasible layout."""


@dataclass(frozen=True)
class ConstructionParams:
    """Derived parameters of a construction at (n, k).

    c and r come from the nested decomposition n = ck + r (c >= 2,
    0 <= r <= k-1).  rim_len is the wheel-chain cycle length.  spacing is
    the guaranteed separation between dense patterns: floor((k-2)/s) for
    the K4 regime, rim_len + 3 for the wheel regime.
    """

    n: int
    k: int
    regime: str
    s: int
    alpha: Fraction
    c: int | None = None
    r: int | None = None
    rim_len: int | None = None
    spacing: int | None = None


# ---------------------------------------------------------------------------
# Even edge selection on a cycle

def even_edge_select(a: int, b: int) -> frozenset[int]:
    """Pick a edges of a b-cycle so every arc holds at most len*a/b + 1 of them.

    Edge position p means the edge (p, p+1 mod b) of a cycle with vertices
    0..b-1.  The canonical choice takes positions floor(i*b/a) - 1 for
    i = 1..a, which are pairwise distinct because b/a > 1.
    """
    if not (0 <= a < b):
        raise ConstructionError(f"need 0 <= a < b, got a={a}, b={b}")
    if a == 0:
        return frozenset()
    return frozenset((i * b) // a - 1 for i in range(1, a + 1))


def arc_bound_violations(a: int, b: int) -> list[tuple[int, int, int]]:
    """Exact exhaustive arc-bound check for the canonical selection.

    Returns all (start_position, arc_length, count) with
    count > arc_length*a/b + 1, i.e. (count-1)*b > arc_length*a; empty
    means the bound holds for every proper arc.  An arc with c selected
    edges is never shorter than the span from one selected edge to the
    (c-1)-th next selected edge, so only those spans need checking.
    """
    if a == 0:
        return []
    pos = np.array(sorted(even_edge_select(a, b)), dtype=np.int64)
    shift = (np.arange(a)[:, None] + np.arange(a)[None, :]) % a
    # span[i, j] = length of the arc from selected edge i through the j-th next one
    span = (pos[shift] - pos[:, None]) % b + 1
    counts = np.arange(1, a + 1)[None, :]
    proper = span <= b - 1
    bad = proper & ((counts - 1) * b > span * a)
    out = []
    for i, j in zip(*np.nonzero(bad)):
        out.append((int(pos[i]), int(span[i, j]), int(j + 1)))
    return out


# ---------------------------------------------------------------------------
# Comb triangulation of a polygon

def _comb_path_positions(length: int) -> list[int]:
    """Zigzag position order 0, L-2, 1, L-3, ... over positions 0..L-2."""
    out = []
    lo, hi = 0, length - 2
    take_lo = True
    while lo <= hi:
        if take_lo:
            out.append(lo)
            lo += 1
        else:
            out.append(hi)
            hi -= 1
        take_lo = not take_lo
    return out


def comb_triangulate(cycle) -> list[tuple[int, int]]:
    """Chords triangulating a polygon like the square of a Hamilton path.

    The zigzag path visits cycle positions 0, L-2, 1, L-3, ...; every path
    edge except the last is a chord, giving the L-3 chords of a fan-free
    triangulation in which no vertex gains more than 2 chord endpoints.
    The input order is taken as canonical; callers start the cycle at
    their canonical vertex.
    """
    cyc = list(cycle)
    L = len(cyc)
    if L < 3:
        raise ConstructionError(f"cycle length {L} < 3")
    path = _comb_path_positions(L)
    chords = []
    for x, y in zip(path, path[1:]):
        d = abs(x - y)
        if d != 1 and d != L - 1:
            u, v = cyc[x], cyc[y]
            chords.append((min(u, v), max(u, v)))
    return chords


def comb_faces(cycle) -> list[tuple[int, int, int]]:
    """Triangles of the comb triangulation in dual-path (left-to-right) order."""
    cyc = list(cycle)
    L = len(cyc)
    path = _comb_path_positions(L)
    out = [(cyc[L - 1], cyc[0], cyc[L - 2])]
    for j in range(L - 3):
        out.append((cyc[path[j]], cyc[path[j + 1]], cyc[path[j + 2]]))
    return out


# ---------------------------------------------------------------------------
# Rotation systems from straight-line layouts

def _rotations_from_coords(n, edges, coords) -> tuple[tuple[int, ...], ...]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    rot = []
    for v in range(n):
        x, y = coords[v]
        nbrs = sorted(adj[v], key=lambda u: math.atan2(coords[u][1] - y,
                                                       coords[u][0] - x))
        rot.append(tuple(nbrs))
    return tuple(rot)


def _assemble(n, k, edges, coords, boundary, tag) -> Triangulation:
    m = len(set((min(u, v), max(u, v)) for u, v in edges))
    if m != len(edges):
        raise ConstructionError("duplicate edge generated")
    if m != edge_count_formula(n, k):
        raise ConstructionError(
            f"edge count {m} != 3n-3-k = {edge_count_formula(n, k)}")
    internal = frozenset(range(n)) - frozenset(boundary)
    return Triangulation(
        rotations=_rotations_from_coords(n, edges, coords),
        boundary=tuple(boundary),
        internal=internal,
        regime_tag=tag,
    )


# ---------------------------------------------------------------------------
# Nested rings (regime n >= 2k)

def construct_nested(n: int, k: int) -> Triangulation:
    """Concentric k-cycles joined by a triangle lattice, residuals subdividing
    the innermost cycle, comb-triangulated core.  Maximum degree 7.

    The rotation system is written down directly from the lattice
    structure (ring-major ids, counterclockwise angular order); residual
    bulges make a single straight-line recipe impossible for small k, so
    no coordinates are involved.
    """
    if k < 3 or n < 2 * k:
        raise ConstructionError(f"nested regime needs 3 <= k, n >= 2k; got ({n}, {k})")
    c, r = divmod(n, k)

    def rid(i, j):  # ring i in 1..c, angular index j mod k
        return (i - 1) * k + (j % k)

    positions = sorted(even_edge_select(r, k))
    res_id = {p: c * k + t for t, p in enumerate(positions)}

    cyc = []  # extended innermost cycle, residuals in place
    for j in range(k):
        cyc.append(rid(c, j))
        if j in res_id:
            cyc.append(res_id[j])
    L = len(cyc)
    pos_in_cyc = {v: p for p, v in enumerate(cyc)}
    partners: dict[int, list[int]] = {v: [] for v in cyc}
    for u, v in comb_triangulate(cyc):
        partners[u].append(v)
        partners[v].append(u)

    def inner_list(v):
        """Cycle and chord neighbors of a C_c vertex, counterclockwise:
        ccw cycle neighbor first, chords by increasing ccw distance, cw
        cycle neighbor last."""
        p = pos_in_cyc[v]
        chords = sorted(partners[v], key=lambda w: (pos_in_cyc[w] - p) % L)
        return [cyc[(p + 1) % L]] + chords + [cyc[(p - 1) % L]]

    rot: dict[int, list[int]] = {}
    for j in range(k):
        if c == 2:
            down = [rid(2, j + 1)]
            if j in res_id:
                down.append(res_id[j])
            down.append(rid(2, j))
        else:
            down = [rid(2, j + 1), rid(2, j)]
        rot[rid(1, j)] = [rid(1, j + 1)] + down + [rid(1, j - 1)]
    for i in range(2, c):
        for j in range(k):
            down = [rid(i + 1, j + 1)]
            if i == c - 1 and j in res_id:
                down.append(res_id[j])
            down.append(rid(i + 1, j))
            rot[rid(i, j)] = ([rid(i - 1, j), rid(i, j + 1)] + down
                              + [rid(i, j - 1), rid(i - 1, j - 1)])
    for j in range(k):
        v = rid(c, j)
        rot[v] = [rid(c - 1, j)] + inner_list(v) + [rid(c - 1, j - 1)]
    for p, u in res_id.items():
        rot[u] = [rid(c - 1, p)] + inner_list(u)

    rotations = tuple(tuple(rot[v]) for v in range(n))
    m = sum(len(x) for x in rotations) // 2
    if m != edge_count_formula(n, k):
        raise ConstructionError(
            f"edge count {m} != 3n-3-k = {edge_count_formula(n, k)}")
    return Triangulation(
        rotations=rotations,
        boundary=tuple(range(k)),
        internal=frozenset(range(k, n)),
        regime_tag="nested",
    )


def nested_layout(t: Triangulation):
    """Recompute the (ring, angle) lattice data of a nested construction.

    Returns (c, r, ring, angle, is_residual, inner_cycle, e_int) where ring
    and angle are per-vertex (residuals carry ring c and the angle of the
    edge they subdivide), inner_cycle is the extended innermost cycle in
    order, and e_int is the set of comb chords (the inner triangulation
    minus the cycle itself).
    """
    if t.regime_tag != "nested":
        raise ValueError("nested layout requires a nested-regime triangulation")
    n, k = t.n, t.k
    c, r = divmod(n, k)
    positions = sorted(even_edge_select(r, k))
    ring = [0] * n
    angle = [0] * n
    is_res = [False] * n
    for i in range(1, c + 1):
        for j in range(k):
            ring[(i - 1) * k + j] = i
            angle[(i - 1) * k + j] = j
    for tdx, p in enumerate(positions):
        v = c * k + tdx
        ring[v] = c
        angle[v] = p
        is_res[v] = True
    cyc = []
    res_id = {p: c * k + tdx for tdx, p in enumerate(positions)}
    for j in range(k):
        cyc.append((c - 1) * k + j)
        if j in res_id:
            cyc.append(res_id[j])
    e_int = frozenset(tuple(sorted(e)) for e in comb_triangulate(cyc))
    assert e_int <= t.edge_set()
    return c, r, ring, angle, is_res, cyc, e_int


# ---------------------------------------------------------------------------
# Two rings (regime k < n < 2k)

def construct_two_ring(n: int, k: int) -> Triangulation:
    """All s = n-k internal vertices on one inner cycle, each joined to a
    consecutive boundary group plus the next group's first vertex.
    Maximum degree 5 + ceil(k/s).

    Rotations are written down directly: the boundary and the inner cycle
    both run counterclockwise, group i of the boundary faces inner
    vertex i, and the inner cycle is comb-triangulated.
    """
    if not (3 <= k < n < 2 * k):
        raise ConstructionError(f"two-ring regime needs k < n < 2k; got ({n}, {k})")
    s = n - k
    rot: dict[int, list[int]] = {}

    if s == 1:
        for j in range(k):
            rot[j] = [(j + 1) % k, k, (j - 1) % k]
        rot[k] = list(range(k))
    else:
        seps = sorted(even_edge_select(s, k))
        group_of = {}
        first_of = {}
        runs = []
        for i in range(s):
            lo = (seps[i - 1] + 1) % k
            length = (seps[i] - seps[i - 1]) % k
            run = [(lo + step) % k for step in range(length)]
            runs.append(run)
            first_of[i] = lo
            for v in run:
                group_of[v] = i
        for j in range(k):
            i = group_of[j]
            inner = [k + i]
            if j == first_of[i]:
                inner.append(k + (i - 1) % s)
            rot[j] = [(j + 1) % k] + inner + [(j - 1) % k]
        partners: dict[int, list[int]] = {k + i: [] for i in range(s)}
        if s >= 3:
            for u, v in comb_triangulate([k + i for i in range(s)]):
                partners[u].append(v)
                partners[v].append(u)
        for i in range(s):
            nxt = first_of[(i + 1) % s]
            chords = sorted(partners[k + i], key=lambda w: (w - k - i) % s)
            rot[k + i] = (runs[i] + [nxt, k + (i + 1) % s]
                          + chords + [k + (i - 1) % s])
        if s == 2:
            # the inner "cycle" is a single edge; drop the duplicate entry
            for i in range(2):
                lst = rot[k + i]
                seen_other = False
                cleaned = []
                for w in lst:
                    if w == k + (1 - i):
                        if seen_other:
                            continue
                        seen_other = True
                    cleaned.append(w)
                rot[k + i] = cleaned

    rotations = tuple(tuple(rot[v]) for v in range(n))
    m = sum(len(x) for x in rotations) // 2
    if m != edge_count_formula(n, k):
        raise ConstructionError(
            f"edge count {m} != 3n-3-k = {edge_count_formula(n, k)}")
    return Triangulation(
        rotations=rotations,
        boundary=tuple(range(k)),
        internal=frozenset(range(k, n)),
        regime_tag="two-ring",
    )


def two_ring_groups(t: Triangulation) -> list[list[int]]:
    """Boundary groups V_1..V_s of a two-ring construction, in inner-cycle order."""
    if t.regime_tag != "two-ring":
        raise ValueError("requires a two-ring triangulation")
    n, k = t.n, t.k
    s = n - k
    if s == 1:
        return [list(range(k))]
    seps = sorted(even_edge_select(s, k))
    groups = []
    for i in range(s):
        lo = (seps[i - 1] + 1) % k
        length = (seps[i] - seps[i - 1]) % k
        groups.append([(lo + step) % k for step in range(length)])
    return groups


# ---------------------------------------------------------------------------
# K4 sprinkle (regime of few internal vertices)

def construct_k4_sprinkle(n: int, k: int) -> Triangulation:
    """Comb triangulation of the k-gon with s = n-k face centers spread at
    least floor((k-2)/s) comb faces apart, each forming a K4.

    With spacing >= 3 no two chosen faces share a vertex and the maximum
    degree is 5; denser sprinkles (possible at desk scale down to
    spacing 1) stay valid triangulations but can reach degree 7.
    """
    s = n - k
    if not (1 <= s <= k - 2):
        raise ConstructionError(
            f"k4-sprinkle regime needs 1 <= n-k <= k-2; got ({n}, {k})")
    edges = []
    coords = {}
    for j in range(k):
        coords[j] = (math.cos(TAU * j / k), math.sin(TAU * j / k))
        edges.append((j, (j + 1) % k))
    polygon = list(range(k))
    edges.extend(comb_triangulate(polygon))
    face_list = comb_faces(polygon)
    if s == k - 2:
        chosen = list(range(k - 2))  # every comb face carries a center
    else:
        chosen = sorted(even_edge_select(s, k - 2))
    for t_idx, f_idx in enumerate(chosen):
        center = k + t_idx
        a, b, c = face_list[f_idx]
        coords[center] = ((coords[a][0] + coords[b][0] + coords[c][0]) / 3.0,
                          (coords[a][1] + coords[b][1] + coords[c][1]) / 3.0)
        edges.extend([(center, a), (center, b), (center, c)])
    return _assemble(n, k, edges, coords, list(range(k)), "k4-sprinkle")


def k4_spacing(n: int, k: int) -> int:
    """Guaranteed comb-face separation floor((k-2)/s) between K4 centers."""
    s = n - k
    if s <= 0:
        raise ConstructionError("k4 spacing undefined for s = 0")
    return (k - 2) // s


# ---------------------------------------------------------------------------
# Wheel chain (intermediate regime)

def wheel_rim_range(n: int, k: int) -> tuple[int, int]:
    """Inclusive feasible rim-length interval for a wheel chain at (n, k).

    Block counting gives n - L + 1 <= s(2L + 1) <= n + L, i.e.
    L in [ceil((n+1-s)/(2s+1)), floor((n-s)/(2s-1))].  Rim lengths below 5
    are excluded so hubs are the strict maximum degree (non-hub degrees
    reach 5).  The interval may be empty.
    """
    s = n - k
    if s < 1:
        raise ConstructionError("wheel chain needs at least one internal vertex")
    lo = max(5, -((n + 1 - s) // -(2 * s + 1)))
    hi = (n - s) // (2 * s - 1)
    return lo, hi


def construct_wheel_chain(n: int, k: int, rim_len: int | None = None) -> Triangulation:
    """Chain of s wheels (rim length L, hub joined to the whole rim)
    alternating with comb blocks of L+4 vertices; consecutive blocks share
    exactly one edge, and a final comb block of 2..2L+1 vertices absorbs
    the remainder.  Hub degrees equal L, all other degrees are at most 5.

    rim_len defaults to the smallest feasible value.
    """
    s = n - k
    lo, hi = wheel_rim_range(n, k)
    if rim_len is None:
        if lo > hi:
            if s * (2 * lo + 1) > n + lo:
                side = f"s + 2Ls = {s * (2 * lo + 1)} > n + L = {n + lo} at L = {lo}"
            else:
                side = f"s + 2Ls = {s * (2 * lo + 1)} < n - L + 1 = {n - lo + 1} at L = {lo}"
            raise ConstructionError(f"no feasible rim length for ({n}, {k}): {side}")
        rim_len = lo
    elif not (lo <= rim_len <= hi):
        raise ConstructionError(
            f"rim length {rim_len} outside feasible range [{lo}, {hi}] for ({n}, {k})")
    L = rim_len
    b = n + L + 2 - s * (2 * L + 1)
    assert 2 <= b <= 2 * L + 1

    blocks: list[tuple[str, int]] = []
    for i in range(s):
        blocks.append(("wheel", L))
        if i < s - 1:
            blocks.append(("comb", L + 4))
    if b >= 3:
        blocks.append(("comb", b))

    coords: dict[object, tuple[float, float]] = {}
    edge_objs: list[tuple[object, object]] = []
    hubs: list[object] = []
    bottoms: list[list[object]] = []   # per block: bottom extras west->east, then rb
    tops: list[list[object]] = []      # per block: top extras east->west, then lt
    first_lb = first_lt = None
    prev_rb = prev_rt = None

    for t_idx, (kind, p) in enumerate(blocks):
        x0, x1 = float(t_idx), float(t_idx + 1)
        if t_idx == 0:
            lb, lt = ("v", t_idx, "lb"), ("v", t_idx, "lt")
            coords[lb] = (x0, -1.0)
            coords[lt] = (x0, 1.0)
            first_lb, first_lt = lb, lt
        else:
            lb, lt = prev_rb, prev_rt
        if p == 3:
            # only the final block can be a bare triangle on the glue edge
            apex = ("v", t_idx, "apex")
            coords[apex] = (x0 + 0.6, 0.0)
            cyc = [lb, apex, lt]
            bottoms.append([apex])
            tops.append([lt])
        else:
            nb = (p - 4) // 2
            nt = p - 4 - nb
            rb, rt = ("v", t_idx, "rb"), ("v", t_idx, "rt")
            coords[rb] = (x1, -1.0)
            coords[rt] = (x1, 1.0)
            bot = []
            for j in range(nb):
                frac = (j + 1) / (nb + 1)
                v = ("v", t_idx, "b", j)
                coords[v] = (x0 + frac, -1.0 - 0.6 * math.sin(math.pi * frac))
                bot.append(v)
            top = []
            for j in range(nt):
                frac = (j + 1) / (nt + 1)
                v = ("v", t_idx, "t", j)
                coords[v] = (x1 - frac, 1.0 + 0.6 * math.sin(math.pi * frac))
                top.append(v)
            cyc = [lb] + bot + [rb, rt] + top + [lt]
            bottoms.append(bot + [rb])
            tops.append(top + [lt])
            prev_rb, prev_rt = rb, rt
        for i in range(len(cyc)):
            if t_idx > 0 and i == len(cyc) - 1:
                continue  # the closing (lt, lb) edge is the glue edge, already present
            edge_objs.append((cyc[i], cyc[(i + 1) % len(cyc)]))
        if kind == "wheel":
            hub = ("hub", t_idx)
            cx = sum(coords[v][0] for v in cyc) / len(cyc)
            coords[hub] = (cx, 0.0)
            hubs.append(hub)
            for v in cyc:
                edge_objs.append((hub, v))
        else:
            edge_objs.extend(comb_triangulate(cyc))

    # Outer boundary: bottom chains west->east, the final east edge, then
    # top chains east->west.  Each block's rb doubles as the next block's
    # lb and each lt is the previous block's rt, so every corner appears
    # exactly once.
    walk: list[object] = [first_lb]
    for bot in bottoms:
        walk.extend(bot)
    if blocks[-1][1] != 3:
        walk.append(("v", len(blocks) - 1, "rt"))
    for t_idx in range(len(blocks) - 1, -1, -1):
        walk.extend(tops[t_idx])

    if len(walk) != len(set(walk)) or len(walk) != k:
        raise ConstructionError(
            f"internal error: boundary walk has {len(walk)} vertices, want k = {k}")

    relabel = {v: i for i, v in enumerate(walk)}
    for i, h in enumerate(hubs):
        relabel[h] = k + i
    edges = [(relabel[u], relabel[v]) for u, v in edge_objs]
    xy = {relabel[v]: c for v, c in coords.items()}
    return _assemble(n, k, edges, xy, list(range(k)), "wheel-chain")


def wheel_structure(t: Triangulation):
    """(rim_len, hubs) of a wheel chain; hub rims are their rotation orders."""
    if t.regime_tag != "wheel-chain":
        raise ValueError("requires a wheel-chain triangulation")
    hubs = sorted(t.internal)
    degs = {t.degree(h) for h in hubs}
    if len(degs) != 1:
        raise ValueError("hub degrees disagree; not a wheel chain")
    return degs.pop(), hubs


# ---------------------------------------------------------------------------
# Pure comb polygon (the k = n case) and dispatch

def construct_comb_polygon(n: int) -> Triangulation:
    """The (n,n)-triangulation: the n-gon comb-triangulated (the plane
    drawing of the square of a Hamilton path), no internal vertices."""
    if n < 3:
        raise ConstructionError("polygon needs n >= 3")
    edges = []
    coords = {}
    for j in range(n):
        coords[j] = (math.cos(TAU * j / n), math.sin(TAU * j / n))
        edges.append((j, (j + 1) % n))
    edges.extend(comb_triangulate(list(range(n))))
    return _assemble(n, n, edges, coords, list(range(n)), "custom")


def wheel_chain_feasible(n: int, k: int) -> bool:
    if n - k < 1:
        return False
    lo, hi = wheel_rim_range(n, k)
    return lo <= hi


def auto_construct(n: int, k: int) -> Triangulation:
    """Dispatch (n, k) to a regime that is valid at desk scale.

    n >= 2k goes to nested.  Small s goes to the K4 sprinkle when the face
    spacing floor((k-2)/s) is at least 3, which is what guarantees its
    degree cap of 5.  Otherwise a feasible wheel chain with s < n/3 is
    used, and the two-ring construction (always valid for k < n < 2k)
    is the fallback.  s = 0 is the plain comb polygon.
    """
    if not (3 <= k <= n):
        raise ConstructionError(f"need 3 <= k <= n, got ({n}, {k})")
    if n < 4 and n != 3:
        raise ConstructionError(f"n too small: {n}")
    s = n - k
    if s == 0:
        return construct_comb_polygon(n)
    if n >= 2 * k:
        return construct_nested(n, k)
    if s <= math.isqrt(n - 1) + 1 and s <= k - 2 and (k - 2) // s >= 3:
        return construct_k4_sprinkle(n, k)
    if wheel_chain_feasible(n, k) and 3 * s < n:
        return construct_wheel_chain(n, k)
    return construct_two_ring(n, k)


def construction_params(t: Triangulation) -> ConstructionParams:
    """Regime parameters recovered from a constructed triangulation."""
    n, k, s = t.n, t.k, t.s
    alpha = Fraction(k, n)
    tag = t.regime_tag
    if tag == "nested":
        c, r = divmod(n, k)
        return ConstructionParams(n, k, tag, s, alpha, c=c, r=r)
    if tag == "k4-sprinkle":
        return ConstructionParams(n, k, tag, s, alpha, spacing=k4_spacing(n, k))
    if tag == "wheel-chain":
        rim, _ = wheel_structure(t)
        return ConstructionParams(n, k, tag, s, alpha, rim_len=rim,
                                  spacing=rim + 3)
    return ConstructionParams(n, k, tag, s, alpha)
