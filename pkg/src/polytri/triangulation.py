"""Labeled plane triangulations of a k-gon, stored as rotation systems.

A triangulation here is a simple connected plane graph on vertices 0..n-1
whose outer face is a k-cycle (the boundary) and whose every other face is
a triangle.  The embedding is carried by the rotation system: for each
vertex, the cyclic counterclockwise order of its neighbors.  Faces are
recovered by tracing the rotation system, never by a planarity algorithm;
the constructors know their embedding and all downstream invariants are
statements about faces.

Such a graph has exactly m = 3n - 3 - k edges and, by Euler's formula,
2 + m - n faces in total (2n - 2 - k inner triangles plus the outer face).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

__all__ = [
    "Triangulation",
    "ValidationReport",
    "StructuralError",
    "validate",
    "faces",
    "edge_count_formula",
    "to_json",
    "from_json",
    "to_dot",
]

REGIME_TAGS = ("nested", "two-ring", "k4-sprinkle", "wheel-chain", "custom")


class StructuralError(ValueError):
    """Malformed graph data (dangling ids, asymmetric adjacency, loops).

    Distinct from an invariant failure: a structurally broken input cannot
    even be face-traced, so it raises instead of producing a failed
    ValidationReport.
    """


def edge_count_formula(n: int, k: int) -> int:
    """Edge count of any (n,k)-triangulation: 3n - 3 - k."""
    return 3 * n - 3 - k


@dataclass(frozen=True)
class Triangulation:
    """Immutable (n,k)-triangulation with an explicit combinatorial embedding.

    rotations[v] is the cyclic counterclockwise neighbor order at v.
    boundary lists the outer k-cycle in cyclic order.  internal is the set
    of the n - k vertices not on the boundary.  Immutability makes
    instances safe to share across parallel workers.
    """

    rotations: tuple[tuple[int, ...], ...]
    boundary: tuple[int, ...]
    internal: frozenset[int]
    regime_tag: str = "custom"

    @property
    def n(self) -> int:
        return len(self.rotations)

    @property
    def k(self) -> int:
        return len(self.boundary)

    @property
    def s(self) -> int:
        """Number of internal vertices, n - k."""
        return self.n - self.k

    @property
    def alpha(self) -> Fraction:
        """Boundary fraction k/n."""
        return Fraction(self.k, self.n)

    @property
    def m(self) -> int:
        """Actual number of edges."""
        return sum(len(r) for r in self.rotations) // 2

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def max_degree(self) -> int:
        return max(len(r) for r in self.rotations)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v, lexicographic order."""
        out = []
        for u, nbrs in enumerate(self.rotations):
            for v in nbrs:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotations[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def link_cycle(self, v: int) -> tuple[int, ...]:
        """Neighbors of an internal vertex in rotation order.

        For an internal vertex of a triangulation the rotation order of its
        neighborhood is a cycle (the link); this is the cycle C(v) used by
        the per-vertex arc statistics.
        """
        if v in set(self.boundary):
            raise ValueError(f"vertex {v} is on the boundary; its link is not a cycle")
        return self.rotations[v]


@dataclass
class ValidationReport:
    """Outcome of the invariant checks, one (name, passed, witness) per check."""

    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def add(self, name: str, ok: bool, witness: str = "") -> None:
        self.checks.append((name, ok, witness))

    def failures(self) -> list[tuple[str, str]]:
        return [(name, w) for name, ok, w in self.checks if not ok]

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": n, "passed": ok, "witness": w} for n, ok, w in self.checks
            ],
        }


def check_structure(t: Triangulation) -> None:
    """Raise StructuralError unless ids are dense and adjacency is symmetric."""
    n = t.n
    if n == 0:
        raise StructuralError("empty vertex set")
    for v, nbrs in enumerate(t.rotations):
        seen = set()
        for u in nbrs:
            if not (0 <= u < n):
                raise StructuralError(f"vertex {v} lists out-of-range neighbor {u}")
            if u == v:
                raise StructuralError(f"loop at vertex {v}")
            if u in seen:
                raise StructuralError(f"parallel edge {v}-{u}")
            seen.add(u)
    for v, nbrs in enumerate(t.rotations):
        for u in nbrs:
            if v not in t.rotations[u]:
                raise StructuralError(f"asymmetric adjacency: {v} lists {u} but not back")
    for b in t.boundary:
        if not (0 <= b < n):
            raise StructuralError(f"boundary id {b} out of range")
    for v in t.internal:
        if not (0 <= v < n):
            raise StructuralError(f"internal id {v} out of range")


def _face_orbits(t: Triangulation) -> list[tuple[int, ...]]:
    """Trace all faces of the rotation system.

    From directed edge (u, v) the next directed edge of the same face is
    (v, w) where w follows u in the rotation at v.  Orbits of this
    successor map are the faces; each face is reported once, as the vertex
    sequence of its closed walk, starting from its lexicographically
    smallest directed edge.
    """
    pos = [
        {u: i for i, u in enumerate(nbrs)} for nbrs in t.rotations
    ]
    unused = {(u, v) for u, nbrs in enumerate(t.rotations) for v in nbrs}
    out: list[tuple[int, ...]] = []
    while unused:
        start = min(unused)
        walk = []
        u, v = start
        while True:
            walk.append(u)
            unused.discard((u, v))
            i = pos[v][u]
            w = t.rotations[v][(i + 1) % len(t.rotations[v])]
            u, v = v, w
            if (u, v) == start:
                break
            if len(walk) > 4 * len(unused) + 8 + 2 * t.m:
                raise StructuralError("rotation system does not close into faces")
        out.append(tuple(walk))
    return out


def faces(t: Triangulation) -> list[tuple[int, ...]]:
    """All faces as vertex cycles, outer face included, each listed once."""
    check_structure(t)
    return _face_orbits(t)


def outer_face_index(face_list: list[tuple[int, ...]], boundary: tuple[int, ...]) -> int | None:
    """Index of the unique face whose vertex set is the boundary set, else None."""
    bset = set(boundary)
    hits = [i for i, f in enumerate(face_list) if set(f) == bset and len(f) == len(boundary)]
    if len(hits) == 1:
        return hits[0]
    return None


def _is_connected(t: Triangulation) -> bool:
    n = t.n
    seen = [False] * n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        v = stack.pop()
        for u in t.rotations[v]:
            if not seen[u]:
                seen[u] = True
                count += 1
                stack.append(u)
    return count == n


def validate(t: Triangulation) -> ValidationReport:
    """Check every (n,k)-triangulation invariant by tracing the embedding.

    Structural defects raise StructuralError; invariant violations are
    reported, with a witness, in the returned ValidationReport.
    """
    check_structure(t)
    rep = ValidationReport()
    n, k, m = t.n, t.k, t.m

    rep.add("k-range", 3 <= k <= n, f"k={k}, n={n}")
    rep.add("connected", _is_connected(t), "")

    expected_m = edge_count_formula(n, k)
    rep.add("edge-count", m == expected_m, f"m={m}, 3n-3-k={expected_m}")

    deg_sum = sum(len(r) for r in t.rotations)
    rep.add("degree-sum", deg_sum == 2 * m, f"sum={deg_sum}, 2m={2 * m}")

    bset = set(t.boundary)
    boundary_simple = len(bset) == k and k >= 3
    if boundary_simple:
        for i in range(k):
            u, v = t.boundary[i], t.boundary[(i + 1) % k]
            if not t.has_edge(u, v):
                boundary_simple = False
                rep.add("boundary-cycle", False, f"missing boundary edge {u}-{v}")
                break
        else:
            rep.add("boundary-cycle", True, "")
    else:
        rep.add("boundary-cycle", False, "boundary ids not distinct")

    part_ok = t.internal.isdisjoint(bset) and len(t.internal) == n - k and (
        t.internal | bset == set(range(n))
    )
    rep.add("internal-partition", part_ok, f"|S|={len(t.internal)}, n-k={n - k}")

    face_list = _face_orbits(t)
    rep.add("euler", len(face_list) == 2 + m - n,
            f"faces={len(face_list)}, 2+m-n={2 + m - n}")

    outer = outer_face_index(face_list, t.boundary)
    if outer is None:
        rep.add("outer-face", False, "no unique face matches the boundary")
    else:
        rep.add("outer-face", True, "")
        bad = [f for i, f in enumerate(face_list) if i != outer and len(f) != 3]
        rep.add("inner-faces-triangular", not bad,
                f"non-triangular inner face {bad[0]}" if bad else "")
    return rep


# ---------------------------------------------------------------------------
# JSON / DOT interchange

def to_json_dict(t: Triangulation) -> dict:
    return {
        "n": t.n,
        "k": t.k,
        "boundary": list(t.boundary),
        "rotations": {str(v): list(nbrs) for v, nbrs in enumerate(t.rotations)},
        "internal": sorted(t.internal),
        "regime_tag": t.regime_tag,
    }


def to_json(t: Triangulation) -> str:
    """Canonical JSON text; identical input yields byte-identical output."""
    return json.dumps(to_json_dict(t), sort_keys=True, indent=2) + "\n"


def from_json_dict(d: dict) -> Triangulation:
    try:
        n = int(d["n"])
        rotations = tuple(
            tuple(int(u) for u in d["rotations"][str(v)]) for v in range(n)
        )
        boundary = tuple(int(v) for v in d["boundary"])
        internal = frozenset(int(v) for v in d["internal"])
        tag = str(d.get("regime_tag", "custom"))
    except (KeyError, TypeError, ValueError) as exc:
        raise StructuralError(f"bad triangulation JSON: {exc}") from exc
    if int(d["k"]) != len(boundary):
        raise StructuralError("k field disagrees with boundary length")
    t = Triangulation(rotations=rotations, boundary=boundary, internal=internal,
                      regime_tag=tag)
    check_structure(t)
    return t


def from_json(text: str) -> Triangulation:
    return from_json_dict(json.loads(text))


def to_dot(t: Triangulation) -> str:
    """GraphViz text with boundary edges drawn bold/blue."""
    bedges = set()
    k = t.k
    for i in range(k):
        u, v = t.boundary[i], t.boundary[(i + 1) % k]
        bedges.add((min(u, v), max(u, v)))
    lines = [f'graph "{t.regime_tag}_{t.n}_{t.k}" {{']
    for v in range(t.n):
        shape = "doublecircle" if v in t.internal else "circle"
        lines.append(f'  {v} [shape={shape}];')
    for u, v in t.edges():
        style = ' [style=bold, color=blue]' if (u, v) in bedges else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
