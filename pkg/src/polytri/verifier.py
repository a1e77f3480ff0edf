"""Exhaustive checks of the density and isoperimetric inequalities.

Each checker sweeps every fragment (connected edge subset) or every
simple cycle of a triangulation up to an explicit budget and tests the
inequality the corresponding regime's proof rests on.  All comparisons
are exact: the inequalities are tight at boundary cases (full wheels,
single K4s), so everything is cleared to integer arithmetic before any
comparison, and transcendental constants are replaced by certified
rational bounds in the conservative direction.

A report is `passed` only when the sweep finished inside its budget with
zero violations; a budget abort is inconclusive, never a pass.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .constructors import k4_spacing, nested_layout, wheel_structure
from .fragments import (
    BudgetExceeded,
    DEFAULT_BUDGET,
    EdgeIndex,
    FaceStructure,
    fragment_params,
    iter_connected_masks,
)
from .triangulation import Triangulation

__all__ = [
    "VerificationReport",
    "check_density_condition",
    "check_isoperimetric_nested",
    "check_isoperimetric_two_ring",
    "check_k4_regime",
    "check_wheel_regime",
    "default_density_params",
    "run_suite",
]

MAX_STORED_VIOLATIONS = 200


@dataclass
class VerificationReport:
    """Pass/fail outcome of one inequality sweep with violation witnesses."""

    condition: str
    params: dict
    checked: int = 0
    violation_count: int = 0
    violations: list[dict] = field(default_factory=list)
    aborted: bool = False
    abort_reason: str = ""

    @property
    def passed(self) -> bool:
        return self.violation_count == 0 and not self.aborted

    def record(self, witness: dict) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_STORED_VIOLATIONS:
            self.violations.append(witness)

    def as_dict(self) -> dict:
        return {
            "condition": self.condition,
            "params": {key: str(val) for key, val in self.params.items()},
            "checked": self.checked,
            "passed": self.passed,
            "aborted": self.aborted,
            "abort_reason": self.abort_reason,
            "violation_count": self.violation_count,
            "violations": self.violations[:MAX_STORED_VIOLATIONS],
        }


def _ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def default_density_params(t: Triangulation):
    """Regime defaults for the subgraph-density condition: q = 3 - k/n and
    (eps, delta) = (1/9, 8/9) in the nested regime, (2/5, 1/2) in the
    two-ring regime."""
    q = Fraction(3) - Fraction(t.k, t.n)
    if t.regime_tag == "nested":
        return q, Fraction(1, 9), Fraction(8, 9)
    if t.regime_tag == "two-ring":
        return q, Fraction(2, 5), Fraction(1, 2)
    return q, Fraction(1, 9), Fraction(8, 9)


def check_density_condition(t: Triangulation, q: Fraction | None = None,
                            eps: Fraction | None = None,
                            delta: Fraction | None = None,
                            max_edges: int = 12,
                            budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    """v(I) >= |I|/q + 1 + eps for every connected fragment with
    |I| <= delta*n, and v(I) >= |I|/q + 1 beyond, swept exhaustively over
    all connected fragments up to max_edges edges."""
    dq, de, dd = default_density_params(t)
    q = dq if q is None else Fraction(q)
    eps = de if eps is None else Fraction(eps)
    delta = dd if delta is None else Fraction(delta)
    rep = VerificationReport(
        "density", {"q": q, "eps": eps, "delta": delta, "max_edges": max_edges})
    # v is an integer, so v >= x reduces to v >= ceil(x): pure int compares
    vmin_small = [0] + [_ceil_frac(Fraction(i) / q + 1 + eps)
                        for i in range(1, max_edges + 1)]
    vmin_large = [0] + [_ceil_frac(Fraction(i) / q + 1)
                        for i in range(1, max_edges + 1)]
    small_cut = (delta * t.n).__floor__()
    # once v meets the largest future requirement, no descendant can violate
    need_at = [vmin_small[i] if i <= small_cut else vmin_large[i]
               for i in range(max_edges + 1)]
    prune_v = [max(need_at[j + 1:], default=10**9) for j in range(max_edges)]
    prune_v.append(10**9)
    idx = EdgeIndex(t)
    try:
        for root in range(t.n):
            for em, _vm, i, v in iter_connected_masks(idx, root, max_edges,
                                                      root, budget, prune_v):
                rep.checked += 1
                need = vmin_small[i] if i <= small_cut else vmin_large[i]
                if v < need:
                    rep.record({
                        "edges": idx.mask_edges(em),
                        "i": i, "v": v, "v_required": need,
                        "case": "small" if i <= small_cut else "large",
                    })
    except BudgetExceeded as exc:
        rep.aborted = True
        rep.abort_reason = str(exc)
    return rep


# ---------------------------------------------------------------------------
# Nested-regime isoperimetry (cycle inequality plus arc decomposition)

def _min_cyclic_interval(values: set[int], modulus: int) -> tuple[int, int]:
    """(width-1, start) of the smallest cyclic interval covering the values."""
    if not values:
        return 0, 0
    vals = sorted(values)
    if len(vals) == 1:
        return 0, vals[0]
    gaps = []
    for a, b in zip(vals, vals[1:] + [vals[0] + modulus]):
        gaps.append((b - a, a))
    biggest, after = max(gaps)
    start = (after + biggest) % modulus
    return modulus - biggest, start


def check_isoperimetric_nested(t: Triangulation, max_len: int | None = None,
                               budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    """Cycle inequality (l - 1/3)/v >= k/n for every simple cycle of length
    at most k-1, plus the arc decomposition bounds:

      per arc A with region M between the arc and the inner cycle,
        (l_A + 2/3)/v_M >= k/n          arc inequality
        v_M <= (w+1)h + (w+2)r/k + 1    region size from width and height
        l_A >= w + h - 1                arc length from width and height

    Arcs are the maximal runs of the cycle outside the inner comb chords;
    a cycle with no such chords is split by the equal-radial-coordinate
    rule.  Regions are cut out of the embedding exactly, by removing the
    arc and the inner cycle from the face adjacency.
    """
    layout = nested_layout(t)
    c, r, ring, angle, is_res, inner_cycle, e_int = layout
    n, k = t.n, t.k
    if max_len is None:
        max_len = k - 1
    rep = VerificationReport(
        "isoperimetric-nested",
        {"max_len": max_len, "c": c, "r": r, "k": k, "n": n})
    fs = FaceStructure(t)
    Lc = len(inner_cycle)
    cc_edges = [(inner_cycle[i], inner_cycle[(i + 1) % Lc]) for i in range(Lc)]
    disk_faces = fs.faces_cut_from_outer(cc_edges)

    def arc_stats(arc_path, extra_blocked):
        """(l_arc, v_M, w, h, y_consecutive) for one arc; M is the region cut
        off between the arc (plus extra blocked edges) and the inner cycle."""
        arc_edges = list(zip(arc_path, arc_path[1:]))
        pocket = fs.faces_cut_from_outer(arc_edges + extra_blocked + cc_edges)
        pocket -= disk_faces
        mverts = set(arc_path)
        for fi in pocket:
            mverts.update(fs.faces[fi])
        ys = {angle[v] for v in mverts if not is_res[v]}
        span, _ = _min_cyclic_interval(ys, k)
        w = max(len(ys) - 1, 0)
        h = len({ring[v] for v in arc_path})
        return len(arc_edges), len(mverts), w, h, span == len(ys) or not ys

    def check_arc(cyc, arc_path, extra_blocked):
        l_a, v_m, w, h, consecutive = arc_stats(arc_path, extra_blocked)
        if not consecutive:
            rep.record({"kind": "angle-gap-anomaly", "cycle": cyc,
                        "arc": tuple(arc_path)})
        if n * (3 * l_a + 2) < 3 * k * v_m:
            rep.record({"kind": "arc-ineq", "cycle": cyc, "arc": tuple(arc_path),
                        "l": l_a, "v": v_m})
        if k * v_m > k * (w + 1) * h + (w + 2) * r + k:
            rep.record({"kind": "region-size", "cycle": cyc,
                        "arc": tuple(arc_path), "v": v_m, "w": w, "h": h})
        if l_a < w + h - 1:
            rep.record({"kind": "arc-length", "cycle": cyc,
                        "arc": tuple(arc_path), "l": l_a, "w": w, "h": h})

    def split_paper_rule(cyc, strict):
        """P_1 choice for a cycle with no inner-comb edges: take a widest
        angular pair with the smallest ring difference, walk along the
        cycle to even out the rings, and return (A_1, P_1 edges)."""
        L = len(cyc)
        members = set(cyc) | set(strict)
        ys = {angle[v] for v in members if not is_res[v]}
        span, start = _min_cyclic_interval(ys, k)
        lo = start
        hi = (start + span - 1) % k
        ends_lo = [v for v in cyc if not is_res[v] and angle[v] == lo]
        ends_hi = [v for v in cyc if not is_res[v] and angle[v] == hi]
        pairs = [(x, y) for x in ends_lo for y in ends_hi if x != y]
        if not pairs:
            rep.record({"kind": "split-anomaly", "cycle": cyc,
                        "detail": "no widest pair on the cycle"})
            return None
        vv, uu = min(pairs, key=lambda p: (abs(ring[p[0]] - ring[p[1]]),
                                           min(p), max(p)))
        pos = {v: i for i, v in enumerate(cyc)}
        if ring[vv] == ring[uu]:
            i0, direction = pos[vv], 1
            lp = (pos[uu] - pos[vv]) % L + 1
        else:
            if ring[vv] < ring[uu]:
                vv, uu = uu, vv
            z = ring[vv]
            i0 = pos[vv]
            dirs = [d for d in (1, -1) if ring[cyc[(i0 + d) % L]] >= z]
            if not dirs:
                rep.record({"kind": "split-anomaly", "cycle": cyc,
                            "detail": "no inward neighbor at the chosen vertex"})
                return None
            direction = dirs[0] if len(dirs) == 1 else min(
                dirs, key=lambda d: cyc[(i0 + d) % L])
            lp = None
            for step in range(1, L):
                if ring[cyc[(i0 + direction * step) % L]] == z:
                    lp = step + 1
                    break
            if lp is None:
                rep.record({"kind": "split-anomaly", "cycle": cyc,
                            "detail": "radial walk found no equal-ring vertex"})
                return None
        p1 = [cyc[(i0 + direction * j) % L] for j in range(lp)]
        a_path = [cyc[(i0 + direction * j) % L] for j in range(lp - 1, L + 1)]
        if uu not in a_path:
            rep.record({"kind": "split-anomaly", "cycle": cyc,
                        "detail": "widest pair not on the arc"})
            return None
        return a_path, list(zip(p1, p1[1:]))

    from .fragments import enumerate_simple_cycles
    try:
        for cyc, v_in, t_in in enumerate_simple_cycles(t, max_len, budget, fs):
            rep.checked += 1
            L = len(cyc)
            if n * (3 * L - 1) < 3 * k * v_in:
                rep.record({"kind": "cycle-ineq", "cycle": cyc,
                            "l": L, "v": v_in})
            int_flags = [tuple(sorted((cyc[i], cyc[(i + 1) % L]))) in e_int
                         for i in range(L)]
            if not any(int_flags):
                _, strict = fs.cycle_interior(cyc)
                split = split_paper_rule(cyc, strict)
                if split is not None:
                    a_path, p1_edges = split
                    check_arc(cyc, a_path, p1_edges)
                continue
            if all(int_flags):
                rep.record({"kind": "split-anomaly", "cycle": cyc,
                            "detail": "cycle made entirely of comb chords"})
                continue
            # arcs are the maximal vertex paths between runs of comb edges:
            # from the vertex after one comb run to the first vertex of the
            # next (a single vertex when two comb runs meet)
            run_ends = [i for i in range(L)
                        if int_flags[i] and not int_flags[(i + 1) % L]]
            run_starts = [i for i in range(L)
                          if int_flags[i] and not int_flags[(i - 1) % L]]
            for end_e in run_ends:
                nxt_start = min(run_starts, key=lambda srt: (srt - end_e - 1) % L)
                length = (nxt_start - end_e - 1) % L
                arc_path = [cyc[(end_e + 1 + j) % L] for j in range(length + 1)]
                check_arc(cyc, arc_path, [])
    except BudgetExceeded as exc:
        rep.aborted = True
        rep.abort_reason = str(exc)
    return rep


def check_isoperimetric_two_ring(t: Triangulation, max_len: int | None = None,
                                 budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    """(l-1)/t >= k/s for every simple cycle of length at most k-1 with
    t > 0 strictly interior vertices, plus the neighborhood expansion of
    inner arcs: every arc of w > 0 inner-cycle vertices has at least
    w*k/s boundary neighbors."""
    if t.regime_tag != "two-ring":
        raise ValueError("requires a two-ring triangulation")
    n, k = t.n, t.k
    s = n - k
    if max_len is None:
        max_len = k - 1
    rep = VerificationReport("isoperimetric-two-ring",
                             {"max_len": max_len, "k": k, "s": s})
    from .fragments import enumerate_simple_cycles
    try:
        for cyc, _v_in, t_in in enumerate_simple_cycles(t, max_len, budget):
            rep.checked += 1
            if t_in > 0 and s * (len(cyc) - 1) < k * t_in:
                rep.record({"kind": "cycle-ineq", "cycle": cyc,
                            "l": len(cyc), "t_inside": t_in})
    except BudgetExceeded as exc:
        rep.aborted = True
        rep.abort_reason = str(exc)
        return rep
    bset = set(range(k))
    for w in range(1, s + 1):
        starts = range(s) if w < s else [0]
        for st in starts:
            arc = [k + (st + step) % s for step in range(w)]
            nbrs = set()
            for u in arc:
                nbrs.update(x for x in t.rotations[u] if x in bset)
            rep.checked += 1
            if s * len(nbrs) < w * k:
                rep.record({"kind": "arc-expansion", "arc": tuple(arc),
                            "w": w, "boundary_neighbors": len(nbrs)})
    return rep


# ---------------------------------------------------------------------------
# K4 regime

def check_k4_regime(t: Triangulation, max_edges: int = 12,
                    budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    """Over every connected fragment: |I| <= 2v + r - 3 (with the r = 0
    case doubling as the 2-degeneracy bound) and, when r > 0,
    |I| >= (r-1) * spacing / 2."""
    if t.regime_tag != "k4-sprinkle":
        raise ValueError("requires a k4-sprinkle triangulation")
    spacing = k4_spacing(t.n, t.k)
    rep = VerificationReport("k4-regime",
                             {"max_edges": max_edges, "spacing": spacing})
    idx = EdgeIndex(t)
    center_masks = []
    for u in sorted(t.internal):
        corners = t.rotations[u]
        mask = 0
        for x in corners:
            mask |= idx.ebit[idx.eid[(min(u, x), max(u, x))]]
        for a, b in itertools.combinations(sorted(corners), 2):
            mask |= idx.ebit[idx.eid[(a, b)]]
        center_masks.append(mask)
    # v >= (max_edges+3)/2 makes |I| <= 2v - 3 automatic downstream, and two
    # vertex-disjoint K4s plus a connector never fit in <= 12 edges, so the
    # separation bound cannot be missed either
    prune_v = None
    if spacing >= 3 and max_edges <= 12:
        prune_v = [(max_edges + 4) // 2] * (max_edges + 1)
    try:
        for root in range(t.n):
            for em, _vm, i, v in iter_connected_masks(idx, root, max_edges,
                                                      root, budget, prune_v):
                rep.checked += 1
                rr = 0
                for mask in center_masks:
                    if em & mask == mask:
                        rr += 1
                if i > 2 * v + rr - 3:
                    rep.record({"kind": "density" if rr else "2-degenerate",
                                "edges": idx.mask_edges(em),
                                "i": i, "v": v, "r": rr})
                if rr > 0 and 2 * i < (rr - 1) * spacing:
                    rep.record({"kind": "separation",
                                "edges": idx.mask_edges(em),
                                "i": i, "r": rr, "spacing": spacing})
    except BudgetExceeded as exc:
        rep.aborted = True
        rep.abort_reason = str(exc)
    return rep


# ---------------------------------------------------------------------------
# Wheel regime

def check_wheel_regime(t: Triangulation, max_edges: int = 12,
                       budget: int | None = DEFAULT_BUDGET) -> VerificationReport:
    """Over every connected fragment of a wheel chain:

      v >= i/2 + c + (c - c_S)/2 + t/2     component density (c = 1 here)
      |I(u)| <= 2 v(I(u)) - 2 - t(u)       per-hub sub-wheel density
      c_S - c_t <= i / (2 rim_len)         hub components without arcs
                                           contain a complete wheel
    """
    rim_len, hubs = wheel_structure(t)
    rep = VerificationReport("wheel-regime",
                             {"max_edges": max_edges, "rim_len": rim_len})
    idx = EdgeIndex(t)
    hub_data = []
    hub_vmask_all = 0
    for h in hubs:
        rim = t.rotations[h]
        L = len(rim)
        rim_vmask = 0
        for x in rim:
            rim_vmask |= idx.vbit[x]
        rim_emask = 0
        rim_edges = []
        for i in range(L):
            a, b = rim[i], rim[(i + 1) % L]
            e = idx.eid[(min(a, b), max(a, b))]
            rim_emask |= idx.ebit[e]
            rim_edges.append((e, i, (i + 1) % L))
        spokes = []
        for i, x in enumerate(rim):
            e = idx.eid[(min(h, x), max(h, x))]
            spokes.append((e, i))
        hub_vmask_all |= idx.vbit[h]
        hub_data.append((idx.vbit[h], rim_vmask, rim_emask, rim_edges, spokes, L))
    try:
        for root in range(t.n):
            for em, vm, i, v in iter_connected_masks(idx, root, max_edges,
                                                     root, budget):
                rep.checked += 1
                if not (vm & hub_vmask_all):
                    # no internal vertex: 2-degenerate bound
                    if i > 2 * v - 3:
                        rep.record({"kind": "2-degenerate",
                                    "edges": idx.mask_edges(em), "i": i, "v": v})
                    continue
                tsum = 0
                eq10_bad = None
                for hbit, rvm, remask, redges, spokes, L in hub_data:
                    if not (vm & hbit):
                        continue
                    rv = (vm & rvm).bit_count()
                    rem = em & remask
                    re = rem.bit_count()
                    t_u = 0 if re == L else rv - re
                    tsum += t_u
                    # Eq. 10 on the sub-wheel I(u)
                    present = 0
                    for e, pos in spokes:
                        if em >> e & 1:
                            present |= 1 << pos
                    iu = present.bit_count()
                    for e, p1, p2 in redges:
                        if (em >> e & 1) and (present >> p1 & 1) and (present >> p2 & 1):
                            iu += 1
                    vu = 1 + present.bit_count()
                    if iu > 2 * vu - 2 - t_u:
                        eq10_bad = {"kind": "hub-subwheel",
                                    "edges": idx.mask_edges(em),
                                    "i_u": iu, "v_u": vu, "t_u": t_u}
                if eq10_bad:
                    rep.record(eq10_bad)
                if 2 * v < i + 2 + tsum:
                    rep.record({"kind": "component-density",
                                "edges": idx.mask_edges(em),
                                "i": i, "v": v, "t": tsum})
                if tsum == 0 and i < 2 * rim_len:
                    rep.record({"kind": "wheel-completeness",
                                "edges": idx.mask_edges(em),
                                "i": i, "t": tsum, "rim_len": rim_len})
    except BudgetExceeded as exc:
        rep.aborted = True
        rep.abort_reason = str(exc)
    return rep


def run_suite(t: Triangulation, suite: str, max_edges: int = 12,
              budget: int | None = DEFAULT_BUDGET) -> list[VerificationReport]:
    """The named verification suite for a triangulation."""
    if suite == "density":
        return [check_density_condition(t, max_edges=max_edges, budget=budget)]
    if suite == "nested":
        return [check_isoperimetric_nested(t, budget=budget),
                check_density_condition(t, max_edges=max_edges, budget=budget)]
    if suite == "two-ring":
        return [check_isoperimetric_two_ring(t, budget=budget),
                check_density_condition(t, max_edges=max_edges, budget=budget)]
    if suite == "k4":
        return [check_k4_regime(t, max_edges=max_edges, budget=budget)]
    if suite == "wheel":
        return [check_wheel_regime(t, max_edges=max_edges, budget=budget)]
    raise ValueError(f"unknown suite {suite!r}")
