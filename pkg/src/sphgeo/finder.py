"""Geodesic solver and exhaustive search.

Closure of a candidate crossing sequence is solved algebraically: the closing
rotation of the development fixes exactly one great circle (the equator of
its axis), so a sequence either carries the unique geodesic with those
crossings or none at all.  No shooting, no root-finding.

The search over sequences is a depth-first walk over faces, pruned by a sound
pole-feasibility test (does any great circle cross all developed edges the
right way?) and by a running lower bound on length against the 2*pi cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .sphtrig import (
    PI,
    DomainError,
    Mat3,
    Vec3,
    angle_between,
    arcs_intersect,
    axis_angle,
    cross,
    dot,
    mat_apply,
    mat_compose,
    mat_transpose,
    neg,
    norm,
    normalize,
    pole_edge_crossing,
)
from .solids import SolidKind, SolidSpec, symmetry_group
from .unfold import CrossingSequence, Development, develop

TWO_PI = 2.0 * PI

FEAS_MARGIN = 1e-12  # declare a pole feasible only above this margin


class ClassificationError(ValueError):
    """A path's crossing counts do not fit the opposite-edge-pair pattern."""


@dataclass(frozen=True)
class Crossing:
    """One solved crossing: position and angle on the surface edge.

    t is the arc-length fraction measured from the smaller-id vertex;
    incidence is the angle between the oriented geodesic and the edge
    oriented the same way, in (0, pi).
    """

    edge: int
    t: float
    incidence: float


@dataclass(frozen=True)
class GeodesicPath:
    seq: CrossingSequence
    crossings: Tuple[Crossing, ...]
    arc_lengths: Tuple[float, ...]
    total_length: float
    pole: Vec3
    closure_residual: float


@dataclass(frozen=True)
class GeodesicClass:
    """Canonical representative of one geodesic up to solid symmetry."""

    seq: CrossingSequence          # lexicographic minimum over the full orbit
    path: GeodesicPath             # solved on the canonical sequence
    orbit_size: int
    tag: str


# ---------------------------------------------------------------------------
# pole feasibility: does a unit u exist with u.c > 0 for all constraints?


def _margin(u: Vec3, cons: Sequence[Vec3]) -> float:
    m = math.inf
    for c in cons:
        d = u[0] * c[0] + u[1] * c[1] + u[2] * c[2]
        if d < m:
            m = d
    return m


def _affine_min_norm(pts: List[Vec3]) -> Optional[Tuple[Vec3, List[float]]]:
    """Min-norm point of the affine hull of up to 4 points, with weights."""
    k = len(pts)
    if k == 1:
        return pts[0], [1.0]
    # KKT system for min |sum w_i p_i|^2 with sum w_i = 1
    size = k + 1
    m = [[0.0] * (size + 1) for _ in range(size)]
    for i in range(k):
        for j in range(k):
            m[i][j] = 2.0 * dot(pts[i], pts[j])
        m[i][k] = 1.0
        m[i][size] = 0.0
    for j in range(k):
        m[k][j] = 1.0
    m[k][size] = 1.0
    # gaussian elimination, partial pivoting
    for col in range(size):
        piv = max(range(col, size), key=lambda r: abs(m[r][col]))
        if abs(m[piv][col]) < 1e-14:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1.0 / m[col][col]
        for r in range(size):
            if r != col and m[r][col] != 0.0:
                f = m[r][col] * inv
                for c2 in range(col, size + 1):
                    m[r][c2] -= f * m[col][c2]
    w = [m[i][size] / m[i][i] for i in range(k)]
    x = (0.0, 0.0, 0.0)
    for wi, p in zip(w, pts):
        x = (x[0] + wi * p[0], x[1] + wi * p[1], x[2] + wi * p[2])
    return x, w


def _feasible_pole(
    cons: Sequence[Vec3], warm: Optional[Vec3] = None
) -> Tuple[bool, Optional[Vec3]]:
    """Decide whether some unit u has u.c > FEAS_MARGIN for every c in cons.

    By duality the best achievable margin equals the distance from the origin
    to the convex hull of the constraint vectors, so the decision is run as a
    minimum-norm-point computation (Wolfe's algorithm).  Any convex point with
    norm <= FEAS_MARGIN certifies infeasibility; a unit witness with margin >
    FEAS_MARGIN certifies feasibility; if neither certificate appears the set
    is reported feasible, which is the sound direction for search pruning.
    """
    if not cons:
        return True, warm
    if warm is not None and _margin(warm, cons) > FEAS_MARGIN:
        return True, warm
    idx = [0]
    weights = [1.0]
    x = cons[0]
    for _ in range(200):
        nx = norm(x)
        if nx <= FEAS_MARGIN:
            return False, None
        jmin = min(range(len(cons)), key=lambda j: dot(cons[j], x))
        dmin = dot(cons[jmin], x)
        if dmin >= dot(x, x) - 1e-15:
            # x is the min-norm point; its direction is the best pole
            u = normalize(x)
            if _margin(u, cons) > FEAS_MARGIN:
                return True, u
            return False, None
        if jmin in idx:
            break
        idx.append(jmin)
        weights.append(0.0)
        # minor cycle: pull x to the min-norm point of the corral
        while True:
            sol = _affine_min_norm([cons[j] for j in idx])
            if sol is None:
                idx.pop()
                weights.pop()
                break
            y, v = sol
            if all(vi > 1e-12 for vi in v):
                x = y
                weights = v
                break
            step = 1.0
            for wi, vi in zip(weights, v):
                if vi < 1e-12 and wi - vi > 1e-15:
                    step = min(step, wi / (wi - vi))
            weights = [(1.0 - step) * wi + step * vi for wi, vi in zip(weights, v)]
            x = (0.0, 0.0, 0.0)
            keep_i: List[int] = []
            keep_w: List[float] = []
            for j, wi in zip(idx, weights):
                if wi > 1e-12:
                    keep_i.append(j)
                    keep_w.append(wi)
            if not keep_i:
                keep_i = [idx[0]]
                keep_w = [1.0]
            idx, weights = keep_i, keep_w
            total = sum(weights)
            weights = [wi / total for wi in weights]
            for j, wi in zip(idx, weights):
                c = cons[j]
                x = (x[0] + wi * c[0], x[1] + wi * c[1], x[2] + wi * c[2])
    # no certificate either way: do not prune
    u = normalize(x) if norm(x) > 1e-14 else None
    if u is not None and _margin(u, cons) > FEAS_MARGIN:
        return True, u
    return True, warm


def feasible_pole_exists(
    arcs: Iterable[Tuple[Vec3, Vec3]], warm: Optional[Vec3] = None
) -> bool:
    """Whether a unit pole u satisfies u.a > 0 > u.b for every arc (a, b).

    Sound for pruning: returns True whenever such a pole exists (and may
    return True in undecidable numerical corner cases, never falsely False).
    """
    cons: List[Vec3] = []
    for a, b in arcs:
        cons.append(a)
        cons.append(neg(b))
    ok, _ = _feasible_pole(cons, warm)
    return ok


# ---------------------------------------------------------------------------
# per-sequence solver


def solve_sequence(
    spec: SolidSpec,
    seq: CrossingSequence,
    tol_closure: float = 1e-9,
    tol_vertex: float = 1e-9,
) -> Optional[GeodesicPath]:
    """The unique geodesic realizing `seq`, or None.

    The closing rotation's axis is the only possible pole of the unfolded
    geodesic; the candidate equator must cross every developed edge in the
    traversal direction, with strictly increasing azimuths spanning exactly
    the rotation angle, stay clear of vertices, and be simple on the surface.
    """
    dev = develop(spec, seq)
    axis, ang, near_identity = axis_angle(dev.closing)
    if near_identity:
        return None
    for pole, theta in ((axis, ang), (neg(axis), TWO_PI - ang)):
        path = _path_for_pole(spec, dev, pole, theta, tol_closure, tol_vertex)
        if path is not None:
            return path
    return None


def _path_for_pole(
    spec: SolidSpec,
    dev: Development,
    pole: Vec3,
    theta: float,
    tol_closure: float,
    tol_vertex: float,
) -> Optional[GeodesicPath]:
    if theta < 1e-9:
        return None
    m = len(dev.arcs)
    hits = []
    for p, q in dev.arcs:
        # the equator must cross from the exited copy's side to the entered one
        if not dot(pole, q) > 0.0 > dot(pole, p):
            return None
        hit = pole_edge_crossing(pole, p, q)
        if hit is None:
            return None
        if not tol_vertex < hit.t < 1.0 - tol_vertex:
            return None
        hits.append(hit)

    gaps = []
    for i in range(m):
        if i < m - 1:
            d = (hits[i + 1].azimuth - hits[i].azimuth) % TWO_PI
        else:
            d = (hits[0].azimuth + theta - hits[i].azimuth) % TWO_PI
        if d <= 0.0:
            return None
        gaps.append(d)

    # Each in-face chord must equal its azimuth gap; acos gives the minor-arc
    # length, so agreement also certifies the segment is the minor arc, which
    # face convexity then keeps inside the face copy.
    pts = [h.point for h in hits]
    closing_pt = mat_apply(dev.closing, pts[0])
    arc_lengths = []
    for i in range(m):
        nxt = pts[i + 1] if i < m - 1 else closing_pt
        seg = angle_between(pts[i], nxt)
        if abs(seg - gaps[i]) > tol_closure:
            return None
        arc_lengths.append(seg)
    total = math.fsum(arc_lengths)
    residual = abs(total - theta)
    if residual > tol_closure or not total < TWO_PI:
        return None

    n = spec.face_size
    crossings = []
    for i, c in enumerate(dev.seq.crossings):
        j = spec.face_edge_local[(c.from_face, c.edge)]
        v1 = spec.faces[c.from_face][j]
        v2 = spec.faces[c.from_face][(j + 1) % n]
        inc_exit = _incidence(spec, dev.placements[i], j, pts[i], pole)
        gi, j2, _ = spec.gluing[(c.from_face, j)]
        inc_enter = _incidence(spec, dev.placements[i + 1], j2, pts[i], pole)
        # the two face copies develop the edge independently; the angles they
        # see must agree (edge orientations oppose, hence the pi flip)
        if abs(inc_exit - (PI - inc_enter)) > 1e-10:
            return None
        if v1 < v2:
            t, inc = hits[i].t, inc_exit
        else:
            t, inc = 1.0 - hits[i].t, PI - inc_exit
        crossings.append(Crossing(c.edge, t, inc))

    if not _dev_is_simple(spec, dev, pts, closing_pt):
        return None

    return GeodesicPath(
        seq=dev.seq,
        crossings=tuple(crossings),
        arc_lengths=tuple(arc_lengths),
        total_length=total,
        pole=pole,
        closure_residual=residual,
    )


def _incidence(
    spec: SolidSpec, placement: Mat3, local_edge: int, point: Vec3, pole: Vec3
) -> float:
    n = spec.face_size
    p = mat_apply(placement, spec.chart[local_edge])
    q = mat_apply(placement, spec.chart[(local_edge + 1) % n])
    edge_pole = normalize(cross(p, q))
    tau = normalize(cross(edge_pole, point))      # edge tangent, p -> q
    direction = normalize(cross(pole, point))     # geodesic tangent
    return angle_between(direction, tau)


def _dev_is_simple(
    spec: SolidSpec,
    dev: Development,
    pts: Sequence[Vec3],
    closing_pt: Vec3,
) -> bool:
    m = len(pts)
    by_face: Dict[int, List[Tuple[Vec3, Vec3]]] = {}
    for i in range(m):
        r_inv = mat_transpose(dev.placements[i + 1])
        a = mat_apply(r_inv, pts[i])
        b = mat_apply(r_inv, pts[i + 1] if i < m - 1 else closing_pt)
        by_face.setdefault(dev.faces[i + 1], []).append((a, b))
    for segs in by_face.values():
        # segments in one physical face belong to distinct visits, so any
        # contact at all is a self-intersection
        for i in range(len(segs)):
            for k in range(i + 1, len(segs)):
                if arcs_intersect(segs[i][0], segs[i][1], segs[k][0], segs[k][1]):
                    return False
    return True


def is_simple(spec: SolidSpec, path: GeodesicPath) -> bool:
    """Whether the path's in-face segments are pairwise disjoint on the surface
    (consecutive segments touch only at their shared edge crossing)."""
    dev = develop(spec, path.seq)
    pts = []
    for p, q in dev.arcs:
        hit = pole_edge_crossing(path.pole, p, q)
        if hit is None:
            return False
        pts.append(hit.point)
    closing_pt = mat_apply(dev.closing, pts[0])
    return _dev_is_simple(spec, dev, pts, closing_pt)


# ---------------------------------------------------------------------------
# canonical forms under cyclic shift x reversal x symmetry


def _cyclic_min(word: Tuple[int, ...]) -> Tuple[int, ...]:
    best = None
    for w in (word, word[::-1]):
        for r in range(len(w)):
            cand = w[r:] + w[:r]
            if best is None or cand < best:
                best = cand
    return best  # type: ignore[return-value]


def canonical_word(spec: SolidSpec, word: Tuple[int, ...]) -> Tuple[int, ...]:
    best = None
    for g in symmetry_group(spec):
        ep = g.edge_perm
        cand = _cyclic_min(tuple(ep[e] for e in word))
        if best is None or cand < best:
            best = cand
    return best  # type: ignore[return-value]


def canonicalize(spec: SolidSpec, seq: CrossingSequence) -> CrossingSequence:
    """Lexicographic minimum of the sequence over cyclic shifts, reversal and
    the full symmetry group; idempotent."""
    return CrossingSequence.from_edges(spec, canonical_word(spec, seq.edge_word()))


def orbit_size(spec: SolidSpec, seq: CrossingSequence) -> int:
    """Number of distinct geodesics (sequences up to shift and reversal) in
    the symmetry orbit."""
    word = seq.edge_word()
    return len(
        {_cyclic_min(tuple(g.edge_perm[e] for e in word)) for g in symmetry_group(spec)}
    )


# ---------------------------------------------------------------------------
# classification tags


_TETRA_PAIRS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def classify_tetra_type(spec: SolidSpec, path: GeodesicPath) -> Tuple[int, int]:
    """Crossing counts on the three opposite-edge pairs, as a coprime (p, q)."""
    if spec.kind is not SolidKind.TETRAHEDRON:
        raise DomainError("type classification applies to the tetrahedron")
    per_edge = [0] * len(spec.edges)
    for c in path.crossings:
        per_edge[c.edge] += 1
    pair_counts = []
    for ea, eb in _TETRA_PAIRS:
        ca = per_edge[spec.edge_index[ea]]
        cb = per_edge[spec.edge_index[eb]]
        if ca != cb:
            raise ClassificationError(
                f"opposite edges {ea}/{eb} crossed {ca}/{cb} times"
            )
        pair_counts.append(ca)
    pair_counts.sort()
    p, q, r = pair_counts
    if r != p + q or math.gcd(p, q) != 1:
        raise ClassificationError(f"pair counts {pair_counts} are not (p, q, p+q)")
    return p, q


def _component_tag(spec: SolidSpec, word: Tuple[int, ...]) -> str:
    """Tag octa/cube classes by the shape of the uncrossed-edge subgraph."""
    crossed = set(word)
    adj: Dict[int, List[int]] = {}
    for e, (a, b) in enumerate(spec.edges):
        if e not in crossed:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    if not adj:
        return "other"
    start = min(adj)
    comp = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj.get(v, ()):
            if w not in comp:
                comp.add(w)
                stack.append(w)
    n_vert = len(comp)
    n_edge = sum(len(adj.get(v, ())) for v in comp) // 2
    degrees = sorted(len(adj.get(v, ())) for v in comp)
    if spec.kind is SolidKind.OCTAHEDRON:
        if n_vert == 3 and n_edge == 3:
            return "type1"  # bounds a facet
        if n_vert == 3 and n_edge == 2:
            return "type2"  # two adjacent edges
    if spec.kind is SolidKind.CUBE:
        if n_vert == 4 and n_edge == 4:
            return "type1"  # bounds a facet
        if n_vert == 4 and n_edge == 3 and degrees[-1] == 3:
            return "type2"  # three edges sharing a vertex
        if n_vert == 4 and n_edge == 3 and degrees[-1] == 2:
            return "type3"  # broken line of three edges
    return "other"


def class_tag(spec: SolidSpec, path: GeodesicPath) -> str:
    if spec.kind is SolidKind.TETRAHEDRON:
        try:
            p, q = classify_tetra_type(spec, path)
        except ClassificationError:
            # circular geodesic around one vertex: exists once the edge
            # length exceeds pi/2, crossing the three incident edges at
            # right angles; it carries no (p, q) type
            word = path.seq.edge_word()
            shared = set(spec.edges[word[0]])
            for e in word[1:]:
                shared &= set(spec.edges[e])
            if len(word) == 3 and len(shared) == 1:
                return "vertex-loop"
            return "other"
        return f"{p},{q}"
    return _component_tag(spec, path.seq.edge_word())


# ---------------------------------------------------------------------------
# exhaustive enumeration


def enumerate_classes(
    spec: SolidSpec,
    max_crossings: int,
    prune: bool = True,
    tol_closure: float = 1e-9,
    tol_vertex: float = 1e-9,
) -> List[GeodesicClass]:
    """All simple closed geodesics with at most `max_crossings` crossings,
    one canonical representative per symmetry class, in canonical order.

    Exhaustive up to the crossing bound: every class whose representative
    crosses <= max_crossings edges is found.
    """
    if max_crossings < 3:
        raise DomainError("max_crossings must be at least 3")
    n = spec.face_size
    chart = spec.chart
    found: Set[Tuple[int, ...]] = set()
    tried: Set[Tuple[int, ...]] = set()

    def close_and_solve(word: Tuple[int, ...]) -> None:
        key = _cyclic_min(word)
        if key in tried:
            return
        tried.add(key)
        seq = CrossingSequence.from_edges(spec, word)
        path = solve_sequence(spec, seq, tol_closure, tol_vertex)
        if path is not None:
            found.add(canonical_word(spec, word))

    def dfs(
        edges: List[int],
        cur_face: int,
        entry_local: int,
        placement: Mat3,
        cons: List[Vec3],
        warm: Optional[Vec3],
        lb: float,
        anchor_edge: int,
        anchor_face: int,
    ) -> None:
        depth = len(edges)
        if depth >= 3 and cur_face == anchor_face and edges[-1] != anchor_edge:
            close_and_solve(tuple(edges))
        if depth == max_crossings:
            return
        for j in range(n):
            if j == entry_local:
                continue
            e = spec.face_edges[cur_face][j]
            if e < anchor_edge:
                continue
            lb2 = lb + spec.chord_gap[(entry_local, j)]
            if prune and lb2 >= TWO_PI - 1e-12:
                continue
            p = mat_apply(placement, chart[j])
            q = mat_apply(placement, chart[(j + 1) % n])
            cons.append(q)
            cons.append(neg(p))
            child_warm = warm
            ok = True
            if prune:
                ok, child_warm = _feasible_pole(cons, warm)
            if ok:
                gi, j2, _ = spec.gluing[(cur_face, j)]
                edges.append(e)
                dfs(
                    edges,
                    gi,
                    j2,
                    mat_compose(placement, spec.steps[(cur_face, j)]),
                    cons,
                    child_warm,
                    lb2,
                    anchor_edge,
                    anchor_face,
                )
                edges.pop()
            cons.pop()
            cons.pop()

    for e0 in range(len(spec.edges)):
        f_from = spec.edge_faces[e0][0]
        j0 = spec.face_edge_local[(f_from, e0)]
        g0, j2, _ = spec.gluing[(f_from, j0)]
        p = chart[j0]
        q = chart[(j0 + 1) % n]
        cons = [q, neg(p)]
        warm = normalize((q[0] - p[0], q[1] - p[1], q[2] - p[2]))
        dfs(
            [e0],
            g0,
            j2,
            spec.steps[(f_from, j0)],
            cons,
            warm,
            0.0,
            e0,
            f_from,
        )

    classes: List[GeodesicClass] = []
    for word in sorted(found):
        seq = CrossingSequence.from_edges(spec, word)
        path = solve_sequence(spec, seq, tol_closure, tol_vertex)
        if path is None:
            raise RuntimeError(
                "canonical image of a solved sequence failed to re-solve"
            )
        classes.append(
            GeodesicClass(
                seq=seq,
                path=path,
                orbit_size=orbit_size(spec, seq),
                tag=class_tag(spec, path),
            )
        )
    return classes


# ---------------------------------------------------------------------------
# targeted tetrahedron sequences by type


_LATTICE_START = (0.2376843521963, 0.3579246175811)


def tetra_type_sequence(spec: SolidSpec, p: int, q: int) -> CrossingSequence:
    """The crossing sequence of the type-(p, q) tetrahedron geodesic.

    Traces a straight segment with direction 2p*a + 2q*b across the unit
    triangular lattice whose vertices are 4-coloured by coordinate parity;
    the colours of each crossed lattice edge name the solid edge.  The
    segment closes after exactly 4(p+q) crossings.
    """
    if spec.kind is not SolidKind.TETRAHEDRON:
        raise DomainError("typed sequences apply to the tetrahedron")
    if not (0 <= p <= q) or q < 1 or math.gcd(p, q) != 1:
        raise DomainError(f"({p}, {q}) is not a valid coprime type")
    x0, y0 = _LATTICE_START
    wa, wb = 2 * p, 2 * q
    events: List[Tuple[float, str, int]] = []
    for mm in range(math.floor(x0) + 1, math.floor(x0 + wa) + 1):
        events.append(((mm - x0) / wa, "a", mm))
    for nn in range(math.floor(y0) + 1, math.floor(y0 + wb) + 1):
        events.append(((nn - y0) / wb, "b", nn))
    s0 = x0 + y0
    for kk in range(math.floor(s0) + 1, math.floor(s0 + wa + wb) + 1):
        events.append(((kk - s0) / (wa + wb), "d", kk))
    events.sort()
    if len(events) != 4 * (p + q):
        raise AssertionError("lattice trace produced the wrong crossing count")
    for (t1, _, _), (t2, _, _) in zip(events, events[1:]):
        if t2 - t1 < 1e-9:
            raise AssertionError("lattice trace start point is not generic")

    def colour(mm: int, nn: int) -> int:
        return (mm % 2) + 2 * (nn % 2)

    word = []
    for t, fam, val in events:
        at = x0 + wa * t
        bt = y0 + wb * t
        if fam == "a":
            n0 = math.floor(bt)
            ca, cb = colour(val, n0), colour(val, n0 + 1)
        elif fam == "b":
            m0 = math.floor(at)
            ca, cb = colour(m0, val), colour(m0 + 1, val)
        else:
            m0 = math.floor(at)
            ca, cb = colour(m0, val - m0), colour(m0 + 1, val - m0 - 1)
        word.append(spec.edge_id(ca, cb))
    return CrossingSequence.from_edges(spec, word)


def solve_tetra_type(
    spec: SolidSpec,
    p: int,
    q: int,
    tol_closure: float = 1e-9,
    tol_vertex: float = 1e-9,
) -> Optional[GeodesicPath]:
    """Solve the targeted type-(p, q) sequence; None when no such geodesic
    exists at this facet angle."""
    seq = tetra_type_sequence(spec, p, q)
    path = solve_sequence(spec, seq, tol_closure, tol_vertex)
    if path is not None:
        got = classify_tetra_type(spec, path)
        if got != (p, q):
            raise ClassificationError(
                f"targeted ({p}, {q}) sequence solved as type {got}"
            )
    return path
