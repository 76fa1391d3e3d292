"""Shared helpers for the test suite: random instances and slow oracles."""

from __future__ import annotations

import math
import random
from typing import List, Optional, Tuple

from sphgeo import sphtrig, unfold
from sphgeo.solids import SolidSpec
from sphgeo.unfold import CrossingSequence


def random_unit(rng: random.Random) -> Tuple[float, float, float]:
    while True:
        v = (rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))
        n = math.sqrt(sum(x * x for x in v))
        if n > 1e-6:
            return (v[0] / n, v[1] / n, v[2] / n)


def random_rotation(rng: random.Random) -> sphtrig.Mat3:
    r1 = sphtrig.rot_about(random_unit(rng), rng.uniform(0, math.pi))
    r2 = sphtrig.rot_about(random_unit(rng), rng.uniform(0, 2 * math.pi))
    return sphtrig.mat_compose(r1, r2)


def random_closed_word(
    spec: SolidSpec, rng: random.Random, max_len: int = 12
) -> Tuple[int, ...]:
    """A random structurally valid cyclic edge word (not necessarily a
    geodesic): a face walk that returns to its start face."""
    n = spec.face_size
    while True:
        e0 = rng.randrange(len(spec.edges))
        f0 = spec.edge_faces[e0][rng.randrange(2)]
        j = spec.face_edge_local[(f0, e0)]
        cur, entry, _ = spec.gluing[(f0, j)]
        word = [e0]
        for _ in range(max_len - 1):
            choices = [k for k in range(n) if k != entry]
            k = rng.choice(choices)
            word.append(spec.face_edges[cur][k])
            cur, entry, _ = spec.gluing[(cur, k)]
            if len(word) >= 3 and cur == f0 and word[-1] != word[0]:
                return tuple(word)
        # walk failed to close in time; retry


def random_sequence(
    spec: SolidSpec, rng: random.Random, max_len: int = 12
) -> CrossingSequence:
    return CrossingSequence.from_edges(spec, random_closed_word(spec, rng, max_len))


def sampled_segments(
    spec: SolidSpec, seq: CrossingSequence, pole, n_samples: int = 160
) -> Optional[List[Tuple[int, List]]]:
    """Face-local sample points of every in-face segment of the path with
    the given pole, or None when the pole misses an edge."""
    dev = unfold.develop(spec, seq)
    pts = []
    for a, b in dev.arcs:
        hit = sphtrig.pole_edge_crossing(pole, a, b)
        if hit is None:
            return None
        pts.append(hit.point)
    closing = sphtrig.mat_apply(dev.closing, pts[0])
    out = []
    m = len(pts)
    for i in range(m):
        inv = sphtrig.mat_transpose(dev.placements[i + 1])
        a = sphtrig.mat_apply(inv, pts[i])
        b = sphtrig.mat_apply(inv, pts[i + 1] if i < m - 1 else closing)
        samples = [sphtrig.slerp(a, b, k / n_samples) for k in range(n_samples + 1)]
        out.append((dev.faces[i + 1], samples))
    return out


def trace_geodesic(spec: SolidSpec, path) -> Tuple[Tuple[int, ...], float, float]:
    """Shooting oracle: re-trace a solved path on the surface, face by face.

    Starts from the first crossing's surface data alone (edge, t, incidence),
    propagates the great-circle arc through each face in local coordinates,
    and crosses into the neighbour at every exit.  Independent of the
    holonomy/closure machinery.  Returns (edges crossed, closure position
    error, closure direction error).
    """
    n = spec.face_size
    m = len(path.crossings)
    first = path.seq.crossings[0]
    face = first.to_face
    j = spec.face_edge_local[(face, first.edge)]
    a, b = spec.chart[j], spec.chart[(j + 1) % n]
    va = spec.faces[face][j]
    vb = spec.faces[face][(j + 1) % n]
    c0 = path.crossings[0]
    t_local = c0.t if va < vb else 1.0 - c0.t
    x = sphtrig.slerp(a, b, t_local)
    edge_pole = sphtrig.normalize(sphtrig.cross(a, b))  # interior side
    tau = sphtrig.cross(edge_pole, x)                   # along a -> b
    if va > vb:
        tau = sphtrig.neg(tau)                          # smaller-id vertex first
    chi = c0.incidence
    d = tuple(
        math.cos(chi) * tau[i] + math.sin(chi) * edge_pole[i] for i in range(3)
    )
    x0, d0 = x, d
    entry = j
    edges = []
    for _ in range(m):
        w = sphtrig.normalize(sphtrig.cross(x, d))
        az_x = sphtrig.azimuth_about(w, x)
        best = None
        for j2 in range(n):
            if j2 == entry:
                continue
            hit = sphtrig.pole_edge_crossing(
                w, spec.chart[j2], spec.chart[(j2 + 1) % n]
            )
            if hit is None:
                continue
            gap = (hit.azimuth - az_x) % (2 * math.pi)
            if 1e-12 < gap and (best is None or gap < best[0]):
                best = (gap, j2, hit.point)
        if best is None:
            return tuple(edges), math.inf, math.inf
        gap, j2, y = best
        edges.append(spec.face_edges[face][j2])
        d_y = sphtrig.cross(w, y)
        # move into the neighbour's chart frame
        t_inv = sphtrig.mat_transpose(spec.steps[(face, j2)])
        x = sphtrig.mat_apply(t_inv, y)
        d = sphtrig.mat_apply(t_inv, d_y)
        face, entry = spec.gluing[(face, j2)][:2]
    pos_err = sphtrig.angle_between(x, x0)
    dir_err = sphtrig.angle_between(sphtrig.normalize(d), sphtrig.normalize(d0))
    return tuple(edges), pos_err, dir_err


def sampled_is_simple(spec: SolidSpec, seq: CrossingSequence, pole,
                      n_samples: int = 160) -> bool:
    """Brute-force simplicity oracle: decide by dense pointwise sampling of
    all same-face segment pairs.  Resolution-limited but independent of the
    arc-intersection predicate."""
    segs = sampled_segments(spec, seq, pole, n_samples)
    if segs is None:
        return False
    # conservative threshold: two disjoint arcs keep sampled points apart by
    # much more than one sampling step
    step = math.pi / n_samples
    for i in range(len(segs)):
        for k in range(i + 1, len(segs)):
            if segs[i][0] != segs[k][0]:
                continue
            best = min(
                sphtrig.angle_between(p, q)
                for p in segs[i][1][1:-1]
                for q in segs[k][1][1:-1]
            )
            if best < 2.0 * step:
                return False
    return True
