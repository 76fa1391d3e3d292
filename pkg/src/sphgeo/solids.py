"""Combinatorial and metric models of the three regular spherical solids.

A solid is a set of congruent regular spherical polygons (all realized by one
canonical chart centered at the north pole) glued along directed edges.  Faces
are stored as cyclic vertex lists with a globally consistent orientation:
every directed edge (a, b) appears in exactly one face, and its reverse
(b, a) in exactly one other.
"""

from __future__ import annotations

import enum
import math
import weakref
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from . import sphtrig
from .sphtrig import PI, DomainError, Mat3, Vec3


class SolidKind(enum.Enum):
    TETRAHEDRON = "tetra"
    OCTAHEDRON = "octa"
    CUBE = "cube"


# Open admissible intervals for the facet angle; at the right endpoint each
# solid degenerates to the round sphere (infinitely many geodesics) and at
# the left the solid collapses, so both ends are rejected.
ADMISSIBLE: Dict[SolidKind, Tuple[float, float]] = {
    SolidKind.TETRAHEDRON: (PI / 3, 2 * PI / 3),
    SolidKind.OCTAHEDRON: (PI / 3, PI / 2),
    SolidKind.CUBE: (PI / 2, 2 * PI / 3),
}

_FACES: Dict[SolidKind, Tuple[Tuple[int, ...], ...]] = {
    SolidKind.TETRAHEDRON: (
        (0, 1, 2),
        (0, 2, 3),
        (0, 3, 1),
        (1, 3, 2),
    ),
    # 0..3 equatorial square, 4 apex, 5 bottom
    SolidKind.OCTAHEDRON: (
        (0, 1, 4),
        (1, 2, 4),
        (2, 3, 4),
        (3, 0, 4),
        (1, 0, 5),
        (2, 1, 5),
        (3, 2, 5),
        (0, 3, 5),
    ),
    # 0..3 front face, 4..7 the opposite (primed) vertices
    SolidKind.CUBE: (
        (0, 1, 2, 3),
        (4, 7, 6, 5),
        (1, 0, 4, 5),
        (2, 1, 5, 6),
        (3, 2, 6, 7),
        (0, 3, 7, 4),
    ),
}

_VERTEX_NAMES: Dict[SolidKind, Tuple[str, ...]] = {
    SolidKind.TETRAHEDRON: ("A1", "A2", "A3", "A4"),
    SolidKind.OCTAHEDRON: ("A1", "A2", "A3", "A4", "A5", "A6"),
    SolidKind.CUBE: ("A1", "A2", "A3", "A4", "A1'", "A2'", "A3'", "A4'"),
}

# generators of the full (rotations + reflections) symmetry group, as vertex
# permutations p with p[i] = image of vertex i
_SYM_GENERATORS: Dict[SolidKind, Tuple[Tuple[int, ...], ...]] = {
    SolidKind.TETRAHEDRON: (
        (1, 0, 2, 3),      # edge transposition (a reflection)
        (1, 2, 3, 0),      # 4-cycle
    ),
    SolidKind.OCTAHEDRON: (
        (1, 2, 3, 0, 4, 5),  # quarter turn about the apex axis
        (0, 4, 2, 5, 3, 1),  # quarter turn about the A1-A3 axis
        (0, 1, 2, 3, 5, 4),  # equatorial mirror
    ),
    SolidKind.CUBE: (
        (1, 2, 3, 0, 5, 6, 7, 4),  # quarter turn about the front-back axis
        (3, 2, 6, 7, 0, 1, 5, 4),  # quarter turn about a horizontal axis
        (4, 5, 6, 7, 0, 1, 2, 3),  # front-back mirror
    ),
}

_GROUP_ORDER = {
    SolidKind.TETRAHEDRON: 24,
    SolidKind.OCTAHEDRON: 48,
    SolidKind.CUBE: 48,
}


@dataclass(frozen=True)
class SymmetryOp:
    """A combinatorial automorphism of a solid, acting on vertex ids."""

    perm: Tuple[int, ...]
    is_rotation: bool
    edge_perm: Tuple[int, ...]
    face_perm: Tuple[int, ...]

    def apply_vertex(self, v: int) -> int:
        return self.perm[v]

    def apply_edge(self, e: int) -> int:
        return self.edge_perm[e]


@dataclass(frozen=True, eq=False)
class SolidSpec:
    """One solid at a fixed facet angle, with all derived lookup tables."""

    kind: SolidKind
    alpha: float
    faces: Tuple[Tuple[int, ...], ...]
    vertex_names: Tuple[str, ...]
    n_vertices: int
    face_size: int
    edges: Tuple[Tuple[int, int], ...]               # sorted vertex pairs, id = index
    edge_index: Dict[Tuple[int, int], int]
    edge_faces: Tuple[Tuple[int, int], ...]          # per edge id, both adjacent faces
    face_edge_local: Dict[Tuple[int, int], int]      # (face, edge id) -> local index
    face_edges: Tuple[Tuple[int, ...], ...]          # per face, edge ids in local order
    gluing: Dict[Tuple[int, int], Tuple[int, int, bool]]
    chart: Tuple[Vec3, ...]                          # canonical face polygon
    circumradius: float
    edge_length: float
    steps: Dict[Tuple[int, int], Mat3]               # (face, local edge) -> transfer
    chord_gap: Dict[Tuple[int, int], float]          # min distance between chart edges
    vertex_degree: Tuple[int, ...]

    def edge_id(self, a: int, b: int) -> int:
        return self.edge_index[(a, b) if a < b else (b, a)]

    def edge_by_names(self, na: str, nb: str) -> int:
        ia = self.vertex_names.index(na)
        ib = self.vertex_names.index(nb)
        return self.edge_id(ia, ib)

    def common_face(self, e1: int, e2: int) -> Optional[int]:
        """The unique face containing both edges, or None."""
        f1 = self.edge_faces[e1]
        f2 = self.edge_faces[e2]
        shared = [f for f in f1 if f in f2]
        return shared[0] if len(shared) == 1 else None


def build_solid(kind: SolidKind, alpha: float) -> SolidSpec:
    """Construct a solid at the given facet angle.

    Raises DomainError when alpha is outside the open admissible interval.
    """
    lo, hi = ADMISSIBLE[kind]
    if not lo < alpha < hi:
        raise DomainError(
            f"alpha={alpha!r} outside the admissible interval ({lo!r}, {hi!r}) "
            f"for {kind.value}"
        )
    faces = _FACES[kind]
    n = len(faces[0])
    n_vertices = max(max(f) for f in faces) + 1

    directed: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for fi, f in enumerate(faces):
        for j in range(n):
            directed[(f[j], f[(j + 1) % n])] = (fi, j)

    pairs = sorted({(min(a, b), max(a, b)) for (a, b) in directed})
    edge_index = {p: i for i, p in enumerate(pairs)}

    face_edge_local: Dict[Tuple[int, int], int] = {}
    face_edges: List[Tuple[int, ...]] = []
    for fi, f in enumerate(faces):
        ids = []
        for j in range(n):
            a, b = f[j], f[(j + 1) % n]
            e = edge_index[(a, b) if a < b else (b, a)]
            ids.append(e)
            face_edge_local[(fi, e)] = j
        face_edges.append(tuple(ids))

    edge_faces = []
    for (a, b) in pairs:
        f1, _ = directed[(a, b)]
        f2, _ = directed[(b, a)]
        edge_faces.append((min(f1, f2), max(f1, f2)))

    gluing: Dict[Tuple[int, int], Tuple[int, int, bool]] = {}
    for fi, f in enumerate(faces):
        for j in range(n):
            a, b = f[j], f[(j + 1) % n]
            gi, j2 = directed[(b, a)]
            gluing[(fi, j)] = (gi, j2, True)

    rho = sphtrig.circumradius(n, alpha)
    sr, cr = math.sin(rho), math.cos(rho)
    chart = tuple(
        (sr * math.cos(2 * PI * k / n), sr * math.sin(2 * PI * k / n), cr)
        for k in range(n)
    )
    edge_length = sphtrig.angle_between(chart[0], chart[1])

    # transfer rotation across each directed edge: glue the neighbour's chart
    # copy of the shared edge onto this face's copy, endpoints matched
    steps: Dict[Tuple[int, int], Mat3] = {}
    for (fi, j), (gi, j2, _) in gluing.items():
        steps[(fi, j)] = sphtrig.rotation_from_pairs(
            chart[(j2 + 1) % n], chart[j2], chart[j], chart[(j + 1) % n]
        )

    chord_gap: Dict[Tuple[int, int], float] = {}
    for j1 in range(n):
        for j2 in range(n):
            if j1 == j2:
                continue
            chord_gap[(j1, j2)] = sphtrig.arc_arc_distance(
                chart[j1], chart[(j1 + 1) % n], chart[j2], chart[(j2 + 1) % n]
            )

    degree = [0] * n_vertices
    for f in faces:
        for v in f:
            degree[v] += 1

    return SolidSpec(
        kind=kind,
        alpha=alpha,
        faces=faces,
        vertex_names=_VERTEX_NAMES[kind],
        n_vertices=n_vertices,
        face_size=n,
        edges=tuple(pairs),
        edge_index=edge_index,
        edge_faces=tuple(edge_faces),
        face_edge_local=face_edge_local,
        face_edges=tuple(face_edges),
        gluing=gluing,
        chart=chart,
        circumradius=rho,
        edge_length=edge_length,
        steps=steps,
        chord_gap=chord_gap,
        vertex_degree=tuple(degree),
    )


def cone_angle(spec: SolidSpec, vertex: int) -> float:
    """Total facet angle glued at a vertex; < 2*pi on the admissible range."""
    if not 0 <= vertex < spec.n_vertices:
        raise DomainError(f"vertex {vertex!r} out of range")
    return spec.vertex_degree[vertex] * spec.alpha


# ---------------------------------------------------------------------------
# symmetry group

_SYM_CACHE: Dict[SolidKind, Tuple[Tuple[int, ...], ...]] = {}


def _face_key(face: Tuple[int, ...]) -> Tuple[int, ...]:
    """Canonical form of a cyclic vertex list up to rotation and reversal."""
    best = None
    for w in (face, face[::-1]):
        for r in range(len(w)):
            cand = w[r:] + w[:r]
            if best is None or cand < best:
                best = cand
    return best  # type: ignore[return-value]


def _is_automorphism(kind: SolidKind, perm: Tuple[int, ...]) -> bool:
    faces = _FACES[kind]
    keys = {_face_key(f) for f in faces}
    return all(_face_key(tuple(perm[v] for v in f)) in keys for f in faces)


def _closure(kind: SolidKind) -> Tuple[Tuple[int, ...], ...]:
    if kind in _SYM_CACHE:
        return _SYM_CACHE[kind]
    gens = _SYM_GENERATORS[kind]
    nv = len(gens[0])
    ident = tuple(range(nv))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(g[p[i]] for i in range(nv))
                if q not in seen:
                    if not _is_automorphism(kind, q):
                        raise AssertionError("generator closure left the face set")
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    if len(seen) != _GROUP_ORDER[kind]:
        raise AssertionError(
            f"symmetry closure has order {len(seen)}, expected {_GROUP_ORDER[kind]}"
        )
    _SYM_CACHE[kind] = tuple(sorted(seen))
    return _SYM_CACHE[kind]


def _orientation_preserving(spec: SolidSpec, perm: Tuple[int, ...]) -> bool:
    face = spec.faces[0]
    image = tuple(perm[v] for v in face)
    key = _face_key(image)
    for f in spec.faces:
        if _face_key(f) == key:
            # does `image` occur as a rotation of f (preserving) or of its
            # reversal (reversing)?
            n = len(f)
            for r in range(n):
                if image == f[r:] + f[:r]:
                    return True
            return False
    raise AssertionError("image face not found")


_OPS_CACHE: "weakref.WeakKeyDictionary[SolidSpec, Tuple[SymmetryOp, ...]]" = (
    weakref.WeakKeyDictionary()
)


def symmetry_group(spec: SolidSpec) -> Tuple[SymmetryOp, ...]:
    """Full isometry group as combinatorial automorphisms (incl. reflections)."""
    cached = _OPS_CACHE.get(spec)
    if cached is not None:
        return cached
    ops = []
    keys = {_face_key(f): i for i, f in enumerate(spec.faces)}
    for perm in _closure(spec.kind):
        edge_perm = tuple(
            spec.edge_id(perm[a], perm[b]) for (a, b) in spec.edges
        )
        face_perm = []
        for f in spec.faces:
            face_perm.append(keys[_face_key(tuple(perm[v] for v in f))])
        ops.append(
            SymmetryOp(
                perm=perm,
                is_rotation=_orientation_preserving(spec, perm),
                edge_perm=edge_perm,
                face_perm=tuple(face_perm),
            )
        )
    result = tuple(ops)
    _OPS_CACHE[spec] = result
    return result
