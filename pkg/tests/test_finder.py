import math
import random

import pytest

from sphgeo import sphtrig
from sphgeo.finder import (
    ClassificationError,
    GeodesicPath,
    canonicalize,
    class_tag,
    classify_tetra_type,
    enumerate_classes,
    feasible_pole_exists,
    is_simple,
    orbit_size,
    solve_sequence,
    solve_tetra_type,
    tetra_type_sequence,
)
from sphgeo.solids import SolidKind, build_solid, symmetry_group
from sphgeo.sphtrig import PI, dot, normalize
from sphgeo.unfold import CrossingSequence, develop

from util import random_sequence, random_unit, sampled_is_simple, trace_geodesic

OCTA_TYPE1 = ("A1A2", "A2A5", "A5A3", "A3A4", "A4A6", "A6A1")
OCTA_TYPE2 = ("A1A2", "A2A6", "A2A3", "A3A5", "A3A4", "A4A6", "A4A1", "A1A5")
CUBE_TYPE1 = ("A1A1'", "A2A2'", "A3A3'", "A4A4'")
CUBE_TYPE2 = ("A1'A2'", "A2'A2", "A2A3", "A3A4", "A4A4'", "A4'A1'")
CUBE_TYPE3 = ("A2A3", "A2A2'", "A1A1'", "A1'A4'", "A3'A4'", "A3A4")


def word_of(spec, names):
    out = []
    for pair in names:
        cut = pair.index("A", 1)
        out.append(spec.edge_by_names(pair[:cut], pair[cut:]))
    return tuple(out)


def seq_of(spec, names):
    return CrossingSequence.from_edges(spec, word_of(spec, names))


# ---------------------------------------------------------------------------
# pole feasibility


def test_feasible_single_arc():
    a = normalize((1.0, 0.2, 0.6))
    b = normalize((0.9, -0.1, -0.7))
    assert feasible_pole_exists([(a, b)])


def test_infeasible_contradictory_signs():
    # the same band demanded in both directions
    a = normalize((1.0, 0.0, 1e-3))
    b = normalize((1.0, 0.0, -1e-3))
    assert not feasible_pole_exists([(a, b), (b, a)])


def test_feasible_random_with_witness():
    rng = random.Random(61)
    for _ in range(300):
        u = random_unit(rng)
        arcs = []
        for _ in range(rng.randrange(1, 13)):
            # manufacture an arc genuinely crossed by the equator of u
            while True:
                a = random_unit(rng)
                b = random_unit(rng)
                if dot(u, a) > 0.05 and dot(u, b) < -0.05:
                    arcs.append((a, b))
                    break
        assert feasible_pole_exists(arcs)


def test_infeasible_random_antipodal_pairs():
    rng = random.Random(62)
    for _ in range(300):
        c = random_unit(rng)
        d = random_unit(rng)
        # u.c > 0 > u.d and u.d > 0 > u.c cannot both hold
        arcs = [(c, d), (d, c)]
        for _ in range(rng.randrange(0, 6)):
            arcs.append((random_unit(rng), random_unit(rng)))
        assert not feasible_pole_exists(arcs)


def test_infeasible_by_convex_certificate():
    # build constraint sets whose convex hull provably contains the origin:
    # c4 = -(l1 c1 + l2 c2 + l3 c3), so no pole can be positive on all four
    from sphgeo.finder import _feasible_pole

    rng = random.Random(63)
    built = 0
    while built < 300:
        c1, c2, c3 = (random_unit(rng) for _ in range(3))
        lam = [rng.uniform(0.2, 1.0) for _ in range(3)]
        s = tuple(-sum(l * c[i] for l, c in zip(lam, (c1, c2, c3)))
                  for i in range(3))
        n = math.sqrt(sum(x * x for x in s))
        if n < 1e-3:
            continue
        c4 = tuple(x / n for x in s)
        ok, _ = _feasible_pole([c1, c2, c3, c4])
        assert not ok
        built += 1


def test_feasibility_shrinks_with_constraints():
    # dropping arcs can never turn a feasible set infeasible
    rng = random.Random(64)
    for _ in range(200):
        u = random_unit(rng)
        arcs = []
        for _ in range(10):
            while True:
                a = random_unit(rng)
                b = random_unit(rng)
                if dot(u, a) > 0.05 and dot(u, b) < -0.05:
                    arcs.append((a, b))
                    break
        k = rng.randrange(1, 10)
        assert feasible_pole_exists(arcs)
        assert feasible_pole_exists(arcs[:k])


def test_octa_type2_prefixes_feasible():
    spec = build_solid(SolidKind.OCTAHEDRON, 0.45 * PI)
    dev = develop(spec, seq_of(spec, OCTA_TYPE2))
    # crossing into the next copy needs u.q > 0 > u.p for the exiting arc
    arcs = [(q, p) for p, q in dev.arcs]
    for k in range(1, len(arcs) + 1):
        assert feasible_pole_exists(arcs[:k])


# ---------------------------------------------------------------------------
# solving known constructions


def test_octa_type1_midpoints():
    spec = build_solid(SolidKind.OCTAHEDRON, 0.4 * PI)
    path = solve_sequence(spec, seq_of(spec, OCTA_TYPE1))
    assert path is not None
    assert path.total_length < 2 * PI
    assert path.closure_residual < 1e-9
    for c in path.crossings:
        assert c.t == pytest.approx(0.5, abs=1e-9)
    assert class_tag(spec, path) == "type1"


def test_octa_type2_right_angles():
    spec = build_solid(SolidKind.OCTAHEDRON, 0.45 * PI)
    path = solve_sequence(spec, seq_of(spec, OCTA_TYPE2))
    assert path is not None
    square = {spec.edge_by_names(a, b) for a, b in
              (("A1", "A2"), ("A2", "A3"), ("A3", "A4"), ("A4", "A1"))}
    a_t = sphtrig.tetra_edge(0.45 * PI)
    # closed-form oracle for the off-square crossing position
    t_oracle = math.atan(math.tan(a_t / 2) * math.cos(0.45 * PI)) / a_t
    for c in path.crossings:
        if c.edge in square:
            assert c.t == pytest.approx(0.5, abs=1e-9)
        else:
            assert c.incidence == pytest.approx(PI / 2, abs=1e-9)
            assert min(c.t, 1.0 - c.t) == pytest.approx(t_oracle, abs=1e-9)
    assert class_tag(spec, path) == "type2"


def test_octa_reordered_word_has_no_geodesic():
    # structurally valid 7-crossing word that no geodesic realizes
    spec = build_solid(SolidKind.OCTAHEDRON, 0.4 * PI)
    word = word_of(
        spec, ("A1A2", "A2A6", "A2A3", "A3A5", "A3A4", "A4A6", "A6A1")
    )
    seq = CrossingSequence.from_edges(spec, word)
    assert solve_sequence(spec, seq) is None


def test_cube_types_solve():
    spec = build_solid(SolidKind.CUBE, 0.6 * PI)
    for names, tag, orbit in (
        (CUBE_TYPE1, "type1", 3),
        (CUBE_TYPE2, "type2", 4),
        (CUBE_TYPE3, "type3", 12),
    ):
        seq = seq_of(spec, names)
        path = solve_sequence(spec, seq)
        assert path is not None
        assert class_tag(spec, path) == tag
        assert orbit_size(spec, seq) == orbit


def test_path_invariants_on_known_solutions():
    jobs = [
        (SolidKind.OCTAHEDRON, 0.4 * PI, OCTA_TYPE1),
        (SolidKind.OCTAHEDRON, 0.45 * PI, OCTA_TYPE2),
        (SolidKind.CUBE, 0.58 * PI, CUBE_TYPE3),
    ]
    for kind, alpha, names in jobs:
        spec = build_solid(kind, alpha)
        path = solve_sequence(spec, seq_of(spec, names))
        assert path is not None
        assert path.total_length < 2 * PI
        assert path.closure_residual < 1e-9
        assert abs(sum(path.arc_lengths) - path.total_length) < 1e-9
        for c in path.crossings:
            assert 1e-9 < c.t < 1 - 1e-9
            assert 0.0 < c.incidence < PI
        assert is_simple(spec, path)


def test_closed_form_lengths():
    # midpoint constructions have closed-form lengths: each segment of the
    # 'belt' classes is the midsegment of one face (cos_side of two half
    # edges and the face angle), and the 4-crossing cube class is four face
    # midlines laid end to end
    for api in (0.36, 0.42, 0.48):
        alpha = api * PI
        spec = build_solid(SolidKind.OCTAHEDRON, alpha)
        E = spec.edge_by_names
        word = [E("A1", "A2"), E("A2", "A5"), E("A5", "A3"),
                E("A3", "A4"), E("A4", "A6"), E("A6", "A1")]
        path = solve_sequence(spec, CrossingSequence.from_edges(spec, word))
        half = sphtrig.tetra_edge(alpha) / 2
        seg = sphtrig.cos_side(half, half, alpha)
        assert path.total_length == pytest.approx(6 * seg, abs=1e-12)
    for api in (0.55, 0.60, 0.65):
        alpha = api * PI
        spec = build_solid(SolidKind.TETRAHEDRON, alpha)
        path = solve_tetra_type(spec, 0, 1)
        half = sphtrig.tetra_edge(alpha) / 2
        seg = sphtrig.cos_side(half, half, alpha)
        assert path.total_length == pytest.approx(4 * seg, abs=1e-12)
    for api in (0.54, 0.60, 0.64):
        alpha = api * PI
        spec = build_solid(SolidKind.CUBE, alpha)
        E = spec.edge_by_names
        word = [E("A1", "A1'"), E("A2", "A2'"), E("A3", "A3'"), E("A4", "A4'")]
        path = solve_sequence(spec, CrossingSequence.from_edges(spec, word))
        assert path.total_length == pytest.approx(
            4 * sphtrig.square_midline(alpha), abs=1e-12
        )


def test_shooting_oracle_confirms_solutions():
    # re-trace each solved geodesic on the surface from its first crossing's
    # surface data alone; the trace must cross the same edges and close up
    jobs = [
        (SolidKind.OCTAHEDRON, 0.4 * PI, OCTA_TYPE1),
        (SolidKind.OCTAHEDRON, 0.45 * PI, OCTA_TYPE2),
        (SolidKind.CUBE, 0.55 * PI, CUBE_TYPE1),
        (SolidKind.CUBE, 0.6 * PI, CUBE_TYPE2),
        (SolidKind.CUBE, 0.6 * PI, CUBE_TYPE3),
    ]
    for kind, alpha, names in jobs:
        spec = build_solid(kind, alpha)
        path = solve_sequence(spec, seq_of(spec, names))
        assert path is not None
        word = path.seq.edge_word()
        edges, pos_err, dir_err = trace_geodesic(spec, path)
        assert edges == word[1:] + word[:1]
        assert pos_err < 1e-9
        assert dir_err < 1e-9
    # targeted tetra types, including many-crossing ones
    spec = build_solid(SolidKind.TETRAHEDRON, 0.36 * PI)
    for p, q in ((0, 1), (1, 1), (1, 2), (1, 3)):
        path = solve_tetra_type(spec, p, q)
        assert path is not None
        word = path.seq.edge_word()
        edges, pos_err, dir_err = trace_geodesic(spec, path)
        assert edges == word[1:] + word[:1]
        assert pos_err < 1e-9
        assert dir_err < 1e-9


def test_vertex_avoidance_rejects_near_vertex():
    # at alpha = pi/2 + eps the vertex loop crossings sit eps-close to the
    # far vertices; with a large vertex tolerance the sequence is rejected
    spec = build_solid(SolidKind.TETRAHEDRON, 0.51 * PI)
    word = (spec.edge_id(0, 1), spec.edge_id(0, 2), spec.edge_id(0, 3))
    seq = CrossingSequence.from_edges(spec, word)
    path = solve_sequence(spec, seq)
    assert path is not None
    margin = min(min(c.t, 1 - c.t) for c in path.crossings)
    assert solve_sequence(spec, seq, tol_vertex=2 * margin) is None


# ---------------------------------------------------------------------------
# simplicity


def test_is_simple_against_sampled_oracle():
    jobs = [
        (SolidKind.OCTAHEDRON, 0.4 * PI, OCTA_TYPE1),
        (SolidKind.CUBE, 0.6 * PI, CUBE_TYPE2),
    ]
    for kind, alpha, names in jobs:
        spec = build_solid(kind, alpha)
        seq = seq_of(spec, names)
        path = solve_sequence(spec, seq)
        assert is_simple(spec, path)
        assert sampled_is_simple(spec, seq, path.pole)


def test_tetra_type01_simple_by_oracle():
    spec = build_solid(SolidKind.TETRAHEDRON, 0.6 * PI)
    path = solve_tetra_type(spec, 0, 1)
    assert path is not None
    assert is_simple(spec, path)
    assert sampled_is_simple(spec, path.seq, path.pole)


def _closure_pole(spec, word):
    dev = develop(spec, CrossingSequence.from_edges(spec, word))
    axis, ang, near = sphtrig.axis_angle(dev.closing)
    assert not near
    return axis


def test_self_crossing_band_rejected():
    # doubled band: passes the closure conditions, fails only simplicity
    spec = build_solid(SolidKind.TETRAHEDRON, 0.42 * PI)
    word = (0, 2, 5, 3, 0, 2, 5, 3)
    seq = CrossingSequence.from_edges(spec, word)
    assert solve_sequence(spec, seq) is None
    for pole in (p := _closure_pole(spec, word), sphtrig.neg(p)):
        fake = GeodesicPath(seq, (), (), 0.0, pole, 0.0)
        hits = [
            sphtrig.pole_edge_crossing(pole, a, b)
            for a, b in develop(spec, seq).arcs
        ]
        if all(h is not None for h in hits):
            assert not is_simple(spec, fake)
            assert not sampled_is_simple(spec, seq, pole)


def test_figure_eight_rejected():
    spec = build_solid(SolidKind.TETRAHEDRON, 0.42 * PI)
    word = (0, 4, 3, 1, 2, 4)
    seq = CrossingSequence.from_edges(spec, word)
    assert solve_sequence(spec, seq) is None


# ---------------------------------------------------------------------------
# canonicalization


@pytest.mark.parametrize("kind,alpha", [
    (SolidKind.TETRAHEDRON, 0.5 * PI),
    (SolidKind.OCTAHEDRON, 0.45 * PI),
    (SolidKind.CUBE, 0.6 * PI),
])
def test_canonicalize_idempotent_and_reversal(kind, alpha):
    spec = build_solid(kind, alpha)
    rng = random.Random(71)
    for _ in range(60):
        seq = random_sequence(spec, rng)
        canon = canonicalize(spec, seq)
        assert canonicalize(spec, canon).edge_word() == canon.edge_word()
        rev = CrossingSequence.from_edges(spec, seq.edge_word()[::-1])
        assert canonicalize(spec, rev).edge_word() == canon.edge_word()


def test_canonicalize_octa_pole_swap():
    spec = build_solid(SolidKind.OCTAHEDRON, 0.4 * PI)
    seq = seq_of(spec, OCTA_TYPE1)
    swap = next(
        op for op in symmetry_group(spec)
        if op.perm == (0, 1, 2, 3, 5, 4)
    )
    image = CrossingSequence.from_edges(
        spec, tuple(swap.edge_perm[e] for e in seq.edge_word())
    )
    assert canonicalize(spec, image).edge_word() == canonicalize(spec, seq).edge_word()


# ---------------------------------------------------------------------------
# equivariance and per-sequence determinism


def _transform_crossings(spec, path, op, shift):
    """Expected crossing list of solve(op . shifted seq)."""
    m = len(path.crossings)
    out = []
    for i in range(m):
        c = path.crossings[(i + shift) % m]
        a, b = spec.edges[c.edge]
        ia, ib = op.perm[a], op.perm[b]
        t = c.t if ia < ib else 1.0 - c.t
        out.append((op.edge_perm[c.edge], t))
    return out


@pytest.mark.parametrize("kind,alpha,names", [
    (SolidKind.OCTAHEDRON, 0.4 * PI, OCTA_TYPE1),
    (SolidKind.OCTAHEDRON, 0.45 * PI, OCTA_TYPE2),
    (SolidKind.CUBE, 0.6 * PI, CUBE_TYPE3),
])
def test_solve_equivariance(kind, alpha, names):
    spec = build_solid(kind, alpha)
    seq = seq_of(spec, names)
    path = solve_sequence(spec, seq)
    rng = random.Random(83)
    ops = symmetry_group(spec)
    m = len(seq.crossings)
    for _ in range(40):
        op = ops[rng.randrange(len(ops))]
        shift = rng.randrange(m)
        word = seq.edge_word()
        shifted = word[shift:] + word[:shift]
        image_word = tuple(op.edge_perm[e] for e in shifted)
        image_path = solve_sequence(
            spec, CrossingSequence.from_edges(spec, image_word)
        )
        assert image_path is not None
        assert image_path.total_length == pytest.approx(
            path.total_length, abs=1e-9
        )
        expected = _transform_crossings(spec, path, op, shift)
        for c, (edge, t) in zip(image_path.crossings, expected):
            assert c.edge == edge
            assert c.t == pytest.approx(t, abs=1e-9)


def test_solve_reversal_same_geodesic():
    spec = build_solid(SolidKind.OCTAHEDRON, 0.45 * PI)
    seq = seq_of(spec, OCTA_TYPE2)
    path = solve_sequence(spec, seq)
    rev = solve_sequence(
        spec, CrossingSequence.from_edges(spec, seq.edge_word()[::-1])
    )
    assert rev is not None
    m = len(seq.crossings)
    assert rev.total_length == pytest.approx(path.total_length, abs=1e-9)
    for i in range(m):
        c_orig = path.crossings[(m - 1 - i) % m]
        c_rev = rev.crossings[i]
        assert c_rev.edge == c_orig.edge
        assert c_rev.t == pytest.approx(c_orig.t, abs=1e-9)
        assert c_rev.incidence == pytest.approx(PI - c_orig.incidence, abs=1e-9)


# ---------------------------------------------------------------------------
# classification


def test_classify_tetra_types():
    spec = build_solid(SolidKind.TETRAHEDRON, 0.35 * PI)
    for p, q in ((0, 1), (1, 1), (1, 2), (1, 3), (2, 3)):
        path = solve_tetra_type(spec, p, q)
        assert path is not None
        assert classify_tetra_type(spec, path) == (p, q)
        assert len(path.crossings) == 4 * (p + q)
        # one symmetry class per type; three geodesics when the crossing
        # profile (p, q, p+q) has a repeated entry (mirror-symmetric types),
        # six otherwise (three pair assignments x two chiralities)
        expected_orbit = 3 if (p == 0 or p == q) else 6
        assert orbit_size(spec, path.seq) == expected_orbit


def test_solve_bitwise_deterministic():
    spec = build_solid(SolidKind.OCTAHEDRON, 0.45 * PI)
    seq = seq_of(spec, OCTA_TYPE2)
    a = solve_sequence(spec, seq)
    b = solve_sequence(spec, seq)
    assert a.crossings == b.crossings
    assert a.pole == b.pole
    assert a.total_length == b.total_length


def test_classify_rejects_vertex_loop_pattern():
    spec = build_solid(SolidKind.TETRAHEDRON, 0.6 * PI)
    word = (spec.edge_id(0, 1), spec.edge_id(0, 2), spec.edge_id(0, 3))
    path = solve_sequence(spec, CrossingSequence.from_edges(spec, word))
    assert path is not None
    with pytest.raises(ClassificationError):
        classify_tetra_type(spec, path)
    assert class_tag(spec, path) == "vertex-loop"


def test_tetra_type_sequence_structure():
    spec = build_solid(SolidKind.TETRAHEDRON, 0.4 * PI)
    for p, q in ((0, 1), (1, 1), (1, 2), (3, 4), (2, 5)):
        seq = tetra_type_sequence(spec, p, q)
        assert len(seq.crossings) == 4 * (p + q)
        seq.validate(spec)
        # pair counts (p, q, p+q), each edge of a pair crossed equally
        per_edge = [0] * 6
        for c in seq.crossings:
            per_edge[c.edge] += 1
        pairs = sorted(
            (per_edge[spec.edge_index[a]], per_edge[spec.edge_index[b]])
            for a, b in (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))
        )
        assert [a for a, b in pairs] == [b for a, b in pairs]
        assert [a for a, _ in pairs] == sorted((p, q, p + q))


# ---------------------------------------------------------------------------
# vertex loops: present on the tetrahedron only, iff the edge exceeds pi/2


def test_vertex_loop_threshold():
    for alpha, expected in ((0.45 * PI, 0), (0.55 * PI, 1), (0.65 * PI, 1)):
        spec = build_solid(SolidKind.TETRAHEDRON, alpha)
        tags = [c.tag for c in enumerate_classes(spec, 6)]
        assert tags.count("vertex-loop") == expected


def test_no_vertex_loop_on_octa_or_cube():
    for kind, alpha in ((SolidKind.OCTAHEDRON, 0.45 * PI), (SolidKind.CUBE, 0.62 * PI)):
        spec = build_solid(kind, alpha)
        for cls in enumerate_classes(spec, 8):
            assert cls.tag in ("type1", "type2", "type3")


def test_vertex_loop_geometry():
    # crossings sit exactly pi/2 along each incident edge, at right angles,
    # and the length is the cone angle
    alpha = 0.6 * PI
    spec = build_solid(SolidKind.TETRAHEDRON, alpha)
    word = (spec.edge_id(0, 1), spec.edge_id(0, 2), spec.edge_id(0, 3))
    path = solve_sequence(spec, CrossingSequence.from_edges(spec, word))
    a_t = sphtrig.tetra_edge(alpha)
    assert path is not None
    assert path.total_length == pytest.approx(3 * alpha, abs=1e-12)
    for c in path.crossings:
        assert c.t == pytest.approx((PI / 2) / a_t, abs=1e-12)
        assert c.incidence == pytest.approx(PI / 2, abs=1e-12)
    assert orbit_size(spec, path.seq) == 4


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_octa():
    spec = build_solid(SolidKind.OCTAHEDRON, 0.4 * PI)
    classes = enumerate_classes(spec, 12)
    assert sorted(len(c.seq.crossings) for c in classes) == [6, 8]
    assert sorted(c.tag for c in classes) == ["type1", "type2"]
    assert sorted(c.orbit_size for c in classes) == [4, 6]


def test_enumerate_cube():
    spec = build_solid(SolidKind.CUBE, 0.6 * PI)
    classes = enumerate_classes(spec, 12)
    assert sorted(len(c.seq.crossings) for c in classes) == [4, 6, 6]
    assert sorted(c.orbit_size for c in classes) == [3, 4, 12]


def test_enumerate_tetra_above_half_pi():
    # the (0,1) band plus the vertex loop
    spec = build_solid(SolidKind.TETRAHEDRON, 0.6 * PI)
    classes = enumerate_classes(spec, 12)
    assert sorted(c.tag for c in classes) == ["0,1", "vertex-loop"]
    typed = [c for c in classes if c.tag == "0,1"]
    assert len(typed) == 1 and typed[0].orbit_size == 3


def test_enumerate_deterministic():
    spec = build_solid(SolidKind.OCTAHEDRON, 0.45 * PI)
    a = enumerate_classes(spec, 10)
    b = enumerate_classes(spec, 10)
    assert [c.seq.edge_word() for c in a] == [c.seq.edge_word() for c in b]
    words = [c.seq.edge_word() for c in a]
    assert words == sorted(words)


@pytest.mark.parametrize("kind,alphas", [
    (SolidKind.TETRAHEDRON, (0.44 * PI, 0.52 * PI, 0.61 * PI)),
    (SolidKind.OCTAHEDRON, (0.38 * PI, 0.42 * PI, 0.47 * PI)),
    (SolidKind.CUBE, (0.54 * PI, 0.59 * PI, 0.64 * PI)),
])
def test_pruning_equivalence_depth8(kind, alphas):
    for alpha in alphas:
        spec = build_solid(kind, alpha)
        pruned = enumerate_classes(spec, 8, prune=True)
        full = enumerate_classes(spec, 8, prune=False)
        assert [(c.seq.edge_word(), c.tag) for c in pruned] == [
            (c.seq.edge_word(), c.tag) for c in full
        ]


def test_enumerate_stable_beyond_required_depth():
    # no further classes hide just past the 12-crossing horizon
    spec = build_solid(SolidKind.OCTAHEDRON, 0.42 * PI)
    assert sorted(len(c.seq.crossings) for c in enumerate_classes(spec, 16)) == [6, 8]
    spec = build_solid(SolidKind.CUBE, 0.58 * PI)
    assert sorted(len(c.seq.crossings) for c in enumerate_classes(spec, 14)) == [4, 6, 6]


def test_enumerate_rejects_shallow_depth():
    spec = build_solid(SolidKind.OCTAHEDRON, 0.45 * PI)
    with pytest.raises(sphtrig.DomainError):
        enumerate_classes(spec, 2)
