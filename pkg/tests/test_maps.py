import dataclasses
import json
import math

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from revmap import StructuralError, ValidationError, dihedral, s4_cover
from revmap.maps import (
    MapKind,
    build_map,
    check_flag_system,
    euler_characteristic,
    flag_system,
    make_reversing_triple,
    map_record,
    orientation_subgroup_index,
    record_json,
)
from revmap.triples import enumerate_reversing_triples


def brute_cosets(G, gens):
    """Left cosets as frozensets, with the subgroup grown by repeated products."""
    H = {0}
    while True:
        bigger = H | {G.mul(a, b) for a in H for b in list(gens) + list(H)}
        if bigger == H:
            break
        H = bigger
    return {frozenset(G.mul(g, h) for h in H) for g in range(G.order)}


def brute_counts(triple, kind):
    G = triple.group
    x, y, z = triple.elements
    V = brute_cosets(G, [x, y])
    if kind is MapKind.REG:
        E, F = brute_cosets(G, [y, z]), [brute_cosets(G, [x, z])]
    elif kind is MapKind.REV:
        E, F = brute_cosets(G, [z]), [brute_cosets(G, [x, z]), brute_cosets(G, [y, z])]
    else:
        E, F = brute_cosets(G, [z]), [brute_cosets(G, [x, G.conj(y, z)])]
    return len(V), len(E), sum(len(f) for f in F)


_DIHEDRAL = {n: dihedral(n) for n in range(3, 13)}
_TRIPLES = {n: enumerate_reversing_triples(L.group) for n, L in _DIHEDRAL.items()}


@st.composite
def dihedral_triples(draw):
    n = draw(st.integers(min_value=3, max_value=12))
    trips = _TRIPLES[n]
    return trips[draw(st.integers(min_value=0, max_value=len(trips) - 1))]


class TestConstruction:
    def test_dxd_rev_counts(self, dxd35):
        cmap = build_map(make_reversing_triple(dxd35.group, "u", "v", "abw"), "rev")
        inv = cmap.invariants
        assert inv.counts == (15, 30, 8)
        assert inv.chi == 3 + 5 - 15
        assert not inv.orientable and inv.coprime
        assert inv.vertex_stabilizer == (4, "D4")
        assert sorted(inv.face_stabilizers) == [(12, "D12"), (20, "D20")]

    @pytest.mark.parametrize("kind", list(MapKind))
    def test_counts_match_brute_force_cosets(self, s4c3, kind):
        G = s4c3.group
        for words in [("v", "hv", "w2"), ("v", "u", "hv"), ("hv", "v", "w2v")]:
            tr = make_reversing_triple(G, *words)
            if kind is MapKind.REG and (G.mul(tr.y, tr.z) != G.mul(tr.z, tr.y)):
                continue
            cmap = build_map(tr, kind)
            assert (cmap.num_vertices, cmap.num_edges, cmap.num_faces) == brute_counts(tr, kind)

    def test_rev_incidence_is_literal_intersection(self, d5):
        G = d5.group
        tr = make_reversing_triple(G, "h", "gh", "g2h")
        cmap = build_map(tr, MapKind.REV)
        inc = cmap.incidence
        assert inc["VE"] == cmap.intersecting_pairs(cmap.vertices, cmap.edges)
        literal_vf = set()
        for k, fam in enumerate(cmap.faces):
            literal_vf |= {(v, cmap.face_offsets[k] + f) for v, f in cmap.intersecting_pairs(cmap.vertices, fam)}
        assert inc["VF"] == literal_vf

    def test_birev_corner_incidence_extends_intersection(self, d5):
        G = d5.group
        tr = make_reversing_triple(G, "h", "gh", "g3h")
        cmap = build_map(tr, MapKind.BIREV)
        literal = cmap.intersecting_pairs(cmap.vertices, cmap.faces[0])
        assert literal <= cmap.incidence["VF"]
        assert len(cmap.flags) == 4 * cmap.num_edges

    def test_reg_needs_commuting_distinct(self, s4c3):
        G = s4c3.group
        with pytest.raises(ValidationError, match="commuting"):
            build_map(make_reversing_triple(G, "v", "hv", "w2"), MapKind.REG)
        with pytest.raises(ValidationError):
            build_map(make_reversing_triple(G, "hv", "v", "v"), MapKind.REG)

    def test_triple_validation(self, s4c3):
        G = s4c3.group
        with pytest.raises(ValidationError):
            make_reversing_triple(G, "h", "v", "w2")  # h is not an involution
        with pytest.raises(ValidationError):
            make_reversing_triple(G, "v", "v", "v")
        with pytest.raises(ValidationError):
            make_reversing_triple(G, "v", "w2", "u")  # generates only the Klein-by-reflection part
        with pytest.raises(ValidationError):
            make_reversing_triple(G, "v", "hv", "nonsense")

    def test_kind_parsing(self):
        assert MapKind.parse("BiRev") is MapKind.BIREV
        assert str(MapKind.REG) == "Reg"
        with pytest.raises(ValidationError):
            MapKind.parse("chiral")

    def test_record_is_deterministic(self, dxd35):
        tr = make_reversing_triple(dxd35.group, "u", "v", "abw")
        a = record_json(map_record(build_map(tr, "rev")))
        b = record_json(map_record(build_map(tr, "rev")))
        assert a == b
        rec = json.loads(a)
        assert list(rec) == ["kind", "group", "order", "triple", "counts", "chi", "orientable", "coprime",
                             "stabilizers", "graph"]
        assert rec["chi"] == -7 and rec["orientable"] is False


class TestInvariantProperties:
    @settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(dihedral_triples(), st.sampled_from([MapKind.REV, MapKind.BIREV]))
    def test_chi_from_stabilizers(self, tr, kind):
        cmap = build_map(tr, kind)
        inv = cmap.invariants
        N = tr.group.order
        assert inv.chi == euler_characteristic(N, inv.vertex_stabilizer[0], inv.edge_stabilizer[0],
                                               [f[0] for f in inv.face_stabilizers])
        assert (cmap.num_vertices, cmap.num_edges, cmap.num_faces) == brute_counts(tr, kind)

    @settings(max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(dihedral_triples(), st.sampled_from(list(MapKind)))
    def test_flag_axioms(self, tr, kind):
        G = tr.group
        if kind is MapKind.REG and (G.mul(tr.y, tr.z) != G.mul(tr.z, tr.y) or tr.y == tr.z):
            return
        cmap = build_map(tr, kind)
        fs = flag_system(cmap)  # raises on any broken axiom
        assert len(fs) == 4 * cmap.num_edges
        if cmap.chi % 2:
            assert not cmap.invariants.orientable
        if kind is MapKind.REG:
            assert cmap.invariants.orientable == (orientation_subgroup_index(tr) == 2)

    @settings(max_examples=100, deadline=None)
    @given(dihedral_triples())
    def test_swapping_x_and_y_preserves_rev_invariants(self, tr):
        a = build_map(tr, MapKind.REV).invariants
        b = build_map(tr.swapped(), MapKind.REV).invariants
        assert a.summary() == b.summary()


class TestFlags:
    def test_flag_count_and_orbits(self, dxd35):
        cmap = build_map(make_reversing_triple(dxd35.group, "u", "v", "abw"), MapKind.REV)
        fs = cmap.flags
        assert len(fs) == 120
        assert fs.orbit_count((1, 2)) == 15
        assert fs.orbit_count((0, 2)) == 30
        assert fs.orbit_count((0, 1)) == 8

    def test_corrupted_partner_is_reported(self, d5):
        cmap = build_map(make_reversing_triple(d5.group, "h", "gh", "g2h"), MapKind.REV)
        fs = flag_system(cmap)
        r1 = fs.partners[1].copy()
        r1[[0, 1]] = r1[[1, 0]]
        broken = dataclasses.replace(fs, partners=(fs.partners[0], r1, fs.partners[2]))
        with pytest.raises(StructuralError, match="flag"):
            check_flag_system(broken)

    def test_tetrahedron_is_orientable(self):
        G = s4_cover(3).group
        cmap = build_map(make_reversing_triple(G, "v", "vh", "hhw"), MapKind.REG)
        inv = cmap.invariants
        assert inv.counts == (4, 6, 4) and inv.chi == 2 and inv.orientable
        assert orientation_subgroup_index(cmap.triple) == 2

    def test_projective_plane_map(self, s4c3):
        cmap = build_map(make_reversing_triple(s4c3.group, "hv", "v", "w2"), MapKind.REG)
        assert cmap.chi == 1 and not cmap.invariants.orientable
        assert orientation_subgroup_index(cmap.triple) == 1


def test_euler_characteristic_helper():
    assert euler_characteristic(60, 4, 2, [12, 20]) == 15 - 30 + 5 + 3
    assert math.gcd(abs(euler_characteristic(60, 4, 2, [12, 20])), 30) == 1


def test_face_label_vectorized(dxd35):
    cmap = build_map(make_reversing_triple(dxd35.group, "u", "v", "abw"), MapKind.REV)
    g = np.arange(dxd35.order)
    labels = cmap.face_label(1, g)
    assert labels.min() == cmap.face_offsets[1]
    assert labels.max() == cmap.num_faces - 1
