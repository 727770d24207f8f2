import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_generates
from revmap import dihedral, dihedral_product, s4_cover
from revmap.families import from_permutation_file
from revmap.maps import MapKind, ReversingTriple, build_map, make_reversing_triple
from revmap.triples import (
    EquivalenceClass,
    classify_map,
    coprime_filter,
    dihedral_discriminants,
    enumerate_reversing_triples,
    equivalence_classes,
    match_canonical_form,
    reflection_exponents,
    regular_triples,
    verify_corollary_regular,
)


def brute_triples(G):
    invs = [g for g in range(G.order) if G.element_order(g) == 2]
    cache = {}
    out = []
    for t in itertools.product(invs, repeat=3):
        if t[0] == t[1] == t[2]:
            continue
        key = frozenset(t)
        if key not in cache:
            cache[key] = brute_generates(G, list(key))
        if cache[key]:
            out.append(t)
    return out


def affine_classes_odd_dihedral(n):
    """Classes of reflection-exponent triples under e -> k*e + l (k a unit) and the first swap."""
    units = [k for k in range(1, n) if math.gcd(k, n) == 1]
    seen = set()
    count = 0
    for t in itertools.product(range(n), repeat=3):
        a, b, c = t
        if a == b == c or math.gcd(math.gcd(b - a, c - a), n) != 1 or t in seen:
            continue
        count += 1
        for k in units:
            for l in range(n):
                img = tuple((k * e + l) % n for e in t)
                seen.add(img)
                seen.add((img[1], img[0], img[2]))
    return count


class TestEnumeration:
    @pytest.mark.parametrize("maker, args", [(dihedral, (6,)), (dihedral, (9,)), (dihedral_product, (3, 5)),
                                             (s4_cover, (3,))])
    def test_matches_triple_loop_oracle(self, maker, args):
        G = maker(*args).group
        got = [t.elements for t in enumerate_reversing_triples(G)]
        assert got == sorted(brute_triples(G))

    def test_dxd35_count_is_frozen(self, dxd35):
        # value from the triple-loop oracle above
        assert len(enumerate_reversing_triples(dxd35.group)) == 4320

    def test_fallback_path_without_automorphisms(self, monkeypatch):
        from revmap import triples as T

        G = dihedral(7).group
        fast = [t.elements for t in enumerate_reversing_triples(G)]
        T._SPACES.clear()
        monkeypatch.setattr(T, "automorphism_cap", lambda cap=None: 0)
        slow_space, codes = T.reversing_triple_codes(G)
        slow = [tuple(map(int, t)) for t in slow_space.decode(codes)]
        T._SPACES.clear()
        assert slow == fast


class TestEquivalence:
    @pytest.mark.parametrize("n", [3, 5, 7, 9, 15])
    def test_class_count_matches_affine_oracle(self, n):
        assert len(equivalence_classes(dihedral(n).group)) == affine_classes_odd_dihedral(n)

    def test_classes_partition(self, s4c3):
        G = s4c3.group
        classes = equivalence_classes(G)
        total = sum(c.size for c in classes)
        assert total == len(enumerate_reversing_triples(G))
        reps = [c.representative for c in classes]
        assert reps == sorted(reps)
        for c in classes:
            assert c.representative == min(c.triples())

    @settings(max_examples=60, deadline=None)
    @given(st.sampled_from(["D:9", "DxD:3,5", "S4C:9"]), st.data())
    def test_certificates_send_members_to_representative(self, spec, data):
        G = _groups(spec)
        classes = equivalence_classes(G)
        cls = data.draw(st.sampled_from(classes))
        member = data.draw(st.sampled_from(cls.triples()))
        cert = cls.certificate(member)
        assert EquivalenceClass.apply(cert, member) == cls.representative
        emap = cert[0]
        # the certificate is a genuine automorphism
        assert (emap[G.table] == G.table[np.ix_(emap, emap)]).all()

    def test_certificate_rejects_outsider(self, d5):
        classes = equivalence_classes(d5.group)
        with pytest.raises(KeyError):
            classes[0].certificate(classes[1].representative)

    @pytest.mark.parametrize("spec", ["D:9", "DxD:3,5", "S4C:3"])
    def test_invariants_constant_on_classes(self, spec):
        G = _groups(spec)
        for cls in equivalence_classes(G):
            members = cls.triples()
            sample = members[:: max(1, len(members) // 6)]
            for kind in (MapKind.REV, MapKind.BIREV):
                summaries = {build_map(ReversingTriple(G, *t), kind).invariants.summary() for t in sample}
                assert len(summaries) == 1

    def test_without_swap_classes_are_finer(self, s4c3):
        assert len(equivalence_classes(s4c3.group, allow_swap=False)) > len(equivalence_classes(s4c3.group))


_GROUP_CACHE = {}


def _groups(spec):
    from revmap import parse_group_spec

    if spec not in _GROUP_CACHE:
        _GROUP_CACHE[spec] = parse_group_spec(spec).group
    return _GROUP_CACHE[spec]


class TestCanonicalForms:
    @pytest.mark.parametrize("n", list(range(3, 26, 2)) + list(range(2, 21, 2)))
    def test_every_dihedral_triple_is_tagged(self, n):
        G = dihedral(n).group
        for cls in equivalence_classes(G):
            assert match_canonical_form(G, cls.representative_triple()).name is not None

    def test_dxd_forms(self, dxd35):
        G = dxd35.group
        tag = match_canonical_form(G, make_reversing_triple(G, "u", "v", "abw"))
        assert tag.name == "DxD-uvw" and tag.ordered
        emap, image = tag.witness
        assert tuple(int(emap[e]) for e in make_reversing_triple(G, "u", "v", "abw").elements) == image

    def test_unknown_family(self, tmp_path):
        f = tmp_path / "s3.txt"
        f.write_text("(0 1 2)\n(0 1)\n")
        G = from_permutation_file(f).group
        tr = enumerate_reversing_triples(G)[0]
        assert match_canonical_form(G, tr).name is None


class TestClassification:
    def test_dxd_clause(self, dxd35):
        cl = classify_map(build_map(make_reversing_triple(dxd35.group, "u", "v", "abw"), MapKind.REV))
        assert cl.clause == "dihedral-product" and cl.is_family_clause
        assert cl.params["graphListed"]

    def test_rank3_clause(self, r357):
        cmap = build_map(make_reversing_triple(r357.group, "u", "cv", "abw"), MapKind.REV)
        cl = classify_map(cmap)
        assert cl.clause == "rank3-cover"
        assert cl.params["graph"] in cl.params["listedGraphs"]
        assert cmap.chi == 3 * 5 + 3 * 7 + 5 * 7 - 2 * 105

    def test_s4_cover_clause(self, s4c3):
        cmap = build_map(make_reversing_triple(s4c3.group, "v", "hv", "w2"), MapKind.REV)
        cl = classify_map(cmap)
        assert cl.clause == "s4-cover"
        assert (cl.params["f"], cl.params["n"]) == (0, 1)
        assert cmap.chi == 4 - 3

    def test_non_coprime_is_unmatched(self, s4c3):
        cl = classify_map(build_map(make_reversing_triple(s4c3.group, "v", "hv", "w2v"), MapKind.REV))
        assert cl.clause == "unmatched" and "gcd" in cl.reason

    def test_dihedral_closed_form(self):
        L = dihedral(21)
        G = L.group
        assert len(reflection_exponents(L)) == 21
        cmap = build_map(make_reversing_triple(G, "h", "g6h", "g7h"), MapKind.REV)
        assert cmap.invariants.counts == (3, 21, 8)
        cl = classify_map(cmap)
        assert cl.clause == "dihedral" and cl.params["exponents"] == [0, 6, 7]
        birev = build_map(make_reversing_triple(G, "h", "g3h", "g5h"), MapKind.BIREV)
        assert birev.chi == -11 and classify_map(birev).clause == "dihedral"

    def test_single_vertex_map_is_small(self):
        G = dihedral(9).group
        cl = classify_map(build_map(make_reversing_triple(G, "h", "gh", "g3h"), MapKind.REV))
        assert cl.clause == "small"

    def test_isomorphic_copy_is_recognised(self, tmp_path):
        # D10 on 5 points, generated by two reflections instead of the family labels
        f = tmp_path / "d10.txt"
        f.write_text("r: (1 4)(2 3)\ns: (0 1)(2 4)\n")
        L = from_permutation_file(f)
        G = L.group
        for cls in equivalence_classes(G):
            tr = cls.representative_triple()
            ok, inv = coprime_filter(tr, MapKind.REV)
            if ok:
                assert classify_map(build_map(tr, MapKind.REV)).clause in ("dihedral", "small")

    @pytest.mark.parametrize("spec", ["D:5", "D:9", "D:15", "DxD:3,5", "DxD:3,7", "S4C:3", "S4C:9", "R3:3,5,7"])
    def test_filter_and_classification_agree(self, spec):
        G = _groups(spec)
        unmatched = []
        for cls in equivalence_classes(G):
            tr = cls.representative_triple()
            ok, _ = coprime_filter(tr, MapKind.REV)
            cl = classify_map(build_map(tr, MapKind.REV))
            assert ok == (cl.is_family_clause or cl.clause == "small"), (tr.words(), cl)
            if ok and cl.clause == "unmatched":
                unmatched.append(tr.words())
        assert not unmatched

    @pytest.mark.parametrize("spec", ["DxD:3,5", "DxD:3,7", "S4C:3", "S4C:9", "R3:3,5,7"])
    def test_no_birev_map_passes_over_non_metacyclic_groups(self, spec):
        G = _groups(spec)
        for cls in equivalence_classes(G):
            ok, inv = coprime_filter(cls.representative_triple(), MapKind.BIREV)
            assert not ok, (cls.representative_triple().words(), inv.chi, inv.num_edges)


class TestDiscriminants:
    def test_rev_example(self):
        d = dihedral_discriminants(9, 1, 3)
        assert d.delta_rev == 1 and d.chi_rev == -4
        G = dihedral(9).group
        assert build_map(make_reversing_triple(G, "h", "gh", "g3h"), MapKind.REV).chi == -4

    def test_birev_example(self):
        d = dihedral_discriminants(9, 1, 2)
        assert d.delta_birev == 1 and d.chi_birev == -5
        G = dihedral(9).group
        assert build_map(make_reversing_triple(G, "h", "gh", "g2h"), MapKind.BIREV).chi == -5

    def test_rev_discriminant_needs_nontrivial_gcd(self):
        # with gcd(j, n) = 1 a power of 3 can still divide the sum
        assert dihedral_discriminants(9, 1, 2).delta_rev == 3

    @settings(max_examples=200, deadline=None)
    @given(st.integers(min_value=3, max_value=30).flatmap(
        lambda n: st.tuples(st.just(n), st.integers(1, n - 1), st.integers(1, n - 1))))
    def test_closed_forms_match_built_maps(self, nij):
        n, i, j = nij
        if math.gcd(math.gcd(i, j), n) != 1:
            return
        G = dihedral(n).group
        tr = ReversingTriple(G, G.word("h"), G.word(f"g{i}h"), G.word(f"g{j}h"))
        d = dihedral_discriminants(n, i, j)
        assert build_map(tr, MapKind.REV).chi == d.chi_rev
        assert build_map(tr, MapKind.BIREV).chi == d.chi_birev

    @pytest.mark.parametrize("n", [9, 27, 25, 49])
    def test_prime_power_rev_discriminant(self, n):
        for i in range(1, n):
            for j in range(1, n):
                if math.gcd(math.gcd(i, j), n) == 1 and math.gcd(j, n) >= 3:
                    assert dihedral_discriminants(n, i, j).delta_rev == 1


class TestRegular:
    def test_regular_triples_commute(self, s4c3):
        G = s4c3.group
        for x, y, z in regular_triples(G).tolist():
            assert G.mul(y, z) == G.mul(z, y) and y != z

    def test_dxd_regular_maps(self, dxd35):
        findings = verify_corollary_regular(dxd35.group)
        assert {f["status"] for f in findings} <= {"pass", "skip"}
        passing = [f for f in findings if f["status"] == "pass"]
        assert {f["chi"] for f in passing} == {5 + 3 - 15}
        assert all(min(f["counts"][0], f["counts"][2]) < 3 for f in findings if f["status"] == "skip")

    def test_s4_cover_regular_chis(self, s4c3):
        findings = [f for f in verify_corollary_regular(s4c3.group) if "triple" in f]
        assert sorted(f["chi"] for f in findings) == [1, 1, 2]
        orientable = [f for f in findings if f["orientable"]]
        assert len(orientable) == 1 and orientable[0]["chi"] == 2
