import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_automorphism_count, brute_closure
from revmap import (
    EnumerationOverflow,
    ValidationError,
    dihedral,
    dihedral_product,
    metacyclic,
    s4_cover,
)
from revmap.groups import (
    Permutation,
    automorphism_group,
    closure_from_generators,
    coset_labels,
    involutions,
    is_isomorphic,
    left_cosets,
    quotient_group,
    structure_report,
    subgroup_generated,
    sylow_subgroup,
)

perms = st.integers(min_value=1, max_value=7).flatmap(
    lambda d: st.permutations(list(range(d))).map(Permutation))


def perm_pair():
    return st.integers(min_value=1, max_value=7).flatmap(
        lambda d: st.tuples(st.permutations(list(range(d))), st.permutations(list(range(d)))))


class TestPermutation:
    def test_product_is_left_to_right(self):
        a = Permutation.parse("(0 1)", 3)
        b = Permutation.parse("(1 2)", 3)
        # apply a first: 0 -> 1 -> 2
        assert (a * b)(0) == 2
        assert (b * a)(0) == 1

    def test_rejects_non_bijection(self):
        with pytest.raises(ValidationError):
            Permutation([0, 0, 1])

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValidationError):
            Permutation.parse("(0 1) x")
        with pytest.raises(ValidationError):
            Permutation.parse("(0 5)", degree=3)

    @given(perms)
    def test_cycle_notation_round_trip(self, p):
        assert Permutation.parse(repr(p), p.degree) == p

    @given(perms)
    def test_inverse_and_order(self, p):
        e = Permutation.identity(p.degree)
        assert p * p.inverse() == e
        q = e
        for _ in range(p.order()):
            q = q * p
        assert q == e

    @given(perm_pair())
    def test_inverse_reverses_products(self, pair):
        a, b = map(Permutation, pair)
        assert (a * b).inverse() == b.inverse() * a.inverse()


class TestClosure:
    @pytest.mark.parametrize("maker, args", [(dihedral, (7,)), (dihedral_product, (3, 5)), (s4_cover, (3,)),
                                             (metacyclic, (7, 3, 2))])
    def test_order_matches_breadth_first_oracle(self, maker, args):
        L = maker(*args)
        gens = [L.group.perm(v).images for v in L.group.generators.values()]
        assert L.group.order == len(brute_closure(gens))

    def test_table_agrees_with_permutation_product(self, dxd35):
        G = dxd35.group
        rng = np.random.default_rng(1)
        for a, b in rng.integers(0, G.order, size=(200, 2)):
            assert G.perm(G.mul(a, b)) == G.perm(a) * G.perm(b)

    def test_identity_is_index_zero(self, s4c3):
        G = s4c3.group
        assert G.perm(0) == Permutation.identity(G.degree)
        assert G.identity == 0

    def test_cap_is_enforced(self):
        gens = {"a": Permutation.parse("(0 1 2 3 4 5 6)"), "b": Permutation.parse("(0 1)", 7)}
        with pytest.raises(EnumerationOverflow, match="100"):
            closure_from_generators(7, gens, cap=100)

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("REVMAP_CAP", "10")
        with pytest.raises(EnumerationOverflow):
            dihedral(6)

    def test_words(self, dxd35):
        G = dxd35.group
        assert G.word("w") == G.mul(G.word("u"), G.word("v"))
        assert G.word("a3") == G.identity
        assert G.word("a-1") == G.inv(G.word("a"))
        assert G.word("1") == G.identity
        for g in range(0, G.order, 7):
            assert G.word(G.describe(g)) == g


class TestSubgroupsAndCosets:
    def test_involution_counts(self):
        # odd n: the n reflections; even n: also the central rotation
        for n in range(3, 12):
            assert len(involutions(dihedral(n).group)) == (n if n % 2 else n + 1)
        assert len(involutions(dihedral_product(3, 5).group)) == 3 + 5 + 15

    def test_cosets_partition_and_match_brute_force(self, s4c3):
        G = s4c3.group
        H = subgroup_generated(G, [G.word("v"), G.word("h")])
        cosets = left_cosets(G, H)
        assert len(cosets) * H.order == G.order
        brute = {frozenset(G.mul(g, h) for h in H) for g in range(G.order)}
        assert {c.elements for c in cosets} == brute
        labels, reps = coset_labels(G, H)
        assert reps == sorted(reps)
        assert all(labels[g] == labels[G.mul(g, h)] for g in range(G.order) for h in H)

    def test_left_cosets_rejects_non_subgroup(self, s4c3):
        from revmap.groups import Subgroup

        G = s4c3.group
        with pytest.raises(ValidationError):
            left_cosets(G, Subgroup(G, frozenset([0, G.word("v"), G.word("h")])))

    def test_normality(self, s4c9):
        G = s4c9.group
        assert subgroup_generated(G, [G.word("h3")]).is_normal()
        assert not subgroup_generated(G, [G.word("v")]).is_normal()

    def test_quotient_rejects_non_normal(self, s4c3):
        G = s4c3.group
        with pytest.raises(ValidationError):
            quotient_group(G, subgroup_generated(G, [G.word("v")]))

    def test_quotient_projection_is_homomorphism(self, s4c9):
        G = s4c9.group
        N = subgroup_generated(G, [G.word("h3")])
        Q, proj = quotient_group(G, N)
        assert Q.order == G.order // N.order == 24
        assert proj.is_multiplicative()
        kernel = {g for g in range(G.order) if proj(g) == Q.identity}
        assert kernel == set(N.elements)

    @pytest.mark.parametrize("spec_order", [(dihedral, (12,)), (dihedral_product, (3, 5)), (s4_cover, (9,))])
    def test_sylow_orders(self, spec_order):
        maker, args = spec_order
        G = maker(*args).group
        for p in {2, 3, 5}:
            if G.order % p == 0:
                P = sylow_subgroup(G, p)
                pe = p ** next(k for k in range(20) if G.order % p ** (k + 1))
                assert P.order == pe


class TestAutomorphisms:
    # brute force over all bijections: S3 has 6 automorphisms, the Klein group 6, Z5 has 4, D8 has 8
    @pytest.mark.parametrize("maker, args, expected", [
        (dihedral, (3,), 6), (dihedral, (2,), 6), (metacyclic, (5, 1, 1), 4), (dihedral, (4,), 8),
    ])
    def test_counts_against_bijection_oracle(self, maker, args, expected):
        G = maker(*args).group
        assert brute_automorphism_count(G) == expected
        auts = automorphism_group(G)
        assert len(auts) == expected
        assert all(a.is_bijective() and a.is_multiplicative() for a in auts)
        assert (auts[0].element_map == np.arange(G.order)).all()

    def test_dihedral_automorphism_count_is_holomorph(self):
        # Aut(D_2n) = Z_n : Z_n^*, order n * phi(n), for n >= 3
        for n in (5, 6, 9, 15):
            phi = sum(1 for k in range(1, n) if math.gcd(k, n) == 1)
            assert len(automorphism_group(dihedral(n).group)) == n * phi

    def test_automorphism_cap(self):
        with pytest.raises(EnumerationOverflow):
            automorphism_group(dihedral(40).group, cap=50)

    def test_isomorphism(self, s4c3):
        iso = is_isomorphic(s4c3.group, s4c3.group)
        assert iso is not None and iso.is_multiplicative() and iso.is_bijective()
        assert is_isomorphic(dihedral(12).group, s4c3.group) is None
        # D6 x D10 is Z15 : (Z2 x Z2), not dihedral, though of the same order
        assert is_isomorphic(dihedral(30).group, dihedral_product(3, 5).group) is None


class TestStructure:
    def test_s4_cover_structure(self, s4c3):
        rep = structure_report(s4c3.group).as_dict()
        assert rep["order"] == 24
        assert rep["almostSylowCyclic"] is True
        assert rep["sylow"]["2"] == {"shape": "dihedral", "order": 8}
        assert rep["solvable"] is True
        assert rep["O2"] == 4

    def test_negative_cases(self):
        assert not structure_report(metacyclic(3, 3, 1).group).is_almost_sylow_cyclic
        assert not structure_report(metacyclic(9, 3, 4).group).is_almost_sylow_cyclic

    def test_cyclic_and_dihedral_flags(self):
        assert structure_report(metacyclic(15, 1, 1).group).is_cyclic
        r = structure_report(dihedral(7).group)
        assert r.is_dihedral and not r.is_abelian
        assert structure_report(dihedral(2).group).is_abelian
