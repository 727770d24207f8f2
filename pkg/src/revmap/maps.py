"""Coset maps built from reversing triples, their invariants, flags and orientability.

A map's vertices, edges and faces are left cosets ``gH`` of the stabilizer
subgroups, and the group acts on everything by left multiplication.  Flags
are built directly from the group action rather than by searching for
pairwise incident triples; see :func:`flag_system`.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .exceptions import StructuralError, ValidationError
from .groups import FiniteGroup, Subgroup, coset_labels, isomorphism_tag, left_cosets, subgroup_generated

__all__ = [
    "MapKind", "ReversingTriple", "make_reversing_triple", "CosetFamily", "CosetMap", "build_map",
    "MapInvariants", "map_invariants", "FlagSystem", "flag_system", "is_orientable",
    "map_record", "euler_characteristic",
]


class MapKind(enum.Enum):
    REV = "rev"
    BIREV = "birev"
    REG = "reg"

    @classmethod
    def parse(cls, text):
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).lower())
        except ValueError:
            raise ValidationError(f"unknown map kind {text!r} (expected rev, birev or reg)") from None

    def __str__(self):
        return {"rev": "Rev", "birev": "BiRev", "reg": "Reg"}[self.value]


@dataclass(frozen=True, eq=False)
class ReversingTriple:
    group: FiniteGroup
    x: int
    y: int
    z: int

    @property
    def elements(self):
        return (self.x, self.y, self.z)

    def swapped(self):
        return ReversingTriple(self.group, self.y, self.x, self.z)

    def words(self):
        return tuple(self.group.describe(e) for e in self.elements)

    def __eq__(self, other):
        return isinstance(other, ReversingTriple) and other.group is self.group and other.elements == self.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return "ReversingTriple(" + ", ".join(self.words()) + ")"


def _element(G, e):
    if isinstance(e, str):
        return G.word(e)
    e = int(e)
    if not 0 <= e < G.order:
        raise ValidationError(f"element index {e} outside group of order {G.order}")
    return e


def make_reversing_triple(G: FiniteGroup, x, y, z) -> ReversingTriple:
    """Validate an ordered triple; elements may be indices or label words."""
    x, y, z = (_element(G, e) for e in (x, y, z))
    for name, e in zip("xyz", (x, y, z)):
        if G.orders[e] != 2:
            raise ValidationError(f"{name} = {G.describe(e)} is not an involution")
    if x == y == z:
        raise ValidationError("all three entries are equal")
    if subgroup_generated(G, (x, y, z)).order != G.order:
        raise ValidationError("the triple does not generate the group")
    return ReversingTriple(G, x, y, z)


@dataclass(frozen=True, eq=False)
class CosetFamily:
    """The left cosets of one stabilizer, with a coset label for every element."""

    tag: str
    subgroup: Subgroup
    labels: np.ndarray = field(repr=False)
    representatives: tuple

    @classmethod
    def of(cls, tag, H):
        labels, reps = coset_labels(H.group, H)
        return cls(tag, H, labels, tuple(reps))

    def __len__(self):
        return len(self.representatives)

    def cosets(self):
        return left_cosets(self.subgroup.group, self.subgroup)


@dataclass(frozen=True, eq=False)
class CosetMap:
    kind: MapKind
    triple: ReversingTriple
    vertices: CosetFamily
    edges: CosetFamily
    faces: tuple  # one CosetFamily per face class

    @property
    def group(self):
        return self.triple.group

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def num_edges(self):
        return len(self.edges)

    @property
    def num_faces(self):
        return sum(len(f) for f in self.faces)

    @property
    def chi(self):
        return self.num_vertices - self.num_edges + self.num_faces

    @cached_property
    def face_offsets(self):
        out, acc = [], 0
        for f in self.faces:
            out.append(acc)
            acc += len(f)
        return out

    def face_label(self, cls_index, g):
        """Global face index of ``g * face_class``."""
        return self.face_offsets[cls_index] + self.faces[cls_index].labels[g]

    def _corner_shifts(self):
        """(face class, right shift t) such that vertex g and face g*t*F are incident."""
        if self.kind is MapKind.BIREV:
            return [(0, self.group.identity), (0, self.triple.z)]
        return [(k, self.group.identity) for k in range(len(self.faces))]

    @cached_property
    def incidence(self):
        """Incident index pairs, keyed by ``"VE"``, ``"VF"`` and ``"EF"``.

        Pairs are the group orbits of the base pairs.  For Rev and Reg maps this
        is the same as nontrivial intersection of the cosets; for BiRev maps the
        vertex also meets the face across the corner at ``z``, which the
        intersection test alone misses.
        """
        G = self.group
        g = np.arange(G.order)
        V, E = self.vertices.labels, self.edges.labels
        ve = set(zip(V.tolist(), E.tolist()))
        vf, ef = set(), set()
        for k, t in self._corner_shifts():
            shifted = G.table[g, t]
            F = self.face_offsets[k] + self.faces[k].labels[shifted]
            vf.update(zip(V.tolist(), F.tolist()))
            ef.update(zip(E.tolist(), F.tolist()))
        return {"VE": frozenset(ve), "VF": frozenset(vf), "EF": frozenset(ef)}

    def intersecting_pairs(self, a: CosetFamily, b: CosetFamily):
        """Label pairs of cosets of ``a`` and ``b`` sharing an element (literal intersection)."""
        return frozenset(zip(a.labels.tolist(), b.labels.tolist()))

    @cached_property
    def invariants(self):
        return map_invariants(self)

    @cached_property
    def flags(self):
        return flag_system(self)


def build_map(triple: ReversingTriple, kind) -> CosetMap:
    kind = MapKind.parse(kind)
    G = triple.group
    x, y, z = triple.elements
    gen = lambda *els: subgroup_generated(G, els)
    if kind is MapKind.REG:
        if G.mul(y, z) != G.mul(z, y) or y == z:
            raise ValidationError("a regular map needs distinct commuting y and z")
        V, E, F = gen(x, y), gen(y, z), [("F", gen(x, z))]
    elif kind is MapKind.REV:
        V, E, F = gen(x, y), gen(z), [("F0", gen(x, z)), ("F1", gen(y, z))]
    else:
        V, E, F = gen(x, y), gen(z), [("F", gen(x, G.conj(y, z)))]
    return CosetMap(kind, triple, CosetFamily.of("V", V), CosetFamily.of("E", E),
                    tuple(CosetFamily.of(t, H) for t, H in F))


def euler_characteristic(order, vertex_stab, edge_stab, face_stabs):
    """Euler characteristic from stabilizer orders alone."""
    return order // vertex_stab - order // edge_stab + sum(order // f for f in face_stabs)


@dataclass(frozen=True)
class MapInvariants:
    kind: str
    num_vertices: int
    num_edges: int
    num_faces: int
    chi: int
    vertex_stabilizer: tuple  # (order, tag)
    edge_stabilizer: tuple
    face_stabilizers: tuple
    orientable: bool
    coprime: bool
    graph: object = None

    @property
    def counts(self):
        return (self.num_vertices, self.num_edges, self.num_faces)

    def stabilizer_orders(self):
        return sorted([self.vertex_stabilizer[0]] + [f[0] for f in self.face_stabilizers])

    def stabilizer_tags(self):
        return sorted([self.vertex_stabilizer[1]] + [f[1] for f in self.face_stabilizers])

    def summary(self):
        """Fields that must agree across an equivalence class."""
        return (self.counts, self.chi, self.orientable, self.coprime,
                None if self.graph is None else self.graph.label,
                tuple(self.stabilizer_tags()))


def _stab(H):
    return (H.order, isomorphism_tag(H.group, H.elements))


def map_invariants(cmap: CosetMap, *, with_graph=True) -> MapInvariants:
    from .graphs import underlying_graph

    chi = cmap.chi
    return MapInvariants(
        kind=str(cmap.kind),
        num_vertices=cmap.num_vertices,
        num_edges=cmap.num_edges,
        num_faces=cmap.num_faces,
        chi=chi,
        vertex_stabilizer=_stab(cmap.vertices.subgroup),
        edge_stabilizer=_stab(cmap.edges.subgroup),
        face_stabilizers=tuple(_stab(f.subgroup) for f in cmap.faces),
        orientable=is_orientable(cmap),
        coprime=math.gcd(abs(chi), cmap.num_edges) == 1,
        graph=underlying_graph(cmap) if with_graph else None,
    )


@dataclass(frozen=True, eq=False)
class FlagSystem:
    """Flags of a coset map with their three partner involutions.

    ``vertex``, ``edge`` and ``face`` give each flag's coordinates;
    ``partners[0]``, ``[1]`` and ``[2]`` replace the vertex, edge and face.
    """

    cmap: CosetMap
    vertex: np.ndarray = field(repr=False)
    edge: np.ndarray = field(repr=False)
    face: np.ndarray = field(repr=False)
    partners: tuple = field(repr=False)

    def __len__(self):
        return len(self.vertex)

    def coordinates(self, flag):
        return (int(self.vertex[flag]), int(self.edge[flag]), int(self.face[flag]))

    def orbit_count(self, which):
        """Orbits of the subgroup generated by the partner maps in ``which``."""
        n = len(self)
        parent = np.arange(n)

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for k in which:
            for a, b in enumerate(self.partners[k].tolist()):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        return len({find(a) for a in range(n)})


def flag_system(cmap: CosetMap, *, check=True) -> FlagSystem:
    """Build flags from the group action.

    Rev and BiRev maps have flags ``G x {0, 1}`` (flag ``2g + eps``); Reg maps
    have flags ``G``.  Well-formedness is verified unless ``check`` is False.
    """
    G = cmap.group
    tab = G.table
    x, y, z = cmap.triple.elements
    g = np.arange(G.order)
    V, E = cmap.vertices.labels, cmap.edges.labels
    if cmap.kind is MapKind.REG:
        vertex, edge = V.copy(), E.copy()
        face = cmap.face_offsets[0] + cmap.faces[0].labels
        partners = (tab[g, z], tab[g, x], tab[g, y])
    else:
        n = 2 * G.order
        vertex = np.repeat(V, 2)
        edge = np.repeat(E, 2)
        face = np.empty(n, dtype=np.int64)
        r0 = np.empty(n, dtype=np.int64)
        r1 = np.empty(n, dtype=np.int64)
        r2 = np.empty(n, dtype=np.int64)
        gz, gx, gy = tab[g, z], tab[g, x], tab[g, y]
        if cmap.kind is MapKind.REV:
            face[0::2] = cmap.face_label(0, g)
            face[1::2] = cmap.face_label(1, g)
            r0[0::2], r0[1::2] = 2 * gz, 2 * gz + 1
        else:
            face[0::2] = cmap.face_label(0, g)
            face[1::2] = cmap.face_label(0, gz)
            r0[0::2], r0[1::2] = 2 * gz + 1, 2 * gz
        r1[0::2], r1[1::2] = 2 * gx, 2 * gy + 1
        r2[0::2], r2[1::2] = 2 * g + 1, 2 * g
        partners = (r0, r1, r2)
    fs = FlagSystem(cmap, vertex, edge, np.asarray(face), tuple(np.asarray(p, dtype=np.int64) for p in partners))
    if check:
        check_flag_system(fs)
    return fs


def check_flag_system(fs: FlagSystem):
    """Raise :class:`StructuralError` naming the first flag that breaks a map axiom."""
    cmap = fs.cmap
    n = len(fs)
    idx = np.arange(n)
    coords = (fs.vertex, fs.edge, fs.face)
    names = ("vertex", "edge", "face")
    for k, r in enumerate(fs.partners):
        bad = np.flatnonzero((r[r] != idx) | (r == idx))
        if bad.size:
            f = int(bad[0])
            raise StructuralError(f"flag {f} {fs.coordinates(f)}: {names[k]} partner is not a fixed-point-free involution")
        for j in range(3):
            if j != k:
                bad = np.flatnonzero(coords[j][r] != coords[j])
                if bad.size:
                    f = int(bad[0])
                    raise StructuralError(f"flag {f} {fs.coordinates(f)}: {names[k]} partner moves the {names[j]}")
    r0, r2 = fs.partners[0], fs.partners[2]
    bad = np.flatnonzero(r0[r2] != r2[r0])
    if bad.size:
        f = int(bad[0])
        raise StructuralError(f"flag {f} {fs.coordinates(f)}: vertex and face partners do not commute")
    inc = cmap.incidence
    for f in range(n):
        v, e, fc = fs.coordinates(f)
        if (v, e) not in inc["VE"] or (v, fc) not in inc["VF"] or (e, fc) not in inc["EF"]:
            raise StructuralError(f"flag {f} {(v, e, fc)} is not pairwise incident")
    if n != 4 * cmap.num_edges:
        raise StructuralError(f"{n} flags but {cmap.num_edges} edges")
    # each object is an orbit of the two partners that fix it
    for which, count, name in (((1, 2), cmap.num_vertices, "vertices"), ((0, 2), cmap.num_edges, "edges"),
                               ((0, 1), cmap.num_faces, "faces")):
        got = fs.orbit_count(which)
        if got != count:
            raise StructuralError(f"flag orbits give {got} {name}, cosets give {count}")


def _bipartite(n, partners):
    color = np.full(n, -1, dtype=np.int8)
    color[0] = 0
    frontier = np.array([0])
    while frontier.size:
        nxt = []
        for r in partners:
            nb = r[frontier]
            want = 1 - color[frontier]
            seen = color[nb] >= 0
            if (color[nb][seen] != want[seen]).any():
                return False
            fresh = nb[~seen]
            color[fresh] = want[~seen]
            nxt.append(fresh)
        frontier = np.unique(np.concatenate(nxt))
    return bool((color >= 0).all())


def is_orientable(cmap: CosetMap) -> bool:
    """Bipartiteness of the flag graph."""
    fs = cmap.flags
    return _bipartite(len(fs), fs.partners)


def orientation_subgroup_index(triple: ReversingTriple):
    """Index of ``<xy, xz>``; the regular-map orientability cross-check."""
    G = triple.group
    x, y, z = triple.elements
    return G.order // subgroup_generated(G, (G.mul(x, y), G.mul(x, z))).order


def map_record(cmap: CosetMap, inv: MapInvariants | None = None) -> dict:
    """JSON-ready record with a fixed field order."""
    inv = inv or cmap.invariants
    G = cmap.group
    triple = list(cmap.triple.words()) if G.labels else [list(G.perm(e).images) for e in cmap.triple.elements]
    return {
        "kind": inv.kind,
        "group": str(G.spec) if G.spec is not None else f"order-{G.order}",
        "order": G.order,
        "triple": triple,
        "counts": {"V": inv.num_vertices, "E": inv.num_edges, "F": inv.num_faces},
        "chi": inv.chi,
        "orientable": inv.orientable,
        "coprime": inv.coprime,
        "stabilizers": {
            "vertex": list(inv.vertex_stabilizer),
            "edge": list(inv.edge_stabilizer),
            "faces": [list(f) for f in inv.face_stabilizers],
        },
        "graph": inv.graph.as_dict() if inv.graph is not None else None,
    }


def record_json(rec):
    return json.dumps(rec, separators=(",", ":"))
