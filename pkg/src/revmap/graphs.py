"""Underlying multigraph of a coset map and recognition of its shape."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import networkx as nx
import numpy as np

from .exceptions import StructuralError

__all__ = ["GraphDescriptor", "underlying_graph", "tensor_of_cycles", "recognize"]


@dataclass(frozen=True)
class GraphDescriptor:
    """``family`` is one of Cycle, Complete4, Complete2, SingleVertex, TensorOfCycles, Other.

    ``multiplicity`` is the number of parallel edges between adjacent vertices.
    ``coset_multiplicity`` is the order of the intersection of the vertex
    stabilizer with its conjugate by z; the two agree for Rev and BiRev maps
    and differ by a factor 2 for Reg maps, whose edge stabilizer has order 4.
    """

    family: str
    params: tuple
    num_vertices: int
    valency: int  # distinct neighbours
    multiplicity: int
    coset_multiplicity: int
    edges: tuple = ()  # simple base graph, only kept for Other

    @property
    def label(self):
        mult = f"^({self.multiplicity})" if self.multiplicity != 1 else ""
        if self.family == "Cycle":
            return f"C{self.params[0]}{mult}"
        if self.family == "TensorOfCycles":
            a, b = self.params
            return f"(C{a}xC{b}){mult}" if mult else f"C{a}xC{b}"
        if self.family == "Complete4":
            return f"K4{mult}"
        if self.family == "Complete2":
            return f"K2{mult}"
        if self.family == "SingleVertex":
            return f"K1{mult}"
        return f"Other[{self.num_vertices},{self.valency}]{mult}"

    def as_dict(self):
        d = {
            "family": self.family,
            "params": list(self.params),
            "label": self.label,
            "vertices": self.num_vertices,
            "valency": self.valency,
            "multiplicity": self.multiplicity,
            "cosetMultiplicity": self.coset_multiplicity,
        }
        if self.family == "Other":
            d["edges"] = [list(e) for e in self.edges]
        return d


def tensor_of_cycles(a, b):
    """C_a x C_b: (i, j) ~ (k, l) iff i, k adjacent in C_a and j, l adjacent in C_b."""
    G = nx.Graph()
    for i in range(a):
        for j in range(b):
            for di in (1, -1):
                for dj in (1, -1):
                    G.add_edge((i, j), ((i + di) % a, (j + dj) % b))
    return G


def recognize(num_vertices, simple_edges, multiplicity, coset_mult=None, num_edges=None):
    """Name the multigraph given by a simple edge list and a uniform multiplicity."""
    coset_mult = multiplicity if coset_mult is None else coset_mult
    if num_vertices == 1:
        total = num_edges if num_edges is not None else multiplicity
        return GraphDescriptor("SingleVertex", (), 1, 0, total, coset_mult)
    graph = nx.Graph()
    graph.add_nodes_from(range(num_vertices))
    graph.add_edges_from(simple_edges)
    degs = {d for _, d in graph.degree()}
    valency = degs.pop() if len(degs) == 1 else -1
    connected = nx.is_connected(graph)
    if num_vertices == 2 and valency == 1:
        return GraphDescriptor("Complete2", (), 2, 1, multiplicity, coset_mult)
    if connected and valency == 2 and num_vertices >= 3:
        return GraphDescriptor("Cycle", (num_vertices,), num_vertices, 2, multiplicity, coset_mult)
    if num_vertices == 4 and valency == 3:
        return GraphDescriptor("Complete4", (), 4, 3, multiplicity, coset_mult)
    if connected and valency == 4:
        for a in range(3, num_vertices + 1):
            if a * a > num_vertices:
                break
            if num_vertices % a or num_vertices // a < 3:
                continue
            if nx.is_isomorphic(graph, tensor_of_cycles(a, num_vertices // a)):
                return GraphDescriptor("TensorOfCycles", (a, num_vertices // a), num_vertices, 4,
                                       multiplicity, coset_mult)
    edges = tuple(sorted(tuple(sorted(e)) for e in simple_edges))
    return GraphDescriptor("Other", (), num_vertices, valency, multiplicity, coset_mult, edges)


def underlying_graph(cmap) -> GraphDescriptor:
    """Edge ``gE`` joins the vertices ``g<x,y>`` and ``gz<x,y>``."""
    G = cmap.group
    z = cmap.triple.z
    reps = np.array(cmap.edges.representatives)
    ends_a = cmap.vertices.labels[reps]
    ends_b = cmap.vertices.labels[G.table[reps, z]]
    pairs = Counter(tuple(sorted(p)) for p in zip(ends_a.tolist(), ends_b.tolist()))
    mults = set(pairs.values())
    if len(mults) != 1:
        raise StructuralError(f"non-uniform edge multiplicities {sorted(mults)}")
    mult = mults.pop()
    H = cmap.vertices.subgroup
    coset_mult = len(H.elements & H.conjugate(z).elements)
    return recognize(cmap.num_vertices, [p for p in pairs if p[0] != p[1]], mult, coset_mult,
                     num_edges=cmap.num_edges)
