"""Finite permutation groups, fully materialized.

Every group is stored as a sorted tuple of :class:`Permutation` objects plus a
lazily built Cayley table, so group elements are handled as plain integer
indices.  Index 0 is always the identity, and the index order coincides with
the lexicographic order on image tuples, which gives canonical coset
representatives for free.

Products follow the left-to-right convention: ``(a * b)(i) = b(a(i))``, and
conjugation is ``a ** g = g^-1 a g``.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from .exceptions import EnumerationOverflow, ValidationError, automorphism_cap, closure_cap

__all__ = [
    "Permutation", "FiniteGroup", "Subgroup", "Coset", "GroupHom", "StructureReport",
    "closure_from_generators", "involutions", "subgroup_generated", "left_cosets",
    "quotient_group", "sylow_subgroup", "structure_report", "automorphism_group",
    "is_isomorphic", "prime_factors", "p_part",
]


def prime_factors(n):
    out, p = [], 2
    n = abs(n)
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n, p):
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


class Permutation:
    """A bijection of ``{0, ..., d-1}`` given by its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValidationError(f"not a bijection of 0..{len(images) - 1}: {images}")
        self.images = images

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles, degree):
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            for a in cyc:
                if a < 0 or a >= degree or a in seen:
                    raise ValidationError(f"bad cycle {cyc} on {degree} points")
                seen.add(a)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text, degree=None):
        """Parse disjoint-cycle notation such as ``"(0 1 2)(3 4)"``.

        Commas are accepted as separators.  ``"()"`` is the identity.
        """
        cycles = []
        for body in re.findall(r"\(([^()]*)\)", text):
            pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            if pts:
                cycles.append(pts)
        if re.sub(r"\(([^()]*)\)", "", text).strip():
            raise ValidationError(f"cannot parse cycle notation {text!r}")
        top = max((max(c) for c in cycles), default=-1) + 1
        if degree is None:
            degree = max(top, 1)
        elif top > degree:
            raise ValidationError(f"point {top - 1} outside a domain of size {degree}")
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        if self.degree != other.degree:
            raise ValidationError("degree mismatch")
        return Permutation(other.images[i] for i in self.images)

    def inverse(self):
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def order(self):
        return math.lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def cycles(self, include_fixed=False):
        seen, out = set(), []
        for i in range(self.degree):
            if i in seen:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


def _find_base(arr):
    """Points whose images separate all rows of ``arr`` (shape N x d)."""
    n, d = arr.shape
    base = []
    keys = np.zeros(n, dtype=np.int64)
    for pt in range(d):
        if len(np.unique(keys)) == n:
            break
        col = arr[:, pt].astype(np.int64)
        new = keys * d + col
        if len(np.unique(new)) > len(np.unique(keys)):
            base.append(pt)
            keys = new
    return base


class FiniteGroup:
    """A closed set of permutations with labeled generators.

    Build instances with :func:`closure_from_generators`.  ``labels`` may hold
    derived names (for instance ``w = uv``) besides the generators; ``spec``
    records the family a group was built from, when known.
    """

    def __init__(self, degree, generators: Mapping[str, Permutation], elements, *, labels=None, spec=None):
        self.degree = degree
        self.elements = tuple(sorted(elements))
        self._index = {p: i for i, p in enumerate(self.elements)}
        self.identity = 0
        self.generators = {k: self._index[p] for k, p in generators.items()}
        self.labels = dict(labels) if labels is not None else dict(self.generators)
        self.spec = spec
        self._arr = np.array([p.images for p in self.elements], dtype=np.int32).reshape(len(self.elements), degree)

    def __repr__(self):
        name = str(self.spec) if self.spec is not None else f"degree {self.degree}"
        return f"<FiniteGroup order={self.order} {name}>"

    def __len__(self):
        return len(self.elements)

    @property
    def order(self):
        return len(self.elements)

    def index(self, perm):
        try:
            return self._index[perm]
        except KeyError:
            raise ValidationError(f"{perm!r} is not an element of {self!r}") from None

    def perm(self, i):
        return self.elements[i]

    @cached_property
    def table(self):
        """Cayley table: ``table[a, b]`` is the index of ``a * b``."""
        arr, n = self._arr, self.order
        base = _find_base(arr) or [0]
        radix = self.degree ** np.arange(len(base), dtype=np.int64)
        keys = arr[:, base].astype(np.int64) @ radix
        order = np.argsort(keys)
        sorted_keys = keys[order]
        tab = np.empty((n, n), dtype=np.int32)
        for a in range(n):
            # (a*b)[base] = b[a[base]]
            prod = arr[:, arr[a, base]].astype(np.int64) @ radix
            tab[a] = order[np.searchsorted(sorted_keys, prod)]
        return tab

    @cached_property
    def inverse(self):
        inv = np.empty(self.order, dtype=np.int32)
        rows, cols = np.nonzero(self.table == self.identity)
        inv[rows] = cols
        return inv

    @cached_property
    def orders(self):
        n = self.order
        out = np.zeros(n, dtype=np.int64)
        cur = np.arange(n, dtype=np.int32)
        for k in range(1, n + 1):
            done = (cur == self.identity) & (out == 0)
            out[done] = k
            if out.all():
                break
            cur = self.table[cur, np.arange(n)]
        return out

    def mul(self, *elems):
        acc = self.identity
        for e in elems:
            acc = int(self.table[acc, e])
        return acc

    def inv(self, a):
        return int(self.inverse[a])

    def power(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        acc = self.identity
        for _ in range(k % int(self.orders[a])):
            acc = int(self.table[acc, a])
        return acc

    def conj(self, a, g):
        """``g^-1 a g``."""
        return self.mul(self.inv(g), a, g)

    def element_order(self, a):
        return int(self.orders[a])

    def word(self, text):
        """Evaluate a word over ``labels``: ``"abw"``, ``"g5"``, ``"h-1v"``, ``"w2v"``.

        A label may be followed by an integer exponent (optionally ``^``);
        ``"1"`` or ``""`` is the identity.
        """
        text = text.strip()
        if text in ("", "1", "e", "id"):
            return self.identity
        names = sorted(self.labels, key=len, reverse=True)
        pat = re.compile("(" + "|".join(re.escape(n) for n in names) + r")\^?(-?\d+)?")
        acc, pos = self.identity, 0
        while pos < len(text):
            m = pat.match(text, pos)
            if not m:
                raise ValidationError(f"cannot parse word {text!r} at {text[pos:]!r}")
            exp = int(m.group(2)) if m.group(2) is not None else 1
            acc = self.mul(acc, self.power(self.labels[m.group(1)], exp))
            pos = m.end()
        return acc

    def describe(self, a):
        """Shortest word over the labels spelling element ``a`` (BFS, for output)."""
        return self._words.get(int(a), repr(self.perm(a)))

    @cached_property
    def _words(self):
        names = sorted(self.labels.items())
        words = {self.identity: "1"}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for name, s in names:
                    y = int(self.table[x, s])
                    if y not in words:
                        words[y] = name if x == self.identity else words[x] + name
                        nxt.append(y)
            frontier = nxt
        return words


def closure_from_generators(domain_size, labeled_gens: Mapping[str, Permutation], *, cap=None,
                            labels=None, spec=None) -> FiniteGroup:
    """Close a set of labeled permutations under composition."""
    cap = closure_cap(cap)
    gens = {}
    for name, g in labeled_gens.items():
        if not isinstance(g, Permutation):
            g = Permutation(g)
        if g.degree != domain_size:
            raise ValidationError(f"generator {name} acts on {g.degree} points, expected {domain_size}")
        gens[name] = g
    ident = Permutation.identity(domain_size)
    seen = {ident}
    frontier = [ident]
    moves = [g for g in dict.fromkeys(gens.values()) if g != ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in moves:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise EnumerationOverflow("group closure", cap)
        frontier = nxt
    G = FiniteGroup(domain_size, gens, seen, spec=spec)
    if labels is not None:
        G.labels = {k: G.index(v) if isinstance(v, Permutation) else int(v) for k, v in labels.items()}
    return G


@dataclass(frozen=True, eq=False)
class Subgroup:
    group: FiniteGroup
    elements: frozenset

    def __post_init__(self):
        object.__setattr__(self, "_sorted", tuple(sorted(self.elements)))

    @property
    def order(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.elements

    def __iter__(self):
        return iter(self._sorted)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.group is self.group and other.elements == self.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"<Subgroup order={self.order} of {self.group!r}>"

    @property
    def array(self):
        return np.fromiter(self._sorted, dtype=np.int32, count=len(self._sorted))

    def conjugate(self, g):
        G = self.group
        arr = self.array
        return Subgroup(G, frozenset(G.table[G.table[G.inverse[g], arr], g].tolist()))

    def is_normal(self):
        return all(self.conjugate(g).elements == self.elements for g in self.group.generators.values())


@dataclass(frozen=True)
class Coset:
    """The left coset ``representative * subgroup``."""

    representative: int
    subgroup: Subgroup
    elements: frozenset

    def __len__(self):
        return len(self.elements)


def _close_indices(G: FiniteGroup, gens) -> np.ndarray:
    gens = np.array(sorted({int(g) for g in gens} - {G.identity}), dtype=np.int32)
    mask = np.zeros(G.order, dtype=bool)
    mask[G.identity] = True
    if gens.size == 0:
        return mask
    frontier = np.array([G.identity], dtype=np.int32)
    tab = G.table
    while frontier.size:
        prod = np.unique(tab[frontier][:, gens])
        new = prod[~mask[prod]]
        mask[new] = True
        frontier = new
    return mask


def subgroup_generated(G: FiniteGroup, elems) -> Subgroup:
    elems = [int(e) for e in elems]
    for e in elems:
        if not 0 <= e < G.order:
            raise ValidationError(f"element index {e} not in group of order {G.order}")
    return Subgroup(G, frozenset(np.flatnonzero(_close_indices(G, elems)).tolist()))


def trivial_subgroup(G):
    return Subgroup(G, frozenset([G.identity]))


def whole_group(G):
    return Subgroup(G, frozenset(range(G.order)))


def involutions(G: FiniteGroup) -> frozenset:
    return frozenset(np.flatnonzero(G.orders == 2).tolist())


def coset_labels(G: FiniteGroup, H: Subgroup):
    """Label every element by the index of its left coset; cosets sorted by minimal element."""
    mins = G.table[:, H.array].min(axis=1)
    reps, labels = np.unique(mins, return_inverse=True)
    return labels.astype(np.int64), [int(r) for r in reps]


def _check_subgroup(G, H):
    if H.group is not G:
        raise ValidationError("subgroup belongs to a different group")
    if G.identity not in H.elements:
        raise ValidationError("subset does not contain the identity")
    arr = H.array
    if not np.isin(G.table[np.ix_(arr, arr)], arr).all():
        raise ValidationError("subset is not closed under multiplication")


def left_cosets(G: FiniteGroup, H: Subgroup) -> list[Coset]:
    _check_subgroup(G, H)
    labels, reps = coset_labels(G, H)
    return [Coset(r, H, frozenset(np.flatnonzero(labels == k).tolist())) for k, r in enumerate(reps)]


@dataclass(frozen=True, eq=False)
class GroupHom:
    """Homomorphism given on labeled generators plus its full element map."""

    source: FiniteGroup
    target: FiniteGroup
    images: dict
    element_map: np.ndarray = field(repr=False)

    def __call__(self, g):
        return int(self.element_map[g])

    def is_bijective(self):
        return self.source.order == self.target.order and len(np.unique(self.element_map)) == self.source.order

    def is_multiplicative(self, pairs=None):
        """Check ``f(ab) = f(a) f(b)``; exhaustively when ``pairs`` is None."""
        S, T, f = self.source, self.target, self.element_map
        if pairs is None:
            lhs = f[S.table]
            rhs = T.table[np.ix_(f, f)]
            return bool((lhs == rhs).all())
        return all(f[S.table[a, b]] == T.table[f[a], f[b]] for a, b in pairs)

    def compose(self, other):
        """``other`` after ``self``."""
        em = other.element_map[self.element_map]
        return GroupHom(self.source, other.target,
                        {k: int(em[v]) for k, v in self.source.generators.items()}, em)

    def inverse(self):
        inv = np.empty_like(self.element_map)
        inv[self.element_map] = np.arange(len(self.element_map), dtype=self.element_map.dtype)
        return GroupHom(self.target, self.source, {k: int(inv[v]) for k, v in self.target.generators.items()}, inv)


def quotient_group(G: FiniteGroup, N: Subgroup):
    """Quotient ``G/N`` acting on the cosets of ``N``, with the projection."""
    _check_subgroup(G, N)
    if not N.is_normal():
        raise ValidationError("subgroup is not normal")
    labels, reps = coset_labels(G, N)
    reps = np.array(reps, dtype=np.int32)
    k = len(reps)
    if k == 1:
        gens = {name: Permutation.identity(1) for name in G.generators}
    else:
        gens = {name: Permutation(labels[G.table[reps, s]].tolist()) for name, s in G.generators.items()}
    Q = closure_from_generators(k, gens)
    Q.labels = {name: Q.index(Permutation(labels[G.table[reps, s]].tolist()) if k > 1 else Permutation.identity(1))
                for name, s in G.labels.items()}
    # the image of g is the permutation c -> c.g on coset labels
    emap = np.empty(G.order, dtype=np.int32)
    for g in range(G.order):
        img = labels[G.table[reps, g]].tolist() if k > 1 else [0]
        emap[g] = Q.index(Permutation(img))
    proj = GroupHom(G, Q, {name: int(emap[s]) for name, s in G.generators.items()}, emap)
    return Q, proj


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """A Sylow ``p``-subgroup, grown greedily inside successive normalizers."""
    target = p_part(G.order, p)
    if target == 1:
        return trivial_subgroup(G)
    orders = G.orders
    is_pel = np.array([o > 1 and p_part(int(o), p) == o for o in orders])
    pel = np.flatnonzero(is_pel)
    start = int(pel[np.argmax(orders[pel])])
    gens = [start]
    P = subgroup_generated(G, gens)
    while P.order < target:
        parr = np.array(gens, dtype=np.int32)
        grown = False
        for x in pel:
            if x in P.elements:
                continue
            conj = G.table[G.table[G.inverse[x], parr], x]
            if all(int(c) in P.elements for c in conj):
                gens.append(int(x))
                P = subgroup_generated(G, gens)
                grown = True
                break
        if not grown:  # pragma: no cover; normalizers grow in p-groups
            raise RuntimeError("Sylow growth stalled")
    return P


def _is_cyclic(G, elems):
    n = len(elems)
    return any(G.orders[e] == n for e in elems)


def _has_index2_cyclic(G, elems):
    n = len(elems)
    if n % 2:
        return False
    return any(G.orders[e] == n // 2 for e in elems)


def _is_dihedral(G, elems):
    """Order 2n with a cyclic subgroup of order n inverted by an outside involution.

    Order 2 counts (``D_2``) and the Klein four group counts (``D_4``).
    """
    size = len(elems)
    if size % 2 or size == 0:
        return False
    n = size // 2
    if n == 1:
        return True
    elems = list(elems)
    for c in elems:
        if G.orders[c] != n:
            continue
        C = set(np.flatnonzero(_close_indices(G, [c])).tolist())
        cinv = G.inv(c)
        for t in elems:
            if t not in C and G.orders[t] == 2 and G.conj(c, t) == cinv:
                return True
    return False


def _is_abelian(G, elems):
    arr = np.array(sorted(elems), dtype=np.int32)
    sub = G.table[np.ix_(arr, arr)]
    return bool((sub == sub.T).all())


def _derived_subgroup(G, elems):
    arr = np.array(sorted(elems), dtype=np.int32)
    inv = G.inverse[arr]
    ab = G.table[np.ix_(arr, arr)]
    ainv_binv = G.table[np.ix_(inv, inv)]
    comm = np.unique(G.table[ainv_binv, ab])
    return set(np.flatnonzero(_close_indices(G, comm.tolist())).tolist())


def isomorphism_tag(G, elems):
    """Short name for a small subgroup: ``Z<n>``, ``D<2n>`` or ``G<order>``."""
    n = len(elems)
    if _is_cyclic(G, elems):
        return f"Z{n}"
    if _is_dihedral(G, elems):
        return f"D{n}"
    return f"G{n}"


@dataclass(frozen=True)
class StructureReport:
    order: int
    primes: tuple
    is_cyclic: bool
    is_dihedral: bool
    is_abelian: bool
    is_solvable: bool
    is_almost_sylow_cyclic: bool
    sylow_shapes: dict
    sylow_orders: dict
    o2_order: int

    def as_dict(self):
        return {
            "order": self.order,
            "primes": list(self.primes),
            "cyclic": self.is_cyclic,
            "dihedral": self.is_dihedral,
            "abelian": self.is_abelian,
            "solvable": self.is_solvable,
            "almostSylowCyclic": self.is_almost_sylow_cyclic,
            "sylow": {str(p): {"shape": self.sylow_shapes[p], "order": self.sylow_orders[p]} for p in self.primes},
            "O2": self.o2_order,
        }


def sylow_shape(G, elems):
    if _is_cyclic(G, elems):
        return "cyclic"
    if _is_dihedral(G, elems):
        return "dihedral"
    if _has_index2_cyclic(G, elems):
        return "index-2-cyclic"
    return "other"


def structure_report(G: FiniteGroup) -> StructureReport:
    everything = range(G.order)
    primes = tuple(prime_factors(G.order))
    shapes, sizes = {}, {}
    asc = True
    sylow2 = None
    for p in primes:
        P = sylow_subgroup(G, p)
        shapes[p] = sylow_shape(G, P.elements)
        sizes[p] = P.order
        if p == 2:
            sylow2 = P
            asc &= shapes[p] != "other"
        else:
            asc &= shapes[p] == "cyclic"
    series = set(everything)
    while True:
        nxt = _derived_subgroup(G, series)
        if len(nxt) == len(series):
            break
        series = nxt
    o2 = 1
    if sylow2 is not None:
        core = set(sylow2.elements)
        for g in everything:
            core &= sylow2.conjugate(g).elements
            if len(core) == 1:
                break
        o2 = len(core)
    return StructureReport(
        order=G.order,
        primes=primes,
        is_cyclic=_is_cyclic(G, everything),
        is_dihedral=_is_dihedral(G, everything),
        is_abelian=_is_abelian(G, everything),
        is_solvable=len(series) == 1,
        is_almost_sylow_cyclic=asc,
        sylow_shapes=shapes,
        sylow_orders=sizes,
        o2_order=o2,
    )


# ---------------------------------------------------------------------------
# homomorphism search


def small_generating_set(G: FiniteGroup):
    """Greedy generating set favouring elements whose order is rare."""
    counts = Counter(G.orders.tolist())
    ranked = sorted(range(1, G.order), key=lambda e: (counts[int(G.orders[e])], -int(G.orders[e]), e))
    gens = []
    mask = np.zeros(G.order, dtype=bool)
    mask[G.identity] = True
    for e in ranked:
        if mask.all():
            break
        if not mask[e]:
            gens.append(e)
            mask = _close_indices(G, gens)
    return gens


def _schreier_layers(G, gens):
    """BFS layers from the identity: arrays (elements, parents, generator slot)."""
    seen = np.zeros(G.order, dtype=bool)
    seen[G.identity] = True
    frontier = np.array([G.identity], dtype=np.int32)
    layers = []
    gens = np.asarray(gens, dtype=np.int32)
    while frontier.size:
        prod = G.table[frontier][:, gens]  # shape (F, k)
        par = np.repeat(frontier, len(gens))
        slot = np.tile(np.arange(len(gens)), len(frontier))
        flat = prod.ravel()
        uniq, first = np.unique(flat, return_index=True)
        keep = ~seen[uniq]
        new, first = uniq[keep], first[keep]
        seen[new] = True
        if new.size:
            layers.append((new, par[first], slot[first]))
        frontier = new
    return layers


class _HomSearch:
    def __init__(self, G, H):
        self.G, self.H = G, H
        self.gens = small_generating_set(G) if G.order > 1 else []
        self.layers = _schreier_layers(G, self.gens) if self.gens else []
        self.gen_arr = np.array(self.gens, dtype=np.int32)
        by_order = {}
        for e in range(H.order):
            by_order.setdefault(int(H.orders[e]), []).append(e)
        self.candidates = [by_order.get(int(G.orders[s]), []) for s in self.gens]
        # word-order constraints between generator pairs
        self.pair_orders = {}
        for i, si in enumerate(self.gens):
            for j in range(i):
                sj = self.gens[j]
                self.pair_orders[i, j] = (int(G.orders[G.mul(sj, si)]), int(G.orders[G.mul(G.inv(sj), si)]))

    def extend(self, imgs, bijective):
        G, H = self.G, self.H
        emap = np.full(G.order, -1, dtype=np.int64)
        emap[G.identity] = H.identity
        img = np.asarray(imgs, dtype=np.int64)
        for new, par, slot in self.layers:
            emap[new] = H.table[emap[par], img[slot]]
        rhs = H.table[np.ix_(emap, img)]
        lhs = emap[G.table[:, self.gen_arr]]
        if not (lhs == rhs).all():
            return None
        if bijective and len(np.unique(emap)) != G.order:
            return None
        return emap.astype(np.int32)

    def run(self, bijective=True, first_only=False):
        H = self.H
        if not self.gens:
            yield np.zeros(1, dtype=np.int32)
            return
        k = len(self.gens)
        chosen = []

        def ok(i, t):
            if bijective and t in chosen:
                return False
            for j in range(i):
                tj = chosen[j]
                o1, o2 = self.pair_orders[i, j]
                if H.orders[H.mul(tj, t)] != o1 or H.orders[H.mul(H.inv(tj), t)] != o2:
                    return False
            return True

        def rec(i):
            if i == k:
                emap = self.extend(chosen, bijective)
                if emap is not None:
                    yield emap
                return
            for t in self.candidates[i]:
                if ok(i, t):
                    chosen.append(t)
                    yield from rec(i + 1)
                    chosen.pop()

        for emap in rec(0):
            yield emap
            if first_only:
                return


def _hom_from_map(G, H, emap):
    return GroupHom(G, H, {k: int(emap[v]) for k, v in G.generators.items()}, emap)


def automorphism_group(G: FiniteGroup, cap=None) -> list[GroupHom]:
    """All automorphisms of ``G``, identity first, sorted by element map."""
    cap = automorphism_cap(cap)
    if G.order > cap:
        raise EnumerationOverflow(f"automorphism search on a group of order {G.order}", cap)
    maps = sorted(tuple(m.tolist()) for m in _HomSearch(G, G).run(bijective=True))
    return [_hom_from_map(G, G, np.array(m, dtype=np.int32)) for m in maps]


def order_statistics(G):
    return sorted(Counter(G.orders.tolist()).items())


def is_isomorphic(G: FiniteGroup, H: FiniteGroup, cap=None):
    """A witness isomorphism ``G -> H``, or None."""
    cap = automorphism_cap(cap)
    if max(G.order, H.order) > cap:
        raise EnumerationOverflow(f"isomorphism search on groups of order {max(G.order, H.order)}", cap)
    if G.order != H.order or order_statistics(G) != order_statistics(H):
        return None
    for emap in _HomSearch(G, H).run(bijective=True, first_only=True):
        return _hom_from_map(G, H, emap)
    return None
