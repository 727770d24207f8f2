"""Constructors for the named group families, with labeled generators.

Each constructor picks a small faithful action, closes it, and then checks
the family's defining relations on the labeled elements.  Triples on the
command line are written as words in these labels (``abw``, ``g5``, ``h-1v``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .exceptions import ValidationError
from .groups import FiniteGroup, Permutation, closure_from_generators

__all__ = [
    "FamilySpec", "LabeledGroup", "dihedral", "dihedral_product", "rank3_cyclic_ext",
    "s4_cover", "metacyclic", "parse_group_spec", "from_permutation_file", "build_family",
]

TAGS = ("D", "DxD", "R3", "S4C", "MC", "PERM")


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple = ()
    source: str | None = None  # file path for PERM

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValidationError(f"unknown family tag {self.tag!r}")
        validate_params(self.tag, self.params)

    def __str__(self):
        if self.tag == "PERM":
            return f"PERM:{self.source}"
        return f"{self.tag}:" + ",".join(map(str, self.params))


def _odd_gt1(*xs):
    return all(x > 1 and x % 2 == 1 for x in xs)


def validate_params(tag, params):
    p = tuple(params)
    if tag == "D":
        ok = len(p) == 1 and p[0] >= 1
    elif tag == "DxD":
        ok = len(p) == 2 and _odd_gt1(*p) and math.gcd(*p) == 1
    elif tag == "R3":
        ok = len(p) == 3 and _odd_gt1(*p) and all(math.gcd(p[i], p[j]) == 1 for i in range(3) for j in range(i))
    elif tag == "S4C":
        ok = len(p) == 1 and p[0] > 0 and p[0] % 2 == 1 and p[0] % 3 == 0
    elif tag == "MC":
        ok = (len(p) == 3 and p[0] >= 1 and p[1] >= 1
              and math.gcd(p[2], p[0]) == 1 and pow(p[2], p[1], p[0]) == 1 % p[0])
    else:
        ok = True
    if not ok:
        raise ValidationError(f"invalid parameters {p} for family {tag}")


@dataclass
class LabeledGroup:
    """A family group together with its named elements."""

    group: FiniteGroup
    labels: dict
    spec: FamilySpec

    def __getitem__(self, name):
        return self.labels[name]

    def word(self, text):
        return self.group.word(text)

    @property
    def order(self):
        return self.group.order

    def __repr__(self):
        return f"<LabeledGroup {self.spec} order={self.group.order}>"


def _rotation(size, offset, degree, step=1):
    img = list(range(degree))
    for i in range(size):
        img[offset + i] = offset + (i + step) % size
    return img


def _reflection(size, offset, degree):
    img = list(range(degree))
    for i in range(size):
        img[offset + i] = offset + (-i) % size
    return img


def _compose_blocks(*images):
    """Combine per-block image lists acting on disjoint supports."""
    degree = len(images[0])
    out = list(range(degree))
    for img in images:
        for i, j in enumerate(img):
            if i != j:
                out[i] = j
    return Permutation(out)


def _finish(G: FiniteGroup, spec, names: dict, expected_order, relations):
    labels = {k: G.index(v) for k, v in names.items()}
    G.labels = labels
    G.spec = spec
    if G.order != expected_order:
        raise ValidationError(f"{spec}: closure has order {G.order}, expected {expected_order}")
    for text, (lhs, rhs) in relations.items():
        if G.word(lhs) != G.word(rhs):
            raise ValidationError(f"{spec}: relation {text} fails")
    return LabeledGroup(G, labels, spec)


def dihedral(n: int) -> LabeledGroup:
    """Dihedral group of order 2n, labels g (order n) and h (reflection)."""
    spec = FamilySpec("D", (n,))
    if n == 1:
        g, h = Permutation([0, 1]), Permutation([1, 0])
    elif n == 2:
        g, h = Permutation([1, 0, 3, 2]), Permutation([2, 3, 0, 1])
    else:
        g, h = Permutation(_rotation(n, 0, n)), Permutation(_reflection(n, 0, n))
    G = closure_from_generators(g.degree, {"g": g, "h": h})
    return _finish(G, spec, {"g": g, "h": h}, 2 * n, {
        "g^n=1": (f"g{n}", "1"), "h^2=1": ("h2", "1"), "g^h=g^-1": ("hgh", "g-1"),
    })


def dihedral_product(m: int, n: int) -> LabeledGroup:
    """D_2m x D_2n on m+n points: a,u act on the first block, b,v on the second, w = uv."""
    spec = FamilySpec("DxD", (m, n))
    d = m + n
    a = Permutation(_rotation(m, 0, d))
    u = Permutation(_reflection(m, 0, d))
    b = Permutation(_rotation(n, m, d))
    v = Permutation(_reflection(n, m, d))
    G = closure_from_generators(d, {"a": a, "u": u, "b": b, "v": v})
    return _finish(G, spec, {"a": a, "u": u, "b": b, "v": v, "w": u * v}, 4 * m * n, {
        "a^u=a^-1": ("uau", "a-1"), "b^v=b^-1": ("vbv", "b-1"),
        "[a,v]=1": ("av", "va"), "[b,u]=1": ("bu", "ub"), "[u,v]=1": ("uv", "vu"),
        "[a,b]=1": ("ab", "ba"), "w=uv": ("w", "uv"),
    })


def rank3_cyclic_ext(m: int, n: int, l: int) -> LabeledGroup:
    """(Z_m x Z_n x Z_l):D_4 on m+n+l points.

    u inverts a and c, v inverts b and c, so w = uv inverts a and b and
    centralizes c.
    """
    spec = FamilySpec("R3", (m, n, l))
    d = m + n + l
    a = Permutation(_rotation(m, 0, d))
    b = Permutation(_rotation(n, m, d))
    c = Permutation(_rotation(l, m + n, d))
    u = _compose_blocks(_reflection(m, 0, d), _reflection(l, m + n, d))
    v = _compose_blocks(_reflection(n, m, d), _reflection(l, m + n, d))
    G = closure_from_generators(d, {"a": a, "b": b, "c": c, "u": u, "v": v})
    return _finish(G, spec, {"a": a, "b": b, "c": c, "u": u, "v": v, "w": u * v}, 4 * m * n * l, {
        "a^u=a^-1": ("uau", "a-1"), "b^u=b": ("ubu", "b"), "c^u=c^-1": ("ucu", "c-1"),
        "a^v=a": ("vav", "a"), "b^v=b^-1": ("vbv", "b-1"), "c^v=c^-1": ("vcv", "c-1"),
        "c^w=c": ("w-1cw", "c"), "[u,v]=1": ("uv", "vu"),
        "abelian normal part": ("abc", "cba"),
    })


# S4 on {0,1,2,3}: w a 4-cycle, v a transposition with <w>:<v> = D_8, u = wv,
# h of order 3 permuting u -> w^2 u -> w^2 -> u.
_S4_W = (3, 2, 0, 1)
_S4_V = (0, 1, 3, 2)
_S4_H = (0, 2, 3, 1)


def s4_cover(m: int) -> LabeledGroup:
    """The order-8m extension of a Klein four group by D_2m, with quotient S4 by <h^3>.

    Realized as the fibre product of S4 and D_2m over S3 acting on 4+m points:
    h acts as a 3-cycle on the first block and a rotation on the second, v and
    w act as the same reflection on the second block, and u = wv is trivial there.
    """
    spec = FamilySpec("S4C", (m,))
    d = 4 + m
    ident = list(range(d))
    w = _compose_blocks(list(_S4_W) + ident[4:], _reflection(m, 4, d))
    v = _compose_blocks(list(_S4_V) + ident[4:], _reflection(m, 4, d))
    h = _compose_blocks(list(_S4_H) + ident[4:], _rotation(m, 4, d))
    G = closure_from_generators(d, {"w": w, "v": v, "h": h})
    return _finish(G, spec, {"w": w, "v": v, "u": w * v, "h": h}, 8 * m, {
        "v^2=1": ("v2", "1"), "w^4=1": ("w4", "1"), "w^v=w^-1": ("vwv", "w-1"),
        "u=wv": ("u", "wv"), "h^m=1": (f"h{m}", "1"), "h^v=h^-1": ("vhv", "h-1"),
        "u^h=w^2u": ("h-1uh", "w2u"), "(w^2u)^h=w^2": ("h-1w2uh", "w2"), "(w^2)^h=u": ("h-1w2h", "u"),
        "[w^2,u]=1": ("w2u", "uw2"),
    })


def metacyclic(n: int, m: int, lam: int) -> LabeledGroup:
    """Z_n:Z_m with g^h = g^lam, in its regular representation on n*m points."""
    spec = FamilySpec("MC", (n, m, lam))
    mu = pow(lam, -1, n) if n > 1 else 0
    d = n * m

    def point(i, j):
        return (i % n) + n * (j % m)

    # right multiplication: (g^i h^j) * g = g^(i + mu^j) h^j, (g^i h^j) * h = g^i h^(j+1)
    gimg = [0] * d
    himg = [0] * d
    for j in range(m):
        step = pow(mu, j, n) if n > 1 else 0
        for i in range(n):
            gimg[point(i, j)] = point(i + step, j)
            himg[point(i, j)] = point(i, j + 1)
    g, h = Permutation(gimg), Permutation(himg)
    G = closure_from_generators(d, {"g": g, "h": h})
    return _finish(G, spec, {"g": g, "h": h}, n * m, {
        "g^n=1": (f"g{n}", "1"), "h^m=1": (f"h{m}", "1"), "g^h=g^lam": ("h-1gh", f"g{lam % n if n > 1 else 0}"),
    })


def from_permutation_file(path) -> LabeledGroup:
    """Generators in disjoint-cycle notation, one per line, optional ``label:`` prefix.

    Points are 0-based; blank lines and lines starting with ``#`` are skipped.
    """
    text = Path(path).read_text()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        label = None
        if ":" in line:
            label, line = (s.strip() for s in line.split(":", 1))
        rows.append((label, line))
    if not rows:
        raise ValidationError(f"{path}: no generators")
    parsed = [(lab, Permutation.parse(body)) for lab, body in rows]
    degree = max(p.degree for _, p in parsed)
    gens = {}
    for k, (lab, p) in enumerate(parsed):
        name = lab or chr(ord("a") + k)
        if name in gens:
            raise ValidationError(f"{path}: duplicate label {name}")
        gens[name] = Permutation(list(p.images) + list(range(p.degree, degree)))
    spec = FamilySpec("PERM", (), source=str(path))
    G = closure_from_generators(degree, gens, spec=spec)
    return LabeledGroup(G, dict(G.labels), spec)


_BUILDERS = {
    "D": dihedral, "DxD": dihedral_product, "R3": rank3_cyclic_ext, "S4C": s4_cover, "MC": metacyclic,
}


def build_family(spec: FamilySpec) -> LabeledGroup:
    if spec.tag == "PERM":
        return from_permutation_file(spec.source)
    return _BUILDERS[spec.tag](*spec.params)


def parse_group_spec(text: str) -> LabeledGroup:
    """Parse ``D:n``, ``DxD:m,n``, ``R3:m,n,l``, ``S4C:m``, ``MC:n,m,lambda`` or ``PERM:<file>``."""
    if ":" not in text:
        raise ValidationError(f"group spec {text!r} lacks a family tag")
    tag, rest = text.split(":", 1)
    tag = tag.strip()
    if tag == "PERM":
        return from_permutation_file(rest.strip())
    if tag not in _BUILDERS:
        raise ValidationError(f"unknown family tag {tag!r}")
    try:
        params = tuple(int(t) for t in rest.split(","))
    except ValueError:
        raise ValidationError(f"non-integer parameter in {text!r}") from None
    return build_family(FamilySpec(tag, params))
