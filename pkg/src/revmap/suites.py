"""Verification suites: sweep configuration, per-case reports and their emission."""

from __future__ import annotations

import csv
import io
import json
import math
import random
from dataclasses import dataclass, field
from pathlib import Path

from .exceptions import EnumerationOverflow, ValidationError, closure_cap
from .families import dihedral, dihedral_product, parse_group_spec, rank3_cyclic_ext, s4_cover
from .groups import is_isomorphic, prime_factors, quotient_group, structure_report, subgroup_generated
from .maps import (MapKind, ReversingTriple, build_map, flag_system, is_orientable, make_reversing_triple,
                   map_record, orientation_subgroup_index)
from .triples import (classify_map, coprime_filter, dihedral_discriminants, enumerate_reversing_triples,
                      match_canonical_form, verify_corollary_regular)

__all__ = ["SweepConfig", "Case", "Report", "SUITES", "verify_suite", "coprime_consequences", "corpus_maps"]


@dataclass(frozen=True)
class SweepConfig:
    dihedral_max_n: int = 25
    discriminant_max_n: int = 27
    dxd_pairs: tuple = ((3, 5), (3, 7), (5, 7))
    rank3_params: tuple = ((3, 5, 7),)
    s4_params: tuple = (3, 9, 15)
    regular_groups: tuple = ("DxD:3,5", "DxD:3,7", "S4C:3", "S4C:9")
    kinds: tuple = (MapKind.REV, MapKind.BIREV, MapKind.REG)
    cap: int | None = None
    out_dir: str | None = None
    seed: int = 0  # only used to sample the larger dihedral groups in the flag suite

    def __post_init__(self):
        bounds = [self.dihedral_max_n, self.discriminant_max_n]
        bounds += [v for t in self.dxd_pairs + self.rank3_params for v in t] + list(self.s4_params)
        if any(b <= 0 for b in bounds):
            raise ValidationError("sweep bounds must be positive")

    def largest_order(self):
        orders = [2 * self.dihedral_max_n, 2 * self.discriminant_max_n]
        orders += [4 * m * n for m, n in self.dxd_pairs]
        orders += [4 * m * n * l for m, n, l in self.rank3_params]
        orders += [8 * m for m in self.s4_params]
        return max(orders)

    def check_caps(self):
        cap = closure_cap(self.cap)
        need = self.largest_order()
        if need > cap:
            raise EnumerationOverflow(f"sweep needs groups of order {need}, which", cap)


@dataclass
class Case:
    name: str
    status: str  # pass | fail | skip
    record: dict = field(default_factory=dict)
    reason: str = ""
    command: str = ""

    def as_dict(self):
        d = {"case": self.name, "status": self.status}
        if self.reason:
            d["reason"] = self.reason
        if self.command:
            d["command"] = self.command
        d["record"] = self.record
        return d


@dataclass
class Report:
    suite: str
    cases: list = field(default_factory=list)

    def add(self, name, ok, record=None, reason="", command=""):
        status = ok if isinstance(ok, str) else ("pass" if ok else "fail")
        self.cases.append(Case(name, status, record or {}, reason, command))

    @property
    def counts(self):
        c = {"pass": 0, "fail": 0, "skip": 0}
        for case in self.cases:
            c[case.status] += 1
        c["total"] = len(self.cases)
        return c

    @property
    def ok(self):
        return self.counts["fail"] == 0

    @property
    def findings(self):
        return [c.as_dict() for c in self.cases if c.status != "pass"]

    def as_dict(self):
        return {"suite": self.suite, "counts": self.counts, "cases": [c.as_dict() for c in self.cases]}

    def json_lines(self):
        return "\n".join(json.dumps(c.as_dict(), separators=(",", ":")) for c in self.cases) + "\n"

    def csv_text(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "case", "status", "reason"])
        for c in self.cases:
            writer.writerow([self.suite, c.name, c.status, c.reason])
        return buf.getvalue()

    def text(self):
        width = max([len(c.name) for c in self.cases] + [4])
        lines = [f"{c.status.upper():4}  {c.name:<{width}}  {c.reason}".rstrip() for c in self.cases]
        cnt = self.counts
        lines.append(f"{self.suite}: {cnt['pass']} passed, {cnt['fail']} failed, {cnt['skip']} skipped")
        return "\n".join(lines) + "\n"

    def write(self, out_dir):
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{self.suite}.jsonl").write_text(self.json_lines())
        (out / f"{self.suite}.csv").write_text(self.csv_text())
        return out


def _map_cmd(spec, kind, words):
    return f"revmap map --group {spec} --kind {kind.value} --triple {','.join(words)}"


def _verify_cmd(suite, extra=""):
    return f"revmap verify --suite {suite}{extra}"


# ---------------------------------------------------------------------------
# coprime consequences


def coprime_consequences(cmap):
    """The four consequences of gcd(|chi|, |E|) = 1, each as (holds, detail)."""
    inv = cmap.invariants
    G = cmap.group
    N = G.order
    chi = abs(inv.chi)
    out = {}
    g = math.gcd(chi, N)
    if inv.num_edges % 2 == 0:
        out["evenEdges"] = (g == 1, f"gcd(|chi|,|G|) = {g}")
    else:
        out["oddEdges"] = (4 % g == 0, f"gcd(|chi|,|G|) = {g}")
    report = structure_report(G)
    shapes = {p: s["shape"] for p, s in report.as_dict()["sylow"].items()}
    out["sylowCyclicOrDihedral"] = (all(s in ("cyclic", "dihedral") for s in shapes.values()), str(shapes))
    lcm = math.lcm(*inv.stabilizer_orders())
    out["lcmOfStabilizers"] = (lcm == N, f"lcm = {lcm}, |G| = {N}")
    return out


# ---------------------------------------------------------------------------
# corpus


def _reorderings(triple):
    x, y, z = triple
    return [(x, y, z), (x, z, y), (y, z, x)]


def corpus_maps(cfg: SweepConfig):
    """(label, map, command) for the family maps the suites build, lazily."""
    for m, n in cfg.dxd_pairs:
        L = dihedral_product(m, n)
        for words in _reorderings(("u", "v", "abw")):
            tr = make_reversing_triple(L.group, *words)
            yield f"DxD:{m},{n} rev {','.join(words)}", build_map(tr, MapKind.REV), _map_cmd(
                L.spec, MapKind.REV, words)
    for m, n, l in cfg.rank3_params:
        L = rank3_cyclic_ext(m, n, l)
        for words in _reorderings(("u", "cv", "abw")):
            tr = make_reversing_triple(L.group, *words)
            yield f"R3:{m},{n},{l} rev {','.join(words)}", build_map(tr, MapKind.REV), _map_cmd(
                L.spec, MapKind.REV, words)
    for m in cfg.s4_params:
        L = s4_cover(m)
        for i in range(1, m):
            if math.gcd(i, m) != 1:
                continue
            for t in ("w2", "u", "w2v"):
                words = ("v", f"h{i}v", t)
                tr = make_reversing_triple(L.group, *words)
                yield f"S4C:{m} rev {','.join(words)}", build_map(tr, MapKind.REV), _map_cmd(
                    L.spec, MapKind.REV, words)
    for spec in cfg.regular_groups:
        L = parse_group_spec(spec)
        G = L.group
        for rec in verify_corollary_regular(G, cfg.cap):
            if "triple" not in rec:
                continue
            tr = make_reversing_triple(G, *rec["triple"])
            yield f"{spec} reg {','.join(rec['triple'])}", build_map(tr, MapKind.REG), _map_cmd(
                spec, MapKind.REG, rec["triple"])


def _dihedral_corpus(max_n, rng=None, per_group=None):
    for n in range(3, max_n + 1):
        L = dihedral(n)
        triples = enumerate_reversing_triples(L.group)
        if per_group is not None and len(triples) > per_group:
            triples = rng.sample(triples, per_group)
        for tr in triples:
            words = tr.words()
            for kind in (MapKind.REV, MapKind.BIREV):
                yield f"D:{n} {kind.value} {','.join(words)}", build_map(tr, kind), _map_cmd(L.spec, kind, words)
            if L.group.table[tr.y, tr.z] == L.group.table[tr.z, tr.y] and tr.y != tr.z:
                yield f"D:{n} reg {','.join(words)}", build_map(tr, MapKind.REG), _map_cmd(
                    L.spec, MapKind.REG, words)


# ---------------------------------------------------------------------------
# suites


def suite_dihedral_canonical(cfg):
    """Every reversing triple of dihedral(n), 3 <= n <= max, fits exactly one canonical family."""
    rep = Report("dihedral-canonical")
    families = {"DihedralOddForm", "DihedralRedundant", "DihedralSplit"}
    for n in range(3, cfg.dihedral_max_n + 1):
        G = dihedral(n).group
        bad = []
        count = 0
        for tr in enumerate_reversing_triples(G, cfg.cap):
            count += 1
            tag = match_canonical_form(G, tr, cfg.cap)
            hit = families & set(tag.matches)
            if len(hit) != 1:
                bad.append({"triple": list(tr.words()), "matches": sorted(hit)})
        rep.add(f"D:{n}", not bad, {"triples": count, "offending": bad[:20]},
                "" if not bad else f"{len(bad)} triples match {'no' if not bad[0]['matches'] else 'several'} families",
                _verify_cmd("dihedral-canonical", f" --max-n {n}"))
    return rep


def _dxd_cases(rep, m, n, cap=None):
    L = dihedral_product(m, n)
    graphs = set()
    for words in _reorderings(("u", "v", "abw")):
        tr = make_reversing_triple(L.group, *words)
        cmap = build_map(tr, MapKind.REV)
        inv = cmap.invariants
        clause = classify_map(cmap, cap)
        graphs.add(inv.graph.label)
        problems = []
        if inv.chi != m + n - m * n:
            problems.append(f"chi {inv.chi} != {m + n - m * n}")
        if inv.num_edges != 2 * m * n:
            problems.append(f"|E| {inv.num_edges} != {2 * m * n}")
        if not inv.coprime:
            problems.append("not coprime")
        if inv.orientable:
            problems.append("orientable")
        if clause.clause != "dihedral-product":
            problems.append(f"clause {clause.clause}: {clause.reason}")
        rec = map_record(cmap, inv)
        rec["clause"] = clause.clause
        rep.add(f"DxD:{m},{n} {','.join(words)}", not problems, rec, "; ".join(problems),
                _map_cmd(L.spec, MapKind.REV, words))
    want = {f"C{m}^({2 * n})", f"C{n}^({2 * m})", f"C{m}xC{n}"}
    rep.add(f"DxD:{m},{n} graphs", graphs == want, {"graphs": sorted(graphs), "expected": sorted(want)},
            "" if graphs == want else f"graphs {sorted(graphs)}", _verify_cmd(rep.suite))


def _r3_cases(rep, m, n, l, cap=None):
    L = rank3_cyclic_ext(m, n, l)
    chi_want = m * n + m * l + n * l - 2 * m * n * l
    for words in _reorderings(("u", "cv", "abw")):
        tr = make_reversing_triple(L.group, *words)
        cmap = build_map(tr, MapKind.REV)
        inv = cmap.invariants
        g = inv.graph
        problems = []
        if inv.chi != chi_want:
            problems.append(f"chi {inv.chi} != {chi_want}")
        if inv.num_edges != 2 * m * n * l:
            problems.append(f"|E| {inv.num_edges} != {2 * m * n * l}")
        if not inv.coprime:
            problems.append("not coprime")
        # the two cycle lengths and the multiplicity must split {m, n, l}
        if g.family != "TensorOfCycles" or sorted(g.params + (g.multiplicity,)) != sorted((m, n, l)):
            problems.append(f"graph {g.label}")
        clause = classify_map(cmap, cap)
        if clause.clause != "rank3-cover":
            problems.append(f"clause {clause.clause}: {clause.reason}")
        rec = map_record(cmap, inv)
        rec["clause"] = clause.clause
        rep.add(f"R3:{m},{n},{l} {','.join(words)}", not problems, rec, "; ".join(problems),
                _map_cmd(L.spec, MapKind.REV, words))


def _s4_cases(rep, m, cap=None):
    L = s4_cover(m)
    for i in range(1, m):
        if math.gcd(i, m) != 1:
            continue
        for t in ("w2", "u", "w2v"):
            words = ("v", f"h{i}v", t)
            tr = make_reversing_triple(L.group, *words)
            passes, _ = coprime_filter(tr, MapKind.REV)
            cmap = build_map(tr, MapKind.REV)
            inv = cmap.invariants
            problems = []
            if inv.num_edges != 4 * m:
                problems.append(f"|E| {inv.num_edges} != {4 * m}")
            if t == "w2":
                if inv.chi != 4 - m:
                    problems.append(f"chi {inv.chi} != {4 - m}")
                if not passes:
                    problems.append("fails the coprime filter")
                clause = classify_map(cmap, cap)
                if clause.clause != "s4-cover":
                    problems.append(f"clause {clause.clause}: {clause.reason}")
            else:
                if passes:
                    problems.append(f"passes the coprime filter with chi {inv.chi}")
                if inv.chi not in (8 - 2 * m, 4 - 2 * m):
                    problems.append(f"chi {inv.chi} not in {{{8 - 2 * m}, {4 - 2 * m}}}")
            rec = map_record(cmap, inv)
            rec["filter"] = passes
            rep.add(f"S4C:{m} {','.join(words)}", not problems, rec, "; ".join(problems),
                    _map_cmd(L.spec, MapKind.REV, words))


def suite_coprime_families(cfg):
    """The three non-dihedral coprime families, their chi formulas, edge counts and graphs."""
    rep = Report("coprime-families")
    for m, n in cfg.dxd_pairs:
        _dxd_cases(rep, m, n, cfg.cap)
    for m, n, l in cfg.rank3_params:
        _r3_cases(rep, m, n, l, cfg.cap)
    for m in cfg.s4_params:
        _s4_cases(rep, m, cfg.cap)
    return rep


def suite_coprime_consequences(cfg):
    rep = Report("coprime-consequences")
    for label, cmap, cmd in corpus_maps(cfg):
        if not cmap.invariants.coprime:
            continue
        res = coprime_consequences(cmap)
        failed = [k for k, (ok, _) in res.items() if not ok]
        rec = map_record(cmap)
        rec["consequences"] = {k: {"holds": ok, "detail": d} for k, (ok, d) in res.items()}
        rep.add(label, not failed, rec, ", ".join(failed), cmd)
    return rep


def suite_dihedral_discriminants(cfg):
    """Closed-form chi against built maps for odd n; discriminant 1 for prime powers."""
    rep = Report("dihedral-discriminants")
    for n in range(3, cfg.discriminant_max_n + 1, 2):
        L = dihedral(n)
        G = L.group
        h = G.word("h")
        wrong = []
        delta_bad = []
        checked = 0
        prime_power = len(prime_factors(n)) == 1
        for i in range(1, n):
            for j in range(1, n):
                if math.gcd(math.gcd(i, j), n) != 1:
                    continue
                d = dihedral_discriminants(n, i, j)
                tr = ReversingTriple(G, h, G.word(f"g{i}h"), G.word(f"g{j}h"))
                chi_rev = build_map(tr, MapKind.REV).chi
                chi_birev = build_map(tr, MapKind.BIREV).chi
                checked += 1
                if (chi_rev, chi_birev) != (d.chi_rev, d.chi_birev):
                    wrong.append({"i": i, "j": j, "built": [chi_rev, chi_birev], "closed": [d.chi_rev, d.chi_birev]})
                # the prime-power claim is made for gcd(j, n) >= 3
                if prime_power and math.gcd(j, n) >= 3 and d.delta_rev != 1:
                    delta_bad.append({"i": i, "j": j, "deltaRev": d.delta_rev})
        rep.add(f"D:{n} chi", not wrong, {"pairs": checked, "offending": wrong[:20]},
                f"{len(wrong)} pairs disagree" if wrong else "", _verify_cmd(rep.suite))
        if prime_power:
            rep.add(f"D:{n} deltaRev", not delta_bad, {"offending": delta_bad[:20]},
                    f"{len(delta_bad)} pairs with deltaRev != 1" if delta_bad else "", _verify_cmd(rep.suite))
    return rep


def suite_regular_table(cfg):
    rep = Report("regular-table")
    for spec in cfg.regular_groups:
        L = parse_group_spec(spec)
        for k, rec in enumerate(verify_corollary_regular(L.group, cfg.cap)):
            name = f"{spec} {','.join(rec['triple'])}" if "triple" in rec else f"{spec} row {rec['row']}"
            cmd = _map_cmd(spec, MapKind.REG, rec["triple"]) if "triple" in rec else _verify_cmd(rep.suite)
            rep.add(name, rec["status"], rec, rec.get("reason", ""), cmd)
        if L.spec.tag == "S4C":
            m = L.spec.params[0]
            n = m // 3
            tr = make_reversing_triple(L.group, "hv", "v", "w2v")
            cmap = build_map(tr, MapKind.REG)
            inv = cmap.invariants
            ok = inv.orientable and inv.chi == 8 - 6 * n
            rep.add(f"{spec} hv,v,w2v orientable", ok, map_record(cmap, inv),
                    "" if ok else f"chi {inv.chi}, orientable {inv.orientable}",
                    _map_cmd(spec, MapKind.REG, ("hv", "v", "w2v")))
    return rep


STRUCTURE_GROUPS = (
    "D:1", "D:2", "D:3", "D:4", "D:5", "D:6", "D:8", "D:12", "D:15", "D:30",
    "DxD:3,5", "DxD:3,7", "S4C:3", "S4C:9", "S4C:15", "MC:7,3,2", "MC:5,4,2", "MC:13,3,3",
    "MC:3,3,1", "MC:5,5,1",
)


def suite_structure(cfg):
    rep = Report("structure")
    for spec in STRUCTURE_GROUPS:
        G = parse_group_spec(spec).group
        rep.add(spec, True, structure_report(G).as_dict(), "", f"revmap group --group {spec} --report structure")
    big, small = s4_cover(9).group, s4_cover(3).group
    N = subgroup_generated(big, [big.word("h3")])
    Q, proj = quotient_group(big, N)
    iso = is_isomorphic(Q, small, cfg.cap)
    rec = {"quotientOrder": Q.order, "kernelOrder": N.order}
    ok = iso is not None and iso.is_bijective() and iso.is_multiplicative()
    if iso is not None:
        rec["witness"] = {lab: small.describe(iso(proj(big.labels[lab]))) for lab in ("w", "v", "h")}
    rep.add("S4C:9/<h3> = S4C:3", ok, rec, "" if ok else "no isomorphism found", _verify_cmd(rep.suite))
    return rep


def suite_flags(cfg):
    """Flag count, partner well-formedness, odd chi and the regular orientability cross-check."""
    rep = Report("flags")
    rng = random.Random(cfg.seed)

    def maps():
        yield from corpus_maps(cfg)
        yield from _dihedral_corpus(min(cfg.dihedral_max_n, 15), rng, per_group=40)

    for label, cmap, cmd in maps():
        if cmap.kind not in cfg.kinds:
            continue
        problems = []
        try:
            fs = flag_system(cmap, check=True)
        except Exception as exc:  # StructuralError names the offending flag
            rep.add(label, False, {"error": str(exc)}, "malformed flag system", cmd)
            continue
        if len(fs) != 4 * cmap.num_edges:
            problems.append(f"{len(fs)} flags for {cmap.num_edges} edges")
        orient = is_orientable(cmap)
        if cmap.chi % 2 and orient:
            problems.append("odd chi but orientable")
        if cmap.kind is MapKind.REG:
            index2 = orientation_subgroup_index(cmap.triple) == 2
            if index2 != orient:
                problems.append(f"bipartite {orient} but index-2 test {index2}")
        rec = {"flags": len(fs), "edges": cmap.num_edges, "chi": cmap.chi, "orientable": orient}
        rep.add(label, not problems, rec, "; ".join(problems), cmd)
    return rep


SUITES = {
    "dihedral-canonical": suite_dihedral_canonical,
    "coprime-families": suite_coprime_families,
    "dihedral-discriminants": suite_dihedral_discriminants,
    "regular-table": suite_regular_table,
    "coprime-consequences": suite_coprime_consequences,
    "structure": suite_structure,
    "flags": suite_flags,
}


def verify_suite(name: str, cfg: SweepConfig | None = None) -> Report:
    cfg = cfg or SweepConfig()
    if name not in SUITES:
        raise ValidationError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    cfg.check_caps()
    rep = SUITES[name](cfg)
    if cfg.out_dir:
        rep.write(cfg.out_dir)
    return rep
