"""Command-line entry point.

Exit codes: 0 success, 2 when a verdict is DISTINGUISHED (or a check fails),
1 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Optional

from . import formats
from .bisimp import (
    BiSimpSet,
    classification_diagram,
    classifying_complex,
    classifying_diagram,
    classifying_diagram_map,
    segal_check,
)
from .characterize import NonGroupAutH, char_level0, endomorphism_monoid, verify_characterization
from .fincat import (
    CategoryError,
    FinCat,
    FinFunctor,
    find_isomorphism,
    validate_category,
    weq_all,
    weq_identities,
    weq_iso,
)
from .hammock import pi0_mapping
from .labels import render, to_json
from .segalsem import NotStrictSegal, completeness_check, dk_compare, homotopy_category
from .simpset import SimpSet, SimplicialError, homology, invariant_equiv, nerve
from .snf import dense_smith_diagonal

EXIT_OK, EXIT_INPUT, EXIT_DISTINGUISHED = 0, 1, 2


@dataclass
class Report:
    data: dict
    lines: list[str] = field(default_factory=list)
    code: int = EXIT_OK


# ---------------------------------------------------------------- loading


def _load_category(path) -> tuple[FinCat, dict]:
    doc = formats.load_document(path)
    if formats.is_simpcat_doc(doc):
        raise formats.InputError(f"{path}: expected a category, found a simplicial category")
    c = formats.category_from_doc(doc)
    problems = validate_category(c)
    if problems:
        raise formats.InputError(f"{path}: not a category: " + "; ".join(str(v) for v in problems[:5]))
    return c, doc


def _weq(args, c: FinCat, doc: dict, required: bool):
    if args.weq_all:
        return weq_all(c)
    if args.weq_iso:
        return weq_iso(c)
    w = formats.weq_from_doc(doc, c)
    if w is None and required:
        raise formats.InputError("no weak equivalences: add a 'weq' field or pass --weq-all / --weq-iso")
    return w


def _diagram(args, c: FinCat, doc: dict) -> BiSimpSet:
    w = _weq(args, c, doc, required=False)
    if w is None:
        return classifying_diagram(c, args.nmax, args.dim)
    return classification_diagram(c, w, args.nmax, args.dim)


# ---------------------------------------------------------------- summaries


def _homology_data(x: SimpSet, max_deg: int) -> dict:
    h = homology(x, max_deg)
    return {"pi0": h.components, "betti": list(h.betti), "torsion": [list(t) for t in h.torsion]}


def _homology_lines(h: dict, indent: str = "  ") -> list[str]:
    out = [f"{indent}pi0 = {h['pi0']}"]
    for k, (b, t) in enumerate(zip(h["betti"], h["torsion"])):
        parts = ([f"Z^{b}"] if b else []) + [f"Z/{v}" for v in t]
        out.append(f"{indent}H{k} = {' + '.join(parts) if parts else '0'}")
    return out


def _max_deg(args, trunc: int) -> int:
    return min(args.maxdeg, trunc - 1)


def _diagram_report(args, wb: BiSimpSet, kind: str) -> Report:
    levels = []
    lines = [f"{kind}: n_max={wb.n_max} dim={wb.dim}"]
    md = _max_deg(args, wb.dim)
    for n, x in enumerate(wb.levels):
        h = _homology_data(x, md)
        levels.append({"n": n, "counts": list(x.counts()), **h})
        lines.append(f"level {n}: counts {list(x.counts())}")
        lines.extend(_homology_lines(h))
    return Report({"construction": kind, "levels": levels}, lines)


# ---------------------------------------------------------------- commands


def cmd_validate(args) -> Report:
    doc = formats.load_document(args.input)
    c = formats.category_from_doc(doc)
    problems = validate_category(c)
    data = {"valid": not problems, "violations": [str(v) for v in problems]}
    if problems:
        return Report(data, ["INVALID"] + [f"  {v}" for v in problems], EXIT_INPUT)
    w = formats.weq_from_doc(doc, c)
    lines = [f"VALID: {len(c.objects)} objects, {len(c.morphisms)} morphisms"]
    if w is not None:
        data["two_of_three"] = w.two_of_three
        lines.append(f"weak equivalences: {len(w.morphisms)}, two-out-of-three {'holds' if w.two_of_three else 'fails'}")
    return Report(data, lines)


def cmd_nerve(args) -> Report:
    c, _ = _load_category(args.input)
    x = nerve(c, args.dim)
    h = _homology_data(x, _max_deg(args, x.trunc))
    data = {"counts": list(x.counts()), **h, "simplicial_set": formats.simpset_to_doc(x)}
    return Report(data, [f"nerve: counts {list(x.counts())}"] + _homology_lines(h))


def cmd_homology(args) -> Report:
    doc = formats.load_document(args.input)
    if formats.is_simpset_doc(doc):
        x = formats.simpset_from_doc(doc)
    elif "simplicial_set" in doc:
        x = formats.simpset_from_doc(doc["simplicial_set"])
    else:
        c, _ = _load_category(args.input)
        x = nerve(c, args.dim)
    h = _homology_data(x, _max_deg(args, x.trunc))
    return Report({"counts": list(x.counts()), **h}, [f"counts {list(x.counts())}"] + _homology_lines(h))


def cmd_classifying(args) -> Report:
    c, _ = _load_category(args.input)
    return _diagram_report(args, classifying_diagram(c, args.nmax, args.dim), "classifying-diagram")


def cmd_classification(args) -> Report:
    c, doc = _load_category(args.input)
    w = _weq(args, c, doc, required=True)
    return _diagram_report(args, classification_diagram(c, w, args.nmax, args.dim), "classification-diagram")


def cmd_check_segal(args) -> Report:
    c, doc = _load_category(args.input)
    wb = _diagram(args, c, doc)
    rep = segal_check(wb, max_deg=_max_deg(args, wb.dim))
    levels = [
        {"n": lv.n, "status": lv.status.value, "source_counts": list(lv.source_counts), "target_counts": list(lv.target_counts), "detail": lv.detail}
        for lv in rep.levels
    ]
    lines = [f"n={lv['n']}: {lv['status']} ({lv['detail']})" for lv in levels]
    if rep.strict_fiber_caveat:
        lines.append("caveat: level 0 is not discrete; fiber products are strict (STRICT-FIBER)")
    code = EXIT_DISTINGUISHED if any(lv.status.value == "DISTINGUISHED" for lv in rep.levels) else EXIT_OK
    return Report({"levels": levels, "strict_fiber_caveat": rep.strict_fiber_caveat}, lines, code)


def cmd_check_complete(args) -> Report:
    c, doc = _load_category(args.input)
    wb = _diagram(args, c, doc)
    try:
        rep = completeness_check(wb, _max_deg(args, wb.dim))
    except NotStrictSegal as exc:
        return Report({"verdict": "NOT-STRICT-SEGAL", "detail": str(exc)}, [f"NOT-STRICT-SEGAL: {exc}"], EXIT_DISTINGUISHED)
    data = {
        "pi0_bijective": rep.pi0_bijective,
        "verdict": rep.verdict.value,
        "detail": rep.detail,
        "level0_components": rep.level0_components,
        "hoequiv_components": rep.hoequiv_components,
        "strict_fiber_caveat": rep.strict_fiber_caveat,
    }
    lines = [
        f"pi0 bijective: {'yes' if rep.pi0_bijective else 'no'}",
        f"verdict: {rep.verdict.value} ({rep.detail})",
        f"components: W0 {rep.level0_components}, W_hoequiv {rep.hoequiv_components}",
    ]
    return Report(data, lines, EXIT_OK if rep.complete else EXIT_DISTINGUISHED)


def cmd_ho_category(args) -> Report:
    c, doc = _load_category(args.input)
    wb = _diagram(args, c, doc)
    try:
        ho = homotopy_category(wb)
    except NotStrictSegal as exc:
        return Report({"verdict": "NOT-STRICT-SEGAL", "detail": str(exc)}, [f"NOT-STRICT-SEGAL: {exc}"], EXIT_DISTINGUISHED)
    h = ho.category
    iso = find_isomorphism(h, c) is not None
    data = {"category": formats.category_to_doc(h), "isomorphic_to_input": iso}
    lines = [f"Ho: {len(h.objects)} objects, {len(h.morphisms)} morphisms"]
    for m, s, t in h.morphisms:
        lines.append(f"  {render(m)}: {render(s)} -> {render(t)}")
    lines.append(f"isomorphic to input: {'yes' if iso else 'no'}")
    return Report(data, lines)


def cmd_dk_compare(args) -> Report:
    c, _ = _load_category(args.input)
    d, _ = _load_category(args.target)
    if args.functor:
        f = formats.functor_from_doc(formats.load_document(args.functor), c, d)
    elif len(d.morphisms) == 1:
        f = FinFunctor(c, d, {x: d.objects[0] for x in c.objects}, {m: d.morphism_ids[0] for m in c.morphism_ids})
    else:
        raise formats.InputError("--functor is required unless the target is the terminal category")
    problems = f.validate()
    if problems:
        raise formats.InputError("functor: " + "; ".join(problems[:5]))
    fm = classifying_diagram_map(f, args.nmax, args.dim)
    rep = dk_compare(fm, _max_deg(args, args.dim))
    data = {"equivalent": rep.equivalent, "verdict": rep.verdict, "failures": list(rep.failures), "pairs_checked": rep.pairs_checked}
    lines = [f"{rep.verdict} ({rep.pairs_checked} object pairs)"] + [f"  {x}" for x in rep.failures]
    return Report(data, lines, EXIT_OK if rep.equivalent else EXIT_DISTINGUISHED)


def cmd_hammock_pi0(args) -> Report:
    c, doc = _load_category(args.input)
    w = _weq(args, c, doc, required=False) or weq_identities(c)
    for name in (args.source, args.target):
        if name not in c.objects:
            raise formats.InputError(f"unknown object '{name}'")
    r = pi0_mapping(c, w, args.source, args.target, args.len)
    classes = [[str(z) for z in block] for block in r.classes]
    data = {"from": args.source, "to": args.target, "len_max": r.len_max, "classes": classes, "count": r.count, "stable": r.stable}
    lines = [f"pi0 Map({args.source}, {args.target}) at length <= {r.len_max}: {r.count} classes, {'stable' if r.stable else 'NOT stable'}"]
    for i, block in enumerate(classes):
        lines.append(f"  class {i}: {block[0]}" + (f" (+{len(block) - 1} more)" if len(block) > 1 else ""))
    return Report(data, lines)


def cmd_characterize(args) -> Report:
    doc = formats.load_document(args.input)
    if formats.is_simpcat_doc(doc):
        sc = formats.simpcat_from_doc(doc)
        problems = sc.validate()
        if problems:
            raise formats.InputError("not a simplicial category: " + "; ".join(problems[:5]))
        try:
            x = char_level0(sc)
        except NonGroupAutH as exc:
            return Report({"verdict": "NONGROUP-AUTH", "detail": str(exc)}, [f"NONGROUP-AUTH: {exc}"], EXIT_DISTINGUISHED)
        md = _max_deg(args, x.trunc)
        h = _homology_data(x, md)
        data = {"levels": [{"n": 0, "char": h}]}
        lines = ["level 0, B Aut^h side:"] + _homology_lines(h)
        if len(sc.objects) == 1:
            g = endomorphism_monoid(sc, sc.objects[0])
            if g.is_group():
                r = invariant_equiv(x, classifying_complex(g), md)
                data["levels"][0].update(verdict=r.verdict.value, reason=r.reason)
                lines.append(f"against the classifying complex of Map(*,*): {r.verdict.value}")
                return Report(data, lines, EXIT_OK if r.equivalent else EXIT_DISTINGUISHED)
        return Report(data, lines)
    c, _ = _load_category(args.input)
    w = _weq(args, c, doc, required=False)
    rep = verify_characterization(c, w, levels=tuple(range(args.levels + 1)), max_deg=_max_deg(args, args.dim), d=args.dim)
    levels, lines = [], []
    for lv in rep.levels:
        r = lv.report
        levels.append({"n": lv.n, "verdict": r.verdict.value, "reason": r.reason, "components": list(r.components), "profiles": to_json(r.profiles)})
        lines.append(f"level {lv.n}: {r.verdict.value}, components diagram={r.components[0]} char={r.components[1]}")
        for prof in r.profiles[1]:
            betti, tors = prof
            lines.append(f"    component: betti {list(betti)} torsion {[list(t) for t in tors]}")
    return Report({"levels": levels}, lines, EXIT_OK if rep.all_equivalent else EXIT_DISTINGUISHED)


# ---------------------------------------------------------------- selftest


GOLDEN = {
    "z2.json": {"characterize_components": [1, 1, 1], "torsion": [[], [2], [], [2]]},
    "walking_arrow.json": {"characterize_components": [2, 3]},
    "walking_arrow_weq.json": {"hammock": ("y", "x", 1)},
    "walking_iso.json": {"characterize_components": [1, 1, 1]},
    "z3.json": {"characterize_components": [1, 1], "torsion": [[], [3], [], [3]]},
}


def _fixture(name: str) -> Path:
    return Path(str(resources.files("segalkit") / "data" / name))


def _dense_homology(x: SimpSet, max_deg: int) -> tuple[list[int], list[list[int]]]:
    """Homology of the unnormalized complex through the dense Smith form only."""
    ranks, tors = {}, {}
    for k in range(1, max_deg + 2):
        rows = [[0] * len(x.simplices[k]) for _ in x.simplices[k - 1]]
        for j, fs in enumerate(x.faces[k]):
            for i, r in enumerate(fs):
                rows[r][j] += (-1) ** i
        diag = [abs(v) for v in dense_smith_diagonal(rows) if v]
        ranks[k] = len(diag)
        tors[k - 1] = sorted(v for v in diag if v > 1)
    betti = [len(x.simplices[k]) - ranks.get(k, 0) - ranks[k + 1] for k in range(max_deg + 1)]
    return betti, [tors[k] for k in range(max_deg + 1)]


def cmd_selftest(args) -> Report:
    from .corpus import Enumeration
    from .sweep import SweepConfig, check_category

    results = []

    def record(name: str, ok: bool, detail: str = ""):
        results.append({"check": name, "ok": ok, "detail": detail})

    for name, expect in GOLDEN.items():
        c, doc = _load_category(_fixture(name))
        if "characterize_components" in expect:
            levels = len(expect["characterize_components"]) - 1
            rep = verify_characterization(c, None, tuple(range(levels + 1)), 3, 4)
            comps = [lv.report.components[1] for lv in rep.levels]
            record(f"{name}: characterization", rep.all_equivalent and comps == expect["characterize_components"], str(comps))
        if "torsion" in expect:
            x = nerve(c, 4)
            h = homology(x, 3)
            record(f"{name}: nerve homology", [list(t) for t in h.torsion] == expect["torsion"], str(h.torsion))
            record(f"{name}: sparse vs dense SNF", _dense_homology(x, 3) == (list(h.betti), [list(t) for t in h.torsion]))
        if "hammock" in expect:
            x, y, count = expect["hammock"]
            r = pi0_mapping(c, formats.weq_from_doc(doc, c), x, y, 5)
            record(f"{name}: hammock pi0({x},{y})", r.count == count and r.stable, f"{r.count} stable={r.stable}")
    corrupted = formats.category_from_doc(formats.load_document(_fixture("corrupted.json")))
    record("corrupted.json: rejected", bool(validate_category(corrupted)))
    cfg = SweepConfig(len_max=3)
    for i, c in enumerate(Enumeration(2, 3)):
        r = check_category(c, cfg)
        ok = r.segal_iso and r.complete and r.ho_recovered and r.classification_matches and r.betti0_is_pi0
        record(f"corpus #{i}: {len(c.objects)} objects, {len(c.morphisms)} morphisms", ok)
    failed = [r for r in results if not r["ok"]]
    lines = [f"{'ok  ' if r['ok'] else 'FAIL'} {r['check']}" + (f" ({r['detail']})" if r["detail"] else "") for r in results]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return Report({"checks": results, "passed": not failed}, lines, EXIT_DISTINGUISHED if failed else EXIT_OK)


# ---------------------------------------------------------------- argument parsing


COMMANDS: dict[str, tuple[Callable, str]] = {
    "validate": (cmd_validate, "check the category axioms"),
    "nerve": (cmd_nerve, "nerve of a category with simplex counts and homology"),
    "classifying-diagram": (cmd_classifying, "levels of nerve(iso(C^[n]))"),
    "classification-diagram": (cmd_classification, "levels of nerve(we(C^[n]))"),
    "check-segal": (cmd_check_segal, "Segal maps at n = 2..nmax"),
    "check-complete": (cmd_check_complete, "completeness of the diagram"),
    "ho-category": (cmd_ho_category, "homotopy category of the diagram"),
    "dk-compare": (cmd_dk_compare, "Dwyer-Kan comparison along a functor"),
    "hammock-pi0": (cmd_hammock_pi0, "components of a hammock mapping space"),
    "characterize": (cmd_characterize, "compare diagram levels with B Aut decompositions"),
    "homology": (cmd_homology, "integral homology of a nerve or simplicial set"),
    "selftest": (cmd_selftest, "run the bundled golden fixtures and a small corpus"),
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="segalkit", description="Segal-space invariants of finite categories")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--nmax", type=int, default=3, help="horizontal truncation")
    common.add_argument("--dim", type=int, default=4, help="vertical truncation")
    common.add_argument("--maxdeg", type=int, default=3, help="highest homology degree reported")
    common.add_argument("--len", type=int, default=5, help="hammock length bound")
    weq = common.add_mutually_exclusive_group()
    weq.add_argument("--weq-all", action="store_true", help="every morphism is a weak equivalence")
    weq.add_argument("--weq-iso", action="store_true", help="weak equivalences are the isomorphisms")
    common.add_argument("--out", type=Path, default=None, help="write the report here instead of stdout")
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name != "selftest":
            p.add_argument("input", type=Path)
        if name == "dk-compare":
            p.add_argument("target", type=Path)
            p.add_argument("--functor", type=Path, default=None)
        if name == "hammock-pi0":
            p.add_argument("--from", dest="source", required=True)
            p.add_argument("--to", dest="target", required=True)
        if name == "characterize":
            p.add_argument("--levels", type=int, default=2, help="highest level compared")
    return ap


def _emit(args, report: Report) -> None:
    if args.format == "json":
        text = formats.dumps_compact({"command": args.command, **report.data, "exit_code": report.code}) + "\n"
    else:
        text = "\n".join(report.lines) + "\n"
    if args.out is not None:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        report = handler(args)
    except (formats.InputError, CategoryError, SimplicialError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(args, report)
    return report.code


if __name__ == "__main__":
    sys.exit(main())
