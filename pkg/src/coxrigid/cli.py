"""Command-line front end.

Exit status: 0 when the check passes, 1 when it fails, 2 on usage or
input errors, 3 when a budget or cap runs out.  ``--porcelain`` switches
to line-oriented ``key=value`` output.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from . import lab
from .classify import (irreducible_components, maximal_spherical_subsets, parabolic_order,
                       spherical_subset, spherical_subsets)
from .diagram import CoxeterDiagram, parse_diagram, serialize_diagram
from .errors import (BudgetExceeded, CapExceeded, CoxeterError, DiagramParseError,
                     SubsetSearchTooLarge)
from .rigidity import rigidity_report
from .twist import TwistSpec, apply_twist
from .words import (DEFAULT_BUDGET, DEFAULT_ORDER_CAP, EXCEEDS_CAP, GeneratorMap, canonical,
                    element_order, format_word, is_reflection, parse_word, reduce,
                    verify_isomorphism)

OK, FAIL, USAGE, EXHAUSTED = 0, 1, 2, 3

Lines = List[Tuple[str, str]]


def _fmt_set(vs: Sequence[str]) -> str:
    return "{" + ",".join(vs) + "}"


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def _load(path: str) -> CoxeterDiagram:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DiagramParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_diagram(text)


def _vertex_list(d: CoxeterDiagram, text: str) -> Tuple[str, ...]:
    return d.check_vertices(v for v in text.split(",") if v)


def _parse_map(path: str, source: CoxeterDiagram, target: CoxeterDiagram) -> GeneratorMap:
    images: Dict[str, str] = {}
    text = Path(path).read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        s, sep, img = line.partition(":")
        if not sep:
            raise DiagramParseError(f"{path}: expected 'generator: word'", lineno)
        images[s.strip()] = img.strip()
    return GeneratorMap(source, target, images)


# -- commands ---------------------------------------------------------------

def cmd_check(args) -> Tuple[int, Lines]:
    d = _load(args.file)
    rep = rigidity_report(d)
    out: Lines = [
        ("condition1", "holds" if rep.condition1.holds else "fails"),
        ("condition1.witnesses", " ".join(_fmt_set(p) for p in rep.condition1.witnesses)),
        ("condition2", "holds" if rep.condition2.holds else "fails"),
        ("condition2.witnesses", " ".join(f"({','.join(t)})" for t in rep.condition2.witnesses)),
        ("condition3", "holds" if rep.condition3.holds else "fails"),
    ]
    for pair, hits in rep.condition3.meeting:
        key = f"condition3.{','.join(pair)}"
        out.append((key + ".count", str(len(hits))))
        out.append((key + ".meeting", " ".join(_fmt_set(T) for T in hits)))
    out += [
        ("maximal_spherical", " ".join(_fmt_set(r.vertices) for r in maximal_spherical_subsets(d))),
        ("even", _fmt_bool(rep.is_even)),
        ("finite", _fmt_bool(rep.is_finite)),
        ("theorems", ",".join(sorted(rep.applicable_theorems)) or "none"),
    ]
    return (OK if rep.main_conditions_hold else FAIL), out


def cmd_classify(args) -> Tuple[int, Lines]:
    d = _load(args.file)
    T = _vertex_list(d, args.subset) if args.subset is not None else d.vertices
    rec = spherical_subset(d, T)
    out: Lines = [("subset", _fmt_set(T)), ("spherical", _fmt_bool(rec is not None))]
    if rec is not None:
        for comp, ty in rec.components:
            out.append((f"component.{','.join(comp)}", str(ty)))
        out.append(("order", str(rec.order)))
    else:
        out.append(("components", " ".join(_fmt_set(c) for c in irreducible_components(d, T))))
        out.append(("order", "inf"))
    if args.subset is None:
        out.append(("spherical_subsets", str(len(spherical_subsets(d)))))
        for r in maximal_spherical_subsets(d):
            out.append((f"maximal.{','.join(r.vertices)}", f"{r.type_string} order={r.order}"))
    return OK, out


def cmd_reduce(args) -> Tuple[int, Lines]:
    d = _load(args.file)
    w = parse_word(d, args.word)
    r = reduce(d, w, args.budget)
    c = canonical(d, w, args.budget)
    return OK, [("input", format_word(w)), ("reduced", format_word(r)),
                ("canonical", format_word(c)), ("length", str(len(c)))]


def cmd_order(args) -> Tuple[int, Lines]:
    d = _load(args.file)
    w = parse_word(d, args.word)
    n = element_order(d, w, args.cap, args.budget)
    if n is EXCEEDS_CAP:
        return EXHAUSTED, [("word", format_word(w)), ("order", "exceeds-cap"),
                           ("cap", str(args.cap))]
    return OK, [("word", format_word(w)), ("order", str(n))]


def cmd_is_reflection(args) -> Tuple[int, Lines]:
    d = _load(args.file)
    w = parse_word(d, args.word)
    yes = is_reflection(d, w, args.budget)
    return (OK if yes else FAIL), [("word", format_word(w)), ("reflection", _fmt_bool(yes))]


def cmd_twist(args) -> Tuple[int, Lines]:
    d = _load(args.file)
    spec = TwistSpec.complement(d, _vertex_list(d, args.j), _vertex_list(d, args.b))
    res = apply_twist(d, spec, args.budget)
    ok = verify_isomorphism(res.substitution, res.inverse, args.budget)
    out: Lines = [("J", _fmt_set(spec.J)), ("A", _fmt_set(spec.A)), ("B", _fmt_set(spec.B)),
                  ("longest_element", format_word(res.longest)),
                  ("sigma", " ".join(f"{j}->{k}" for j, k in sorted(res.sigma.items())))]
    for s, img in res.substitution.images.items():
        out.append((f"substitution.{s}", format_word(img)))
    for s, img in res.inverse.images.items():
        out.append((f"inverse.{s}", format_word(img)))
    out.append(("verified", _fmt_bool(ok)))
    out.append(("diagram", serialize_diagram(res.twisted)))
    return (OK if ok else FAIL), out


def cmd_verify_iso(args) -> Tuple[int, Lines]:
    d1, d2 = _load(args.file1), _load(args.file2)
    if (args.fwd is None) != (args.back is None):
        raise DiagramParseError("--fwd and --back must be given together")
    if args.fwd is not None:
        fwd = _parse_map(args.fwd, d1, d2)
        back = _parse_map(args.back, d2, d1)
        ok = verify_isomorphism(fwd, back, args.budget)
        return (OK if ok else FAIL), [("mode", "given-maps"), ("isomorphism", _fmt_bool(ok))]
    t1 = lab.enumerate_elements(d1, args.cap, args.budget)
    t2 = lab.enumerate_elements(d2, args.cap, args.budget)
    out: Lines = [("mode", "search"), ("order1", str(len(t1))), ("order2", str(len(t2)))]
    phi = next(lab.iter_isomorphisms(t1, t2), None)
    if phi is None:
        return FAIL, out + [("isomorphism", "false")]
    fwd, back = lab.isomorphism_maps(t1, phi, t2)
    ok = verify_isomorphism(fwd, back, args.budget)
    out.append(("isomorphism", _fmt_bool(ok)))
    out += [(f"fwd.{s}", format_word(w)) for s, w in fwd.images.items()]
    out += [(f"back.{s}", format_word(w)) for s, w in back.images.items()]
    return (OK if ok else FAIL), out


def cmd_lab(args) -> Tuple[int, Lines]:
    d = _load(args.file)
    t = lab.enumerate_elements(d, args.cap, args.budget)
    out: Lines = [("order", str(len(t))), ("formula_order", str(parabolic_order(d, d.vertices)))]
    checks = {
        "order_matches_formula": len(t) == parabolic_order(d, d.vertices),
        "group_laws": lab.check_group_laws(t),
        "conjugacy_lemma": lab.verify_conjugacy_lemma(d, t),
    }
    records = lab.find_coxeter_generating_sets(t, args.max_size)
    experiment = lab.empirical_reflection_rigidity(t, records)
    out.append(("generating_sets", str(len(records))))
    out.append(("reflection_classes", str(len(experiment.classes))))
    checks["size_lemma"] = lab.verify_size_lemma(records)
    checks["reflection_rigidity"] = experiment.passed
    correspond = True
    for rec in records:
        try:
            lab.verify_max_spherical_correspondence(d, rec)
        except (lab.NoCorrespondent, lab.NotUnique):
            correspond = False
    checks["max_spherical_correspondence"] = correspond
    rep = rigidity_report(d)
    out.append(("main_conditions", _fmt_bool(rep.main_conditions_hold)))
    if rep.main_conditions_hold:
        std = lab.standard_record(t)
        same = [r for r in records if r.reflections == std.reflections]
        transfer = psi_ok = True
        for rec in same:
            transfer &= lab.verify_condition_transfer(d, rec)
            try:
                lab.construct_psi(d, rec)
            except lab.NoValidPsi:
                psi_ok = False
        out.append(("same_reflection_sets", str(len(same))))
        checks["condition_transfer"] = transfer
        checks["psi"] = psi_ok
    out += [(k, "pass" if v else "fail") for k, v in checks.items()]
    return (OK if all(checks.values()) else FAIL), out


def cmd_example1(args) -> Tuple[int, Lines]:
    if args.k < 3 or args.k % 2 == 0:
        raise DiagramParseError("--k must be an odd integer >= 3")
    r = lab.example1_report(args.k, args.budget)
    out: Lines = [
        ("k", str(r.k)),
        ("order_left", str(r.order_left)),
        ("order_right", str(r.order_right)),
        ("isomorphism_found", _fmt_bool(r.isomorphism is not None)),
        ("isomorphism_verified", _fmt_bool(r.isomorphism_verified)),
    ]
    if r.isomorphism is not None:
        out += [(f"fwd.{s}", format_word(w)) for s, w in r.isomorphism[0].images.items()]
    out += [
        ("reflections_left", str(r.reflections_left)),
        ("reflections_right", str(r.reflections_right)),
        ("isomorphisms_checked", str(r.isomorphisms_checked)),
        ("reflection_compatible_isomorphisms", str(r.reflection_compatible)),
        ("result", "pass" if r.passed else "fail"),
    ]
    return (OK if r.passed else FAIL), out


def cmd_example2(args) -> Tuple[int, Lines]:
    r = lab.example2_report(args.budget)
    out: Lines = [
        ("left", serialize_diagram(r.left)),
        ("right", serialize_diagram(r.right)),
        ("twisted", serialize_diagram(r.twist.twisted)),
        ("twisted_isomorphic_to_right", _fmt_bool(r.twisted_to_right is not None)),
        ("twist_verified", _fmt_bool(r.twist_verified)),
        ("left_isomorphic_to_right", _fmt_bool(r.left_right_isomorphic)),
    ]
    for s, img in r.twist.substitution.images.items():
        out.append((f"substitution.{s}", format_word(img)))
    for name, d in (("left", r.left), ("right", r.right)):
        rep = rigidity_report(d)
        out.append((f"{name}.conditions",
                    "".join("Y" if c.holds else "N"
                            for c in (rep.condition1, rep.condition2, rep.condition3))))
    out.append(("result", "pass" if r.passed else "fail"))
    return (OK if r.passed else FAIL), out


# -- plumbing ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--porcelain", action="store_true", help="key=value output")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="braid-closure word budget (default %(default)s)")

    parser = argparse.ArgumentParser(prog="coxrigid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check", parents=[common], help="rigidity hypotheses of a diagram")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", parents=[common], help="finite types and spherical subsets")
    p.add_argument("file")
    p.add_argument("--subset", help="comma-separated vertices (default: all)")
    p.set_defaults(func=cmd_classify)

    for verb, func, hlp in (("reduce", cmd_reduce, "reduced and canonical word"),
                            ("order", cmd_order, "order of an element"),
                            ("is-reflection", cmd_is_reflection, "is the word a reflection")):
        p = sub.add_parser(verb, parents=[common], help=hlp)
        p.add_argument("file")
        p.add_argument("word", nargs="*", help="letters (may be one quoted string)")
        if verb == "order":
            p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP)
        p.set_defaults(func=func)

    p = sub.add_parser("twist", parents=[common], help="elementary diagram twist")
    p.add_argument("file")
    p.add_argument("--j", required=True, help="spherical separator, comma-separated")
    p.add_argument("--b", required=True, help="side to conjugate, comma-separated")
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("verify-iso", parents=[common], help="certify a group isomorphism")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--fwd", help="map file 'generator: word' from file1 to file2")
    p.add_argument("--back", help="map file from file2 to file1")
    p.add_argument("--cap", type=int, default=lab.DEFAULT_ELEMENT_CAP)
    p.set_defaults(func=cmd_verify_iso)

    p = sub.add_parser("lab", parents=[common], help="brute-force suite on a finite group")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=lab.DEFAULT_ELEMENT_CAP)
    p.add_argument("--max-size", type=int, default=None)
    p.set_defaults(func=cmd_lab)

    p = sub.add_parser("example1", parents=[common], help="I2(2k) versus I2(k) x A1")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_example1)

    p = sub.add_parser("example2", parents=[common], help="twist of the 2-3-2 path")
    p.set_defaults(func=cmd_example2)
    return parser


def _emit(lines: Lines, porcelain: bool, stream) -> None:
    for key, value in lines:
        if "\n" in value:
            if porcelain:
                value = ";".join(value.strip().splitlines())
            else:
                print(f"{key}:", file=stream)
                for row in value.rstrip("\n").splitlines():
                    print(f"    {row}", file=stream)
                continue
        print(f"{key}={value}" if porcelain else f"{key.replace('_', ' ')}: {value}", file=stream)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "word", None) is not None:
        args.word = " ".join(args.word)
    try:
        status, lines = args.func(args)
    except (BudgetExceeded, CapExceeded, SubsetSearchTooLarge) as exc:
        print(f"error={exc.kind} reason={exc}", file=sys.stderr)
        return EXHAUSTED
    except (CoxeterError, OSError) as exc:
        kind = getattr(exc, "kind", "io")
        print(f"error={kind} reason={exc}", file=sys.stderr)
        return FAIL if kind in ("no-correspondent", "not-unique", "no-valid-psi") else USAGE
    _emit(lines, args.porcelain, sys.stdout)
    return status


if __name__ == "__main__":
    sys.exit(main())
