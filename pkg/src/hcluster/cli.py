"""``hc``: command-line front end.

Reports are ``key=value`` lines.  Exit status is 0 on success, 1 when the
model fails validation or an analysis reports a violation, 2 on usage or
parse errors.
"""
from __future__ import annotations

import argparse
import os
import sys

from .criticality import Genus3Only, analyze_criticality, cross_pairs, phi_omega
from .diskcomplex import ComplexTooLarge, check_structure, cluster_decomposition, export_graph
from .generate import GeneratorError, GenSpec, generate
from .model import ModelError, synthesize_meridians, validate
from .modelio import ModelParseError, load, serialize
from .oracle import oracle_check
from .reduction import CleaningMismatch, classify_five, classify_ten, oriented, preweak_reduce, weak_reduce

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Out:
    def __init__(self, stream):
        self.stream = stream
        self.color = os.environ.get("HC_COLOR", "0") == "1"

    def line(self, **kv) -> None:
        text = " ".join(f"{k}={_fmt(v)}" for k, v in sorted(kv.items()))
        if self.color and ("error" in kv or "violation" in kv):
            text = f"\x1b[31m{text}\x1b[0m"
        print(text, file=self.stream)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_fmt(x) for x in v) + "]"
    if hasattr(v, "value") and not isinstance(v, (int, str)):
        return str(v.value)
    return str(v)


def _pair(text: str) -> tuple[str, str]:
    parts = text.split(",")
    if len(parts) != 2 or not all(parts):
        raise argparse.ArgumentTypeError(f"--pair wants A,B, got {text!r}")
    return parts[0], parts[1]


def _model(args, out: _Out):
    m = load(args.model)
    bad = validate(m)
    if bad:
        for v in bad:
            out.line(violation=v.rule, disks=list(v.disks), msg=_quote(v.msg))
        out.line(valid=False)
        return None
    if args.synthesize_meridians:
        m = synthesize_meridians(m)
    return m


def _quote(s: str) -> str:
    return '"' + s.replace('"', "'") + '"'


def cmd_validate(args, out):
    m = _model(args, out)
    if m is None:
        return EXIT_FAIL
    out.line(valid=True, disks=len(m.disks), genus=m.n, pairs=len(m.weak_reducing_pairs()))
    return EXIT_OK


def cmd_reduce(args, out):
    m = _model(args, out)
    if m is None:
        return EXIT_FAIL
    v, w = oriented(m, *args.pair)
    if args.raw:
        raw = preweak_reduce(m, v, w)
        out.line(pair=[v, w], thick=str(raw.thick), thin=str(raw.thin))
        return EXIT_OK
    g = weak_reduce(m, v, w)
    out.line(
        pair=[v, w],
        thick_v=str(g.thick_v),
        thick_w=str(g.thick_w),
        thin=[p.genus for p in sorted(g.thin.pieces)],
        v1=_body(g.body_v1), v2=_body(g.body_v2), w1=_body(g.body_w1), w2=_body(g.body_w2),
        v2_extra=[b.id for b in g.v2_extra_minus],
        w1_extra=[b.id for b in g.w1_extra_minus],
        five=classify_five(g),
    )
    return EXIT_OK


def _body(b) -> str:
    return f"{b.plus_genus}/[{','.join(map(str, b.minus))}]"


def cmd_classify(args, out):
    m = _model(args, out)
    if m is None:
        return EXIT_FAIL
    if args.all:
        for v, w in m.weak_reducing_pairs():
            t = classify_ten(m, v, w)
            out.line(pair=[v, w], type=t, five=t.coarse)
        return EXIT_OK
    if not args.pair:
        out.line(error="Usage", msg=_quote("classify needs --pair or --all"))
        return EXIT_USAGE
    t = classify_ten(m, *args.pair)
    out.line(type=t)
    return EXIT_OK


def cmd_clusters(args, out):
    m = _model(args, out)
    if m is None:
        return EXIT_FAIL
    cs = cluster_decomposition(m)
    for cl in cs.clusters:
        out.line(center=str(cl.center), type=cl.cluster_type, vertices=list(cl.vertices),
                 v_star=str(cl.v_star), w_star=str(cl.w_star), simplices=len(cl.simplices))
    for s in cs.nonequivalent:
        out.line(nonequivalent=list(s))
    for s in cs.orphans:
        out.line(orphan=list(s))
    bad = check_structure(m, cs)
    for v in bad:
        out.line(violation=v.rule, msg=_quote(v.msg))
    out.line(clusters=len(cs.clusters), structure="fail" if bad else "pass")
    return EXIT_FAIL if bad else EXIT_OK


def cmd_components(args, out):
    m = _model(args, out)
    if m is None:
        return EXIT_FAIL
    cs = cluster_decomposition(m)
    for i, comp in enumerate(cs.dvw.components):
        out.line(component=i, disks=list(comp))
    out.line(components=len(cs.dvw.components))
    return EXIT_OK


def cmd_criticality(args, out):
    m = _model(args, out)
    if m is None:
        return EXIT_FAIL
    cs = cluster_decomposition(m)
    r = analyze_criticality(m, cs)
    kv = {"verdict": r.verdict}
    if r.partition:
        kv["c0"], kv["c1"] = list(r.partition[0]), list(r.partition[1])
        kv["cross_pairs"] = len(cross_pairs(cs.model, r.partition))
    if r.witness_face:
        kv["witness"] = list(r.witness_face.disks)
        kv["orientation"] = r.witness_face.orientation
    out.line(**kv)
    for note in r.notes:
        out.line(note=_quote(note))
    return EXIT_OK


def cmd_phi(args, out):
    m = _model(args, out)
    if m is None:
        return EXIT_FAIL
    t = phi_omega(m, cluster_decomposition(m))
    for r in t.rows:
        out.line(component=r.component, center=str(r.center), type=r.cluster_type, key=_quote(repr(r.key)))
    for key, comps in t.omega_groups.items():
        out.line(omega=_quote(repr(key)), components=list(comps), size=len(comps))
    for a, b in t.undecided:
        out.line(undecided=[a, b])
    for v in t.violations:
        out.line(violation="PHI", msg=_quote(v))
    out.line(caveat=_quote(t.caveat))
    return EXIT_FAIL if t.violations else EXIT_OK


def cmd_oracle(args, out):
    m = _model(args, out)
    if m is None:
        return EXIT_FAIL
    r = oracle_check(m)
    for f in r.failures:
        out.line(failure=_quote(f))
    out.line(oracle="pass" if r.ok else "fail", pairs=r.checked_pairs, simplices=r.checked_simplices)
    return EXIT_OK if r.ok else EXIT_FAIL


def cmd_gen(args, out):
    spec = GenSpec(genus=args.genus, disk_count=args.disks, seed=args.seed,
                   complete_meridians=args.synthesize_meridians)
    text = serialize(generate(spec))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        out.line(wrote=args.out)
    else:
        out.stream.write(text)
    return EXIT_OK


def cmd_export(args, out):
    m = _model(args, out)
    if m is None:
        return EXIT_FAIL
    out.stream.write(export_graph(m))
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hc", description="Weak reductions and equivalent clusters.")
    p.add_argument("--synthesize-meridians", action="store_true",
                   help="add missing meridian disks before analysis")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, fn, model=True, help=None):
        sp = sub.add_parser(name, help=help)
        if model:
            sp.add_argument("model", help="model file or built-in fixture name")
        sp.add_argument("--synthesize-meridians", action="store_true", default=argparse.SUPPRESS)
        sp.set_defaults(fn=fn)
        return sp

    cmd("validate", cmd_validate, help="check the model against the rules")
    r = cmd("reduce", cmd_reduce, help="weak reduction along a pair")
    r.add_argument("--pair", type=_pair, required=True)
    r.add_argument("--raw", action="store_true", help="print the preweak reduction")
    c = cmd("classify", cmd_classify, help="ten-type of a pair")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--pair", type=_pair)
    g.add_argument("--all", action="store_true")
    cmd("clusters", cmd_clusters, help="equivalent clusters and structure checks")
    cmd("components", cmd_components, help="components of D_VW")
    cmd("criticality", cmd_criticality, help="criticality verdict")
    cmd("phi", cmd_phi, help="genus-3 cluster table")
    cmd("oracle-check", cmd_oracle, help="brute-force cross-check")
    cmd("export-graph", cmd_export, help="node/edge/face listing")
    gen = cmd("gen", cmd_gen, model=False, help="seeded random model")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--genus", type=int, default=3)
    gen.add_argument("--disks", type=int, default=4)
    gen.add_argument("--out")
    return p


def main(argv=None, stdout=None) -> int:
    out = _Out(stdout or sys.stdout)
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.fn(args, out)
    except ModelParseError as e:
        out.line(error="ModelParseError", line=e.line, msg=_quote(e.msg))
        return EXIT_USAGE
    except FileNotFoundError as e:
        out.line(error="FileNotFound", msg=_quote(str(e)))
        return EXIT_USAGE
    except (ModelError, GeneratorError, ComplexTooLarge, CleaningMismatch) as e:
        out.line(error=type(e).__name__, msg=_quote(str(e)))
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
