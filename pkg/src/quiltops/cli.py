"""Command line surface: calculators, verification suites, rendering.

Every verification suite is a thin driver over module operations; the
exit code is 0 exactly when all checks pass, so CI can gate on the
identities.  Long arity-5 computations sit behind --deep.
"""

import argparse
import json
import sys
import time

from .rings import parse_ring
from .words import parse_word, enumerate_words
from .trees import parse_tree, enumerate_trees
from .quilts import parse_quilt, enumerate_quilts
from .extensions import boundary, compose


class Report:
    def __init__(self, suite, fmt="text"):
        self.suite = suite
        self.fmt = fmt
        self.checks = []

    def add(self, name, passed, residual="", t=0.0):
        self.checks.append({"check": name, "status": "PASS" if passed else "FAIL",
                            "residual": str(residual), "seconds": round(t, 3)})

    def run(self, name, fn):
        t0 = time.time()
        residual = fn()
        if isinstance(residual, bool):
            ok, res = residual, ""
        else:
            ok = getattr(residual, "is_zero", lambda: not residual)()
            res = "" if ok else residual
        self.add(name, ok, res, time.time() - t0)

    def emit(self, out=None):
        out = out if out is not None else sys.stdout
        ok = all(c["status"] == "PASS" for c in self.checks)
        if self.fmt == "json":
            json.dump({"suite": self.suite, "checks": self.checks,
                       "passed": sum(c["status"] == "PASS" for c in self.checks),
                       "failed": sum(c["status"] == "FAIL" for c in self.checks)},
                      out, indent=2)
            out.write("\n")
        else:
            for c in self.checks:
                line = "%-4s %-52s %8.2fs" % (c["status"], c["check"], c["seconds"])
                if c["residual"]:
                    line += "  residual: %s" % c["residual"]
                out.write(line + "\n")
            out.write("%s: %d/%d checks passed\n"
                      % (self.suite, sum(c["status"] == "PASS" for c in self.checks),
                         len(self.checks)))
        return 0 if ok else 1


def _cmd_enumerate(args):
    kind = args.kind
    n = args.arity
    if kind == "tree":
        items = enumerate_trees(n)
    elif kind == "word":
        items = enumerate_words(n, args.degree)
    else:
        items = enumerate_quilts(n, args.degree)
    for x in items:
        print(x)
    print("total: %d" % len(items), file=sys.stderr)
    return 0


def _cmd_boundary(args):
    if args.word:
        x = parse_word(args.word)
    else:
        x = parse_quilt(args.quilt)
    print(boundary(x))
    return 0


def _cmd_compose(args):
    def parse_any(text):
        if ";" in text:
            return parse_quilt(text)
        if "(" in text:
            return parse_tree(text)
        return parse_word(text)
    x = parse_any(args.left)
    y = parse_any(args.right)
    print(compose(x, args.slot, y))
    return 0


def _cmd_homology(args):
    from .homology import build_complex, homology_ranks, torsion_report
    n = args.arity
    if n >= 5 and not args.deep:
        print("arity %d needs --deep (runs for minutes)" % n, file=sys.stderr)
        return 2
    ring = parse_ring(args.ring)
    progress = (lambda s: print(s, file=sys.stderr)) if args.deep else None
    c = build_complex(n, progress=progress)
    rows = homology_ranks(c, ring, progress=progress)
    print("degree  basis  rank H_k")
    acyclic = True
    for k, dim, h in rows:
        print("%6d %6d %9d" % (k, dim, h))
        if k > 0 and h != 0:
            acyclic = False
    if args.torsion:
        for k, _, _ in rows[:-1]:
            t = torsion_report(c, k)
            if t:
                print("torsion into degree %d: %s" % (k, t))
                acyclic = False
    print("acyclic in positive degrees: %s" % acyclic)
    return 0 if acyclic else 1


def _verify_gerstenhaber(args):
    from .mquilt import verify_identity, IDENTITY_NAMES
    rep = Report("gerstenhaber", args.format)
    for name in IDENTITY_NAMES:
        rep.run(name, lambda name=name: verify_identity(name))
    return rep.emit()


def _verify_linfty(args):
    from .linfty import (linfty_residual_quilt, linfty_residual_mquilt,
                        linfty_residual_coinvariant, linfty_residual_integer_route)
    rep = Report("linfty", args.format)
    top = args.max_arity
    for n in range(2, top + 1):
        if args.target == "quilt":
            rep.run("quilt relation n=%d" % n,
                    lambda n=n: linfty_residual_quilt(n))
        elif args.target == "mquilt":
            if n >= 5 and not args.deep:
                print("skipping n=%d (needs --deep)" % n, file=sys.stderr)
                continue
            rep.run("mquilt relation n=%d" % n,
                    lambda n=n: linfty_residual_mquilt(n))
            rep.run("integer route n=%d" % n,
                    lambda n=n: linfty_residual_integer_route(n))
        else:
            rep.run("coinvariant relation n=%d" % n,
                    lambda n=n: linfty_residual_coinvariant(n))
    return rep.emit()


def _cmd_render(args):
    from .render import render_ascii, render_svg
    q = parse_quilt(args.quilt)
    if args.format == "svg":
        print(render_svg(q, args.marks))
    else:
        print(render_ascii(q, args.marks))
    return 0


def _cmd_rep(args):
    from .diagrams import load_diagram, DiagramError
    from .cochains import delta_total, mc_residual, squaring
    if args.action == "check-diagram":
        try:
            load_diagram(args.diagram)
        except DiagramError as e:
            print("INVALID: %s" % e)
            return 1
        print("VALID")
        return 0
    dia = load_diagram(args.diagram)
    if args.action == "delta":
        f = _load_cochain(dia, args.cochain)
        out = delta_total(f, args.max_p)
        _dump_cochain(out)
        return 0
    if args.action == "mc":
        f = _load_cochain(dia, args.cochain)
        res = mc_residual(f, args.max_p)
        _dump_cochain(res)
        print("maurer-cartan solution: %s" % res.is_zero())
        return 0 if res.is_zero() else 1
    if args.action == "squaring":
        f = _load_cochain(dia, args.cochain)
        out = squaring(f, args.max_p)
        _dump_cochain(out)
        return 0
    raise SystemExit("unknown rep action %r" % args.action)


def _load_cochain(dia, path):
    """Cochain file: lines "p q morphisms... : out in... value"."""
    from .cochains import Cochain
    c = Cochain(dia)
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            head, tail = line.split(":")
            bits = head.split()
            p, q = int(bits[0]), int(bits[1])
            tup = tuple(bits[2:])
            vals = tail.split()
            idx = tuple(int(v) for v in vals[:-1])
            from fractions import Fraction
            c._add((p, q), tup, idx, Fraction(vals[-1]))
    return c


def _dump_cochain(c):
    if c.is_zero():
        print("0")
        return
    for (p, q) in c.bidegrees():
        for tup, T in sorted(c.data[(p, q)].items()):
            for idx, v in sorted(T.items()):
                print("%d %d %s : %s %s" % (p, q, " ".join(tup),
                                            " ".join(str(i) for i in idx), v))


def main(argv=None):
    ap = argparse.ArgumentParser(prog="quiltops",
                                 description="exact computations in the quilt operads")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list trees, words, or quilts")
    p.add_argument("kind", choices=["tree", "word", "quilt"])
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("boundary", help="signed sum of faces")
    p.add_argument("--word")
    p.add_argument("--quilt")
    p.set_defaults(fn=_cmd_boundary)

    p = sub.add_parser("compose", help="partial composition")
    p.add_argument("left")
    p.add_argument("slot", type=int)
    p.add_argument("right")
    p.set_defaults(fn=_cmd_compose)

    p = sub.add_parser("homology", help="ranks of the quilt complex")
    p.add_argument("--arity", type=int, required=True)
    p.add_argument("--ring", default="Q")
    p.add_argument("--deep", action="store_true")
    p.add_argument("--torsion", action="store_true")
    p.set_defaults(fn=_cmd_homology)

    p = sub.add_parser("verify", help="verification suites")
    vsub = p.add_subparsers(dest="suite", required=True)
    g = vsub.add_parser("gerstenhaber")
    g.add_argument("--format", choices=["text", "json"], default="text")
    g.set_defaults(fn=_verify_gerstenhaber)
    l = vsub.add_parser("linfty")
    l.add_argument("--max-arity", type=int, default=4)
    l.add_argument("--target", choices=["quilt", "mquilt", "coinvariant"],
                   default="quilt")
    l.add_argument("--deep", action="store_true")
    l.add_argument("--format", choices=["text", "json"], default="text")
    l.set_defaults(fn=_verify_linfty)

    p = sub.add_parser("render", help="draw a quilt as a grid diagram")
    p.add_argument("--quilt", required=True)
    p.add_argument("--marks", type=int, default=0)
    p.add_argument("--format", choices=["text", "svg"], default="text")
    p.set_defaults(fn=_cmd_render)

    p = sub.add_parser("rep", help="Hochschild representation operations")
    p.add_argument("action", choices=["check-diagram", "delta", "mc", "squaring"])
    p.add_argument("--diagram", required=True)
    p.add_argument("--cochain")
    p.add_argument("--max-p", type=int, default=4)
    p.set_defaults(fn=_cmd_rep)

    args = ap.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
