"""Command-line interface.

Subcommands expose the library pipeline: root data, facet
classification, pseudo-Levis, spirals, splittings, block enumeration,
relative Weyl groups with parameters, the symbolic Hecke algebra
evaluator, and registry validation.  All rational output is exact and
deterministic.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from . import serialize
from .affine import facet_of
from .cuspidal import datum_for_type, load_registry, validate_datum
from .daha import (
    build_daha,
    element_add,
    element_scale,
    multiply,
    specialized_algebra,
)
from .errors import DataError, InternalError, UsageError
from .grading import GradingDatum, block_facets, spiral_of_facet, splitting_of_facet
from .pseudolevi import pseudo_levi_of, span_of_facet
from .relweyl import rel_weyl_group
from .rootdata import build_root_datum


def _datum_from_args(args):
    return build_root_datum(args.type, args.rank, args.twist)


def _grading_from_args(args):
    if args.x is None or args.m is None or args.eta is None:
        raise UsageError("this command needs --x, --m, and --eta")
    x = tuple(int(c) for c in args.x.split(","))
    return GradingDatum(x, args.m, args.eta)


def _facet_from_args(d, args, flag="point"):
    value = getattr(args, flag.replace("-", "_"), None)
    if value is None:
        raise UsageError(f"this command needs --{flag}")
    return facet_of(d, serialize.parse_point(value))


def _emit(args, payload, text_fn=None):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
    else:
        if text_fn is None:
            print(json.dumps(payload, sort_keys=True, indent=2))
        else:
            text_fn(payload)


def cmd_roots(args):
    d = _datum_from_args(args)
    payload = {
        "type": d.series,
        "rank": d.rank,
        "twist": d.e,
        "restrictedRank": d.restricted_rank,
        "roots": [list(v) for v in d.roots],
        "positive": list(d.positive),
        "classes": [list(c) for c in d.classes_by_root],
        "cartanGradedDims": {str(k): v for k, v in sorted(d.cartan_graded_dims.items())},
        "killing": serialize.matrix(d.killing),
        "coroots": [serialize.point(v) for v in d.coroots],
        "dimension": d.ambient_dim,
    }
    _emit(args, payload)
    return 0


def cmd_facet(args):
    d = _datum_from_args(args)
    f = _facet_from_args(d, args)
    sub = span_of_facet(d, f)
    payload = serialize.facet(d, f)
    payload["spanDimension"] = sub.dim
    _emit(args, payload)
    return 0


def cmd_pseudolevi(args):
    d = _datum_from_args(args)
    f = _facet_from_args(d, args)
    levi = pseudo_levi_of(d, f)
    payload = {
        "cartanType": levi.cartan_type,
        "labels": [list(lab) for lab in levi.labels],
        "weylOrder": levi.weyl_order,
        "ell": serialize.frac(levi.ell),
        "simpleRoots": [list(d.roots[i]) for i in levi.simple_indices],
        "reflectionRoots": [list(r) for r in levi.reflection_roots],
    }
    _emit(args, payload)
    return 0


def cmd_spiral(args):
    d = _datum_from_args(args)
    g = _grading_from_args(args)
    f = _facet_from_args(d, args)
    sp = spiral_of_facet(d, g, f, args.window)
    payload = {
        "facet": serialize.facet(d, f),
        "degrees": {
            str(n): {"labels": [list(l) for l in labs], "cartanDim": cdim}
            for n, (labs, cdim) in sorted(sp.items())
        },
    }
    _emit(args, payload)
    return 0


def cmd_splitting(args):
    d = _datum_from_args(args)
    g = _grading_from_args(args)
    f = _facet_from_args(d, args)
    s = splitting_of_facet(d, g, f)
    payload = {
        "pseudoLevi": s.pseudo_levi.cartan_type,
        "levels": {str(n): [list(l) for l in labs] for n, labs in s.levels.items()},
        "cartanDim": s.cartan_dim,
        "gradingElement": serialize.point(s.element),
        "pairings": {f"{idx},{cls}": v for (idx, cls), v in sorted(s.pairings.items())},
    }
    _emit(args, payload)
    return 0


def cmd_block(args):
    d = _datum_from_args(args)
    g = _grading_from_args(args)
    f = _facet_from_args(d, args, flag="base-facet")
    classes = block_facets(d, g, f, args.depth)
    payload = {
        "classes": [
            {
                "representative": serialize.point(c.representative.witness),
                "size": len(c.members),
                "eigenPoint": serialize.point(c.eigen_point),
            }
            for c in classes
        ]
    }
    _emit(args, payload)
    return 0


def _relweyl_payload(d, grp):
    return {
        "walls": [
            {
                "affineRoot": list(w.affine_root),
                "alpha": serialize.point(w.alpha),
                "alphaAffine": serialize.point(list(w.alpha_affine[0]) + [w.alpha_affine[1]]),
                "coroot": serialize.point(w.coroot),
                "ell": serialize.frac(w.ell),
                "c": w.c,
            }
            for w in grp.walls
        ],
        "coxeter": [["inf" if m is None else m for m in row] for row in grp.coxeter],
    }


def _relweyl_text(payload):
    n = len(payload["walls"])
    print("walls:")
    for i, w in enumerate(payload["walls"]):
        c = w["c"] if w["c"] is not None else "?"
        print(f"  node {i + 1}: c={c} alpha=({', '.join(w['alpha'])})")
    print("coxeter matrix:")
    for row in payload["coxeter"]:
        print("  " + " ".join(str(m) for m in row))


def cmd_relweyl(args):
    d = _datum_from_args(args)
    f = _facet_from_args(d, args)
    cusp = None
    registry = load_registry(args.registry)
    levi = pseudo_levi_of(d, f)
    try:
        cusp = datum_for_type(registry, levi.cartan_type)
    except DataError:
        cusp = None
    grp = rel_weyl_group(d, f, cusp=cusp)
    _emit(args, _relweyl_payload(d, grp), _relweyl_text)
    return 0


def cmd_cuspidal_validate(args):
    d = _datum_from_args(args)
    registry = load_registry(args.registry)
    payload = {"data": []}
    for datum in registry:
        entry = {
            "leviType": datum.levi_type,
            "orbitMarks": list(datum.orbit_marks),
            "systemLabel": datum.system_label,
            "builtin": datum.builtin,
        }
        payload["data"].append(entry)
    if args.point is not None:
        f = _facet_from_args(d, args)
        levi = pseudo_levi_of(d, f)
        datum = datum_for_type(registry, levi.cartan_type)
        cert = validate_datum(d, datum, span_of_facet(d, f))
        payload["validated"] = {
            "leviType": datum.levi_type,
            "rank": cert["rank"],
            "representativeSupport": sorted(str(k) for k in cert["representative"]),
        }
    _emit(args, payload)
    return 0


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<sym>u|delta|d\d+|s\d+)"
    r"|(?P<trans>t\[[^\]]*\])|(?P<op>[-+*^()]))"
)


def _tokenize(src):
    out = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if not m or m.end() == pos:
            if src[pos:].strip() == "":
                break
            raise UsageError(f"cannot tokenize {src[pos:]!r}")
        out.append(m)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, alg, tokens):
        self.alg = alg
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise UsageError("unexpected end of expression")
        self.i += 1
        return tok

    def expr(self):
        if self.peek() is not None and self.peek().group("op") == "-":
            self.take()
            acc = element_scale(Fraction(-1), self.term())
        else:
            acc = self.term()
        while self.peek() is not None and self.peek().group("op") in ("+", "-"):
            op = self.take().group("op")
            t = self.term()
            acc = element_add(acc, t if op == "+" else element_scale(Fraction(-1), t))
        return acc

    def term(self):
        acc = self.factor()
        while True:
            tok = self.peek()
            if tok is None or tok.group("op") in ("+", "-", ")"):
                return acc
            if tok.group("op") == "*":
                self.take()
            acc = multiply(self.alg, acc, self.factor())

    def factor(self):
        base = self.atom()
        tok = self.peek()
        if tok is not None and tok.group("op") == "^":
            self.take()
            exp_tok = self.take()
            if exp_tok.group("num") is None or "/" in exp_tok.group("num"):
                raise UsageError("exponent must be a nonnegative integer")
            out = self.alg.one()
            for _ in range(int(exp_tok.group("num"))):
                out = multiply(self.alg, out, base)
            return out
        return base

    def atom(self):
        tok = self.take()
        if tok.group("num") is not None:
            return self.alg.scalar(Fraction(tok.group("num")))
        if tok.group("sym") is not None:
            sym = tok.group("sym")
            if sym == "u":
                return self.alg.u()
            if sym == "delta":
                return self.alg.delta()
            if sym.startswith("d"):
                return self.alg.coordinate(int(sym[1:]))
            return self.alg.simple(int(sym[1:]))
        if tok.group("trans") is not None:
            inner = tok.group("trans")[2:-1]
            return self.alg.translation(serialize.parse_point(inner))
        if tok.group("op") == "(":
            e = self.expr()
            closing = self.take()
            if closing.group("op") != ")":
                raise UsageError("expected closing parenthesis")
            return e
        raise UsageError(f"unexpected token {tok.group(0)!r}")


def parse_element(alg, src):
    parser = _Parser(alg, _tokenize(src))
    e = parser.expr()
    if parser.peek() is not None:
        raise UsageError(f"trailing input {parser.peek().group(0)!r}")
    return e


def element_payload(alg, elem):
    terms = []
    for (ue, mono, w), c in elem.items():
        terms.append(
            {
                "coefficient": serialize.frac(c),
                "uExp": ue,
                "monomial": list(mono),
                "isometry": serialize.isometry(w),
            }
        )
    terms.sort(key=lambda t: json.dumps(t, sort_keys=True))
    return {"terms": terms}


def cmd_daha_eval(args):
    d = _datum_from_args(args)
    f = _facet_from_args(d, args)
    registry = load_registry(args.registry)
    levi = pseudo_levi_of(d, f)
    cusp = datum_for_type(registry, levi.cartan_type)
    grp = rel_weyl_group(d, f, cusp=cusp)
    alg = build_daha(grp)
    if args.nu is not None:
        alg = specialized_algebra(alg, serialize.parse_frac(args.nu))
    source = sys.stdin if args.expr is None else iter(args.expr)
    for line in source:
        line = line.strip()
        if not line:
            continue
        elem = parse_element(alg, line)
        _emit(args, element_payload(alg, elem))
    return 0


def build_parser():
    top = argparse.ArgumentParser(
        prog="gradedlie", description="exact alcove and Hecke-algebra computations"
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, grading=False, point=False, window=False):
        p.add_argument("--type", required=True, help="series letter, e.g. A")
        p.add_argument("--rank", type=int, required=True)
        p.add_argument("--twist", type=int, default=1)
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--registry", default=None)
        if grading:
            p.add_argument("--x", default=None, help="integer coordinates, comma separated")
            p.add_argument("--m", type=int, default=None)
            p.add_argument("--eta", type=int, default=None)
        if point:
            p.add_argument(
                "--point", "--facet-point", dest="point", default=None,
                help="rational coordinates, comma separated",
            )
        if window:
            p.add_argument("--window", type=int, default=10)

    common(sub.add_parser("roots"))
    common(sub.add_parser("facet"), point=True)
    common(sub.add_parser("pseudolevi"), point=True)
    common(sub.add_parser("spiral"), grading=True, point=True, window=True)
    common(sub.add_parser("splitting"), grading=True, point=True)
    p_block = sub.add_parser("block")
    common(p_block, grading=True)
    p_block.add_argument("--base-facet", dest="base_facet", required=True)
    p_block.add_argument("--depth", type=int, default=2)
    common(sub.add_parser("relweyl"), point=True)
    p_daha = sub.add_parser("daha")
    daha_sub = p_daha.add_subparsers(dest="daha_command", required=True)
    p_eval = daha_sub.add_parser("eval")
    common(p_eval, point=True)
    p_eval.add_argument("--nu", default=None, help="specialize at u = -nu, delta = 1")
    p_eval.add_argument("--expr", action="append", default=None,
                        help="expression to evaluate (repeatable); default reads stdin")
    p_cusp = sub.add_parser("cuspidal")
    cusp_sub = p_cusp.add_subparsers(dest="cuspidal_command", required=True)
    common(cusp_sub.add_parser("validate"), point=True)
    return top


_COMMANDS = {
    "roots": cmd_roots,
    "facet": cmd_facet,
    "pseudolevi": cmd_pseudolevi,
    "spiral": cmd_spiral,
    "splitting": cmd_splitting,
    "block": cmd_block,
    "relweyl": cmd_relweyl,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "daha":
            return cmd_daha_eval(args)
        if args.command == "cuspidal":
            return cmd_cuspidal_validate(args)
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
