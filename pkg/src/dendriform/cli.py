"""Command-line front end.

    dendriform eval 'x <: (y :> z)' --model tridend
    dendriform derive 'x . y' --times 2 --lam 0
    dendriform enumerate --model dend -n 4
    dendriform suite --config suite.json
    dendriform koszul --kind q_tridendriform --q 2
    dendriform universal --model tridend --max-size 4

Results go to stdout, one per line: JSON objects with ``--json``, otherwise
a plain rendering of the same fields.  ``DENDRIFORM_LOG_LEVEL`` sets the
logging level and affects nothing else.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .diffalg import parse_monomial
from .errors import ConfigError, DendriformError
from .expr import eval_expr, free_symbols, parse_expr, print_expr
from .koszul import DUAL_KIND, verify_duality
from .qshuffle import TensorWord, parse_word
from .scalars import LAM, Q, LinComb, parse_parameter
from .suites import MODELS, make_model, run_suite
from .trees import (btree, enumerate_binary, enumerate_schroeder, make_alphabet, parse_tree,
                    serialize, stree)

LOG_ENV = "DENDRIFORM_LOG_LEVEL"


def _emit(records, as_json: bool, out=None):
    out = sys.stdout if out is None else out
    for rec in records:
        if as_json:
            out.write(json.dumps(rec, ensure_ascii=False) + "\n")
        else:
            out.write(_plain(rec) + "\n")


def _plain(rec: dict) -> str:
    head = []
    for key in ("status", "suite", "name"):
        if key in rec:
            head.append(str(rec[key]))
    rest = [f"{k}={_flat(v)}" for k, v in rec.items() if k not in ("status", "suite", "name")]
    return " ".join(head + rest)


def _flat(v) -> str:
    if isinstance(v, (dict, list)):
        return json.dumps(v, ensure_ascii=False)
    return str(v)


def _model_from_args(args):
    lam = parse_parameter(args.lam, LAM)
    q = parse_parameter(args.q, Q)
    return make_model(args.model, lam, q)


def _default_binding(model_name: str, name: str) -> LinComb:
    if model_name == "tridend":
        return LinComb.basis(stree(name))
    if model_name == "dend":
        return LinComb.basis(btree(name))
    return LinComb.basis(TensorWord((parse_monomial(name),)))


def _parse_binding(model_name: str, text: str) -> LinComb:
    if model_name == "qshuffle":
        return LinComb.basis(parse_word(text))
    return LinComb.basis(parse_tree(text))


def _bindings(args, expr) -> dict:
    out = {}
    for item in args.bind or []:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise ConfigError(f"--bind expects NAME=VALUE, got {item!r}")
        out[name.strip()] = _parse_binding(args.model, value.strip())
    # names left unbound stand for generators of the model
    for name in sorted(free_symbols(expr)):
        out.setdefault(name, _default_binding(args.model, name))
    return out


def _term_objects(value: LinComb) -> list:
    out = []
    for basis, coeff in value.items():
        if isinstance(basis, TensorWord):
            out.append({"coeff": str(coeff), "word": basis.to_json()})
        else:
            out.append({"coeff": str(coeff), "tree": serialize(basis)})
    return out


def _result_record(args, expr, value) -> dict:
    rec = {"model": args.model, "expr": print_expr(expr), "terms": len(value),
           "result": str(value)}
    if args.json:
        rec["term_list"] = _term_objects(value)
    return rec


def cmd_eval(args) -> int:
    expr = parse_expr(args.expr)
    model = _model_from_args(args)
    value = eval_expr(expr, model, _bindings(args, expr))
    _emit([_result_record(args, expr, value)], args.json)
    return 0


def cmd_derive(args) -> int:
    expr = parse_expr(args.expr)
    model = _model_from_args(args)
    value = eval_expr(expr, model, _bindings(args, expr))
    for _ in range(args.times):
        value = model.d(value)
    rec = _result_record(args, expr, value)
    rec["times"] = args.times
    _emit([rec], args.json)
    return 0


def cmd_enumerate(args) -> int:
    gens = [g for g in args.generators.split(",") if g]
    records = []
    if args.model == "qshuffle":
        from .suites import word_elements

        items = [str(next(iter(e._terms))) for e in word_elements(gens, args.max_order, args.n)
                 if len(next(iter(e._terms))) == args.n]
    elif args.n < 2:
        records.append({"model": args.model, "n": args.n, "count": 0,
                        "note": "the one-leaf tree is not a basis element"})
        _emit(records, args.json)
        return 0
    else:
        enum = enumerate_schroeder if args.model == "tridend" else enumerate_binary
        items = [str(t) for t in enum(make_alphabet(gens, args.max_order), args.n)]
    if not args.count_only:
        records.extend({"index": i, "basis": s} for i, s in enumerate(items))
    records.append({"model": args.model, "n": args.n, "count": len(items)})
    _emit(records, args.json)
    return 0


def _load_config(args) -> dict:
    if args.config:
        try:
            if args.config == "-":
                cfg = json.load(sys.stdin)
            else:
                with open(args.config, encoding="utf-8") as fh:
                    cfg = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config!r}: {exc}") from None
    else:
        cfg = {}
    for flag, key in (("model", "model"), ("max_size", "max_size"), ("max_order", "max_order"),
                      ("lam", "lam"), ("q", "q")):
        value = getattr(args, flag, None)
        if value is not None:
            cfg[key] = value
    if getattr(args, "generators", None):
        cfg["generators"] = [g for g in args.generators.split(",") if g]
    return cfg


def cmd_suite(args) -> int:
    cfg = _load_config(args)
    if args.suites:
        cfg["suites"] = [s for s in args.suites.split(",") if s]
    code, records = run_suite(cfg)
    _emit(records, args.json)
    return code


def cmd_universal(args) -> int:
    cfg = _load_config(args)
    cfg["suites"] = ["universal"]
    code, records = run_suite(cfg)
    _emit(records, args.json)
    return code


def cmd_koszul(args) -> int:
    kinds = [args.kind] if args.kind else ["dendriform", "q_tridendriform"]
    code = 0
    records = []
    for kind in kinds:
        rep = verify_duality(kind, DUAL_KIND[kind], args.q, args.dual_param)
        rep["status"] = "pass" if rep["equal"] else "fail"
        code |= 0 if rep["equal"] else 1
        records.append(rep)
    _emit(records, args.json)
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dendriform",
                                description="Exact computations in free differential "
                                            "(tri)dendriform algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, model_default="tridend", suite_like=False):
        sp.add_argument("--model", choices=MODELS, default=None if suite_like else model_default)
        sp.add_argument("--lam", default=None if suite_like else "sym",
                        help="weight of the derivation: 'sym' or a rational")
        sp.add_argument("--q", default=None if suite_like else "sym",
                        help="the parameter q: 'sym' or a rational")
        sp.add_argument("--json", action="store_true", help="emit JSON lines")

    sp = sub.add_parser("eval", help="evaluate a term")
    sp.add_argument("expr")
    sp.add_argument("--bind", action="append", metavar="NAME=VALUE",
                    help="bind a symbol to a tree (tree models) or a word such as 'a (x) b'")
    common(sp)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("derive", help="apply the derivation to a term")
    sp.add_argument("expr")
    sp.add_argument("--times", type=int, default=1)
    sp.add_argument("--bind", action="append", metavar="NAME=VALUE")
    common(sp)
    sp.set_defaults(func=cmd_derive)

    sp = sub.add_parser("enumerate", help="list basis trees or words")
    sp.add_argument("-n", type=int, required=True, help="leaves (trees) or length (words)")
    sp.add_argument("--generators", default="x")
    sp.add_argument("--max-order", type=int, default=0)
    sp.add_argument("--count-only", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_enumerate)

    for name, func, helptext in (("suite", cmd_suite, "run check suites from a config"),
                                 ("universal", cmd_universal, "check the universal maps")):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--config", help="JSON config file, or '-' for stdin")
        sp.add_argument("--max-size", type=int, default=None)
        sp.add_argument("--max-order", type=int, default=None)
        sp.add_argument("--generators", default=None)
        if name == "suite":
            sp.add_argument("--suites", default=None, help="comma-separated suite names")
        common(sp, suite_like=True)
        sp.set_defaults(func=func)

    sp = sub.add_parser("koszul", help="check Koszul duality of the quadratic relations")
    sp.add_argument("--kind", choices=("dendriform", "q_tridendriform"), default=None)
    sp.add_argument("--q", default="1")
    sp.add_argument("--dual-param", default=None)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_koszul)
    return p


def main(argv=None) -> int:
    level = os.environ.get(LOG_ENV, "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DendriformError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
