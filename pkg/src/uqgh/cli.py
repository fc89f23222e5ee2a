"""Command line interface.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import linalg as la
from .center import central_character, is_central
from .field import RatFunc
from .hopf import check_hopf_axioms, default_sample
from .parser import ParseError, parse_element, parse_scalar
from .pbw import render_element
from .rep import (
    ExtensionParams,
    HighestWeightData,
    NotCompletelyReducibleError,
    check_module,
    decompose,
    dual_module,
    ext_dims_torus,
    extension_module,
    highest_weight_vectors,
    is_split_selfextension,
    simple_module,
    tensor,
    twisted_dual,
)
from .serialize import dumps, load, module_to_dict
from .verma import DEFAULT_CUTOFF, is_simple_verma, maximal_vectors, simple_quotient_data, verma, verma_hom

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _scalar(text: str) -> RatFunc:
    return parse_scalar(text)


def _tuple(text: str, k: int) -> list[RatFunc]:
    parts = text.split(",")
    if len(parts) != k:
        raise UsageError(f"expected {k} comma-separated values, got {text!r}")
    return [_scalar(p) for p in parts]


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def _terms(a) -> list[dict]:
    return [{"monomial": list(m), "coefficient": str(a.coefficient(m))} for m in a.support()]


def _render_matrix(m) -> str:
    return "\n".join("  [" + ", ".join(str(x) for x in row) + "]" for row in m)


def _module_text(M, title: str) -> str:
    lines = [f"{title} (dim {M.dim})", "basis: " + ", ".join(M.basis_labels)]
    for name in ("E", "F", "K", "g", "h"):
        lines.append(f"{name}:")
        lines.append(_render_matrix(M.action[name]))
    return "\n".join(lines)


# -- subcommands ------------------------------------------------------------------


def cmd_normalize(args) -> int:
    a = parse_element(args.expr)
    _emit(args, {"input": args.expr, "normal_form": render_element(a), "terms": _terms(a)}, render_element(a))
    return EXIT_OK


def cmd_central(args) -> int:
    a = parse_element(args.expr)
    ok = is_central(a)
    _emit(args, {"input": args.expr, "central": ok}, "true" if ok else "false")
    return EXIT_OK


def cmd_hopf_check(args) -> int:
    sample, pairs = default_sample(n_random=args.samples, seed=args.seed)
    report = check_hopf_axioms(sample, pairs)
    _emit(args, report.to_dict() | {"seed": args.seed, "samples": args.samples}, report.summary())
    return EXIT_OK if report.ok else EXIT_FAIL


def _hw_args(args) -> HighestWeightData:
    if args.eps not in (1, -1):
        raise UsageError("--eps must be 1 or -1")
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    return HighestWeightData(args.eps, args.n, _scalar(args.alpha), _scalar(args.beta))


def cmd_simple(args) -> int:
    d = _hw_args(args)
    M = simple_module(d)
    if args.json:
        print(dumps(M))
    else:
        print(_module_text(M, str(d)))
    return EXIT_OK


def cmd_tensor_decompose(args) -> int:
    M, N = load(args.first), load(args.second)
    T = tensor(M, N)
    try:
        parts = decompose(T)
    except NotCompletelyReducibleError as exc:
        _emit(args, {"dim": T.dim, "error": str(exc), "defect": exc.defect}, f"not completely reducible: {exc}")
        return EXIT_FAIL
    items = sorted(parts.items(), key=lambda kv: -kv[0].n)
    payload = {
        "dim": T.dim,
        "constituents": [d.to_dict() | {"multiplicity": k} for d, k in items],
    }
    lines = [f"dim {T.dim} = " + " + ".join(str(d.dim) for d, k in items for _ in range(k))]
    lines += [f"{k} x {d}" for d, k in items]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_dual(args) -> int:
    M = load(args.module)
    D = twisted_dual(M) if args.twisted else dual_module(M)
    if args.json:
        print(dumps(D))
    else:
        print(_module_text(D, "twisted dual" if args.twisted else "dual"))
    return EXIT_OK


def cmd_ext_dims(args) -> int:
    a, b = _tuple(args.p, 2)
    a2, b2 = _tuple(args.pprime, 2)
    dims = ext_dims_torus(a, b, a2, b2)
    _emit(args, {"ext": list(dims)}, "Ext^0, Ext^1, Ext^2 = " + ", ".join(map(str, dims)))
    return EXIT_OK


def cmd_verma(args) -> int:
    a, b, c = _scalar(args.a), _scalar(args.b), _scalar(args.c)
    V = verma(a, b, c, args.cutoff)
    mv = maximal_vectors(V)
    verdict = is_simple_verma(a, b, c, args.cutoff)
    quotient = simple_quotient_data(a, b, c)
    payload = {
        "parameters": {"a": str(a), "b": str(b), "c": str(c)},
        "cutoff": args.cutoff,
        "maximal_vectors": [
            {"depth": m.depth, "weight": [str(x) for x in m.weight], "epsilon": m.epsilon} for m in mv
        ],
        "simplicity": {"status": verdict.status, "depth": verdict.depth, "epsilon": verdict.epsilon},
        "simple_quotient": quotient.to_dict() if quotient else None,
    }
    lines = [f"Verma V({a}, {b}, {c}) truncated at {args.cutoff}", "maximal vectors:"]
    for m in mv:
        tag = "generator" if m.depth == 0 else f"eps {m.epsilon:+d}"
        lines.append(f"  depth {m.depth}: weight ({', '.join(str(x) for x in m.weight)})  {tag}")
    lines.append(f"simplicity: {verdict}")
    lines.append(f"simple quotient: {quotient if quotient else 'infinite-dimensional'}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verma_hom(args) -> int:
    vals = [_scalar(x) for x in args.params]
    res = verma_hom(*vals, cutoff=args.cutoff)
    payload = {"status": res.status, "degree": res.degree, "epsilon": res.epsilon, "injective": res.injective}
    if res.status == "hom":
        text = f"hom of degree {res.degree} (eps {res.epsilon:+d}), injective on truncation: {res.injective}"
    elif res.status == "inconclusive":
        text = f"inconclusive at cutoff {args.cutoff} (degree {res.degree} needed)"
    else:
        text = "none"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_char(args) -> int:
    point = _tuple(args.point, 3)
    z = parse_element(args.expr)
    if not is_central(z):
        _emit(args, {"error": "element is not central"}, "error: element is not central")
        return EXIT_FAIL
    val = central_character(point, z)
    _emit(args, {"point": [str(x) for x in point], "value": str(val)}, str(val))
    return EXIT_OK


def cmd_equitable_check(args) -> int:
    from .equitable import verify_equitable_hopf, verify_equitable_relations, verify_round_trip

    reports = [verify_equitable_relations(), verify_round_trip(), verify_equitable_hopf()]
    ok = all(r.ok for r in reports)
    _emit(args, {"ok": ok, "reports": [r.to_dict() for r in reports]}, "\n".join(r.summary() for r in reports))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_extension(args) -> int:
    d = _hw_args(args)
    p = ExtensionParams(_scalar(args.x), _scalar(args.y))
    M = extension_module(d, p)
    report = check_module(M)
    sub = [la.identity(M.dim)[i] for i in range(d.n + 1)]
    split = is_split_selfextension(M, sub)
    hw = highest_weight_vectors(M)
    if args.json:
        payload = {
            "module": module_to_dict(M),
            "relations_ok": report.ok,
            "split": split,
            "non_diagonalizable": list(hw.non_diagonalizable),
        }
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(_module_text(M, f"extension of {d} by x={p.x}, y={p.y}"))
        print(f"relations: {'ok' if report.ok else 'FAILED at ' + str(report.failed_relation)}")
        print(f"split: {'yes' if split else 'no'}")
        if hw.non_diagonalizable:
            print("not diagonalizable on highest-weight space: " + ", ".join(hw.non_diagonalizable))
    return EXIT_OK if report.ok else EXIT_FAIL


# -- parser -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="uqgh", description="Exact computations in U_{g,h}.")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
        p.set_defaults(func=fn)
        return p

    p = add("normalize", cmd_normalize, "PBW normal form of an expression")
    p.add_argument("expr")
    p = add("central", cmd_central, "test whether an expression is central")
    p.add_argument("expr")
    p = add("hopf-check", cmd_hopf_check, "check the Hopf axioms on a seeded sample")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)

    def hw_opts(p):
        p.add_argument("--eps", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--alpha", required=True)
        p.add_argument("--beta", required=True)

    p = add("simple", cmd_simple, "the simple module V_{eps,n,alpha,beta}")
    hw_opts(p)
    p = add("tensor-decompose", cmd_tensor_decompose, "decompose a tensor product of two modules")
    p.add_argument("first")
    p.add_argument("second")
    p = add("dual", cmd_dual, "dual module (via the antipode, or the anti-involution with --twisted)")
    p.add_argument("module")
    p.add_argument("--twisted", action="store_true")
    p = add("ext-dims", cmd_ext_dims, "Ext dimensions between one-dimensional torus modules")
    p.add_argument("--p", required=True, metavar="ALPHA,BETA")
    p.add_argument("--pprime", required=True, metavar="ALPHA',BETA'")
    p = add("verma", cmd_verma, "maximal vectors and simplicity of a Verma module")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    p = add("verma-hom", cmd_verma_hom, "embedding V(a,b,c) -> V(a',b',c')")
    p.add_argument("params", nargs=6, metavar="P", help="a b c a' b' c'")
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    p = add("char", cmd_char, "central character of a central element")
    p.add_argument("--point", required=True, metavar="A,B,C")
    p.add_argument("expr")
    add("equitable-check", cmd_equitable_check, "verify the equitable presentation")
    p = add("extension", cmd_extension, "self-extension module of a simple module")
    hw_opts(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command in ("verma", "verma-hom") and args.cutoff < 1:
        print("uqgh: error: --cutoff must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except ParseError as exc:
        source = getattr(exc, "text", "")
        print(f"uqgh: parse error: {exc}", file=sys.stderr)
        if source:
            print(f"  {source}\n  {' ' * len(source.encode()[: exc.offset].decode(errors='ignore'))}^", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError, OSError) as exc:
        print(f"uqgh: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
