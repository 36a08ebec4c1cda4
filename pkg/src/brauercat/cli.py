"""Command-line interface: ``brauercat <verb> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
error (bad flags, unparsable expressions, arity mismatches, bad files).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import brauer, enhanced, homspace, oracle, serialize, tensors
from .brauer import ArityError, CapExceeded
from .enhanced import EnhancedMorphism, RewriteLimitError
from .expr import ExpressionSyntaxError, parse_expression
from .render import RenderLimitError, render_svg
from .scalars import rational_to_str

SUITES = ("relations", "reduction", "sigma", "delta", "dims", "so-inv")


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ output

def format_morphism(f: EnhancedMorphism) -> str:
    if f.source == 0 and f.target == 0:
        return rational_to_str(f.scalar())
    if f.is_zero():
        return "0"
    lines = []
    for d, c in f:
        pairs = ",".join(f"{a}-{b}" for a, b in d.pairs)
        legs = "" if d.delta_legs is None else " D(" + ",".join(map(str, d.delta_legs)) + ")"
        lines.append(f"{rational_to_str(c)}\t{f.source}->{f.target} [{pairs}]{legs}")
    return "\n".join(lines)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


# ------------------------------------------------------------------ inputs

def _need_m(args) -> int:
    if args.m is None:
        raise UsageError("--m is required")
    if args.m < 2:
        raise UsageError("--m must be at least 2")
    return args.m


def _inputs(args) -> list[EnhancedMorphism]:
    m = _need_m(args)
    out = [enhanced.normalize(parse_expression(e, m), m) for e in (args.expr or [])]
    for path in args.inp or []:
        loaded = serialize.load(path, m if _is_enhanced_file(path) else None)
        if not isinstance(loaded, EnhancedMorphism):
            loaded = EnhancedMorphism.from_brauer(loaded, m)
        out.append(loaded)
    if not out:
        raise UsageError("give at least one --expr or --in")
    return out


def _is_enhanced_file(path) -> bool:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError):
        return True
    return isinstance(doc, dict) and "m" in doc


def _write_morphism(f: EnhancedMorphism, args):
    if args.out:
        serialize.save(f, args.out)
    else:
        print(format_morphism(f))


# ------------------------------------------------------------------- verbs

def cmd_compose(args) -> int:
    items = _inputs(args)
    _write_morphism(enhanced.compose_all_enh(*items), args)
    return 0


def cmd_tensor(args) -> int:
    items = _inputs(args)
    _write_morphism(enhanced.tensor_all_enh(*items), args)
    return 0


def cmd_normalize(args) -> int:
    m = _need_m(args)
    if args.expr and len(args.expr) == 1 and not args.inp:
        f = enhanced.normalize(args.expr[0], m, strategy=args.strategy)
    else:
        items = _inputs(args)
        if len(items) != 1:
            raise UsageError("normalize takes exactly one input")
        f = enhanced.normalize(items[0], m, strategy=args.strategy)
    if args.max_terms is not None and len(f) > args.max_terms:
        raise UsageError(f"result has {len(f)} terms, more than --max-terms {args.max_terms}")
    _write_morphism(f, args)
    return 0


def cmd_eval(args) -> int:
    m = _need_m(args)
    if args.expr and not args.inp:
        if len(args.expr) != 1:
            raise UsageError("eval takes exactly one --expr")
        t = tensors.eval_expression(parse_expression(args.expr[0], m), m)
    else:
        items = _inputs(args)
        if len(items) != 1:
            raise UsageError("eval takes exactly one input")
        t = tensors.eval_morphism(items[0])
    if t.source == 0 and t.target == 0:
        _emit(rational_to_str(t.scalar()), args.out)
    else:
        _emit(json.dumps(t.to_json(), ensure_ascii=False), args.out)
    return 0


def cmd_dim_hom(args) -> int:
    m = _need_m(args)
    if args.s is None or args.t is None:
        raise UsageError("dim-hom needs --s and --t")
    route = args.route or "all"
    if route == "all":
        vals = homspace.dim_hom(m, args.s, args.t, "all")
        agree = vals["gram"] == vals["functor"] == vals["formula"]
        _emit(f"gram={vals['gram']} functor={vals['functor']} formula={vals['formula']} "
              f"agree={'true' if agree else 'false'}", args.out)
    else:
        _emit(f"{route}={homspace.dim_hom(m, args.s, args.t, route)}", args.out)
    return 0


def cmd_oracle(args) -> int:
    m = _need_m(args)
    if args.r is None:
        raise UsageError("oracle needs --r")
    space = oracle.invariant_space(m, args.r)
    _emit(f"dim={space.dim} dim_plus={space.dim_plus} dim_minus={space.dim_minus}", args.out)
    return 0


def cmd_d_table(args) -> int:
    m = _need_m(args)
    r_max = 6 if args.r is None else args.r
    _emit(oracle.d_table_csv(oracle.d_table(m, r_max)).rstrip("\n"), args.out)
    return 0


def cmd_render(args) -> int:
    items = _inputs(args)
    if len(items) != 1:
        raise UsageError("render takes exactly one input")
    svg = render_svg(items[0], args.max_terms or 50)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


# ------------------------------------------------------------------ verify

def _suite_relations(m, r_max):
    for row in enhanced.verify_defining_relations(m):
        yield row["relation"], row["engine"] and row["functor"], f"engine={row['engine']} functor={row['functor']}"


def _suite_reduction(m, r_max):
    for r in range(2, 6):
        rep = brauer.verify_reduction_lemma(r)
        yield f"reduction r={r}", rep["recursion"] and rep["trace"], f"recursion={rep['recursion']} trace={rep['trace']}"


def _suite_sigma(m, r_max):
    rep = enhanced.verify_sigma_vanishing(m)
    ok = rep["functor_zero"] and rep["pairings_zero"] and rep["sigma_m_nonzero"]
    yield f"S_{m + 1} vanishes, S_{m} does not", ok, (
        f"functor_zero={rep['functor_zero']} pairings_zero={rep['pairings_zero']} "
        f"sigma_m_nonzero={rep['sigma_m_nonzero']}")
    if (m + 1) * 2 <= homspace.SPANNING_CAP:
        k = homspace.sigma_in_kernel(m)
        yield f"S_{m + 1} in the Gram kernel", k["gram_null"] and k["functor_zero"], (
            f"gram_null={k['gram_null']} functor_zero={k['functor_zero']}")


def _suite_delta(m, r_max):
    rep = enhanced.delta_constraint_check(m)
    yield "falling factorial at m is m!", rep["falling_factorial_at_m"] == rep["m_factorial"], \
        f"value={rational_to_str(rep['falling_factorial_at_m'])}"
    yield "f_m(m) = 0", rep["f_m_at_m"] == 0, f"value={rational_to_str(rep['f_m_at_m'])}"
    yield "gcd is delta - m", rep["gcd_is_delta_minus_m"], f"gcd={rep['gcd']}"
    value = enhanced.normalize("D^*.D", m).scalar()
    functor = tensors.eval_expression(parse_expression("D^*.D", m), m).scalar()
    fact = rep["m_factorial"]
    yield "D^* D = m!", value == fact and functor == fact, f"engine={rational_to_str(value)} functor={rational_to_str(functor)}"


def _suite_dims(m, r_max):
    rows = homspace.dimension_report(m, r_max)
    for row in rows:
        yield (f"dims s={row['s']} t={row['t']}", row["agree"],
               f"gram={row['gram']} functor={row['functor']} formula={row['formula']} oracle={row['oracle']}")
    yield "gram value independent of the split", homspace.split_independent(rows), f"r<={r_max}"
    for r in range(r_max + 1):
        for s in range(r + 1):
            rep = homspace.sft_report(m, s, r - s)
            yield (f"sft s={s} t={r - s}", rep.ok,
                   f"gram_null={rep.gram_null_rank} functor_null={rep.functor_null_rank}")


def _suite_so_inv(m, r_max):
    for r in range(r_max + 1):
        if m ** r > oracle.DEFAULT_ORACLE_GUARD:
            break
        rep = oracle.verify_thm_so_inv(m, r)
        ok = rep["span_equal"] and rep.get("projection_matches", True)
        yield f"so-inv r={r}", ok, f"dim_plus={rep['dim_plus']} dim_minus={rep['dim_minus']}"
        fft = oracle.verify_fft(m, r)
        yield f"fft r={r}", fft["span_equal"], f"dim_plus={fft['dim_plus']}"
        dec = oracle.verify_decomposition(m, r)
        yield f"decomposition r={r}", dec["ok"], f"dim={dec['dim']}"


_SUITE_FUNCS = {
    "relations": _suite_relations,
    "reduction": _suite_reduction,
    "sigma": _suite_sigma,
    "delta": _suite_delta,
    "dims": _suite_dims,
    "so-inv": _suite_so_inv,
}


def cmd_verify(args) -> int:
    m = _need_m(args)
    suite = args.suite or "all"
    names = SUITES if suite == "all" else (suite,)
    r_max = 6 if args.r is None else args.r
    failures = 0
    lines = []
    for name in names:
        for label, ok, detail in _SUITE_FUNCS[name](m, r_max):
            failures += not ok
            lines.append(f"{'PASS' if ok else 'FAIL'} [{name}] {label}: {detail}")
    lines.append(f"{'ok' if not failures else 'failed'}: {failures} failure(s)")
    _emit("\n".join(lines), args.out)
    return 1 if failures else 0


# ------------------------------------------------------------------ parser

VERBS = {
    "compose": cmd_compose,
    "tensor": cmd_tensor,
    "normalize": cmd_normalize,
    "eval": cmd_eval,
    "dim-hom": cmd_dim_hom,
    "oracle": cmd_oracle,
    "verify": cmd_verify,
    "render": cmd_render,
    "d-table": cmd_d_table,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brauercat", description="Enhanced Brauer category toolkit")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")
    helps = {
        "compose": "compose inputs in application order (first input applied first)",
        "tensor": "tensor product of the inputs, left to right",
        "normalize": "rewrite an expression to normal form",
        "eval": "tensor image of an expression or morphism file",
        "dim-hom": "dimension of Hom(s, t) by the chosen route",
        "oracle": "brute-force invariant dimensions in V^r",
        "verify": "run verification suites",
        "render": "draw a morphism as SVG",
        "d-table": "CSV table of d(r) = dim of O(m)-invariants in V^r",
    }
    for verb in VERBS:
        p = sub.add_parser(verb, help=helps[verb])
        p.add_argument("--m", type=int)
        p.add_argument("--s", type=int)
        p.add_argument("--t", type=int)
        p.add_argument("--r", type=int)
        p.add_argument("--route", choices=("gram", "functor", "formula", "all"))
        p.add_argument("--suite", choices=SUITES + ("all",))
        p.add_argument("--expr", action="append")
        p.add_argument("--in", dest="inp", action="append")
        p.add_argument("--out")
        p.add_argument("--max-terms", type=int)
        p.add_argument("--strategy", choices=("innermost", "outermost"), default="innermost")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return VERBS[args.verb](args)
    except (UsageError, ExpressionSyntaxError, ArityError, CapExceeded, serialize.SchemaError,
            RenderLimitError, RewriteLimitError, MemoryError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, UsageError):
            parser.print_usage(sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
