"""Command-line front end: ``fpsgroup <verb> [options] operands``.

Exit status is 0 on success, 1 for usage and parse errors, 2 for domain
errors (capability violations, failed preconditions, kernel disagreement).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import endomorphisms as endo
from .bench import format_csv, run_bench
from .checks import SUITES, run_suites
from .groups import (
    commutator,
    conjugate,
    element_order,
    iter_quotient,
    power,
    separating_quotient,
)
from .lie import VectorField, exp_field, format_field, log_series, parse_field, theta_star, witt_bracket
from .rings import DomainError, NotDivisible, Ring, ring_from_selector
from .roots import kth_root
from .series import (
    TruncatedSeries,
    compose,
    depth,
    format_series,
    invert,
    parse_series,
    project,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# rendering


def _series_record(f: TruncatedSeries) -> dict:
    return {
        "ring": f.ring.selector,
        "precision": f.precision,
        "coeffs": [f.ring.format(c) for c in f.coeffs],
    }


def _field_record(v: VectorField) -> dict:
    return {
        "ring": v.ring.selector,
        "degree_bound": v.degree_bound,
        "coeffs": [v.ring.format(c) for c in v.coeffs],
    }


def render(result: Any, args: argparse.Namespace) -> str:
    structured = getattr(args, "structured", False)
    as_list = getattr(args, "list", False)
    if isinstance(result, TruncatedSeries):
        if structured:
            return json.dumps(_series_record(result), sort_keys=True)
        if as_list:
            return format_series(result, as_list=True)
        return f"{format_series(result)} (mod x^{result.precision + 2})"
    if isinstance(result, VectorField):
        if structured:
            return json.dumps(_field_record(result), sort_keys=True)
        if as_list:
            return format_field(result, as_list=True)
        return f"{format_field(result)} (mod e{result.degree_bound + 1})"
    if structured:
        return json.dumps(result, sort_keys=True)
    return str(result)


# ---------------------------------------------------------------------------
# operand handling


def _ring_of(selector: str) -> Ring:
    try:
        return ring_from_selector(selector)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _ring(args: argparse.Namespace) -> Ring:
    return _ring_of(args.ring)


def _series(text: str, args: argparse.Namespace) -> TruncatedSeries:
    ring = _ring(args)
    if args.prec is None and not text.strip().startswith("["):
        raise UsageError("--prec is required for polynomial series literals")
    try:
        return parse_series(text, ring, args.prec)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _field(text: str, args: argparse.Namespace) -> VectorField:
    ring = _ring(args)
    if args.prec is None and not text.strip().startswith("["):
        raise UsageError("--prec is required for vector field literals")
    try:
        return parse_field(text, ring, args.prec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _need(args: argparse.Namespace, name: str) -> Any:
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--{name} is required for {args.verb}")
    return value


def _arity(args: argparse.Namespace, n: int | tuple[int, int]) -> list[str]:
    lo, hi = (n, n) if isinstance(n, int) else n
    ops = args.operands
    if not lo <= len(ops) <= hi:
        want = str(lo) if lo == hi else f"{lo}..{hi}"
        raise UsageError(f"{args.verb} takes {want} operand(s), got {len(ops)}")
    return ops


# ---------------------------------------------------------------------------
# verbs


def _compose(args):
    ops = _arity(args, (2, 64))
    fs = [_series(t, args) for t in ops]
    out = fs[0]
    for g in fs[1:]:
        out = compose(out, g)
    return out


def _unary(fn):
    def run(args):
        (text,) = _arity(args, 1)
        return fn(_series(text, args), args)

    return run


def _binary(fn):
    def run(args):
        a, b = _arity(args, 2)
        return fn(_series(a, args), _series(b, args))

    return run


def _depth(f, args):
    n, saturated = depth(f)
    if args.structured:
        return {"depth": n, "saturated": saturated}
    return f"depth >= {n} (saturated at precision {f.precision})" if saturated else f"depth {n}"


def _project(f, args):
    return project(f, _need(args, "n"))


def _dilate(f, args):
    t = _need(args, "t")
    try:
        return endo.dilate(f, f.ring.parse(t))
    except ValueError as exc:
        raise UsageError(f"bad --t value ({exc})") from None


def _root(f, args):
    return kth_root(f, _need(args, "k"))


def _order(f, args):
    order = element_order(f, args.max_iter)
    if args.structured:
        return {"order": order}
    return "unknown" if order is None else str(order)


def _separate(f, args):
    w = separating_quotient(f, _need(args, "p"))
    if args.structured:
        return {"p": w.p, "j": w.j, "m": w.m, "image": _series_record(w.image)}
    return str(w)


def _exp(args):
    (text,) = _arity(args, 1)
    return exp_field(_field(text, args))


def _bracket(args):
    a, b = _arity(args, 2)
    return witt_bracket(_field(a, args), _field(b, args))


def _theta_star(args):
    (text,) = _arity(args, 1)
    return theta_star(_field(text, args), _need(args, "s"))


def _enumerate(args):
    _arity(args, 0)
    if args.p is not None:  # --p/--j select Z/p^j directly
        ring = _ring_of(f"mod:{args.p ** (args.j or 1)}")
    else:
        ring = _ring(args)
    m = _need(args, "prec")
    lines = [format_series(f, as_list=True) for f in iter_quotient(ring, m)]
    if args.structured:
        return {"ring": ring.selector, "precision": m, "count": len(lines), "elements": lines}
    return "\n".join(lines)


def _beta_table(args):
    _arity(args, 0)
    return endo.binomial_root_table(_need(args, "s"), _need(args, "n")).lines()


def _verify(args):
    _arity(args, 0)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    try:
        results = run_suites(names, count=args.count, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    width = max(len(f"{r.suite}/{r.name}") for r in results)
    lines = [f"{'check':<{width}}  cases  status"]
    for r in results:
        status = "ok" if r.ok else f"FAIL {r.detail}"
        lines.append(f"{r.suite + '/' + r.name:<{width}}  {r.cases:>5}  {status}")
    failed = sum(not r.ok for r in results)
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    text = "\n".join(lines)
    if failed:
        raise _Failed(text)
    return text


class _Failed(DomainError):
    pass


def _bench(args):
    _arity(args, 0)
    ring = _ring(args)
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes {args.sizes!r}") from None
    kernels = [k.strip() for k in args.kernels.split(",") if k.strip()]
    try:
        rows = run_bench(sizes, ring, kernels, args.reps, args.seed, args.identity)
    except ValueError as exc:
        if isinstance(exc, DomainError):
            raise
        raise UsageError(str(exc)) from None
    return format_csv(rows)


VERBS = {
    "compose": _compose,
    "invert": _unary(lambda f, a: invert(f)),
    "power": _unary(lambda f, a: power(f, _need(a, "k"))),
    "commutator": _binary(commutator),
    "conjugate": _binary(conjugate),
    "depth": _unary(_depth),
    "project": _unary(_project),
    "dilate": _unary(_dilate),
    "compress": _unary(lambda f, a: endo.compress(f, _need(a, "s"))),
    "decompress": _unary(lambda f, a: endo.decompress(f, _need(a, "s"))),
    "theta": _unary(lambda f, a: endo.theta_only(f, _need(a, "s"))),
    "root": _unary(_root),
    "exp": _exp,
    "log": _unary(lambda f, a: log_series(f)),
    "bracket": _bracket,
    "theta-star": _theta_star,
    "enumerate": _enumerate,
    "order": _unary(_order),
    "separate": _unary(_separate),
    "beta-table": _beta_table,
    "verify": _verify,
    "bench": _bench,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fpsgroup", description="Exact computations in the formal power series substitution group.")
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("operands", nargs="*", help="series or vector-field literals")
    p.add_argument("--ring", default="int", help="int | rat | mod:<n> | padic:<p>:<N> | erdos")
    p.add_argument("--prec", type=int, help="precision m (number of coefficients after x)")
    for flag in ("s", "k", "p", "j", "n"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--t", help="dilation parameter, a ring literal")
    p.add_argument("--list", action="store_true", help="print series as coefficient lists")
    p.add_argument("--structured", action="store_true", help="print one JSON record")
    p.add_argument("--max-iter", type=int, dest="max_iter")
    p.add_argument("--suite", default="all")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sizes", default="16,64")
    p.add_argument("--kernels", default="horner,power-table")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--identity", action="store_true", help="bench the identity composition")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_intermixed_args(argv)
    if args.prec is not None and args.prec < 0:
        parser.error("--prec must be non-negative")
    try:
        out = render(VERBS[args.verb](args), args)
    except UsageError as exc:
        print(f"fpsgroup: error: {exc}", file=sys.stderr)
        return 1
    except _Failed as exc:
        print(str(exc))
        return 2
    except (DomainError, NotDivisible) as exc:
        print(f"fpsgroup: error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
