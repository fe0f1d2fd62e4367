"""Command line interface.

Machine-readable JSON goes to stdout, exactly one document per run;
human-readable summaries go to stderr and are suppressed by --json.
Exit codes: 0 success, 1 error, and for `census` 2 when no symmetry
exists and 3 when the query falls outside the classified range.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import ActionQuery, classification
from .complement import Branch, EmbeddingSpec, run_sweep, solve
from .errors import CyclactError
from .forms import (
    QuadraticModule,
    RingMatrix,
    RingVector,
    is_primitive,
    isometry_check,
    lambda_eval,
    mu_eval,
    ring_det,
    transvection,
    verify_lagrangian_complement,
)
from .groupring import (
    FormParameterKind,
    GroupRingElement,
    augmentation,
    exact_divide,
    ideal_normalize,
)
from .selftest import run_selftest
from .spectral import e2_page, parse_class, spin_line_report, steenrod_square


def _emit(args, payload: dict, human: str = "") -> None:
    json.dump(payload, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")
    if human and not args.json:
        sys.stderr.write(human.rstrip() + "\n")


def _element(m: int, text: str) -> GroupRingElement:
    obj = json.loads(text)
    if isinstance(obj, dict):
        return GroupRingElement.from_json(obj)
    return GroupRingElement(m, [int(c) for c in obj])


def _vector(m: int, obj) -> RingVector:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return RingVector(
        [
            GroupRingElement.from_json(c)
            if isinstance(c, dict)
            else GroupRingElement(m, [int(a) for a in c])
            for c in obj
        ]
    )


def _matrix(m: int, text: str) -> RingMatrix:
    obj = json.loads(text)
    return RingMatrix([_vector(m, row).coords for row in obj])


def _module(args) -> QuadraticModule:
    return QuadraticModule(
        args.m, args.rank, args.sign, FormParameterKind[args.param]
    )


def _cmd_ring(args) -> int:
    m = args.m
    if args.ring_op == "mul":
        out = _element(m, args.x) * _element(m, args.y)
        _emit(args, {"product": out.to_json()}, f"product: {out!r}")
    elif args.ring_op == "conj":
        out = _element(m, args.x).conj()
        _emit(args, {"conj": out.to_json()}, f"conj: {out!r}")
    elif args.ring_op == "aug":
        val = augmentation(_element(m, args.x), mod2=args.mod2)
        _emit(args, {"augmentation": val}, f"augmentation: {val}")
    elif args.ring_op == "divide":
        res = exact_divide(_element(m, args.x), _element(m, args.d))
        _emit(
            args,
            {"quotient": res.quotient.to_json(), "ambiguous": res.ambiguous},
            f"quotient: {res.quotient!r} (ambiguous: {res.ambiguous})",
        )
    else:
        gens = [_element(m, json.dumps(g)) for g in json.loads(args.gens)]
        norm = ideal_normalize(gens)
        _emit(
            args,
            {"normData": norm.to_json()},
            f"u = {norm.u!r}, l = {norm.l}, a = {norm.a}, b = {norm.b}",
        )
    return 0


def _cmd_form(args) -> int:
    Q = _module(args)
    if args.form_op == "eval":
        out = lambda_eval(Q, _vector(Q.m, args.x), _vector(Q.m, args.y))
        _emit(args, {"lambda": out.to_json()}, f"lambda: {out!r}")
    elif args.form_op == "mu":
        out = mu_eval(Q, _vector(Q.m, args.x))
        _emit(args, {"mu": out.to_json()}, f"mu class: {out.rep!r} ({out.kind.value})")
    elif args.form_op == "primitive":
        flag = is_primitive(Q, _vector(Q.m, args.x))
        _emit(args, {"primitive": flag}, f"primitive: {flag}")
    elif args.form_op == "isometry":
        flag = isometry_check(Q, _matrix(Q.m, args.matrix))
        _emit(args, {"isometry": flag}, f"isometry: {flag}")
    elif args.form_op == "transvection":
        M = transvection(Q, tuple(args.base.split(",")), _element(Q.m, args.c))
        _emit(args, {"matrix": M.to_json()}, f"transvection on ({args.base})")
    elif args.form_op == "det":
        out = ring_det(_matrix(Q.m, args.matrix))
        _emit(args, {"det": out.to_json()}, f"det: {out!r}")
    else:
        S = [_vector(Q.m, v) for v in json.loads(args.S)]
        U = [_vector(Q.m, v) for v in json.loads(args.U)]
        cert = verify_lagrangian_complement(Q, S, U)
        _emit(args, {"certificate": cert.to_json()}, "complement verified")
    return 0


def _cmd_lagrangian(args) -> int:
    if args.lag_op == "solve":
        text = sys.stdin.read() if args.spec == "-" else args.spec
        obj = json.loads(text)
        obj.setdefault("m", args.m)
        obj.setdefault("branch", args.branch)
        trace = solve(EmbeddingSpec.from_json(obj))
        human = [
            f"branch: {trace.branch.value}",
            f"steps: {', '.join(s.name for s in trace.steps) or '(none)'}",
            "U:",
        ]
        human.extend(f"  {v!r}" for v in trace.U)
        _emit(args, {"trace": trace.to_json()}, "\n".join(human))
    else:
        seed = args.sweep_seed if args.sweep_seed is not None else args.seed
        report = run_sweep(Branch.from_cli(args.branch), args.m, args.count, seed)
        human = (
            f"sweep {report.branch.value} m={report.m}: {report.solved} solved, "
            f"{report.exhausted} search-exhausted, {len(report.failures)} failures"
        )
        _emit(args, {"sweep": report.to_json()}, human)
        return 1 if report.failures else 0
    return 0


def _cmd_ahss(args) -> int:
    if args.ahss_op == "report":
        rep = spin_line_report(args.m, args.twisted)
        page = e2_page(args.m, args.twisted)
        lines = [f"6-line for m={args.m} twisted={args.twisted}:"]
        for step in rep.steps:
            lines.append(f"  {step['entry']}: {step['action']} [{step['provenance']}]")
        lines.append(f"conclusion: {'zero' if rep.conclusion_zero else 'undetermined'}")
        _emit(
            args,
            {"report": rep.to_json(), "e2": page.to_json()},
            "\n".join(lines),
        )
    else:
        c = parse_class(args.m, getattr(args, "cls"))
        out = steenrod_square(args.k, c)
        _emit(
            args,
            {"input": c.to_json(), "square": out.to_json()},
            f"Sq^{args.k}({c!r}) = {out!r}",
        )
    return 0


def _cmd_census(args) -> int:
    pont = None
    if args.pontryagin:
        pont = tuple(int(t) for t in args.pontryagin.split(","))
    report = classification(ActionQuery(args.n, args.m, args.g, pont))
    human = [f"exists: {report.exists} ({report.reason})"]
    if report.class_count is not None:
        human.append(
            f"classes: {report.class_count} up to {report.conjugation_kind} conjugation"
        )
    for d in report.quotient_descriptors:
        human.append(f"  model: {d}")
    for n in report.notes:
        human.append(f"  note: {n}")
    _emit(args, {"census": report.to_json()}, "\n".join(human))
    if report.parameterization == "OUT_OF_RANGE":
        return 3
    return 0 if report.exists else 2


def _cmd_selftest(args) -> int:
    seed = args.st_seed if args.st_seed is not None else args.seed
    jobs = args.st_jobs if args.st_jobs is not None else args.jobs
    summary = run_selftest(args.scope, seed, jobs)
    lines = [
        f"selftest scope={summary.scope} seed={summary.seed}: "
        f"{summary.passed} passed, {summary.failed} failed, "
        f"{summary.skipped} skipped"
    ]
    for suite in summary.suites:
        lines.append(
            f"  {suite.name}: {suite.passed}/{len(suite.cases)} passed"
            + (
                f", {len(suite.search_exhausted)} search-exhausted incidents"
                if suite.search_exhausted
                else ""
            )
        )
    _emit(args, {"selftest": summary.to_json()}, "\n".join(lines))
    return 1 if summary.failed else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclact")
    p.add_argument("--seed", type=int, default=0, help="global RNG seed")
    p.add_argument("--json", action="store_true", help="suppress human output")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    sub = p.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="group ring arithmetic")
    ring_sub = ring.add_subparsers(dest="ring_op", required=True)
    for name in ("mul", "conj", "aug", "divide", "normalize"):
        sp = ring_sub.add_parser(name)
        sp.add_argument("--m", type=int, required=True)
        if name == "mul":
            sp.add_argument("--x", required=True)
            sp.add_argument("--y", required=True)
        elif name in ("conj", "aug"):
            sp.add_argument("--x", required=True)
            if name == "aug":
                sp.add_argument("--mod2", action="store_true")
        elif name == "divide":
            sp.add_argument("--x", required=True)
            sp.add_argument("--d", required=True)
        else:
            sp.add_argument("--gens", required=True, help="JSON list of coeff lists")

    form = sub.add_parser("form", help="hyperbolic form computations")
    form_sub = form.add_subparsers(dest="form_op", required=True)
    for name in ("eval", "mu", "primitive", "isometry", "transvection", "det", "verify"):
        sp = form_sub.add_parser(name)
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--rank", type=int, default=2)
        sp.add_argument("--sign", type=int, default=-1, choices=(-1, 1))
        sp.add_argument("--param", default="TILDE", choices=("TILDE", "PLUS", "MINUS"))
        if name == "eval":
            sp.add_argument("--x", required=True)
            sp.add_argument("--y", required=True)
        elif name in ("mu", "primitive"):
            sp.add_argument("--x", required=True)
        elif name in ("isometry", "det"):
            sp.add_argument("--matrix", required=True)
        elif name == "transvection":
            sp.add_argument("--base", required=True, help="label pair, e.g. e1,f2")
            sp.add_argument("--c", required=True)
        else:
            sp.add_argument("--S", required=True)
            sp.add_argument("--U", required=True)

    lag = sub.add_parser("lagrangian", help="complement solver and sweeps")
    lag_sub = lag.add_subparsers(dest="lag_op", required=True)
    sp = lag_sub.add_parser("solve")
    sp.add_argument("--branch", required=True, choices=("odd-m", "even-m", "even-n"))
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--spec", required=True, help="JSON with a1, a2, b2; - for stdin")
    sp = lag_sub.add_parser("sweep")
    sp.add_argument("--branch", required=True, choices=("odd-m", "even-m", "even-n"))
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--seed", type=int, default=None, dest="sweep_seed")

    ahss = sub.add_parser("ahss", help="cohomology and the 6-line report")
    ahss_sub = ahss.add_subparsers(dest="ahss_op", required=True)
    sp = ahss_sub.add_parser("report")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--twisted", action="store_true")
    sp = ahss_sub.add_parser("sq")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--class", required=True, dest="cls", help='e.g. "x^3" or "xy^2"')

    census = sub.add_parser("census", help="existence and classification")
    census.add_argument("--n", type=int, required=True)
    census.add_argument("--m", type=int, required=True)
    census.add_argument("--g", type=int, required=True)
    census.add_argument("--pontryagin", default="", help="comma-separated residues")

    st = sub.add_parser("selftest", help="run the built-in suites")
    st.add_argument(
        "--scope",
        default="all",
        choices=("ring", "forms", "lagrangian", "ahss", "census", "all"),
    )
    st.add_argument("--seed", type=int, default=None, dest="st_seed")
    st.add_argument("--jobs", type=int, default=None, dest="st_jobs")
    return p


_DISPATCH = {
    "ring": _cmd_ring,
    "form": _cmd_form,
    "lagrangian": _cmd_lagrangian,
    "ahss": _cmd_ahss,
    "census": _cmd_census,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except CyclactError as exc:
        json.dump(
            {"error": type(exc).__name__, "detail": str(exc)},
            sys.stdout,
            sort_keys=True,
        )
        sys.stdout.write("\n")
        if not args.json:
            sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
