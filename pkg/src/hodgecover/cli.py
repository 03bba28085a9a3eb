"""Command-line interface: analyze, hodge, bound, euler, local, selftest.

Exit codes: 0 computed, 2 hypotheses fail (partial results), 3 invalid
input, 4 internal invariant violation or failed self-test.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from hodgecover.arrangement import ArrangementError, generic_arrangement
from hodgecover.bounds import (
    HypothesisFailure,
    base_euler,
    default_level,
    dim_h_nt,
    euler_cover,
    hodge_cycle_bound,
    theorem_report,
)
from hodgecover.characters import CharTableError, characters_abelian
from hodgecover.cover import CoverError, InvariantViolation, cyclic_cover
from hodgecover.documents import (
    InputError,
    build_spec,
    char_table_option,
    hodge_table_option,
    load_document,
)
from hodgecover.hodge import EigenHodgeTable, HodgeUnavailable, eigen_hodge, hrr_table
from hodgecover.selftest import run_selftest
from hodgecover.toric import ExponentData, ToricError, local_abelian_model, reduce_exponents, saturation_hilbert_basis

EXIT_OK = 0
EXIT_HYPOTHESES = 2
EXIT_INPUT = 3
EXIT_INVARIANT = 4


@dataclass
class RunResult:
    command: str
    inputs: dict
    outputs: Any
    diagnostics: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK
    text: str = ""

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "input": self.inputs,
            "output": self.outputs,
            "diagnostics": self.diagnostics,
            "exit_code": self.exit_code,
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), sort_keys=True, indent=2)
        header = f"# {self.command} " + json.dumps(self.inputs, sort_keys=True, separators=(",", ":"))
        parts = [header, self.text] if self.text else [header]
        parts += [f"! {d}" for d in self.diagnostics]
        return "\n".join(parts)


# ---------------------------------------------------------------------------
# rendering helpers


def _label_text(label) -> str:
    return "(" + ",".join(map(str, label)) + ")" if isinstance(label, tuple) else str(label)


def hodge_text(table: EigenHodgeTable) -> str:
    n = table.n
    width = max(3, max(len(str(table.h(p, q, c))) for c in table.characters for p in range(n + 1) for q in range(n + 1)))
    lines = []
    for c in table.characters:
        lines.append(f"character {_label_text(c)} [{table.provenance[c]}]")
        lines.append("     " + " ".join(f"q={q}".rjust(width + 2) for q in range(n + 1)))
        for p in range(n + 1):
            lines.append(f"p={p}  " + " ".join(str(table.h(p, q, c)).rjust(width + 2) for q in range(n + 1)))
    return "\n".join(lines)


def _unavailable(command: str, inputs: dict, spec, exc: HodgeUnavailable) -> RunResult:
    e = euler_cover(spec)
    return RunResult(
        command,
        inputs,
        {"euler_characteristic": e, "hodge": None},
        [str(exc)],
        EXIT_HYPOTHESES,
        f"Euler characteristic e(Y): {e}",
    )


def _resolved(path: str, doc: dict, spec=None, **flags) -> dict:
    out = {"path": path, "document": doc}
    if spec is not None:
        out["cover"] = spec.to_json()
    out.update({k: v for k, v in flags.items() if v is not None})
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_analyze(path: str) -> RunResult:
    doc = load_document(path)
    spec = build_spec(doc)
    inputs = _resolved(path, doc, spec)
    report = theorem_report(spec, char_table_option(doc))
    diagnostics = list(report.hodge_failures)
    if report.cover_hypotheses is not None and not report.cover_hypotheses.passed:
        h = report.cover_hypotheses
        if h.offending_multiplicities:
            diagnostics.append(f"multiplicities not coprime to d: {list(h.offending_multiplicities)}")
        if h.offending_incidences:
            diagnostics.append(f"essential incidence numbers not coprime to d: {list(h.offending_incidences)}")
    code = EXIT_HYPOTHESES if report.hypotheses_failed else EXIT_OK
    return RunResult("analyze", inputs, report.to_json(), diagnostics, code, report.to_text())


def cmd_hodge(path: str) -> RunResult:
    doc = load_document(path)
    spec = build_spec(doc)
    inputs = _resolved(path, doc, spec)
    try:
        table = eigen_hodge(spec)
        other = hrr_table(spec)
    except HodgeUnavailable as exc:
        return _unavailable("hodge", inputs, spec, exc)
    agree = table.same_numbers(other)
    outputs = {"table": table.to_json(), "hrr_table": other.to_json(), "routes_agree": agree}
    text = hodge_text(table) + f"\nroutes agree: {'yes' if agree else 'no'}"
    if not agree:
        raise InvariantViolation("generating-function and HRR tables disagree")
    return RunResult("hodge", inputs, outputs, [], EXIT_OK, text)


def cmd_bound(path: str, degree: int | None, level: int | None) -> RunResult:
    doc = load_document(path)
    options = doc.get("options", {})
    degree = degree if degree is not None else options.get("degree")
    level = level if level is not None else options.get("level")
    spec = None
    if "hodge_table" in options:
        chars = char_table_option(doc)
        if chars is None:
            raise InputError("at /options: a supplied hodge_table needs a char_table")
        table = hodge_table_option(doc, chars)
    else:
        spec = build_spec(doc)
        chars = characters_abelian(spec.group)
        try:
            table = eigen_hodge(spec)
        except HodgeUnavailable as exc:
            return _unavailable("bound", _resolved(path, doc, spec), spec, exc)
    i = table.n if degree is None else degree
    k = default_level(i) if level is None else level
    inputs = _resolved(path, doc, spec, degree=i, level=k)
    try:
        report = hodge_cycle_bound(table, chars, i, k)
    except CharTableError as exc:
        raise InputError(str(exc)) from None
    text = "\n".join(
        [
            f"degree i: {i}",
            f"level k: {k}",
            f"dim H^i_nt: {report.dim_nt}",
            f"sigma of the excluded band: {report.sigma}",
            f"bound: {report.bound}" + (f" (raw {report.raw})" if report.raw != report.bound else ""),
            f"value with the per-piece band p - q >= k: {report.per_piece_value}",
        ]
    )
    return RunResult("bound", inputs, report.to_json(), [], EXIT_OK, text)


def cmd_euler(path: str) -> RunResult:
    doc = load_document(path)
    spec = build_spec(doc)
    inputs = _resolved(path, doc, spec)
    e, e0 = euler_cover(spec), base_euler(spec)
    outputs: dict[str, Any] = {"euler_characteristic": e, "base_euler_characteristic": e0}
    lines = [f"e(Y): {e}", f"e(base): {e0}"]
    try:
        dim = dim_h_nt(spec)
    except HypothesisFailure as exc:
        outputs["dim_h_nt"] = None
        return RunResult("euler", inputs, outputs, [str(exc)], EXIT_HYPOTHESES, "\n".join(lines))
    outputs["dim_h_nt"] = dim
    lines.append(f"dim H^n_nt: {dim}")
    return RunResult("euler", inputs, outputs, [], EXIT_OK, "\n".join(lines))


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def cmd_local(exponents: str | None, degree: int | None, gamma: str | None) -> RunResult:
    outputs: dict[str, Any] = {}
    lines: list[str] = []
    inputs: dict[str, Any] = {}
    if exponents is None and gamma is None:
        raise InputError("local needs --exponents with --degree, or --gamma")
    if exponents is not None:
        if degree is None:
            raise InputError("--exponents needs --degree")
        data = ExponentData(tuple(_int_list(exponents)), degree)
        inputs["exponent_data"] = data.to_json()
        red = reduce_exponents(data)
        outputs["reduction"] = red.to_json()
        lines.append(
            f"reduction: {red.components} isomorphic component(s), {red.smooth_factors} smooth factor(s), "
            f"reduced model y^{red.reduced.degree} = "
            + " ".join(f"x{j + 1}^{a}" for j, a in enumerate(red.reduced.exponents))
        )
        if red.reduced.exponents:
            sg = saturation_hilbert_basis(red.reduced)
            outputs["semigroup"] = sg.to_json()
            lines.append("Hilbert basis: " + " ".join(str(list(v)) for v in sg.hilbert_basis))
            lines.append(f"semigroup saturated: {'yes' if sg.saturated else 'no'}")
            verdict = "smooth" if sg.smooth else "toric with finite quotient singularities"
        else:
            verdict = "smooth"
        outputs["verdict"] = verdict
        lines.append(f"verdict: {verdict}")
    if gamma is not None:
        rows = [_int_list(r) for r in gamma.split(";")]
        inputs["gamma"] = rows
        model = local_abelian_model(rows)
        outputs["abelian_model"] = model.to_json()
        for d, row in model.nontrivial_factors:
            rhs = " ".join(f"x{j + 1}^{a}" for j, a in enumerate(row) if a) or "1"
            lines.append(f"y^{d} = {rhs}")
        lines.append(f"index: {model.index}")
    return RunResult("local", inputs, outputs, [], EXIT_OK, "\n".join(lines))


def cmd_selftest(seed: int) -> RunResult:
    checks = run_selftest(seed)
    failed = [c.name for c in checks if not c.passed]
    lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}" for c in checks]
    diagnostics = [f"identity failed: {name}" for name in failed]
    code = EXIT_INVARIANT if failed else EXIT_OK
    return RunResult("selftest", {"seed": seed}, [c.to_json() for c in checks], diagnostics, code, "\n".join(lines))


# ---------------------------------------------------------------------------
# sweeps

_SWEEP_TERM = re.compile(r"^\s*([dn])\s*=\s*(\d+)(?:\s*\.\.\s*(\d+))?\s*$")


def parse_sweep(text: str) -> list[tuple[int, int]]:
    ranges = {}
    for term in text.split(","):
        m = _SWEEP_TERM.match(term)
        if m is None:
            raise InputError(f"bad sweep term {term!r}; expected d=LO..HI or n=LO..HI")
        lo = int(m.group(2))
        hi = int(m.group(3)) if m.group(3) else lo
        if hi < lo:
            raise InputError(f"empty sweep range {term!r}")
        ranges[m.group(1)] = range(lo, hi + 1)
    if set(ranges) != {"d", "n"}:
        raise InputError("sweep needs both d and n ranges")
    if ranges["d"].start < 2 or ranges["n"].start < 1:
        raise InputError("sweep needs d >= 2 and n >= 1")
    return [(d, n) for d in ranges["d"] for n in ranges["n"]]


def _sweep_point(point: tuple[int, int]) -> tuple[dict, str, int]:
    d, n = point
    spec = cyclic_cover(generic_arrangement(n, d), d)
    try:
        report = theorem_report(spec)
    except InvariantViolation as exc:
        return {"d": d, "n": n, "error": str(exc)}, f"d={d} n={n}: invariant violation: {exc}", EXIT_INVARIANT
    code = EXIT_HYPOTHESES if report.hypotheses_failed else EXIT_OK
    bound = f", bound {report.bound.bound}" if report.bound is not None else ""
    line = f"d={d} n={n}: Beilinson-Hodge {report.beilinson_hodge}; GHC {report.ghc}{bound}"
    return {"d": d, "n": n, "report": report.to_json()}, line, code


def cmd_sweep(text: str, workers: int | None = None) -> RunResult:
    points = parse_sweep(text)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_sweep_point, points))
    results.sort(key=lambda r: (r[0]["d"], r[0]["n"]))
    code = max(r[2] for r in results)
    return RunResult(
        "analyze",
        {"sweep": text, "arrangement": "generic", "points": [list(p) for p in points]},
        [r[0] for r in results],
        [],
        code,
        "\n".join(r[1] for r in results),
    )


# ---------------------------------------------------------------------------
# entry point


def _add_common(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=("text", "json"), default=default, help="output format")
    parser.add_argument("--sweep", default=default, help="grid such as d=2..12,n=1..5 (analyze only)")
    parser.add_argument("--seed", type=int, default=default, help="seed for randomized self-test subsets")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hodgecover", description="Hodge numbers and Hodge-cycle bounds of abelian covers")
    _add_common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="hypothesis checks and applicable conclusions")
    p.add_argument("path", nargs="?")
    _add_common(p, suppress=True)

    p = sub.add_parser("hodge", help="eigenspace Hodge numbers by two routes")
    p.add_argument("path")
    _add_common(p, suppress=True)

    p = sub.add_parser("bound", help="Hodge-cycle bound")
    p.add_argument("path")
    p.add_argument("--degree", type=int, help="cohomological degree i (default n)")
    p.add_argument("--level", type=int, help="band level k (default i/2 - 1 for even i, (i - 3)/2 for odd i)")
    _add_common(p, suppress=True)

    p = sub.add_parser("euler", help="Euler characteristic of the cover")
    p.add_argument("path")
    _add_common(p, suppress=True)

    p = sub.add_parser("local", help="local toric and abelian models")
    p.add_argument("--exponents", help="comma-separated exponents a_1,...,a_n")
    p.add_argument("--degree", type=int, help="degree d of y^d")
    p.add_argument("--gamma", help="matrix rows separated by ';', entries by ','")
    _add_common(p, suppress=True)

    p = sub.add_parser("selftest", help="run the identity suites")
    _add_common(p, suppress=True)
    return parser


def _dispatch(args: argparse.Namespace) -> RunResult:
    if args.sweep is not None and args.command != "analyze":
        raise InputError("--sweep is only available for analyze")
    if args.command == "analyze":
        if args.sweep is not None:
            return cmd_sweep(args.sweep)
        if args.path is None:
            raise InputError("analyze needs a document path or --sweep")
        return cmd_analyze(args.path)
    if args.command == "hodge":
        return cmd_hodge(args.path)
    if args.command == "bound":
        return cmd_bound(args.path, args.degree, args.level)
    if args.command == "euler":
        return cmd_euler(args.path)
    if args.command == "local":
        return cmd_local(args.exponents, args.degree, args.gamma)
    return cmd_selftest(args.seed or 0)


def _document_format(args: argparse.Namespace) -> str:
    if args.format:
        return args.format
    path = getattr(args, "path", None)
    if path:
        try:
            with open(path) as fh:
                doc = json.load(fh)
            fmt = doc.get("options", {}).get("format") if isinstance(doc, dict) else None
            if fmt in ("text", "json"):
                return fmt
        except (OSError, ValueError, AttributeError):
            pass
    return "text"


def main(argv: Sequence[str] | None = None, out: Callable[[str], None] | None = None) -> int:
    out = out or print
    args = build_parser().parse_args(argv)
    fmt = _document_format(args)
    try:
        result = _dispatch(args)
    except (InputError, ArrangementError, CoverError, CharTableError, ToricError, ValueError, OSError) as exc:
        result = RunResult(args.command, {"argv": list(argv or sys.argv[1:])}, None, [str(exc)], EXIT_INPUT)
    except InvariantViolation as exc:
        result = RunResult(args.command, {"argv": list(argv or sys.argv[1:])}, None, [f"invariant violation: {exc}"], EXIT_INVARIANT)
    out(result.render(fmt))
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
