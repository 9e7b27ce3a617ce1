"""
Command-line front end.

    qcodebounds bound --n 5 --k 1 --d 3 --q 2
    qcodebounds cert --n 10 --q 2 --e 2 --dump-coeffs
    qcodebounds threshold --q 2 --e 2 --n-max 200
    qcodebounds mds --q 3 --e 2
    qcodebounds table --q 2 --n-min 4 --n-max 12 --d 3 --d 5 --format csv --out t.csv
    qcodebounds verify-paper

Exit codes: 0 success, 1 bound violated or verification failed, 2 usage or
domain error. Machine-readable output (json, csv) is exact: integers in
decimal, rationals as "p/q".
"""

from __future__ import annotations

import csv
import io
import json
import sys
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import click

from .bounds import BoundReport, CodeParams, check_code
from .certificates import (
    certificate_values,
    dominance_threshold,
    hamming_certificate,
    lp_bound,
    ratio_table,
    verify_conditions,
)
from .errors import DomainError
from .exactmath import fraction_str
from .mds import DEFAULT_SCAN_HORIZON, mds_report
from .verify import BUG_CANDIDATE, verify_paper

__all__ = ["main", "SweepSpec", "table_rows", "render", "TABLE_COLUMNS"]

FORMATS = ("human", "json", "csv")

TABLE_COLUMNS = (
    "q",
    "n",
    "k",
    "d",
    "singleton_max_k",
    "hamming_bound",
    "singleton_ok",
    "hamming_ok",
    "mds",
    "perfect",
    "hamming_applicability",
)


# -- serialization ---------------------------------------------------------


def _json_value(value: Any) -> Any:
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, int) and not isinstance(value, bool) and abs(value) >= 2**53:
        return str(value)
    return value


def _text_value(value: Any) -> str:
    if value is None:
        return "n/a"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return fraction_str(value)
    return str(value)


def render(
    rows: Sequence[dict[str, Any]],
    fmt: str,
    columns: Sequence[str] | None = None,
    human: str | None = None,
) -> str:
    columns = list(columns if columns is not None else (rows[0] if rows else []))
    if fmt == "json":
        payload = [{c: _json_value(row[c]) for c in columns} for row in rows]
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_text_value(row[c]) for c in columns])
        return buf.getvalue()
    if human is not None:
        return human
    return _human_table(rows, columns)


def _human_table(rows: Sequence[dict[str, Any]], columns: Sequence[str]) -> str:
    cells = [list(columns)] + [[_text_value(r[c]) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    return "".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() + "\n"
        for row in cells
    )


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise click.UsageError(f"cannot write output file {out!r}: {exc.strerror}")


# -- rows ------------------------------------------------------------------


def report_row(report: BoundReport) -> dict[str, Any]:
    p = report.params
    return {
        "q": p.q,
        "n": p.n,
        "k": p.k,
        "d": p.d,
        "singleton_max_k": report.singleton_max_k,
        "hamming_bound": report.hamming_max_K,
        "singleton_ok": report.singleton_ok,
        "hamming_ok": report.hamming_ok,
        "mds": report.meets_singleton_equality,
        "perfect": report.meets_hamming_equality,
        "hamming_applicability": report.hamming_applicability,
    }


@dataclass(frozen=True)
class SweepSpec:
    qs: tuple[int, ...]
    n_min: int
    n_max: int
    ds: tuple[int, ...]
    fmt: str = "csv"
    out: str | None = None
    workers: int = 1

    def __post_init__(self) -> None:
        if not self.qs or not self.ds:
            raise DomainError("q list and d list must be nonempty")
        if self.n_min < 1 or self.n_max < self.n_min:
            raise DomainError(f"empty n range [{self.n_min}, {self.n_max}]")
        if min(self.qs) < 2:
            raise DomainError("every q must be at least 2")
        if min(self.ds) < 1:
            raise DomainError("every d must be at least 1")
        if self.fmt not in FORMATS:
            raise DomainError(f"unknown format {self.fmt!r}")
        if self.workers < 1:
            raise DomainError("workers must be positive")

    def groups(self) -> list[tuple[int, int, int]]:
        """(q, n, d) triples with d <= n, in output order."""
        return [
            (q, n, d)
            for q in sorted(set(self.qs))
            for n in range(self.n_min, self.n_max + 1)
            for d in sorted(set(self.ds))
            if d <= n
        ]


def _group_rows(group: tuple[int, int, int]) -> list[dict[str, Any]]:
    q, n, d = group
    return [report_row(check_code(CodeParams(n, k, d, q))) for k in range(n + 1)]


def table_rows(spec: SweepSpec) -> list[dict[str, Any]]:
    groups = spec.groups()
    if spec.workers > 1 and len(groups) > 1:
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            chunks = list(pool.map(_group_rows, groups))
    else:
        chunks = [_group_rows(g) for g in groups]
    return [row for chunk in chunks for row in chunk]


# -- commands --------------------------------------------------------------

format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="human", show_default=True
)
out_option = click.option(
    "--out", type=click.Path(dir_okay=False), default=None, help="Write to a file."
)
workers_option = click.option(
    "--workers", type=click.IntRange(min=1), default=1, show_default=True
)


@click.group()
def main() -> None:
    """Exact upper bounds on quantum stabilizer code parameters."""


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--k", type=int, required=True, help="K = q^k")
@click.option("--d", type=int, required=True)
@click.option("--q", type=int, required=True)
@format_option
@out_option
def bound(n: int, k: int, d: int, q: int, fmt: str, out: str | None) -> None:
    """Check one ((n, q^k, d))_q against the Singleton and Hamming bounds."""
    try:
        params = CodeParams(n, k, d, q)
    except DomainError as exc:
        raise click.UsageError(str(exc))
    report = check_code(params)
    row = report_row(report)
    human = None
    if fmt == "human":
        lines = [f"code            {params}"]
        lines.append(f"singleton       K <= {fraction_str(report.singleton_max_K)}"
                     f"  (k <= {report.singleton_max_k})  ok={_text_value(report.singleton_ok)}")
        lines.append(f"hamming         K <= {fraction_str(report.hamming_max_K)}"
                     f"  ok={_text_value(report.hamming_ok)}  [{report.hamming_applicability}]")
        lines.append(f"MDS             {_text_value(report.meets_singleton_equality)}")
        lines.append(f"perfect         {_text_value(report.meets_hamming_equality)}")
        if not report.applicable:
            lines.append("note            K = 1: both bounds assume K > 1, not applicable")
        for name, ok in (("singleton", report.singleton_ok), ("hamming", report.hamming_ok)):
            if ok is False:
                lines.append(f"VIOLATION       {name} bound exceeded by K = {q}^{k}")
        human = "\n".join(lines) + "\n"
    _emit(render([row], fmt, TABLE_COLUMNS, human), out)
    sys.exit(1 if report.violated else 0)


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--q", type=int, required=True)
@click.option("--e", type=int, required=True, help="Correctable errors, d = 2e+1.")
@click.option("--dump-coeffs", is_flag=True, help="Include every weight 0..n.")
@format_option
@out_option
def cert(n: int, q: int, e: int, dump_coeffs: bool, fmt: str, out: str | None) -> None:
    """Build and check the Hamming LP certificate, then report its bound."""
    try:
        certificate = hamming_certificate(n, q, e)
    except DomainError as exc:
        raise click.UsageError(str(exc))
    conditions = verify_conditions(certificate)
    ratios = dict(ratio_table(certificate))
    values = certificate_values(certificate)
    if conditions.ok:
        bound_value, x_best = lp_bound(certificate)
    else:
        x_best, bound_value = None, None
    weights = range(n + 1) if dump_coeffs else certificate.S
    rows = [
        {
            "n": n,
            "q": q,
            "e": e,
            "x": x,
            "in_S": x in ratios,
            "coeff": certificate.coeffs[x],
            "value": values[x],
            "ratio": ratios.get(x),
            "feasible": conditions.ok,
            "bound": bound_value,
            "argmax": x_best,
        }
        for x in weights
    ]
    human = None
    if fmt == "human":
        lines = [
            f"certificate     n={n} q={q} e={e} S={{0..{2 * e}}}",
            f"condition i     {_text_value(conditions.condition_i_ok)}",
            f"condition ii    {_text_value(conditions.condition_ii_ok)}",
        ]
        for v in conditions.violations:
            lines.append(f"violation       x={v.x} condition {v.condition} value {fraction_str(v.value)}")
        lines.append(f"bound           K <= {_text_value(bound_value)}")
        lines.append(f"argmax          x = {_text_value(x_best)}")
        lines.append("")
        cols = ["x", "coeff", "value", "ratio"]
        lines.append(_human_table(rows, cols).rstrip("\n"))
        human = "\n".join(lines) + "\n"
    _emit(render(rows, fmt, list(rows[0]), human), out)
    sys.exit(0 if conditions.ok else 1)


@main.command()
@click.option("--q", type=int, required=True)
@click.option("--e", type=int, required=True)
@click.option("--n-max", type=int, default=512, show_default=True)
@format_option
@out_option
@workers_option
def threshold(q: int, e: int, n_max: int, fmt: str, out: str | None, workers: int) -> None:
    """Scan n and locate where f(0)/f_0 dominates every other ratio for good."""
    if q < 2:
        raise click.UsageError("q must be at least 2")
    try:
        report = dominance_threshold(q, e, n_max, workers=workers)
    except DomainError as exc:
        raise click.UsageError(str(exc))
    failures = " ".join(map(str, report.failures))
    rows = [
        {"q": q, "e": e, "n_lo": report.n_lo, "n_hi": report.n_hi, "x": str(x),
         "threshold": t, "failures": failures}
        for x, t in report.per_x_threshold.items()
    ]
    rows.append({"q": q, "e": e, "n_lo": report.n_lo, "n_hi": report.n_hi, "x": "all",
                 "threshold": report.stable_threshold, "failures": failures})
    human = None
    if fmt == "human":
        stable = report.stable_threshold
        lines = [
            f"scan            q={q} e={e} n in [{report.n_lo}, {report.n_hi}]",
            f"stable n*       {stable if stable is not None else 'not stabilized'}",
            f"failing n       {failures or 'none'}",
        ]
        for x, t in report.per_x_threshold.items():
            lines.append(f"x={x:<13d} f(0)/f_0 >= f({x})/f_{x} from n = {_text_value(t)}")
        human = "\n".join(lines) + "\n"
    _emit(render(rows, fmt, list(rows[0]), human), out)


@main.command()
@click.option("--q", type=int, required=True)
@click.option("--e", type=int, required=True)
@click.option("--n-max", type=int, default=DEFAULT_SCAN_HORIZON, show_default=True)
@format_option
@out_option
def mds(q: int, e: int, n_max: int, fmt: str, out: str | None) -> None:
    """Maximal length of quantum MDS codes correcting e errors."""
    try:
        report = mds_report(q, e, n_max)
    except DomainError as exc:
        raise click.UsageError(str(exc))
    row = {
        "q": q,
        "e": e,
        "formula_bound": report.formula_bound,
        "scan_bound": report.scan_bound,
        "agree": report.agree,
        "reference_cap": report.reference_cap,
        "finding": report.finding or "",
    }
    human = None
    if fmt == "human":
        scan = report.scan_bound if report.scan_bound is not None else "none admissible"
        lines = [f"max MDS length  {scan}  (q={q}, e={e}, d={2 * e + 1})"]
        if report.formula_bound is not None:
            lines.append(f"closed form     {report.formula_bound}  agree={_text_value(report.agree)}")
        lines.append(f"reference       {report.reference_cap}  ({report.reference_note})")
        if report.finding:
            lines.append(f"FINDING         {report.finding}")
        human = "\n".join(lines) + "\n"
    _emit(render([row], fmt, list(row), human), out)
    sys.exit(1 if report.agree is False else 0)


@main.command()
@click.option("--q", "qs", type=int, multiple=True, required=True)
@click.option("--n-min", type=int, required=True)
@click.option("--n-max", type=int, required=True)
@click.option("--d", "ds", type=int, multiple=True, required=True)
@click.option("--format", "fmt", type=click.Choice(FORMATS), default="csv", show_default=True)
@out_option
@workers_option
def table(qs, n_min, n_max, ds, fmt, out, workers) -> None:
    """Feasibility table over all (q, n, d, k) in the sweep, every k in 0..n."""
    try:
        spec = SweepSpec(tuple(qs), n_min, n_max, tuple(ds), fmt, out, workers)
    except DomainError as exc:
        raise click.UsageError(str(exc))
    _emit(render(table_rows(spec), spec.fmt, TABLE_COLUMNS), spec.out)


@main.command("verify-paper")
@format_option
@out_option
@workers_option
def verify_paper_cmd(fmt: str, out: str | None, workers: int) -> None:
    """Recompute every published claim and list the findings."""
    findings = verify_paper(workers=workers)
    rows = [f.as_row() for f in findings]
    human = None
    if fmt == "human":
        lines = []
        for f in findings:
            lines.append(f"[{f.verdict}] {f.check_id}")
            lines.append(f"    {f.description}")
            lines.append(f"    expected ({f.provenance}): {f.expected}")
            lines.append(f"    actual: {f.actual}")
        counts = {v: sum(f.verdict == v for f in findings) for v in sorted({f.verdict for f in findings})}
        lines.append("summary: " + ", ".join(f"{v}={c}" for v, c in counts.items()))
        human = "\n".join(lines) + "\n"
    _emit(render(rows, fmt, list(rows[0]), human), out)
    sys.exit(1 if any(f.verdict == BUG_CANDIDATE for f in findings) else 0)


if __name__ == "__main__":
    main()
