"""Batch command surface: sieve dumps, Mertens tables, constants, residue
bounds, and the full verification suite.

Exit codes separate defect signals from usage problems: 0 means success with
every asserted check passing, 1 means a theorem inequality failed (a defect
worth breaking a build over), 2 means bad input or field errors. Reports are
written atomically (temp file + rename), embed the tool version, a SHA-256 of
the field descriptor, and the full config echo, and contain no timestamps:
reruns with identical config produce byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import os
import sys
from dataclasses import dataclass, fields as dc_fields
from pathlib import Path
from typing import Optional

from . import __version__
from .bounds import (
    lambda_K,
    louboutin_upper,
    stark_lower,
    sunley_constants,
    upsilon_K,
    zimmert_lower,
)
from .errors import MissingClassData, NfMertensError, UnknownStructureFlags
from .field import FieldDescriptor, kappa_exact, load_field
from .idealcount import (
    DENSE_SIEVE_CAP,
    ideal_count_sieve,
    kappa_estimate,
    summatory,
)
from .mertens import geometric_grid, mertens_constant, mertens_table
from .splitting import prime_ideals_up_to
from .verify import verify_all

TOOL_NAME = "nfmertens"

COMMANDS = ("sieve", "mertens", "constants", "residue", "verify")


@dataclass(frozen=True)
class RunConfig:
    field_path: str
    command: str
    x_max: float = 1e6
    grid: tuple[float, ...] = geometric_grid(4, 24)
    out: Optional[str] = None
    fmt: str = "csv"
    theta_variant: str = "classic"
    truncation_x: float = 1e6
    seed: int = 0
    sieve_what: str = "counts"
    exact_residue: bool = False

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise NfMertensError(f"unknown command {self.command!r}")
        if self.fmt not in ("csv", "json"):
            raise NfMertensError("format must be csv or json")
        if self.command in ("sieve", "verify") and self.x_max > DENSE_SIEVE_CAP:
            raise NfMertensError(
                f"x_max {self.x_max:g} exceeds the dense-sieve cap {DENSE_SIEVE_CAP:g}")
        if list(self.grid) != sorted(set(self.grid)):
            raise NfMertensError("grid must be strictly ascending")
        if self.grid and (self.grid[0] < 2 or self.grid[-1] > self.x_max):
            raise NfMertensError("grid must lie within [2, x_max]")


def _f15(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if v != v:  # NaN
        return "nan"
    if v == math.inf:
        return "inf"
    if v == -math.inf:
        return "-inf"
    return format(v, ".15g")


def parse_grid(spec: str) -> tuple[float, ...]:
    """'a:b' means quarter-decade exponents 10^(k/4), k = a..b; otherwise a
    comma-separated list of x values."""
    spec = spec.strip()
    if ":" in spec:
        lo_s, _, hi_s = spec.partition(":")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError as exc:
            raise NfMertensError(f"bad grid spec {spec!r}") from exc
        if hi < lo:
            raise NfMertensError("grid spec must have a <= b")
        return geometric_grid(lo, hi)
    try:
        return tuple(float(t) for t in spec.split(",") if t.strip())
    except ValueError as exc:
        raise NfMertensError(f"bad grid spec {spec!r}") from exc


def _meta(config: RunConfig, descriptor_bytes: bytes) -> dict:
    echo = {}
    for f in dc_fields(RunConfig):
        v = getattr(config, f.name)
        if isinstance(v, tuple):
            v = [_f15(g) for g in v]
        echo[f.name] = v
    return {
        "tool": TOOL_NAME,
        "version": __version__,
        "field_sha256": hashlib.sha256(descriptor_bytes).hexdigest(),
        "config": echo,
    }


def _write_atomic(path: str, data: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write(data)
    os.replace(tmp, path)


def _emit(config: RunConfig, meta: dict, header: list[str],
          rows: list[list], out_path: str) -> None:
    if config.fmt == "csv":
        buf = io.StringIO()
        for key in ("tool", "version", "field_sha256"):
            buf.write(f"# {key}: {meta[key]}\n")
        for key, value in sorted(meta["config"].items()):
            buf.write(f"# config_{key}: {value}\n")
        for key in sorted(meta):
            if key not in ("tool", "version", "field_sha256", "config"):
                buf.write(f"# {key}: {meta[key]}\n")
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_f15(v) if not isinstance(v, str) else v
                             for v in row])
        _write_atomic(out_path, buf.getvalue())
    else:
        payload = [dict(zip(header, [v if isinstance(v, (str, int, type(None)))
                                     else _f15(v) for v in row]))
                   for row in rows]
        _write_atomic(out_path, json.dumps({"meta": meta, "data": payload},
                                           indent=2) + "\n")


def _residue_for(field: FieldDescriptor, config: RunConfig):
    """Exact residue when class data exists, otherwise an estimate."""
    if field.class_data is not None:
        return kappa_exact(field)
    return kappa_estimate(field, max(config.x_max, 100.0))


def _cmd_sieve(field, config, meta, out_path):
    what = config.sieve_what
    if what == "counts":
        counts = ideal_count_sieve(field, int(config.x_max))
        rows = [[n, int(c)] for n, c in enumerate(counts, start=1)]
        _emit(config, meta, ["n", "ideal_count"], rows, out_path)
    elif what == "ideals":
        recs = prime_ideals_up_to(field, config.x_max)
        rows = [[r.p, r.f, r.norm] for r in recs]
        _emit(config, meta, ["p", "f", "norm"], rows, out_path)
    elif what == "summatory":
        kappa = _residue_for(field, config)
        meta["kappa_provenance"] = kappa.provenance
        rows = []
        for x in config.grid:
            point = summatory(field, x)
            rows.append([x, point.value, kappa.value * x, point.sunley_envelope])
        _emit(config, meta,
              ["x", "ideal_count_sum", "kappa_x", "envelope"], rows, out_path)
    else:
        raise NfMertensError(f"unknown sieve table {what!r}")
    return 0


def _cmd_mertens(field, config, meta, out_path):
    kappa = _residue_for(field, config)
    mconst = mertens_constant(field, config.truncation_x, kappa)
    meta["kappa_provenance"] = kappa.provenance
    meta["mertens_constant"] = _f15(mconst.M_K)
    meta["mertens_constant_tail"] = _f15(mconst.tail_halfwidth)
    meta["approximate"] = mconst.approximate
    ups = None
    if field.degree >= 2:
        ups = upsilon_K(field.degree, field.abs_discriminant, kappa).value
    rows = []
    for r in mertens_table(field, config.grid, mconst, kappa):
        rows.append([r.x, r.sum_logN_over_N, r.A_K, r.sum_recip, r.B_K,
                     r.product, r.C_K, r.E_K_bound, ups])
    _emit(config, meta,
          ["x", "sum_logN_over_N", "A_K", "sum_recip", "B_K", "product",
           "C_K", "E_K_bound", "upsilon_K"], rows, out_path)
    return 0


def _cmd_constants(field, config, meta, out_path):
    kappa = _residue_for(field, config)
    mconst = mertens_constant(field, config.truncation_x, kappa)
    meta["kappa_provenance"] = kappa.provenance
    n = field.degree
    a1, a3, a7 = sunley_constants(n)
    rows = [
        ["degree", n],
        ["abs_discriminant", field.abs_discriminant],
        ["kappa", kappa.value],
        ["mertens_constant", mconst.M_K],
        ["mertens_constant_tail", mconst.tail_halfwidth],
        ["truncation_x", mconst.truncation_x],
        ["a1_log", a1.natural_log],
        ["a3_log", a3.natural_log],
        ["a7_log", a7.natural_log],
    ]
    if n >= 2:
        lam = lambda_K(n, field.abs_discriminant)
        ups = upsilon_K(n, field.abs_discriminant, kappa)
        rows += [
            ["lambda_log", lam.natural_log],
            ["lambda", lam.render()],
            ["upsilon_log", ups.natural_log],
            ["upsilon", ups.render()],
        ]
    _emit(config, meta, ["constant", "value"], rows, out_path)
    return 0


def _cmd_residue(field, config, meta, out_path):
    rows = []
    if config.exact_residue and field.class_data is None:
        raise MissingClassData(
            "residue --exact needs class_number, regulator, roots_of_unity "
            "in the field descriptor")
    if field.class_data is not None:
        exact = kappa_exact(field)
        rows.append(["kappa_exact", exact.value, exact.provenance])
    if not config.exact_residue:
        est = kappa_estimate(field, max(config.x_max, 100.0))
        rows.append(["kappa_estimate", est.value, est.provenance])
        rows.append(["kappa_estimate_halfwidth", est.halfwidth, ""])
    if field.degree >= 2:
        rows.append(["zimmert_lower", zimmert_lower(field.abs_discriminant), ""])
        rows.append(["louboutin_upper",
                     louboutin_upper(field.degree, field.abs_discriminant), ""])
        try:
            stark = stark_lower(field)
            rows.append(["stark_lower", stark.value, stark.case_label])
        except UnknownStructureFlags:
            rows.append(["stark_lower", None, "unavailable: structure flags unknown"])
    _emit(config, meta, ["quantity", "value", "note"], rows, out_path)
    return 0


def _cmd_verify(field, config, meta, out_path):
    kappa = _residue_for(field, config)
    meta["kappa_provenance"] = kappa.provenance
    report = verify_all(field, config.grid, kappa,
                        theta_variant=config.theta_variant,
                        truncation_x=config.truncation_x)
    meta["lambda_log"] = _f15(report.lambda_K.natural_log) \
        if report.lambda_K else ""
    meta["upsilon_log"] = _f15(report.upsilon_K.natural_log) \
        if report.upsilon_K else ""
    meta["zimmert_lower"] = _f15(report.zimmert_lower)
    meta["louboutin_upper"] = _f15(report.louboutin_upper)
    meta["stark_lower"] = _f15(report.stark_lower.value) \
        if report.stark_lower else ""
    meta["a1_log"] = _f15(report.a1.natural_log)
    meta["a3_log"] = _f15(report.a3.natural_log)
    meta["a7_log"] = _f15(report.a7.natural_log)
    rows = [[c.name, c.x, c.quantity, c.bound, c.log_slack,
             "pass" if c.passed else "FAIL"] for c in report.checks]
    _emit(config, meta, ["check", "x", "quantity", "bound", "log_slack", "pass"],
          rows, out_path)
    failures = report.failures
    for c in failures:
        print(f"FAIL {c.name} x={c.x} quantity={_f15(c.quantity)} "
              f"bound={_f15(c.bound)}", file=sys.stderr)
    print(f"{len(report.checks) - len(failures)}/{len(report.checks)} "
          f"checks passed; report: {out_path}")
    return 1 if failures else 0


def run(config: RunConfig) -> int:
    """Execute one command; returns the process exit code."""
    config.validate()
    descriptor_bytes = Path(config.field_path).read_bytes()
    field = load_field(descriptor_bytes.decode("utf-8"))
    meta = _meta(config, descriptor_bytes)
    stem = Path(config.field_path).stem
    out_path = config.out or f"{config.command}_{stem}.{config.fmt}"
    handler = {
        "sieve": _cmd_sieve,
        "mertens": _cmd_mertens,
        "constants": _cmd_constants,
        "residue": _cmd_residue,
        "verify": _cmd_verify,
    }[config.command]
    return handler(field, config, meta, out_path)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="Mertens sums over prime ideals, ideal counts, and "
                    "explicit residue bounds for a number field.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, info in (
        ("sieve", "dump ideal counts, prime ideals, or the summatory table"),
        ("mertens", "Mertens quantities and error terms over the grid"),
        ("constants", "explicit constants for the field"),
        ("residue", "residue value and bounds"),
        ("verify", "run every inequality check; exit 1 on any failure"),
    ):
        p = sub.add_parser(name, help=info)
        p.add_argument("--field", required=True, help="field descriptor path")
        p.add_argument("--xmax", type=float, default=1e6)
        p.add_argument("--grid", default="4:24",
                       help="'a:b' for 10^(k/4), k=a..b, or x1,x2,...")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None)
        p.add_argument("--theta-constant", choices=("classic", "broadbent"),
                       default="classic")
        p.add_argument("--truncation-x", type=float, default=1e6)
        p.add_argument("--seed", type=int, default=0)
        if name == "sieve":
            p.add_argument("--what", choices=("counts", "ideals", "summatory"),
                           default="counts")
        if name == "residue":
            p.add_argument("--exact", action="store_true")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        grid = parse_grid(args.grid)
        if args.grid == "4:24":
            # default grid tracks x_max; explicit grids are validated as given
            grid = tuple(x for x in grid if x <= args.xmax)
        config = RunConfig(
            field_path=args.field,
            command=args.command,
            x_max=args.xmax,
            grid=grid,
            out=args.out,
            fmt=args.format,
            theta_variant=args.theta_constant,
            truncation_x=args.truncation_x,
            seed=args.seed,
            sieve_what=getattr(args, "what", "counts"),
            exact_residue=getattr(args, "exact", False),
        )
        return run(config)
    except NfMertensError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
