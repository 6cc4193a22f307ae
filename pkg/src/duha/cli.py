"""Command-line front end.

Subcommands map one-to-one onto the verification layer:

  dims        bigraded dimension table of A plus recurrence check
  homology    computed HH_0..HH_3 vs the closed-form catalog
  cohomology  computed HH^0..HH^3 vs the catalog (F1) or duality (F2)
  cyclic      reduced cyclic homology, Goodwillie and Euler checks
  certify     basis certificates with exact witnesses
  check       the full matrix of presets x checks

Cases come from a preset or from an explicit field description
(--minpoly, --r1, --r2); scalars are exact rationals "p/q" or dense
lowest-degree-first coefficient lists over the field.  A JSON config
file supplies the same keys as the flags; flags win.  Exit codes:
0 all comparisons match and all certificates certified, 1 mismatch,
2 configuration error, 3 internal consistency violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .exactfield import (
    FieldError,
    FieldSpec,
    NumberField,
    RATIONALS,
    cyclotomic,
    rational_from_string,
)
from .linalg import ConsistencyError
from .pbw import UnsupportedCaseError, classify_case
from .series import WindowError
from . import verify
from .verify import COHOMOLOGY, HOMOLOGY


class ConfigError(Exception):
    """Bad flags, bad config file, or an invalid case description."""


PRESETS = (
    "f1-rational",
    "f2-generic",
    "f2-root-1",
    "f2-root-2",
    "f2-root-3",
    "f2-root-4",
    "f2-root-6",
)

COMMANDS = ("dims", "homology", "cohomology", "cyclic", "certify", "check")

DEFAULT_WINDOWS = {
    "dims": (0, 12),
    "homology": (0, 12),
    "cohomology": (-6, 12),
    "cyclic": (0, 12),
    "certify": (0, 12),
    "check": (0, 12),
}

DUALITY_WINDOW = (-6, 8)

CSV_COLUMNS = ("theory", "i", "deg", "sdeg", "dim", "predicted", "match")


def resolve_preset(name, genericity_bound=16):
    """CaseSpec for a named preset; classification is recomputed, not assumed."""
    if name == "f1-rational":
        spec = FieldSpec(RATIONALS, RATIONALS.from_rational(2), RATIONALS.from_rational(3))
    elif name == "f2-generic":
        spec = FieldSpec(
            RATIONALS, RATIONALS.from_rational(2), RATIONALS.from_rational(Fraction(1, 2))
        )
    elif name == "f2-root-1":
        one = RATIONALS.from_rational(1)
        spec = FieldSpec(RATIONALS, one, one)
    elif name == "f2-root-2":
        minus = RATIONALS.from_rational(-1)
        spec = FieldSpec(RATIONALS, minus, minus)
    elif name in ("f2-root-3", "f2-root-4", "f2-root-6"):
        n = int(name.rsplit("-", 1)[1])
        field = NumberField(cyclotomic(n))
        spec = FieldSpec(field, field.theta, field.theta ** (n - 1))
    else:
        raise ConfigError("unknown preset %r; choose one of %s" % (name, ", ".join(PRESETS)))
    case = classify_case(spec, bound=genericity_bound)
    case.preset = name
    return case


def _as_fraction(value):
    if isinstance(value, bool):
        raise ConfigError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return rational_from_string(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError("bad rational %r: %s" % (value, exc))
    raise ConfigError("expected an exact rational, got %r (floats are not accepted)" % (value,))


def _as_coeff_list(value, what):
    if isinstance(value, str):
        text = value.strip()
        if not text.startswith("["):
            raise ConfigError("%s must be a coefficient list, got %r" % (what, value))
        try:
            value = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError("bad %s %r: %s" % (what, text, exc))
    if not isinstance(value, list) or not value:
        raise ConfigError("%s must be a non-empty list of rationals" % what)
    return [_as_fraction(v) for v in value]


def parse_field_value(field, value, what):
    """An element of the field from an int, "p/q" string, or coefficient list."""
    if isinstance(value, list) or (isinstance(value, str) and value.strip().startswith("[")):
        coeffs = _as_coeff_list(value, what)
        if len(coeffs) > max(field.degree, 1):
            raise ConfigError(
                "%s has %d coefficients but the field has degree %d"
                % (what, len(coeffs), field.degree)
            )
        return field.element(coeffs)
    return field.from_rational(_as_fraction(value))


def load_config(args):
    """Merge config file and flags into one dict; flags override the file."""
    cfg = {}
    if getattr(args, "config", None):
        try:
            with open(args.config) as fh:
                loaded = json.load(fh)
        except OSError as exc:
            raise ConfigError("cannot read config file: %s" % exc)
        except json.JSONDecodeError as exc:
            raise ConfigError("config file is not valid JSON: %s" % exc)
        if not isinstance(loaded, dict):
            raise ConfigError("config file must hold a JSON object")
        cfg.update(loaded)
    window = dict(cfg.get("window") or {})
    output = dict(cfg.get("output") or {})
    if args.min_deg is not None:
        window["min_deg"] = args.min_deg
    if args.max_deg is not None:
        window["max_deg"] = args.max_deg
    if args.output is not None:
        output["format"] = args.output
    if args.out is not None:
        output["path"] = args.out
    for key in ("preset", "minpoly", "r1", "r2"):
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    if args.jobs is not None:
        cfg["jobs"] = args.jobs
    elif "jobs" not in cfg and os.environ.get("DUHA_JOBS"):
        try:
            cfg["jobs"] = int(os.environ["DUHA_JOBS"])
        except ValueError:
            raise ConfigError("DUHA_JOBS must be an integer")
    cfg["window"] = window
    cfg["output"] = output
    return cfg


def resolve_window(cfg, command):
    lo_default, hi_default = DEFAULT_WINDOWS[command]
    window = cfg.get("window") or {}
    lo = window.get("min_deg", lo_default)
    hi = window.get("max_deg", hi_default)
    if not isinstance(lo, int) or not isinstance(hi, int):
        raise ConfigError("window bounds must be integers")
    if lo > hi:
        raise ConfigError("empty window: min_deg %d > max_deg %d" % (lo, hi))
    return lo, hi


def resolve_jobs(cfg):
    jobs = cfg.get("jobs", 1)
    if not isinstance(jobs, int) or jobs < 1:
        raise ConfigError("jobs must be a positive integer")
    return jobs


def resolve_case(cfg, window):
    """A classified CaseSpec from the merged config; errors before computing."""
    bound = max(16, abs(window[0]) + 4, window[1] + 4)
    explicit = [k for k in ("minpoly", "r1", "r2") if cfg.get(k) is not None]
    if cfg.get("preset") and explicit:
        raise ConfigError("preset and explicit field description are mutually exclusive")
    if cfg.get("preset"):
        return resolve_preset(cfg["preset"], genericity_bound=bound)
    if not cfg.get("r1") or not cfg.get("r2"):
        raise ConfigError("need --preset, or --r1 and --r2 (with optional --minpoly)")
    if cfg.get("minpoly") is not None:
        field = NumberField(_as_coeff_list(cfg["minpoly"], "minpoly"))
    else:
        field = RATIONALS
    spec = FieldSpec(
        field,
        parse_field_value(field, cfg["r1"], "r1"),
        parse_field_value(field, cfg["r2"], "r2"),
    )
    return classify_case(spec, bound=bound)


# ---------------------------------------------------------------------------
# renderers
# ---------------------------------------------------------------------------


def render_json(payload):
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv_rows(report):
    for table in report.tables:
        for i, deg, sdeg, dim in table.rows():
            yield (table.theory, i, deg, sdeg, dim, "", "")
    for row in report.comparisons:
        quantity = row["quantity"]
        i = ""
        for prefix in ("HH_", "HH^"):
            tail = quantity[len(prefix):]
            if quantity.startswith(prefix) and tail.isdigit():
                i = int(tail)
        yield (
            quantity,
            i,
            row["degree"],
            row.get("sdeg", ""),
            row["computed"],
            row["predicted"],
            str(row["match"]).lower(),
        )


def render_csv(report):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in _csv_rows(report):
        writer.writerow(row)
    return buf.getvalue()


def render_table(report):
    lines = []
    case = report.case.to_json()
    lines.append(
        "case: preset=%s family=%s n=%s r1=%s r2=%s alpha=%s beta=%s"
        % (
            case.get("preset") or "-",
            case["family"],
            case["n"],
            case["r1"],
            case["r2"],
            case["alpha"],
            case["beta"],
        )
    )
    lines.append("window: [%d, %d]" % report.window)
    if report.comparisons:
        lines.append("")
        lines.append("%-18s %5s %5s %9s %10s  %s" % ("quantity", "deg", "sdeg", "computed", "predicted", "match"))
        for row in report.comparisons:
            status = "ok" if row["match"] else "MISMATCH"
            if row.get("advisory"):
                status += " (advisory)"
            lines.append(
                "%-18s %5d %5s %9d %10d  %s"
                % (
                    row["quantity"],
                    row["degree"],
                    row.get("sdeg", ""),
                    row["computed"],
                    row["predicted"],
                    status,
                )
            )
    if report.certificates:
        lines.append("")
        for cert in report.certificates:
            lines.append("%-9s %s" % (cert["status"], cert["claim"]))
    for note in report.notes:
        lines.append("")
        lines.append("note: %s" % note)
    lines.append("")
    lines.append("result: %s" % ("ok" if report.ok() else "MISMATCH"))
    return "\n".join(lines) + "\n"


def write_output(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def run_certify(case, window, jobs):
    report = verify.certify_hh0_basis(case, window)
    report.extend(verify.certify_hh3_basis(case, window))
    report.extend(verify.certify_cohomology_bases(case, (-6, window[1])))
    return report


def run_report_command(command, case, window, jobs):
    if command == "dims":
        return verify.dims_report(case, window)
    if command == "homology":
        return verify.verify_against_catalog(case, window, HOMOLOGY, jobs)
    if command == "cohomology":
        return verify.verify_against_catalog(case, window, COHOMOLOGY, jobs)
    if command == "cyclic":
        return verify.verify_cyclic(case, window, jobs)
    if command == "certify":
        return run_certify(case, window, jobs)
    raise ConfigError("unknown command %r" % command)


def run_check(cfg, jobs):
    """The full preset x check matrix; one JSON payload, worst exit status."""
    presets = [cfg["preset"]] if cfg.get("preset") else list(PRESETS)
    entries = []
    all_ok = True
    for name in presets:
        case = resolve_preset(name)
        checks = {}
        checks["dims"] = verify.dims_report(case, DEFAULT_WINDOWS["dims"])
        checks["homology"] = verify.verify_against_catalog(
            case, DEFAULT_WINDOWS["homology"], HOMOLOGY, jobs
        )
        checks["cohomology"] = verify.verify_against_catalog(
            case, DEFAULT_WINDOWS["cohomology"], COHOMOLOGY, jobs
        )
        checks["cyclic"] = verify.verify_cyclic(case, DEFAULT_WINDOWS["cyclic"], jobs)
        checks["certify"] = run_certify(case, DEFAULT_WINDOWS["certify"], jobs)
        if case.is_cy():
            checks["duality"] = verify.verify_cy_duality(case, DUALITY_WINDOW, jobs)
        ok = all(report.ok() for report in checks.values())
        all_ok = all_ok and ok
        entries.append(
            {
                "preset": name,
                "ok": ok,
                "reports": {key: report.to_json() for key, report in sorted(checks.items())},
            }
        )
    payload = {
        "summary": {
            "ok": all_ok,
            "presets": {e["preset"]: e["ok"] for e in entries},
        },
        "checks": entries,
    }
    return payload, all_ok


def build_parser():
    parser = argparse.ArgumentParser(
        prog="duha",
        description="Exact Hochschild and cyclic homology of homogeneous down-up algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    helps = {
        "dims": "bigraded dimensions of the algebra, with recurrence check",
        "homology": "HH_0..HH_3 dimension table vs the closed-form catalog",
        "cohomology": "HH^0..HH^3 dimension table vs catalog or duality",
        "cyclic": "reduced cyclic homology with Goodwillie and Euler checks",
        "certify": "certify the explicit bases with exact witnesses",
        "check": "run every check for every preset",
    }
    for name in COMMANDS:
        sp = sub.add_parser(name, help=helps[name])
        sp.add_argument("--preset", choices=PRESETS)
        sp.add_argument("--minpoly", help="modulus coefficients, lowest degree first, e.g. [1,0,1]")
        sp.add_argument("--r1", help='exact scalar: "p/q" or coefficient list over the field')
        sp.add_argument("--r2", help='exact scalar: "p/q" or coefficient list over the field')
        sp.add_argument("--min-deg", type=int, dest="min_deg")
        sp.add_argument("--max-deg", type=int, dest="max_deg")
        sp.add_argument("--output", choices=("json", "csv", "table"))
        sp.add_argument("--out", help="write output to this file instead of stdout")
        sp.add_argument("--jobs", type=int, help="parallel bidegree computations (or DUHA_JOBS)")
        sp.add_argument("--config", help="JSON config file; flags override its keys")
    return parser


def run(args):
    cfg = load_config(args)
    jobs = resolve_jobs(cfg)
    fmt = (cfg.get("output") or {}).get("format") or "json"
    path = (cfg.get("output") or {}).get("path")
    if args.command == "check":
        if fmt == "csv":
            raise ConfigError("csv output is not defined for check; use json or table")
        payload, ok = run_check(cfg, jobs)
        if fmt == "table":
            lines = ["%-12s %s" % (name, "ok" if good else "MISMATCH")
                     for name, good in sorted(payload["summary"]["presets"].items())]
            lines.append("result: %s" % ("ok" if ok else "MISMATCH"))
            write_output("\n".join(lines) + "\n", path)
        else:
            write_output(render_json(payload), path)
        return 0 if ok else 1
    window = resolve_window(cfg, args.command)
    case = resolve_case(cfg, window)
    report = run_report_command(args.command, case, window, jobs)
    if fmt == "csv":
        write_output(render_csv(report), path)
    elif fmt == "table":
        write_output(render_table(report), path)
    else:
        write_output(render_json(report.to_json()), path)
    return 0 if report.ok() else 1


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except ConfigError as exc:
        print("duha: configuration error: %s" % exc, file=sys.stderr)
        return 2
    except (FieldError, WindowError) as exc:
        print("duha: configuration error: %s" % exc, file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print("duha: internal consistency violation: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
