"""Command-line front end: ``hermsig signatures | tables | vanishing | hodge-y``.

Exit codes: 0 success, 2 bad arguments or input, 3 enumeration disagrees with
a closed form, 4 dimension mismatch.  In ``--format json`` mode every document
carries ``status`` and ``exit_code`` fields mirroring the process exit code.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, Sequence

from .closed_forms import Status, compare_cell
from .errors import DimensionMismatch, HermsigError, NotTabulated
from .hodge import (
    HodgeDiamond,
    Verdict,
    h11_structure,
    leray_hirsch,
    low_degree_vanishing,
    picard_reports,
    vanish_h0q,
    vanish_h1q,
)
from .rootsys import CartanType, PairDescriptor, build_root_datum
from .signatures import attainable_signatures
from .weyl import flag_poincare

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_DIMENSION = 0, 2, 3, 4
FORMATS = ("markdown", "csv", "json")


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


# --- rendering helpers ---------------------------------------------------------

def _spaced(values: Iterable[int]) -> str:
    return " ".join(map(str, values))


def _markdown(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _params_dict(desc: PairDescriptor) -> dict[str, int]:
    return dict(zip(desc.cartan_type.param_names, desc.params))


def _descriptor(args) -> PairDescriptor:
    t = CartanType.parse(args.type)
    given = {"m": args.m, "n": args.n}
    params = {k: given[k] for k in t.param_names}
    stray = [k for k, v in given.items() if v is not None and k not in t.param_names]
    if stray:
        raise CliError(f"{t.value} does not take --{' --'.join(stray)}")
    return PairDescriptor.of(t, **params)


def _label_help() -> str:
    lines = ["compact simple labels (Bourbaki numbering) per type:"]
    samples = [
        PairDescriptor.of("AIII", m=2, n=3),
        PairDescriptor.of("BDI_even", m=4),
        PairDescriptor.of("BDI_odd", m=3),
        PairDescriptor.of("CI", n=3),
        PairDescriptor.of("DIII", n=4),
        PairDescriptor.of("EIII"),
        PairDescriptor.of("EVII"),
    ]
    generic = {
        CartanType.AIII: "1..m+n-1 except m",
        CartanType.BDI_EVEN: "2..m",
        CartanType.BDI_ODD: "2..m",
        CartanType.CI: "1..n-1",
        CartanType.DIII: "1..n-1",
    }
    for d in samples:
        datum = build_root_datum(d)
        compact = ",".join(map(str, datum.compact_simple_indices))
        rule = generic.get(d.cartan_type)
        suffix = f" (in general {rule})" if rule else ""
        lines.append(f"  {d.label}: {compact}{suffix}")
    return "\n".join(lines)


# --- signatures ------------------------------------------------------------------

def cmd_signatures(args) -> tuple[str, int]:
    desc = _descriptor(args)
    datum = build_root_datum(desc)
    filt = None if args.rplus is None else [args.rplus]
    sigs = attainable_signatures(datum, filt, threads=args.threads)

    rows, code = [], EXIT_OK
    for r_plus, r_minus in sigs.values.items():
        row = {"r_plus": r_plus, "r_minus": list(r_minus)}
        if args.check:
            try:
                cell = compare_cell(desc, r_plus)
            except NotTabulated as exc:
                row.update(closed_form=None, status="NOT_TABULATED", note=str(exc))
            else:
                row.update(closed_form=list(cell.closed_form), status=cell.status.value, note=cell.note)
                if cell.status is Status.DISAGREE:
                    code = EXIT_DISAGREE
        rows.append(row)

    provenance = []
    if args.provenance:
        for sig in sorted(sigs.provenance):
            w = sigs.provenance[sig]
            provenance.append(
                {"r_plus": sig.r_plus, "r_minus": sig.r_minus, "subset": list(w.subset), "word": list(w.word)}
            )

    if args.format == "json":
        doc = {"pair": desc.label, "type": desc.cartan_type.value, "params": _params_dict(desc), "rows": rows}
        if args.provenance:
            doc["provenance"] = provenance
        doc["status"] = "disagree" if code else "ok"
        doc["exit_code"] = code
        return _json(doc), code

    header = ["R+", "R-"]
    if args.check:
        header += ["closed form", "status", "note"]

    def cells(row):
        out = [row["r_plus"], _spaced(row["r_minus"])]
        if args.check:
            cf = row["closed_form"]
            out += ["-" if cf is None else _spaced(cf), row["status"], row["note"]]
        return out

    prov_header = ["R+", "R-", "subset B", "coset word"]
    prov_rows = [
        [p["r_plus"], p["r_minus"], _spaced(p["subset"]), _spaced(p["word"]) or "e"] for p in provenance
    ]
    if args.format == "csv":
        text = _csv(header, [cells(r) for r in rows])
        if args.provenance:
            text += "\n" + _csv(prov_header, prov_rows)
        return text, code
    text = f"{desc.label}\n\n" + _markdown(header, [cells(r) for r in rows])
    if args.provenance:
        text += "\n" + _markdown(prov_header, prov_rows)
    return text, code


# --- tables ------------------------------------------------------------------------

def table_grid(which: int, max_params: int = 8) -> list[PairDescriptor]:
    """Descriptors reproduced by ``tables --which``.

    ``max_params`` bounds m+n for AIII and the single parameter of the other
    classical families.
    """
    if which == 2:
        return [PairDescriptor.of("EIII"), PairDescriptor.of("EVII")]
    out = [
        PairDescriptor.of("AIII", m=m, n=n)
        for m in range(1, max_params)
        for n in range(m, max_params)
        if m + n <= max_params and (m, n) != (1, 1)
    ]
    ranges = {
        "BDI_even": (3 if which == 3 else 4, 6),
        "BDI_odd": (2, 5),
        "CI": (2 if which == 3 else 3, 5),
        "DIII": (4, 6),
    }
    for name, (lo, hi) in ranges.items():
        key = "n" if name in ("CI", "DIII") else "m"
        out += [PairDescriptor.of(name, **{key: k}) for k in range(lo, min(hi, max_params) + 1)]
    return out


def _table_rows(which: int, max_params: int):
    cells = []
    for desc in table_grid(which, max_params):
        for r_plus in ((0, 1) if which == 2 else (which - 3,)):
            cells.append(compare_cell(desc, r_plus))
    return cells


def cmd_tables(args) -> tuple[str, int]:
    if args.max_params < 3:
        raise CliError("--max-params must be at least 3")
    cells = _table_rows(args.which, args.max_params)
    code = EXIT_DISAGREE if any(c.status is Status.DISAGREE for c in cells) else EXIT_OK
    title = {
        2: "R- values for the exceptional pairs",
        3: "R- values, x != 0, when R+ = 0",
        4: "R- values, x != 0, when R+ = 1",
    }[args.which]

    if args.format == "json":
        doc = {
            "table": args.which,
            "title": title,
            "max_params": args.max_params,
            "rows": [
                {
                    "pair": c.descriptor.label,
                    "type": c.descriptor.cartan_type.value,
                    "params": _params_dict(c.descriptor),
                    "r_plus": c.r_plus,
                    "enumerated": list(c.enumerated),
                    "closed_form": list(c.closed_form),
                    "status": c.status.value,
                    "matching_variant": c.matching_variant,
                    "note": c.note,
                }
                for c in cells
            ],
            "status": "disagree" if code else "ok",
            "exit_code": code,
        }
        return _json(doc), code

    header = ["pair", "R+", "enumerated R-", "closed form", "status", "note"]
    rows = [
        [c.descriptor.label, c.r_plus, _spaced(c.enumerated), _spaced(c.closed_form), c.status.value, c.note]
        for c in cells
    ]
    if args.format == "csv":
        return _csv(header, rows), code
    return f"Table {args.which}: {title}\n\n" + _markdown(header, rows), code


# --- vanishing -----------------------------------------------------------------------

def cmd_vanishing(args) -> tuple[str, int]:
    desc = _descriptor(args)
    qmax = desc.dim_X + 1 if args.qmax is None else args.qmax
    if qmax < 1:
        raise CliError("--qmax must be at least 1")
    rows = []
    for q in range(1, qmax + 1):
        h0 = vanish_h0q(desc, q)
        h1 = vanish_h1q(desc, q) if q >= 2 else None
        rows.append({
            "q": q,
            "h0q": h0.value.value,
            "h1q": None if h1 is None else h1.value.value,
            "low_degree_h0q_zero": low_degree_vanishing(desc, 0, q),
            "low_degree_h1q_zero": low_degree_vanishing(desc, 1, q),
        })
    h11 = h11_structure(desc)

    if args.format == "json":
        doc = {
            "pair": desc.label,
            "real_rank": desc.real_rank,
            "dim_X": desc.dim_X,
            "rows": rows,
            "h11": {"verdict": h11.value.value, "reason": h11.reason},
            "status": "ok",
            "exit_code": EXIT_OK,
        }
        return _json(doc), EXIT_OK

    header = ["q", "H^(0,q)", "H^(1,q)", "low-degree rule"]

    def rule(r):
        hits = [name for name, key in (("H^(0,q)=0", "low_degree_h0q_zero"), ("H^(1,q)=0", "low_degree_h1q_zero")) if r[key]]
        return ", ".join(hits) or "-"

    table = [[r["q"], r["h0q"], r["h1q"] or "-", rule(r)] for r in rows]
    if args.format == "csv":
        return _csv(header + ["H^(1,1)"], [row + [h11.value.value] for row in table]), EXIT_OK
    text = f"{desc.label}  (real rank {desc.real_rank}, dim_C X = {desc.dim_X})\n\n"
    text += _markdown(header, table)
    text += f"\nH^(1,1): {h11.value.value} ({h11.reason})\n"
    return text, EXIT_OK


# --- hodge-y ----------------------------------------------------------------------------

def _parse_subset(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise CliError(f"--parabolic expects comma-separated integers, got {text!r}") from None


def _load_diamond(path: str) -> HodgeDiamond:
    try:
        with open(path, encoding="utf-8") as fh:
            return HodgeDiamond.from_json(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from None
    except DimensionMismatch as exc:
        raise CliError(f"{path}: {exc}") from None
    except ValueError as exc:
        raise CliError(f"{path} does not match the diamond schema: {exc}") from None


def _diamond_grid(d: HodgeDiamond) -> str:
    header = ["p \\ q"] + [str(q) for q in range(d.dim + 1)]
    rows = [
        [p] + ["?" if d[p, q] is None else d[p, q] for q in range(d.dim + 1)]
        for p in range(d.dim + 1)
    ]
    return _markdown(header, rows)


def cmd_hodge_y(args) -> tuple[str, int]:
    desc = _descriptor(args)
    datum = build_root_datum(desc)
    subset = _parse_subset(args.parabolic)
    report = picard_reports(desc, subset, args.assume_h02_zero)
    betti = flag_poincare(datum, subset)
    x = _load_diamond(args.x_hodge)
    try:
        y = leray_hirsch(x, betti, base_dim=desc.dim_X)
    except DimensionMismatch as exc:
        raise CliError(f"{exc} (dim_C X for {desc.label})", EXIT_DIMENSION) from None

    chi_x, chi_y = x.euler_characteristic(), y.euler_characteristic()
    multiplicative = None if chi_x is None else chi_y == chi_x * sum(betti)
    if multiplicative is False:  # pragma: no cover - would be a convolution bug
        raise AssertionError("Euler characteristic is not multiplicative")
    picard = {
        "rank_free_part": report.rank_free_part,
        "torsion": report.torsion,
        "c1_isomorphism": report.c1_isomorphism,
        "y_gamma_extra_rank": report.y_gamma_extra_rank,
        "y_split": report.y_split,
        "reason": report.reason,
    }
    euler = {"x": chi_x, "fiber": sum(betti), "y": chi_y, "multiplicative": multiplicative}

    if args.format == "json":
        doc = {
            "pair": desc.label,
            "parabolic": sorted(set(subset)),
            "fiber_betti": betti,
            "y_diamond": y.to_json_dict(),
            "picard": picard,
            "euler": euler,
            "status": "ok",
            "exit_code": EXIT_OK,
        }
        return _json(doc), EXIT_OK

    if args.format == "csv":
        rows = [[p, q, "unknown" if y[p, q] is None else y[p, q]] for p in range(y.dim + 1) for q in range(y.dim + 1)]
        return _csv(["p", "q", "value"], rows), EXIT_OK

    lines = [
        f"{desc.label}, parabolic subset {{{','.join(map(str, sorted(set(subset))))}}}",
        f"fiber Betti numbers b_0, b_2, ...: {_spaced(betti)}",
        "",
        _diamond_grid(y),
        f"Pic: rank {report.rank_free_part if report.rank_free_part is not None else 'unknown'}, "
        f"torsion {report.torsion or 'unknown'}, c1 iso {report.c1_isomorphism}, "
        f"extra rank on Y {report.y_gamma_extra_rank}, split {report.y_split}",
        f"  {report.reason}",
    ]
    if chi_x is None:
        lines.append("Euler characteristic: unknown (base diamond has unknown entries)")
    else:
        lines.append(f"Euler characteristic: chi(Y) = {chi_y} = chi(X) * sum(b) = {chi_x} * {sum(betti)}")
    return "\n".join(lines) + "\n", EXIT_OK


# --- entry point -------------------------------------------------------------------------

def _add_pair_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, help="AIII, BDI_even, BDI_odd, CI, DIII, EIII or EVII ('-' also accepted)")
    p.add_argument("--m", type=int, help="first parameter (AIII, BDI_even, BDI_odd)")
    p.add_argument("--n", type=int, help="second parameter of AIII; the parameter of CI and DIII")


def _add_format(p: argparse.ArgumentParser, default: str = "markdown") -> None:
    p.add_argument("--format", choices=FORMATS, default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermsig",
        description="Signatures of theta-stable parabolics for Hermitian symmetric pairs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("signatures", help="enumerate attainable (R+, R-) pairs")
    _add_pair_args(p)
    p.add_argument("--rplus", type=int, help="restrict to one R+ value")
    p.add_argument("--check", action="store_true", help="compare with the closed forms (R+ in {0,1})")
    p.add_argument("--provenance", action="store_true", help="list the face and coset word attaining each pair")
    p.add_argument("--threads", type=int, default=1)
    _add_format(p)
    p.set_defaults(func=cmd_signatures)

    p = sub.add_parser("tables", help="reproduce a signature table over a parameter grid")
    p.add_argument("--which", type=int, choices=(2, 3, 4), required=True)
    p.add_argument("--max-params", type=int, default=8, help="bound on m+n (AIII) and on the other families' parameter")
    _add_format(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("vanishing", help="H^(0,q), H^(1,q) vanishing and H^(1,1) structure")
    _add_pair_args(p)
    p.add_argument("--qmax", type=int, help="largest q reported (default dim_C X + 1)")
    _add_format(p)
    p.set_defaults(func=cmd_vanishing)

    p = sub.add_parser(
        "hodge-y",
        help="Hodge numbers of the flag bundle Y over X",
        epilog=_label_help(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _add_pair_args(p)
    p.add_argument("--parabolic", default="", help="comma-separated compact simple labels kept in H, e.g. '1,2' or ''")
    p.add_argument("--x-hodge", required=True, metavar="FILE", help="JSON Hodge diamond of X")
    p.add_argument("--assume-h02-zero", action="store_true", help="take H^(0,2)(X)=0 as a hypothesis")
    _add_format(p, default="json")
    p.set_defaults(func=cmd_hodge_y)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except (CliError, HermsigError) as exc:
        code = exc.code if isinstance(exc, CliError) else EXIT_USAGE
        if isinstance(exc, DimensionMismatch):
            code = EXIT_DIMENSION
        if getattr(args, "format", None) == "json":
            sys.stdout.write(_json({"status": "error", "exit_code": code, "message": str(exc)}))
        print(f"hermsig: error: {exc}", file=sys.stderr)
        return code
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
