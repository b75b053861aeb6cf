"""Command-line front end.

Subcommands expose every engine with machine-readable output:

* ``table-delta``   half-sum coefficient catalog (all rows or one label)
* ``rank2-catalog`` rank-two eigenvalue polynomials and collision pairs
* ``collide``       exhaustive collision search on one space
* ``witness``       reflection collision certificate (rank >= 3)
* ``hopf``          swap-theorem scan on the Hopf fibration
* ``su2f``          invariant dimensions / simplicity certificate
* ``product``       weighted-product collision hyperplanes and beta
* ``simplicity``    resultant condition engines on a named family

Every subcommand has a human-readable table mode and ``--json``;
``table-delta`` and ``rank2-catalog`` also offer ``--csv``.  All numbers
serialize as exact rational strings.  Exit status: 0 on success, 1 when
a computation succeeded but the certificate failed (or the requested
construction is out of scope for the datum), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bundles, products, simplicity, spectrum, su2f, symmdata
from .exactalg import rational_from_str, rational_to_str

EXIT_OK = 0
EXIT_CERT_FAILED = 1
EXIT_USAGE = 2


def _emit(payload: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _parse_metric(text: str, count: int) -> list:
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != count:
        raise ValueError(f"expected {count} comma-separated rationals")
    values = [rational_from_str(p) for p in parts]
    if any(v <= 0 for v in values):
        raise ValueError("metric entries must be positive")
    return values


def _datum_from_args(args) -> symmdata.RestrictedDatum:
    label = args.label
    ell = args.rank if args.rank is not None else args.ell
    r = args.r
    if label == "AI" and r is None and ell is not None:
        r = ell  # AI is parameterized by r = restricted rank
        ell = None
    _, needs_ell = symmdata.label_parameters(label)
    if not needs_ell:
        ell = None
    return symmdata.restricted_datum(label, r=r, ell=ell)


def _cmd_table_delta(args) -> int:
    if args.label:
        data = [_datum_from_args(args)]
    else:
        data = symmdata.table_rows()
    rows = [d.to_json() for d in data]
    if args.csv:
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["label", "params", "restricted_type", "two_delta_bar"])
        for row in rows:
            params = ";".join(f"{k}={v}" for k, v in sorted(row["params"].items()))
            writer.writerow(
                [row["label"], params, row["restricted_type"],
                 " ".join(row["two_delta_bar"])]
            )
        print(out.getvalue(), end="")
        return EXIT_OK
    if args.label and len(rows) == 1:
        payload = {"label": rows[0]["label"], "two_delta_bar": rows[0]["two_delta_bar"]}
    else:
        payload = {"rows": rows}
    lines = [
        f"{row['label']:7s} {str(row['params']):24s} "
        f"{row['restricted_type']:4s} ({', '.join(row['two_delta_bar'])})"
        for row in rows
    ]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_rank2_catalog(args) -> int:
    cases = spectrum.rank2_catalog()
    verified = all(
        spectrum.verify_rank2_pair(case, pair)
        for case in cases
        for pair in case.pairs
    )
    rows = [case.to_json() for case in cases]
    if args.csv:
        out = io.StringIO()
        writer = csv.writer(out)
        writer.writerow(["label", "restricted_type", "two_delta_bar", "polynomial", "pairs"])
        for row in rows:
            writer.writerow(
                [row["label"], row["restricted_type"],
                 " ".join(row["two_delta_bar"]), row["polynomial"],
                 " | ".join(row["pairs"])]
            )
        print(out.getvalue(), end="")
        return EXIT_OK if verified else EXIT_CERT_FAILED
    payload = {"cases": rows, "all_pairs_verified": verified}
    lines = []
    for row in rows:
        lines.append(f"{row['label']:7s} [{row['restricted_type']}]  {row['polynomial']}")
        for pair in row["pairs"]:
            lines.append(f"         {pair}")
    lines.append(f"all pairs verified: {verified}")
    _emit(payload, args.json, lines)
    return EXIT_OK if verified else EXIT_CERT_FAILED


def _cmd_collide(args) -> int:
    datum = _datum_from_args(args)
    reports = spectrum.enumerate_collisions(
        datum, args.bound, exclude_dual_pairs=not args.include_duals
    )
    payload = {
        "label": datum.descriptor.label,
        "bound": args.bound,
        "include_duals": bool(args.include_duals),
        "collisions": [rep.to_json() for rep in reports],
    }
    lines = [
        f"{rep.weight_a} ~ {rep.weight_b}  eigenvalue {rational_to_str(rep.eigenvalue)}"
        + ("  [dual pair]" if rep.dual_related else "")
        for rep in reports
    ] or ["no collisions in the box"]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_witness(args) -> int:
    datum = _datum_from_args(args)
    try:
        witness = spectrum.reflection_witness(datum)
    except spectrum.WitnessError as exc:
        payload = {"label": datum.descriptor.label, "error": str(exc)}
        _emit(payload, args.json, [f"no witness: {exc}"])
        return EXIT_CERT_FAILED
    payload = {"label": datum.descriptor.label, **witness.to_json()}
    _emit(
        payload,
        args.json,
        [
            f"v = {witness.weight_v}",
            f"w = {witness.weight_w}",
            f"eigenvalue = {rational_to_str(witness.eigenvalue)}",
        ],
    )
    return EXIT_OK


def _cmd_hopf(args) -> int:
    report = bundles.hopf_swap_theorem_scan(args.n, args.bound, workers=args.workers)
    payload = report.to_json()
    lines = [
        f"n = {report.n}, bound = {report.bound}",
        f"collision pairs: {report.collision_pairs} (all swaps: "
        f"{report.swap_pairs == report.collision_pairs})",
        f"non-swap collisions: {len(report.non_swap_pairs)}",
        f"reduction agreement: {report.agreement_pairs_checked} pairs, "
        f"{report.agreement_mismatches} mismatches",
    ]
    _emit(payload, args.json, lines)
    return EXIT_OK if report.swap_theorem_holds else EXIT_CERT_FAILED


def _cmd_su2f(args) -> int:
    metric = None
    if args.metric:
        metric = tuple(_parse_metric(args.metric, 2))
    report = su2f.simplicity_certificate(args.kmax, sample_metric=metric)
    payload = report.to_json()
    lines = [
        f"kmax = {report.kmax}",
        f"within-k forms distinct: {report.within_k_distinct}",
        f"cross-k injective: {report.cross_k_injective}",
    ]
    if metric is not None:
        lines.append(
            f"metric ({rational_to_str(metric[0])}, {rational_to_str(metric[1])}): "
            f"{len(report.metric_collisions)} collisions"
        )
    lines.append(f"certified: {report.certified}")
    _emit(payload, args.json, lines)
    return EXIT_OK if report.certified else EXIT_CERT_FAILED


def _cmd_product(args) -> int:
    labels = [p.strip() for p in args.factors.split(",") if p.strip()]
    if not labels:
        raise ValueError("need at least one factor")
    factors = [products.factor_spectrum(label, args.bound) for label in labels]
    if args.beta:
        beta = _parse_metric(args.beta, len(factors))
        witnesses = products.check_beta(factors, beta, args.bound)
        payload = {
            "factors": labels,
            "bound": args.bound,
            "beta": [rational_to_str(b) for b in beta],
            "collisions": [w.to_json() for w in witnesses],
        }
        lines = [
            f"{w.array_a} ~ {w.array_b} at {rational_to_str(w.value)}"
            for w in witnesses
        ] or ["no collisions: beta is certified on this box"]
        _emit(payload, args.json, lines)
        return EXIT_OK if not witnesses else EXIT_CERT_FAILED
    certificate = products.generic_beta_certificate(factors, args.bound)
    payload = certificate.to_json()
    lines = [
        f"certified beta = ({', '.join(rational_to_str(b) for b in certificate.beta)})",
        f"hyperplanes avoided: {certificate.hyperplanes}",
        f"distinct eigenvalues checked: {certificate.distinct_values}",
    ]
    _emit(payload, args.json, lines)
    return EXIT_OK


def _cmd_simplicity(args) -> int:
    if args.family == "su2f":
        family = su2f.su2f_representation_family(args.bound)
        param_names = su2f.METRIC_PARAMS
    else:
        family = bundles.hopf_representation_family(args.n, args.bound)
        param_names = bundles.METRIC_PARAMS
    violations = {
        "condition_a": [list(p) for p in simplicity.condition_a(family)],
        "condition_b": simplicity.condition_b(family),
        "condition_c": simplicity.condition_c(family),
    }
    payload = {
        "family": args.family,
        "bound": args.bound,
        "entries": len(family),
        **violations,
    }
    ok = not any(violations.values())
    lines = [
        f"family {args.family}: {len(family)} entries",
        f"identically-vanishing pair resultants: {violations['condition_a']}",
        f"identically-vanishing res(p, p'): {violations['condition_b']}",
        f"identically-vanishing res(p, p''): {violations['condition_c']}",
    ]
    if args.metric:
        values = _parse_metric(args.metric, len(param_names))
        point = dict(zip(param_names, values))
        report = simplicity.evaluate_at_metric(family, point, mode=args.mode)
        payload["metric_report"] = report.to_json()
        ok = ok and report.ok
        lines.append(
            f"at metric {args.metric} [{args.mode}]: "
            + ("all conditions hold" if report.ok else "violations found")
        )
    _emit(payload, args.json, lines)
    return EXIT_OK if ok else EXIT_CERT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="casimirspec",
        description="Exact Laplace-Casimir spectra and simplicity certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_label_opts(p):
        p.add_argument("label_pos", nargs="?", metavar="LABEL", default=None)
        p.add_argument("--label", default=None)
        p.add_argument("--r", type=int, default=None)
        p.add_argument("--ell", type=int, default=None)
        p.add_argument("--rank", type=int, default=None,
                       help="restricted rank (alias for --ell; for AI this is r)")

    p = sub.add_parser("table-delta", help="half-sum coefficient catalog")
    add_label_opts(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_table_delta)

    p = sub.add_parser("rank2-catalog", help="rank-two polynomials and pairs")
    p.add_argument("--json", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_rank2_catalog)

    p = sub.add_parser("collide", help="exhaustive collision search")
    add_label_opts(p)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--include-duals", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_collide)

    p = sub.add_parser("witness", help="reflection collision certificate")
    add_label_opts(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("hopf", help="Hopf swap-theorem scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--workers", type=int, default=None,
                   help="defaults to CASIMIRSPEC_WORKERS or 1")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_hopf)

    p = sub.add_parser("su2f", help="SU(2)/F simplicity certificate")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--metric", default=None, help="two rationals, e.g. 1,2 or 1/2,3")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_su2f)

    p = sub.add_parser("product", help="weighted products of rank-one spaces")
    p.add_argument("--factors", required=True, help="comma list, e.g. S2,S2 or CP2,OP2")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--beta", default=None, help="check this weight vector instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("simplicity", help="resultant condition engines")
    p.add_argument("--family", choices=("su2f", "hopf"), required=True)
    p.add_argument("--bound", type=int, required=True,
                   help="kmax for su2f, max p+q for hopf")
    p.add_argument("--n", type=int, default=2, help="hopf fibration parameter")
    p.add_argument("--metric", default=None)
    p.add_argument("--mode", choices=("real", "complex"), default="real")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_simplicity)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "label_pos"):
        if args.label is None:
            args.label = args.label_pos
        if args.label is None and args.func is not _cmd_table_delta:
            parser.error("a space label is required")
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
