"""Command-line front end.

Every quantity is emitted as a record carrying the canonical exact string,
its float value, and its log10, so results stay readable at matrix sizes
where doubles overflow.  Output formats: an aligned text table, JSON, or
CSV with a fixed column order (documented in the README).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import constants, groups, mixedstates, sampling, verify

COLUMNS = (
    "quantity",
    "n",
    "field",
    "convention",
    "family",
    "rank",
    "alpha",
    "beta",
    "body",
    "dim",
    "exact",
    "float",
    "log10",
)

_LN10 = math.log(10.0)


def _record(quantity, exact=None, value=None, log10=None, **params):
    rec = dict.fromkeys(COLUMNS)
    rec["quantity"] = quantity
    for key, val in params.items():
        rec[key] = val
    if exact is not None:
        rec["exact"] = str(exact)
        value = exact.to_float()
        log10 = exact.log10() if exact.sign > 0 else None
    # values outside the double range stay readable through exact/log10
    rec["float"] = value if value is None or math.isfinite(value) else None
    rec["log10"] = log10
    return rec


# -- subcommand handlers -------------------------------------------------------


def _cmd_volume(args):
    space = mixedstates.StateSpace(args.n, args.field)
    return [_record("volume", exact=mixedstates.vol_mixed(space), n=args.n, field=args.field)]


def _cmd_edge(args):
    space = mixedstates.StateSpace(args.n, args.field)
    value = mixedstates.vol_edge(space, args.rank_deficiency)
    return [_record("edge", exact=value, n=args.n, field=args.field, rank=args.rank_deficiency)]


def _cmd_geometry(args):
    space = mixedstates.StateSpace(args.n, args.field)
    g = mixedstates.geometry(space)
    base = {"n": args.n, "field": args.field}
    return [
        _record("radius_circumscribed", exact=g.circumradius, **base),
        _record("radius_inscribed", exact=g.inradius, **base),
        _record(
            "radius_effective",
            value=g.effective_radius,
            log10=math.log10(g.effective_radius),
            **base,
        ),
        _record("gamma", exact=g.gamma, **base),
        _record("chi1", value=g.chi1, log10=g.chi1_log10, **base),
        _record("chi2", value=g.chi2, log10=g.chi2_log10, **base),
        _record("chi", value=g.chi, log10=g.chi_log10, **base),
    ]


def _cmd_reference(args):
    body = mixedstates.reference_body(args.body, args.dim)
    records = [
        _record("reference_volume", exact=body.volume, body=args.body, dim=args.dim)
    ]
    if body.boundary_ratio is not None:
        records.append(
            _record("reference_gamma", exact=body.gamma, body=args.body, dim=args.dim)
        )
    return records


def _cmd_group(args):
    family = groups.Family(args.family)
    spec = groups.CosetSpec(family, args.n)
    conv = groups.Convention(args.convention)
    if family in (
        groups.Family.UNITARY,
        groups.Family.SPECIAL_UNITARY,
        groups.Family.ORTHOGONAL,
        groups.Family.SPECIAL_ORTHOGONAL,
    ):
        value = groups.vol_group(spec, conv)
    else:
        value = groups.vol_coset(spec, conv)
    return [
        _record(
            "group_volume",
            exact=value,
            n=args.n,
            family=args.family,
            convention=args.convention,
        )
    ]


def _cmd_constants(args):
    alpha = Fraction(args.alpha)
    beta = Fraction(args.beta)
    base = {"n": args.n, "alpha": str(alpha), "beta": str(beta)}
    exact_mode = (2 * alpha).denominator == 1 and beta in (1, 2)
    if exact_mode:
        params = constants.EnsembleParams(args.n, alpha, int(beta))
        return [
            _record("laguerre_integral", exact=constants.laguerre_integral(params), **base),
            _record("c_norm", exact=constants.c_norm(params), **base),
        ]
    log_c = constants.log_c_norm(args.n, float(alpha), float(beta))
    return [_record("c_norm", value=math.exp(log_c), log10=log_c / _LN10, **base)]


def _cmd_sample(args, out):
    rng = sampling.make_rng(args.seed)
    batch = sampling.sample_hs_batch(args.n, args.field, rng, args.samples)
    spectra = sampling.eigvals_hermitian(batch)
    for rho, spectrum in zip(batch, spectra):
        obj = {"n": args.n, "field": args.field, "spectrum": [float(x) for x in spectrum]}
        if not args.spectra_only:
            obj["matrix_re"] = [float(x) for x in rho.real.reshape(-1)]
            if args.field == "complex":
                obj["matrix_im"] = [float(x) for x in rho.imag.reshape(-1)]
        out.write(json.dumps(obj) + "\n")
    return 0


def _cmd_verify(args, out):
    checks = verify.run_suite(
        args.suite,
        n=args.n,
        field=args.field,
        alpha=Fraction(args.alpha) if args.alpha else None,
        beta=Fraction(args.beta) if args.beta else None,
        n_samples=args.samples,
        seed=args.seed,
        chunks=args.chunks,
        workers=args.workers,
    )
    out.write(json.dumps(checks, indent=2) + "\n")
    return 0 if all(c["pass"] for c in checks) else 1


# -- output formatting ---------------------------------------------------------


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _format_records(records, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    if fmt == "csv":
        lines = [",".join(COLUMNS)]
        for rec in records:
            lines.append(",".join(_cell(rec[col]) for col in COLUMNS))
        return "\n".join(lines) + "\n"
    # text: aligned table, dropping columns that are empty everywhere
    cols = [c for c in COLUMNS if any(rec[c] is not None for rec in records)]
    rows = [[_cell(rec[c]) for c in cols] for rec in records]
    widths = [max(len(c), *(len(row[i]) for row in rows)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


# -- argument parsing ----------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsgeom",
        description="Exact Hilbert-Schmidt geometry of quantum state spaces, "
        "group volumes, and Monte Carlo verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, field=True):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--out", metavar="PATH", default=None)
        if field:
            p.add_argument("--field", choices=("complex", "real"), default="complex")

    p = sub.add_parser("volume", help="HS volume of the state space")
    p.add_argument("--n", type=int, required=True)
    add_common(p)

    p = sub.add_parser("edge", help="volume of the rank-deficient edges")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank-deficiency", type=int, default=1, metavar="K")
    add_common(p)

    p = sub.add_parser("geometry", help="radii and shape coefficients")
    p.add_argument("--n", type=int, required=True)
    add_common(p)

    p = sub.add_parser("reference", help="volume/gamma of reference bodies (unit size)")
    p.add_argument("--body", choices=[k.value for k in mixedstates.ReferenceKind], required=True)
    p.add_argument("--dim", type=int, required=True)
    add_common(p, field=False)

    p = sub.add_parser("group", help="group and coset volumes")
    p.add_argument("--family", choices=[f.value for f in groups.Family], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--convention", choices=("A", "B", "C"), default="A")
    add_common(p, field=False)

    p = sub.add_parser("constants", help="eigenvalue-density normalization constants")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default="1")
    p.add_argument("--beta", default="2")
    add_common(p, field=False)

    p = sub.add_parser("sample", help="emit HS-distributed density matrices as JSON lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--field", choices=("complex", "real"), default="complex")
    p.add_argument("--samples", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--spectra-only", action="store_true")
    p.add_argument("--out", metavar="PATH", default=None)

    p = sub.add_parser("verify", help="Monte Carlo checks against the exact formulas")
    p.add_argument("--suite", choices=verify.SUITES, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--field", choices=("complex", "real"), default=None)
    p.add_argument("--alpha", default=None)
    p.add_argument("--beta", default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--chunks", type=int, default=10)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", metavar="PATH", default=None)

    return parser


_HANDLERS = {
    "volume": _cmd_volume,
    "edge": _cmd_edge,
    "geometry": _cmd_geometry,
    "reference": _cmd_reference,
    "group": _cmd_group,
    "constants": _cmd_constants,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command in _HANDLERS:
            records = _HANDLERS[args.command](args)
            text = _format_records(records, args.format)
            if args.out:
                with open(args.out, "w") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        if args.out:
            with open(args.out, "w") as fh:
                return _cmd_sample(args, fh) if args.command == "sample" else _cmd_verify(args, fh)
        if args.command == "sample":
            return _cmd_sample(args, sys.stdout)
        return _cmd_verify(args, sys.stdout)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
