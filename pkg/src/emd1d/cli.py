"""Command line interface: ``emd1d <subcommand> ...`` (or ``python -m emd1d``).

Exit codes: 0 success, 1 data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, TextIO

from . import __version__
from .emd import emd_continuous, emd_discrete, emd_unit_normalized, to_prob_vector
from .expectation import m_tilde, m_value, monte_carlo_mean_emd
from .genfun import histogram, mean_emd_discrete, n_poly, w_poly
from .graph import (
    build_emd_graph,
    cheeger_bounds,
    connected_components,
    earth_movers_graph,
    isoperimetric_number,
    laplacian,
    mean_distance,
    mean_distance_bounds,
    spectrum,
    threshold_sweep,
    zero_eigenvalue_multiplicity,
)
from .ingest import DataError, parse_distribution_csv, render_decimal


@dataclass
class RunConfig:
    precision: int = 6
    grade_scale: int | None = None
    seed: int | None = None
    iso_cap: int = 25
    max_vertices: int = 5000

    def __post_init__(self):
        if not 1 <= self.precision <= 50:
            raise ValueError("precision must be in [1, 50]")
        if self.grade_scale is not None and self.grade_scale < 2:
            raise ValueError("grade scale size must be >= 2")


def _sig(x: float) -> float:
    return float(f"{x:.6g}")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _writer(out: TextIO):
    return csv.writer(out, lineterminator="\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_pair(args, cfg: RunConfig, out: TextIO) -> None:
    if args.input:
        if not args.ids:
            raise DataError("--input needs --ids I,J")
        records = {r.id: r for r in parse_distribution_csv(args.input, cfg.grade_scale)}
        try:
            a, b = (records[i].counts for i in args.ids)
        except KeyError as exc:
            raise DataError(f"no record with id {exc.args[0]}") from None
    else:
        if args.a is None or args.b is None:
            raise DataError("give --a and --b, or --input with --ids")
        a, b = args.a, args.b
    if not args.unit:
        out.write(f"{emd_discrete(a, b)}\n")
        return
    if len(a) != len(b):
        raise DataError("unit normalization needs equal part counts")
    if sum(a) == sum(b):
        d = emd_unit_normalized(a, b)
    else:
        d = emd_continuous(to_prob_vector(a), to_prob_vector(b)) / (len(a) - 1)
    out.write(render_decimal(d, cfg.precision) + "\n")


def cmd_mean(args, cfg: RunConfig, out: TextIO) -> None:
    if args.p < 1 or args.q < 1:
        raise DataError("p and q must be positive")
    if args.s is None:
        value = m_value(args.p, args.q)
    else:
        if args.s < 0:
            raise DataError("s must be non-negative")
        value = mean_emd_discrete(args.p, args.q, args.s)
    out.write(render_decimal(value, cfg.precision) + "\n")


def cmd_mtable(args, cfg: RunConfig, out: TextIO) -> None:
    if args.nmax < 1:
        raise DataError("nmax must be positive")
    if args.tilde:
        digits = args.precision or 4
        out.write(" ".join(render_decimal(m_tilde(n), digits) for n in range(2, args.nmax + 1)))
        out.write("\n")
        return
    digits = args.precision or 3
    w = _writer(out)
    w.writerow(["p"] + [str(q) for q in range(1, args.nmax + 1)])
    for p in range(1, args.nmax + 1):
        w.writerow([p] + [render_decimal(m_value(p, q), digits) for q in range(1, args.nmax + 1)])


def cmd_hist(args, cfg: RunConfig, out: TextIO) -> None:
    if args.s < 0 or args.n < 1:
        raise DataError("need s >= 0 and n >= 1")
    h = histogram(args.s, args.n)
    w = _writer(out)
    w.writerow(["value", "count"])
    for k, c in h.rows():
        w.writerow([k, c])


def _poly_rows(poly, out: TextIO) -> None:
    w = _writer(out)
    w.writerow(["degree", "coefficient"])
    for i, c in enumerate(poly.coeffs):
        w.writerow([i, c])


def cmd_npoly(args, cfg: RunConfig, out: TextIO) -> None:
    if args.p < 1 or args.q < 1:
        raise DataError("p and q must be positive")
    _poly_rows(n_poly(args.p, args.q), out)


def cmd_wpoly(args, cfg: RunConfig, out: TextIO) -> None:
    if args.p < 1 or args.q < 1:
        raise DataError("p and q must be positive")
    _poly_rows(w_poly(args.p, args.q), out)


def cmd_sample(args, cfg: RunConfig, out: TextIO) -> None:
    if args.n < 2 or args.trials < 1:
        raise DataError("need n >= 2 and trials >= 1")
    est, se = monte_carlo_mean_emd(args.n, args.trials, args.seed, args.batch_size)
    exact = m_value(args.n, args.n)
    doc = {
        "n": args.n,
        "trials": args.trials,
        "estimate": _sig(est),
        "std_error": None if se != se else _sig(se),
        "exact_mean": render_decimal(exact, cfg.precision),
        "exact_mean_fraction": str(exact),
        "meta": {"seed": args.seed, "batch_size": args.batch_size, "sampler": "normalized-exponential/PCG64"},
    }
    json.dump(doc, out, indent=2)
    out.write("\n")


def cmd_graph(args, cfg: RunConfig, out: TextIO) -> None:
    records = parse_distribution_csv(args.input, cfg.grade_scale)
    dists = [r.probabilities() for r in records]
    g = build_emd_graph(dists, args.threshold, labels=[r.id for r in records])
    comps = connected_components(g)
    doc: dict = {
        "labels": [r.id for r in records],
        "names": [r.label for r in records],
        "threshold": render_decimal(args.threshold, cfg.precision),
        "edges": sorted([g.labels[u], g.labels[v]] for u, v in g.edges),
        "components": [[g.labels[v] for v in c] for c in comps],
        "component_count": len(comps),
    }
    if g.m >= 2:
        spec = spectrum(laplacian(g))
        lam2 = float(spec.eigenvalues[1])
        doc["spectrum"] = [_sig(x) for x in spec.eigenvalues]
        doc["zero_eigenvalue_multiplicity"] = zero_eigenvalue_multiplicity(spec)
        doc["lambda2"] = _sig(lam2)
        doc["d_max"] = g.d_max
        if g.m <= cfg.iso_cap:
            iso = isoperimetric_number(g, cfg.iso_cap)
            doc["isoperimetric_number"] = render_decimal(iso, cfg.precision)
        if len(comps) == 1:
            lo, hi = cheeger_bounds(lam2, g.d_max)
            doc["cheeger_bounds"] = [_sig(lo), _sig(hi)]
            doc["mean_distance"] = render_decimal(mean_distance(g), cfg.precision)
            lo, hi = mean_distance_bounds(lam2, g.d_max, g.m)
            doc["mean_distance_bounds"] = [_sig(lo), _sig(hi)]
            lo, hi = mean_distance_bounds(lam2, g.d_max, g.m, form="mohar")
            doc["mean_distance_bounds_mohar"] = [_sig(lo), _sig(hi)]
    doc["meta"] = {"version": __version__, "input": str(args.input), "edge_rule": "unit EMD <= threshold"}
    if args.edges:
        with open(args.edges, "w") as fh:
            for u, v in sorted(g.edges):
                fh.write(f"{g.labels[u]} {g.labels[v]}\n")
    json.dump(doc, out, indent=2)
    out.write("\n")


def cmd_sweep(args, cfg: RunConfig, out: TextIO) -> None:
    if args.steps < 1:
        raise DataError("steps must be >= 1")
    if args.tmax < args.tmin:
        raise DataError("tmax must be >= tmin")
    records = parse_distribution_csv(args.input, cfg.grade_scale)
    if args.steps == 1:
        ts = [args.tmin]
    else:
        ts = [args.tmin + k * (args.tmax - args.tmin) / (args.steps - 1) for k in range(args.steps)]
    w = _writer(out)
    w.writerow(["threshold", "component_count"])
    for t, c in threshold_sweep([r.probabilities() for r in records], ts):
        w.writerow([render_decimal(t, cfg.precision), c])


def cmd_emg(args, cfg: RunConfig, out: TextIO) -> None:
    g = earth_movers_graph(args.s, args.n, cfg.max_vertices)
    if args.json:
        doc = {
            "s": args.s,
            "n": args.n,
            "labels": ["-".join(map(str, v)) for v in g.labels],
            "edges": sorted(list(e) for e in g.edges),
            "component_count": len(connected_components(g)),
        }
        if g.m >= 2:
            doc["mean_distance"] = render_decimal(mean_distance(g), cfg.precision)
        json.dump(doc, out, indent=2)
        out.write("\n")
        return
    for u, v in sorted(g.edges):
        out.write(f"{u} {v}\n")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="emd1d", description="Exact one-dimensional EMD toolkit")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=func)
        return p

    def precision(p, default=6):
        p.add_argument("--precision", type=int, default=default, help="decimal digits")

    p = add("pair", cmd_pair, "EMD between two distributions")
    p.add_argument("--a", type=_ints)
    p.add_argument("--b", type=_ints)
    p.add_argument("--input")
    p.add_argument("--ids", type=_ints, help="two record ids from --input")
    p.add_argument("--n", type=int, dest="grade_scale")
    p.add_argument("--unit", action="store_true", help="unit-normalized EMD")
    precision(p)

    p = add("mean", cmd_mean, "exact discrete mean (with --s) or limiting M_{p,q}")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int)
    precision(p)

    p = add("mtable", cmd_mtable, "table of M_{p,q}, or the M~_n row with --tilde")
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--tilde", action="store_true")
    p.add_argument("--precision", type=int, default=None)

    p = add("hist", cmd_hist, "exact EMD histogram on C(s,n) x C(s,n)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    for name, func in (("npoly", cmd_npoly), ("wpoly", cmd_wpoly)):
        p = add(name, func, f"coefficients of {name[0].upper()}_{{p,q}}(t)")
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--q", type=int, required=True)

    p = add("sample", cmd_sample, "Monte Carlo mean EMD on the simplex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--batch-size", type=int, default=100_000)
    precision(p)

    p = add("graph", cmd_graph, "threshold graph diagnostics as JSON")
    p.add_argument("--input", required=True)
    p.add_argument("--threshold", type=_fraction, required=True)
    p.add_argument("--n", type=int, dest="grade_scale")
    p.add_argument("--edges", help="also write an edge list 'u v' to this path")
    p.add_argument("--iso-cap", type=int, default=25)
    precision(p)

    p = add("sweep", cmd_sweep, "component count across thresholds (CSV)")
    p.add_argument("--input", required=True)
    p.add_argument("--tmin", type=_fraction, required=True)
    p.add_argument("--tmax", type=_fraction, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--n", type=int, dest="grade_scale")
    precision(p, 4)

    p = add("emg", cmd_emg, "Earth Mover's Graph G(s,n) as an edge list")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-vertices", type=int, default=5000)
    precision(p)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig(
            precision=6 if getattr(args, "precision", None) is None else args.precision,
            grade_scale=getattr(args, "grade_scale", None),
            seed=getattr(args, "seed", None),
            iso_cap=getattr(args, "iso_cap", 25),
            max_vertices=getattr(args, "max_vertices", 5000),
        )
    except ValueError as exc:
        print(f"emd1d: error: {exc}", file=sys.stderr)
        return 2
    try:
        args.func(args, cfg, out)
    except (ValueError, OSError) as exc:
        print(f"emd1d: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
