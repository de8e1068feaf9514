"""Command line interface.

Exit codes: 0 success, 1 a proven inequality was violated, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from pathlib import Path

import numpy as np

from . import io, spectral, verify
from .complex_core import CLOSED, Complex, complement, euler_characteristic
from .operators import hodge_blocks
from .svg import difference_svg

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _target(args) -> Complex:
    if args.subset:
        parent = io.load_input(args.input) if args.input else None
        return io.load_subset(args.subset, parent=parent)
    if not args.input:
        raise io.InputError("--input is required")
    if getattr(args, "whitney", False):
        return io.load_graph(args.input)
    return io.load_input(args.input)


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def cmd_build(args) -> int:
    G = io.load_graph(args.input) if args.whitney else io.load_input(args.input)
    if G.kind != "whole":
        raise io.InputError(f"{args.input}: build expects a complex or graph file")
    _emit(io.complex_to_json(G), args.out)
    return EXIT_OK


def cmd_spectra(args) -> int:
    S = _target(args)
    fmt = args.format or "text"
    if args.per_form:
        specs = spectral.block_spectra(S)
        if fmt == "json":
            text = io.dumps({"per_form": [s.values.tolist() for s in specs], "tau": specs[0].zero_tol if specs else 0.0})
        elif fmt == "csv":
            text = "".join(f"# form {k}\n" + io.spectrum_csv(s) for k, s in enumerate(specs))
        else:
            text = "".join(f"L_{k}: " + " ".join(f"{v:.10g}" for v in s.values) + "\n" for k, s in enumerate(specs))
    else:
        spec = spectral.hodge_spectrum(S)
        if fmt == "json":
            text = io.dumps({"spectrum": spec.values.tolist(), "tau": spec.zero_tol, "n": len(spec)})
        elif fmt == "csv":
            text = io.spectrum_csv(spec)
        else:
            text = " ".join(f"{v:.10g}" for v in spec.values) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_betti(args) -> int:
    S = _target(args)
    b = spectral.betti_exact(S)
    if args.format == "json":
        _emit(io.dumps({"betti": list(b), "f_vector": list(S.f_vector), "kind": S.kind}), args.out)
    else:
        _emit(f"b={_vec(b)}\n", args.out)
    return EXIT_OK


def invariants(S: Complex) -> dict:
    blocks = hodge_blocks(S)
    det = spectral._product([spectral.pseudo_det(B) for B in blocks])
    doc = {
        "kind": S.kind,
        "n": len(S),
        "f_vector": list(S.f_vector),
        "betti": list(spectral.betti_exact(S)),
        "euler_characteristic": euler_characteristic(S),
        "trace": sum(spectral.trace(B) for B in blocks),
        "pseudo_det": det,
        "forest_det": spectral._product([spectral.forest_det(B) for B in blocks]),
        "block_pseudo_det": [spectral.pseudo_det(B) for B in blocks],
        "exact": not isinstance(det, float),
    }
    if S.kind == "whole":
        t = spectral.analytic_torsion(S)
        doc["torsion"] = str(t.value)
        doc["super_pseudo_det"] = str(t.super_pdet)
        doc["torsion_formulas_agree"] = t.agree
    return doc


def cmd_invariants(args) -> int:
    doc = invariants(_target(args))
    if args.format == "json":
        _emit(io.dumps(doc), args.out)
    else:
        _emit("".join(f"{k}: {v}\n" for k, v in doc.items()), args.out)
    return EXIT_OK


def comparison(G: Complex, S: Complex, per_form: bool = False) -> dict:
    """Padded differences of ``sigma(L_G)`` against the closed and open parts."""
    if S.kind == CLOSED:
        K, U = S, complement(G, S)
    else:
        U, K = S, complement(G, S)
    sg, sk, su = (spectral.hodge_spectrum(X) for X in (G, K, U))
    n = len(G)
    eps = verify.CMP_REL * max(1.0, sg.max)
    doc = {
        "n": n,
        "eps": eps,
        "G-K": (sg.values - spectral.pad_left(sk, n).values).tolist(),
        "G-U": (sg.values - spectral.pad_left(su, n).values).tolist(),
        "fusion": (sg.values - np.sort(np.concatenate([sk.values, su.values]))).tolist(),
    }
    if per_form:
        bg, bk, bu = (spectral.block_spectra(X) for X in (G, K, U))
        forms = []
        for k, s in enumerate(bg):
            empty = spectral.Spectrum(np.zeros(0), s.zero_tol)
            kk = bk[k] if k < len(bk) else empty
            uu = bu[k] if k < len(bu) else empty
            forms.append({"G-K": (s.values - spectral.pad_left(kk, len(s)).values).tolist(),
                          "G-U": (s.values - spectral.pad_left(uu, len(s)).values).tolist()})
        doc["per_form"] = forms
    proven = [doc["G-K"], doc["G-U"]] + [f[key] for f in doc.get("per_form", []) for key in ("G-K", "G-U")]
    doc["worst_margin"] = min((min(v) for v in proven if v), default=0.0)
    doc["violated"] = doc["worst_margin"] < -eps
    return doc


def cmd_compare(args) -> int:
    if not args.subset:
        raise io.InputError("compare needs --subset")
    G = io.load_input(args.input) if args.input else None
    S = io.load_subset(args.subset, parent=G)
    G = S.parent
    doc = comparison(G, S, per_form=args.per_form)
    fmt = args.format or "text"
    if fmt == "svg":
        panels = [("sigma(L_G) - sigma(L_S), left padded", {"G-K": doc["G-K"], "G-U": doc["G-U"]})]
        for k, f in enumerate(doc.get("per_form", [])):
            panels.append((f"{k}-forms", f))
        _emit(difference_svg(panels), args.out)
    elif fmt == "json":
        _emit(io.dumps(doc), args.out)
    else:
        lines = [f"{'j':>4} {'G-K':>14} {'G-U':>14} {'fusion':>14}"]
        for j, row in enumerate(zip(doc["G-K"], doc["G-U"], doc["fusion"]), start=1):
            lines.append(f"{j:>4} " + " ".join(f"{v:>14.8g}" for v in row))
        for k, f in enumerate(doc.get("per_form", [])):
            lines.append(f"# {k}-forms")
            for j, row in enumerate(zip(f["G-K"], f["G-U"]), start=1):
                lines.append(f"{j:>4} " + " ".join(f"{v:>14.8g}" for v in row))
        lines.append(f"worst margin {doc['worst_margin']:.6g} ({'VIOLATED' if doc['violated'] else 'ok'})")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_VIOLATION if doc["violated"] else EXIT_OK


def _parse_range(text: str, cast):
    """``"8-14"`` -> ``(8, 14)``; ``"20"`` -> ``20``."""
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return (cast(lo), cast(hi))
        return cast(text)
    except ValueError:
        raise io.InputError(f"cannot parse {text!r} as a value or lo-hi range") from None


def cmd_verify(args) -> int:
    seed = args.seed
    if seed is None:
        seed = secrets.randbits(32)
        print(f"seed: {seed}", file=sys.stderr)
    kw = dict(seed=seed, trials=args.trials, split=args.split)
    if args.input:
        kw.update(generator="explicit-complex", complex=io.load_input(args.input))
    if args.nv:
        kw["nv"] = _parse_range(args.nv, int)
    if args.edge_prob:
        kw["edge_prob"] = _parse_range(args.edge_prob, float)
    if args.ne is not None:
        kw["ne"] = args.ne
    if args.stars:
        kw["stars"] = _parse_range(args.stars, int)
    spec = verify.TrialSpec(**kw)
    try:
        spec.validate()
    except ValueError as e:
        raise io.InputError(str(e)) from None
    reports = verify.run_suite(spec, workers=args.workers)
    summary = verify.format_summary(reports) + "\n"
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        verify.write_jsonl(reports, out / "report.jsonl")
        (out / "summary.txt").write_text(summary, encoding="utf-8")
        verify.write_witnesses(reports, out / "witnesses")
    else:
        for r in reports:
            sys.stdout.write(r.to_json() + "\n")
    sys.stderr.write(summary)
    return EXIT_OK if verify.suite_ok(reports) else EXIT_VIOLATION


def cmd_report(args) -> int:
    try:
        reports = verify.read_jsonl(args.input)
    except (json.JSONDecodeError, TypeError, KeyError) as e:
        raise io.InputError(f"{args.input}: not a report file ({e})") from None
    if args.format == "json":
        _emit("".join(io.dumps(verify._jsonable(row)) for row in verify.summarize(reports)), args.out)
    else:
        _emit(verify.format_summary(reports) + "\n", args.out)
    return EXIT_OK if verify.suite_ok(reports) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hodgespec", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, subset=True, fmt=("text", "json")):
        sp.add_argument("--input", help="complex, graph or subset JSON file")
        if subset:
            sp.add_argument("--subset", help="subset JSON file")
        sp.add_argument("--format", choices=fmt)
        sp.add_argument("--out", help="output file (default: stdout)")

    sp = sub.add_parser("build", help="canonical complex JSON from facets or a graph")
    common(sp, subset=False, fmt=("json",))
    sp.add_argument("--whitney", action="store_true", help="treat --input as a graph")
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("spectra", help="Hodge spectrum")
    common(sp, fmt=("text", "json", "csv"))
    sp.add_argument("--per-form", action="store_true")
    sp.add_argument("--whitney", action="store_true")
    sp.set_defaults(func=cmd_spectra)

    sp = sub.add_parser("betti", help="exact Betti vector")
    common(sp)
    sp.add_argument("--whitney", action="store_true")
    sp.set_defaults(func=cmd_betti)

    sp = sub.add_parser("invariants", help="f-vector, Betti, chi, trace, Det, det(L+1), torsion")
    common(sp)
    sp.add_argument("--whitney", action="store_true")
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("compare", help="padded spectral differences of a subset against its parent")
    common(sp, fmt=("text", "json", "svg"))
    sp.add_argument("--per-form", action="store_true")
    sp.set_defaults(func=cmd_compare)

    sp = sub.add_parser("verify", help="randomized verification suite")
    sp.add_argument("--input", help="explicit complex instead of random graphs")
    sp.add_argument("--out", help="directory for report.jsonl, summary.txt and witnesses")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--nv", help="vertex count or range lo-hi (default 8-14)")
    sp.add_argument("--edge-prob", help="edge probability or range lo-hi (default 0.3-0.6)")
    sp.add_argument("--ne", type=int, help="fixed edge count (G(n, m) model)")
    sp.add_argument("--stars", help="stars per open set, count or range (default 1-6)")
    sp.add_argument("--split", choices=verify.SPLITS, default="mixed")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("report", help="summary table of a report.jsonl")
    sp.add_argument("--input", required=True)
    sp.add_argument("--format", choices=("text", "json"))
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (io.InputError, FileNotFoundError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
