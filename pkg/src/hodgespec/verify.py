"""Fixed-example and randomized checks of the spectral inequalities.

Each ``check_*`` function returns a :class:`VerifyReport`.  Proven claims
report ``pass`` or ``fail``; announced or conjectured claims always report
``observation`` and flag a violation through a negative ``worst_margin``
plus a witness, so a counterexample is never silently dropped.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path
from typing import Iterable

import numpy as np

from . import exact, spectral
from .complex_core import (CLOSED, OPEN, WHOLE, Complex, as_simplex, complement, euler_characteristic,
                           is_closed, is_locally_maximal, is_open, random_open_set, random_subcomplex,
                           remove_locally_maximal, whitney_complex)
from .operators import connection_laplacian, dirac, hodge, hodge_blocks, unsigned_hodge

PASS, FAIL, OBSERVATION = "pass", "fail", "observation"
CMP_REL = 1e-7
REL_FLOAT_DET = 1e-6
HYDROGEN_TOL = 1e-8
HEAT_TIMES = (0.1, 1.0, 10.0)

# checks whose failure makes a suite run fail
PROVEN_CHECKS = frozenset({
    "spectral_monotonicity", "form_monotonicity", "mckean_singer", "dirac_interlacing",
    "euler_poincare", "complexity_monotone", "degree_bound_kirchhoff",
})


@dataclass
class VerifyReport:
    check: str
    status: str
    worst_margin: float
    witness: dict | None = None
    trials: int = 1
    seed: int | None = None
    trial: int | None = None
    label: str = ""
    details: dict = field(default_factory=dict)

    @property
    def violated(self) -> bool:
        return self.status == FAIL or bool(self.details.get("violated"))

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(_jsonable(self.to_dict()), sort_keys=True)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        v = float(obj)
        return v if math.isfinite(v) else str(v)
    return obj


def serialize(S: Complex) -> dict:
    out = {"kind": S.kind, "elements": [list(x) for x in S]}
    if S.parent is not None:
        out["parent"] = [list(x) for x in S.parent]
    return out


def _witness(**parts) -> dict:
    return {k: serialize(v) if isinstance(v, Complex) else _jsonable(v) for k, v in parts.items()}


class Profile:
    """Lazily computed spectral data of one complex or subset."""

    def __init__(self, S: Complex):
        self.S = S

    @cached_property
    def blocks(self) -> list[np.ndarray]:
        return hodge_blocks(self.S)

    @cached_property
    def block_spectra(self) -> list[spectral.Spectrum]:
        return spectral.spectra_of_blocks(self.blocks)

    @cached_property
    def spectrum(self) -> spectral.Spectrum:
        return spectral.merge(self.block_spectra)

    @cached_property
    def betti(self) -> tuple[int, ...]:
        return tuple(B.shape[0] - exact.rank_exact(B) for B in self.blocks)

    @cached_property
    def pseudo_det(self):
        return spectral._product([spectral.pseudo_det(B) for B in self.blocks])

    @cached_property
    def forest_det(self) -> int:
        return spectral._product([spectral.forest_det(B) for B in self.blocks])

    @cached_property
    def trace(self) -> int:
        return sum(spectral.trace(B) for B in self.blocks)


def _profile(S, cache: dict | None):
    if isinstance(S, Profile):
        return S
    if cache is None:
        return Profile(S)
    key = id(S)
    if key not in cache:
        cache[key] = (S, Profile(S))
    return cache[key][1]


def _require_open_or_closed(G: Complex, S: Complex) -> None:
    members = set(S)
    if any(x not in G for x in members):
        raise ValueError("subset is not contained in the parent complex")
    if not (is_closed(G, members) or is_open(G, members)):
        raise ValueError("subset is neither open nor closed")


def _eps(lam_max: float) -> float:
    return CMP_REL * max(1.0, lam_max)


def check_spectral_monotonicity(G: Complex, S: Complex, cache=None) -> VerifyReport:
    """Left-padded ``lambda_j(S) <= lambda_j(G)`` for every ``j``."""
    _require_open_or_closed(G, S)
    pg, ps = _profile(G, cache), _profile(S, cache)
    lg = pg.spectrum.values
    ls = spectral.pad_left(ps.spectrum, len(G)).values
    eps = _eps(pg.spectrum.max)
    diff = lg - ls
    margin = float(diff.min()) if diff.size else 0.0
    ok = margin >= -eps
    j = int(np.argmin(diff)) if diff.size else None
    return VerifyReport("spectral_monotonicity", PASS if ok else FAIL, margin,
                        witness=None if ok else _witness(G=G, S=S, index=j),
                        label=S.kind, details={"eps": eps, "n": len(G), "m": len(S)})


def check_form_monotonicity(G: Complex, S: Complex, cache=None) -> VerifyReport:
    """Per-degree padded monotonicity ``lambda_j(L_k(S)) <= lambda_j(L_k(G))``."""
    _require_open_or_closed(G, S)
    pg, ps = _profile(G, cache), _profile(S, cache)
    eps = _eps(pg.spectrum.max)
    per_k = []
    worst = (0.0, None)
    for k, sg in enumerate(pg.block_spectra):
        ss = ps.block_spectra[k] if k < len(ps.block_spectra) else spectral.Spectrum(np.zeros(0), sg.zero_tol)
        diff = sg.values - spectral.pad_left(ss, len(sg)).values
        m = float(diff.min()) if diff.size else 0.0
        per_k.append(m)
        if m < worst[0]:
            worst = (m, k)
    margin = min(per_k, default=0.0)
    ok = margin >= -eps
    return VerifyReport("form_monotonicity", PASS if ok else FAIL, margin,
                        witness=None if ok else _witness(G=G, S=S, degree=worst[1]),
                        label=S.kind, details={"eps": eps, "per_degree": per_k})


def check_mckean_singer(S: Complex, cache=None) -> VerifyReport:
    """Even and odd non-zero Hodge spectra agree; ``str(exp(-tL)) = chi``."""
    p = _profile(S, cache)
    eps = _eps(p.spectrum.max)
    even = np.sort(np.concatenate([s.nonzero() for s in p.block_spectra[0::2]] or [np.zeros(0)]))
    odd = np.sort(np.concatenate([s.nonzero() for s in p.block_spectra[1::2]] or [np.zeros(0)]))
    if len(even) == len(odd):
        margin = -float(np.abs(even - odd).max()) if even.size else 0.0
    else:
        longer = even if len(even) > len(odd) else odd
        margin = -float(np.abs(longer).max())
    chi = euler_characteristic(S)
    heat = {}
    for t in HEAT_TIMES:
        st = sum((-1) ** k * float(np.exp(-t * s.values).sum()) for k, s in enumerate(p.block_spectra))
        heat[str(t)] = abs(st - chi)
    heat_ok = all(r <= CMP_REL for r in heat.values())
    ok = margin >= -eps and heat_ok
    return VerifyReport("mckean_singer", PASS if ok else FAIL, margin,
                        witness=None if ok else _witness(S=S),
                        label=S.kind, details={"eps": eps, "even": len(even), "odd": len(odd),
                                               "supertrace_residual": heat, "chi": chi})


def check_dirac_interlacing(G: Complex, x) -> VerifyReport:
    """Cauchy interlacing of ``D_G`` and ``D_K`` for ``K = G \\ {x}``."""
    x = as_simplex(x)
    if not is_locally_maximal(G, x):
        raise ValueError(f"{x} is not locally maximal")
    K = remove_locally_maximal(G, x)
    eg = spectral.eigenvalues_sym(dirac(G).matrix).values
    ek = spectral.eigenvalues_sym(dirac(K).matrix).values
    eps = _eps(float(np.abs(eg).max()) if eg.size else 0.0)
    if ek.size:
        margin = float(min((ek - eg[:-1]).min(), (eg[1:] - ek).min()))
    else:
        margin = 0.0
    ok = margin >= -eps
    return VerifyReport("dirac_interlacing", PASS if ok else FAIL, margin,
                        witness=None if ok else _witness(G=G, x=list(x)),
                        details={"eps": eps, "x": list(x)})


def check_interlacing_all(G: Complex) -> VerifyReport:
    """Interlacing for every locally maximal element, folded into one report."""
    reports = [check_dirac_interlacing(G, x) for x in G.facets()]
    if not reports:
        return VerifyReport("dirac_interlacing", PASS, 0.0, details={"facets": 0})
    worst = min(reports, key=lambda r: r.worst_margin)
    status = FAIL if any(r.status == FAIL for r in reports) else PASS
    return VerifyReport("dirac_interlacing", status, worst.worst_margin, witness=worst.witness,
                        details={"facets": len(reports), "x": worst.details["x"], "eps": worst.details["eps"]})


def check_euler_poincare(S: Complex, cache=None) -> VerifyReport:
    p = _profile(S, cache)
    chi_f = euler_characteristic(S)
    chi_b = sum((-1) ** k * b for k, b in enumerate(p.betti))
    ok = chi_f == chi_b
    return VerifyReport("euler_poincare", PASS if ok else FAIL, float(-abs(chi_f - chi_b)),
                        witness=None if ok else _witness(S=S),
                        label=S.kind, details={"chi_f": chi_f, "chi_b": chi_b, "betti": list(p.betti)})


def _pad(v, n):
    return list(v) + [0] * (n - len(v))


def check_fusion_inequality(G: Complex, U: Complex, cache=None) -> VerifyReport:
    """Componentwise slack of ``b(U) + b(K) >= b(G)`` with ``K = G \\ U``."""
    if not is_open(G, U):
        raise ValueError("U must be open in G")
    K = complement(G, U)
    bU, bK, bG = (_profile(X, cache).betti for X in (U, K, G))
    n = max(len(bU), len(bK), len(bG))
    slack = [u + k - g for u, k, g in zip(_pad(bU, n), _pad(bK, n), _pad(bG, n))]
    margin = float(min(slack, default=0))
    violated = margin < 0
    return VerifyReport("fusion_inequality", OBSERVATION, margin,
                        witness=_witness(G=G, U=U) if violated else None,
                        details={"slack": slack, "b_U": list(bU), "b_K": list(bK), "b_G": list(bG),
                                 "violated": violated})


def _leq(a, b) -> tuple[bool, float]:
    """Is ``a <= b``, and the normalized slack ``(b - a) / max(1, |b|)``."""
    if isinstance(a, float) or isinstance(b, float):
        fa, fb = float(a), float(b)
        return fa <= fb * (1 + REL_FLOAT_DET), (fb - fa) / max(1.0, abs(fb))
    slack = Fraction(b - a) / max(1, abs(b))
    return a <= b, float(slack)


def check_complexity_monotone(G: Complex, S: Complex, cache=None) -> VerifyReport:
    """``Det``, ``det(L + 1)`` and ``tr`` of ``L(S)`` bounded by those of ``L(G)``."""
    _require_open_or_closed(G, S)
    pg, ps = _profile(G, cache), _profile(S, cache)
    parts = {
        "pseudo_det": (ps.pseudo_det, pg.pseudo_det),
        "forest_det": (ps.forest_det, pg.forest_det),
        "trace": (ps.trace, pg.trace),
    }
    results = {k: _leq(a, b) for k, (a, b) in parts.items()}
    ok = all(r[0] for r in results.values())
    margin = min(r[1] for r in results.values())
    exact_all = all(not isinstance(v, float) for pair in parts.values() for v in pair)
    return VerifyReport("complexity_monotone", PASS if ok else FAIL, margin,
                        witness=None if ok else _witness(G=G, S=S),
                        label=S.kind, details={"exact": exact_all,
                                               **{k: {"S": a, "G": b} for k, (a, b) in parts.items()}})


def check_conjectures(G: Complex, U: Complex, cache=None) -> VerifyReport:
    """Unproven inequalities for a split ``G = U ⊔ K``, recorded only.

    ``sigma(L_U ⊕ L_K) <= 2 sigma(L_G)``, ``Det(G) >= Det(K) Det(U)`` and
    ``tr(G) >= tr(K) + tr(U)``.
    """
    K = complement(G, U)
    pg, pu, pk = (_profile(X, cache) for X in (G, U, K))
    fused = np.sort(np.concatenate([pu.spectrum.values, pk.spectrum.values]))
    lg = pg.spectrum.values
    eps = _eps(pg.spectrum.max)
    twice = float((2 * lg - fused).min()) if lg.size else 0.0
    det_ratio = Fraction(pg.pseudo_det) / (Fraction(pk.pseudo_det) * Fraction(pu.pseudo_det)) \
        if not any(isinstance(v, float) for v in (pg.pseudo_det, pk.pseudo_det, pu.pseudo_det)) \
        else pg.pseudo_det / (pk.pseudo_det * pu.pseudo_det)
    det_slack = float(det_ratio) - 1.0
    tr_slack = pg.trace - pk.trace - pu.trace
    margins = {"twice_spectrum": twice, "det_ratio_minus_1": det_slack, "trace": float(tr_slack)}
    violated = {"twice_spectrum": twice < -eps, "det": det_ratio < 1, "trace": tr_slack < 0}
    any_violation = any(violated.values())
    return VerifyReport("conjectures", OBSERVATION, min(twice, det_slack, float(tr_slack)),
                        witness=_witness(G=G, U=U) if any_violation else None,
                        details={"margins": margins, "violations": violated, "det_ratio": det_ratio,
                                 "eps": eps, "violated": any_violation})


def _degree_margin(lam: np.ndarray, diag: np.ndarray, weights) -> float:
    a = np.concatenate([np.zeros(len(weights) - 1), np.sort(diag)])
    bound = np.zeros(len(lam))
    for shift, w in enumerate(weights):
        bound = bound + w * a[len(weights) - 1 - shift: len(a) - shift]
    return float((bound - lam).min()) if lam.size else 0.0


def check_degree_bounds(S: Complex, cache=None) -> VerifyReport:
    """``lambda_k(L_0) <= a_k + a_(k-1)`` over ascending vertex degrees.

    Also records the conjectured Hodge bound ``2 a_k + a_(k-1) + a_(k-2)``
    (ascending Hodge diagonal) in ``details``.  The Kirchhoff part is only
    asserted when ``S`` is a simplicial complex.
    """
    p = _profile(S, cache)
    if p.blocks:
        L0 = p.blocks[0]
        k_margin = _degree_margin(p.block_spectra[0].values, np.diag(L0).astype(float), (1, 1))
    else:
        k_margin = 0.0
    diag = np.concatenate([np.diag(B) for B in p.blocks]).astype(float) if p.blocks else np.zeros(0)
    h_margin = _degree_margin(p.spectrum.values, diag, (2, 1, 1))
    eps = _eps(p.spectrum.max)
    asserted = S.kind in (WHOLE, CLOSED)
    ok = k_margin >= -eps
    status = (PASS if ok else FAIL) if asserted else OBSERVATION
    return VerifyReport("degree_bound_kirchhoff", status, k_margin,
                        witness=None if ok else _witness(S=S), label=S.kind,
                        details={"eps": eps, "hodge_margin": h_margin, "violated": not ok})


def check_hodge_degree_bound(S: Complex, cache=None) -> VerifyReport:
    r = check_degree_bounds(S, cache)
    m = r.details["hodge_margin"]
    violated = m < -r.details["eps"]
    return VerifyReport("hodge_degree_bound", OBSERVATION, m,
                        witness=_witness(S=S) if violated else None, label=S.kind,
                        details={"eps": r.details["eps"], "violated": violated})


def check_unimodularity(S: Complex) -> VerifyReport:
    """``|det H| = 1`` for simplicial complexes; open sets are only recorded."""
    H = connection_laplacian(S)
    det = exact.det_exact(H)
    if S.kind in (WHOLE, CLOSED):
        ok = abs(det) == 1
        return VerifyReport("unimodularity", PASS if ok else FAIL, float(1 - abs(det)) if not ok else 0.0,
                            witness=None if ok else _witness(S=S), label=S.kind, details={"det": det})
    return VerifyReport("unimodularity", OBSERVATION, 0.0, label=S.kind,
                        details={"det": det, "singular": det == 0})


def check_hydrogen_identity(G: Complex) -> VerifyReport:
    """Residual of ``L = H - H^-1`` on a complex of dimension at most one.

    The residual against the unsigned Laplacian ``|D|^2`` is reported too.
    """
    if G.kind != WHOLE or G.dim > 1:
        raise ValueError("hydrogen identity applies to whole complexes of dimension <= 1")
    H = connection_laplacian(G)
    det = exact.det_exact(H)
    if det == 0:
        return VerifyReport("hydrogen_identity", OBSERVATION, float("nan"),
                            details={"singular": True, "violated": False})
    R = H - np.linalg.inv(H.astype(float))
    L = hodge(G).matrix
    signed = float(np.abs(R - L).max()) if R.size else 0.0
    unsigned = float(np.abs(R - unsigned_hodge(G)).max()) if R.size else 0.0
    violated = signed > HYDROGEN_TOL
    status = PASS if not violated else OBSERVATION
    return VerifyReport("hydrogen_identity", status, -signed, witness=_witness(G=G) if violated else None,
                        details={"residual": signed, "unsigned_residual": unsigned, "det": det,
                                 "violated": violated})


# -------------------------------------------------------------------- suites

GENERATORS = ("whitney-random-graph", "explicit-complex")
SPLITS = ("mixed", "random-open-set", "delete-locally-maximal", "random-subcomplex")


@dataclass(frozen=True)
class TrialSpec:
    """Parameters of a randomized run.

    ``nv``, ``edge_prob`` and ``stars`` take a scalar or an inclusive
    ``(lo, hi)`` range sampled per trial.  ``ne`` switches the graph model
    from G(n, p) to G(n, m).
    """

    generator: str = "whitney-random-graph"
    nv: int | tuple[int, int] = (8, 14)
    edge_prob: float | tuple[float, float] = (0.3, 0.6)
    ne: int | None = None
    complex: Complex | None = None
    split: str = "mixed"
    stars: int | tuple[int, int] = (1, 6)
    seed: int = 0
    trials: int = 100

    def validate(self) -> None:
        if self.generator not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}")
        if self.split not in SPLITS:
            raise ValueError(f"unknown split {self.split!r}")
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        lo, hi = _range(self.nv)
        if lo < 1 or hi < lo:
            raise ValueError(f"bad vertex count {self.nv}")
        plo, phi = _range(self.edge_prob)
        if not (0.0 <= plo <= phi <= 1.0):
            raise ValueError(f"bad edge probability {self.edge_prob}")
        slo, shi = _range(self.stars)
        if slo < 1 or shi < slo:
            raise ValueError(f"bad star count {self.stars}")
        if self.ne is not None and not (0 <= self.ne <= lo * (lo - 1) // 2):
            raise ValueError(f"{self.ne} edges do not fit on {lo} vertices")
        if self.generator == "explicit-complex" and (self.complex is None or len(self.complex) == 0):
            raise ValueError("explicit-complex generator needs a non-empty complex")


def _range(v):
    return (v[0], v[1]) if isinstance(v, (tuple, list)) else (v, v)


def _draw_int(rng, v) -> int:
    lo, hi = _range(v)
    return int(rng.integers(lo, hi + 1))


def _draw_float(rng, v) -> float:
    lo, hi = _range(v)
    return float(lo if lo == hi else rng.uniform(lo, hi))


def random_graph(rng, nv: int, p: float | None = None, ne: int | None = None):
    """G(n, p) or, with ``ne``, G(n, m) on vertices ``0..nv-1``."""
    pairs = [(i, j) for i in range(nv) for j in range(i + 1, nv)]
    if ne is not None:
        chosen = rng.choice(len(pairs), size=ne, replace=False) if ne else []
        edges = [pairs[int(i)] for i in sorted(chosen)]
    else:
        keep = rng.random(len(pairs)) < p
        edges = [e for e, k in zip(pairs, keep) if k]
    return list(range(nv)), edges


def _trial(spec: TrialSpec, index: int) -> list[VerifyReport]:
    rng = np.random.default_rng([spec.seed, index])
    if spec.generator == "explicit-complex":
        G = spec.complex
        params = {}
    else:
        nv = _draw_int(rng, spec.nv)
        p = None if spec.ne is not None else _draw_float(rng, spec.edge_prob)
        G = whitney_complex(random_graph(rng, nv, p, spec.ne))
        params = {"nv": nv, "edge_prob": p, "ne": spec.ne}
    cache: dict = {}
    splits = []
    if spec.split in ("mixed", "random-open-set"):
        U = random_open_set(G, _draw_int(rng, spec.stars), seed=rng)
        splits.append(U)
    if spec.split in ("mixed", "random-subcomplex"):
        steps = int(rng.integers(1, max(len(G), 2)))
        K = random_subcomplex(G, steps, seed=rng)
        splits.append(complement(G, K))
    if spec.split == "delete-locally-maximal":
        tops = G.facets()
        x = tops[int(rng.integers(len(tops)))]
        splits.append(Complex([x], kind=OPEN, parent=G))

    out: list[VerifyReport] = []
    out.append(check_euler_poincare(G, cache))
    out.append(check_mckean_singer(G, cache))
    out.append(check_degree_bounds(G, cache))
    out.append(check_hodge_degree_bound(G, cache))
    out.append(check_unimodularity(G))
    out.append(check_interlacing_all(G))
    if G.dim <= 1:
        out.append(check_hydrogen_identity(G))
    for U in splits:
        K = complement(G, U)
        for S in (K, U):
            out.append(check_spectral_monotonicity(G, S, cache))
            out.append(check_form_monotonicity(G, S, cache))
            out.append(check_complexity_monotone(G, S, cache))
            out.append(check_euler_poincare(S, cache))
            out.append(check_mckean_singer(S, cache))
            out.append(check_unimodularity(S))
        out.append(check_fusion_inequality(G, U, cache))
        out.append(check_conjectures(G, U, cache))
    out[0].details["params"] = params
    for r in out:
        r.trial = index
        r.seed = spec.seed
    return out


def run_suite(spec: TrialSpec, workers: int = 1) -> list[VerifyReport]:
    """Run ``spec.trials`` seeded trials; the stream is ordered by trial index."""
    spec.validate()
    if spec.trials == 0:
        return []
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            chunks = list(pool.map(_trial, [spec] * spec.trials, range(spec.trials)))
    else:
        chunks = [_trial(spec, i) for i in range(spec.trials)]
    return [r for chunk in chunks for r in chunk]


def suite_ok(reports: Iterable[VerifyReport]) -> bool:
    return not any(r.status == FAIL and r.check in PROVEN_CHECKS for r in reports)


def summarize(reports: Iterable[VerifyReport]) -> list[dict]:
    """One row per check: counts by status, violations and worst margin."""
    rows: dict[str, dict] = {}
    for r in reports:
        row = rows.setdefault(r.check, {"check": r.check, "runs": 0, PASS: 0, FAIL: 0, OBSERVATION: 0,
                                        "violations": 0, "worst_margin": math.inf,
                                        "proven": r.check in PROVEN_CHECKS})
        row["runs"] += 1
        row[r.status] += 1
        row["violations"] += int(r.violated)
        if not math.isnan(r.worst_margin):
            row["worst_margin"] = min(row["worst_margin"], r.worst_margin)
    return [rows[k] for k in sorted(rows)]


def format_summary(reports: Iterable[VerifyReport]) -> str:
    rows = summarize(reports)
    head = f"{'check':<24} {'kind':<11} {'runs':>5} {'pass':>5} {'fail':>5} {'obs':>5} {'viol':>5}  worst_margin"
    lines = [head, "-" * len(head)]
    for r in rows:
        kind = "proven" if r["proven"] else "recorded"
        lines.append(f"{r['check']:<24} {kind:<11} {r['runs']:>5} {r[PASS]:>5} {r[FAIL]:>5} "
                     f"{r[OBSERVATION]:>5} {r['violations']:>5}  {r['worst_margin']:.6g}")
    return "\n".join(lines)


def write_jsonl(reports: Iterable[VerifyReport], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for r in reports:
            fh.write(r.to_json() + "\n")


def read_jsonl(path) -> list[VerifyReport]:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                d = json.loads(line)
                wm = d["worst_margin"]
                d["worst_margin"] = float(wm)
                out.append(VerifyReport(**d))
    return out


def write_witnesses(reports: Iterable[VerifyReport], directory) -> list[Path]:
    """Persist every failing or violated report that carries a witness."""
    directory = Path(directory)
    paths = []
    for r in reports:
        if r.violated and r.witness is not None:
            directory.mkdir(parents=True, exist_ok=True)
            name = f"witness-{len(paths):05d}-{r.check}-{r.label or 'G'}-t{r.trial if r.trial is not None else 'x'}.json"
            path = directory / name
            path.write_text(r.to_json() + "\n", encoding="utf-8")
            paths.append(path)
    return paths
