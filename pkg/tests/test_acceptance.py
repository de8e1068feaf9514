"""Acceptance criteria, one pass/fail line per criterion in the terminal summary."""

import contextlib
import subprocess
import sys
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from hodgespec import verify
from hodgespec.complex_core import (closure, complement, euler_characteristic, open_in_closure, stars, subset,
                                    whitney_complex)
from hodgespec.operators import dirac, exterior_derivative, hodge, parity_operator
from hodgespec.spectral import betti_exact, hodge_spectrum, pad_left
from oracles import hodge_blocks_by_hand, rational_rank

SUITE_SECONDS = 60.0


@contextlib.contextmanager
def criterion(name):
    ok = False
    try:
        yield
        ok = True
    finally:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        ACCEPTANCE_LINES.append(line)
        print(line)


@contextlib.contextmanager
def under(seconds):
    t0 = time.perf_counter()
    yield
    assert time.perf_counter() - t0 < seconds


# ---------------------------------------------------------------- 1. fixed examples

def test_1_interval():
    with criterion("1 interval: sigma(L_G)={0,2,2}, b: G=(1,0) K=(2,0) U=(0,1), padded sigma(K)=0"), under(1.0):
        G = closure([[1, 2]])
        assert np.allclose(hodge_spectrum(G).values, [0, 2, 2], atol=1e-9)
        assert betti_exact(G) == (1, 0)
        K = subset(G, [[1], [2]])
        U = subset(G, [[1, 2]])
        assert betti_exact(K) == (2, 0) and betti_exact(U) == (0, 1)
        assert pad_left(hodge_spectrum(K), 3).values.tolist() == [0, 0, 0]


def test_1_circle_fusion():
    with criterion("1 circle: b(K)=(1,0) b(U)=(0,1) b(G)=(1,1), fusion slack (0,0)"), under(1.0):
        G = closure([[1, 2], [2, 3], [3, 4], [1, 4]])
        U = subset(G, [[3], [4], [2, 3], [3, 4], [1, 4]], kind="open")
        K = complement(G, U)
        assert betti_exact(K) == (1, 0) and betti_exact(U) == (0, 1) and betti_exact(G) == (1, 1)
        assert verify.check_fusion_inequality(G, U).details["slack"] == [0, 0]


def test_1_open_set_realization():
    with criterion("1 open set: Hodge 6x6, blocks (3,1,0,2) all zero, b=f=(3,1,0,2)"), under(1.0):
        U = open_in_closure([[0], [1], [2], [3, 4], [5, 6, 7, 8], [9, 10, 11, 12]])
        L = hodge(U)
        assert L.shape == (6, 6)
        assert [B.shape[0] for B in L.blocks] == [3, 1, 0, 2]
        assert not L.matrix.any()
        assert betti_exact(U) == U.f_vector == (3, 1, 0, 2)


def _fixed_examples():
    I = closure([[1, 2]])
    C = closure([[1, 2], [2, 3], [3, 4], [1, 4]])
    return [I, subset(I, [[1], [2]]), subset(I, [[1, 2]]), C,
            subset(C, [[3], [4], [2, 3], [3, 4], [1, 4]], kind="open"),
            complement(C, subset(C, [[3], [4], [2, 3], [3, 4], [1, 4]], kind="open")),
            open_in_closure([[0], [1], [2], [3, 4], [5, 6, 7, 8], [9, 10, 11, 12]])]


def test_1_parity_and_d_squared():
    with criterion("1 PD+DP=0 and d^2=0 exactly on all fixed examples"), under(1.0):
        for S in _fixed_examples():
            d = exterior_derivative(S).matrix
            P, D = parity_operator(S), dirac(S).matrix
            assert d.dtype.kind == "i"
            assert not (d @ d).any()
            assert not (P @ D + D @ P).any()


# ---------------------------------------------------------------- 2. property suites

@pytest.fixture(scope="module")
def suite():
    spec = verify.TrialSpec(seed=0, trials=100, nv=(8, 14), edge_prob=(0.3, 0.6), stars=(1, 6), split="mixed")
    t0 = time.perf_counter()
    reports = verify.run_suite(spec)
    return reports, time.perf_counter() - t0


def _check(reports, name, kinds=None):
    rs = [r for r in reports if r.check == name and (kinds is None or r.label in kinds)]
    assert rs, f"no reports for {name}"
    return rs


def test_2_suite_budget(suite):
    reports, seconds = suite
    with criterion(f"2 suite: 100 seeded trials of G(n=8-14, p=0.3-0.6) in {seconds:.1f}s <= {SUITE_SECONDS:g}s"):
        assert len({r.trial for r in reports}) == 100
        assert seconds <= SUITE_SECONDS


@pytest.mark.parametrize("kind", ["closed", "open"])
def test_2_spectral_monotonicity(suite, kind):
    with criterion(f"2 left-padded monotonicity, {kind} subsets, margin >= -1e-7 lambda_max"):
        for r in _check(suite[0], "spectral_monotonicity", {kind}):
            assert r.status == verify.PASS and r.worst_margin >= -r.details["eps"]


def test_2_form_monotonicity(suite):
    with criterion("2 form monotonicity per degree, every block"):
        for r in _check(suite[0], "form_monotonicity"):
            assert r.status == verify.PASS
            assert min(r.details["per_degree"], default=0.0) >= -r.details["eps"]


def test_2_mckean_singer(suite):
    with criterion("2 McKean-Singer pairing and str(exp(-tL))=chi at t=0.1,1,10"):
        for r in _check(suite[0], "mckean_singer"):
            assert r.status == verify.PASS
            assert set(r.details["supertrace_residual"]) == {"0.1", "1.0", "10.0"}
            assert max(r.details["supertrace_residual"].values()) <= 1e-7


def test_2_dirac_interlacing(suite):
    with criterion("2 Dirac interlacing on locally maximal deletions"):
        for r in _check(suite[0], "dirac_interlacing"):
            assert r.status == verify.PASS


def test_2_euler_poincare(suite):
    with criterion("2 Euler-Poincare exact for whole, open and closed sets"):
        rs = _check(suite[0], "euler_poincare")
        assert {r.label for r in rs} >= {"open", "closed"}
        for r in rs:
            assert r.details["chi_f"] == r.details["chi_b"]


def test_2_complexity_monotone(suite):
    with criterion("2 complexity monotone: Det, det(L+1), trace in every trial"):
        for r in _check(suite[0], "complexity_monotone"):
            assert r.status == verify.PASS, (r.trial, r.label, r.details)


def test_2_unimodularity(suite):
    rs = _check(suite[0], "unimodularity")
    singular = sum(1 for r in rs if r.label == "open" and r.details["singular"])
    with criterion(f"2 |det H|=1 on every whole/closed complex; singular open H seen {singular} times"):
        for r in rs:
            if r.label in ("", "whole", "closed"):
                assert abs(r.details["det"]) == 1
        assert singular >= 1


# ---------------------------------------------------------------- 3. observation suites

def _one_dimensional():
    out = [closure([[1, 2]]), closure([[1, 2], [2, 3], [3, 4], [1, 4]]),
           whitney_complex((range(5), [(i, (i + 1) % 5) for i in range(5)])),
           whitney_complex((range(5), [(0, i) for i in range(1, 5)]))]
    rng = np.random.default_rng(0)
    for n in range(3, 11):
        parent = [int(rng.integers(i)) for i in range(1, n)]
        out.append(whitney_complex((range(n), [(p, i + 1) for i, p in enumerate(parent)])))
    return out


def test_3_observations(suite, tmp_path):
    reports = list(suite[0])
    reports += [verify.check_hydrogen_identity(G) for G in _one_dimensional()]
    paths = verify.write_witnesses([r for r in reports if r.status == verify.OBSERVATION], tmp_path)
    rows = {r["check"]: r for r in verify.summarize(reports)}
    conj = [r for r in reports if r.check == "conjectures"]
    det_v = sum(r.details["violations"]["det"] for r in conj)
    twice_v = sum(r.details["violations"]["twice_spectrum"] for r in conj)
    tr_v = sum(r.details["violations"]["trace"] for r in conj)
    with criterion(f"3 observations recorded: fusion viol={rows['fusion_inequality']['violations']} "
                   f"2sigma viol={twice_v} Det viol={det_v} trace viol={tr_v} "
                   f"hodge bound viol={rows['hodge_degree_bound']['violations']} "
                   f"hydrogen viol={rows['hydrogen_identity']['violations']}/{rows['hydrogen_identity']['runs']} "
                   f"({len(paths)} witness files)"):
        violated = [r for r in reports if r.status == verify.OBSERVATION and r.violated and r.witness is not None]
        assert len(paths) == len(violated)
        for p in paths:
            assert p.read_text().strip()
        obs_checks = {"fusion_inequality", "conjectures", "hodge_degree_bound", "hydrogen_identity"}
        assert all(r.status == verify.OBSERVATION for r in reports if r.check in obs_checks)


# ---------------------------------------------------------------- 4. oracle equivalence

def _oracle_list():
    I = closure([[1, 2]])
    C = closure([[1, 2], [2, 3], [3, 4], [1, 4]])
    T = closure([[1, 2, 3]])
    octa = closure([[0, 2, 4], [0, 2, 5]])
    cases = [I, C, T, closure([[1], [2]]), octa]
    for G in (I, C, T, octa):
        cases += stars(G)
        # all positive-dimensional elements form an open set, the vertices a closed one
        cases.append(subset(G, [x for x in G if len(x) > 1], kind="open"))
        cases.append(subset(G, [x for x in G if len(x) == 1], kind="closed"))
    return [S for S in cases if len(S) <= 12]


def _rational_betti(S):
    # operators rebuilt by hand too, so nothing is shared with the library path
    b = [B.shape[0] - rational_rank(B) for B in hodge_blocks_by_hand(S.elements)]
    return tuple(b + [0] * (len(S.f_vector) - len(b)))


def test_4_oracle_equivalence():
    cases = _oracle_list()
    with criterion(f"4 betti_exact equals rational Gaussian elimination on {len(cases)} complexes (<= 12 elements)"):
        assert len(cases) >= 10
        for S in cases:
            assert betti_exact(S) == _rational_betti(S), S


# ---------------------------------------------------------------- 5. determinism

@pytest.mark.slow
def test_5_determinism(tmp_path):
    with criterion("5 `verify --seed 42` twice gives byte-identical report.jsonl"):
        outs = []
        for run in ("a", "b"):
            out = tmp_path / run
            r = subprocess.run([sys.executable, "-m", "hodgespec.cli", "verify", "--seed", "42", "--out", str(out)],
                               capture_output=True, text=True)
            assert r.returncode in (0, 1), r.stderr
            outs.append((out / "report.jsonl").read_bytes())
        assert outs[0] and outs[0] == outs[1]
