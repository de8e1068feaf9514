import json
import math

import numpy as np
import pytest

from hodgespec import verify
from hodgespec.complex_core import closure, complement, random_open_set, subset, whitney_complex
from hodgespec.verify import (FAIL, OBSERVATION, PASS, TrialSpec, check_complexity_monotone, check_conjectures,
                              check_degree_bounds, check_dirac_interlacing, check_euler_poincare,
                              check_form_monotonicity, check_fusion_inequality, check_hodge_degree_bound,
                              check_hydrogen_identity, check_interlacing_all, check_mckean_singer,
                              check_spectral_monotonicity, check_unimodularity, run_suite)


def test_monotonicity_on_interval_parts(interval):
    K = subset(interval, [[1], [2]])
    U = subset(interval, [[1, 2]])
    for S in (K, U):
        r = check_spectral_monotonicity(interval, S)
        assert r.status == PASS and r.worst_margin >= 0
        assert check_form_monotonicity(interval, S).status == PASS
    # sigma(L_G) - padded sigma(L_K) = (0,2,2) - (0,0,0)
    assert check_spectral_monotonicity(interval, K).worst_margin == 0.0


def test_monotonicity_rejects_non_open_closed(circle):
    S = circle.with_kind("whole")
    from hodgespec.complex_core import Complex
    bad = Complex([(1,), (3, 4)], kind="closed", parent=circle, validate=False)
    with pytest.raises(ValueError):
        check_spectral_monotonicity(circle, bad)


def test_mckean_singer_fixtures(octahedron, open_arc, disjoint_open):
    for S in (octahedron, open_arc, disjoint_open):
        r = check_mckean_singer(S)
        assert r.status == PASS
        assert max(r.details["supertrace_residual"].values()) <= 1e-7


def test_euler_poincare_fixtures(open_arc, disjoint_open, triangle):
    for S in (open_arc, disjoint_open, triangle):
        r = check_euler_poincare(S)
        assert r.status == PASS and r.details["chi_f"] == r.details["chi_b"]


def test_interlacing(triangle, octahedron):
    assert check_dirac_interlacing(triangle, (1, 2, 3)).status == PASS
    assert check_interlacing_all(octahedron).status == PASS
    with pytest.raises(ValueError):
        check_dirac_interlacing(triangle, (1,))


def test_fusion_circle_equality(circle, open_arc):
    r = check_fusion_inequality(circle, open_arc)
    assert r.details["slack"] == [0, 0] and not r.violated


def test_fusion_interval_strict(interval):
    r = check_fusion_inequality(interval, subset(interval, [[1, 2]]))
    # b(U)+b(K) = (0,1)+(2,0) against b(G) = (1,0)
    assert r.details["slack"] == [1, 1]


def test_pseudo_det_part_can_fail_for_closed_subcomplex():
    # tree 0-4, 4-3, 3-1, 3-2; dropping edge {3,4} gives components {0,4} and {1,2,3}
    G = whitney_complex((range(5), [(0, 4), (1, 3), (2, 3), (3, 4)]))
    K = subset(G, [[0], [1], [2], [3], [4], [0, 4], [1, 3], [2, 3]])
    r = check_complexity_monotone(G, K)
    assert r.details["pseudo_det"] == {"S": 36, "G": 25}
    assert r.status == FAIL and r.witness is not None
    # trace and det(L+1) still decrease
    assert r.details["trace"]["S"] <= r.details["trace"]["G"]
    assert r.details["forest_det"]["S"] <= r.details["forest_det"]["G"]


def test_complexity_monotone_on_circle(circle, open_arc):
    for S in (open_arc, complement(circle, open_arc)):
        r = check_complexity_monotone(circle, S)
        assert r.status == PASS and r.details["exact"]


def test_conjectures_recorded(circle, open_arc):
    r = check_conjectures(circle, open_arc)
    assert r.status == OBSERVATION
    assert set(r.details["margins"]) == {"twice_spectrum", "det_ratio_minus_1", "trace"}


def test_degree_bounds(octahedron, open_arc):
    r = check_degree_bounds(octahedron)
    assert r.status == PASS and "hodge_margin" in r.details
    assert check_degree_bounds(open_arc).status == OBSERVATION
    assert check_hodge_degree_bound(octahedron).status == OBSERVATION


def test_unimodularity(octahedron, triangle, circle, interval):
    for G in (octahedron, triangle, circle):
        r = check_unimodularity(G)
        assert r.status == PASS and abs(r.details["det"]) == 1
    U = subset(interval, [[1], [1, 2]])
    r = check_unimodularity(U)
    assert r.status == OBSERVATION and r.details["singular"]


@pytest.mark.parametrize("name", ["interval", "circle"])
def test_hydrogen_signed_vs_unsigned(name, request):
    G = request.getfixturevalue(name)
    r = check_hydrogen_identity(G)
    assert r.status == OBSERVATION and r.violated
    assert abs(r.details["residual"] - 2.0) < 1e-9
    assert r.details["unsigned_residual"] < 1e-9


def test_hydrogen_rejects_higher_dimension(triangle):
    with pytest.raises(ValueError):
        check_hydrogen_identity(triangle)


def test_trial_spec_validation():
    with pytest.raises(ValueError):
        TrialSpec(generator="nope").validate()
    with pytest.raises(ValueError):
        TrialSpec(generator="explicit-complex").validate()
    with pytest.raises(ValueError):
        TrialSpec(split="sideways").validate()
    with pytest.raises(ValueError):
        TrialSpec(trials=-1).validate()


def test_suite_is_deterministic_and_roundtrips(tmp_path):
    spec = TrialSpec(seed=3, trials=4, nv=(6, 8))
    a, b = run_suite(spec), run_suite(spec)
    assert [r.to_json() for r in a] == [r.to_json() for r in b]
    verify.write_jsonl(a, tmp_path / "r.jsonl")
    back = verify.read_jsonl(tmp_path / "r.jsonl")
    assert [r.to_json() for r in back] == [r.to_json() for r in a]
    assert a[0].details["params"]["nv"] in range(6, 9)


def test_suite_prefix_independent_of_length():
    short = run_suite(TrialSpec(seed=5, trials=2, nv=(6, 7)))
    long = run_suite(TrialSpec(seed=5, trials=3, nv=(6, 7)))
    assert [r.to_json() for r in short] == [r.to_json() for r in long][:len(short)]


@pytest.mark.parametrize("split", verify.SPLITS)
def test_every_split_runs(split):
    reports = run_suite(TrialSpec(seed=1, trials=2, nv=(5, 7), split=split))
    assert verify.suite_ok(reports)


def test_explicit_complex_generator(octahedron):
    reports = run_suite(TrialSpec(generator="explicit-complex", complex=octahedron, seed=2, trials=3))
    assert verify.suite_ok(reports)
    assert {r.trial for r in reports} == {0, 1, 2}


def test_gnm_model():
    reports = run_suite(TrialSpec(seed=4, trials=2, nv=7, ne=9))
    assert reports[0].details["params"]["ne"] == 9


def test_summary_and_witnesses(tmp_path):
    G = whitney_complex((range(5), [(0, 4), (1, 3), (2, 3), (3, 4)]))
    K = subset(G, [[0], [1], [2], [3], [4], [0, 4], [1, 3], [2, 3]])
    reports = [check_complexity_monotone(G, K), check_euler_poincare(G)]
    assert not verify.suite_ok(reports)
    rows = {r["check"]: r for r in verify.summarize(reports)}
    assert rows["complexity_monotone"][FAIL] == 1
    assert "complexity_monotone" in verify.format_summary(reports)
    paths = verify.write_witnesses(reports, tmp_path / "w")
    assert len(paths) == 1
    doc = json.loads(paths[0].read_text())
    assert doc["witness"]["S"]["elements"]


def test_observations_never_fail_suite(interval):
    r = check_hydrogen_identity(interval)
    assert r.violated and verify.suite_ok([r])
