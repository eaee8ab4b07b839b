import json
import math

import pytest

import ghmetric as gm


def test_space_construction_and_diameter():
    s = gm.Space([[0.0, 2.0], [2.0, 0.0]], labels=["a", "b"])
    assert s.size == 2
    assert s.labels == ["a", "b"]
    assert gm.diameter(s) == 2.0
    assert s.dist(0, 1) == 2.0


def test_validation_raises_with_violation_details():
    with pytest.raises(ValueError, match="triangle"):
        gm.Space([[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    violations = gm.check_metric([[0, 1, 5], [1, 0, 1], [5, 1, 0]])
    assert any("triangle" in v for v in violations)
    assert gm.check_metric([[0, 1], [1, 0]]) == []


def test_scale_and_two_point():
    pair = gm.two_point(1.0)
    scaled = gm.scale(pair, 1.5)
    assert scaled.matrix() == [[0.0, 3.0], [3.0, 0.0]]
    with pytest.raises(ValueError):
        gm.scale(pair, -1.0)


def test_gh_one_point_rule():
    res = gm.gh_exact(gm.two_point(1.0), gm.one_point())
    assert res.value == 1.0
    assert res.optimal
    assert res.method == "branch-and-bound"
    assert gm.distortion(gm.two_point(1.0), gm.one_point(), res.pairs) == 2.0


def test_gh_oracle_agrees():
    a = gm.gen_random_metric(3, 1.0, seed=5)
    b = gm.gen_random_metric(4, 2.0, seed=6)
    assert abs(gm.gh_exact(a, b).value - gm.gh_bruteforce(a, b).value) <= 1e-12
    lo, hi = gm.gh_bounds(a, b)
    assert lo - 1e-12 <= gm.gh_exact(a, b).value <= hi + 1e-12


def test_bead_diameter_identity():
    bead = gm.build_bead([1.0, 0.5], [gm.two_point(0.4), gm.one_point()])
    assert bead.space.size == 6
    assert abs(gm.diameter(bead.space) - 51.0) <= 1e-9
    assert bead.gaps.total == 1.5
    assert bead.block_of == [0, 1, 1, 2, 3, 4]
    assert gm.bead_gap(bead.gaps, 0, 1) == pytest.approx(9.0)


def test_embed_box_isometry():
    d = gm.box_linf_distance([1.0], [0.9], [0.2])
    assert d == pytest.approx(0.7)
    bx = gm.embed_box_point([1.0], [0.9])
    by = gm.embed_box_point([1.0], [0.2])
    res = gm.gh_exact(bx.space, by.space)
    assert res.optimal
    assert abs(res.value - d) <= 1e-9


def test_json_roundtrip():
    s = gm.gen_random_metric(5, 1.0, seed=11)
    back = gm.space_from_json(gm.space_to_json(s))
    assert back.matrix() == s.matrix()
    doc = json.loads(gm.space_to_json(s))
    assert set(doc) == {"labels", "matrix"}
    assert all(math.isfinite(v) for row in doc["matrix"] for v in row)


def test_check_theorem_report():
    report = gm.check_theorem(seed=3, trials=3)
    assert report.failures == 0
    assert report.incomplete == 0
    assert report.max_deviation <= 1e-9
    assert report.render() == gm.check_theorem(seed=3, trials=3, jobs=2).render()


def test_check_axioms():
    report = gm.check_axioms(seed=3)
    assert report.all_pass()
    assert "property=symmetry" in report.render()
