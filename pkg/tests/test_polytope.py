import json
import random

import pytest

from stringcrystal import oracle
from stringcrystal.paths import LEFT, enumerate_paths
from stringcrystal.polytope import (
    UnboundedSystemError, cone_inequalities, enumerate_lattice_points,
    in_string_cone, lambda_bounds, littelmann_inequalities, littelmann_points,
    polytope_inequalities, polytope_json, string_polytope,
)
from stringcrystal.typea import ReducedWord, all_reduced_words, weyl_dimension
from stringcrystal.wiring import build_diagram

SL3 = ReducedWord(3, (2, 1, 2))
STANDARD5 = ReducedWord(5, (1, 2, 3, 4, 1, 2, 3, 1, 2, 1))


def rows(system):
    return set(zip(system.normals, system.bounds))


def test_sl3_cone():
    # x_1 >= 0, x_2 - x_3 >= 0, x_3 >= 0
    assert rows(cone_inequalities(SL3)) == {((-1, 0, 0), 0), ((0, -1, 1), 0), ((0, 0, -1), 0)}
    assert rows(cone_inequalities(ReducedWord(2, (1,)))) == {((-1,), 0)}
    assert rows(cone_inequalities(ReducedWord(3, (1, 2, 1)))) == rows(cone_inequalities(SL3))


def test_sl3_lambda_rows():
    lam = (3, 5)
    expected = {((0, 0, 1), 5), ((0, 1, -1), 3), ((1, -1, 2), 5)}
    assert rows(lambda_bounds(SL3, lam)) == expected
    assert expected <= rows(polytope_inequalities(build_diagram(SL3), lam))
    assert rows(lambda_bounds(ReducedWord(2, (1,)), (4,))) == {((1,), 4)}


def test_literal_left_path_bounds_cut_out_a_different_set():
    # <x, r(gamma)> <= lam_a over left paths bounds eps_a, not eps*_a: the
    # point count comes out right but the set is not the string polytope
    lam = (1, 0)
    d = build_diagram(SL3)
    cone = cone_inequalities(SL3)
    bounds = [(p.r, lam[a - 1]) for a in (1, 2) for p in enumerate_paths(d, a, LEFT)]
    box = enumerate_lattice_points(littelmann_inequalities(SL3, (4, 4)))
    pts = [x for x in box if cone.contains(x)
           and all(sum(u * v for u, v in zip(x, r)) <= b for r, b in bounds)]
    assert len(pts) == 3
    assert set(pts) != set(string_polytope(SL3, lam).points)


def test_examples():
    assert len(string_polytope(SL3, (1, 1)).points) == 8
    assert string_polytope(SL3, (0, 0)).points == ((0, 0, 0),)
    p = string_polytope(STANDARD5, (1, 0, 0, 1))
    assert len(p.points) == 24
    assert (1, 1, 1, 1, 0, 0, 0, 0, 0, 0) in p.point_set
    assert (0, 0, 0, 1, 0, 0, 1, 0, 1, 1) in p.point_set


def test_points_sorted_and_satisfy_system():
    p = string_polytope(ReducedWord(4, (1, 2, 1, 3, 2, 1)), (2, 1, 1))
    assert list(p.points) == sorted(p.points)
    assert all(p.system.contains(x) for x in p.points)
    assert all(x in p for x in p.points)


def test_unbounded_system_is_rejected():
    with pytest.raises(UnboundedSystemError):
        enumerate_lattice_points(cone_inequalities(SL3))


def test_non_dominant_weight_is_rejected():
    with pytest.raises(ValueError):
        string_polytope(SL3, (1, -1))
    with pytest.raises(ValueError):
        string_polytope(SL3, (1, 1, 1))


@pytest.mark.parametrize("n", [3, 4])
def test_cone_matches_definition_on_small_points(n):
    for w in all_reduced_words(n):
        word = ReducedWord(n, w)
        cone = cone_inequalities(word)
        box = enumerate_lattice_points(littelmann_inequalities(word, (3,) * (n - 1)))
        for x in box:
            if sum(x) <= 6:
                assert cone.contains(x) == in_string_cone(x, word)


@pytest.mark.parametrize("lam", [(1, 0, 1), (2, 1, 0)])
def test_two_routes_agree(lam):
    for w in all_reduced_words(4):
        word = ReducedWord(4, w)
        p = string_polytope(word, lam)
        assert list(p.points) == littelmann_points(word, lam)
        assert len(p.points) == weyl_dimension(lam)


def test_oracle_strings_are_the_points():
    for w in all_reduced_words(3):
        word = ReducedWord(3, w)
        for lam in [(2, 1), (0, 3)]:
            strings = sorted(oracle.adapted_string(t, word) for t in oracle.crystal_elements(lam))
            assert strings == list(string_polytope(word, lam).points)


@pytest.mark.parametrize("n", [3, 4])
def test_cone_is_a_semigroup(n):
    rng = random.Random(n)
    for w in all_reduced_words(n):
        word = ReducedWord(n, w)
        cone = cone_inequalities(word)
        pts = string_polytope(word, (2,) * (n - 1)).points
        for _ in range(1000):
            x, y = rng.choice(pts), rng.choice(pts)
            assert cone.contains(tuple(a + b for a, b in zip(x, y)))


def test_json_export_round_trip():
    p = string_polytope(SL3, (1, 1))
    doc = json.loads(polytope_json(p))
    assert set(doc) == {"word", "lambda", "inequalities", "points"}
    assert [tuple(x) for x in doc["points"]] == list(p.points)
    assert {(tuple(r["normal"]), r["bound"]) for r in doc["inequalities"]} == rows(p.system)
    assert polytope_json(p) == polytope_json(string_polytope(SL3, (1, 1)))
