from __future__ import annotations

import dataclasses
from itertools import product

import pytest

from branchlab.branching_cone import (
    branching_cone,
    eff_cone_report,
    enumerate_support,
    format_inequalities,
)
from branchlab.characters import branching_multiplicity
from branchlab.cones import cone_from_generators, cone_predicates
from branchlab.errors import ResourceLimitError, ValidationError

from oracles import clebsch_gordan


def test_support_diag_a1_level1(diag_a1):
    pts = set(enumerate_support(diag_a1, 1).points)
    assert {(0, 1, 1), (2, 1, 1), (1, 1, 0), (1, 0, 1), (0, 0, 0)} <= pts
    expected = {c + (a, b) for a in range(2) for b in range(2) for c in clebsch_gordan(a, b)}
    assert pts == expected


def test_support_diag_a1_level2(diag_a1):
    pts = set(enumerate_support(diag_a1, 2).points)
    assert (2, 2, 2) in pts and (4, 2, 2) in pts


def test_support_principal(principal_a2):
    pts = set(enumerate_support(principal_a2, 1).points)
    assert (2, 1, 0) in pts and (2, 0, 1) in pts


def test_support_grid_cap(diag_a2):
    with pytest.raises(ResourceLimitError):
        enumerate_support(diag_a2, 9, grid_cap=100)


def test_support_monotone_and_verified(diag_a2):
    s2 = enumerate_support(diag_a2, 2)
    s1 = enumerate_support(diag_a2, 1)
    assert set(s1.points) <= set(s2.points)
    for p in s2.points:
        assert branching_multiplicity(diag_a2, p[:2], p[2:]) >= 1


def test_support_parallel_matches_serial(diag_a1):
    assert enumerate_support(diag_a1, 3, workers=2).points == enumerate_support(diag_a1, 3).points


def test_semigroup_within_level(principal_a2):
    s = enumerate_support(principal_a2, 2)
    pts = set(s.points)
    for p in s.points:
        for q in s.points:
            r = tuple(a + b for a, b in zip(p, q))
            if max(r[1:]) <= 2:
                assert r in pts


def test_diag_a1_triangle_cone(diag_a1):
    m = branching_cone(diag_a1, 4)
    assert m.stabilized and m.stabilized_at <= 2
    assert set(m.cone.halfspaces) == {(-1, 1, 1), (1, -1, 1), (1, 1, -1)}
    assert m.pointed and m.full_dimensional and m.cone.dim == 3
    rep = eff_cone_report(m)
    assert rep["pointed"] and rep["facets"] == 3 and rep["rational_polyhedral"]
    assert rep["claim"] == "stabilized sample cone"


def test_identity_a1_cone():
    from branchlab.embedding import load_embedding
    m = branching_cone(load_embedding("id:A1"), 3)
    assert m.cone.generators == ((1, 1),)
    assert m.cone.dim == 1 and m.pointed and not m.full_dimensional


def test_diag_a2_report(diag_a2):
    m = branching_cone(diag_a2, 3)
    rep = eff_cone_report(m)
    assert rep["pointed"] and rep["full_dimensional"] and rep["cone_dim"] == 6
    assert rep["expected_full_dimensional"] is True


def test_corrupted_model_flagged(diag_a1):
    m = branching_cone(diag_a1, 4)
    bad_cone = cone_from_generators(3, list(m.cone.generators) + [(0, 1, -1), (0, -1, 1)])
    bad = dataclasses.replace(m, cone=bad_cone, pointed=True)
    assert eff_cone_report(bad)["pointed"] is False


def test_level_too_small(diag_a1):
    with pytest.raises(ValidationError):
        branching_cone(diag_a1, 1)


def test_cone_monotone(principal_a2):
    m = branching_cone(principal_a2, 4)
    for a, b in zip(m.history, m.history[1:]):
        assert a <= b


@pytest.mark.parametrize("name", ["diag:A1", "principal-a1:A2"])
def test_points_and_saturation(name):
    from branchlab.embedding import load_embedding
    e = load_embedding(name)
    m = branching_cone(e, 4)
    for p in enumerate_support(e, 4).points:
        assert cone_predicates(m.cone, p)["contains"]
    r = e.target.rank
    for p in product(range(4), repeat=m.cone.ambient_dim):
        if cone_predicates(m.cone, p)["interior"]:
            assert any(branching_multiplicity(e, tuple(k * x for x in p[:r]), tuple(k * x for x in p[r:])) >= 1
                       for k in range(1, 13))


def test_inequality_listing(diag_a1):
    lines = format_inequalities(branching_cone(diag_a1, 4))
    assert "-mu1 + lambda1 + lambda2 >= 0" in lines
    assert len(lines) == 3
