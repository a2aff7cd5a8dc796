import json
from fractions import Fraction

import pytest

from seminormal import groups as G
from seminormal.hecke import build_hecke
from seminormal.tableaux import Shape
from seminormal.verify import (
    ALL_CHECKS,
    check_branching,
    check_centrality,
    check_completeness,
    check_jm_spectra,
    check_projectors,
    check_relations,
    check_specialization,
    check_step2_identities,
    check_weight_separation,
    run_suite,
    step2_formal,
)
from seminormal.weyl import build_rep


def corrupt(rep, gen, i, j, delta=Fraction(1, 7)):
    m = [list(r) for r in rep.matrices[gen]]
    m[i][j] = m[i][j] + delta
    rep.matrices[gen] = tuple(tuple(r) for r in m)
    rep._elements.clear()
    return rep


def test_relations_pass_and_fail():
    rep = build_rep("A", Shape((2, 1)))
    assert check_relations(rep).passed
    bad = check_relations(corrupt(rep, "s3", 0, 1))
    assert bad.status == "fail"
    assert "=" in bad.witness["at"]
    assert bad.witness["expected"] != bad.witness["actual"]


def test_hecke_g2_relations():
    assert check_relations(build_hecke("G2", "phi_2_2")).passed


def test_corrupted_rep_fails_jm_and_branching():
    rep = corrupt(build_rep("A", Shape((2, 1))), "s2", 0, 1)
    assert not check_jm_spectra(rep).passed
    assert not check_branching(rep).passed


def test_corrupted_hecke_rep_fails_specialization():
    rep = build_hecke("A", Shape((2, 1)))
    m = [list(r) for r in rep.matrices["T3"]]
    m[0][0] = m[0][0] + 1
    rep.matrices["T3"] = tuple(tuple(r) for r in m)
    assert not check_specialization(rep).passed


@pytest.mark.parametrize("t, n, total", [("A", 4, 24), ("B", 2, 8), ("G2", None, 12), ("D", 3, 24)])
def test_completeness(t, n, total):
    r = check_completeness(t, n)
    assert r.passed
    assert G.group_order(t, n) == total


def test_completeness_respects_caps():
    with pytest.raises(G.CapExceeded):
        check_completeness("A", 7)


@pytest.mark.parametrize("t, n", [("A", 8), ("B", 5), ("D", 5), ("G2", None)])
def test_weight_separation(t, n):
    assert check_weight_separation(t, n).passed


def test_weight_separation_cap():
    with pytest.raises(G.CapExceeded):
        check_weight_separation("A", 9)


def test_projectors_on_two_one():
    assert check_projectors(build_rep("A", Shape((2, 1)))).passed


def test_branching_not_available_for_type_d():
    from seminormal.tableaux import enum_shapes

    with pytest.raises(ValueError):
        check_branching(build_rep("D", enum_shapes("D", 3)[0]))


def test_centrality_hecke_b():
    rep = build_hecke("B", Shape((2,), (1,)))
    assert check_centrality(rep).passed


@pytest.mark.parametrize("t, n", [("A", 3), ("B", 2), ("B", 3)])
def test_step2_formal_identities(t, n):
    for k in range(2, n + 1):
        lhs, rhs = step2_formal(t, n, k)
        assert lhs == rhs
    assert check_step2_identities(t, n).passed


def test_step2_not_defined_for_type_d():
    with pytest.raises(ValueError):
        check_step2_identities("D", 3)


@pytest.mark.parametrize("t, n", [("G2", None), ("B", 3)])
def test_full_suite(t, n):
    reports = run_suite(t, n)
    assert reports
    assert all(r.passed for r in reports), [r.to_json() for r in reports if not r.passed]
    assert {r.check for r in reports} <= set(ALL_CHECKS)


def test_suite_is_deterministic_and_serializable():
    a = [r.to_json() for r in run_suite("A", 3)]
    b = [r.to_json() for r in run_suite("A", 3)]
    assert json.dumps(a) == json.dumps(b)


def test_suite_input_errors():
    with pytest.raises(ValueError):
        run_suite("A", 3, ["nonsense"])
    with pytest.raises(ValueError):
        run_suite("E", 3)
    with pytest.raises(G.CapExceeded):
        run_suite("A", 20)
