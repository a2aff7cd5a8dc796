"""Acceptance checks: ten exact criteria, one pass/fail line each.

Run with pytest (the lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

from fractions import Fraction

import pytest

from seminormal import groups as G
from seminormal import matrices as mx
from seminormal.exact import RatFunc
from seminormal.hecke import build_hecke, specialize_rep
from seminormal.tableaux import enum_shapes
from seminormal.verify import check_specialization, run_suite
from seminormal.weyl import build_rep, character

RANKS = {"A": range(1, 7), "B": range(1, 5), "D": range(2, 5)}


def _ranks(table):
    for t, ns in table.items():
        for n in ns:
            yield t, n
    yield "G2", None


def _suite_failures(check, table):
    bad = []
    for t, n in _ranks(table):
        for r in run_suite(t, n, [check]):
            if not r.passed:
                bad.append(r.to_json())
    return bad


def relations():
    return _suite_failures("relations", RANKS)


def printed_matrices():
    h = Fraction(1, 2)
    weyl = {
        "phi_1_0": ([[1]], [[1]]),
        "phi_1_6": ([[-1]], [[-1]]),
        "phi_1_3p": ([[1]], [[-1]]),
        "phi_1_3pp": ([[-1]], [[1]]),
        "phi_2_1": ([[1, 0], [0, -1]], [[h, h], [3 * h, -h]]),
        "phi_2_2": ([[1, 0], [0, -1]], [[-h, 3 * h], [h, h]]),
    }
    p, q = RatFunc.p(), RatFunc.q()
    gap = q - 1 / q
    a = (1 + gap / p) / (p + 1 / p)
    x = (-1 + gap / p) / (p + 1 / p)
    hecke = {
        "phi_1_0": ([[p]], [[q]]),
        "phi_1_6": ([[-1 / p]], [[-1 / q]]),
        "phi_1_3p": ([[p]], [[-1 / q]]),
        "phi_1_3pp": ([[-1 / p]], [[q]]),
        "phi_2_1": ([[p, 0], [0, -1 / p]], [[a, q - a], [1 / q + a, gap - a]]),
        "phi_2_2": ([[p, 0], [0, -1 / p]], [[x, q - x], [1 / q + x, gap - x]]),
    }
    bad = []
    for label, (s1, s2) in weyl.items():
        rep = build_rep("G2", label)
        if [[list(r) for r in rep.matrices[g]] for g in ("s1", "s2")] != [s1, s2]:
            bad.append(("weyl", label))
    for label, (t1, t2) in hecke.items():
        rep = build_hecke("G2", label)
        if [[list(r) for r in rep.matrices[g]] for g in ("T1", "T2")] != [t1, t2]:
            bad.append(("hecke", label))
    return bad


G2_TABLE = {
    "phi_1_0": [1, 1, 1, 1, 1, 1],
    "phi_1_6": [1, -1, -1, 1, 1, 1],
    "phi_1_3p": [1, 1, -1, -1, 1, -1],
    "phi_1_3pp": [1, -1, 1, -1, 1, -1],
    "phi_2_1": [2, 0, 0, 1, -1, -2],
    "phi_2_2": [2, 0, 0, -1, -1, 2],
}
G2_CLASS_WORDS = [(), ("s1",), ("s2",), ("s1", "s2"), ("s1", "s2") * 2, ("s1", "s2") * 3]


def g2_character_table():
    gens, one = G.generators("G2"), G.identity("G2")
    reps = [G.compose_word(w, gens, one) for w in G2_CLASS_WORDS]
    bad = []
    for label, row in G2_TABLE.items():
        rep = build_rep("G2", label)
        got = [character(rep, g) for g in reps]
        if got != row:
            bad.append((label, got))
    return bad


def jm_spectra():
    return _suite_failures("jm_spectra", RANKS)


def completeness():
    return _suite_failures("completeness", {"A": range(1, 6), "B": range(1, 5), "D": range(2, 5)})


def branching():
    bad = []
    for t, ns in (("A", range(2, 6)), ("B", range(2, 5))):
        for n in ns:
            bad += [r.to_json() for r in run_suite(t, n, ["branching"]) if not r.passed]
    return bad


def specialization():
    bad = []
    # every entry at p = q = 1 equals the Weyl entry, at the relation ranks
    for t, n in _ranks(RANKS):
        for label in enum_shapes(t, n):
            spec = specialize_rep(build_hecke(t, label), 1, 1)
            if spec.matrices != build_rep(t, label).matrices:
                bad.append((t, n, str(label)))
    # the square identities for the listed small ranks
    for t, n in (("A", 2), ("A", 3), ("B", 2), ("B", 3), ("G2", None)):
        for label in enum_shapes(t, n):
            r = check_specialization(build_hecke(t, label))
            if not r.passed:
                bad.append(r.to_json())
    return bad


def centrality():
    return _suite_failures("centrality", RANKS)


def projectors_and_weights():
    bad = _suite_failures("projectors", {"A": range(1, 5), "B": range(1, 4)})
    for t, n in (("A", 8), ("B", 5), ("D", 5), ("G2", None)):
        bad += [r.to_json() for r in run_suite(t, n, ["weight_separation"], caps={"A": 8, "B": 5, "D": 5}) if not r.passed]
    return bad


def step2_identities():
    bad = []
    for t, n in [("A", n) for n in range(2, 5)] + [("B", n) for n in range(2, 5)] + [("G2", None)]:
        bad += [r.to_json() for r in run_suite(t, n, ["step2_identities"]) if not r.passed]
    return bad


CRITERIA = [
    (1, "relation identities (Weyl and Hecke)", relations),
    (2, "printed G2 matrices", printed_matrices),
    (3, "G2 character table", g2_character_table),
    (4, "Jucys-Murphy and Murphy spectra", jm_spectra),
    (5, "completeness and orthogonality", completeness),
    (6, "branching exactness", branching),
    (7, "specialization at p = q = 1", specialization),
    (8, "centrality", centrality),
    (9, "projectors and weight separation", projectors_and_weights),
    (10, "derivation identities", step2_identities),
]


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, acceptance_lines):
    failures = fn()
    status = "PASS" if not failures else "FAIL"
    acceptance_lines.append(f"criterion {number:2d} {status}  {title}")
    assert not failures, failures[:3]


if __name__ == "__main__":
    import sys
    import time

    ok = True
    for number, title, fn in CRITERIA:
        start = time.time()
        failures = fn()
        ok &= not failures
        print(f"criterion {number:2d} {'PASS' if not failures else 'FAIL'}  {title}  ({time.time() - start:.1f}s)")
    sys.exit(0 if ok else 1)
