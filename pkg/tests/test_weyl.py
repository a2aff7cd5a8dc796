from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from seminormal import groups as G
from seminormal import matrices as mx
from seminormal.tableaux import DLabel, Shape, d_label, enum_shapes, tableau_weight
from seminormal.weyl import (
    apply_group_algebra,
    build_rep,
    build_rep_A,
    build_rep_B,
    build_rep_D,
    build_rep_G2,
    character,
)

from oracles import matrix_from_lists

F = Fraction


def sym(m):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m])


def relation_holds_sympy(rep, pres):
    """Check every Coxeter relation with sympy matrix products."""
    mats = {g: sym(m) for g, m in rep.matrices.items()}
    one = sympy.eye(rep.dim)
    for lhs, rhs in pres.relations:
        a, b = one, one
        for g in lhs:
            a = a * mats[g]
        for g in rhs:
            b = b * mats[g]
        if a != b:
            return False
    return True


# -- type A --------------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 6))
def test_row_and_column(n):
    row = build_rep_A((n,))
    col = build_rep_A((1,) * n)
    for i in range(2, n + 1):
        assert row.matrices[f"s{i}"] == ((F(1),),)
        assert col.matrices[f"s{i}"] == ((F(-1),),)


def test_two_one():
    rep = build_rep_A((2, 1))
    assert rep.matrices["s2"] == matrix_from_lists([[1, 0], [0, -1]])
    assert rep.matrices["s3"] == matrix_from_lists([["-1/2", "3/2"], ["1/2", "1/2"]])
    assert relation_holds_sympy(rep, G.presentation("A", 3))


def test_empty_partition_is_trivial():
    rep = build_rep_A(())
    assert rep.dim == 1 and rep.matrices == {}


@pytest.mark.parametrize("rows", [(3, 1), (2, 2), (3, 2), (2, 2, 1)])
def test_type_a_relations_by_sympy(rows):
    rep = build_rep_A(rows)
    assert relation_holds_sympy(rep, G.presentation("A", sum(rows)))


# -- type B --------------------------------------------------------------------

def test_type_b_small_examples():
    assert build_rep_B(Shape((1,), ())).matrices["s1"] == ((F(1),),)
    assert build_rep_B(Shape((), (1,))).matrices["s1"] == ((F(-1),),)
    rep = build_rep_B(Shape((1,), (1,)))
    assert rep.matrices["s1"] == matrix_from_lists([[1, 0], [0, -1]])
    assert rep.matrices["s2"] == matrix_from_lists([[0, 1], [1, 0]])
    assert relation_holds_sympy(rep, G.presentation("B", 2))


@pytest.mark.parametrize("alpha, beta", [((2,), (1,)), ((1,), (1, 1)), ((2, 1), (1,)), ((3,), ())])
def test_type_b_relations_by_sympy(alpha, beta):
    rep = build_rep_B(Shape(alpha, beta))
    assert relation_holds_sympy(rep, G.presentation("B", rep.n))


def test_type_b_needs_double_shape():
    with pytest.raises(ValueError):
        build_rep_B(Shape((2,)))


# -- type D --------------------------------------------------------------------

def test_split_module_has_half_dimension():
    full = build_rep_B(Shape((2,), (2,)))
    plus = build_rep_D(DLabel(Shape((2,), (2,)), "+"))
    minus = build_rep_D(DLabel(Shape((2,), (2,)), "-"))
    assert plus.dim == minus.dim == full.dim // 2
    assert relation_holds_sympy(plus, G.presentation("D", 4))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_type_d_sum_of_squares(n):
    total = sum(build_rep_D(lab).dim ** 2 for lab in enum_shapes("D", n))
    assert total == 2 ** (n - 1) * G.group_order("A", n)


@pytest.mark.parametrize("alpha, beta", [((2,), (1,)), ((2, 1), (1,)), ((3,), (1,)), ((1, 1), (2,))])
def test_swapped_pairs_have_equal_characters(alpha, beta):
    n = sum(alpha) + sum(beta)
    a = build_rep_D(DLabel(Shape(alpha, beta)))
    b = build_rep_D(DLabel(Shape(beta, alpha)))
    for g in G.enumerate_group("D", n):
        assert character(a, g) == character(b, g)


def test_split_halves_sum_to_the_full_module():
    n = 4
    label = Shape((2,), (2,))
    plus = build_rep_D(DLabel(label, "+"))
    minus = build_rep_D(DLabel(label, "-"))
    whole = build_rep_B(label)
    for g in G.enumerate_group("D", n):
        assert character(plus, g) + character(minus, g) == character(whole, g)


def test_type_d_first_generator_gets_minus_sign():
    rep = build_rep_D(d_label((1,), (2,)))
    b = build_rep_B(Shape((2,), (1,)))
    s1, s2 = b.matrices["s1"], b.matrices["s2"]
    assert rep.matrices["st1"] == mx.mat_prod([s1, s2, s1], rep.dim, F(1), F(0))


# -- G2 --------------------------------------------------------------------------

PRINTED = {
    "phi_1_0": ([[1]], [[1]]),
    "phi_1_6": ([[-1]], [[-1]]),
    "phi_1_3p": ([[1]], [[-1]]),
    "phi_1_3pp": ([[-1]], [[1]]),
    "phi_2_1": ([[1, 0], [0, -1]], [["1/2", "1/2"], ["3/2", "-1/2"]]),
    "phi_2_2": ([[1, 0], [0, -1]], [["-1/2", "3/2"], ["1/2", "1/2"]]),
}


@pytest.mark.parametrize("label", list(PRINTED))
def test_g2_printed_matrices(label):
    rep = build_rep_G2(label)
    s1, s2 = PRINTED[label]
    assert rep.matrices["s1"] == matrix_from_lists(s1)
    assert rep.matrices["s2"] == matrix_from_lists(s2)
    assert relation_holds_sympy(rep, G.presentation("G2"))


def test_g2_rejects_unknown_label():
    with pytest.raises(ValueError):
        build_rep_G2("phi_3_1")


# -- group algebra action ----------------------------------------------------------

def test_identity_acts_as_identity():
    rep = build_rep_A((3, 2))
    one = G.GroupAlgebraElement.scalar(1, "A", 5)
    assert apply_group_algebra(rep, one) == mx.identity(rep.dim, F(1), F(0))


@pytest.mark.parametrize("rows", [(3, 1), (2, 2), (2, 1, 1)])
def test_type_a_jm_eigenvalues_are_contents(rows):
    rep = build_rep_A(rows)
    n = rep.n
    for k in range(1, n + 1):
        m = apply_group_algebra(rep, G.jm_element("A", k, "long", n))
        assert mx.is_diagonal(m)
        assert mx.diag_entries(m) == [F(t.box(k).content) for t in rep.basis]


def test_type_b_long_jm_acts_as_two_on_trivial():
    rep = build_rep_B(Shape((2,), ()))
    m = apply_group_algebra(rep, G.jm_element("B", 2, "long"))
    assert m == ((F(2),),)


@pytest.mark.parametrize("alpha, beta", [((1,), (1,)), ((2,), (1,)), ((1,), (1, 1))])
def test_type_b_jm_eigenvalues(alpha, beta):
    rep = build_rep_B(Shape(alpha, beta))
    n = rep.n
    for k in range(1, n + 1):
        short = apply_group_algebra(rep, G.jm_element("B", k, "short", n))
        long = apply_group_algebra(rep, G.jm_element("B", k, "long", n))
        assert mx.diag_entries(short) == [t.box(k).sign for t in rep.basis]
        assert mx.diag_entries(long) == [2 * t.box(k).content for t in rep.basis]
        assert mx.is_diagonal(short) and mx.is_diagonal(long)


def test_g2_character_of_longest_element():
    w0 = G.longest_element("G2")
    assert [character(build_rep_G2(lab), w0) for lab in PRINTED] == [1, 1, -1, -1, -2, 2]


# -- properties -------------------------------------------------------------------

shape_a = st.integers(2, 5).flatmap(lambda n: st.sampled_from(enum_shapes("A", n)))
shape_b = st.integers(1, 3).flatmap(lambda n: st.sampled_from(enum_shapes("B", n)))


@settings(max_examples=25, deadline=None)
@given(shape_a)
def test_type_a_generators_are_involutions(shape):
    rep = build_rep("A", shape)
    one = mx.identity(rep.dim, F(1), F(0))
    for m in rep.matrices.values():
        assert mx.mat_mul(m, m) == one


@settings(max_examples=25, deadline=None)
@given(shape_b)
def test_type_b_diagonal_zero_exactly_when_signs_differ(shape):
    rep = build_rep("B", shape)
    for i in range(2, rep.n + 1):
        m = rep.matrices[f"s{i}"]
        for j, t in enumerate(rep.basis):
            a, b = t.box(i - 1), t.box(i)
            if a.sign != b.sign:
                assert m[j][j] == 0
            else:
                assert m[j][j] == F(1, b.content - a.content)


@settings(max_examples=25, deadline=None)
@given(shape_a)
def test_weights_index_the_basis(shape):
    rep = build_rep("A", shape)
    weights = [tableau_weight(t, "A").contents for t in rep.basis]
    assert len(set(weights)) == rep.dim
