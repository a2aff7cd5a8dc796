from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from seminormal.tableaux import (
    G2_LABELS,
    DLabel,
    Shape,
    adjacent_swap,
    box_stats,
    canonical_index,
    d_label,
    double_partitions,
    enum_shapes,
    enum_standard_tableaux,
    g2_paths,
    is_standard,
    partitions,
    sigma,
    tableau_from_rows,
    tableau_weight,
    weight_constants,
)

from oracles import (
    brute_double_partitions,
    brute_force_fillings,
    content_sum,
    double_count,
    hook_length_count,
    partitions_by_parts,
)


def grids(t):
    rows = [tuple(tuple(r) for r in t.rows(0))]
    if t.shape.is_double:
        rows.append(tuple(tuple(r) for r in t.rows(1)))
    return tuple(rows)


# -- shapes -------------------------------------------------------------------

def test_type_a_shapes_of_three():
    assert {s.alpha for s in enum_shapes("A", 3)} == {(3,), (2, 1), (1, 1, 1)}


@pytest.mark.parametrize("n", range(1, 8))
def test_partitions_match_oracle(n):
    got = partitions(n)
    assert len(got) == len(set(got))
    assert set(got) == partitions_by_parts(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_double_partitions_match_oracle(n):
    got = {(s.alpha, s.beta) for s in double_partitions(n)}
    assert got == brute_double_partitions(n)


def test_b2_has_five_labels():
    assert len(enum_shapes("B", 2)) == 5


def test_g2_has_six_labels():
    assert enum_shapes("G2") == list(G2_LABELS)
    assert len(G2_LABELS) == 6


@pytest.mark.parametrize("n", range(2, 7))
def test_d_labels_cover_unordered_pairs(n):
    labels = enum_shapes("D", n)
    ordered = double_partitions(n)
    unordered = {frozenset([s.alpha, s.beta]) for s in ordered}
    split = [lab for lab in labels if lab.split]
    assert len(labels) - len(split) // 2 == len(unordered)
    assert all(lab.shape.alpha == lab.shape.beta for lab in split)
    assert (len(split) > 0) == (n % 2 == 0)


def test_d_label_orientation_and_split_rules():
    assert d_label((1,), (2,)) == d_label((2,), (1,))
    with pytest.raises(ValueError):
        DLabel(Shape((1,), (1,)))
    with pytest.raises(ValueError):
        DLabel(Shape((2,), (1,)), "+")


def test_invalid_shapes():
    with pytest.raises(ValueError):
        Shape((1, 2))
    with pytest.raises(ValueError):
        Shape((2, 0))
    with pytest.raises(ValueError):
        enum_shapes("A", 0)
    with pytest.raises(ValueError):
        enum_shapes("D", 1)


# -- standard tableaux ------------------------------------------------------

def test_single_row_has_one_tableau():
    assert len(enum_standard_tableaux(Shape((5,)))) == 1


def test_two_one_and_double_one_one():
    assert len(enum_standard_tableaux(Shape((2, 1)))) == 2
    assert len(enum_standard_tableaux(Shape((1,), (1,)))) == 2


@pytest.mark.parametrize("rows", [(2, 1), (3, 2), (2, 2, 1), (3, 1, 1), (4, 2, 1)])
def test_tableaux_match_brute_force(rows):
    got = {grids(t) for t in enum_standard_tableaux(Shape(rows))}
    want = set(brute_force_fillings(rows))
    assert got == want


@pytest.mark.parametrize("alpha, beta", [((1,), (1,)), ((2,), (1,)), ((1, 1), (2,)), ((2, 1), (1,)), ((), (2, 1))])
def test_double_tableaux_match_brute_force(alpha, beta):
    got = {grids(t) for t in enum_standard_tableaux(Shape(alpha, beta))}
    want = set(brute_force_fillings(alpha, beta))
    assert got == want


@pytest.mark.parametrize("n", range(1, 9))
def test_counts_by_hook_length(n):
    for rows in partitions(n):
        assert len(enum_standard_tableaux(Shape(rows))) == hook_length_count(rows)


@pytest.mark.parametrize("n", range(1, 6))
def test_double_counts(n):
    for s in double_partitions(n):
        assert len(enum_standard_tableaux(s)) == double_count(s.alpha, s.beta)


def test_canonical_order_is_lexicographic():
    tabs = enum_standard_tableaux(Shape((3, 2)))
    assert list(tabs) == sorted(tabs, key=lambda t: t.boxes)
    assert [canonical_index(t) for t in tabs] == list(range(len(tabs)))
    assert tabs[0].rows() == [[1, 2, 3], [4, 5]]


def test_one_tableau_shape_has_index_zero():
    (t,) = enum_standard_tableaux(Shape((1, 1, 1)))
    assert canonical_index(t) == 0


# -- box statistics -----------------------------------------------------------

def test_contents_and_signs():
    t = tableau_from_rows([[1, 2, 4], [3]])
    assert box_stats(t, 4) == (2, 1)
    assert box_stats(t, 1) == (0, 1)
    assert box_stats(t, 3) == (-1, 1)
    d = tableau_from_rows([[1]], [[2, 3]])
    assert [box_stats(d, k)[1] for k in (1, 2, 3)] == [1, -1, -1]
    assert box_stats(d, 3)[0] == 1


def test_box_index_out_of_range():
    with pytest.raises(IndexError):
        tableau_from_rows([[1, 2]]).box(3)


def test_tableau_from_rows_rejects_bad_fillings():
    with pytest.raises(ValueError):
        tableau_from_rows([[2, 1]])
    with pytest.raises(ValueError):
        tableau_from_rows([[1, 3]])


# -- swaps and sigma ----------------------------------------------------------

def test_adjacent_swap_examples():
    t = tableau_from_rows([[1, 2], [3]])
    assert adjacent_swap(t, 3).rows() == [[1, 3], [2]]
    assert adjacent_swap(t, 2) is None
    with pytest.raises(IndexError):
        adjacent_swap(t, 1)


def test_sigma_swaps_components():
    t = tableau_from_rows([[1, 3]], [[2]])
    s = sigma(t)
    assert s.rows(0) == [[2]] and s.rows(1) == [[1, 3]]
    assert sigma(s) == t
    with pytest.raises(ValueError):
        sigma(tableau_from_rows([[1]]))


# -- weights -----------------------------------------------------------------

@pytest.mark.parametrize("k", range(1, 7))
def test_single_row_constants(k):
    assert weight_constants((k,), "A") == (None, k * (k - 1) // 2, None)
    assert weight_constants(Shape((k,), ()), "B") == (k, k * (k - 1), 1)


def test_b_one_one_constants():
    assert weight_constants(Shape((1,), (1,)), "B") == (0, 0, -1)


def test_g2_constants():
    assert weight_constants("phi_2_1", "G2") == (0, 0, -1)
    assert weight_constants("phi_1_0", "G2") == (3, 3, 1)
    assert weight_constants("phi_1_3p", "G2") == (3, -3, -1)


@pytest.mark.parametrize("rows", [(3, 1), (2, 2, 1), (4,)])
def test_type_a_long_constant_is_content_sum(rows):
    assert weight_constants(rows, "A")[1] == content_sum(rows)


def test_weight_examples():
    t = tableau_from_rows([[1, 2], [3]])
    assert tableau_weight(t, "A").contents == (0, 1, -1)
    assert tableau_weight(tableau_from_rows([[1, 2, 3, 4]]), "A").contents == (0, 1, 2, 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_type_a_weights_separate(n):
    keys = Counter(
        tableau_weight(t, "A").key("A") for rows in partitions(n) for t in enum_standard_tableaux(Shape(rows))
    )
    assert max(keys.values()) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_type_b_weights_separate(n):
    keys = Counter(tableau_weight(t, "B").key("B") for s in double_partitions(n) for t in enum_standard_tableaux(s))
    assert max(keys.values()) == 1


@pytest.mark.parametrize("n", range(2, 6))
def test_type_d_fibers_are_sigma_orbits(n):
    fibers = {}
    for s in double_partitions(n):
        for t in enum_standard_tableaux(s):
            fibers.setdefault(tableau_weight(t, "D").key("D"), set()).add(t)
    for tabs in fibers.values():
        a, b = sorted(tabs)
        assert sigma(a) == b


def test_g2_paths_separate():
    weights = [path.weight() for lab in G2_LABELS for path in g2_paths(lab)]
    assert len(weights) == 8 == len(set(weights))


# -- properties ----------------------------------------------------------------

shapes = st.integers(1, 7).flatmap(lambda n: st.sampled_from(partitions(n)))


@settings(max_examples=40, deadline=None)
@given(shapes)
def test_every_tableau_is_standard_and_distinct(rows):
    tabs = enum_standard_tableaux(Shape(rows))
    assert len(set(tabs)) == len(tabs)
    assert all(is_standard(t) for t in tabs)


@settings(max_examples=40, deadline=None)
@given(shapes, st.data())
def test_swap_is_an_involution_on_standard_tableaux(rows, data):
    tabs = enum_standard_tableaux(Shape(rows))
    t = data.draw(st.sampled_from(tabs))
    if t.n < 2:
        return
    i = data.draw(st.integers(2, t.n))
    s = adjacent_swap(t, i)
    if s is not None:
        assert is_standard(s)
        assert adjacent_swap(s, i) == t
        a, b = t.box(i - 1), t.box(i)
        assert a.content != b.content or a.sign != b.sign


@settings(max_examples=40, deadline=None)
@given(shapes, st.data())
def test_restriction_is_a_standard_tableau_of_the_smaller_shape(rows, data):
    t = data.draw(st.sampled_from(enum_standard_tableaux(Shape(rows))))
    m = data.draw(st.integers(0, t.n))
    r = t.restrict(m)
    assert r.n == m and r.shape.size == m
    assert r in enum_standard_tableaux(r.shape)
