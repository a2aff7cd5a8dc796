"""Seminormal representations of the Weyl groups S_n, WB_n, WD_n and WG_2.

Every representation is indexed by standard tableaux (G2: by paths through
the level-one shapes) in canonical order; generator matrices act on columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from . import groups as G
from . import matrices as mx
from .tableaux import (
    DLabel,
    G2_LABELS,
    Shape,
    StandardTableau,
    adjacent_swap,
    canonical_index,
    enum_standard_tableaux,
    g2_paths,
    sigma,
)

ONE = Fraction(1)
ZERO = Fraction(0)


def label_json(label) -> dict:
    if isinstance(label, str):
        return {"label": label}
    if isinstance(label, DLabel):
        out = label.shape.to_json()
        if label.split:
            out["split"] = label.split
        return out
    return label.to_json()


def label_size(group_type: str, label) -> int:
    return 2 if group_type == "G2" else label.size


@dataclass
class SeminormalRep:
    """A representation given by one exact matrix per generator."""

    group_type: str
    n: int | None
    label: Any
    basis: tuple
    matrices: dict[str, mx.Matrix]
    _elements: dict = field(default_factory=dict, repr=False, compare=False)

    one = ONE
    zero = ZERO

    @staticmethod
    def key(name: str) -> str:
        """Matrix key of a group generator name."""
        return name

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def generator_names(self) -> list[str]:
        return list(self.matrices)

    def word_matrix(self, word) -> mx.Matrix:
        return mx.mat_prod((self.matrices[g] for g in word), self.dim, self.one, self.zero)

    def element_matrix(self, element) -> mx.Matrix:
        """Matrix of a group element, built along stored shortest words."""
        if not self._elements:
            self._fill_elements()
        return self._elements[element]

    def _fill_elements(self):
        words = G.group_words(self.group_type, self.n)
        table = self._elements
        for el, word in words.items():
            if not word:
                table[el] = mx.identity(self.dim, self.one, self.zero)
            else:
                parent = G.compose(el, G.invert(G.generators(self.group_type, self.n)[word[-1]]))
                table[el] = mx.mat_mul(table[parent], self.matrices[self.key(word[-1])])

    def to_json(self) -> dict:
        return {
            "group": self.group_type,
            "n": label_size(self.group_type, self.label) if self.n is None else self.n,
            "shape": label_json(self.label),
            "basis": [b.to_json() for b in self.basis],
            "generators": [{"name": k, "matrix": mx.to_strings(m)} for k, m in self.matrices.items()],
        }


def _columns_matrix(d, columns) -> mx.Matrix:
    return mx.from_columns(d, columns, ZERO)


def _swap_columns(basis, i: int, diag_of) -> list[dict]:
    """Columns of ``s_i``: ``v_L -> diag v_L + (1 + diag) v_{s_i L}``."""
    cols = []
    for j, t in enumerate(basis):
        diag = diag_of(t)
        col = {j: diag} if diag else {}
        other = adjacent_swap(t, i)
        if other is not None:
            col[canonical_index(other)] = 1 + diag
        cols.append(col)
    return cols


def _content_step(t: StandardTableau, i: int) -> Fraction:
    return Fraction(1, t.box(i).content - t.box(i - 1).content)


def type_b_diagonal(t: StandardTableau, i: int) -> Fraction:
    """Diagonal coefficient of ``s_i`` (i >= 2) on a double-shape tableau."""
    if t.box(i).sign != t.box(i - 1).sign:
        return ZERO
    return _content_step(t, i)


def build_rep_A(shape) -> SeminormalRep:
    shape = shape if isinstance(shape, Shape) else Shape(tuple(shape))
    if shape.is_double:
        raise ValueError("type A needs a single partition")
    basis = enum_standard_tableaux(shape)
    n, d = shape.size, len(basis)
    mats = {f"s{i}": _columns_matrix(d, _swap_columns(basis, i, lambda t, i=i: _content_step(t, i))) for i in range(2, n + 1)}
    return SeminormalRep("A", n or None, shape, basis, mats)


def _b_matrices(shape: Shape, basis) -> dict[str, mx.Matrix]:
    d = len(basis)
    mats = {"s1": mx.diagonal([Fraction(t.box(1).sign) for t in basis], ZERO)}
    for i in range(2, shape.size + 1):
        mats[f"s{i}"] = _columns_matrix(d, _swap_columns(basis, i, lambda t, i=i: type_b_diagonal(t, i)))
    return mats


def build_rep_B(shape) -> SeminormalRep:
    if not isinstance(shape, Shape) or not shape.is_double:
        raise ValueError("type B needs a double partition")
    if shape.size < 1:
        raise ValueError("type B needs n >= 1")
    basis = enum_standard_tableaux(shape)
    return SeminormalRep("B", shape.size, shape, basis, _b_matrices(shape, basis))


def d_first_generator_columns(basis, diag_of) -> list[dict]:
    """Columns of ``st1``: ``v_L -> (s_2)_LL v_L - (1 + (s_2)_LL) v_{s_2 L}``."""
    cols = []
    for j, t in enumerate(basis):
        diag = diag_of(t)
        col = {j: diag} if diag else {}
        other = adjacent_swap(t, 2)
        if other is not None:
            col[canonical_index(other)] = -(1 + diag)
        cols.append(col)
    return cols


def half_basis(basis) -> list[int]:
    """Indices of tableaux whose entry 1 lies in the first component."""
    return [j for j, t in enumerate(basis) if t.box(1).component == 0]


def restrict_to_half(mat: mx.Matrix, basis, eps: int, zero=ZERO) -> mx.Matrix:
    """Action on ``w_L = v_L + eps v_{sigma L}`` for L in the canonical half."""
    half = half_basis(basis)
    partner = {j: canonical_index(sigma(basis[j])) for j in half}
    return tuple(tuple(mat[r][c] + eps * mat[r][partner[c]] for c in half) for r in half)


def build_rep_D(label: DLabel) -> SeminormalRep:
    if not isinstance(label, DLabel):
        raise ValueError("type D needs a DLabel")
    shape = label.shape
    n = shape.size
    if n < 2:
        raise ValueError("type D needs n >= 2")
    basis = enum_standard_tableaux(shape)
    b = _b_matrices(shape, basis)
    mats = {"st1": _columns_matrix(len(basis), d_first_generator_columns(basis, lambda t: type_b_diagonal(t, 2)))}
    for i in range(2, n + 1):
        mats[f"st{i}"] = b[f"s{i}"]
    if label.split:
        eps = 1 if label.split == "+" else -1
        mats = {k: restrict_to_half(m, basis, eps) for k, m in mats.items()}
        basis = tuple(basis[j] for j in half_basis(basis))
    return SeminormalRep("D", n, label, tuple(basis), mats)


_h = Fraction(1, 2)
G2_MATRICES = {
    "phi_1_0": ([[1]], [[1]]),
    "phi_1_6": ([[-1]], [[-1]]),
    "phi_1_3p": ([[1]], [[-1]]),
    "phi_1_3pp": ([[-1]], [[1]]),
    "phi_2_1": ([[1, 0], [0, -1]], [[_h, _h], [3 * _h, -_h]]),
    "phi_2_2": ([[1, 0], [0, -1]], [[-_h, 3 * _h], [_h, _h]]),
}


def build_rep_G2(label: str) -> SeminormalRep:
    if label not in G2_LABELS:
        raise ValueError(f"unknown G2 label {label!r}")
    s1, s2 = G2_MATRICES[label]
    conv = lambda m: tuple(tuple(Fraction(x) for x in r) for r in m)
    return SeminormalRep("G2", None, label, g2_paths(label), {"s1": conv(s1), "s2": conv(s2)})


def build_rep(group_type: str, label) -> SeminormalRep:
    builders = {"A": build_rep_A, "B": build_rep_B, "D": build_rep_D, "G2": build_rep_G2}
    if group_type not in builders:
        raise ValueError(f"unknown group type {group_type!r}")
    return builders[group_type](label)


def apply_group_algebra(rep: SeminormalRep, x: G.GroupAlgebraElement) -> mx.Matrix:
    out = mx.zeros(rep.dim, rep.zero)
    for g, c in x.terms.items():
        out = mx.mat_add(out, mx.mat_scale(c, rep.element_matrix(g)))
    return out


def character(rep: SeminormalRep, element) -> Fraction:
    return mx.trace(rep.element_matrix(element))


def character_table(reps, elements) -> list[list[Fraction]]:
    return [[character(r, g) for g in elements] for r in reps]
