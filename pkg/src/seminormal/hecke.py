"""Seminormal representations of the Iwahori-Hecke algebras of types A, B, D, G2.

Matrices have entries in Q(p, q).  Generator names are ``T2 .. Tn`` (type A),
``T1 .. Tn`` (type B), ``Tt1 .. Ttn`` (type D) and ``T1, T2`` (G2); the group
word ``s_i`` corresponds to ``T_i`` (``st_i`` to ``Tt_i``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import groups as G
from . import matrices as mx
from .exact import RatFunc, rf_eval, rf_subs
from .tableaux import DLabel, G2_LABELS, Shape, StandardTableau, enum_standard_tableaux, g2_paths
from .weyl import (
    SeminormalRep,
    _swap_columns,
    d_first_generator_columns,
    half_basis,
    restrict_to_half,
)

R_ONE = RatFunc.const(1)
R_ZERO = RatFunc.const(0)
P = RatFunc.p()
Q = RatFunc.q()
P_INV = RatFunc.p(-1)
Q_INV = RatFunc.q(-1)
Q_GAP = Q - Q_INV


@dataclass
class HeckeRep(SeminormalRep):
    """A representation of a Hecke algebra with Q(p, q) matrix entries."""

    one = R_ONE
    zero = R_ZERO

    @staticmethod
    def key(name: str) -> str:
        return "T" + name[1:]


def weyl_name(name: str) -> str:
    return "s" + name[1:]


@lru_cache(maxsize=None)
def _monomial(sign: int, pexp: int, qexp: int) -> RatFunc:
    return RatFunc.monomial(pexp, qexp, sign)


def hecke_content(t: StandardTableau, k: int, group_type: str) -> RatFunc:
    """CT(L(k)): ``q^{2ct}`` (A), ``sgn p^sgn q^{2ct}`` (B), ``sgn q^{2ct}`` (D)."""
    b = t.box(k)
    if group_type == "A":
        return _monomial(1, 0, 2 * b.content)
    if group_type == "B":
        return _monomial(b.sign, b.sign, 2 * b.content)
    if group_type == "D":
        return _monomial(b.sign, 0, 2 * b.content)
    raise ValueError(f"no tableau contents for type {group_type}")


def hecke_diagonal(t: StandardTableau, i: int, group_type: str) -> RatFunc:
    """``(T_i)_LL = (q - q^-1) / (1 - CT(L(i-1)) / CT(L(i)))``."""
    ratio = hecke_content(t, i - 1, group_type) / hecke_content(t, i, group_type)
    return Q_GAP / (1 - ratio)


def _hecke_columns(basis, i: int, group_type: str, first_d: bool = False) -> list[dict]:
    """Columns of ``T_i``; off-diagonal ``q^-1 + diag`` (negated for ``Tt1``)."""
    diag_of = lambda t: hecke_diagonal(t, i, group_type)
    if first_d:
        cols = d_first_generator_columns(basis, diag_of)
        shift = -Q_INV + 1
    else:
        cols = _swap_columns(basis, i, diag_of)
        shift = Q_INV - 1
    # the Weyl helpers use the off-diagonal 1 + diag; move it to q^-1 + diag
    out = []
    for j, col in enumerate(cols):
        out.append({r: (v + shift if r != j else v) for r, v in col.items()})
    return out


def _matrix(d, cols) -> mx.Matrix:
    return mx.from_columns(d, cols, R_ZERO)


def build_hecke_A(shape) -> HeckeRep:
    shape = shape if isinstance(shape, Shape) else Shape(tuple(shape))
    if shape.is_double:
        raise ValueError("type A needs a single partition")
    basis = enum_standard_tableaux(shape)
    n, d = shape.size, len(basis)
    mats = {f"T{i}": _matrix(d, _hecke_columns(basis, i, "A")) for i in range(2, n + 1)}
    return HeckeRep("A", n or None, shape, basis, mats)


def _hecke_b_matrices(shape: Shape, basis, group_type: str) -> dict:
    d = len(basis)
    mats = {"T1": mx.diagonal([hecke_content(t, 1, group_type) for t in basis], R_ZERO)}
    for i in range(2, shape.size + 1):
        mats[f"T{i}"] = _matrix(d, _hecke_columns(basis, i, group_type))
    return mats


def build_hecke_B(shape) -> HeckeRep:
    if not isinstance(shape, Shape) or not shape.is_double or shape.size < 1:
        raise ValueError("type B needs a nonempty double partition")
    basis = enum_standard_tableaux(shape)
    return HeckeRep("B", shape.size, shape, basis, _hecke_b_matrices(shape, basis, "B"))


def build_hecke_D(label: DLabel) -> HeckeRep:
    if not isinstance(label, DLabel):
        raise ValueError("type D needs a DLabel")
    shape = label.shape
    n = shape.size
    if n < 2:
        raise ValueError("type D needs n >= 2")
    basis = enum_standard_tableaux(shape)
    d = len(basis)
    mats = {"Tt1": _matrix(d, _hecke_columns(basis, 2, "D", first_d=True))}
    for i in range(2, n + 1):
        mats[f"Tt{i}"] = _matrix(d, _hecke_columns(basis, i, "D"))
    if label.split:
        eps = 1 if label.split == "+" else -1
        mats = {k: restrict_to_half(m, basis, eps, R_ZERO) for k, m in mats.items()}
        basis = tuple(basis[j] for j in half_basis(basis))
    return HeckeRep("D", n, label, tuple(basis), mats)


def g2_entries(sign: int) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
    """``(a, b, c, d)`` for sign +1 and ``(x, y, z, w)`` for sign -1."""
    a = (sign + P_INV * Q_GAP) / (P + P_INV)
    return a, Q - a, Q_INV + a, Q_GAP - a


def build_hecke_G2(label: str) -> HeckeRep:
    if label not in G2_LABELS:
        raise ValueError(f"unknown G2 label {label!r}")
    neg_p, neg_q = -P_INV, -Q_INV
    one_dim = {
        "phi_1_0": (P, Q),
        "phi_1_6": (neg_p, neg_q),
        "phi_1_3p": (P, neg_q),
        "phi_1_3pp": (neg_p, Q),
    }
    if label in one_dim:
        t1, t2 = one_dim[label]
        mats = {"T1": ((t1,),), "T2": ((t2,),)}
    else:
        a, b, c, d = g2_entries(1 if label == "phi_2_1" else -1)
        mats = {"T1": ((P, R_ZERO), (R_ZERO, neg_p)), "T2": ((a, b), (c, d))}
    return HeckeRep("G2", None, label, g2_paths(label), mats)


def build_hecke(group_type: str, label) -> HeckeRep:
    builders = {"A": build_hecke_A, "B": build_hecke_B, "D": build_hecke_D, "G2": build_hecke_G2}
    if group_type not in builders:
        raise ValueError(f"unknown group type {group_type!r}")
    return builders[group_type](label)


def murphy_word(group_type: str, k: int) -> tuple[str, ...]:
    """Generator word of the Murphy element M_k (type D: M~_k, k >= 2)."""
    if group_type == "A":
        if k < 2:
            raise ValueError("type A Murphy elements start at k = 2")
        down = tuple(f"T{i}" for i in range(k, 1, -1))
        return down + down[::-1]
    if group_type == "B":
        down = tuple(f"T{i}" for i in range(k, 1, -1))
        return down + ("T1",) + down[::-1]
    if group_type == "D":
        if k < 2:
            raise ValueError("type D Murphy elements start at k = 2")
        # M~_2 = Tt2 Tt1 and M~_k = Tt_k M~_{k-1} Tt_k
        outer = tuple(f"Tt{i}" for i in range(k, 2, -1))
        return outer + ("Tt2", "Tt1") + outer[::-1]
    raise ValueError(f"no Murphy elements for type {group_type}")


def murphy_matrix(rep: HeckeRep, k: int) -> mx.Matrix:
    n = rep.n or 0
    if not 1 <= k <= n:
        raise ValueError(f"level {k} out of range 1..{n}")
    if k == 1 and rep.group_type in ("A", "D"):
        return mx.identity(rep.dim, R_ONE, R_ZERO)
    return rep.word_matrix(murphy_word(rep.group_type, k))


def longest_matrix(rep: HeckeRep, k: int) -> mx.Matrix:
    """``T_{w_{k,0}}`` along a reduced word of the level-k longest element."""
    word = G.level_longest_word(rep.group_type, rep.n, k)
    return rep.word_matrix(rep.key(g) for g in word)


def _level_range(rep: HeckeRep) -> range:
    return range(1, 3) if rep.group_type == "G2" else range(1, (rep.n or 0) + 1)


def central_matrix(rep: HeckeRep, k: int) -> mx.Matrix:
    """The central element z_k: T_{w_{k,0}} when w_{k,0} = -1, its square otherwise."""
    if k not in _level_range(rep):
        raise ValueError(f"level {k} out of range")
    t = rep.group_type
    if t == "A":
        return mx.mat_prod((murphy_matrix(rep, j) for j in range(k, 1, -1)), rep.dim, R_ONE, R_ZERO)
    if t == "B":
        return mx.mat_prod((murphy_matrix(rep, j) for j in range(k, 0, -1)), rep.dim, R_ONE, R_ZERO)
    w = longest_matrix(rep, k)
    if t == "D" and k % 2:
        return mx.mat_mul(w, w)
    return w


def specialize_rep(rep: HeckeRep, p0, q0) -> SeminormalRep:
    """Evaluate every entry at ``(p0, q0)``; raises PoleError at a pole."""
    p0, q0 = Fraction(p0), Fraction(q0)
    mats = {weyl_name(k): mx.mat_map(lambda f: rf_eval(f, p0, q0), m) for k, m in rep.matrices.items()}
    return SeminormalRep(rep.group_type, rep.n, rep.label, rep.basis, mats)


def _divide_and_evaluate(mat: mx.Matrix, param: str) -> mx.Matrix:
    """``[(mat - 1) / (x - x^-1)]`` at ``x = 1`` for ``x`` the given parameter."""
    x = P if param == "p" else Q
    gap = x - x.inverse()
    d = len(mat)
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            f = mat[i][j] - (1 if i == j else 0)
            row.append(rf_eval(f / gap, 1, 1))
        out.append(tuple(row))
    return tuple(out)


PARAM_FLAVOR = {"q": "long", "p": "short"}


def jucys_specialization_check(rep_h: HeckeRep, rep_w: SeminormalRep, k: int) -> list[dict]:
    """Compare the specialized squares of T_{w_{k,0}} with reflection class sums.

    For each parameter x attached to a level-k generator, the other parameter
    is set to 1, ``(T_w0^2 - 1) / (x - x^-1)`` is evaluated at x = 1 and
    compared with the sum of the reflections conjugate to the generators
    carrying x.  Finally ``T_w0`` at p = q = 1 must equal the matrix of w_{k,0}.
    """
    from .weyl import apply_group_algebra

    t, n = rep_h.group_type, rep_h.n
    pres = G.presentation(t, n)
    names = G.level_generators(t, n, k)
    params = sorted({pres.parameters[g] for g in names}, reverse=True)
    w0 = longest_matrix(rep_h, k)
    results = []
    for x in params:
        other = "q" if x == "p" else "p"
        spec = mx.mat_map(lambda f: rf_subs(f, **{other: 1}), w0)
        got = _divide_and_evaluate(mx.mat_mul(spec, spec), x)
        want = apply_group_algebra(rep_w, G.central_sum(t, k, PARAM_FLAVOR[x], n))
        results.append({"identity": f"square_{x}", "flavor": PARAM_FLAVOR[x], "ok": mx.mat_eq(got, want), "got": got, "want": want})
    got = mx.mat_map(lambda f: rf_eval(f, 1, 1), w0)
    w0_el = G.compose_word(G.level_longest_word(t, n, k), G.generators(t, n), G.identity(t, n))
    want = rep_w.element_matrix(w0_el)
    results.append({"identity": "longest", "flavor": "zero", "ok": mx.mat_eq(got, want), "got": got, "want": want})
    return results
