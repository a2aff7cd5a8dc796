"""Executable checks over the constructed representations.

Each check returns a :class:`CheckReport`; failures carry a witness naming the
first relation, element or entry that went wrong, with both sides printed in
canonical text form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import groups as G
from . import matrices as mx
from .exact import RatFunc
from .hecke import (
    HeckeRep,
    P,
    Q,
    Q_GAP,
    build_hecke,
    central_matrix,
    hecke_content,
    jucys_specialization_check,
    longest_matrix,
    murphy_matrix,
    specialize_rep,
    weyl_name,
)
from .tableaux import (
    G2_CONSTANTS,
    G2_LABELS,
    Shape,
    double_partitions,
    enum_shapes,
    enum_standard_tableaux,
    partitions,
    sigma,
    sub_shape,
    tableau_weight,
    weight_constants,
)
from .weyl import SeminormalRep, apply_group_algebra, build_rep, build_rep_A, character, label_json

# largest ranks for checks that enumerate groups or sweep every representation
GROUP_CAPS = {"A": 6, "B": 4, "D": 4}
# largest ranks for checks that only enumerate tableaux
TABLEAU_CAPS = {"A": 8, "B": 5, "D": 5}


@dataclass
class CheckReport:
    check: str
    subject: dict
    status: str
    witness: dict | None = field(default=None)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        out = {"check": self.check, "subject": self.subject, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _subject(rep: SeminormalRep) -> dict:
    return {
        "type": rep.group_type,
        "n": rep.n if rep.n is not None else 2,
        "shape": label_json(rep.label),
        "algebra": "hecke" if isinstance(rep, HeckeRep) else "weyl",
    }


def _report(name: str, subject: dict, witness: dict | None) -> CheckReport:
    return CheckReport(name, subject, "fail" if witness else "pass", witness)


def _mismatch(label, got: mx.Matrix, want: mx.Matrix) -> dict | None:
    where = mx.first_difference(got, want)
    if where is None:
        return None
    return {"at": label, "entry": list(where), "expected": mx.to_strings(want), "actual": mx.to_strings(got)}


def _is_hecke(rep) -> bool:
    return isinstance(rep, HeckeRep)


def _identity(rep) -> mx.Matrix:
    return mx.identity(rep.dim, rep.one, rep.zero)


def _levels(rep) -> range:
    return range(1, 3) if rep.group_type == "G2" else range(1, (rep.n or 0) + 1)


def _level_shape(rep, j: int, k: int):
    """Label of the level-k shape on the path of basis vector j."""
    b = rep.basis[j]
    if rep.group_type == "G2":
        return Shape(b.level1) if k == 1 else b.label
    return sub_shape(b.boxes[:k], b.shape.is_double)


def _g2_constant(label, flavor: str):
    idx = {"short": 0, "long": 1, "zero": 2}[flavor]
    return weight_constants(label, "G2")[idx]


# ---------------------------------------------------------------------------
# relations
# ---------------------------------------------------------------------------

def check_relations(rep: SeminormalRep, presentation: G.Presentation | None = None) -> CheckReport:
    pres = presentation or G.presentation(rep.group_type, rep.n)
    name = "relations"
    if len(pres.generators) != len(rep.matrices):
        return _report(name, _subject(rep), {"error": "generator count mismatch"})
    keyed = lambda w: [rep.key(g) for g in w]
    pairs = pres.braids if _is_hecke(rep) else pres.relations
    for lhs, rhs in pairs:
        bad = _mismatch(" = ".join(["".join(lhs) or "1", "".join(rhs) or "1"]), rep.word_matrix(keyed(lhs)), rep.word_matrix(keyed(rhs)))
        if bad:
            return _report(name, _subject(rep), bad)
    if _is_hecke(rep):
        for g, param in pres.parameters.items():
            x = P if param == "p" else Q
            t = rep.matrices[rep.key(g)]
            want = mx.mat_add(mx.mat_scale(x - x.inverse(), t), _identity(rep))
            bad = _mismatch(f"{rep.key(g)}^2 = ({param} - {param}^-1){rep.key(g)} + 1", mx.mat_mul(t, t), want)
            if bad:
                return _report(name, _subject(rep), bad)
    return _report(name, _subject(rep), None)


# ---------------------------------------------------------------------------
# spectra of Jucys-Murphy, Murphy and central operators
# ---------------------------------------------------------------------------

def _diag_witness(label, mat: mx.Matrix, expected: list) -> dict | None:
    return _mismatch(label, mat, mx.diagonal(expected, mat[0][0] * 0 if mat else Fraction(0)))


def _weyl_operators(rep: SeminormalRep):
    """(label, group algebra element, eigenvalue of basis vector j) triples."""
    t, n = rep.group_type, rep.n
    if t == "G2":
        yield "z_1_0", G.central_sum("G2", 1, "zero"), lambda j: _g2_constant(_level_shape(rep, j, 1), "zero")
        for fl in ("short", "long", "zero"):
            yield f"z_2_{fl}", G.central_sum("G2", 2, fl), lambda j, fl=fl: _g2_constant(rep.label, fl)
        return
    basis = rep.basis
    idx = {"short": 0, "long": 1, "zero": 2}
    for k in range(1, n + 1):
        if t == "A":
            yield f"m_{k}", G.jm_element("A", k, "long", n), lambda j, k=k: basis[j].box(k).content
        elif t == "B":
            yield f"m_{k}_short", G.jm_element("B", k, "short", n), lambda j, k=k: basis[j].box(k).sign
            yield f"m_{k}_long", G.jm_element("B", k, "long", n), lambda j, k=k: 2 * basis[j].box(k).content
        else:
            yield f"m_{k}_one", G.jm_element("D", k, "one", n), lambda j, k=k: basis[j].box(1).sign * basis[j].box(k).sign
            yield f"m_{k}_two", G.jm_element("D", k, "two", n), lambda j, k=k: 2 * basis[j].box(k).content
        for fl in G.CENTRAL_FLAVORS[t]:
            if t == "D" and fl == "zero" and k % 2:
                continue
            if t == "D" and fl == "zero":
                # w_{k,0} = -1 of D_k is the B_k longest element: product of signs
                value = lambda j, k=k: _sign_product(basis[j], k)
            else:
                value = lambda j, k=k, fl=fl: weight_constants(_level_shape(rep, j, k), "B" if t == "D" else t)[idx[fl]]
            yield f"z_{k}_{fl}", G.central_sum(t, k, fl, n), value


def _sign_product(tab, k: int) -> int:
    out = 1
    for b in tab.boxes[:k]:
        out *= b.sign
    return out


def _hecke_eigen(rep: HeckeRep, j: int, k: int) -> RatFunc:
    """Eigenvalue of central_matrix(rep, k) on basis vector j."""
    t = rep.group_type
    shape = _level_shape(rep, j, k)
    if t == "G2":
        if k == 1:
            # T1 itself: eigenvalue c p^c with c = c_{1,0} = +-1
            c = _g2_constant(shape, "zero")
            return RatFunc.monomial(c, 0, c)
        cs, cl, c0 = G2_CONSTANTS[rep.label]
        return RatFunc.monomial(cs, cl, c0)
    if t == "A":
        return RatFunc.q(2 * weight_constants(shape, "A")[1])
    if t == "B":
        cs, cl, c0 = weight_constants(shape, "B")
        return RatFunc.monomial(cs, cl, c0)
    # type D: z_k = T_{w_{k,0}}^2 for odd k, else T_{w_{k,0}} with w_{k,0} = -1
    cl = weight_constants(shape, "D")[1]
    if k % 2:
        return RatFunc.q(2 * cl)
    return RatFunc.monomial(0, cl, _sign_product(rep.basis[j], k))


def _hecke_operators(rep: HeckeRep):
    t, basis = rep.group_type, rep.basis
    if t != "G2":
        for k in range(1, rep.n + 1):
            if t in ("A", "D") and k == 1:
                continue
            if t == "D":
                value = lambda j, k=k: hecke_content(basis[j], 1, "D") * hecke_content(basis[j], k, "D")
            else:
                value = lambda j, k=k: hecke_content(basis[j], k, t)
            yield f"M_{k}", (lambda k=k: murphy_matrix(rep, k)), value
    for k in _levels(rep):
        if t == "A" and k == 1:
            continue
        yield f"z_{k}", (lambda k=k: central_matrix(rep, k)), (lambda j, k=k: _hecke_eigen(rep, j, k))


def check_jm_spectra(rep: SeminormalRep) -> CheckReport:
    name = "jm_spectra"
    if _is_hecke(rep):
        ops = [(label, build(), value) for label, build, value in _hecke_operators(rep)]
    else:
        ops = [(label, apply_group_algebra(rep, x), value) for label, x, value in _weyl_operators(rep)]
    for label, mat, value in ops:
        expected = [value(j) for j in range(rep.dim)]
        if not _is_hecke(rep):
            expected = [Fraction(v) for v in expected]
        bad = _diag_witness(label, mat, expected)
        if bad:
            return _report(name, _subject(rep), bad)
    if _is_hecke(rep):
        murphys = [(label, mat) for label, mat, _ in ops if label.startswith("M_")]
        for a, (la, ma) in enumerate(murphys):
            for lb, mb in murphys[a + 1:]:
                if not mx.commute(ma, mb):
                    return _report(name, _subject(rep), {"at": f"{la} {lb}", "error": "Murphy elements do not commute"})
    return _report(name, _subject(rep), None)


# ---------------------------------------------------------------------------
# centrality
# ---------------------------------------------------------------------------

def _square_eigen(rep: HeckeRep, j: int, k: int) -> RatFunc:
    """Eigenvalue p^{2 c_s} q^{2 c_l} of T_{w_{k,0}}^2."""
    shape = _level_shape(rep, j, k)
    t = rep.group_type
    if t == "G2":
        if k == 1:
            return RatFunc.p(2 * _g2_constant(shape, "zero"))
        cs, cl, _ = G2_CONSTANTS[rep.label]
        return RatFunc.monomial(2 * cs, 2 * cl)
    cs, cl, _ = weight_constants(shape, t)
    return RatFunc.monomial(2 * (cs or 0), 2 * cl)


def check_centrality(rep: SeminormalRep) -> CheckReport:
    """Central elements commute with their level's generators; T_w0^2 is the predicted scalar."""
    name = "centrality"
    t, n = rep.group_type, rep.n
    for k in _levels(rep):
        gens = [rep.key(g) for g in G.level_generators(t, n, k)]
        if not gens:
            continue
        if _is_hecke(rep):
            zs = [(f"z_{k}", central_matrix(rep, k))]
        else:
            flavors = ("zero",) if t == "G2" and k == 1 else G.CENTRAL_FLAVORS[t]
            zs = [
                (f"z_{k}_{fl}", apply_group_algebra(rep, G.central_sum(t, k, fl, n)))
                for fl in flavors
                if not (t == "D" and fl == "zero" and k % 2)
            ]
        for label, z in zs:
            for g in gens:
                m = rep.matrices[g]
                bad = _mismatch(f"[{label}, {g}]", mx.mat_mul(z, m), mx.mat_mul(m, z))
                if bad:
                    return _report(name, _subject(rep), bad)
        if _is_hecke(rep):
            w = longest_matrix(rep, k)
            sq = mx.mat_mul(w, w)
            bad = _diag_witness(f"T_w{k}0^2", sq, [_square_eigen(rep, j, k) for j in range(rep.dim)])
            if bad:
                return _report(name, _subject(rep), bad)
    return _report(name, _subject(rep), None)


# ---------------------------------------------------------------------------
# completeness and orthogonality
# ---------------------------------------------------------------------------

def _check_cap(group_type: str, n, caps=None):
    caps = GROUP_CAPS if caps is None else caps
    if group_type != "G2" and n > caps[group_type]:
        raise G.CapExceeded(f"rank {n} exceeds the configured cap {caps[group_type]} for type {group_type}")


def all_reps(group_type: str, n=None, hecke: bool = False) -> list:
    build = build_hecke if hecke else build_rep
    return [build(group_type, lab) for lab in enum_shapes(group_type, n)]


def check_completeness(group_type: str, n=None, caps=None) -> CheckReport:
    _check_cap(group_type, n, caps)
    subject = {"type": group_type, "n": n if n is not None else 2}
    reps = all_reps(group_type, n)
    order = G.group_order(group_type, n)
    total = sum(r.dim ** 2 for r in reps)
    if total != order:
        return _report("completeness", subject, {"sum_of_squares": total, "group_order": order})
    elements = G.enumerate_group(group_type, n)
    inverse = {g: G.invert(g) for g in elements}
    chars = [{g: character(r, g) for g in elements} for r in reps]
    for a, ca in enumerate(chars):
        for b, cb in enumerate(chars):
            ip = sum(ca[g] * cb[inverse[g]] for g in elements) / order
            if ip != (1 if a == b else 0):
                return _report("completeness", subject, {
                    "pair": [label_json(reps[a].label), label_json(reps[b].label)],
                    "inner_product": str(ip),
                })
    return _report("completeness", subject, None)


# ---------------------------------------------------------------------------
# branching
# ---------------------------------------------------------------------------

def _branch_blocks(rep) -> dict:
    blocks: dict = {}
    last = 1 if rep.group_type == "G2" else rep.n - 1
    for j in range(rep.dim):
        blocks.setdefault(_level_shape(rep, j, last), []).append(j)
    return blocks


def _smaller_rep(rep, shape):
    t = rep.group_type
    if t == "G2":
        # the level-one subgroup <s1> is S_2; its generator is called s2 in type A
        small = build_rep_A(shape)
        return {"s1": small.matrices["s2"]}
    if _is_hecke(rep):
        return build_hecke(t, shape).matrices
    return build_rep(t, shape).matrices


def check_branching(rep: SeminormalRep) -> CheckReport:
    name = "branching"
    t = rep.group_type
    if t == "D" or (t == "G2" and _is_hecke(rep)):
        raise ValueError(f"branching check not available for {t} {'Hecke' if _is_hecke(rep) else 'Weyl'} representations")
    if t != "G2" and (rep.n or 0) < 2:
        raise ValueError("branching needs n >= 2")
    blocks = _branch_blocks(rep)
    owner = {j: shape for shape, idx in blocks.items() for j in idx}
    gens = list(rep.matrices)[:-1]
    for shape, idx in blocks.items():
        small = _smaller_rep(rep, shape)
        for g in gens:
            m = rep.matrices[g]
            for c in idx:
                for r in range(rep.dim):
                    if owner[r] != shape and m[r][c] != 0:
                        return _report(name, _subject(rep), {"at": g, "entry": [r, c], "error": "not block diagonal"})
            bad = _mismatch(f"{g} on block {shape}", mx.submatrix(m, idx), small[g])
            if bad:
                return _report(name, _subject(rep), bad)
    return _report(name, _subject(rep), None)


# ---------------------------------------------------------------------------
# weight separation
# ---------------------------------------------------------------------------

def check_weight_separation(group_type: str, n=None, caps=None) -> CheckReport:
    caps = TABLEAU_CAPS if caps is None else caps
    _check_cap(group_type, n, caps)
    subject = {"type": group_type, "n": n if n is not None else 2}
    if group_type == "G2":
        from .tableaux import g2_paths

        seen: dict = {}
        for lab in G2_LABELS:
            for path in g2_paths(lab):
                w = path.weight()
                if w in seen:
                    return _report("weight_separation", subject, {"paths": [str(seen[w]), str(path)]})
                seen[w] = path
        return _report("weight_separation", subject, None)
    shapes = [Shape(p) for p in partitions(n)] if group_type == "A" else double_partitions(n)
    fibers: dict = {}
    for s in shapes:
        for tab in enum_standard_tableaux(s):
            fibers.setdefault(tableau_weight(tab, group_type).key(group_type), []).append(tab)
    for key, tabs in fibers.items():
        if group_type == "D":
            ok = len(tabs) == 2 and sigma(tabs[0]) == tabs[1]
        else:
            ok = len(tabs) == 1
        if not ok:
            return _report("weight_separation", subject, {"weight": str(key), "tableaux": [t.to_json() for t in tabs]})
    return _report("weight_separation", subject, None)


# ---------------------------------------------------------------------------
# projectors
# ---------------------------------------------------------------------------

def _level_labels(group_type: str, k: int) -> list:
    if group_type == "A":
        return [Shape(p) for p in partitions(k)]
    if group_type == "B":
        return double_partitions(k)
    return [Shape((2,)), Shape((1, 1))] if k == 1 else list(G2_LABELS)


def _flavors(group_type: str, k: int) -> tuple[str, ...]:
    if group_type == "G2" and k == 1:
        return ("zero",)
    return G.CENTRAL_FLAVORS[group_type]


def _constant(group_type: str, label, flavor: str):
    if group_type == "G2":
        return _g2_constant(label, flavor)
    return weight_constants(label, group_type)[{"short": 0, "long": 1, "zero": 2}[flavor]]


def check_projectors(rep: SeminormalRep) -> CheckReport:
    """Products of the interpolation polynomials in z_{k,j} give each E_LL."""
    name = "projectors"
    t, n = rep.group_type, rep.n
    if t not in ("A", "B", "G2") or _is_hecke(rep):
        raise ValueError("projector check needs a Weyl representation of type A, B or G2")
    ident = _identity(rep)
    factors = []  # (z matrix, level, flavor, values of c over the level's labels)
    for k in _levels(rep):
        for fl in _flavors(t, k):
            z = apply_group_algebra(rep, G.central_sum(t, k, fl, n))
            expected = [Fraction(_constant(t, _level_shape(rep, j, k), fl)) for j in range(rep.dim)]
            bad = _diag_witness(f"z_{k}_{fl}", z, expected)
            if bad:
                return _report(name, _subject(rep), bad)
            values = sorted({Fraction(_constant(t, lab, fl)) for lab in _level_labels(t, k)})
            factors.append((z, k, fl, values))
    total = mx.zeros(rep.dim)
    projectors = []
    for j in range(rep.dim):
        proj = ident
        for z, k, fl, values in factors:
            mine = Fraction(_constant(t, _level_shape(rep, j, k), fl))
            for c in values:
                if c == mine:
                    continue
                step = mx.mat_scale(1 / (mine - c), mx.mat_sub(z, mx.mat_scale(c, ident)))
                proj = mx.mat_mul(proj, step)
        want = mx.from_columns(rep.dim, [{j: Fraction(1)} if c == j else {} for c in range(rep.dim)])
        bad = _mismatch(f"e_LL for basis vector {j}", proj, want)
        if bad:
            return _report(name, _subject(rep), bad)
        projectors.append(proj)
        total = mx.mat_add(total, proj)
    bad = _mismatch("sum of e_LL", total, ident)
    return _report(name, _subject(rep), bad)


# ---------------------------------------------------------------------------
# identities used to derive the diagonal coefficients
# ---------------------------------------------------------------------------

def step2_formal(group_type: str, n: int, k: int) -> tuple[G.GroupAlgebraElement, G.GroupAlgebraElement]:
    """Both sides of the level-k identity for s_k against the JM elements."""
    one = G.GroupAlgebraElement.scalar(1, group_type, n)
    s = G.GroupAlgebraElement.of(G.generators(group_type, n)[f"s{k}"])
    if group_type == "A":
        lhs = s * G.jm_element("A", k - 1, "long", n)
        rhs = G.jm_element("A", k, "long", n) * s - one
        return lhs, rhs
    m_l = lambda j: G.jm_element("B", j, "long", n)
    m_s = lambda j: G.jm_element("B", j, "short", n)
    lhs = s * m_l(k - 1)
    rhs = m_l(k) * s - one - m_s(k) * m_s(k - 1)
    return lhs, rhs


def g2_formal() -> tuple[G.GroupAlgebraElement, G.GroupAlgebraElement]:
    """z_{2,l} = s2 + z_{1,l} s2 z_{1,l} + z_{2,0} z_{1,l}."""
    s2 = G.GroupAlgebraElement.of(G.DIHEDRAL_GENS["s2"])
    z1 = G.central_sum("G2", 1, "long")
    rhs = s2 + z1 * s2 * z1 + G.central_sum("G2", 2, "zero") * z1
    return G.central_sum("G2", 2, "long"), rhs


def _hecke_inverse(rep: HeckeRep, g: str) -> mx.Matrix:
    param = G.presentation(rep.group_type, rep.n).parameters[weyl_name(g)]
    x = P if param == "p" else Q
    return mx.mat_sub(rep.matrices[g], mx.mat_scale(x - x.inverse(), _identity(rep)))


def _step2_rep(rep: SeminormalRep) -> dict | None:
    t, n = rep.group_type, rep.n
    if not _is_hecke(rep):
        if t == "G2":
            lhs, rhs = g2_formal()
            bad = _mismatch("z_2_long expansion", apply_group_algebra(rep, lhs), apply_group_algebra(rep, rhs))
            if bad:
                return bad
            s2 = rep.matrices["s2"]
            for j in range(rep.dim):
                c10 = _g2_constant(_level_shape(rep, j, 1), "zero")
                _, cl, c0 = G2_CONSTANTS[rep.label]
                want = Fraction(cl - c0 * c10, 1 + c10 * c10)
                if s2[j][j] != want:
                    return {"at": "diagonal of s2", "entry": [j, j], "expected": str(want), "actual": str(s2[j][j])}
            return None
        for k in range(2, n + 1):
            lhs, rhs = step2_formal(t, n, k)
            bad = _mismatch(f"level {k}", apply_group_algebra(rep, lhs), apply_group_algebra(rep, rhs))
            if bad:
                return bad
        return None
    if t == "G2":
        t1, t2 = rep.matrices["T1"], rep.matrices["T2"]
        inv1, inv2 = _hecke_inverse(rep, "T1"), _hecke_inverse(rep, "T2")
        z2 = central_matrix(rep, 2)
        lhs = mx.mat_prod([inv1, inv2, inv1, z2])
        bad = _mismatch("T1^-1 T2^-1 T1^-1 z2 = T2 T1 T2", lhs, mx.mat_prod([t2, t1, t2]))
        if bad or rep.dim != 2:
            return bad
        c0 = G2_CONSTANTS[rep.label][2]
        got = P * t2[0][0] - P.inverse() * t2[1][1]
        if got != -c0:
            return {"at": "p (T2)_LL - p^-1 (T2)_MM", "expected": str(-c0), "actual": str(got)}
        if mx.trace(t2) != Q_GAP:
            return {"at": "trace of T2", "expected": str(Q_GAP), "actual": str(mx.trace(t2))}
        return None
    for k in range(2, n + 1):
        tk = rep.matrices[f"T{k}"]
        mk, mprev = murphy_matrix(rep, k), murphy_matrix(rep, k - 1)
        bad = _mismatch(f"M_{k} = T_{k} M_{k - 1} T_{k}", mk, mx.mat_prod([tk, mprev, tk]))
        if bad:
            return bad
        bad = _mismatch(f"M_{k} T_{k}^-1 = T_{k} M_{k - 1}", mx.mat_mul(mk, _hecke_inverse(rep, f"T{k}")), mx.mat_mul(tk, mprev))
        if bad:
            return bad
    return None


def check_step2_identities(group_type: str, n=None, caps=None) -> CheckReport:
    _check_cap(group_type, n, caps)
    name = "step2_identities"
    subject = {"type": group_type, "n": n if n is not None else 2}
    if group_type == "D":
        raise ValueError("no derivation identities are checked for type D")
    if group_type == "G2":
        lhs, rhs = g2_formal()
        if lhs != rhs:
            return _report(name, subject, {"at": "formal z_2_long expansion"})
    else:
        for k in range(2, n + 1):
            lhs, rhs = step2_formal(group_type, n, k)
            if lhs != rhs:
                return _report(name, subject, {"at": f"formal identity at level {k}"})
    for hecke in (False, True):
        for rep in all_reps(group_type, n, hecke):
            bad = _step2_rep(rep)
            if bad:
                bad["subject"] = _subject(rep)
                return _report(name, subject, bad)
    return _report(name, subject, None)


# ---------------------------------------------------------------------------
# specialization
# ---------------------------------------------------------------------------

def check_specialization(rep: HeckeRep) -> CheckReport:
    """Entries evaluate at p = q = 1 to the Weyl matrices; the square identities hold."""
    name = "specialization"
    weyl = build_rep(rep.group_type, rep.label)
    spec = specialize_rep(rep, 1, 1)
    for g, m in weyl.matrices.items():
        bad = _mismatch(g, spec.matrices[g], m)
        if bad:
            return _report(name, _subject(rep), bad)
    for k in _levels(rep):
        if rep.group_type in ("A", "D") and k == 1:
            continue
        for res in jucys_specialization_check(rep, weyl, k):
            if not res["ok"]:
                return _report(name, _subject(rep), _mismatch(f"level {k} {res['identity']}", res["got"], res["want"]))
    return _report(name, _subject(rep), None)


# ---------------------------------------------------------------------------
# suite
# ---------------------------------------------------------------------------

ALL_CHECKS = (
    "relations",
    "jm_spectra",
    "centrality",
    "completeness",
    "branching",
    "weight_separation",
    "projectors",
    "step2_identities",
    "specialization",
)


def run_suite(group_type: str, n=None, checks: Iterable[str] | None = None, caps=None) -> list[CheckReport]:
    """Run every applicable check over every representation, in a fixed order."""
    checks = tuple(ALL_CHECKS if checks is None else checks)
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    if group_type not in ("A", "B", "D", "G2"):
        raise ValueError(f"unknown group type {group_type!r}")
    if group_type != "G2" and (n is None or n < (2 if group_type == "D" else 1)):
        raise ValueError(f"invalid rank {n!r} for type {group_type}")
    _check_cap(group_type, n, caps)
    weyl = all_reps(group_type, n)
    hecke = all_reps(group_type, n, hecke=True)
    out: list[CheckReport] = []
    for name in ALL_CHECKS:
        if name not in checks:
            continue
        if name in ("relations", "jm_spectra", "centrality"):
            fn = {"relations": check_relations, "jm_spectra": check_jm_spectra, "centrality": check_centrality}[name]
            out += [fn(r) for r in weyl + hecke]
        elif name == "completeness":
            out.append(check_completeness(group_type, n, caps))
        elif name == "branching":
            if group_type == "D" or (group_type != "G2" and n < 2):
                continue
            out += [check_branching(r) for r in weyl]
            if group_type != "G2":
                out += [check_branching(r) for r in hecke]
        elif name == "weight_separation":
            out.append(check_weight_separation(group_type, n))
        elif name == "projectors":
            if group_type != "D":
                out += [check_projectors(r) for r in weyl]
        elif name == "step2_identities":
            if group_type == "G2" or (group_type in ("A", "B") and n >= 2):
                out.append(check_step2_identities(group_type, n, caps))
        elif name == "specialization":
            out += [check_specialization(r) for r in hecke]
    return out
