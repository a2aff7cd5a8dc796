"""Exact arithmetic over Q and over the rational function field Q(p, q).

Rationals are :class:`fractions.Fraction`.  Rational functions are kept in a
canonical form so that equality is structural and evaluation at ``p = q = 1``
is well defined whenever the function has no genuine pole there:

* numerator and denominator are ordinary polynomials (no negative exponents),
* they are coprime in ``Q[p, q]`` (monomial factors included),
* the denominator has integer coefficients with content 1 and a positive
  leading coefficient in graded-lex order with ``p`` before ``q``.

The gcd works on integer polynomials viewed as univariate in ``q`` over
``Z[p]`` with a primitive pseudo-remainder sequence.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "LaurentPoly",
    "RatFunc",
    "ParseError",
    "PoleError",
    "poly_gcd",
    "rf_normalize",
    "rf_arith",
    "rf_eval",
    "rf_subs",
    "rf_parse",
    "rf_format",
]


class PoleError(ZeroDivisionError):
    """Evaluation hit a zero of the denominator."""


class ParseError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def _grlex_key(exp: tuple[int, int]) -> tuple[int, int]:
    return (exp[0] + exp[1], exp[0])


class LaurentPoly:
    """A Laurent polynomial in ``p`` and ``q`` with rational coefficients.

    ``terms`` maps ``(p_exponent, q_exponent)`` to a nonzero Fraction.
    Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict[tuple[int, int], Scalar] | None = None):
        clean = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    clean[(int(exp[0]), int(exp[1]))] = Fraction(c)
        self.terms: dict[tuple[int, int], Fraction] = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], Fraction]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "LaurentPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, c: Scalar = 1) -> "LaurentPoly":
        return cls({(i, j): c})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "LaurentPoly":
        if not c:
            return LaurentPoly._raw({})
        c = Fraction(c)
        return LaurentPoly._raw({e: v * c for e, v in self.terms.items()})

    def shift(self, di: int, dj: int) -> "LaurentPoly":
        """Multiply by the monomial ``p**di * q**dj``."""
        if di == 0 and dj == 0:
            return self
        return LaurentPoly._raw({(i + di, j + dj): c for (i, j), c in self.terms.items()})

    def min_exponents(self) -> tuple[int, int]:
        return (min(i for i, _ in self.terms), min(j for _, j in self.terms))

    def leading(self) -> tuple[tuple[int, int], Fraction]:
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def evaluate(self, p0: Scalar, q0: Scalar) -> Fraction:
        p0, q0 = Fraction(p0), Fraction(q0)
        total = Fraction(0)
        for (i, j), c in self.terms.items():
            total += c * p0**i * q0**j
        return total

    def subs(self, p: Scalar | None = None, q: Scalar | None = None) -> "LaurentPoly":
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.terms.items():
            if p is not None:
                c = c * Fraction(p) ** i
                i = 0
            if q is not None:
                c = c * Fraction(q) ** j
                j = 0
            out[(i, j)] = out.get((i, j), 0) + c
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    def __repr__(self):
        return f"LaurentPoly({_format_poly(self)!r})"

    def __str__(self):
        return _format_poly(self)


# ---------------------------------------------------------------------------
# Dense integer polynomial kernels.
#
# Univariate: list of ints, index = exponent, no trailing zeros; [] is zero.
# Bivariate: list (index = q exponent) of univariate lists in p.
# ---------------------------------------------------------------------------

def _u_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _u_sub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _u_trim(out)


def _u_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) == 1:
        c = a[0]
        return [c * x for x in b]
    if len(b) == 1:
        c = b[0]
        return [c * x for x in a]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _u_content(a: list[int]) -> int:
    return math.gcd(*a) if a else 0


def _u_divexact(a: list[int], b: list[int]) -> list[int]:
    if not a:
        return []
    if len(b) == 1:
        d = b[0]
        out = []
        for x in a:
            qx, r = divmod(x, d)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out.append(qx)
        return out
    r = list(a)
    lb = b[-1]
    nq = len(a) - len(b) + 1
    if nq <= 0:
        raise ArithmeticError("inexact polynomial division")
    quo = [0] * nq
    for d in range(nq - 1, -1, -1):
        top = r[d + len(b) - 1]
        if top:
            c, rem = divmod(top, lb)
            if rem:
                raise ArithmeticError("inexact polynomial division")
            quo[d] = c
            for k, y in enumerate(b):
                r[d + k] -= c * y
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _u_trim(quo)


def _u_primitive(a: list[int]) -> list[int]:
    c = _u_content(a)
    if a and a[-1] < 0:
        c = -c
    return [x // c for x in a] if c not in (0, 1) else list(a)


def _u_prem(a: list[int], b: list[int]) -> list[int]:
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    while r and len(r) - 1 >= db:
        d = len(r) - 1 - db
        lr = r[-1]
        r = [lb * x for x in r]
        for k, y in enumerate(b):
            r[d + k] -= lr * y
        _u_trim(r)
    return r


def _u_gcd(a: list[int], b: list[int]) -> list[int]:
    """Gcd in Z[p] with positive leading coefficient (integer content included)."""
    if not a:
        return [-x for x in b] if b and b[-1] < 0 else list(b)
    if not b:
        return _u_gcd(b, a)
    c = math.gcd(_u_content(a), _u_content(b))
    if len(a) == 1 or len(b) == 1:
        return [c]
    a, b = _u_primitive(a), _u_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _u_prem(a, b)
        a, b = b, (_u_primitive(r) if r else [])
    if len(a) == 1:
        return [c]
    return [c * x for x in _u_primitive(a)]


def _b_trim(a: list[list[int]]) -> list[list[int]]:
    while a and not a[-1]:
        a.pop()
    return a


def _b_content(a: list[list[int]]) -> list[int]:
    g: list[int] = []
    for coeff in a:
        if coeff:
            g = _u_gcd(g, coeff)
            if g == [1]:
                break
    return g


def _b_divexact_u(a: list[list[int]], c: list[int]) -> list[list[int]]:
    if c == [1]:
        return a
    return [_u_divexact(x, c) if x else [] for x in a]


def _b_prem(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    r = [list(x) for x in a]
    lb = b[-1]
    db = len(b) - 1
    while r and len(r) - 1 >= db:
        d = len(r) - 1 - db
        lr = r[-1]
        r = [_u_mul(lb, x) for x in r]
        for k, y in enumerate(b):
            r[d + k] = _u_sub(r[d + k], _u_mul(lr, y))
        _b_trim(r)
    return r


def _b_primitive(a: list[list[int]]) -> list[list[int]]:
    return _b_divexact_u(a, _b_content(a))


_PRIME = 2_147_483_647


def _m_eval(a: list[int], x: int) -> int:
    v = 0
    for c in reversed(a):
        v = (v * x + c) % _PRIME
    return v


def _m_gcd_degree(a: list[int], b: list[int]) -> int:
    """Degree of the gcd of two polynomials over GF(_PRIME)."""
    while b:
        inv = pow(b[-1], -1, _PRIME)
        r = list(a)
        while len(r) >= len(b):
            f = r[-1] * inv % _PRIME
            off = len(r) - len(b)
            for k, y in enumerate(b):
                r[off + k] = (r[off + k] - f * y) % _PRIME
            while r and not r[-1]:
                r.pop()
        a, b = b, r
    return len(a) - 1


def _coprime_in_q(a: list[list[int]], b: list[list[int]]) -> bool:
    """Cheap certificate that gcd(a, b) has degree 0 in q.

    Specializing p to a point where both leading coefficients survive can only
    raise the gcd degree, so a trivial gcd mod a prime proves it.
    """
    for x in (3, 7, 12345, 987654):
        if _m_eval(a[-1], x) and _m_eval(b[-1], x):
            ea = [_m_eval(c, x) for c in a]
            eb = [_m_eval(c, x) for c in b]
            return _m_gcd_degree(ea, eb) == 0
    return False


def _b_gcd(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if not a:
        return b
    if not b:
        return a
    c = _u_gcd(_b_content(a), _b_content(b))
    if len(a) == 1 or len(b) == 1 or _coprime_in_q(a, b):
        return [c]
    a, b = _b_primitive(a), _b_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _b_prem(a, b)
        a, b = b, (_b_primitive(r) if r else [])
    if len(a) == 1:
        return [c]
    return [_u_mul(c, x) for x in a]


def _b_divexact(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    if len(b) == 1:
        return _b_divexact_u(a, b[0])
    r = [list(x) for x in a]
    lb = b[-1]
    nq = len(a) - len(b) + 1
    if nq <= 0:
        raise ArithmeticError("inexact polynomial division")
    quo: list[list[int]] = [[] for _ in range(nq)]
    for d in range(nq - 1, -1, -1):
        top = r[d + len(b) - 1]
        if top:
            c = _u_divexact(top, lb)
            quo[d] = c
            for k, y in enumerate(b):
                r[d + k] = _u_sub(r[d + k], _u_mul(c, y))
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return _b_trim(quo)


def _to_int_dense(poly: LaurentPoly) -> tuple[Fraction, list[list[int]]]:
    """Write ``poly = scale * dense`` with ``dense`` an integer polynomial."""
    den = 1
    for c in poly.terms.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    maxj = max(j for _, j in poly.terms)
    dense: list[list[int]] = [[] for _ in range(maxj + 1)]
    for (i, j), c in poly.terms.items():
        row = dense[j]
        if len(row) <= i:
            row.extend([0] * (i + 1 - len(row)))
        row[i] = int(c * den)
    return Fraction(1, den), dense


def _from_int_dense(dense: list[list[int]], scale: Fraction = Fraction(1)) -> LaurentPoly:
    terms = {}
    for j, row in enumerate(dense):
        for i, c in enumerate(row):
            if c:
                terms[(i, j)] = scale * c
    return LaurentPoly._raw(terms)


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Gcd of two polynomials (nonnegative exponents only).

    The result has integer coefficients, content 1 and a positive leading
    coefficient; ``gcd(0, 0) == 0``.
    """
    for f in (a, b):
        if f.terms and min(f.min_exponents()) < 0:
            raise ValueError("poly_gcd needs nonnegative exponents")
    if a.is_zero() and b.is_zero():
        return LaurentPoly()
    if a.is_zero():
        return _normalize_sign(_primitive_poly(b))
    if b.is_zero():
        return _normalize_sign(_primitive_poly(a))
    _, da = _to_int_dense(a)
    _, db = _to_int_dense(b)
    g = _from_int_dense(_b_gcd(da, db))
    return _normalize_sign(_primitive_poly(g))


def _primitive_poly(f: LaurentPoly) -> LaurentPoly:
    _, dense = _to_int_dense(f)
    cont = 0
    for row in dense:
        for c in row:
            cont = math.gcd(cont, c)
    return _from_int_dense(dense, Fraction(1, cont))


def _normalize_sign(f: LaurentPoly) -> LaurentPoly:
    return -f if f.leading()[1] < 0 else f


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------

_ONE_POLY = LaurentPoly.const(1)


class RatFunc:
    """Canonical quotient ``num / den`` of polynomials in ``p`` and ``q``.

    Build values with :func:`rf_normalize`, :func:`rf_parse` or the
    constructors :meth:`const`, :meth:`p`, :meth:`q`; arithmetic operators
    always return canonical values.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly | Scalar, den: LaurentPoly | Scalar = 1):
        n, d = _normalize(_as_poly(num), _as_poly(den))
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "RatFunc":
        return cls._raw(LaurentPoly.const(c), _ONE_POLY)

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, c: Scalar = 1) -> "RatFunc":
        return cls(LaurentPoly.monomial(i, j, c))

    @classmethod
    def p(cls, power: int = 1) -> "RatFunc":
        return cls.monomial(power, 0)

    @classmethod
    def q(cls, power: int = 1) -> "RatFunc":
        return cls.monomial(0, power)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.terms.get((0, 0), Fraction(0))

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.den == _ONE_POLY and self.num == LaurentPoly.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _rf_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _rf_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _rf_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return _rf_mul(self, other.inverse())

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RatFunc.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.den, self.num)

    def evaluate(self, p0: Scalar, q0: Scalar) -> Fraction:
        return rf_eval(self, p0, q0)

    def subs(self, p: Scalar | None = None, q: Scalar | None = None) -> "RatFunc":
        return rf_subs(self, p=p, q=q)

    def __repr__(self):
        return f"RatFunc({rf_format(self)!r})"

    def __str__(self):
        return rf_format(self)


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot convert {type(x).__name__} to LaurentPoly")


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc.const(x)
    if isinstance(x, LaurentPoly):
        return RatFunc(x)
    return NotImplemented


def _normalize(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return LaurentPoly._raw({}), _ONE_POLY
    (a1, b1), (a2, b2) = num.min_exponents(), den.min_exponents()
    num = num.shift(-a1, -b1)
    den = den.shift(-a2, -b2)
    mp, mq = a1 - a2, b1 - b2
    if len(num.terms) > 1 and len(den.terms) > 1:
        sn, dn = _to_int_dense(num)
        sd, dd = _to_int_dense(den)
        g = _b_gcd(dn, dd)
        if len(g) > 1 or len(g[0]) > 1:
            num = _from_int_dense(_b_divexact(dn, g), sn)
            den = _from_int_dense(_b_divexact(dd, g), sd)
    num = num.shift(max(mp, 0), max(mq, 0))
    den = den.shift(max(-mp, 0), max(-mq, 0))
    # make den an integer primitive polynomial with positive leading coefficient
    lcm_den = 1
    cont = Fraction(0)
    for c in den.terms.values():
        lcm_den = lcm_den * c.denominator // math.gcd(lcm_den, c.denominator)
    ints = [int(c * lcm_den) for c in den.terms.values()]
    g = math.gcd(*ints)
    scale = Fraction(lcm_den, g)
    if den.leading()[1] < 0:
        scale = -scale
    if scale != 1:
        den = den.scale(scale)
        num = num.scale(scale)
    if den == _ONE_POLY:
        den = _ONE_POLY
    return num, den


@lru_cache(maxsize=1 << 17)
def _rf_add(a: RatFunc, b: RatFunc) -> RatFunc:
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.den == b.den:
        return RatFunc(a.num + b.num, a.den)
    return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den)


@lru_cache(maxsize=1 << 17)
def _rf_mul(a: RatFunc, b: RatFunc) -> RatFunc:
    if a.is_zero() or b.is_zero():
        return RatFunc._raw(LaurentPoly._raw({}), _ONE_POLY)
    if a.den is _ONE_POLY and b.den is _ONE_POLY and (a.num.is_monomial() or b.num.is_monomial()):
        return RatFunc._raw(a.num * b.num, _ONE_POLY)
    return RatFunc(a.num * b.num, a.den * b.den)


def rf_normalize(num: LaurentPoly, den: LaurentPoly) -> RatFunc:
    """Canonical representative of ``num / den``; raises on a zero denominator."""
    return RatFunc(num, den)


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def rf_arith(op: str, a: RatFunc, b: RatFunc) -> RatFunc:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(_coerce(a), _coerce(b))


def rf_eval(f: RatFunc, p0: Scalar, q0: Scalar) -> Fraction:
    """Evaluate a canonical rational function at a point of Q^2."""
    if not isinstance(f, RatFunc):
        return Fraction(f)
    d = f.den.evaluate(p0, q0)
    if d == 0:
        raise PoleError(f"pole of {rf_format(f)} at p={p0}, q={q0}")
    return f.num.evaluate(p0, q0) / d


def rf_subs(f: RatFunc, p: Scalar | None = None, q: Scalar | None = None) -> RatFunc:
    """Substitute a rational value for one or both variables."""
    d = f.den.subs(p=p, q=q)
    if d.is_zero():
        raise PoleError(f"pole of {rf_format(f)} at p={p}, q={q}")
    return RatFunc(f.num.subs(p=p, q=q), d)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

def _format_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("p" if i == 1 else f"p^{i}")
    if j:
        parts.append("q" if j == 1 else f"q^{j}")
    return "*".join(parts)


def _format_poly(f: LaurentPoly) -> str:
    if f.is_zero():
        return "0"
    out = []
    for k, exp in enumerate(sorted(f.terms, key=_grlex_key, reverse=True)):
        c = f.terms[exp]
        mono = _format_monomial(*exp)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def rf_format(f: RatFunc) -> str:
    if f.den == _ONE_POLY:
        return _format_poly(f.num)
    return f"({_format_poly(f.num)})/({_format_poly(f.den)})"


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def integer(self, signed: bool = False) -> int:
        self._skip()
        start = self.pos
        if signed and self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        m = re.match(r"\d+", self.text[self.pos:])
        if not m:
            raise ParseError("expected integer", start)
        self.pos += m.end()
        return int(self.text[start:self.pos])

    def exponent(self) -> int:
        if self.peek() == "^":
            self.pos += 1
            return self.integer(signed=True)
        return 1

    def monomial(self) -> tuple[int, int]:
        i = j = 0
        ch = self.peek()
        if ch == "p":
            self.pos += 1
            i = self.exponent()
            save = self.pos
            if self.peek() == "*":
                self.pos += 1
                if self.peek() != "q":
                    self.pos = save
                    return i, j
            if self.peek() == "q":
                self.pos += 1
                j = self.exponent()
        elif ch == "q":
            self.pos += 1
            j = self.exponent()
        else:
            raise ParseError("expected monomial", self.pos)
        return i, j

    def term(self) -> LaurentPoly:
        ch = self.peek()
        if ch.isdigit():
            num = self.integer()
            den = 1
            if self.peek() == "/" and self._next_is_digit():
                self.pos += 1
                at = self.pos
                den = self.integer()
                if den == 0:
                    raise ParseError("zero denominator", at)
            coeff = Fraction(num, den)
            if self.peek() == "*":
                self.pos += 1
                return LaurentPoly.monomial(*self.monomial(), coeff)
            return LaurentPoly.const(coeff)
        return LaurentPoly.monomial(*self.monomial())

    def _next_is_digit(self) -> bool:
        k = self.pos + 1
        while k < len(self.text) and self.text[k].isspace():
            k += 1
        return k < len(self.text) and self.text[k].isdigit()

    def poly(self) -> LaurentPoly:
        neg = False
        if self.peek() == "-":
            self.pos += 1
            neg = True
        acc = self.term()
        if neg:
            acc = -acc
        while self.peek() in ("+", "-"):
            sign = self.peek()
            self.pos += 1
            t = self.term()
            acc = acc + t if sign == "+" else acc - t
        return acc


def rf_parse(text: str) -> RatFunc:
    """Parse the canonical text grammar, e.g. ``"q - q^-1"`` or ``"(q^2 - 1)/(q)"``."""
    parser = _Parser(text)
    if parser.peek() == "(":
        parser.pos += 1
        num = parser.poly()
        parser.expect(")")
        parser.expect("/")
        parser.expect("(")
        at = parser.pos
        den = parser.poly()
        parser.expect(")")
        if den.is_zero():
            raise ParseError("zero denominator", at)
    else:
        num = parser.poly()
        den = LaurentPoly.const(1)
    if parser.peek():
        raise ParseError(f"unexpected {parser.peek()!r}", parser.pos)
    return RatFunc(num, den)


def rf_sum(values: Iterable[RatFunc]) -> RatFunc:
    acc = RatFunc.const(0)
    for v in values:
        acc = acc + v
    return acc
