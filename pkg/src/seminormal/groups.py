"""Concrete Weyl groups of types A, B, D and G2 and their group algebras.

Composition convention: ``compose(a, b)(x) == a(b(x))``.  Types A, B and D are
realized as signed permutations of ``1..n``; G2 is the dihedral group of order
12 generated by ``s1`` and ``s2``.

Generator names follow the indexing used throughout the package: type A has
``s2 .. sn`` with ``s_i = (i-1, i)``, type B has ``s1 = (1, -1)`` followed by
``s2 .. sn``, type D has ``st1 .. stn`` with ``st1 = (1, -2)(2, -1)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Union

DEFAULT_CAP = 10**6


class CapExceeded(ValueError):
    """A full enumeration would exceed the configured size cap."""


class SignedPermutation:
    """An element of WB_n stored as the images of ``1..n``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        if sorted(abs(x) for x in images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a signed permutation: {images}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, n: int, *cycles: tuple[int, ...]) -> "SignedPermutation":
        """Build from disjoint cycles on ``{-n..-1, 1..n}``, e.g. ``(1, -2), (2, -1)``."""
        img = {x: x for x in range(-n, n + 1) if x}
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        for x in range(1, n + 1):
            if img[-x] != -img[x]:
                raise ValueError(f"cycles {cycles} do not commute with negation")
        return cls(img[x] for x in range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1] if x > 0 else -self.images[-x - 1]

    def negative_count(self) -> int:
        return sum(1 for x in self.images if x < 0)

    def is_permutation(self) -> bool:
        return all(x > 0 for x in self.images)

    def __eq__(self, other):
        return isinstance(other, SignedPermutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SignedPermutation({list(self.images)})"

    def to_json(self):
        return list(self.images)


# rotation r = s1 s2; element (k, e) stands for r**k * s1**e
@dataclass(frozen=True, order=True)
class DihedralElement:
    rot: int
    refl: int

    def __post_init__(self):
        object.__setattr__(self, "rot", self.rot % 6)
        object.__setattr__(self, "refl", self.refl % 2)

    @property
    def word(self) -> tuple[str, ...]:
        return _dihedral_words()[self]

    def __str__(self):
        return "".join(self.word) or "1"

    def to_json(self):
        return str(self)


@lru_cache(maxsize=None)
def _dihedral_words() -> dict:
    """Normal forms: the shortest alternating word, preferring words that start with s1."""
    out = {}
    for length in range(7):
        for start in ("s1", "s2"):
            word = tuple(("s1", "s2")[(i + (start == "s2")) % 2] for i in range(length))
            el = DIHEDRAL_ID
            for g in word:
                el = compose(el, DIHEDRAL_GENS[g])
            out.setdefault(el, word)
    return out


DIHEDRAL_ID = DihedralElement(0, 0)
DIHEDRAL_GENS = {"s1": DihedralElement(0, 1), "s2": DihedralElement(5, 1)}

GroupElement = Union[SignedPermutation, DihedralElement]


def compose(a: GroupElement, b: GroupElement) -> GroupElement:
    """The product ``a * b``, acting as ``x -> a(b(x))``."""
    if isinstance(a, SignedPermutation) and isinstance(b, SignedPermutation):
        if a.n != b.n:
            raise ValueError("cannot compose elements of different rank")
        return SignedPermutation(a(x) for x in b.images)
    if isinstance(a, DihedralElement) and isinstance(b, DihedralElement):
        sign = -1 if a.refl else 1
        return DihedralElement(a.rot + sign * b.rot, a.refl + b.refl)
    raise ValueError(f"cannot compose {type(a).__name__} with {type(b).__name__}")


def invert(a: GroupElement) -> GroupElement:
    if isinstance(a, SignedPermutation):
        out = [0] * a.n
        for i, x in enumerate(a.images, start=1):
            out[abs(x) - 1] = i if x > 0 else -i
        return SignedPermutation(out)
    if a.refl:
        return a
    return DihedralElement(-a.rot, 0)


def compose_word(word: Iterable[str], gens: dict[str, GroupElement], identity: GroupElement) -> GroupElement:
    el = identity
    for g in word:
        el = compose(el, gens[g])
    return el


def element_order(a: GroupElement) -> int:
    k, x = 1, a
    ident = identity_like(a)
    while x != ident:
        x = compose(x, a)
        k += 1
    return k


def identity_like(a: GroupElement) -> GroupElement:
    return SignedPermutation.identity(a.n) if isinstance(a, SignedPermutation) else DIHEDRAL_ID


def identity(group_type: str, n: int | None = None) -> GroupElement:
    if group_type == "G2":
        return DIHEDRAL_ID
    return SignedPermutation.identity(n)


def _check_rank(group_type: str, n: int | None):
    if group_type == "G2":
        return
    if group_type not in ("A", "B", "D"):
        raise ValueError(f"unknown group type {group_type!r}")
    if n is None or n < 1 or (group_type == "D" and n < 2):
        raise ValueError(f"invalid rank {n!r} for type {group_type}")


def transposition(n: int, i: int, j: int) -> SignedPermutation:
    """The reflection ``(i, j)(-i, -j)``."""
    return SignedPermutation.from_cycles(n, (i, j), (-i, -j))


def sign_flip(n: int, *points: int) -> SignedPermutation:
    """The product of ``(k, -k)`` over the given points."""
    return SignedPermutation.from_cycles(n, *[(k, -k) for k in points])


def long_reflection(n: int, i: int, j: int) -> SignedPermutation:
    """The reflection ``(i, -j)(-i, j)``."""
    return SignedPermutation.from_cycles(n, (i, -j), (-i, j))


@lru_cache(maxsize=None)
def generators(group_type: str, n: int | None = None) -> dict[str, GroupElement]:
    _check_rank(group_type, n)
    if group_type == "G2":
        return dict(DIHEDRAL_GENS)
    gens: dict[str, GroupElement] = {}
    if group_type == "B":
        gens["s1"] = sign_flip(n, 1)
    if group_type == "D":
        gens["st1"] = SignedPermutation.from_cycles(n, (1, -2), (2, -1))
    prefix = "st" if group_type == "D" else "s"
    for i in range(2, n + 1):
        gens[f"{prefix}{i}"] = transposition(n, i - 1, i)
    return gens


def group_order(group_type: str, n: int | None = None) -> int:
    _check_rank(group_type, n)
    if group_type == "A":
        return factorial(n)
    if group_type == "B":
        return 2**n * factorial(n)
    if group_type == "D":
        return 2 ** (n - 1) * factorial(n)
    return 12


@lru_cache(maxsize=16)
def group_words(group_type: str, n: int | None = None, cap: int = DEFAULT_CAP) -> dict[GroupElement, tuple[str, ...]]:
    """Every element mapped to a shortest word in the generators (BFS order)."""
    order = group_order(group_type, n)
    if order > cap:
        raise CapExceeded(f"|W({group_type}{n or ''})| = {order} exceeds cap {cap}")
    gens = generators(group_type, n)
    start = identity(group_type, n)
    words = {start: ()}
    queue = deque([start])
    while queue:
        el = queue.popleft()
        w = words[el]
        for name, g in gens.items():
            nxt = compose(el, g)
            if nxt not in words:
                words[nxt] = w + (name,)
                queue.append(nxt)
    return words


def enumerate_group(group_type: str, n: int | None = None, cap: int = DEFAULT_CAP) -> list[GroupElement]:
    return list(group_words(group_type, n, cap))


def longest_element(group_type: str, n: int | None = None) -> GroupElement:
    _check_rank(group_type, n)
    if group_type == "G2":
        return compose_word(("s1", "s2") * 3, DIHEDRAL_GENS, DIHEDRAL_ID)
    if group_type == "A":
        return SignedPermutation(range(n, 0, -1))
    if group_type == "B" or n % 2 == 0:
        return SignedPermutation(-k for k in range(1, n + 1))
    return SignedPermutation([1] + [-k for k in range(2, n + 1)])


Word = tuple[str, ...]


@dataclass(frozen=True)
class Presentation:
    """Coxeter presentation: braid/commutation relations plus involutive generators.

    ``parameters`` names the Hecke parameter (``"p"`` or ``"q"``) attached to
    each generator's quadratic relation.
    """

    generators: tuple[str, ...]
    braids: tuple[tuple[Word, Word], ...]
    parameters: dict = field(default_factory=dict)

    @property
    def relations(self) -> tuple[tuple[Word, Word], ...]:
        return self.braids + tuple(((g, g), ()) for g in self.generators)


def _braid(a: str, b: str, m: int) -> tuple[Word, Word]:
    return (tuple((a, b)[i % 2] for i in range(m)), tuple((b, a)[i % 2] for i in range(m)))


@lru_cache(maxsize=None)
def presentation(group_type: str, n: int | None = None) -> Presentation:
    gens = tuple(generators(group_type, n))
    if group_type == "G2":
        return Presentation(gens, (_braid("s1", "s2", 6),), {"s1": "p", "s2": "q"})
    prefix = "st" if group_type == "D" else "s"
    idx = {g: int(g[len(prefix):]) for g in gens}
    braids = []
    for a_pos, a in enumerate(gens):
        for b in gens[a_pos + 1:]:
            i, j = idx[a], idx[b]
            if group_type == "D" and i == 1:
                m = 3 if j == 3 else 2
            elif group_type == "B" and i == 1:
                m = 4 if j == 2 else 2
            else:
                m = 3 if abs(i - j) == 1 else 2
            braids.append(_braid(a, b, m))
    params = {g: ("p" if group_type == "B" and idx[g] == 1 else "q") for g in gens}
    return Presentation(gens, tuple(braids), params)


# ---------------------------------------------------------------------------
# Group algebra
# ---------------------------------------------------------------------------

class GroupAlgebraElement:
    """A finite formal sum of group elements with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[GroupElement, Fraction] = {}
        for g, c in (terms or {}).items():
            if c:
                self.terms[g] = Fraction(c)

    @classmethod
    def of(cls, *elements: GroupElement) -> "GroupAlgebraElement":
        out: dict = {}
        for g in elements:
            out[g] = out.get(g, 0) + 1
        return cls(out)

    @classmethod
    def scalar(cls, c, group_type: str, n: int | None = None) -> "GroupAlgebraElement":
        return cls({identity(group_type, n): c})

    def __add__(self, other):
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return GroupAlgebraElement(out)

    def __neg__(self):
        return GroupAlgebraElement({g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GroupAlgebraElement({g: c * other for g, c in self.terms.items()})
        out: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                g = compose(a, b)
                out[g] = out.get(g, 0) + ca * cb
        return GroupAlgebraElement(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def commutes_with(self, other: "GroupAlgebraElement") -> bool:
        return self * other == other * self

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        parts = [f"{c}*{getattr(g, 'images', g)}" for g, c in self.terms.items()]
        return "GroupAlgebraElement(" + " + ".join(parts) + ")"


def _dihedral(word: str) -> DihedralElement:
    names = [f"s{c}" for c in word]
    return compose_word(names, DIHEDRAL_GENS, DIHEDRAL_ID)


JM_FLAVORS = {"A": ("long",), "B": ("short", "long"), "D": ("one", "two")}


def jm_element(group_type: str, k: int, flavor: str, n: int | None = None) -> GroupAlgebraElement:
    """Jucys-Murphy type elements m_k (A), m_{k,s}/m_{k,l} (B), m~_{k,1}/m~_{k,2} (D)."""
    n = k if n is None else n
    _check_rank(group_type, n)
    if group_type not in JM_FLAVORS or flavor not in JM_FLAVORS[group_type]:
        raise ValueError(f"no Jucys-Murphy flavor {flavor!r} for type {group_type}")
    if not 1 <= k <= n:
        raise ValueError(f"level {k} out of range 1..{n}")
    if flavor == "short":
        return GroupAlgebraElement.of(sign_flip(n, k))
    if flavor == "one":
        if k == 1:
            return GroupAlgebraElement.of(SignedPermutation.identity(n))
        return GroupAlgebraElement.of(sign_flip(n, 1, k))
    terms = [transposition(n, i, k) for i in range(1, k)]
    if flavor != "long" or group_type != "A":
        terms += [long_reflection(n, i, k) for i in range(1, k)]
    return GroupAlgebraElement.of(*terms)


CENTRAL_FLAVORS = {"A": ("long",), "B": ("short", "long", "zero"), "D": ("long", "zero"), "G2": ("short", "long", "zero")}


def central_sum(group_type: str, k: int, flavor: str, n: int | None = None) -> GroupAlgebraElement:
    """Reflection class sums z_{k,s}, z_{k,l} and the longest element z_{k,0} of level k."""
    if group_type == "G2":
        # level one is S_2 = <s1>: its single reflection is also its longest element
        if k == 1 and flavor in CENTRAL_FLAVORS["G2"]:
            return GroupAlgebraElement.of(DIHEDRAL_GENS["s1"])
        if k != 2 or flavor not in CENTRAL_FLAVORS["G2"]:
            raise ValueError(f"no central element z_({k},{flavor}) for G2")
        words = {
            "short": ("1", "212", "12121"),
            "long": ("2", "121", "21212"),
            "zero": ("121212",),
        }[flavor]
        return GroupAlgebraElement.of(*[_dihedral(w) for w in words])
    n = k if n is None else n
    _check_rank(group_type, n)
    if flavor not in CENTRAL_FLAVORS.get(group_type, ()):
        raise ValueError(f"no central element of flavor {flavor!r} for type {group_type}")
    if not 1 <= k <= n:
        raise ValueError(f"level {k} out of range 1..{n}")
    if flavor == "zero":
        if group_type == "D" and k % 2:
            raise ValueError("the longest element of D_k is -1 only for even k")
        return GroupAlgebraElement.of(sign_flip(n, *range(1, k + 1)))
    if flavor == "short":
        return GroupAlgebraElement.of(*[sign_flip(n, i) for i in range(1, k + 1)])
    terms = [transposition(n, i, j) for j in range(2, k + 1) for i in range(1, j)]
    if group_type != "A":
        terms += [long_reflection(n, i, j) for j in range(2, k + 1) for i in range(1, j)]
    return GroupAlgebraElement.of(*terms)


def level_generators(group_type: str, n: int | None, k: int) -> list[str]:
    """Generators of the level-k subgroup W_k inside W_n."""
    gens = list(generators(group_type, n))
    if group_type == "G2":
        return gens[:1] if k == 1 else gens
    if group_type == "D":
        # st1 moves both 1 and 2, so WD_1 is trivial
        return [g for g in gens if int(g[2:]) <= k] if k >= 2 else []
    return [g for g in gens if int(g[1:]) <= k]


@lru_cache(maxsize=None)
def level_longest_word(group_type: str, n: int | None, k: int) -> tuple[str, ...]:
    """A reduced word for the longest element w_{k,0} of the level-k subgroup."""
    names = level_generators(group_type, n, k)
    gens = generators(group_type, n)
    start = identity(group_type, n)
    words = {start: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for el in frontier:
            for g in names:
                y = compose(el, gens[g])
                if y not in words:
                    words[y] = words[el] + (g,)
                    nxt.append(y)
        if not nxt:
            return words[frontier[0]]
        frontier = nxt
    return ()
