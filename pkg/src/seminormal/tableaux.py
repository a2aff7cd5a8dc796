"""Shapes, standard tableaux and the weights attached to them.

A standard tableau is stored as the path it traces in the branching graph:
``boxes[k - 1]`` is the box holding ``k``.  A box is ``(component, row, col)``
with ``component`` 0 for the first partition and 1 for the second, rows and
columns counted from 1.  Comparing the ``boxes`` tuples lexicographically is
the canonical order used everywhere for bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional

Partition = tuple[int, ...]

G2_LABELS = ("phi_1_0", "phi_1_6", "phi_1_3p", "phi_1_3pp", "phi_2_1", "phi_2_2")

# (c_s, c_l, c_0) for the six irreducibles of WG_2
G2_CONSTANTS = {
    "phi_1_0": (3, 3, 1),
    "phi_1_6": (-3, -3, 1),
    "phi_1_3p": (3, -3, -1),
    "phi_1_3pp": (-3, 3, -1),
    "phi_2_1": (0, 0, -1),
    "phi_2_2": (0, 0, 1),
}

# level-one shapes (irreducibles of S_2 = <s1>) under each G2 label, in basis order
G2_PATHS = {
    "phi_1_0": ((2,),),
    "phi_1_6": ((1, 1),),
    "phi_1_3p": ((2,),),
    "phi_1_3pp": ((1, 1),),
    "phi_2_1": ((2,), (1, 1)),
    "phi_2_2": ((2,), (1, 1)),
}


class Box(NamedTuple):
    component: int
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row

    @property
    def sign(self) -> int:
        return 1 if self.component == 0 else -1


def check_partition(rows) -> Partition:
    rows = tuple(int(r) for r in rows)
    if any(r <= 0 for r in rows):
        raise ValueError(f"partition rows must be positive: {rows}")
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise ValueError(f"partition rows must be weakly decreasing: {rows}")
    return rows


@dataclass(frozen=True, order=True)
class Shape:
    """A single partition (``beta is None``) or an ordered double partition."""

    alpha: Partition
    beta: Optional[Partition] = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", check_partition(self.alpha))
        if self.beta is not None:
            object.__setattr__(self, "beta", check_partition(self.beta))

    @property
    def is_double(self) -> bool:
        return self.beta is not None

    @property
    def kind(self) -> str:
        return "double" if self.is_double else "single"

    def components(self) -> tuple[Partition, ...]:
        return (self.alpha,) if self.beta is None else (self.alpha, self.beta)

    @property
    def size(self) -> int:
        return sum(self.alpha) + sum(self.beta or ())

    def boxes(self) -> Iterator[Box]:
        for c, part in enumerate(self.components()):
            for i, length in enumerate(part, start=1):
                for j in range(1, length + 1):
                    yield Box(c, i, j)

    def swapped(self) -> "Shape":
        if self.beta is None:
            raise ValueError("sigma needs a double shape")
        return Shape(self.beta, self.alpha)

    def to_json(self) -> dict:
        out = {"alpha": list(self.alpha)}
        if self.beta is not None:
            out["beta"] = list(self.beta)
        return out

    def __str__(self):
        a = ",".join(map(str, self.alpha))
        if self.beta is None:
            return a or "()"
        return f"({a})|({','.join(map(str, self.beta))})"


@dataclass(frozen=True, order=True)
class DLabel:
    """Label of an irreducible of WD_n.

    ``split`` is ``""`` for an unordered pair {alpha, beta} (stored with
    ``alpha > beta``) and ``"+"``/``"-"`` for the halves of (alpha, alpha).
    """

    shape: Shape
    split: str = ""

    def __post_init__(self):
        if not self.shape.is_double:
            raise ValueError("type D labels are double partitions")
        if self.split not in ("", "+", "-"):
            raise ValueError(f"bad split marker {self.split!r}")
        if (self.shape.alpha == self.shape.beta) != bool(self.split):
            raise ValueError("a +/- marker is required exactly when alpha == beta")

    @property
    def size(self) -> int:
        return self.shape.size

    def __str__(self):
        return f"{self.shape}{self.split}"


def d_label(alpha, beta, split: str = "") -> DLabel:
    """Build a type D label, orienting an unordered pair canonically."""
    alpha, beta = check_partition(alpha), check_partition(beta)
    if alpha < beta:
        alpha, beta = beta, alpha
    return DLabel(Shape(alpha, beta), split)


class StandardTableau(NamedTuple):
    shape: Shape
    boxes: tuple[Box, ...]

    @property
    def n(self) -> int:
        return len(self.boxes)

    def box(self, k: int) -> Box:
        if not 1 <= k <= len(self.boxes):
            raise IndexError(f"entry {k} out of range 1..{len(self.boxes)}")
        return self.boxes[k - 1]

    def rows(self, component: int = 0) -> list[list[int]]:
        part = self.shape.components()[component]
        grid = [[0] * length for length in part]
        for k, b in enumerate(self.boxes, start=1):
            if b.component == component:
                grid[b.row - 1][b.col - 1] = k
        return grid

    def restrict(self, m: int) -> "StandardTableau":
        """The tableau formed by the entries 1..m (the path truncated at level m)."""
        return StandardTableau(sub_shape(self.boxes[:m], self.shape.is_double), self.boxes[:m])

    def to_json(self) -> dict:
        out = {"shape": self.shape.to_json(), "rows_alpha": self.rows(0)}
        if self.shape.is_double:
            out["rows_beta"] = self.rows(1)
        return out

    def __str__(self):
        text = "/".join(" ".join(map(str, r)) for r in self.rows(0))
        if self.shape.is_double:
            text = f"({text}|{'/'.join(' '.join(map(str, r)) for r in self.rows(1))})"
        return text


def sub_shape(boxes, double: bool) -> Shape:
    counts: list[dict[int, int]] = [{}, {}]
    for b in boxes:
        counts[b.component][b.row] = counts[b.component].get(b.row, 0) + 1
    parts = [tuple(c[r] for r in sorted(c)) for c in counts]
    return Shape(parts[0], parts[1] if double else None)


def tableau_from_rows(rows_alpha, rows_beta=None) -> StandardTableau:
    grids = [rows_alpha] if rows_beta is None else [rows_alpha, rows_beta]
    shape = Shape(*[tuple(len(r) for r in g) for g in grids])
    n = shape.size
    where: dict[int, Box] = {}
    for c, g in enumerate(grids):
        for i, row in enumerate(g, start=1):
            for j, k in enumerate(row, start=1):
                where[k] = Box(c, i, j)
    if sorted(where) != list(range(1, n + 1)):
        raise ValueError("entries must be exactly 1..n")
    t = StandardTableau(shape, tuple(where[k] for k in range(1, n + 1)))
    if not is_standard(t):
        raise ValueError("filling is not standard")
    return t


def is_standard(t: StandardTableau) -> bool:
    pos = {b: k for k, b in enumerate(t.boxes, start=1)}
    for b, k in pos.items():
        left = pos.get(Box(b.component, b.row, b.col - 1))
        up = pos.get(Box(b.component, b.row - 1, b.col))
        if b.col > 1 and (left is None or left > k):
            return False
        if b.row > 1 and (up is None or up > k):
            return False
    return True


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def partitions(n: int) -> list[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, (n) first."""

    def gen(m: int, largest: int) -> Iterator[Partition]:
        if m == 0:
            yield ()
            return
        for first in range(min(m, largest), 0, -1):
            for rest in gen(m - first, first):
                yield (first,) + rest

    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(gen(n, n))


def double_partitions(n: int) -> list[Shape]:
    return [Shape(a, b) for k in range(n, -1, -1) for a in partitions(k) for b in partitions(n - k)]


def enum_shapes(group_type: str, n: int | None = None) -> list:
    """Labels of the irreducibles of the Weyl group of the given type and rank."""
    if group_type == "G2":
        return list(G2_LABELS)
    if n is None or n < 1:
        raise ValueError(f"invalid rank {n!r} for type {group_type}")
    if group_type == "A":
        return [Shape(p) for p in partitions(n)]
    if group_type == "B":
        return double_partitions(n)
    if group_type == "D":
        if n < 2:
            raise ValueError("type D needs n >= 2")
        labels = []
        for s in double_partitions(n):
            if s.alpha > s.beta:
                labels.append(DLabel(s))
            elif s.alpha == s.beta:
                labels.append(DLabel(s, "+"))
                labels.append(DLabel(s, "-"))
        return labels
    raise ValueError(f"unknown group type {group_type!r}")


def _addable(lengths: list[list[int]], target: Shape) -> list[Box]:
    out = []
    for c, part in enumerate(target.components()):
        cur = lengths[c]
        for i in range(len(part)):
            have = cur[i]
            if have < part[i] and (i == 0 or cur[i - 1] > have):
                out.append(Box(c, i + 1, have + 1))
    return out


@lru_cache(maxsize=None)
def enum_standard_tableaux(shape: Shape) -> tuple[StandardTableau, ...]:
    """All standard tableaux of ``shape`` in canonical (lexicographic path) order."""
    n = shape.size
    lengths = [[0] * len(p) for p in shape.components()]
    path: list[Box] = []
    out: list[StandardTableau] = []

    def walk():
        if len(path) == n:
            out.append(StandardTableau(shape, tuple(path)))
            return
        for b in _addable(lengths, shape):
            lengths[b.component][b.row - 1] += 1
            path.append(b)
            walk()
            path.pop()
            lengths[b.component][b.row - 1] -= 1

    walk()
    return tuple(out)


@lru_cache(maxsize=None)
def _index_map(shape: Shape) -> dict[tuple[Box, ...], int]:
    return {t.boxes: i for i, t in enumerate(enum_standard_tableaux(shape))}


def canonical_index(t: StandardTableau) -> int:
    return _index_map(t.shape)[t.boxes]


def box_stats(t: StandardTableau, k: int) -> tuple[int, int]:
    """``(content, sign)`` of the box holding ``k``."""
    b = t.box(k)
    return b.content, b.sign


def adjacent_swap(t: StandardTableau, i: int) -> StandardTableau | None:
    """Exchange ``i - 1`` and ``i``; ``None`` when the result is not standard."""
    if not 2 <= i <= t.n:
        raise IndexError(f"swap index {i} out of range 2..{t.n}")
    a, b = t.boxes[i - 2], t.boxes[i - 1]
    if a.component == b.component and (a.row == b.row or a.col == b.col):
        return None
    boxes = list(t.boxes)
    boxes[i - 2], boxes[i - 1] = b, a
    return StandardTableau(t.shape, tuple(boxes))


def sigma(t: StandardTableau) -> StandardTableau:
    """Exchange the two components of a tableau of double shape."""
    if not t.shape.is_double:
        raise ValueError("sigma needs a double shape")
    return StandardTableau(t.shape.swapped(), tuple(Box(1 - b.component, b.row, b.col) for b in t.boxes))


# ---------------------------------------------------------------------------
# Weights
# ---------------------------------------------------------------------------

def weight_constants(label, group_type: str) -> tuple:
    """Central character values ``(c_s, c_l, c_0)``; ``None`` where absent.

    Type A: only ``c_l`` (sum of contents).  Types B and D use the double
    partition; the long value counts each pair of long reflections, so it is
    twice the content sum.  G2 labels come from the tabulated character
    values; a level-one G2 shape (partition of 2) gives ``c_0`` for
    ``z_{1,0} = s1``.
    """
    if group_type == "G2":
        if isinstance(label, str):
            return G2_CONSTANTS[label]
        shape = label if isinstance(label, Shape) else Shape(tuple(label))
        if shape.size == 1:
            return (None, None, None)
        return (None, None, 1 if shape.alpha == (2,) else -1)
    if isinstance(label, DLabel):
        label = label.shape
    shape = label if isinstance(label, Shape) else Shape(tuple(label))
    boxes = list(shape.boxes())
    ct = sum(b.content for b in boxes)
    if group_type == "A":
        return (None, ct, None)
    if not shape.is_double:
        raise ValueError(f"type {group_type} needs a double shape")
    sgn = [b.sign for b in boxes]
    prod = 1
    for s in sgn:
        prod *= s
    if group_type == "B":
        return (sum(sgn), 2 * ct, prod)
    if group_type == "D":
        return (None, 2 * ct, None)
    raise ValueError(f"unknown group type {group_type!r}")


@dataclass(frozen=True)
class Weight:
    """Weight of a path: per-level constants plus the reduced sequences."""

    levels: tuple[tuple, ...]
    contents: tuple[int, ...]
    signs: tuple[int, ...]
    relative_signs: tuple[int, ...]

    def key(self, group_type: str) -> tuple:
        if group_type == "A":
            return self.contents
        if group_type == "D":
            return (self.contents, self.relative_signs)
        return (self.contents, self.signs)


def tableau_weight(t: StandardTableau, group_type: str) -> Weight:
    contents = tuple(b.content for b in t.boxes)
    signs = tuple(b.sign for b in t.boxes)
    rel = tuple(signs[0] * s for s in signs) if signs else ()
    levels = tuple(
        weight_constants(sub_shape(t.boxes[:k], t.shape.is_double), group_type)
        for k in range(1, t.n + 1)
    )
    return Weight(levels, contents, signs, rel)


class G2Path(NamedTuple):
    """A path (empty -> level-one partition -> G2 label) in the branching graph."""

    level1: Partition
    label: str

    def weight(self) -> tuple:
        c10 = weight_constants(Shape(self.level1), "G2")[2]
        return (c10,) + G2_CONSTANTS[self.label]

    def to_json(self) -> dict:
        return {"level1": list(self.level1), "label": self.label}

    def __str__(self):
        return f"{Shape(self.level1)}->{self.label}"


def g2_paths(label: str) -> tuple[G2Path, ...]:
    if label not in G2_PATHS:
        raise ValueError(f"unknown G2 label {label!r}")
    return tuple(G2Path(lv, label) for lv in G2_PATHS[label])
