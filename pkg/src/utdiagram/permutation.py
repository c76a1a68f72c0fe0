"""The permutation attached to a regular ideal and its reflection factorizations.

Permutations of ``[1, n]`` are stored in one-line form.  Products compose
right to left: ``(u * v)(x) == u(v(x))``, so ``r_1 * r_2 * ... * r_s`` applies
``r_s`` first.  A permutation acts on roots coordinatewise.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .diagram import Diagram, Symbol, build_diagram
from .roots import RegularIdeal, Root


@dataclass(frozen=True)
class Permutation:
    one_line: tuple[int, ...]

    def __post_init__(self):
        ol = tuple(self.one_line)
        object.__setattr__(self, "one_line", ol)
        if sorted(ol) != list(range(1, len(ol) + 1)):
            raise ValueError(f"{ol} is not a permutation of 1..{len(ol)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def reflection(cls, n: int, root: Root) -> Permutation:
        """The transposition of ``root.row`` and ``root.col``."""
        ol = list(range(1, n + 1))
        k, t = root
        ol[k - 1], ol[t - 1] = t, k
        return cls(tuple(ol))

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, x: int) -> int:
        return self.one_line[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.n != self.n:
            raise ValueError("size mismatch")
        return Permutation(tuple(self(other(x)) for x in range(1, self.n + 1)))

    def apply(self, root: Root) -> Root:
        return Root(self(root.row), self(root.col))

    def inversions(self) -> int:
        ol = self.one_line
        return sum(1 for a in range(len(ol)) for b in range(a + 1, len(ol)) if ol[a] > ol[b])

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.one_line)) + ")"


def inversions(w: Permutation) -> int:
    return w.inversions()


def build_w(ideal: RegularIdeal) -> Permutation:
    """Greedy column-by-column choice of the largest unused live row.

    ``w(t)`` is the largest ``i`` not yet used with ``(i, t)`` outside the ideal;
    rows ``i <= t`` never lie in the ideal, so a choice always exists.
    """
    n = ideal.n
    used: set[int] = set()
    out = []
    for t in range(1, n + 1):
        i = max(i for i in range(1, n + 1) if i not in used and (i, t) not in ideal)
        used.add(i)
        out.append(i)
    return Permutation(tuple(out))


def reflection_product(word: Sequence[Root], n: int) -> Permutation:
    w = Permutation.identity(n)
    for xi in word:
        w = w * Permutation.reflection(n, xi)
    return w


def partial_products(word: Sequence[Root], n: int) -> list[Permutation]:
    """``[w_0, w_1, ..., w_s]`` with ``w_0`` the identity and ``w_i = w_{i-1} r_i``."""
    out = [Permutation.identity(n)]
    for xi in word:
        out.append(out[-1] * Permutation.reflection(n, xi))
    return out


def column_prefix_product(diagram: Diagram, t: int) -> Permutation:
    """Product of the cross reflections lying in columns ``1..t``, greatest first."""
    if not 0 <= t <= diagram.n:
        raise ValueError(f"column {t} out of range 0..{diagram.n}")
    return reflection_product([xi for xi in diagram.crosses if xi.col <= t], diagram.n)


def root_sign(w: Permutation, root: Root) -> int:
    """+1 if ``w(root)`` is a positive root, -1 otherwise."""
    return 1 if w(root.row) > w(root.col) else -1


class SignClass(enum.Enum):
    MINUS = "minus"
    BULLET = "bullet"
    PLUS_OR_CROSS = "plus_or_cross"


def classify_by_signs(source: RegularIdeal | Diagram, root: Root) -> SignClass:
    """Predict the symbol at ``root = (b, t)`` from the signs of column prefix products.

    ``-`` when the prefix up to column ``t-1`` sends ``root`` negative, bullet
    when the prefix up to column ``t`` keeps it positive, and ``+``/cross
    otherwise.
    """
    diagram = source if isinstance(source, Diagram) else build_diagram(source)
    t = root.col
    if root_sign(column_prefix_product(diagram, t - 1), root) < 0:
        return SignClass.MINUS
    if root_sign(column_prefix_product(diagram, t), root) > 0:
        return SignClass.BULLET
    return SignClass.PLUS_OR_CROSS


SYMBOL_CLASS = {
    Symbol.MINUS: SignClass.MINUS,
    Symbol.BULLET: SignClass.BULLET,
    Symbol.PLUS: SignClass.PLUS_OR_CROSS,
    Symbol.CROSS: SignClass.PLUS_OR_CROSS,
}


def column_depth(ideal: RegularIdeal, t: int) -> int:
    """Largest row ``c > t`` with ``(c, t)`` outside the ideal, or ``t`` if none."""
    live = [c for c in range(t + 1, ideal.n + 1) if (c, t) not in ideal]
    return max(live, default=t)

