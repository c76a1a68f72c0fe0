"""The symbol diagram of a factor algebra ut(n)/m.

Step 0 marks the ideal with bullets.  Each later step puts a cross on the
greatest empty root ``(k, t)`` and then, for ``t < a < k`` in ascending order,
puts ``-`` on ``(k, a)`` and ``+`` on ``(a, t)`` when both are still empty.
The number of crosses is the index, the number of ``+``/``-`` symbols is the
maximal coadjoint orbit dimension.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Mapping

from .roots import RegularIdeal, Root, order_key, positive_roots, succ


class Symbol(enum.Enum):
    CROSS = "⊗"
    PLUS = "+"
    MINUS = "-"
    BULLET = "•"
    EMPTY = "."

    @property
    def ascii(self) -> str:
        return _ASCII[self]


_ASCII = {
    Symbol.CROSS: "x",
    Symbol.PLUS: "+",
    Symbol.MINUS: "-",
    Symbol.BULLET: "*",
    Symbol.EMPTY: ".",
}


@dataclass(frozen=True)
class StepRecord:
    index: int
    cross: Root
    plus_set: tuple[Root, ...]
    minus_set: tuple[Root, ...]
    remaining: frozenset[Root]


@dataclass(frozen=True)
class Diagram:
    ideal: RegularIdeal
    grid: Mapping[Root, Symbol]
    steps: tuple[StepRecord, ...]

    @property
    def n(self) -> int:
        return self.ideal.n

    def __hash__(self):
        return hash(self.ideal)

    def __eq__(self, other):
        return isinstance(other, Diagram) and self.ideal == other.ideal

    def cells(self, symbol: Symbol) -> list[Root]:
        """Roots carrying ``symbol``, greatest first."""
        return [r for r in positive_roots(self.n) if self.grid[r] is symbol]

    @property
    def crosses(self) -> list[Root]:
        """The cross positions ``xi_1 > xi_2 > ... > xi_s``."""
        return [st.cross for st in self.steps]

    @property
    def index(self) -> int:
        return len(self.steps)

    @property
    def max_orbit_dim(self) -> int:
        return sum(len(st.plus_set) + len(st.minus_set) for st in self.steps)

    @property
    def dim(self) -> int:
        return self.ideal.dim

    def stats(self) -> dict[str, int]:
        return {"index": self.index, "dim": self.dim, "max_orbit_dim": self.max_orbit_dim}

    def step(self, i: int) -> StepRecord:
        if not 1 <= i <= len(self.steps):
            raise IndexError(f"step {i} out of range 1..{len(self.steps)}")
        return self.steps[i - 1]

    def remaining(self, i: int) -> frozenset[Root]:
        """Roots still empty after step ``i`` (``i = 0`` is after the bullets)."""
        if i == 0:
            return frozenset(self.ideal.live_roots)
        return self.step(i).remaining

    def _d_set(self, i: int, attr: str) -> frozenset[Root]:
        xi = self.step(i).cross
        filled = set()
        for st in self.steps[:i]:
            filled.update(getattr(st, attr))
        return frozenset(r for r in filled if succ(xi, r))

    def d_minus_set(self, i: int) -> frozenset[Root]:
        """Roots below ``xi_i`` in the order that carry ``-`` after step ``i``."""
        return self._d_set(i, "minus_set")

    def d_plus_set(self, i: int) -> frozenset[Root]:
        """Roots below ``xi_i`` in the order that carry ``+`` after step ``i``."""
        return self._d_set(i, "plus_set")

    def render(self, ascii: bool = False) -> str:
        """One line per row, row 1 first; cells on or above the diagonal are blank."""
        lines = []
        for i in range(1, self.n + 1):
            chars = []
            for j in range(1, self.n + 1):
                if j >= i:
                    chars.append(" ")
                else:
                    sym = self.grid[Root(i, j)]
                    chars.append(sym.ascii if ascii else sym.value)
            lines.append("".join(chars))
        return "\n".join(lines)


@lru_cache(maxsize=4096)
def build_diagram(ideal: RegularIdeal) -> Diagram:
    n = ideal.n
    grid = {r: (Symbol.BULLET if r in ideal else Symbol.EMPTY) for r in positive_roots(n)}
    empty = set(ideal.live_roots)
    steps = []
    while empty:
        xi = max(empty, key=order_key)
        k, t = xi
        grid[xi] = Symbol.CROSS
        empty.discard(xi)
        plus, minus = [], []
        for a in range(t + 1, k):
            m_root, p_root = Root(k, a), Root(a, t)
            if m_root in empty and p_root in empty:
                grid[m_root] = Symbol.MINUS
                grid[p_root] = Symbol.PLUS
                empty.discard(m_root)
                empty.discard(p_root)
                minus.append(m_root)
                plus.append(p_root)
        steps.append(
            StepRecord(len(steps) + 1, xi, tuple(plus), tuple(minus), frozenset(empty))
        )
    return Diagram(ideal, MappingProxyType(grid), tuple(steps))
