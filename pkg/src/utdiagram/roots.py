"""Positive roots of ut(n), the total order on them, and regular ideals.

A root is a pair ``(row, col)`` of distinct indices in ``[1, n]``; it is
positive when ``row > col``.  Everything is 1-indexed.

A regular ideal is a set of positive roots ``M`` such that whenever a sum
``(i, j) + (j, m) = (i, m)`` has a summand in ``M``, the sum is in ``M`` too.
Such sets are exactly the staircases described by non-decreasing column
thresholds ``c_1 <= ... <= c_{n-1}`` with ``(i, j) in M  <=>  i >= c_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple


class IdealError(ValueError):
    """Raised for malformed roots or root sets that are not regular ideals."""


class Root(NamedTuple):
    row: int
    col: int

    @property
    def positive(self) -> bool:
        return self.row > self.col

    def __neg__(self) -> Root:
        return Root(self.col, self.row)

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


def order_key(root: Root) -> tuple[int, int]:
    """Sort key for the total order: a larger key is a greater root.

    ``(b, t)`` is greater than ``(b', t')`` iff ``t < t'``, or ``t == t'`` and
    ``b > b'``; so ``(n, 1)`` is the greatest root and ``(n, n-1)`` the least.
    """
    return (-root.col, root.row)


def succ(a: Root, b: Root) -> bool:
    """True iff ``a`` is strictly greater than ``b`` in the root order."""
    return order_key(a) > order_key(b)


def positive_roots(n: int) -> list[Root]:
    """All positive roots for size ``n``, greatest first."""
    return [Root(i, j) for j in range(1, n) for i in range(n, j, -1)]


def root_sum(a: Root, b: Root) -> Root | None:
    """``(i, j) + (j, m) = (i, m)``; ``None`` when the sum is undefined."""
    if a.col == b.row:
        return Root(a.row, b.col)
    return None


def _check_roots(roots: Iterable[Iterable[int]], n: int) -> set[Root]:
    out = set()
    for r in roots:
        try:
            i, j = r
            root = Root(int(i), int(j))
        except (TypeError, ValueError) as exc:
            raise IdealError(f"malformed root {r!r}") from exc
        if not (1 <= root.col < root.row <= n):
            raise IdealError(f"{root} is not a positive root for n={n}")
        out.add(root)
    return out


def _violations(m_set: set[Root], n: int) -> list[tuple[Root, Root, Root]]:
    bad = []
    for a in positive_roots(n):
        for m in range(1, a.col):
            b = Root(a.col, m)
            s = Root(a.row, m)
            if (a in m_set or b in m_set) and s not in m_set:
                bad.append((a, b, s))
    return bad


def is_regular(m_set: Iterable[Iterable[int]], n: int) -> bool:
    """Check the closure condition directly over every defined root sum."""
    return not _violations(_check_roots(m_set, n), n)


def closure(seed: Iterable[Iterable[int]], n: int) -> RegularIdeal:
    """Smallest regular ideal containing ``seed``."""
    current = _check_roots(seed, n)
    while True:
        missing = {s for _, _, s in _violations(current, n)}
        if not missing:
            return RegularIdeal.from_roots(n, current)
        current |= missing


@dataclass(frozen=True)
class RegularIdeal:
    """A regular ideal stored as column thresholds.

    ``thresholds[j-1]`` is ``c_j`` in ``[j+1, n+1]``; ``c_j = n+1`` means
    column ``j`` has no root in the ideal.
    """

    n: int
    thresholds: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise IdealError(f"n must be >= 1, got {self.n}")
        th = tuple(self.thresholds)
        object.__setattr__(self, "thresholds", th)
        if len(th) != self.n - 1:
            raise IdealError(f"expected {self.n - 1} thresholds, got {len(th)}")
        for j, c in enumerate(th, start=1):
            if not (j + 1 <= c <= self.n + 1):
                raise IdealError(f"threshold c_{j}={c} outside [{j + 1}, {self.n + 1}]")
        if any(a > b for a, b in zip(th, th[1:])):
            raise IdealError(f"thresholds {th} are not non-decreasing")

    @classmethod
    def empty(cls, n: int) -> RegularIdeal:
        return cls(n, (n + 1,) * (n - 1))

    @classmethod
    def from_roots(
        cls, n: int, roots: Iterable[Iterable[int]], *, close: bool = False
    ) -> RegularIdeal:
        """Validate a root set and convert it; ``close=True`` takes the closure instead."""
        m_set = _check_roots(roots, n)
        if close:
            return closure(m_set, n)
        bad = _violations(m_set, n)
        if bad:
            detail = "; ".join(f"{a}+{b}={s} missing" for a, b, s in sorted(bad))
            raise IdealError(f"not a regular ideal: {detail}")
        th = []
        for j in range(1, n):
            rows = [r.row for r in m_set if r.col == j]
            th.append(min(rows) if rows else n + 1)
        return cls(n, tuple(th))

    def __contains__(self, root) -> bool:
        i, j = root
        return 1 <= j < i <= self.n and i >= self.thresholds[j - 1]

    @cached_property
    def roots(self) -> frozenset[Root]:
        return frozenset(r for r in positive_roots(self.n) if r in self)

    @cached_property
    def live_roots(self) -> list[Root]:
        """Positive roots outside the ideal, greatest first."""
        return [r for r in positive_roots(self.n) if r not in self]

    @property
    def dim(self) -> int:
        return self.n * (self.n - 1) // 2 - len(self.roots)

    def sorted_roots(self) -> list[Root]:
        return sorted(self.roots)

    def __str__(self) -> str:
        body = ",".join(str(r) for r in self.sorted_roots())
        return f"n={self.n} M={{{body}}}"


def enumerate_regular_ideals(n: int) -> Iterator[RegularIdeal]:
    """Yield every regular ideal of size ``n`` once, in lexicographic threshold order."""
    if n < 1:
        raise IdealError(f"n must be >= 1, got {n}")

    def rec(j: int, lo: int, prefix: tuple[int, ...]):
        if j == n:
            yield RegularIdeal(n, prefix)
            return
        for c in range(max(j + 1, lo), n + 2):
            yield from rec(j + 1, c, prefix + (c,))

    yield from rec(1, 2, ())
