"""Sparse multivariate polynomials with exact integer coefficients.

Variables are the root coordinates ``y_ij`` plus a distinguished ``lambda``.
A monomial is a tuple of ``(Var, exponent)`` pairs sorted with the largest
variable first, so plain tuple comparison is the lexicographic monomial order
(``lambda`` above every ``y``; ``y_ij`` ordered by ``(i, j)``).
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Union

from .roots import Root


class Var(NamedTuple):
    kind: int  # 0 for y_ij, 1 for lambda
    row: int = 0
    col: int = 0

    @classmethod
    def y(cls, row: int, col: int) -> Var:
        return cls(0, row, col)

    @property
    def root(self) -> Root:
        if self.kind != 0:
            raise ValueError("lambda has no root")
        return Root(self.row, self.col)

    def __str__(self) -> str:
        if self.kind == 1:
            return "lam"
        if self.row < 10 and self.col < 10:
            return f"y{self.row}{self.col}"
        return f"y{self.row}_{self.col}"


LAMBDA = Var(1)

Monomial = tuple  # tuple[tuple[Var, int], ...], largest variable first
Coercible = Union["SparsePoly", int]


def _as_var(v) -> Var:
    if isinstance(v, Var):
        return v
    i, j = v
    return Var.y(i, j)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), reverse=True))


class SparsePoly:
    """Immutable polynomial; ``terms`` maps monomials to nonzero ints."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> SparsePoly:
        return cls({(): c})

    @classmethod
    def var(cls, v) -> SparsePoly:
        return cls({((_as_var(v), 1),): 1})

    @staticmethod
    def _coerce(other: Coercible) -> SparsePoly:
        if isinstance(other, SparsePoly):
            return other
        if isinstance(other, int):
            return SparsePoly.const(other)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        other = SparsePoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other: Coercible) -> SparsePoly:
        other = SparsePoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return SparsePoly(out)

    __radd__ = __add__

    def __neg__(self) -> SparsePoly:
        return SparsePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Coercible) -> SparsePoly:
        other = SparsePoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> SparsePoly:
        return (-self) + other

    def __mul__(self, other: Coercible) -> SparsePoly:
        other = SparsePoly._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return SparsePoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SparsePoly:
        if k < 0:
            raise ValueError("negative exponent")
        out = SparsePoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def variables(self) -> set[Var]:
        return {v for m in self.terms for v, _ in m}

    def degree_in(self, v) -> int:
        v = _as_var(v)
        return max((dict(m).get(v, 0) for m in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in descending monomial order."""
        return sorted(self.terms.items(), reverse=True)

    def leading_term(self) -> tuple[Monomial, int]:
        return max(self.terms.items())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, (m, c) in enumerate(self.sorted_terms()):
            body = "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if idx == 0:
                parts.append(("-" if c < 0 else "") + text)
            else:
                parts.append((" - " if c < 0 else " + ") + text)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"SparsePoly({self})"


def y(i: int, j: int) -> SparsePoly:
    return SparsePoly.var(Var.y(i, j))


def lam() -> SparsePoly:
    return SparsePoly.var(LAMBDA)


def partial_derivative(p: SparsePoly, v) -> SparsePoly:
    v = _as_var(v)
    out = {}
    for m, c in p.terms.items():
        exps = dict(m)
        e = exps.get(v, 0)
        if not e:
            continue
        if e == 1:
            del exps[v]
        else:
            exps[v] = e - 1
        out[tuple(sorted(exps.items(), reverse=True))] = c * e
    return SparsePoly(out)


def lambda_coefficients(p: SparsePoly) -> list[SparsePoly]:
    """Coefficients of ``lambda^0, lambda^1, ...`` with trailing zeros dropped."""
    buckets: dict[int, dict[Monomial, int]] = {}
    for m, c in p.terms.items():
        exps = dict(m)
        d = exps.pop(LAMBDA, 0)
        rest = tuple(sorted(exps.items(), reverse=True))
        buckets.setdefault(d, {})[rest] = c
    if not buckets:
        return []
    return [SparsePoly(buckets.get(d, {})) for d in range(max(buckets) + 1)]


def evaluate_mod_p(p: SparsePoly, assignment: Mapping, prime: int) -> int:
    """Value of ``p`` in GF(prime); ``assignment`` keys are ``Var`` or ``(i, j)`` roots."""
    values = {_as_var(k): v % prime for k, v in assignment.items()}
    total = 0
    for m, c in p.terms.items():
        term = c % prime
        for v, e in m:
            if v not in values:
                raise ValueError(f"no value assigned to {v}")
            term = term * pow(values[v], e, prime) % prime
        total = (total + term) % prime
    return total


def exact_divide(p: SparsePoly, d: SparsePoly) -> SparsePoly | None:
    """Quotient ``p / d`` when ``d`` divides ``p`` exactly, else ``None``."""
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    lm_d, lc_d = d.leading_term()
    lead_d = dict(lm_d)
    rem = p
    quotient: dict[Monomial, int] = {}
    while rem:
        lm, lc = rem.leading_term()
        exps = dict(lm)
        if lc % lc_d or any(exps.get(v, 0) < e for v, e in lead_d.items()):
            return None
        for v, e in lead_d.items():
            exps[v] -= e
            if not exps[v]:
                del exps[v]
        qm = tuple(sorted(exps.items(), reverse=True))
        qc = lc // lc_d
        quotient[qm] = qc
        rem = rem - SparsePoly({qm: qc}) * d
    return SparsePoly(quotient)


class SymbolicMatrix:
    """Matrix of polynomials stored sparsely; missing entries are zero."""

    def __init__(self, nrows: int, ncols: int, entries: Mapping[tuple[int, int], Coercible] = ()):
        self.nrows = nrows
        self.ncols = ncols
        self.entries: dict[tuple[int, int], SparsePoly] = {}
        for (i, j), val in dict(entries).items():
            if not (0 <= i < nrows and 0 <= j < ncols):
                raise IndexError(f"entry ({i}, {j}) outside {nrows}x{ncols}")
            val = SparsePoly._coerce(val)
            if val:
                self.entries[(i, j)] = val

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Coercible]]) -> SymbolicMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        entries = {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)}
        return cls(len(rows), ncols, entries)

    def __getitem__(self, ij: tuple[int, int]) -> SparsePoly:
        return self.entries.get(ij, SparsePoly())

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> SymbolicMatrix:
        """Rows and columns picked by 0-based index, in the given order."""
        rows, cols = list(rows), list(cols)
        entries = {}
        for a, i in enumerate(rows):
            for b, j in enumerate(cols):
                if (i, j) in self.entries:
                    entries[(a, b)] = self.entries[(i, j)]
        return SymbolicMatrix(len(rows), len(cols), entries)

    def swap_rows(self, a: int, b: int) -> SymbolicMatrix:
        order = list(range(self.nrows))
        order[a], order[b] = order[b], order[a]
        return self.submatrix(order, range(self.ncols))


def determinant(m: SymbolicMatrix) -> SparsePoly:
    """Laplace expansion along successive rows, memoized on the set of unused columns."""
    if m.nrows != m.ncols:
        raise ValueError(f"determinant of non-square {m.nrows}x{m.ncols} matrix")
    k = m.nrows
    memo: dict[int, SparsePoly] = {}

    def minor(mask: int) -> SparsePoly:
        # row to expand is the number of columns already used
        if mask in memo:
            return memo[mask]
        r = k - bin(mask).count("1")
        if r == k:
            return SparsePoly.const(1)
        total = SparsePoly()
        pos = 0
        for c in range(k):
            if not mask >> c & 1:
                continue
            entry = m.entries.get((r, c))
            if entry is not None:
                sub = minor(mask & ~(1 << c))
                if sub:
                    term = entry * sub
                    total = total - term if pos % 2 else total + term
            pos += 1
        memo[mask] = total
        return total

    return minor((1 << k) - 1)

