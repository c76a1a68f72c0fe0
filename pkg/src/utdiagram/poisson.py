"""Poisson bracket on S(L) and brute-force oracles for the diagram statistics.

The bracket of basis elements comes from matrix units,
``[e_ij, e_jl] = e_il``, projected to zero on the ideal.  Index and maximal
orbit dimension are recomputed independently of the diagram as the generic
rank of the structure matrix over a large prime field.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .polynomial import LAMBDA, SparsePoly, Var, evaluate_mod_p, partial_derivative, y
from .roots import RegularIdeal, Root

DEFAULT_PRIME = 2**61 - 1
DEFAULT_TRIALS = 5
DEFAULT_SEED = 20080101


def bracket_basis(a: Root, b: Root, ideal: RegularIdeal) -> tuple[int, Root] | None:
    """``{y_a, y_b}`` as ``(sign, root)``, or ``None`` when it vanishes."""
    for r in (a, b):
        if r in ideal or not 1 <= r.col < r.row <= ideal.n:
            raise ValueError(f"{r} is not a live root of {ideal}")
    if a.col == b.row:
        out = (1, Root(a.row, b.col))
    elif b.col == a.row:
        out = (-1, Root(b.row, a.col))
    else:
        return None
    if out[1] in ideal:
        return None
    return out


def bracket_table(ideal: RegularIdeal) -> dict[tuple[Root, Root], tuple[int, Root]]:
    """Nonzero brackets between live basis elements."""
    live = ideal.live_roots
    table = {}
    for a in live:
        for b in live:
            v = bracket_basis(a, b, ideal)
            if v is not None:
                table[(a, b)] = v
    return table


def _live_vars(p: SparsePoly, ideal: RegularIdeal) -> list[Var]:
    vs = p.variables()
    if LAMBDA in vs:
        raise ValueError("Poisson bracket is undefined on polynomials in lambda")
    for v in vs:
        if v.root in ideal or not 1 <= v.col < v.row <= ideal.n:
            raise ValueError(f"{v} is not a live variable of {ideal}")
    return sorted(vs)


def poisson_bracket(p: SparsePoly, q: SparsePoly, ideal: RegularIdeal) -> SparsePoly:
    """``sum dp/dy_a * dq/dy_b * {y_a, y_b}`` over variable pairs."""
    pv, qv = _live_vars(p, ideal), _live_vars(q, ideal)
    dq = {b: partial_derivative(q, b) for b in qv}
    total = SparsePoly()
    for a in pv:
        da = None
        for b in qv:
            v = bracket_basis(a.root, b.root, ideal)
            if v is None:
                continue
            if da is None:
                da = partial_derivative(p, a)
            sign, root = v
            term = da * dq[b] * y(*root)
            total = total + term if sign > 0 else total - term
    return total


@dataclass(frozen=True)
class InvarianceResult:
    invariant: bool
    witness: Root | None = None
    bracket: SparsePoly | None = None

    def __bool__(self) -> bool:
        return self.invariant


def is_invariant(p: SparsePoly, ideal: RegularIdeal) -> InvarianceResult:
    """Exact check that ``{p, y_a} == 0`` for every live ``a``, greatest ``a`` first."""
    for a in ideal.live_roots:
        br = poisson_bracket(p, y(*a), ideal)
        if br:
            return InvarianceResult(False, a, br)
    return InvarianceResult(True)


def rank_mod_p(rows: Sequence[Sequence[int]], prime: int) -> int:
    """Rank over GF(prime) by Gaussian elimination on Python ints."""
    mat = [[x % prime for x in r] for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][c], -1, prime)
        prow = [x * inv % prime for x in mat[rank]]
        mat[rank] = prow
        for r in range(len(mat)):
            if r != rank and mat[r][c]:
                f = mat[r][c]
                mat[r] = [(x - f * px) % prime for x, px in zip(mat[r], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}/{trial}")


@dataclass(frozen=True)
class OracleReport:
    generic_rank: int
    index_estimate: int
    dim: int
    trials: int
    prime: int
    seed: int

    def as_dict(self) -> dict:
        return {
            "generic_rank": self.generic_rank,
            "index_estimate": self.index_estimate,
            "dim": self.dim,
            "trials": self.trials,
            "prime": self.prime,
            "seed": self.seed,
        }


def structure_matrix(ideal: RegularIdeal, point: dict[Root, int], prime: int) -> list[list[int]]:
    """Antisymmetric matrix of ``{y_a, y_b}`` evaluated at ``point``."""
    live = ideal.live_roots
    mat = [[0] * len(live) for _ in live]
    for ia, a in enumerate(live):
        for ib, b in enumerate(live):
            v = bracket_basis(a, b, ideal)
            if v is not None:
                sign, root = v
                mat[ia][ib] = sign * point[root] % prime
    return mat


def generic_rank_oracle(
    ideal: RegularIdeal,
    trials: int = DEFAULT_TRIALS,
    prime: int = DEFAULT_PRIME,
    seed: int = DEFAULT_SEED,
) -> OracleReport:
    if trials < 1:
        raise ValueError("need at least one trial")
    if prime <= 2**40:
        raise ValueError("prime must exceed 2^40")
    live = ideal.live_roots
    best = 0
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        point = {r: rng.randrange(prime) for r in live}
        best = max(best, rank_mod_p(structure_matrix(ideal, point, prime), prime))
    return OracleReport(best, len(live) - best, len(live), trials, prime, seed)


def jacobian_rank(
    polys: Sequence[SparsePoly],
    trials: int = DEFAULT_TRIALS,
    prime: int = DEFAULT_PRIME,
    seed: int = DEFAULT_SEED,
) -> int:
    """Max over random points of the rank of the Jacobian matrix of ``polys``."""
    if not polys:
        return 0
    variables = sorted(set().union(*(p.variables() for p in polys)))
    if LAMBDA in variables:
        raise ValueError("jacobian_rank expects lambda-free polynomials")
    grads = [[partial_derivative(p, v) for v in variables] for p in polys]
    best = 0
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        point = {v: rng.randrange(prime) for v in variables}
        rows = [[evaluate_mod_p(g, point, prime) for g in row] for row in grads]
        best = max(best, rank_mod_p(rows, prime))
    return best
