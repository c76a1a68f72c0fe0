"""Candidate coadjoint invariants read off minors of the characteristic matrix.

For a cross ``xi = xi_m = (k, t)`` let ``w_xi = r_1 ... r_m``.  The columns are
``J = {j <= t : w_xi(j) >= w_xi(t)}``.  If ``w_xi(t) > t`` the rows are
``w_xi(J)``; otherwise they are ``[w_xi(t), t]`` together with
``{i > t : w_xi(i) < w_xi(t)}``.  The candidate is the highest nonzero
lambda-coefficient of that minor of ``Phi - lambda*E``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .diagram import Diagram
from .permutation import Permutation, partial_products
from .polynomial import (
    SparsePoly,
    SymbolicMatrix,
    determinant,
    exact_divide,
    lam,
    lambda_coefficients,
    y,
)
from .roots import RegularIdeal, Root


def characteristic_matrix(ideal: RegularIdeal) -> SymbolicMatrix:
    """``Phi - lambda*E``: ``y_ij`` at live roots, ``-lambda`` on the diagonal, 0 elsewhere.

    Indexed from 0, so entry ``(i-1, j-1)`` holds ``y_ij``.
    """
    n = ideal.n
    entries = {(i - 1, i - 1): -lam() for i in range(1, n + 1)}
    for r in ideal.live_roots:
        entries[(r.row - 1, r.col - 1)] = y(*r)
    return SymbolicMatrix(n, n, entries)


@dataclass(frozen=True)
class IndexSets:
    case_tag: int
    J: tuple[int, ...]
    I: tuple[int, ...]
    w_xi: Permutation


def _step_of(diagram: Diagram, xi: Root) -> int:
    try:
        return diagram.crosses.index(xi) + 1
    except ValueError:
        raise ValueError(f"{xi} is not a cross of the diagram") from None


def index_sets(diagram: Diagram, xi: Root) -> IndexSets:
    m = _step_of(diagram, Root(*xi))
    k, t = xi
    w = partial_products(diagram.crosses[:m], diagram.n)[m]
    J = tuple(j for j in range(1, t + 1) if w(j) >= w(t))
    if w(t) > t:
        return IndexSets(1, J, tuple(sorted(w(j) for j in J)), w)
    lower = list(range(w(t), t + 1))
    star = [i for i in range(t + 1, diagram.n + 1) if w(i) < w(t)]
    return IndexSets(2, J, tuple(sorted(lower + star)), w)


@dataclass(frozen=True)
class InvariantCandidate:
    xi: Root
    case_tag: int
    J: tuple[int, ...]
    I: tuple[int, ...]
    minor: SparsePoly
    p: SparsePoly
    lambda_degree: int
    anomaly: str | None = None
    quotient: SparsePoly | None = None
    divisors: tuple[Root, ...] = field(default=())

    @property
    def reduced(self) -> SparsePoly:
        """``p`` with exact factors of earlier candidates divided out."""
        return self.quotient if self.quotient is not None else self.p


def candidate(
    diagram: Diagram,
    xi: Root,
    earlier: list[InvariantCandidate] = (),
    matrix: SymbolicMatrix | None = None,
) -> InvariantCandidate:
    """Build the candidate for ``xi``; ``earlier`` candidates feed the division diagnostic."""
    xi = Root(*xi)
    sets = index_sets(diagram, xi)
    anomaly = None
    if len(sets.I) != len(sets.J):
        anomaly = f"row/column count mismatch |I|={len(sets.I)} |J|={len(sets.J)}"
        return InvariantCandidate(xi, sets.case_tag, sets.J, sets.I, SparsePoly(), SparsePoly(), -1, anomaly)
    if matrix is None:
        matrix = characteristic_matrix(diagram.ideal)
    sub = matrix.submatrix([i - 1 for i in sets.I], [j - 1 for j in sets.J])
    minor = determinant(sub)
    coeffs = lambda_coefficients(minor)
    if not coeffs:
        anomaly = "minor vanishes identically"
        return InvariantCandidate(xi, sets.case_tag, sets.J, sets.I, minor, SparsePoly(), -1, anomaly)
    degree = len(coeffs) - 1
    p = coeffs[degree]

    quotient, divisors = p, []
    for prev in earlier:
        d = prev.p
        if not d or not d.variables():
            continue
        while True:
            q = exact_divide(quotient, d)
            if q is None:
                break
            quotient = q
            divisors.append(prev.xi)
    return InvariantCandidate(
        xi,
        sets.case_tag,
        sets.J,
        sets.I,
        minor,
        p,
        degree,
        anomaly,
        quotient if divisors else None,
        tuple(divisors),
    )


def all_candidates(diagram: Diagram) -> list[InvariantCandidate]:
    """One candidate per cross, greatest cross first."""
    matrix = characteristic_matrix(diagram.ideal)
    out: list[InvariantCandidate] = []
    for xi in diagram.crosses:
        out.append(candidate(diagram, xi, out, matrix))
    return out
