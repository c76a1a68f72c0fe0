"""Executable checks of the structural claims about diagrams and permutations.

Each check returns a list of human-readable failure strings; an empty list
means the claim held for that ideal.  ``run_structural_checks`` bundles them
under stable names used in reports:

==========================  ==================================================
``diagram_partition``       bullets/crosses/pairs partition the positive roots
``live_subalgebra``         ``B_i`` plus the ideal is closed under root sums
``minus_subalgebra``        each ``D_i^-`` is closed under root sums
``minus_closed_below``      sums inside ``D_i^-`` that lie below ``xi_i`` stay in it
``length_equals_dim``       inversions of ``w`` equal ``dim L``
``reflection_factorization`` ``w`` is the product of the cross reflections
``step_signs``              ``w_j`` signs on empty / filled roots below ``xi_i``
``column_signs``            ``w^[t]`` signs split column ``t`` at its depth
``sign_classification``     prefix-product signs predict every symbol
``index_set_sizes``         ``|I(xi)| == |J(xi)|``
``case1_row``               ``w_xi(t) > t`` forces ``w_xi(t) == k``
==========================  ==================================================
"""

from __future__ import annotations

from .diagram import Diagram, Symbol, build_diagram
from .invariants import index_sets
from .permutation import (
    SYMBOL_CLASS,
    SignClass,
    build_w,
    column_depth,
    column_prefix_product,
    partial_products,
    reflection_product,
    root_sign,
)
from .roots import RegularIdeal, Root, positive_roots, root_sum, succ

CHECK_NAMES = (
    "diagram_partition",
    "live_subalgebra",
    "minus_subalgebra",
    "minus_closed_below",
    "length_equals_dim",
    "reflection_factorization",
    "step_signs",
    "column_signs",
    "sign_classification",
    "index_set_sizes",
    "case1_row",
)


def _sum_closure_failures(roots: frozenset[Root] | set[Root]) -> list[tuple[Root, Root, Root]]:
    bad = []
    for a in roots:
        for b in roots:
            s = root_sum(a, b)
            if s is not None and s not in roots:
                bad.append((a, b, s))
    return sorted(bad)


def check_diagram_partition(d: Diagram) -> list[str]:
    out = []
    counts = {s: len(d.cells(s)) for s in Symbol}
    if counts[Symbol.EMPTY]:
        out.append(f"{counts[Symbol.EMPTY]} cells left empty")
    if set(d.cells(Symbol.BULLET)) != d.ideal.roots:
        out.append("bullets differ from the ideal")
    if counts[Symbol.PLUS] != counts[Symbol.MINUS]:
        out.append(f"|C+|={counts[Symbol.PLUS]} != |C-|={counts[Symbol.MINUS]}")
    if d.index + d.max_orbit_dim != d.dim:
        out.append(f"index {d.index} + orbit dim {d.max_orbit_dim} != dim {d.dim}")
    prev = None
    live = frozenset(d.ideal.live_roots)
    for st in d.steps:
        if prev is not None and not succ(prev, st.cross):
            out.append(f"crosses out of order at step {st.index}")
        prev = st.cross
        k, t = st.cross
        if len(st.plus_set) != len(st.minus_set):
            out.append(f"step {st.index}: unpaired symbols")
        for p, m in zip(st.plus_set, st.minus_set):
            if p.col != t or m != Root(k, p.row):
                out.append(f"step {st.index}: + at {p} not matched by - at ({k},{p.row})")
        before = d.remaining(st.index - 1)
        if st.remaining != before - {st.cross, *st.plus_set, *st.minus_set}:
            out.append(f"step {st.index}: remaining set inconsistent")
    if d.steps and d.steps[-1].remaining:
        out.append("construction ended with empty cells")
    if not d.steps and live:
        out.append("no steps although live roots exist")
    return out


def check_live_subalgebra(d: Diagram) -> list[str]:
    out = []
    for i in range(d.index + 1):
        a_i = d.remaining(i) | d.ideal.roots
        for a, b, s in _sum_closure_failures(a_i)[:1]:
            out.append(f"step {i}: {a}+{b}={s} leaves B_i + M")
    return out


def check_minus_subalgebra(d: Diagram) -> list[str]:
    out = []
    for i in range(1, d.index + 1):
        for a, b, s in _sum_closure_failures(d.d_minus_set(i))[:1]:
            out.append(f"step {i}: {a}+{b}={s} leaves D_i^-")
    return out


def check_minus_closed_below(d: Diagram) -> list[str]:
    """Weaker form of ``check_minus_subalgebra``: sums above ``xi_i`` are ignored."""
    out = []
    for i in range(1, d.index + 1):
        xi = d.step(i).cross
        bad = [f for f in _sum_closure_failures(d.d_minus_set(i)) if succ(xi, f[2])]
        for a, b, s in bad[:1]:
            out.append(f"step {i}: {a}+{b}={s} leaves D_i^-")
    return out


def check_length_equals_dim(d: Diagram) -> list[str]:
    w = build_w(d.ideal)
    if w.inversions() != d.dim:
        return [f"l(w)={w.inversions()} != dim={d.dim}"]
    return []


def check_reflection_factorization(d: Diagram) -> list[str]:
    w = build_w(d.ideal)
    prod = reflection_product(d.crosses, d.n)
    if prod != w:
        return [f"product of reflections {prod} != w {w}"]
    return []


def check_step_signs(d: Diagram) -> list[str]:
    out = []
    ws = partial_products(d.crosses, d.n)
    live = d.ideal.live_roots
    for i in range(1, d.index + 1):
        xi = d.step(i).cross
        below = {r for r in live if succ(xi, r)}
        empty = d.remaining(i)
        dm, dp = d.d_minus_set(i), d.d_plus_set(i)
        if below != (empty & below) | dm | dp or (empty & below) & (dm | dp) or dm & dp:
            out.append(f"step {i}: roots below xi_i do not split into B_i, D_i^-, D_i^+")
        for r in sorted(empty & below):
            for j in range(i + 1):
                if root_sign(ws[j], r) < 0:
                    out.append(f"step {i}: empty {r} sent negative by w_{j}")
        for r in sorted(dm | dp):
            if root_sign(ws[i], r) > 0:
                out.append(f"step {i}: filled {r} sent positive by w_{i}")
    return out


def check_column_signs(d: Diagram) -> list[str]:
    out = []
    for t in range(1, d.n):
        wt = column_prefix_product(d, t)
        depth = column_depth(d.ideal, t)
        for b in range(t + 1, d.n + 1):
            sign = root_sign(wt, Root(b, t))
            expect = 1 if b > depth else -1
            if sign != expect:
                out.append(f"column {t}: w^[t]({b},{t}) has sign {sign}, depth {depth}")
    return out


def check_sign_classification(d: Diagram) -> list[str]:
    out = []
    prefix = [column_prefix_product(d, t) for t in range(d.n + 1)]
    for r in positive_roots(d.n):
        t = r.col
        before, after = root_sign(prefix[t - 1], r), root_sign(prefix[t], r)
        predicted = {
            SignClass.MINUS: before < 0,
            SignClass.BULLET: after > 0,
            SignClass.PLUS_OR_CROSS: before > 0 and after < 0,
        }
        actual = SYMBOL_CLASS.get(d.grid[r])
        for cls, holds in predicted.items():
            if holds != (cls is actual):
                out.append(f"{r}: symbol {d.grid[r].ascii} but {cls.value} criterion is {holds}")
    return out


def check_index_sets(d: Diagram) -> tuple[list[str], list[str]]:
    sizes, case1 = [], []
    for xi in d.crosses:
        sets = index_sets(d, xi)
        if len(sets.I) != len(sets.J):
            sizes.append(f"{xi}: |I|={len(sets.I)} |J|={len(sets.J)}")
        k, t = xi
        if sets.w_xi(t) > t and sets.w_xi(t) != k:
            case1.append(f"{xi}: w_xi(t)={sets.w_xi(t)} != k={k}")
    return sizes, case1


def run_structural_checks(ideal: RegularIdeal | Diagram) -> dict[str, list[str]]:
    d = ideal if isinstance(ideal, Diagram) else build_diagram(ideal)
    sizes, case1 = check_index_sets(d)
    return {
        "diagram_partition": check_diagram_partition(d),
        "live_subalgebra": check_live_subalgebra(d),
        "minus_subalgebra": check_minus_subalgebra(d),
        "minus_closed_below": check_minus_closed_below(d),
        "length_equals_dim": check_length_equals_dim(d),
        "reflection_factorization": check_reflection_factorization(d),
        "step_signs": check_step_signs(d),
        "column_signs": check_column_signs(d),
        "sign_classification": check_sign_classification(d),
        "index_set_sizes": sizes,
        "case1_row": case1,
    }
