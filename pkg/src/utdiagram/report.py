"""JSON-ready reports for one ideal.

Every report is a plain dict of JSON types (lists, not tuples) so that
``json.loads(json.dumps(r)) == r``.  Reports are deterministic functions of
the ideal, the selected families and the oracle parameters.
"""

from __future__ import annotations

from .checks import run_structural_checks
from .diagram import Diagram, build_diagram
from .invariants import all_candidates
from .permutation import build_w
from .poisson import (
    DEFAULT_PRIME,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    generic_rank_oracle,
    is_invariant,
    jacobian_rank,
)
from .roots import RegularIdeal, Root

SCHEMA = "v1"
FAMILIES = ("theorems", "oracle", "conjecture")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_THEOREM = 3
EXIT_COUNTEREXAMPLE = 4


def _pair(r: Root) -> list[int]:
    return [r.row, r.col]


def ideal_payload(ideal: RegularIdeal) -> dict:
    return {
        "n": ideal.n,
        "ideal": [_pair(r) for r in ideal.sorted_roots()],
        "thresholds": list(ideal.thresholds),
    }


def diagram_payload(d: Diagram) -> dict:
    return {
        "rows": d.render(ascii=True).split("\n"),
        "steps": [
            {
                "index": st.index,
                "cross": _pair(st.cross),
                "plus": [_pair(r) for r in st.plus_set],
                "minus": [_pair(r) for r in st.minus_set],
            }
            for st in d.steps
        ],
    }


def conjecture_section(d: Diagram, trials: int, prime: int, seed: int) -> dict:
    """Candidates with invariance verdicts, Jacobian rank and counterexamples."""
    ideal = d.ideal
    cands = all_candidates(d)
    entries, counterexamples = [], []
    base = {"ideal": ideal_payload(ideal), "seed": seed}
    for c in cands:
        entry = {
            "xi": _pair(c.xi),
            "case": c.case_tag,
            "I": list(c.I),
            "J": list(c.J),
            "lambda_degree": c.lambda_degree,
            "poly": str(c.p),
            "anomaly": c.anomaly,
        }
        if not c.p:
            entry["invariant"] = False
            counterexamples.append(
                {**base, "kind": "zero_candidate", "xi": _pair(c.xi),
                 "witness_root": None, "bracket_poly_string": None, "detail": c.anomaly}
            )
        else:
            verdict = is_invariant(c.p, ideal)
            entry["invariant"] = verdict.invariant
            if not verdict:
                counterexamples.append(
                    {**base, "kind": "not_invariant", "xi": _pair(c.xi),
                     "witness_root": _pair(verdict.witness),
                     "bracket_poly_string": str(verdict.bracket)}
                )
        if c.quotient is not None:
            entry["quotient"] = str(c.quotient)
            entry["divisors"] = [_pair(r) for r in c.divisors]
            entry["quotient_invariant"] = is_invariant(c.quotient, ideal).invariant
            entry["note"] = (
                "highest coefficient is divisible by the candidates at "
                + ", ".join(str(r) for r in c.divisors)
                + "; quotient is the reduced form"
            )
        entries.append(entry)
    jr = jacobian_rank([c.p for c in cands if c.p], trials, prime, seed)
    if jr != len(cands):
        counterexamples.append(
            {**base, "kind": "jacobian_rank", "xi": None, "witness_root": None,
             "bracket_poly_string": None, "detail": f"rank {jr} < {len(cands)} candidates"}
        )
    return {"candidates": entries, "jacobian_rank": jr, "counterexamples": counterexamples}


def build_report(
    ideal: RegularIdeal,
    families: tuple[str, ...] = FAMILIES,
    trials: int = DEFAULT_TRIALS,
    prime: int = DEFAULT_PRIME,
    seed: int = DEFAULT_SEED,
) -> dict:
    d = build_diagram(ideal)
    w = build_w(ideal)
    report = {
        "schema": SCHEMA,
        "families": [f for f in FAMILIES if f in families],
        "input": ideal_payload(ideal),
        "diagram": diagram_payload(d),
        "stats": d.stats(),
        "permutation": {
            "one_line": list(w.one_line),
            "inversions": w.inversions(),
            "reflection_word": [_pair(r) for r in d.crosses],
        },
    }
    if "theorems" in families:
        report["theorem_checks"] = {
            name: {"pass": not fails, "failures": fails}
            for name, fails in run_structural_checks(d).items()
        }
    if "oracle" in families:
        o = generic_rank_oracle(ideal, trials, prime, seed)
        report["oracle"] = {
            **o.as_dict(),
            "agrees": o.generic_rank == d.max_orbit_dim and o.index_estimate == d.index,
        }
    if "conjecture" in families:
        report.update(conjecture_section(d, trials, prime, seed))
    return report


def theorem_failures(report: dict) -> list[str]:
    """Names of failed structural checks, plus ``oracle`` on a rank mismatch."""
    failed = [k for k, v in report.get("theorem_checks", {}).items() if not v["pass"]]
    if "oracle" in report and not report["oracle"]["agrees"]:
        failed.append("oracle")
    return failed


def exit_status(reports: list[dict]) -> int:
    if any(theorem_failures(r) for r in reports):
        return EXIT_THEOREM
    if any(r.get("counterexamples") for r in reports):
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK
