"""Three-valued check records shared by every verification routine."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from .groebner import Budget, BudgetExceeded, GBStats, GLOBAL_STATS, Ideal, budget_scope


@dataclass
class CheckResult:
    check: str
    input_id: str
    params: dict
    holds: bool | None  # None = inconclusive (budget exhausted)
    witness: dict | str | None = None
    detail: dict = field(default_factory=dict)
    ms: float = 0.0
    gb_stats: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return {True: "true", False: "false", None: "inconclusive"}[self.holds]

    def __bool__(self):
        return self.holds is True

    def sort_key(self):
        return (self.check, self.input_id, sorted((k, str(v)) for k, v in self.params.items()))

    def as_dict(self) -> dict:
        return {"check": self.check, "input": self.input_id, "params": self.params,
                "verdict": self.verdict, "witness": self.witness, "detail": self.detail,
                "timing": {"ms": round(self.ms, 3), "gb": self.gb_stats}}


def witness(poly, side: str = "lhs") -> dict:
    """A polynomial lying in `side` of a failed identity but not in the other side."""
    return {"poly": str(poly), "in": side}


def compare_ideals(lhs: Ideal, rhs: Ideal) -> tuple[bool, dict | None]:
    """Equality, with a generator of one side outside the other as witness."""
    for g in lhs.gens:
        if not rhs.contains(g):
            return False, witness(g, "lhs")
    for g in rhs.gens:
        if not lhs.contains(g):
            return False, witness(g, "rhs")
    return True, None


def contained_in(lhs: Ideal, rhs: Ideal) -> tuple[bool, dict | None]:
    for g in lhs.gens:
        if not rhs.contains(g):
            return False, witness(g, "lhs")
    return True, None


def run_check(check: str, input_id: str, params: dict,
              body: Callable[[], tuple[bool, Any, dict]],
              budget: Budget | None = None) -> CheckResult:
    """Run body under a budget; BudgetExceeded becomes an inconclusive verdict."""
    before = GBStats()
    before.absorb(GLOBAL_STATS)
    t0 = time.perf_counter()
    try:
        with budget_scope(budget):
            holds, witness, detail = body()
    except BudgetExceeded as exc:
        holds, witness, detail = None, None, {"budget": exc.reason}
    ms = (time.perf_counter() - t0) * 1000
    gb = {"pairs": GLOBAL_STATS.pairs - before.pairs,
          "reductions": GLOBAL_STATS.reductions - before.reductions}
    return CheckResult(check, input_id, params, holds, witness, detail or {}, ms, gb)


def groebner_check(I: Ideal | Callable[[], Ideal], input_id: str, params: dict, budget: Budget | None = None,
                   check: str = "groebner_criterion") -> CheckResult:
    """Engine self-check: the cached basis is reduced and every S-pair reduces to zero.

    `I` may be a zero-argument callable so that building the ideal also runs under the budget.
    """
    def body():
        ideal = I() if callable(I) else I
        G = ideal.gb()
        ok = G.s_pairs_reduce_to_zero() and G.is_reduced()
        ok = ok and all(G.contains(g) for g in ideal.gens)
        detail = {"basis_size": len(G)}
        return ok, None if ok else {"reason": "basis fails Buchberger's criterion"}, detail
    return run_check(check, input_id, params, body, budget)
