"""Verification suites over the catalog (or user arrangements) and their configuration."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from . import catalog
from .arrangement import Arrangement, parse_arrangement
from .checks import CheckResult, groebner_check, run_check
from .fold import (colon_claim, expansion_identity, fold_ideal, linear_powers_check,
                   saturation_identity, verify_decomposition)
from .groebner import Budget, Ideal
from .rees import (ReesContext, consistency_checks, fiber_ideal, mu_result, rees_ideal,
                   verify_theorem_34, verify_theorem_35)
from .resolution import free_resolution, minimize_resolution
from .star import StarConfig, alpha_check, run_star_cell, star_grid

log = logging.getLogger(__name__)

SUITES = ("decomposition", "resolution", "powers", "rees", "star", "all")
REES_DEFAULT = ("generic4", "near_pencil4")
SLOW_REES = ("generic5",)


def parse_grid(text: str | None) -> tuple[int, ...] | None:
    """'all' or None -> None; '1..3' -> (1, 2, 3); '1,4' -> (1, 4); '2' -> (2,)."""
    if text is None or text.strip() == "all":
        return None
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise ValueError(f"empty range {part!r}")
            out.extend(range(lo_i, hi_i + 1))
        else:
            out.append(int(part))
    if not out:
        raise ValueError(f"empty grid {text!r}")
    return tuple(sorted(set(out)))


@dataclass
class RunConfig:
    suite: str = "all"
    catalog: tuple[str, ...] | None = None
    input: str | None = None
    a: tuple[int, ...] | None = None
    e: tuple[int, ...] | None = None
    c: tuple[int, ...] | None = None
    m: tuple[int, ...] | None = None
    t: tuple[int, ...] | None = None
    N: tuple[int, ...] | None = None
    s: tuple[int, ...] | None = None
    budget_pairs: int | None = None
    budget_ms: float | None = None
    with_generic5: bool = False
    verbosity: int = 0
    out: str | None = None
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        for name in ("budget_pairs", "budget_ms"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"{name} must be positive")

    def budget(self) -> Budget | None:
        if self.budget_pairs is None and self.budget_ms is None:
            return None
        return Budget(self.budget_pairs, self.budget_ms)

    def arrangements(self, default: list[Arrangement]) -> list[Arrangement]:
        if self.input is not None:
            return [parse_arrangement(self.input)]
        if self.catalog:
            return [catalog.get(name) for name in self.catalog]
        return default


def _pick(grid, default):
    return list(default) if grid is None else [v for v in grid]


# -- suites ----------------------------------------------------------------

def decomposition_suite(cfg: RunConfig) -> list[CheckResult]:
    """Primary decompositions plus the colon, saturation and expansion identities."""
    out = []
    budget = cfg.budget()
    for arr in cfg.arrangements(catalog.decomposition_catalog(6)):
        for a in _pick(cfg.a, range(1, arr.n + 1)):
            if not 1 <= a <= arr.n:
                continue
            out.append(verify_decomposition(arr, a, budget))
            out.append(groebner_check(fold_ideal(arr, a), arr.label(), {"a": a}, budget))
            out.append(saturation_identity(arr, a, budget))
            for i in range(arr.s):
                out.append(colon_claim(arr, a, i, budget))
                out.append(expansion_identity(arr, a, i, budget))
    return out


def resolution_checks(I: Ideal, input_id: str, params: dict, expected_reg: int | None,
                      budget: Budget | None = None) -> list[CheckResult]:
    """Linearity and regularity, plus the engine self-checks on the same resolution."""
    state = {}

    def compute():
        if "res" not in state:
            state["res"] = free_resolution(I)
            state["min"] = minimize_resolution(state["res"])
        return state["res"], state["min"]

    def linear():
        _, mres = compute()
        table = mres.betti_table()
        reg = table.regularity()
        ok = table.is_linear() and (expected_reg is None or reg == expected_reg)
        detail = {"betti": table.as_dict(), "regularity": reg, "linear": table.is_linear(),
                  "diagram": table.diagram()}
        wit = None if ok else {"regularity": reg, "expected": expected_reg,
                               "linear": table.is_linear()}
        return ok, wit, detail

    def complex_():
        res, mres = compute()
        ok = res.is_complex() and mres.is_complex()
        ok = ok and all(s.degrees_consistent() for s in mres.steps)
        return ok, None if ok else {"reason": "d o d != 0 or inconsistent degrees"}, {}

    def euler():
        _, mres = compute()
        table = mres.betti_table()
        upto = table.regularity() + 2
        ok = table.hilbert_series_check(I.ring, I, upto)
        return ok, None if ok else {"reason": "Hilbert function mismatch"}, {"up_to_degree": upto}

    def idempotent():
        _, mres = compute()
        again = minimize_resolution(mres)
        ok = again.betti_table() == mres.betti_table()
        return ok, None if ok else {"reason": "second minimization changed the table"}, {}

    return [groebner_check(I, input_id, params, budget),
            run_check("linear_resolution", input_id, params, linear, budget),
            run_check("resolution_complex", input_id, params, complex_, budget),
            run_check("euler_characteristic", input_id, params, euler, budget),
            run_check("minimize_idempotent", input_id, params, idempotent, budget)]


def resolution_suite(cfg: RunConfig) -> list[CheckResult]:
    out = []
    for arr in cfg.arrangements(catalog.decomposition_catalog(5)):
        for a in _pick(cfg.a, range(1, arr.n + 1)):
            if 1 <= a <= arr.n:
                out.extend(resolution_checks(fold_ideal(arr, a), arr.label(), {"a": a},
                                             a - 1, cfg.budget()))
    return out


def _powers_default() -> list[Arrangement]:
    return [a for a in (catalog.get(n) for n in catalog.names()) if a.k == 3 and a.s == 4]


def powers_suite(cfg: RunConfig) -> list[CheckResult]:
    """I_a^e against I_{ea} of the e-fold replication, and the regularity of I_a^e."""
    out = []
    budget = cfg.budget()
    for arr in cfg.arrangements(_powers_default()):
        for a in _pick(cfg.a, (2, 3)):
            if not 1 <= a <= arr.n:
                continue
            for e in _pick(cfg.e, (1, 2)):
                out.append(linear_powers_check(arr, a, e, budget))
                for c in resolution_checks(fold_ideal(arr, a) ** e, arr.label(),
                                           {"a": a, "e": e}, e * a - 1, budget):
                    c.check = "power_" + c.check
                    out.append(c)
    return out


def rees_suite(cfg: RunConfig) -> list[CheckResult]:
    names = list(REES_DEFAULT) + (list(SLOW_REES) if cfg.with_generic5 else [])
    arrs = cfg.arrangements([catalog.get(n) for n in names])
    out = []
    budget = cfg.budget()
    for arr in arrs:
        out.append(mu_result(arr))
        out.append(verify_theorem_34(arr, budget))
        out.append(verify_theorem_35(arr, budget))
        out.extend(consistency_checks(arr, budget))
        ctx = ReesContext(arr)
        out.append(groebner_check(lambda ctx=ctx: rees_ideal(ctx), arr.label(), {"ideal": "rees"}, budget))
        out.append(groebner_check(lambda ctx=ctx: fiber_ideal(ctx), arr.label(), {"ideal": "fiber"}, budget))
    return out


def star_suite(cfg: RunConfig) -> list[CheckResult]:
    out = []
    budget = cfg.budget()
    Ns = _pick(cfg.N, (2, 3))
    cells = []
    if cfg.input is not None or cfg.catalog:
        for arr in cfg.arrangements([]):
            for c in _pick(cfg.c, range(2, arr.k)):
                cells.append(StarConfig(arr, c))
    else:
        for N, s, c in star_grid(Ns, 5 if cfg.s is None else max(cfg.s)):
            if cfg.s is not None and s not in cfg.s:
                continue
            if cfg.c is not None and c not in cfg.c:
                continue
            cells.append(StarConfig(catalog.star_support(N, s), c))
        if cfg.c is not None:
            # codimensions outside the default 2..N (e.g. c = 1) on request
            for N in Ns:
                for s in _pick(cfg.s, range(N + 1, 6)):
                    for c in cfg.c:
                        if c < 2 and 1 <= c <= N and s >= N + 1:
                            cells.append(StarConfig(catalog.star_support(N, s), c))
    alpha_ms = _pick(cfg.m, range(1, 5))
    ideal_ms = [m for m in alpha_ms if m <= 2] if cfg.m is None else list(cfg.m)
    t_range = _pick(cfg.t, range(1, 11))
    for cell in cells:
        out.extend(run_star_cell(cell, alpha_ms, ideal_ms, budget, t_range=t_range))
    return out


_RUNNERS = {"decomposition": decomposition_suite, "resolution": resolution_suite,
            "powers": powers_suite, "rees": rees_suite, "star": star_suite}


def run_suite(cfg: RunConfig) -> list[CheckResult]:
    names = [s for s in SUITES if s != "all"] if cfg.suite == "all" else [cfg.suite]
    out = []
    for name in names:
        log.info("running suite %s", name)
        out.extend(_RUNNERS[name](cfg))
    return out


def alpha_checks(cfg: RunConfig) -> list[CheckResult]:
    out = []
    for N in _pick(cfg.N, (2,)):
        for s in _pick(cfg.s, (N + 1,)):
            for c in _pick(cfg.c, (min(2, N),)):
                star = StarConfig(catalog.star_support(N, s), c)
                out.extend(alpha_check(star, m, cfg.budget()) for m in _pick(cfg.m, (1,)))
    return out
