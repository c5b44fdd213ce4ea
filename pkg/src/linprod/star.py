"""Star configurations: symbolic powers, alpha invariants and the containment statements."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .arrangement import Arrangement
from .checks import CheckResult, compare_ideals, contained_in, groebner_check, run_check
from .fold import intersect_all
from .groebner import Budget, Ideal, _interreduce_linear, alpha_invariant


def _product(A: Ideal, B: Ideal) -> Ideal:
    return Ideal(A.ring, _interreduce_linear(A * B))


@dataclass
class StarConfig:
    """s properly meeting hyperplanes in P^N and a codimension c."""

    arr: Arrangement
    c: int
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.arr.is_simple():
            raise ValueError("star configurations need distinct hyperplanes")
        if not 1 <= self.c <= self.N:
            raise ValueError(f"codimension {self.c} outside 1..{self.N}")
        if self.s < self.N + 1:
            raise ValueError("need at least N + 1 hyperplanes")
        if not self.arr.meets_properly():
            raise ValueError("hyperplanes do not meet properly")

    @property
    def N(self) -> int:
        return self.arr.k - 1

    @property
    def s(self) -> int:
        return self.arr.s

    def label(self) -> str:
        return f"{self.arr.label()}:c{self.c}"

    def with_codim(self, c: int) -> "StarConfig":
        return StarConfig(self.arr, c)

    def primes(self) -> list[Ideal]:
        ring = self.arr.ring
        return [Ideal(ring, [self.arr.form(i) for i in sub])
                for sub in combinations(range(self.s), self.c)]

    def symbolic_power(self, m: int) -> Ideal:
        if m < 1:
            raise ValueError("need m >= 1")
        key = ("symbolic", m)
        if key not in self._cache:
            self._cache[key] = intersect_all([P ** m for P in self.primes()])
        return self._cache[key]

    def ideal(self) -> Ideal:
        return self.symbolic_power(1)

    def ordinary_power(self, m: int) -> Ideal:
        key = ("ordinary", m)
        if key not in self._cache:
            self._cache[key] = Ideal(self.arr.ring, self.ideal().minimal_gens()) ** m
        return self._cache[key]


def star_ideal(arr: Arrangement, c: int) -> Ideal:
    """Intersection of all c-subset primes; generated in degree s - c + 1."""
    cfg = StarConfig(arr, c)
    I = cfg.ideal()
    degs = {g.degree() for g in I.minimal_gens()}
    if degs != {cfg.s - c + 1}:
        raise AssertionError(f"star ideal generated in degrees {sorted(degs)}")
    return I


def symbolic_power(arr: Arrangement, c: int, m: int) -> Ideal:
    return StarConfig(arr, c).symbolic_power(m)


def alpha_formula(s: int, c: int, m: int) -> int:
    """(q + 1) s - c + r where m = q c + r with 1 <= r <= c."""
    if not (s >= c >= 1 and m >= 1):
        raise ValueError("need s >= c >= 1 and m >= 1")
    q, r = divmod(m - 1, c)
    return (q + 1) * s - c + r + 1


def alpha_check(cfg: StarConfig, m: int, budget: Budget | None = None) -> CheckResult:
    def body():
        observed = alpha_invariant(cfg.symbolic_power(m))
        expected = alpha_formula(cfg.s, cfg.c, m)
        ok = observed == expected
        detail = {"observed": observed, "formula": expected}
        return ok, None if ok else detail, detail
    return run_check("alpha", cfg.label(), {"m": m}, body, budget)


def power_decomposition_rhs(cfg: StarConfig, m: int) -> Ideal:
    ring = cfg.arr.ring
    parts = [cfg.with_codim(i).symbolic_power((i - cfg.c + 1) * m)
             for i in range(cfg.c, cfg.N + 1)]
    parts.append(Ideal.maximal(ring) ** ((cfg.s - cfg.c + 1) * m))
    return intersect_all(parts)


def power_decomposition_check(cfg: StarConfig, m: int, budget: Budget | None = None) -> CheckResult:
    """I^m equals the intersection of higher-codimension symbolic powers and a power of M."""
    def body():
        holds, witness = compare_ideals(cfg.ordinary_power(m), power_decomposition_rhs(cfg, m))
        return holds, witness, {}
    return run_check("power_decomposition", cfg.label(), {"m": m}, body, budget)


def containment_sides(cfg: StarConfig, m: int, which: int) -> tuple[Ideal, Ideal]:
    c = cfg.c
    M = Ideal.maximal(cfg.arr.ring)
    if which == 1:
        return cfg.symbolic_power(m * c), _product(M ** (m * (c - 1)), cfg.ordinary_power(m))
    if which == 2:
        return cfg.symbolic_power(m * c - c + 1), cfg.ordinary_power(m)
    if which == 3:
        return (cfg.symbolic_power(m * c - c + 1),
                _product(M ** ((m - 1) * (c - 1)), cfg.ordinary_power(m)))
    raise ValueError(f"containment {which} is not one of 1, 2, 3")


def containment_check(cfg: StarConfig, m: int, which: int,
                      budget: Budget | None = None) -> CheckResult:
    """Every reduced-basis element of the left side lies in the right side."""
    def body():
        lhs, rhs = containment_sides(cfg, m, which)
        holds, witness = contained_in(Ideal(lhs.ring, lhs.gb().polys), rhs)
        return holds, witness, {}
    return run_check(f"containment_{which}", cfg.label(), {"m": m}, body, budget)


def symbolic_product_check(cfg: StarConfig, m1: int, m2: int,
                           budget: Budget | None = None) -> CheckResult:
    def body():
        lhs = _product(cfg.symbolic_power(m1), cfg.symbolic_power(m2))
        holds, witness = contained_in(lhs, cfg.symbolic_power(m1 + m2))
        return holds, witness, {}
    return run_check("symbolic_product", cfg.label(), {"m1": m1, "m2": m2}, body, budget)


@dataclass(frozen=True)
class InequalityRow:
    N: int
    s: int
    c: int
    t: int
    m: int
    which: int
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs


def inequality_rows(s: int, c: int, N: int, t_range, m_range, which=(4, 5, 6)) -> list[InequalityRow]:
    """Both sides of the alpha-ratio inequalities, exactly, from the alpha formula."""
    if not 1 <= c <= N < s:
        raise ValueError("need 1 <= c <= N < s")
    rows = []
    for t in t_range:
        if t < 1:
            continue
        lhs = Fraction(alpha_formula(s, c, t), t)
        for m in m_range:
            am = alpha_formula(s, c, m)
            for w in which:
                if w == 4:
                    rhs = Fraction(am + c - 1, m + c - 1)
                elif w == 5:
                    rhs = Fraction(am + N - 1, m + N - 1)
                elif w == 6:
                    rhs = Fraction(alpha_formula(s, c, 1) + N - 1, N)
                else:
                    raise ValueError(f"inequality {w} is not one of 4, 5, 6")
                rows.append(InequalityRow(N, s, c, t, m, w, lhs, rhs))
    return rows


def inequality_sweep(s: int, c: int, N: int, t_range=range(1, 11), m_range=range(1, 11),
                     which=(4, 5, 6)) -> dict:
    rows = inequality_rows(s, c, N, t_range, m_range, which)
    bad = [r for r in rows if not r.holds]
    return {"evaluated": len(rows), "violations": [
        {"t": r.t, "m": r.m, "which": r.which, "lhs": str(r.lhs), "rhs": str(r.rhs)} for r in bad]}


def inequality_check(s: int, c: int, N: int, t_range=range(1, 11), m_range=range(1, 11)) -> CheckResult:
    def body():
        rep = inequality_sweep(s, c, N, t_range, m_range)
        bad = rep["violations"]
        return not bad, bad[0] if bad else None, rep
    return run_check("alpha_inequalities", f"N{N}_s{s}:c{c}",
                     {"t": f"1..{max(t_range)}", "m": f"1..{max(m_range)}"}, body)


def sweep_csv(results: list[CheckResult], rows: list[InequalityRow] = ()) -> str:
    """CSV with columns N, s, c, m_or_t, check, holds, lhs, rhs, ms."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["N", "s", "c", "m_or_t", "check", "holds", "lhs", "rhs", "ms"])
    for r in results:
        inp = r.input_id
        N = s = c = ""
        if inp.startswith("star_P"):
            head, _, cc = inp.partition(":c")
            N, s = head[len("star_P"):].split("_s")
            c = cc
        lhs = r.detail.get("observed", "")
        rhs = r.detail.get("formula", "")
        w.writerow([N, s, c, r.params.get("m", ""), r.check, r.verdict, lhs, rhs, f"{r.ms:.1f}"])
    for row in rows:
        w.writerow([row.N, row.s, row.c, f"t={row.t};m={row.m}", f"inequality_{row.which}",
                    "true" if row.holds else "false", str(row.lhs), str(row.rhs), "0.0"])
    return buf.getvalue()


def star_grid(Ns=(2, 3), s_max=5):
    """(N, s, c) cells of the acceptance grid: s in N+1..s_max, c in 2..N."""
    for N in Ns:
        for s in range(N + 1, s_max + 1):
            for c in range(2, N + 1):
                yield N, s, c


def run_star_cell(cfg: StarConfig, alpha_ms=range(1, 5), ideal_ms=range(1, 3),
                  budget: Budget | None = None, t_range=range(1, 11)) -> list[CheckResult]:
    """Alpha for alpha_ms; decomposition and containments for ideal_ms; inequalities on t_range^2."""
    out = [alpha_check(cfg, m, budget) for m in alpha_ms]
    for m in ideal_ms:
        out.append(power_decomposition_check(cfg, m, budget))
        out.append(groebner_check(cfg.symbolic_power(m), cfg.label(), {"m": m}, budget))
        for which in (1, 2, 3):
            out.append(containment_check(cfg, m, which, budget))
    out.append(inequality_check(cfg.s, cfg.c, cfg.N, t_range, t_range))
    return out
