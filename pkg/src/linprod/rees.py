"""Presentation ideals of I_{s-2} for line arrangements and their generator families."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .arrangement import Arrangement
from .checks import CheckResult, compare_ideals, contained_in, run_check
from .fold import fold_ideal
from .groebner import Budget, Ideal, eliminate, graded_piece_dim
from .linalg import LinearSpan
from .poly import Polynomial, Ring, block_order

TAGS = ("I", "II", "III", "IV")


@dataclass
class FamilyElement:
    poly: Polynomial
    name: str
    provenance: dict


@dataclass
class GeneratorFamily:
    tag: str
    elements: list[FamilyElement] = field(default_factory=list)

    @property
    def polys(self) -> list[Polynomial]:
        return [e.poly for e in self.elements]

    def __len__(self):
        return len(self.elements)


class ReesContext:
    """T = K[x, y, z, t_i_j] bigraded with deg x = (1, 0) and deg t = (0, 1).

    Pair labels (i, j) are 1-based with i < j, matching the usual t_{i,j} notation.
    """

    def __init__(self, arr: Arrangement):
        if arr.k != 3:
            raise ValueError("Rees computations need a line arrangement (three variables)")
        if not arr.is_simple():
            raise ValueError("Rees computations need distinct lines (multiplicities 1)")
        if arr.rank != 3:
            raise ValueError("Rees computations need a rank-3 arrangement")
        if arr.s < 4:
            raise ValueError("Rees computations need at least four lines")
        self.arr = arr
        self.s = arr.s
        self.pairs = list(combinations(range(1, self.s + 1), 2))
        xs = arr.ring.names
        tnames = [f"t{i}_{j}" for i, j in self.pairs]
        self.T = Ring(tuple(xs) + tuple(tnames), x_block=xs)
        self.K = Ring(tnames)
        self.t_index = {p: 3 + n for n, p in enumerate(self.pairs)}
        self.fs = f_products(arr)

    def t(self, i: int, j: int) -> Polynomial:
        i, j = min(i, j), max(i, j)
        return self.T.gens()[self.t_index[(i, j)]]

    def ell(self, i: int) -> Polynomial:
        """The i-th line (1-based) as an element of T."""
        f = self.arr.form(i - 1)
        return f.map_exponents(self.T, lambda e: e + (0,) * len(self.pairs))

    def f(self, i: int, j: int) -> Polynomial:
        return self.fs[self.pairs.index((min(i, j), max(i, j)))]

    def substitute(self, g: Polynomial) -> Polynomial:
        """Image in R under t_i_j -> f_i_j (x, y, z fixed)."""
        R = self.arr.ring
        images = list(R.gens()) + self.fs
        return g.subs(images, R)

    def to_fiber_ring(self, g: Polynomial) -> Polynomial:
        if any(any(e[:3]) for e in g.terms):
            raise ValueError(f"{g} involves x, y or z")
        return g.map_exponents(self.K, lambda e: e[3:])

    def from_fiber_ring(self, g: Polynomial) -> Polynomial:
        return g.map_exponents(self.T, lambda e: (0, 0, 0) + e)


def f_products(arr: Arrangement) -> list[Polynomial]:
    """Products of all lines but two, in lexicographic pair order."""
    if not arr.is_simple():
        raise ValueError("f products need distinct lines")
    forms = [arr.form(i) for i in range(arr.s)]
    out = []
    for i, j in combinations(range(arr.s), 2):
        p = arr.ring.one()
        for k, f in enumerate(forms):
            if k not in (i, j):
                p = p * f
        out.append(p)
    return out


def _relabel(quad):
    """Map positions 1..4 of the pattern onto the actual (1-based) indices."""
    return {n + 1: q + 1 for n, q in enumerate(quad)}


def family(ctx: ReesContext, tag: str) -> GeneratorFamily:
    if tag not in TAGS:
        raise ValueError(f"unknown family {tag!r}")
    arr, t, ell = ctx.arr, ctx.t, ctx.ell
    fam = GeneratorFamily(tag)

    def push(poly, name, **prov):
        if poly:
            fam.elements.append(FamilyElement(poly, name, prov))

    if tag == "I":
        for circ in arr.circuits(3):
            if circ.size != 3:
                continue
            i1, i2, i3 = (i + 1 for i in circ.indices)
            c1, c2, c3 = circ.coeffs
            push(c1 * t(i2, i3) + c2 * t(i1, i3) + c3 * t(i1, i2),
                 f"L_{i1},{i2},{i3}", indices=[i1, i2, i3], coeffs=list(circ.coeffs))
    elif tag == "II":
        for a, b, c in combinations(range(1, ctx.s + 1), 3):
            lab = f"{a},{b},{c}"
            push(ell(a) * t(a, b) - ell(c) * t(b, c), f"A_{lab}", indices=[a, b, c])
            push(ell(a) * t(a, c) - ell(b) * t(b, c), f"B_{lab}", indices=[a, b, c])
            push(ell(b) * t(a, b) - ell(c) * t(a, c), f"C_{lab}", indices=[a, b, c])
    elif tag == "III":
        for a, b, c, d in combinations(range(1, ctx.s + 1), 4):
            lab = f"{a},{b},{c},{d}"
            push(t(a, b) * t(c, d) - t(a, c) * t(b, d), f"Q1_{lab}", indices=[a, b, c, d])
            push(t(a, b) * t(c, d) - t(a, d) * t(b, c), f"Q2_{lab}", indices=[a, b, c, d])
    else:
        for quad in arr.dependent_quadruples():
            j = _relabel(quad.indices)
            d1, d2, d3, d4 = quad.coeffs
            lab = ",".join(str(j[n]) for n in range(1, 5))
            prov = {"indices": [j[n] for n in range(1, 5)], "coeffs": list(quad.coeffs)}

            def T(p, q):
                return t(j[p], j[q])
            push(d1 * T(1, 2) * T(3, 4) + d2 * T(1, 3) * T(1, 4)
                 + d3 * T(1, 2) * T(1, 4) + d4 * T(1, 2) * T(1, 3), f"P1_{lab}", **prov)
            push(d1 * T(2, 3) * T(2, 4) + d2 * T(1, 2) * T(3, 4)
                 + d3 * T(1, 2) * T(2, 4) + d4 * T(1, 2) * T(2, 3), f"P2_{lab}", **prov)
            push(d1 * T(2, 3) * T(3, 4) + d2 * T(1, 3) * T(3, 4)
                 + d3 * T(1, 2) * T(3, 4) + d4 * T(1, 3) * T(2, 3), f"P3_{lab}", **prov)
            push(d1 * T(2, 4) * T(3, 4) + d2 * T(1, 4) * T(3, 4)
                 + d3 * T(1, 4) * T(2, 4) + d4 * T(1, 2) * T(3, 4), f"P4_{lab}", **prov)
            for k in range(1, ctx.s + 1):
                if k in prov["indices"]:
                    continue
                tk = lambda p: t(j[p], k)  # noqa: E731
                push(d1 * T(2, 3) * tk(4) + d2 * T(1, 3) * tk(4)
                     + d3 * T(1, 2) * tk(4) + d4 * T(1, 2) * tk(3),
                     f"R{k}_{lab}", k=k, **prov)
    return fam


def families(ctx: ReesContext) -> dict[str, GeneratorFamily]:
    return {tag: family(ctx, tag) for tag in TAGS}


def substitution_failures(ctx: ReesContext, fams: dict[str, GeneratorFamily]) -> list[str]:
    """Names of family elements that do not vanish under t_i_j -> f_i_j."""
    return [e.name for fam in fams.values() for e in fam.elements if ctx.substitute(e.poly)]


def _substitution_witness(bad):
    return {"element": bad[0], "reason": "does not vanish under t_i_j -> f_i_j"} if bad else None


def rees_ideal(ctx: ReesContext, budget: Budget | None = None) -> Ideal:
    """Kernel of t_i_j -> w f_i_j, with w eliminated under w >> (x,y,z) >> t."""
    s = ctx.s
    npairs = len(ctx.pairs)
    aux = Ring(("w",) + ctx.T.names, (0, 1, 1, 1) + (s - 2,) * npairs)
    w = aux.gens()[0]
    gens = []
    for n, f in enumerate(ctx.fs):
        fe = f.map_exponents(aux, lambda e: (0,) + e + (0,) * npairs)
        gens.append(aux.gens()[4 + n] - w * fe)
    order = block_order((0,), (1, 2, 3))
    J = eliminate(Ideal(aux, gens), [0], budget=budget, order=order)
    return Ideal(ctx.T, [g.map_exponents(ctx.T, tuple) for g in J.gens])


def fiber_ideal(ctx: ReesContext, budget: Budget | None = None) -> Ideal:
    """Kernel of the K-algebra map K[t] -> R, t_i_j -> f_i_j, by eliminating x, y, z."""
    s = ctx.s
    npairs = len(ctx.pairs)
    aux = Ring(ctx.T.names, (1, 1, 1) + (s - 2,) * npairs)
    gens = []
    for n, f in enumerate(ctx.fs):
        fe = f.map_exponents(aux, lambda e: e + (0,) * npairs)
        gens.append(aux.gens()[3 + n] - fe)
    J = eliminate(Ideal(aux, gens), [0, 1, 2], budget=budget)
    return Ideal(ctx.K, [g.map_exponents(ctx.K, tuple) for g in J.gens])


def bidegree_histogram(polys) -> dict[str, int]:
    hist = Counter()
    for g in polys:
        info = g.degree_info()
        hist[info["bidegree"]] += 1
    return {f"({u},{v})": c for (u, v), c in sorted(hist.items())}


def fiber_candidate(ctx: ReesContext, fams) -> Ideal:
    gens = fams["I"].polys + fams["III"].polys + fams["IV"].polys
    return Ideal(ctx.K, [ctx.to_fiber_ring(g) for g in gens])


def rees_candidate(ctx: ReesContext, fams) -> Ideal:
    fib = [ctx.from_fiber_ring(g) for g in fiber_candidate(ctx, fams).gens]
    return Ideal(ctx.T, fams["I"].polys + fams["II"].polys + fib)


def verify_theorem_34(arr: Arrangement, budget: Budget | None = None) -> CheckResult:
    """The fiber ideal is generated by the families I, III and IV."""
    def body():
        ctx = ReesContext(arr)
        fams = families(ctx)
        bad = substitution_failures(ctx, fams)
        if bad:
            return False, _substitution_witness(bad), {"substitution_failures": bad}
        cand = fiber_candidate(ctx, fams)
        fib = fiber_ideal(ctx)
        holds, witness = compare_ideals(fib, cand)
        mins = fib.minimal_gens()
        detail = {"family_sizes": {t: len(f) for t, f in fams.items()},
                  "candidate_generators": len(cand.gens),
                  "kernel_minimal_generators": len(mins),
                  "kernel_bidegrees": bidegree_histogram([ctx.from_fiber_ring(g) for g in mins])}
        return holds, witness, detail
    return run_check("fiber_generators", arr.label(), {}, body, budget)


def verify_theorem_35(arr: Arrangement, budget: Budget | None = None) -> CheckResult:
    """The presentation ideal is generated by families I, II plus the fiber families."""
    def body():
        ctx = ReesContext(arr)
        fams = families(ctx)
        bad = substitution_failures(ctx, fams)
        if bad:
            return False, _substitution_witness(bad), {"substitution_failures": bad}
        cand = rees_candidate(ctx, fams)
        rees = rees_ideal(ctx)
        holds, witness = compare_ideals(rees, cand)
        mins = rees.minimal_gens()
        high = [str(g) for g in mins if g.degree_info()["bidegree"][0] >= 2]
        detail = {"family_sizes": {t: len(f) for t, f in fams.items()},
                  "candidate_generators": len(cand.gens),
                  "kernel_minimal_generators": len(mins),
                  "kernel_bidegrees": bidegree_histogram(mins),
                  "x_degree_at_least_2": high}
        if holds and high:
            holds, witness = False, {"poly": high[0], "in": "lhs",
                                     "reason": "minimal generator of x-degree >= 2"}
        return holds, witness, detail
    return run_check("fiber_type", arr.label(), {}, body, budget)


def consistency_checks(arr: Arrangement, budget: Budget | None = None) -> list[CheckResult]:
    """Family containment, fiber = rees cap K[t], and the linear-slice dimension."""
    ctx = ReesContext(arr)
    fams = families(ctx)
    out = []

    def vanishing():
        bad = substitution_failures(ctx, fams)
        return not bad, _substitution_witness(bad), {"elements": sum(map(len, fams.values()))}
    out.append(run_check("family_vanishing", arr.label(), {}, vanishing, budget))

    def containment():
        rees = rees_ideal(ctx)
        holds, witness = contained_in(Ideal(ctx.T, fams["I"].polys + fams["II"].polys), rees)
        if holds:
            holds, witness = contained_in(fiber_candidate(ctx, fams), fiber_ideal(ctx))
        return holds, witness, {}
    out.append(run_check("family_containment", arr.label(), {}, containment, budget))

    def elimination():
        rees = rees_ideal(ctx)
        t_only = [ctx.to_fiber_ring(g) for g in rees.gens if not any(any(e[:3]) for e in g.terms)]
        holds, witness = compare_ideals(fiber_ideal(ctx), Ideal(ctx.K, t_only))
        return holds, witness, {}
    out.append(run_check("fiber_is_rees_t_part", arr.label(), {}, elimination, budget))

    def linear_slice():
        fib = fiber_ideal(ctx)
        observed = graded_piece_dim(fib, 1)
        span = LinearSpan(ctx.K.nvars)
        expected = sum(1 for g in fams["I"].polys if span.add(ctx.to_fiber_ring(g)))
        ok = observed == expected
        detail = {"observed": observed, "type_I_rank": expected}
        return ok, None if ok else detail, detail
    out.append(run_check("fiber_linear_slice", arr.label(), {}, linear_slice, budget))
    return out


def mu_formula(arr: Arrangement) -> int:
    return comb(arr.s, 2) - sum(comb(p.multiplicity - 1, 2) for p in arr.singular_points())


def mu_check(arr: Arrangement) -> dict:
    """Minimal generator count of I_{s-2} against the singular-point formula."""
    a = arr.s - 2
    observed = graded_piece_dim(fold_ideal(arr, a), a)
    formula = mu_formula(arr)
    return {"observed": observed, "formula": formula, "match": observed == formula}


def mu_result(arr: Arrangement) -> CheckResult:
    def body():
        r = mu_check(arr)
        return r["match"], None if r["match"] else r, r
    return run_check("mu_formula", arr.label(), {}, body)
