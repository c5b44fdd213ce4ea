"""Buchberger's algorithm and the ideal toolbox built on it."""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from gmpy2 import mpq

from .linalg import LinearSpan
from .poly import (DEGREVLEX, MonomialOrder, Polynomial, Ring, elimination_order,
                   UndefinedDegree)

SATURATION_CAP = 64


class BudgetExceeded(RuntimeError):
    """A Groebner computation ran past its pair or time budget."""

    def __init__(self, stats: "GBStats", reason: str):
        self.stats = stats
        self.reason = reason
        super().__init__(f"budget exceeded ({reason}): {stats.as_dict()}")


@dataclass
class Budget:
    max_pairs: int | None = None
    max_ms: float | None = None


@dataclass
class GBStats:
    pairs: int = 0
    reductions: int = 0
    zero_reductions: int = 0
    pruned: int = 0
    basis_size: int = 0
    ms: float = 0.0

    def as_dict(self):
        return {"pairs": self.pairs, "reductions": self.reductions,
                "zero_reductions": self.zero_reductions, "pruned": self.pruned,
                "basis_size": self.basis_size, "ms": round(self.ms, 3)}

    def absorb(self, other: "GBStats"):
        self.pairs += other.pairs
        self.reductions += other.reductions
        self.zero_reductions += other.zero_reductions
        self.pruned += other.pruned
        self.ms += other.ms


# running totals, read by the report layer
GLOBAL_STATS = GBStats()
_budget_stack: list[tuple[Budget, float]] = []


class budget_scope:
    """Context manager applying a budget to every GB computed inside it."""

    def __init__(self, budget: Budget | None):
        self.budget = budget

    def __enter__(self):
        _budget_stack.append((self.budget or Budget(), time.perf_counter()))
        return self

    def __exit__(self, *exc):
        _budget_stack.pop()
        return False


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def _sub_scaled(p: dict, c, shift, g: dict):
    """p -= c * x^shift * g, in place."""
    for ge, gc in g.items():
        t = tuple(a + b for a, b in zip(ge, shift))
        v = p.get(t)
        if v is None:
            p[t] = -c * gc
        else:
            v -= c * gc
            if v:
                p[t] = v
            else:
                del p[t]


def _normal_form(p: dict, basis: list[dict], lts: list[tuple], kget, stats=None,
                 full=True) -> dict:
    """Reduce the term dict p modulo monic basis elements; returns the remainder."""
    p = dict(p)
    rem = {}
    while p:
        e = max(p, key=kget)
        for g, le in zip(basis, lts):
            if _divides(le, e):
                c = p[e]
                _sub_scaled(p, c, tuple(a - b for a, b in zip(e, le)), g)
                if stats is not None:
                    stats.reductions += 1
                break
        else:
            if not full:
                rem.update(p)
                return rem
            rem[e] = p.pop(e)
    return rem


def _monic(p: dict, kget):
    e = max(p, key=kget)
    inv = 1 / p[e]
    return {k: v * inv for k, v in p.items()}, e


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX,
               budget: Budget | None = None, stats: GBStats | None = None,
               module_slots: Sequence[int] | None = None) -> "GroebnerBasis":
    """Reduced Groebner basis via Buchberger with sugar selection and Gebauer-Moeller pruning.

    With ``module_slots`` the listed variables act as one-hot basis vectors of a free
    module: every input term must carry exactly one of them and S-pairs are formed only
    between elements whose leading terms share the slot.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    ring = gens[0].ring
    weights = ring.weights
    kget = order.keyfunc(ring.nvars).__getitem__
    stats = stats if stats is not None else GBStats()
    t0 = time.perf_counter()
    budgets = list(_budget_stack)
    if budget is not None:
        budgets.append((budget, t0))

    def wdeg(e):
        return sum(w * x for w, x in zip(weights, e))

    polys: list[dict] = []
    lts: list[tuple] = []
    sugar: list[int] = []
    active: list[int] = []
    pairs: list = []
    counter = 0

    def check_budget():
        now = time.perf_counter()
        for b, start in budgets:
            if b.max_pairs is not None and stats.pairs > b.max_pairs:
                stats.ms = (now - t0) * 1000
                raise BudgetExceeded(stats, "pairs")
            if b.max_ms is not None and (now - start) * 1000 > b.max_ms:
                stats.ms = (now - t0) * 1000
                raise BudgetExceeded(stats, "time")

    def add(h: dict, sug: int):
        nonlocal pairs, counter, active
        h, lh = _monic(h, kget)
        hi = len(polys)
        polys.append(h)
        lts.append(lh)
        sugar.append(sug)
        # Gebauer-Moeller update
        cand = list(active)
        keep = []
        while cand:
            g1 = cand.pop()
            l1 = _lcm(lh, lts[g1])
            if _coprime(lh, lts[g1]) or (
                    not any(_divides(_lcm(lh, lts[g2]), l1) for g2 in cand)
                    and not any(_divides(_lcm(lh, lts[g2]), l1) for g2 in keep)):
                keep.append(g1)
            else:
                stats.pruned += 1
        new_pairs = [g for g in keep if not _coprime(lh, lts[g])]
        if module_slots:
            new_pairs = [g for g in new_pairs
                         if sum(_lcm(lh, lts[g])[i] for i in module_slots) == 1]
        stats.pruned += len(keep) - len(new_pairs)
        old = []
        for item in pairs:
            _, _, _, i, j, lij = item
            if (_divides(lh, lij) and _lcm(lts[i], lh) != lij and _lcm(lts[j], lh) != lij):
                stats.pruned += 1
                continue
            old.append(item)
        for g in new_pairs:
            l = _lcm(lh, lts[g])
            s = max(sugar[g] + wdeg(l) - wdeg(lts[g]), sug + wdeg(l) - wdeg(lh))
            counter += 1
            old.append((s, kget(l), counter, g, hi, l))
        heapq.heapify(old)
        pairs = old
        active = [g for g in active if not _divides(lh, lts[g])] + [hi]

    key0 = order.keyfunc(ring.nvars)
    for g in sorted(gens, key=lambda f: key0[max(f.terms, key=kget)]):
        nf = _normal_form(g.terms, [polys[i] for i in active], [lts[i] for i in active], kget, stats)
        if nf:
            add(nf, max(wdeg(e) for e in g.terms))

    while pairs:
        s, _, _, i, j, l = heapq.heappop(pairs)
        stats.pairs += 1
        check_budget()
        sp = {}
        for idx, sign in ((i, 1), (j, -1)):
            shift = tuple(a - b for a, b in zip(l, lts[idx]))
            _sub_scaled(sp, -sign, shift, polys[idx])
        sp.pop(l, None)
        sp = {k: v for k, v in sp.items() if v}
        basis = [polys[a] for a in active]
        nf = _normal_form(sp, basis, [lts[a] for a in active], kget, stats) if sp else {}
        if nf:
            add(nf, s)
        else:
            stats.zero_reductions += 1

    # minimalise and interreduce
    final = [a for a in active
             if not any(b != a and _divides(lts[b], lts[a]) and (lts[b] != lts[a] or b < a)
                        for b in active)]
    final.sort(key=lambda a: kget(lts[a]))
    reduced = []
    for a in final:
        others = [polys[b] for b in final if b != a]
        olts = [lts[b] for b in final if b != a]
        nf = _normal_form(polys[a], others, olts, kget)
        reduced.append(_monic(nf, kget)[0])
    stats.basis_size = len(reduced)
    stats.ms = (time.perf_counter() - t0) * 1000
    GLOBAL_STATS.absorb(stats)
    return GroebnerBasis(ring, [Polynomial(ring, r) for r in reduced], order, stats)


class GroebnerBasis:
    """A reduced Groebner basis: monic polynomials sorted by ascending leading term."""

    def __init__(self, ring: Ring, polys: list[Polynomial], order: MonomialOrder,
                 stats: GBStats | None = None):
        self.ring = ring
        self.polys = polys
        self.order = order
        self.stats = stats or GBStats()
        self._kget = order.keyfunc(ring.nvars).__getitem__
        self.lts = [max(p.terms, key=self._kget) for p in polys]

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def reduce(self, f: Polynomial) -> Polynomial:
        return Polynomial(self.ring, _normal_form(f.terms, [p.terms for p in self.polys],
                                                  self.lts, self._kget))

    def contains(self, f: Polynomial) -> bool:
        if not f:
            return True
        if not self.polys:
            return False
        return not _normal_form(f.terms, [p.terms for p in self.polys], self.lts,
                                self._kget, full=False)

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant()

    def s_pairs_reduce_to_zero(self) -> bool:
        """Buchberger's criterion checked on every pair."""
        terms = [p.terms for p in self.polys]
        for i, j in combinations(range(len(terms)), 2):
            l = _lcm(self.lts[i], self.lts[j])
            sp = {}
            _sub_scaled(sp, -1, tuple(a - b for a, b in zip(l, self.lts[i])), terms[i])
            _sub_scaled(sp, 1, tuple(a - b for a, b in zip(l, self.lts[j])), terms[j])
            sp = {k: v for k, v in sp.items() if v}
            if sp and _normal_form(sp, terms, self.lts, self._kget, full=False):
                return False
        return True

    def is_reduced(self) -> bool:
        for i, p in enumerate(self.polys):
            if p.terms[self.lts[i]] != 1:
                return False
            for j, le in enumerate(self.lts):
                if j != i and any(_divides(le, e) for e in p.terms):
                    return False
        return True


def reduce(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Normal form of f modulo the list G (full multivariate division)."""
    G = [g for g in G if g]
    if not G:
        return f
    kget = order.keyfunc(f.ring.nvars).__getitem__
    monics = [_monic(g.terms, kget) for g in G]
    return Polynomial(f.ring, _normal_form(f.terms, [m for m, _ in monics],
                                           [e for _, e in monics], kget))


# -- ideals -----------------------------------------------------------------

class Ideal:
    """An ideal given by generators; reduced bases are cached per monomial order."""

    def __init__(self, ring: Ring, gens: Iterable[Polynomial] = ()):
        self.ring = ring
        seen = set()
        out = []
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g and g not in seen:
                seen.add(g)
                out.append(g)
        self.gens = out
        self._gb: dict[MonomialOrder, GroebnerBasis] = {}

    @classmethod
    def unit(cls, ring: Ring) -> "Ideal":
        return cls(ring, [ring.one()])

    @classmethod
    def maximal(cls, ring: Ring) -> "Ideal":
        return cls(ring, ring.gens())

    def __repr__(self):
        shown = ", ".join(str(g) for g in self.gens[:6])
        more = ", ..." if len(self.gens) > 6 else ""
        return f"Ideal<{shown}{more}>"

    def is_zero(self) -> bool:
        return not self.gens

    def gb(self, order: MonomialOrder | None = None, budget: Budget | None = None) -> GroebnerBasis:
        order = order or DEGREVLEX
        basis = self._gb.get(order)
        if basis is None:
            if not self.gens:
                basis = GroebnerBasis(self.ring, [], order)
            else:
                basis = buchberger(self.gens, order, budget)
            self._gb[order] = basis
        return basis

    def is_unit(self) -> bool:
        if any(g.is_constant() for g in self.gens):
            return True
        return bool(self.gens) and self.gb().is_unit()

    def contains(self, f: Polynomial) -> bool:
        return self.gb().contains(f)

    __contains__ = contains

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def reduce(self, f: Polynomial) -> Polynomial:
        return self.gb().reduce(f)

    def minimal_gens(self) -> list[Polynomial]:
        """A minimal generating set when homogeneous (else the reduced basis)."""
        polys = self.gb().polys
        if not self.is_homogeneous():
            return polys
        kept: list[Polynomial] = []
        for g in sorted(polys, key=lambda f: f.degree()):
            if not graded_contains(g, kept):
                kept.append(g)
        return kept

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    # -- sum / product / power
    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, [f * g for f in self.gens for g in other.gens])

    def __pow__(self, e: int) -> "Ideal":
        if e < 0:
            raise ValueError("negative exponent")
        result = Ideal.unit(self.ring)
        for _ in range(e):
            result = Ideal(self.ring, _interreduce_linear(result * self))
        return result

    def intersect(self, other: "Ideal") -> "Ideal":
        return intersect(self, other)

    def quotient(self, g) -> "Ideal":
        if isinstance(g, Ideal):
            return quotient_ideal(self, g)
        return quotient(self, g)

    def saturate(self, J: "Ideal") -> "Ideal":
        return saturate(self, J)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = None


def _interreduce_linear(I: Ideal) -> list[Polynomial]:
    """Drop generators lying in the K-span of the others when all are homogeneous of one degree."""
    degs = {g.degree() for g in I.gens} if I.gens else set()
    if len(degs) != 1 or not all(g.is_homogeneous() for g in I.gens):
        return I.gens
    span = LinearSpan(I.ring.nvars)
    return [g for g in I.gens if span.add(g)]


def membership(f: Polynomial, I: Ideal) -> bool:
    return I.contains(f)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """Mutual containment of generators (equal reduced bases)."""
    if I.ring != J.ring:
        return False
    if I.is_zero() or J.is_zero():
        return I.is_zero() and J.is_zero()
    return I.contains_ideal(J) and J.contains_ideal(I)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return I + J


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    return I * J


def ideal_power(I: Ideal, e: int) -> Ideal:
    return I ** e


def eliminate(I: Ideal, front: Iterable, keep_ring: bool = False,
              budget: Budget | None = None, order: MonomialOrder | None = None) -> Ideal:
    """Generators of I intersected with the subring free of the front variables."""
    ring = I.ring
    idx = sorted({ring.index[v] if isinstance(v, str) else v for v in front})
    if not idx:
        return I
    if I.is_zero():
        return I if keep_ring else Ideal(_subring(ring, idx), [])
    order = order or elimination_order(idx)
    G = I.gb(order, budget)
    kept = [p for p in G.polys if not (p.variables() & set(idx))]
    if keep_ring:
        return Ideal(ring, kept)
    sub = _subring(ring, idx)
    rest = [i for i in range(ring.nvars) if i not in idx]
    return Ideal(sub, [p.map_exponents(sub, lambda e: tuple(e[i] for i in rest)) for p in kept])


def _subring(ring: Ring, drop: Sequence[int]) -> Ring:
    rest = [i for i in range(ring.nvars) if i not in drop]
    xb = None
    if ring.x_block is not None:
        xb = [ring.names[i] for i in ring.x_block if i not in drop]
    return Ring([ring.names[i] for i in rest], [ring.weights[i] for i in rest], x_block=xb)


def _fresh_name(ring: Ring, base: str) -> str:
    name = base
    while name in ring.index:
        name += "_"
    return name


def embed(f: Polynomial, ring: Ring, offset: int) -> Polynomial:
    """Embed f into a ring that has `offset` extra variables in front."""
    pad = (0,) * offset
    extra = ring.nvars - offset - f.ring.nvars
    tail = (0,) * extra
    return f.map_exponents(ring, lambda e: pad + e + tail)


def intersect(I: Ideal, J: Ideal, budget: Budget | None = None) -> Ideal:
    """I cap J as the u-free part of u*I + (1-u)*J."""
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    u = _fresh_name(ring, "u")
    big = ring.extend(front=[u], front_weights=[0])
    uvar = big.var(0)
    gens = [uvar * embed(f, big, 1) for f in I.gens]
    gens += [(1 - uvar) * embed(g, big, 1) for g in J.gens]
    elim = eliminate(Ideal(big, gens), [0], budget=budget)
    return Ideal(ring, [Polynomial(ring, g.terms) for g in elim.gens])


def quotient(I: Ideal, g: Polynomial, budget: Budget | None = None) -> Ideal:
    """I : g computed as (I cap <g>) / g."""
    if not g:
        raise ValueError("quotient by zero")
    ring = I.ring
    if g.is_constant():
        return I
    cap = intersect(I, Ideal(ring, [g]), budget)
    return Ideal(ring, [h.exact_div(g) for h in cap.gens])


def quotient_ideal(I: Ideal, J: Ideal, budget: Budget | None = None) -> Ideal:
    """I : J as the intersection of I : g over generators g of J."""
    if J.is_zero():
        return Ideal.unit(I.ring)
    result = None
    for g in J.gens:
        q = quotient(I, g, budget)
        result = q if result is None else intersect(result, q, budget)
    return result


class SaturationCapExceeded(RuntimeError):
    pass


def saturate(I: Ideal, J: Ideal, budget: Budget | None = None,
             cap: int = SATURATION_CAP) -> Ideal:
    """Iterate I -> I : J until the chain stabilises."""
    if J.is_zero():
        raise ValueError("saturation by the zero ideal")
    current = I
    for _ in range(cap):
        nxt = quotient_ideal(current, J, budget)
        if current.contains_ideal(nxt):
            return current
        current = nxt
    raise SaturationCapExceeded(f"no stabilisation after {cap} colon steps")


def graded_piece_dim(I: Ideal, d: int) -> int:
    """dim_K of the degree-d part, by exact linear algebra on monomial multiples."""
    if not I.is_homogeneous():
        raise ValueError("graded pieces need a homogeneous ideal")
    ring = I.ring
    span = LinearSpan(ring.nvars)
    total = len(ring.monomials_of_degree(d)) if d >= 0 else 0
    for g in I.gens:
        dg = g.degree()
        if dg > d:
            continue
        for m in ring.monomials_of_degree(d - dg):
            span.add(g.mul_term(m, mpq(1)))
            if len(span) == total:
                return total
    return len(span)


def alpha_invariant(I: Ideal) -> int:
    """Least degree of a nonzero element (least degree in the reduced basis)."""
    if I.is_zero():
        raise UndefinedDegree("alpha of the zero ideal is undefined")
    if not I.is_homogeneous():
        raise ValueError("alpha needs a homogeneous ideal")
    return min(g.degree() for g in I.gb().polys)


def graded_contains(f: Polynomial, gens: Sequence[Polynomial]) -> bool:
    """Membership of a homogeneous f in <gens> by linear algebra in degree deg(f)."""
    if not f:
        return True
    d = f.degree()
    ring = f.ring
    span = LinearSpan(ring.nvars)
    for g in gens:
        dg = g.degree()
        if dg > d:
            continue
        for m in ring.monomials_of_degree(d - dg):
            span.add(g.mul_term(m, mpq(1)))
    return span.contains(f)


def hilbert_function(I: Ideal, d: int) -> int:
    """dim_K (R/I)_d counted through standard monomials of the degrevlex basis."""
    ring = I.ring
    mons = ring.monomials_of_degree(d)
    if I.is_zero():
        return len(mons)
    lts = I.gb().lts
    return sum(1 for m in mons if not any(_divides(le, m) for le in lts))
