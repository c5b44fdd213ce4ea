"""Ideals generated by a-fold products of linear forms and their structural identities."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .arrangement import Arrangement, LinearPrime
from .checks import CheckResult, compare_ideals, contained_in, run_check, witness
from .groebner import Budget, Ideal, intersect, quotient, saturate
from .poly import Polynomial, Ring


def _count_vectors(mults, a):
    """Exponent vectors c with 0 <= c_i <= m_i and sum c = a."""
    if not mults:
        if a == 0:
            yield ()
        return
    head, rest = mults[0], mults[1:]
    cap = sum(rest)
    for c in range(min(head, a), -1, -1):
        if a - c <= cap:
            for tail in _count_vectors(rest, a - c):
                yield (c,) + tail


def standard_generators(arr: Arrangement | None, a: int, ring: Ring | None = None) -> list[Polynomial]:
    """Distinct a-fold products of the multiset ({1} for a <= 0, [] for a > n)."""
    ring = ring or arr.ring
    if a <= 0:
        return [ring.one()]
    if arr is None or a > arr.n:
        return []
    forms = [arr.form(i) for i in range(arr.s)]
    out = []
    for counts in _count_vectors(list(arr.mults), a):
        p = ring.one()
        for f, c in zip(forms, counts):
            if c:
                p = p * f ** c
        out.append(p)
    return out


def fold_ideal(arr: Arrangement | None, a: int, ring: Ring | None = None) -> Ideal:
    ring = ring or arr.ring
    return Ideal(ring, standard_generators(arr, a, ring))


@dataclass(frozen=True)
class PrimaryComponent:
    prime: LinearPrime
    exponent: int

    def ideal(self, ring: Ring) -> Ideal:
        return self.prime.ideal(ring) ** self.exponent

    def as_dict(self, ring: Ring) -> dict:
        return {"basis": [str(ring.linear(b)) for b in self.prime.basis],
                "exponent": self.exponent}


def primary_decomposition(arr: Arrangement, a: int) -> list[PrimaryComponent]:
    """One component p^(a - n + nu(p)) per linear prime with positive exponent."""
    if not 1 <= a <= arr.n:
        raise ValueError("need 1 <= a <= n")
    out = []
    for P in arr.gamma():
        e = a - arr.n + arr.nu(P)
        if e >= 1:
            out.append(PrimaryComponent(P, e))
    return out


def intersect_all(ideals: list[Ideal], budget: Budget | None = None) -> Ideal:
    """Pairwise (balanced) intersection of a nonempty list."""
    work = list(ideals)
    while len(work) > 1:
        nxt = []
        for i in range(0, len(work) - 1, 2):
            nxt.append(intersect(work[i], work[i + 1], budget))
        if len(work) % 2:
            nxt.append(work[-1])
        work = nxt
    return work[0]


def decomposition_ideal(arr: Arrangement, a: int) -> Ideal:
    comps = primary_decomposition(arr, a)
    if not comps:
        return Ideal.unit(arr.ring)
    return intersect_all([c.ideal(arr.ring) for c in comps])


def verify_decomposition(arr: Arrangement, a: int, budget: Budget | None = None) -> CheckResult:
    """I_a(arr) equals the intersection of its predicted primary components."""
    def body():
        comps = primary_decomposition(arr, a)
        lhs = fold_ideal(arr, a)
        rhs = decomposition_ideal(arr, a)
        holds, witness = compare_ideals(lhs, rhs)
        detail = {"components": [c.as_dict(arr.ring) for c in comps]}
        if arr.rank < arr.k:
            detail["rank_deficient"] = True
        return holds, witness, detail
    return run_check("decomposition", arr.label(), {"a": a}, body, budget)


def colon_claim(arr: Arrangement, a: int, i: int, budget: Budget | None = None) -> CheckResult:
    """I_a(arr) : l_i equals I_{a-1} of arr with one copy of l_i removed."""
    if not 0 <= i < arr.s:
        raise ValueError(f"support index {i} not in the arrangement")
    if a < 1:
        raise ValueError("need a >= 1")

    def body():
        lhs = quotient(fold_ideal(arr, a), arr.form(i))
        rhs = fold_ideal(arr.remove_one(i), a - 1, arr.ring)
        if rhs.is_zero():
            return lhs.is_zero(), None if lhs.is_zero() else witness(lhs.gens[0]), {}
        holds, witness = compare_ideals(lhs, rhs)
        return holds, witness, {}
    return run_check("colon_claim", arr.label(), {"a": a, "form": str(arr.form(i))}, body, budget)


def saturation_identity(arr: Arrangement, a: int, budget: Budget | None = None) -> CheckResult:
    """I = sat(I, m) cap m^a for I = I_a(arr)."""
    def body():
        ring = arr.ring
        I = fold_ideal(arr, a)
        m = Ideal.maximal(ring)
        sat = saturate(I, m)
        rhs = intersect(sat, m ** a)
        holds, witness = compare_ideals(I, rhs)
        return holds, witness, {"saturation": [str(g) for g in sat.minimal_gens()]}
    return run_check("saturation_identity", arr.label(), {"a": a}, body, budget)


def expansion_terms(arr: Arrangement, a: int, i: int) -> list[Ideal]:
    """The ideals l^j * I_{a-j}(arr without l) for j = 0..min(m, a)."""
    ring = arr.ring
    rest = arr.remove_all(i)
    ell = arr.form(i)
    out = []
    for j in range(min(arr.mults[i], a) + 1):
        inner = fold_ideal(rest, a - j, ring)
        out.append(Ideal(ring, [ell ** j * g for g in inner.gens]))
    return out


def expansion_identity(arr: Arrangement, a: int, i: int, budget: Budget | None = None) -> CheckResult:
    """I_a(arr) = sum over j of l_i^j I_{a-j}(arr minus every copy of l_i)."""
    def body():
        terms = expansion_terms(arr, a, i)
        rhs = Ideal(arr.ring, [g for t in terms for g in t.gens])
        holds, witness = compare_ideals(fold_ideal(arr, a), rhs)
        return holds, witness, {}
    return run_check("expansion_identity", arr.label(), {"a": a, "form": str(arr.form(i))},
                     body, budget)


def nesting_chain(arr: Arrangement, a: int, i: int) -> bool:
    """I_{a-m}(rest) contains I_{a-m+1}(rest) ... contains I_a(rest), rest = arr without l_i."""
    rest = arr.remove_all(i)
    ring = arr.ring
    m = arr.mults[i]
    chain = [fold_ideal(rest, b, ring) for b in range(a - m, a + 1)]
    return all(contained_in(chain[j + 1], chain[j])[0] for j in range(len(chain) - 1))


def replicate(arr: Arrangement, e: int) -> Arrangement:
    return arr.replicate(e)


def linear_powers_check(arr: Arrangement, a: int, e: int, budget: Budget | None = None) -> CheckResult:
    """I_a(arr)^e equals I_{ea}(arr replicated e times)."""
    def body():
        lhs = fold_ideal(arr, a) ** e
        rhs = fold_ideal(arr.replicate(e), e * a, arr.ring)
        holds, witness = compare_ideals(lhs, rhs)
        return holds, witness, {}
    return run_check("linear_powers", arr.label(), {"a": a, "e": e}, body, budget)
