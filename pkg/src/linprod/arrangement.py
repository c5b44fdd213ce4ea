"""Collections of linear forms with multiplicities and their matroid data."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import gcd
from typing import Sequence

from gmpy2 import mpq

from .groebner import Ideal
from .linalg import nullspace, rank as matrix_rank, rref
from .poly import Polynomial, Ring, scalar

log = logging.getLogger(__name__)

LinearForm = tuple  # primitive integer coefficient vector, first nonzero entry positive


def canonicalize(coeffs: Sequence) -> LinearForm:
    """Primitive integer representative of the line through a nonzero rational vector."""
    q = [scalar(c) for c in coeffs]
    if not any(q):
        raise ValueError("zero vector is not a linear form")
    den = 1
    for c in q:
        d = int(c.denominator)
        den = den * d // gcd(den, d)
    ints = [int(c * den) for c in q]
    g = 0
    for v in ints:
        g = gcd(g, v)
    ints = [v // g for v in ints]
    if next(v for v in ints if v) < 0:
        ints = [-v for v in ints]
    return tuple(ints)


@dataclass(frozen=True)
class LinearPrime:
    """Prime generated by a subset of the support; `members` is its closure in the support."""

    members: frozenset
    basis: tuple
    height: int

    def ideal(self, ring: Ring) -> Ideal:
        return Ideal(ring, [ring.linear(b) for b in self.basis])

    def label(self, arr: "Arrangement") -> str:
        return "<" + ", ".join(str(arr.ring.linear(b)) for b in self.basis) + ">"


@dataclass(frozen=True)
class Circuit:
    """Support indices (0-based, increasing) and a canonical dependency vector."""

    indices: tuple
    coeffs: tuple

    @property
    def size(self):
        return len(self.indices)


@dataclass(frozen=True)
class SingularPoint:
    point: tuple
    lines: tuple

    @property
    def multiplicity(self):
        return len(self.lines)


class Arrangement:
    """A multiset of linear forms: canonical support plus multiplicities."""

    def __init__(self, ring: Ring, support: Sequence, mults: Sequence[int] | None = None,
                 name: str | None = None):
        self.ring = ring
        self.name = name
        self.warnings: list[str] = []
        mults = list(mults) if mults is not None else [1] * len(support)
        if len(mults) != len(support):
            raise ValueError("one multiplicity per form")
        forms: list[LinearForm] = []
        counts: list[int] = []
        for raw, m in zip(support, mults):
            if len(raw) != ring.nvars:
                raise ValueError(f"form {raw} has {len(raw)} coefficients, ring has {ring.nvars}")
            if m < 1:
                raise ValueError("multiplicities must be positive")
            f = canonicalize(raw)
            if f in forms:
                i = forms.index(f)
                counts[i] += m
                msg = f"proportional form {[str(scalar(c)) for c in raw]} merged into {list(f)}"
                self.warnings.append(msg)
                log.warning(msg)
            else:
                forms.append(f)
                counts.append(m)
        if not forms:
            raise ValueError("empty arrangement")
        self.support: tuple = tuple(forms)
        self.mults: tuple = tuple(counts)

    @classmethod
    def from_strings(cls, ring: Ring, forms: Sequence[str], name=None) -> "Arrangement":
        """Build from linear-form strings; repeated or proportional entries add multiplicity."""
        vecs = []
        for s in forms:
            p = ring.parse(s)
            if not p or any(sum(e) != 1 for e in p.terms):
                raise ValueError(f"{s!r} is not a nonzero linear form")
            v = [0] * ring.nvars
            for e, c in p.terms.items():
                v[e.index(1)] = c
            vecs.append(v)
        return cls(ring, vecs, name=name)

    def __repr__(self):
        body = ", ".join(f"{self.ring.linear(f)}" + (f"^{m}" if m > 1 else "")
                         for f, m in zip(self.support, self.mults))
        return f"Arrangement({body})"

    def label(self) -> str:
        return self.name or repr(self)

    @property
    def k(self) -> int:
        return self.ring.nvars

    @property
    def s(self) -> int:
        return len(self.support)

    @property
    def n(self) -> int:
        return sum(self.mults)

    def form(self, i: int) -> Polynomial:
        return self.ring.linear(self.support[i])

    def forms(self) -> list[Polynomial]:
        """The full multiset, each support form repeated by its multiplicity."""
        return [self.form(i) for i, m in enumerate(self.mults) for _ in range(m)]

    def multiset_indices(self) -> list[int]:
        return [i for i, m in enumerate(self.mults) for _ in range(m)]

    def is_simple(self) -> bool:
        return all(m == 1 for m in self.mults)

    def rank_of(self, idx) -> int:
        idx = list(idx)
        if not idx:
            return 0
        return matrix_rank([self.support[i] for i in idx])

    @cached_property
    def rank(self) -> int:
        return self.rank_of(range(self.s))

    def with_multiplicities(self, mults, name=None) -> "Arrangement":
        return Arrangement(self.ring, self.support, mults, name=name)

    def remove_one(self, i: int) -> "Arrangement | None":
        """Drop one copy of support form i (None if nothing is left)."""
        mults = list(self.mults)
        mults[i] -= 1
        keep = [(f, m) for f, m in zip(self.support, mults) if m]
        if not keep:
            return None
        return Arrangement(self.ring, [f for f, _ in keep], [m for _, m in keep])

    def remove_all(self, i: int) -> "Arrangement | None":
        keep = [(f, m) for j, (f, m) in enumerate(zip(self.support, self.mults)) if j != i]
        if not keep:
            return None
        return Arrangement(self.ring, [f for f, _ in keep], [m for _, m in keep])

    def replicate(self, e: int) -> "Arrangement":
        """Every multiplicity multiplied by e."""
        if e < 1:
            raise ValueError("replication factor must be >= 1")
        name = f"{self.name}({e})" if self.name else None
        return Arrangement(self.ring, self.support, [m * e for m in self.mults], name=name)

    # -- matroid data
    def closure_of(self, idx) -> frozenset:
        """Support indices lying in the span of the given support indices."""
        idx = list(idx)
        r = self.rank_of(idx)
        return frozenset(j for j in range(self.s)
                         if j in idx or self.rank_of(idx + [j]) == r)

    def prime_of(self, idx) -> LinearPrime:
        members = self.closure_of(idx)
        rows, _ = rref([self.support[i] for i in sorted(members)])
        basis = tuple(canonicalize(r) for r in rows)
        return LinearPrime(members, basis, len(basis))

    def gamma(self) -> list[LinearPrime]:
        """All linear primes spanned by subsets of the support (ascending height)."""
        seen = {}
        for size in range(1, self.s + 1):
            for sub in combinations(range(self.s), size):
                if self.rank_of(sub) != size:
                    continue
                members = self.closure_of(sub)
                if members not in seen:
                    seen[members] = self.prime_of(sub)
        return sorted(seen.values(), key=lambda p: (p.height, sorted(p.members)))

    def nu(self, P: LinearPrime) -> int:
        return sum(self.mults[i] for i in P.members)

    def closure_nu(self, P) -> tuple[list[Polynomial], int]:
        """cl(P) as a multiset of forms and its size.  P is a LinearPrime or an Ideal."""
        if isinstance(P, LinearPrime):
            members = P.members
        else:
            members = {i for i in range(self.s) if P.contains(self.form(i))}
        cl = [self.form(i) for i in sorted(members) for _ in range(self.mults[i])]
        return cl, len(cl)

    def lemma21_predicate(self, P, a: int) -> bool:
        """True iff at least n - a + 1 members of the multiset lie in P."""
        if not 1 <= a <= self.n:
            raise ValueError("need 1 <= a <= n")
        return self.closure_nu(P)[1] >= self.n - a + 1

    def circuits(self, max_size: int = 4) -> list[Circuit]:
        """Minimal dependent subsets of the support with canonical dependency vectors."""
        if max_size > 4:
            raise ValueError("circuits are enumerated up to size 4")
        out = []
        for size in range(2, max_size + 1):
            for sub in combinations(range(self.s), size):
                if self.rank_of(sub) != size - 1:
                    continue
                if any(self.rank_of(t) < size - 1 for t in combinations(sub, size - 1)):
                    continue
                out.append(Circuit(sub, self._kernel(sub)[0]))
        return out

    def dependent_quadruples(self) -> list[Circuit]:
        """Every dependent 4-subset with each canonical kernel basis vector."""
        out = []
        for sub in combinations(range(self.s), 4):
            if self.rank_of(sub) < 4:
                for vec in self._kernel(sub):
                    out.append(Circuit(sub, vec))
        return out

    def _kernel(self, sub) -> list[tuple]:
        cols = [self.support[i] for i in sub]
        rows = [[cols[j][r] for j in range(len(cols))] for r in range(self.k)]
        return [canonicalize(v) for v in nullspace(rows, len(cols))]

    def singular_points(self) -> list[SingularPoint]:
        """Intersection points of a simple rank-3 line arrangement with incident lines."""
        if self.k != 3:
            raise ValueError("singular points need three variables")
        if self.rank != 3:
            raise ValueError("singular points need a rank-3 arrangement")
        if not self.is_simple():
            raise ValueError("singular points need multiplicity-free input")
        pts = {}
        for i, j in combinations(range(self.s), 2):
            a, b = self.support[i], self.support[j]
            cross = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                     a[0] * b[1] - a[1] * b[0])
            p = canonicalize(cross)
            if p not in pts:
                pts[p] = tuple(r for r in range(self.s)
                               if sum(x * y for x, y in zip(self.support[r], p)) == 0)
        return [SingularPoint(p, lines) for p, lines in sorted(pts.items(), key=lambda t: t[1])]

    def meets_properly(self, up_to: int | None = None) -> bool:
        """Every j-subset (j <= up_to) has rank min(j, k)."""
        if not self.is_simple():
            raise ValueError("meets_properly needs multiplicity-free input")
        top = self.s if up_to is None else min(up_to, self.s)
        return all(self.rank_of(sub) == min(j, self.k)
                   for j in range(1, top + 1) for sub in combinations(range(self.s), j))

    # -- serialisation
    def to_json(self) -> dict:
        return {"vars": list(self.ring.names),
                "forms": [{"coeffs": list(f), "mult": m} for f, m in zip(self.support, self.mults)]}


def parse_arrangement(source) -> Arrangement:
    """Arrangement from a JSON string, dict or path (proportional forms are merged)."""
    from .poly import ParseError
    if isinstance(source, dict):
        data = source
    else:
        text = source
        if not str(source).lstrip().startswith("{"):
            with open(source) as fh:
                text = fh.read()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"malformed arrangement JSON: {exc.msg}", line=exc.lineno,
                             column=exc.colno) from exc
    try:
        names = data["vars"]
        forms = data["forms"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"arrangement JSON needs 'vars' and 'forms' ({exc})") from exc
    ring = Ring(names)
    coeffs, mults = [], []
    for f in forms:
        c = f["coeffs"]
        if len(c) != len(names):
            raise ValueError(f"dimension mismatch: {c} against variables {names}")
        coeffs.append([scalar(x) if not isinstance(x, str) else mpq(x) for x in c])
        mults.append(int(f.get("mult", 1)))
    return Arrangement(ring, coeffs, mults, name=data.get("name"))
