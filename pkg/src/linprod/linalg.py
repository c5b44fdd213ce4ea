"""Exact linear algebra over Q: echelon spans of polynomials and dense matrices."""

from __future__ import annotations

from typing import Sequence

from gmpy2 import mpq

from .poly import DEGREVLEX, MonomialOrder, Polynomial, scalar


class LinearSpan:
    """Incremental echelon basis of a K-span of polynomials (pivot = leading monomial)."""

    def __init__(self, nvars: int, order: MonomialOrder = DEGREVLEX):
        self.key = order.keyfunc(nvars).__getitem__
        self.pivots: dict[tuple, dict] = {}

    def _reduce(self, terms: dict) -> dict:
        p = dict(terms)
        done = {}
        while p:
            e = max(p, key=self.key)
            row = self.pivots.get(e)
            if row is None:
                done[e] = p.pop(e)
                continue
            c = p[e]
            for re, rc in row.items():
                v = p.get(re, 0) - c * rc
                if v:
                    p[re] = v
                else:
                    p.pop(re, None)
        return done

    def add(self, f) -> bool:
        """Insert f; return True if it enlarged the span."""
        terms = f.terms if isinstance(f, Polynomial) else f
        r = self._reduce(terms)
        if not r:
            return False
        e = max(r, key=self.key)
        c = r[e]
        self.pivots[e] = {k: v / c for k, v in r.items()}
        return True

    def contains(self, f) -> bool:
        terms = f.terms if isinstance(f, Polynomial) else f
        return not self._reduce(terms)

    def __len__(self):
        return len(self.pivots)


def rref(rows: Sequence[Sequence]) -> tuple[list[list[mpq]], list[int]]:
    """Reduced row echelon form and pivot columns of a dense rational matrix."""
    m = [[scalar(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> list[list[mpq]]:
    """Basis of {v : A v = 0}, one vector per free column."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [mpq(0)] * ncols
        v[fc] = mpq(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis
