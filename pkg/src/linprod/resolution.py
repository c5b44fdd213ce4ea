"""Graded free resolutions (Schreyer frames), minimisation, Betti tables, regularity."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from gmpy2 import mpq

from .groebner import Ideal, buchberger, hilbert_function
from .linalg import LinearSpan
from .poly import DEGREVLEX, Polynomial, Ring, _KeyCache, _drl


class ResolutionError(RuntimeError):
    """A resolution exceeded the Hilbert syzygy bound (an internal bug)."""


class NotEquigenerated(ValueError):
    """Linearity asked of an ideal whose minimal generators have mixed degrees."""


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _add_term(vec: dict, key, c):
    v = vec.get(key, 0) + c
    if v:
        vec[key] = v
    else:
        vec.pop(key, None)


@dataclass
class ResolutionStep:
    """d: F_i -> F_{i-1}; matrix[r][c] maps source basis c into target basis r."""

    source: list[int]
    target: list[int]
    matrix: list[list[Polynomial]]

    def degrees_consistent(self) -> bool:
        for r, row in enumerate(self.matrix):
            for c, entry in enumerate(row):
                if entry and (not entry.is_homogeneous()
                              or entry.degree() != self.source[c] - self.target[r]):
                    return False
        return True


@dataclass
class Resolution:
    ring: Ring
    steps: list[ResolutionStep]

    @property
    def length(self) -> int:
        return len(self.steps)

    def twists(self) -> list[list[int]]:
        if not self.steps:
            return [[0]]
        return [self.steps[0].target] + [s.source for s in self.steps]

    def is_complex(self) -> bool:
        """Every composition of consecutive maps is exactly zero."""
        for lo, hi in zip(self.steps, self.steps[1:]):
            A, B = lo.matrix, hi.matrix
            for r in range(len(A)):
                for c in range(len(hi.source)):
                    acc = self.ring.zero()
                    for k in range(len(lo.source)):
                        if A[r][k] and B[k][c]:
                            acc = acc + A[r][k] * B[k][c]
                    if acc:
                        return False
        return True

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def betti_table(self) -> "BettiTable":
        """Betti numbers of I itself: F_1 of R/I becomes homological index 0."""
        data = {}
        for i, step in enumerate(self.steps):
            for j in step.source:
                data[(i, j)] = data.get((i, j), 0) + 1
        return BettiTable(data)


@dataclass
class BettiTable:
    """Graded Betti numbers of an ideal I: (i, j) -> rank of R(-j) in F_i, F_0 = generators.

    The table of R/I is the same one shifted by one homological step plus a lone (0, 0).
    """

    data: dict = field(default_factory=dict)

    def __getitem__(self, ij):
        return self.data.get(ij, 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.data == other.data

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.data.items() if a == i)

    def projective_dimension(self) -> int:
        """Length of the minimal resolution of I."""
        return max(i for i, _ in self.data)

    def regularity(self) -> int:
        """reg(R/I), which is reg(I) - 1."""
        if not self.data:
            raise ValueError("regularity of the zero module is undefined")
        return max(j - i for i, j in self.data) - 1

    def generator_degrees(self) -> list[int]:
        return sorted({j for (i, j) in self.data if i == 0})

    def is_linear(self) -> bool:
        degs = self.generator_degrees()
        if len(degs) > 1:
            raise NotEquigenerated(f"minimal generators in degrees {degs}")
        if not degs:
            return True
        d = degs[0]
        return all(j == d + i for (i, j) in self.data)

    def hilbert_series_check(self, ring: Ring, ideal: Ideal, upto: int) -> bool:
        """Alternating sum of twisted Hilbert functions equals HF(R/I) in degrees 0..upto."""
        k = ring.nvars
        for d in range(upto + 1):
            alt = comb(k - 1 + d, k - 1)
            for (i, j), b in self.data.items():
                if d - j >= 0:
                    alt -= (-1) ** i * b * comb(k - 1 + d - j, k - 1)
            if alt != hilbert_function(ideal, d):
                return False
        return True

    def diagram(self) -> str:
        """Conventional layout: row r = j - i, column i."""
        if not self.data:
            return "(zero module)"
        cols = range(self.projective_dimension() + 1)
        rows = range(min(j - i for i, j in self.data), self.regularity() + 2)
        width = max(len(str(v)) for v in self.data.values()) + 1
        lines = ["      " + "".join(f"{i:>{width}}" for i in cols)]
        lines.append("total:" + "".join(f"{self.total(i):>{width}}" for i in cols))
        for r in rows:
            cells = "".join(f"{self[(i, i + r)] or '-':>{width}}" for i in cols)
            lines.append(f"{r:>5}:" + cells)
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {f"{i},{j}": v for (i, j), v in sorted(self.data.items())}


# -- Schreyer frames -------------------------------------------------------

class _Frame:
    """Free module F with Schreyer order: key(c, e) = (drl(e + E[c]),) + T[c]."""

    def __init__(self, E, T, twists, nvars):
        self.E, self.T, self.twists = E, T, twists
        self.drl = _KeyCache(_drl)

    def key(self, term):
        c, e = term
        return (self.drl[tuple(a + b for a, b in zip(e, self.E[c]))],) + self.T[c]


def _lex_desc(e):
    return tuple(-x for x in e)


def _syzygy_step(vecs: list[dict], frame: _Frame, ring: Ring):
    """Schreyer syzygies of a Groebner basis `vecs` of a submodule of `frame`.

    Returns (syzygy vectors over the new frame, new frame).
    """
    nv = ring.nvars
    leads = []
    monic = []
    for v in vecs:
        lt = max(v, key=frame.key)
        inv = 1 / v[lt]
        monic.append({t: c * inv for t, c in v.items()})
        leads.append(lt)
    p = len(vecs)
    E = [tuple(a + b for a, b in zip(leads[a][1], frame.E[leads[a][0]])) for a in range(p)]
    T = [frame.T[leads[a][0]] + (-a,) for a in range(p)]
    twists = []
    for v in vecs:
        c, e = next(iter(v))
        twists.append(ring.degree_of(e) + frame.twists[c])
    new = _Frame(E, T, twists, nv)

    syz = []
    for a in range(p):
        ca, ea = leads[a]
        cands = {}
        for b in range(a + 1, p):
            cb, eb = leads[b]
            if cb != ca:
                continue
            m = tuple(x - y for x, y in zip(_lcm(ea, eb), ea))
            cands[b] = m
        minimal = []
        for b, m in sorted(cands.items()):
            if any(_divides(m2, m) for _, m2 in minimal):
                continue
            minimal = [(b2, m2) for b2, m2 in minimal if not _divides(m, m2)]
            minimal.append((b, m))
        for b, ma in minimal:
            eb = leads[b][1]
            l = tuple(x + y for x, y in zip(ma, ea))
            mb = tuple(x - y for x, y in zip(l, eb))
            svec = {}
            out = {}
            for (c, e), coef in monic[a].items():
                _add_term(svec, (c, tuple(x + y for x, y in zip(e, ma))), coef)
            for (c, e), coef in monic[b].items():
                _add_term(svec, (c, tuple(x + y for x, y in zip(e, mb))), -coef)
            _add_term(out, (a, ma), mpq(1) / vecs[a][leads[a]])
            _add_term(out, (b, mb), -mpq(1) / vecs[b][leads[b]])
            # divide svec by the basis, recording quotients
            while svec:
                lt = max(svec, key=frame.key)
                c, e = lt
                coef = svec[lt]
                for d in range(p):
                    cd, ed = leads[d]
                    if cd == c and _divides(ed, e):
                        q = tuple(x - y for x, y in zip(e, ed))
                        for (c2, e2), v2 in monic[d].items():
                            _add_term(svec, (c2, tuple(x + y for x, y in zip(e2, q))), -coef * v2)
                        _add_term(out, (d, q), -coef / vecs[d][leads[d]])
                        break
                else:
                    raise ResolutionError("S-vector did not reduce to zero: input is not a Groebner basis")
            syz.append(out)
    return syz, new


def _sort_for_next(vecs: list[dict], frame: _Frame) -> list[dict]:
    def k(v):
        c, e = max(v, key=frame.key)
        return (c, _lex_desc(e))
    return sorted(vecs, key=k)


def _column(vec: dict, nrows: int, ring: Ring) -> list[Polynomial]:
    rows = [dict() for _ in range(nrows)]
    for (c, e), v in vec.items():
        rows[c][e] = v
    return [Polynomial(ring, r) for r in rows]


def free_resolution(I: Ideal) -> Resolution:
    """Schreyer resolution of R/I (usually not minimal)."""
    ring = I.ring
    if not I.is_homogeneous():
        raise ValueError("free_resolution needs a homogeneous ideal")
    if I.is_zero():
        return Resolution(ring, [])
    G = I.gb(DEGREVLEX).polys
    nv = ring.nvars
    zero = (0,) * nv
    frame = _Frame([zero], [()], [0], nv)
    vecs = [{(0, e): c for e, c in g.terms.items()} for g in G]
    vecs = _sort_for_next(vecs, frame)
    steps = []
    while vecs:
        if len(steps) >= nv + 1:
            raise ResolutionError("resolution longer than the number of variables")
        syz, new = _syzygy_step(vecs, frame, ring)
        cols = [_column(v, len(frame.twists), ring) for v in vecs]
        matrix = [[cols[c][r] for c in range(len(vecs))] for r in range(len(frame.twists))]
        steps.append(ResolutionStep(list(new.twists), list(frame.twists), matrix))
        vecs = _sort_for_next(syz, new)
        frame = new
    return Resolution(ring, steps)


def minimize_resolution(res: Resolution) -> Resolution:
    """Split off unit entries (lowest row, then lowest column) until none remain."""
    ring = res.ring
    steps = [ResolutionStep(list(s.source), list(s.target), [list(r) for r in s.matrix])
             for s in res.steps]
    for i in range(len(steps)):
        while True:
            st = steps[i]
            piv = None
            for r, row in enumerate(st.matrix):
                for c, entry in enumerate(row):
                    if entry and entry.is_constant():
                        piv = (r, c)
                        break
                if piv:
                    break
            if piv is None:
                break
            r, c = piv
            u = st.matrix[r][c].terms[(0,) * ring.nvars]
            colc = [row[c] for row in st.matrix]
            rowr = st.matrix[r]
            newm = []
            for rr, row in enumerate(st.matrix):
                if rr == r:
                    continue
                if colc[rr]:
                    f = colc[rr].scale(1 / u)
                    newrow = [row[cc] - f * rowr[cc] for cc in range(len(row)) if cc != c]
                else:
                    newrow = [row[cc] for cc in range(len(row)) if cc != c]
                newm.append(newrow)
            st.matrix = newm
            del st.source[c]
            del st.target[r]
            if i + 1 < len(steps):
                nx = steps[i + 1]
                del nx.matrix[c]
                del nx.target[c]
            if i > 0:
                pv = steps[i - 1]
                for row in pv.matrix:
                    del row[r]
                del pv.source[r]
    # drop trailing empty modules
    while steps and not steps[-1].source:
        steps.pop()
    return Resolution(ring, steps)


def minimize(res: Resolution) -> BettiTable:
    return minimize_resolution(res).betti_table()


def betti_table(I: Ideal) -> BettiTable:
    if I.is_unit():
        return BettiTable({})
    return minimize(free_resolution(I))


def regularity(I: Ideal) -> int:
    """reg(R/I) = max(j - i) over the nonzero Betti numbers of R/I."""
    if I.is_zero() or I.is_unit():
        raise ValueError("regularity needs a proper nonzero ideal")
    return betti_table(I).regularity()


def is_linear(I: Ideal) -> bool:
    return betti_table(I).is_linear()


# -- syzygies of an arbitrary generator list -------------------------------

class _POT:
    """Position-over-term order on one-hot encoded module elements (slot 0 highest)."""

    def __init__(self, nx: int):
        self.nx = nx
        self._cache = {}

    def keyfunc(self, nvars):
        cache = self._cache.get(nvars)
        if cache is None:
            nx = self.nx

            def fn(e):
                slot = next((i for i in range(nx, nvars) if e[i]), nvars)
                return (-slot, _drl(e[:nx]))
            cache = self._cache[nvars] = _KeyCache(fn)
        return cache


def syzygies(gens: Sequence[Polynomial]) -> list[list[Polynomial]]:
    """Minimal homogeneous generators of the relations among gens (as columns)."""
    gens = list(gens)
    if not gens:
        return []
    ring = gens[0].ring
    if not all(g.is_homogeneous() and g for g in gens):
        raise ValueError("syzygies needs nonzero homogeneous generators")
    nx, r = ring.nvars, len(gens)
    degs = [g.degree() for g in gens]
    slots = [f"_e{i}" for i in range(r + 1)]
    big = Ring(ring.names + tuple(slots), ring.weights + (0,) + tuple(degs))

    def lift(f: Polynomial, slot: int) -> dict:
        pad = tuple(int(i == slot) for i in range(r + 1))
        return {e + pad: c for e, c in f.terms.items()}

    elems = []
    for i, g in enumerate(gens):
        t = lift(g, 0)
        t.update(lift(ring.one(), i + 1))
        elems.append(Polynomial(big, t))
    G = buchberger(elems, _POT(nx), module_slots=list(range(nx, nx + r + 1)))
    cols = []
    for p in G.polys:
        if any(e[nx] for e in p.terms):
            continue
        col = [dict() for _ in range(r)]
        for e, c in p.terms.items():
            slot = next(i for i in range(r) if e[nx + 1 + i])
            col[slot][e[:nx]] = c
        cols.append([Polynomial(ring, t) for t in col])
    return _minimal_columns(cols, degs, ring)


def _column_degree(col, degs):
    for entry, d in zip(col, degs):
        if entry:
            return entry.degree() + d
    return None


def _minimal_columns(cols, degs, ring):
    """Keep columns not in the span of monomial multiples of earlier, lower-degree ones."""
    r = len(degs)
    nx = ring.nvars
    enc_nv = nx + r

    def encode(col, shift):
        t = {}
        for i, entry in enumerate(col):
            for e, c in entry.terms.items():
                t[tuple(a + b for a, b in zip(e, shift)) + tuple(int(j == i) for j in range(r))] = c
        return t

    cols = sorted(cols, key=lambda c: _column_degree(c, degs))
    kept = []
    for col in cols:
        d = _column_degree(col, degs)
        span = LinearSpan(enc_nv)
        for k in kept:
            dk = _column_degree(k, degs)
            for m in ring.monomials_of_degree(d - dk):
                span.add(encode(k, m))
        if span.contains(encode(col, (0,) * nx)):
            continue
        kept.append(col)
    return kept
