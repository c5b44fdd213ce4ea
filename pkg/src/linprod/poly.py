"""Exact multivariate polynomials over the rationals, monomial orders, text syntax."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from gmpy2 import mpq

Scalar = mpq


def scalar(value) -> mpq:
    """Coerce an int, Fraction, mpq or 'p/q' string to an exact rational."""
    if isinstance(value, str):
        return mpq(value.strip())
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return mpq(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot convert {value!r} to an exact rational")


class _KeyCache(dict):
    def __init__(self, fn):
        super().__init__()
        self.fn = fn

    def __missing__(self, exp):
        k = self.fn(exp)
        self[exp] = k
        return k


def _drl(exp):
    return (sum(exp), tuple(-e for e in reversed(exp)))


@dataclass(frozen=True)
class MonomialOrder:
    """A global multiplicative monomial order.

    kind is one of ``degrevlex``, ``lex``, ``block`` or ``bidegree``.  Block orders
    compare the listed index blocks in turn (degrevlex inside each block); variables
    not listed form a final block.  ``bidegree`` compares total degree, then degree in
    ``blocks[0]`` (the x-block), then degrevlex.
    """

    kind: str = "degrevlex"
    blocks: tuple = ()
    _cache: dict = field(default=None, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "block", "bidegree"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        blocks = tuple(tuple(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "_cache", {})

    def keyfunc(self, nvars: int):
        """Return a memoised key: key(u) < key(v) iff u < v."""
        cache = self._cache.get(nvars)
        if cache is not None:
            return cache
        if self.kind == "degrevlex":
            fn = _drl
        elif self.kind == "lex":
            fn = tuple
        elif self.kind == "block":
            listed = [i for b in self.blocks for i in b]
            rest = tuple(i for i in range(nvars) if i not in listed)
            blocks = [b for b in self.blocks if b] + ([rest] if rest else [])

            def fn(exp, blocks=blocks):
                return tuple(_drl(tuple(exp[i] for i in b)) for b in blocks)
        else:
            xb = self.blocks[0] if self.blocks else ()

            def fn(exp, xb=xb):
                return (sum(exp), sum(exp[i] for i in xb), _drl(exp))
        cache = _KeyCache(fn)
        self._cache[nvars] = cache
        return cache

    def compare(self, u: Sequence[int], v: Sequence[int]) -> int:
        """Return -1, 0 or 1 as u <, =, > v."""
        key = self.keyfunc(len(u))
        ku, kv = key[tuple(u)], key[tuple(v)]
        return (ku > kv) - (ku < kv)


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def block_order(*blocks) -> MonomialOrder:
    return MonomialOrder("block", tuple(tuple(b) for b in blocks))


def elimination_order(front: Iterable[int]) -> MonomialOrder:
    return MonomialOrder("block", (tuple(sorted(front)),))


class Ring:
    """A polynomial ring Q[names] with integer weights and an optional bigrading.

    ``x_block`` names the variables of degree (1,0); when given, every other variable
    has degree (0,1).
    """

    def __init__(self, names: Sequence[str], weights=None, x_block=None,
                 order: MonomialOrder = DEGREVLEX):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be unique")
        self.names = names
        self.nvars = len(names)
        self.index = {n: i for i, n in enumerate(names)}
        self.weights = tuple(weights) if weights is not None else (1,) * self.nvars
        if len(self.weights) != self.nvars:
            raise ValueError("one weight per variable")
        self.x_block = None
        if x_block is not None:
            self.x_block = tuple(self.index[n] if isinstance(n, str) else n for n in x_block)
        self.order = order

    def __eq__(self, other):
        return (isinstance(other, Ring) and self.names == other.names
                and self.weights == other.weights and self.x_block == other.x_block)

    def __hash__(self):
        return hash((self.names, self.weights))

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"

    @property
    def bigraded(self) -> bool:
        return self.x_block is not None

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c) -> Polynomial:
        c = scalar(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name) -> Polynomial:
        i = self.index[name] if isinstance(name, str) else name
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): mpq(1)})

    def gens(self) -> list[Polynomial]:
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exp, coeff=1) -> Polynomial:
        c = scalar(coeff)
        return Polynomial(self, {tuple(exp): c} if c else {})

    def linear(self, coeffs) -> Polynomial:
        """The linear form sum c_i * x_i."""
        terms = {}
        for i, c in enumerate(coeffs):
            c = scalar(c)
            if c:
                e = [0] * self.nvars
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial(self, terms)

    def degree_of(self, exp) -> int:
        return sum(w * e for w, e in zip(self.weights, exp))

    def bidegree_of(self, exp) -> tuple[int, int]:
        dx = sum(exp[i] for i in self.x_block)
        return dx, sum(exp) - dx

    def extend(self, front=(), back=(), front_weights=None, back_weights=None) -> Ring:
        """Ring with extra variables prepended/appended (weights default to 1)."""
        fw = tuple(front_weights) if front_weights is not None else (1,) * len(front)
        bw = tuple(back_weights) if back_weights is not None else (1,) * len(back)
        return Ring(tuple(front) + self.names + tuple(back), fw + self.weights + bw)

    def parse(self, text: str) -> Polynomial:
        return parse_poly(self, text)

    def monomials_of_degree(self, d: int) -> list[tuple]:
        """All exponent vectors of (weighted) degree d, in descending degrevlex order."""
        out = []

        def rec(i, left, acc):
            if i == self.nvars:
                if left == 0:
                    out.append(tuple(acc))
                return
            w = self.weights[i]
            if w == 0:
                raise ValueError("graded pieces need positive weights")
            for e in range(left // w, -1, -1):
                acc.append(e)
                rec(i + 1, left - w * e, acc)
                acc.pop()

        rec(0, d, [])
        key = DEGREVLEX.keyfunc(self.nvars)
        out.sort(key=key.__getitem__, reverse=True)
        return out


class StructuralError(ValueError):
    """Operands live in different rings."""


class UndefinedDegree(ValueError):
    """Degree requested for the zero polynomial."""


class Polynomial:
    """A polynomial as a map exponent-tuple -> nonzero rational."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- construction helpers
    def _new(self, terms):
        return Polynomial(self.ring, terms)

    def _check(self, other):
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise StructuralError(f"{self.ring!r} vs {other.ring!r}")
            return other
        return self.ring.const(other)

    # -- arithmetic
    def __add__(self, other):
        other = self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e)
            if v is None:
                t[e] = c
            else:
                v += c
                if v:
                    t[e] = v
                else:
                    del t[e]
        return self._new(t)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        other = self._check(other)
        if len(self.terms) < len(other.terms):
            a, b = self.terms, other.terms
        else:
            a, b = other.terms, self.terms
        t = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = t.get(e)
                t[e] = ca * cb if v is None else v + ca * cb
        return self._new({e: c for e, c in t.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = scalar(c)
        if not c:
            return self._new({})
        return self._new({e: v * c for e, v in self.terms.items()})

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_term(self, exp, coeff):
        """Multiply by the single term coeff * x^exp."""
        return self._new({tuple(a + b for a, b in zip(e, exp)): c * coeff
                          for e, c in self.terms.items()})

    def exact_div(self, other: Polynomial) -> Polynomial:
        """Divide by other when the division is exact (raises otherwise)."""
        q, r = divide(self, [other], self.ring.order)
        if r:
            raise ArithmeticError("division is not exact")
        return q[0]

    # -- comparisons and queries
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self.terms == self.ring.const(other).terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or all(not any(e) for e in self.terms)

    def leading_term(self, order: MonomialOrder | None = None):
        """(exponent, coefficient) of the largest term."""
        if not self.terms:
            raise UndefinedDegree("zero polynomial has no leading term")
        key = (order or self.ring.order).keyfunc(self.ring.nvars)
        e = max(self.terms, key=key.__getitem__)
        return e, self.terms[e]

    def monic(self, order: MonomialOrder | None = None) -> Polynomial:
        _, c = self.leading_term(order)
        return self.scale(1 / c)

    def degree(self) -> int:
        if not self.terms:
            raise UndefinedDegree("zero polynomial has no degree")
        return max(self.ring.degree_of(e) for e in self.terms)

    def degree_info(self) -> dict:
        """Total degree, homogeneity flag and (if bigraded) the common bidegree."""
        if not self.terms:
            raise UndefinedDegree("zero polynomial has no degree")
        degs = {self.ring.degree_of(e) for e in self.terms}
        info = {"degree": max(degs), "homogeneous": len(degs) == 1, "bidegree": None}
        if self.ring.bigraded:
            bidegs = {self.ring.bidegree_of(e) for e in self.terms}
            info["bihomogeneous"] = len(bidegs) == 1
            if len(bidegs) == 1:
                info["bidegree"] = bidegs.pop()
        return info

    def is_homogeneous(self) -> bool:
        return not self.terms or len({self.ring.degree_of(e) for e in self.terms}) == 1

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, x in enumerate(e) if x}

    def sorted_terms(self, order: MonomialOrder | None = None):
        key = (order or self.ring.order).keyfunc(self.ring.nvars)
        return sorted(self.terms.items(), key=lambda t: key[t[0]], reverse=True)

    def subs(self, images: Sequence[Polynomial], target: Ring | None = None) -> Polynomial:
        """Ring map sending variable i to images[i]."""
        target = target or images[0].ring
        out = target.zero()
        powers = [dict() for _ in images]

        def pw(i, k):
            p = powers[i].get(k)
            if p is None:
                p = images[i] ** k
                powers[i][k] = p
            return p

        acc = {}
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            for te, tc in term.terms.items():
                acc[te] = acc.get(te, 0) + tc
        out.terms = {e: c for e, c in acc.items() if c}
        return out

    def map_exponents(self, ring: Ring, fn) -> Polynomial:
        """Re-embed into another ring via an exponent map (must be injective)."""
        return Polynomial(ring, {fn(e): c for e, c in self.terms.items()})

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def divide(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder):
    """Multivariate division: f = sum q_i G_i + r with r reduced."""
    ring = f.ring
    key = order.keyfunc(ring.nvars)
    kget = key.__getitem__
    lts = [g.leading_term(order) for g in G]
    quots = [dict() for _ in G]
    p = dict(f.terms)
    rem = {}
    while p:
        e = max(p, key=kget)
        c = p[e]
        for i, (le, lc) in enumerate(lts):
            if all(a >= b for a, b in zip(e, le)):
                m = tuple(a - b for a, b in zip(e, le))
                q = c / lc
                quots[i][m] = quots[i].get(m, 0) + q
                for ge, gc in G[i].terms.items():
                    t = tuple(a + b for a, b in zip(ge, m))
                    v = p.get(t, 0) - q * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[e] = c
            del p[e]
    return [Polynomial(ring, {m: c for m, c in q.items() if c}) for q in quots], Polynomial(ring, rem)


# -- text syntax -------------------------------------------------------------

def _fmt_coeff(c: mpq) -> str:
    return str(c)


def format_poly(f: Polynomial) -> str:
    """Render like ``3*x^2*y - 1/2*z^3`` (terms in descending order)."""
    if not f.terms:
        return "0"
    names = f.ring.names
    parts = []
    for e, c in f.sorted_terms():
        mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if not parts:
            parts.append(("-" if neg else "") + body)
        else:
            parts.append((" - " if neg else " + ") + body)
    return "".join(parts)


class ParseError(ValueError):
    def __init__(self, msg, pos=None, line=1, column=None):
        self.pos, self.line = pos, line
        self.column = column if column is not None else (pos + 1 if pos is not None else None)
        where = f" at line {self.line}, column {self.column}" if self.column else ""
        super().__init__(msg + where)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(("num", int(num), start))
        elif name is not None:
            out.append(("name", name, start))
        else:
            out.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


def parse_poly(ring: Ring, text: str) -> Polynomial:
    """Parse integer/rational coefficients, +, -, *, /, ^ and parentheses."""
    toks = _tokenize(text)
    i = 0

    def peek():
        return toks[i]

    def take():
        nonlocal i
        t = toks[i]
        i += 1
        return t

    def expr():
        neg = False
        if peek()[:2] in (("op", "-"), ("op", "+")):
            neg = take()[1] == "-"
        acc = term()
        if neg:
            acc = -acc
        while peek()[:2] in (("op", "+"), ("op", "-")):
            op = take()[1]
            rhs = term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term():
        acc = power()
        while peek()[:2] in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = power()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise ParseError("division only by nonzero constants", peek()[2])
                acc = acc.scale(1 / rhs.terms[(0,) * ring.nvars])
        return acc

    def power():
        base = atom()
        if peek()[:2] == ("op", "^"):
            take()
            kind, val, pos = take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer", pos)
            base = base ** val
        return base

    def atom():
        kind, val, pos = take()
        if kind == "num":
            return ring.const(val)
        if kind == "name":
            if val not in ring.index:
                raise ParseError(f"unknown variable {val!r}", pos)
            return ring.var(val)
        if (kind, val) == ("op", "("):
            inner = expr()
            k2, v2, p2 = take()
            if (k2, v2) != ("op", ")"):
                raise ParseError("expected ')'", p2)
            return inner
        if (kind, val) == ("op", "-"):
            return -power()
        raise ParseError(f"unexpected token {val!r}", pos)

    result = expr()
    if peek()[0] != "end":
        raise ParseError(f"trailing input {peek()[1]!r}", peek()[2])
    return result
