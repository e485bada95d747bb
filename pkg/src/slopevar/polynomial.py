"""Exact integer polynomials in the edge variables ``m_ij``.

A monomial is a tuple of ``(edge, exponent)`` pairs sorted by edge, with
zero exponents absent.  Variables are ranked by their edges: ``m_ij`` is
greater than ``m_kl`` exactly when ``(i, j)`` precedes ``(k, l)`` as integer
pairs, so ``m_12 > m_13 > ... > m_1n > m_23 > ...``.  Both term orders below
are built on that single ranking.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import gcd
from typing import Dict, Iterable, Tuple

from .errors import InexactDivision, NonSquare
from .graph import Edge, edge, support

Monomial = Tuple[Tuple[Edge, int], ...]

ONE: Monomial = ()

GLEX = "glex"
GREVLEX = "grevlex"


def monomial(exponents) -> Monomial:
    """Build a monomial from a mapping edge -> exponent, or an iterable of edges."""
    if isinstance(exponents, dict):
        items = exponents.items()
    else:
        counts: Dict[Edge, int] = {}
        for e in exponents:
            e = edge(*e)
            counts[e] = counts.get(e, 0) + 1
        items = counts.items()
    return tuple(sorted((edge(*e), a) for e, a in items if a))


def mono_from_edges(E: Iterable[Edge]) -> Monomial:
    """The squarefree monomial ``m_E``."""
    return tuple((e, 1) for e in sorted(E))


def mono_edges(m: Monomial) -> frozenset:
    """Support of a monomial, as an edge set."""
    return frozenset(e for e, _ in m)


def is_squarefree(m: Monomial) -> bool:
    return all(a == 1 for _, a in m)


def mono_degree(m: Monomial) -> int:
    return sum(a for _, a in m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for e, x in b:
        d[e] = d.get(e, 0) + x
    return tuple(sorted(d.items()))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True if ``a`` divides ``b``."""
    db = dict(b)
    return all(db.get(e, 0) >= x for e, x in a)


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    """``b / a``; ``a`` must divide ``b``."""
    d = dict(b)
    for e, x in a:
        r = d.get(e, 0) - x
        if r < 0:
            raise ValueError("monomial does not divide")
        if r:
            d[e] = r
        else:
            del d[e]
    return tuple(sorted(d.items()))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    d = dict(a)
    for e, x in b:
        if x > d.get(e, 0):
            d[e] = x
    return tuple(sorted(d.items()))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not (mono_edges(a) & mono_edges(b))


@lru_cache(maxsize=None)
def _glex_key(m: Monomial):
    # a > b at the greatest variable where they differ iff a has the larger
    # exponent there; greatest variable == smallest edge.
    return (mono_degree(m), tuple((-i, -j, a) for (i, j), a in m))


@lru_cache(maxsize=None)
def _grevlex_key(m: Monomial):
    # a > b at the smallest variable where they differ iff a has the smaller
    # exponent there; smallest variable == largest edge.
    return (mono_degree(m), tuple((-i, -j, -a) for (i, j), a in reversed(m)))


@dataclass(frozen=True)
class TermOrder:
    """Graded lex or graded reverse lex on the variables of ``K_n``."""

    kind: str = GLEX
    n: int = 0

    def __post_init__(self):
        if self.kind not in (GLEX, GREVLEX):
            raise ValueError(f"unknown term order {self.kind!r}")

    def key(self, m: Monomial):
        """Sort key: larger key means larger in the order."""
        return _glex_key(m) if self.kind == GLEX else _grevlex_key(m)

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def edge_key(self, e: Edge):
        """Key on single edges: larger key means larger variable."""
        return (-e[0], -e[1])

    def edge_set_compare(self, E, F) -> int:
        """Compare edge sets as squarefree monomials, without building them.

        Graded lex: larger set wins, then the set holding the greatest edge
        of the symmetric difference.  Graded revlex: larger set wins, then the
        set *not* holding the least edge of the symmetric difference.
        """
        E, F = frozenset(E), frozenset(F)
        if len(E) != len(F):
            return 1 if len(E) > len(F) else -1
        diff = E ^ F
        if not diff:
            return 0
        if self.kind == GLEX:
            top = min(diff)  # greatest variable
            return 1 if top in E else -1
        bottom = max(diff)  # least variable
        return -1 if bottom in E else 1

    def variables(self) -> list:
        """Edges of ``K_n`` from greatest variable to least."""
        return [(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)]


def glex(n: int = 0) -> TermOrder:
    return TermOrder(GLEX, n)


def grevlex(n: int = 0) -> TermOrder:
    return TermOrder(GREVLEX, n)


def compare(a: Monomial, b: Monomial, order: TermOrder) -> int:
    return order.compare(a, b)


def edge_set_compare(E, F, order: TermOrder) -> int:
    return order.edge_set_compare(E, F)


class Polynomial:
    """Immutable polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        self._terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls({ONE: c})

    @classmethod
    def var(cls, i: int, j: int) -> "Polynomial":
        return cls({((edge(i, j), 1),): 1})

    @classmethod
    def from_monomial(cls, m: Monomial, c: int = 1) -> "Polynomial":
        return cls({m: c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m: Monomial) -> int:
        return self._terms.get(m, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "Polynomial":
        if not c:
            return Polynomial()
        return Polynomial._raw({m: c * a for m, a in self._terms.items()})

    def mul_term(self, m: Monomial, c: int = 1) -> "Polynomial":
        if not c:
            return Polynomial()
        return Polynomial._raw({mono_mul(k, m): c * a for k, a in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    # -- order-dependent views -------------------------------------------

    def sorted_terms(self, order: TermOrder) -> list:
        """Terms in descending term order."""
        return sorted(self._terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: TermOrder) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=order.key)

    def leading_term(self, order: TermOrder):
        m = self.leading_monomial(order)
        return m, self._terms[m]

    def leading_coefficient(self, order: TermOrder) -> int:
        return self.leading_term(order)[1]

    # -- structure -----------------------------------------------------------

    def degree(self) -> int:
        return max((mono_degree(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self._terms}) <= 1

    def edges(self) -> frozenset:
        """All edges whose variable occurs."""
        return frozenset(e for m in self._terms for e, _ in m)

    def vertices(self) -> frozenset:
        return support(self.edges())

    def content(self) -> int:
        g = 0
        for c in self._terms.values():
            g = gcd(g, c)
        return g

    def primitive(self, order: TermOrder | None = None) -> "Polynomial":
        """Divide out the content; with ``order`` also make the leading coefficient positive."""
        g = self.content()
        if g == 0:
            return self
        if order is not None and self.leading_coefficient(order) < 0:
            g = -g
        return Polynomial._raw({m: c // g for m, c in self._terms.items()})

    def evaluate(self, values) -> Fraction:
        """Exact value at ``values`` (edge -> number); missing edges raise KeyError."""
        total = Fraction(0)
        for m, c in self._terms.items():
            term = Fraction(c)
            for e, a in m:
                term *= Fraction(values[e]) ** a
            total += term
        return total

    def to_text(self, order: TermOrder | None = None) -> str:
        return format_polynomial(self, order or TermOrder())

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def normalize_sign(p: Polynomial, order: TermOrder) -> Polynomial:
    """Return ``p`` or ``-p``, whichever has positive leading coefficient."""
    if p and p.leading_coefficient(order) < 0:
        return -p
    return p


def equal_up_to_sign(p: Polynomial, q: Polynomial) -> bool:
    return p == q or p == -q


def var(i: int, j: int) -> Polynomial:
    return Polynomial.var(i, j)


# -- text form ----------------------------------------------------------------

def format_polynomial(p: Polynomial, order: TermOrder) -> str:
    """Canonical text: terms in descending order, ``+c*m[i,j]*m[k,l]...``."""
    if not p:
        return "0"
    parts = []
    for m, c in p.sorted_terms(order):
        sign = "+" if c > 0 else "-"
        c = abs(c)
        factors = [f"m[{i},{j}]" for (i, j), a in m for _ in range(a)]
        if c != 1 or not factors:
            factors.insert(0, str(c))
        parts.append(sign + "*".join(factors))
    return "".join(parts)


_TERM = re.compile(r"([+-])([^+-]+)")
_FACTOR = re.compile(r"^m\[(\d+),(\d+)\]$")


def parse_polynomial(text: str) -> Polynomial:
    text = "".join(text.split())
    if text == "0":
        return Polynomial()
    if text and text[0] not in "+-":
        text = "+" + text
    terms: Dict[Monomial, int] = {}
    pos = 0
    for match in _TERM.finditer(text):
        if match.start() != pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        pos = match.end()
        sign, body = match.groups()
        coeff = 1
        edges = []
        for factor in body.split("*"):
            if factor.isdigit():
                coeff *= int(factor)
                continue
            fm = _FACTOR.match(factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r}")
            edges.append((int(fm.group(1)), int(fm.group(2))))
        m = monomial(edges)
        terms[m] = terms.get(m, 0) + (coeff if sign == "+" else -coeff)
    if pos != len(text):
        raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
    return Polynomial(terms)


# -- determinants ---------------------------------------------------------------

def determinant(matrix) -> Polynomial:
    """Exact determinant of a square matrix of polynomials (or ints).

    Expands row by row over subsets of used columns, so zero entries are
    skipped and the cost is ``O(n 2^n)`` products.
    """
    rows = [list(r) for r in matrix]
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise NonSquare(f"matrix is not square: {[len(r) for r in rows]}")
    if size == 0:
        return Polynomial.constant(1)
    rows = [[x if isinstance(x, Polynomial) else Polynomial.constant(x) for x in r]
            for r in rows]
    layer = {0: Polynomial.constant(1)}
    for r in range(size):
        nxt: Dict[int, Polynomial] = {}
        for used, acc in layer.items():
            for c in range(size):
                if used >> c & 1:
                    continue
                entry = rows[r][c]
                if not entry:
                    continue
                # sign of the permutation grows by the used columns to the right of c
                inversions = bin(used >> (c + 1)).count("1")
                term = acc * entry
                if inversions % 2:
                    term = -term
                key = used | (1 << c)
                nxt[key] = nxt[key] + term if key in nxt else term
        layer = nxt
    return layer.get((1 << size) - 1, Polynomial())


def determinant_by_permutations(matrix) -> Polynomial:
    """Leibniz expansion; slow, used as an independent check."""
    rows = [list(r) for r in matrix]
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise NonSquare("matrix is not square")
    total = Polynomial()
    for perm in permutations(range(size)):
        inv = sum(1 for a in range(size) for b in range(a + 1, size) if perm[a] > perm[b])
        term = Polynomial.constant(-1 if inv % 2 else 1)
        for r, c in enumerate(perm):
            x = rows[r][c]
            term = term * (x if isinstance(x, Polynomial) else Polynomial.constant(x))
            if not term:
                break
        total = total + term
    return total


# -- division ------------------------------------------------------------------

def reduce(p: Polynomial, basis, order: TermOrder, stats: dict | None = None):
    """Multivariate division of ``p`` by ``basis``.

    Returns ``(quotients, remainder)`` with ``p == sum(q*g) + remainder`` and
    no term of the remainder divisible by a leading monomial of the basis.
    The first basis element (input order) whose leading monomial divides the
    current term is used.  Raises :class:`InexactDivision` if a leading
    coefficient does not divide the coefficient it must cancel.  If ``stats``
    is given, it receives the number of division ``steps`` and the largest
    intermediate term count ``max_terms``.
    """
    basis = list(basis)
    if any(not g for g in basis):
        raise ValueError("basis elements must be nonzero")
    leads = [g.leading_term(order) for g in basis]
    quotients = [dict() for _ in basis]
    work = dict(p._terms)
    remainder: Dict[Monomial, int] = {}
    key = order.key
    steps = 0
    peak = len(work)
    while work:
        m = max(work, key=key)
        c = work[m]
        for idx, (lm, lc) in enumerate(leads):
            if mono_divides(lm, m):
                steps += 1
                if c % lc:
                    raise InexactDivision(
                        f"leading coefficient {lc} does not divide {c}")
                q = c // lc
                t = mono_div(m, lm)
                quotients[idx][t] = quotients[idx].get(t, 0) + q
                for gm, gc in basis[idx]._terms.items():
                    mm = mono_mul(gm, t)
                    s = work.get(mm, 0) - q * gc
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                peak = max(peak, len(work) + len(remainder))
                break
        else:
            remainder[m] = c
            del work[m]
    if stats is not None:
        stats["steps"] = steps
        stats["max_terms"] = peak
    return [Polynomial(q) for q in quotients], Polynomial._raw(remainder)


def remainder(p: Polynomial, basis, order: TermOrder) -> Polynomial:
    return reduce(p, basis, order)[1]


def pseudo_remainder(p: Polynomial, basis, order: TermOrder):
    """Fraction-free normal form: a nonzero integer multiple of the remainder over Q.

    Each step replaces ``p`` by ``lc(g)*p - c*t*g`` and divides out the
    content, so zero-ness matches division over the rationals.  Returns
    ``(remainder, steps)``.
    """
    basis = list(basis)
    leads = [g.leading_term(order) for g in basis]
    work = dict(p._terms)
    done: Dict[Monomial, int] = {}
    key = order.key
    steps = 0
    while work:
        m = max(work, key=key)
        c = work[m]
        for idx, (lm, lc) in enumerate(leads):
            if mono_divides(lm, m):
                t = mono_div(m, lm)
                g = gcd(c, lc)
                a, b = lc // g, c // g
                if a != 1:
                    work = {k: a * v for k, v in work.items()}
                    done = {k: a * v for k, v in done.items()}
                for gm, gc in basis[idx]._terms.items():
                    mm = mono_mul(gm, t)
                    s = work.get(mm, 0) - b * gc
                    if s:
                        work[mm] = s
                    else:
                        work.pop(mm, None)
                steps += 1
                if a != 1:
                    cont = 0
                    for v in work.values():
                        cont = gcd(cont, v)
                    for v in done.values():
                        cont = gcd(cont, v)
                    if cont > 1:
                        work = {k: v // cont for k, v in work.items()}
                        done = {k: v // cont for k, v in done.items()}
                break
        else:
            done[m] = c
            del work[m]
    return Polynomial._raw(done), steps


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    """S-polynomial with integer cofactors: the leading terms cancel exactly."""
    if not f or not g:
        raise ValueError("S-polynomial of zero")
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    h = gcd(cf, cg)
    return f.mul_term(mono_div(lcm, mf), cg // h) - g.mul_term(mono_div(lcm, mg), cf // h)
