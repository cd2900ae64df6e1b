"""Sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples (one entry per indeterminate of its ``VarTable``) to
nonzero rational coefficients. Integral coefficients are stored as ``int``, the rest as
``Fraction``. Terms are ordered graded-lexicographically: higher total degree first, then
lexicographically with earlier-declared indeterminates ranking higher (``m^2 > m*n > n^2``).
"""
import heapq
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as RationalLike
from operator import add, sub
from typing import Dict, Literal, Mapping, Optional, Tuple

from pyquartet.errors import (
    DivisionByZero,
    InexactDivision,
    MissingBinding,
    TableMismatch,
)
from pyquartet.scalar import as_rational, rat_format

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Terms = Dict[Monomial, RationalLike]

# attempts before the heuristic gcd hands over to the PRS recursion
HEU_GCD_MAX = 6


@dataclass(frozen=True)
class VarTable:
    names: Tuple[str, ...] = ("m", "n", "M", "N")

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise ValueError("a variable table needs at least one indeterminate")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate indeterminates in {self.names}")
        for name in self.names:
            if not name or not (name[0].isalpha() or name[0] == "_"):
                raise ValueError(f"invalid indeterminate name {name!r}")

    @property
    def arity(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"{name!r} is not an indeterminate of {self.names}") from None

    def __contains__(self, name) -> bool:
        return name in self.names


DEFAULT_TABLE = VarTable()


# term-dict helpers. All of them take and return plain dicts without zero coefficients.

def _coeff(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _clean(terms: Terms) -> Terms:
    return {e: _coeff(c) for e, c in terms.items() if c}


def _order_key(e: Monomial):
    return (sum(e), e)


def _heap_key(e: Monomial):
    return (-sum(e), tuple(-x for x in e))


def _leading(terms: Terms):
    return max(terms.items(), key=lambda item: _order_key(item[0]))


def _add_terms(a: Terms, b: Terms, op=add) -> Terms:
    out = dict(a)
    for e, c in b.items():
        v = op(out.get(e, 0), c)
        if v:
            out[e] = _coeff(v)
        else:
            out.pop(e, None)
    return out


def _mul_terms(a: Terms, b: Terms) -> Terms:
    if len(a) > len(b):
        a, b = b, a
    out = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(map(add, ea, eb))
            out[e] = get(e, 0) + ca * cb
    return _clean(out)


def _scale(a: Terms, c) -> Terms:
    if not c:
        return {}
    return {e: _coeff(v * c) for e, v in a.items()}


def _shift(a: Terms, by: Monomial, op=add) -> Terms:
    return {tuple(map(op, e, by)): c for e, c in a.items()}


def _qdiv(c, d):
    if type(c) is int and type(d) is int and c % d == 0:
        return c // d
    return _coeff(Fraction(c) / d)


def _divide(a: Terms, b: Terms, integral: bool = False) -> Optional[Terms]:
    """Quotient of ``a`` by ``b`` if ``b`` divides ``a`` exactly, else None.

    With ``integral`` every quotient coefficient must be an integer as well.
    """
    lead_e, lead_c = _leading(b)
    rest = [(e, c) for e, c in b.items() if e != lead_e]
    r = dict(a)
    heap = [(_heap_key(e), e) for e in r]
    heapq.heapify(heap)
    q = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = r.pop(e, 0)
        if not c:
            continue
        if any(x < y for x, y in zip(e, lead_e)):
            return None
        shift = tuple(map(sub, e, lead_e))
        if integral:
            qc, rem = divmod(c, lead_c)
            if rem:
                return None
        else:
            qc = _qdiv(c, lead_c)
        q[shift] = qc
        for eb, cb in rest:
            t = tuple(map(add, shift, eb))
            v = r.get(t, 0) - qc * cb
            if v:
                if t not in r:
                    heapq.heappush(heap, (_heap_key(t), t))
                r[t] = _coeff(v)
            else:
                r.pop(t, None)
    return q


def _integer_primitive(terms: Terms):
    """Split nonzero ``terms`` into (content, primitive) with integer primitive coefficients of
    gcd 1 and a positive leading coefficient."""
    den = math.lcm(*(c.denominator for c in terms.values()))
    ints = {e: c.numerator * (den // c.denominator) for e, c in terms.items()}
    g = math.gcd(*ints.values())
    if _leading(ints)[1] < 0:
        g = -g
    return Fraction(g, den), {e: c // g for e, c in ints.items()}


def _monomial_content(terms: Terms) -> Monomial:
    it = iter(terms)
    low = list(next(it))
    for e in it:
        for i, x in enumerate(e):
            if x < low[i]:
                low[i] = x
    return tuple(low)


def _main_var(*polys: Terms) -> int:
    best = -1
    for terms in polys:
        for e in terms:
            for i in range(len(e) - 1, best, -1):
                if e[i]:
                    best = i
                    break
    return best


def _degree_in(terms: Terms, k: int) -> int:
    return max(e[k] for e in terms)


def _coeffs_in(terms: Terms, k: int) -> Dict[int, Terms]:
    """Group terms by their exponent of indeterminate ``k`` (which is zeroed in the groups)."""
    out: Dict[int, Terms] = {}
    for e, c in terms.items():
        out.setdefault(e[k], {})[e[:k] + (0,) + e[k + 1:]] = c
    return out


def _eval_at(terms: Terms, k: int, x: int) -> Terms:
    out = {}
    powers = {0: 1}
    for e, c in terms.items():
        d = e[k]
        if d:
            if d not in powers:
                powers[d] = x ** d
            e = e[:k] + (0,) + e[k + 1:]
            c = c * powers[d]
        out[e] = out.get(e, 0) + c
    return _clean(out)


def _interpolate(h: Terms, k: int, x: int) -> Terms:
    """Recover a polynomial in indeterminate ``k`` from its image at ``x`` (balanced radix)."""
    out = {}
    half = x // 2
    i = 0
    while h:
        digit = {}
        for e, c in h.items():
            g = c % x
            if g > half:
                g -= x
            if g:
                digit[e] = g
        for e, g in digit.items():
            out[e[:k] + (i,) + e[k + 1:]] = g
        h = _clean({e: (c - digit.get(e, 0)) // x for e, c in h.items()})
        i += 1
    return out


class _HeuristicGCDFailed(Exception):
    pass


def _heu_gcd(f: Terms, g: Terms):
    """Heuristic gcd of nonzero integer polynomials: (h, f/h, g/h), integer content included."""
    arity = len(next(iter(f)))
    c = math.gcd(math.gcd(*f.values()), math.gcd(*g.values()))
    k = _main_var(f, g)
    if k < 0:
        one = (0,) * arity
        return {one: c}, _scale(f, Fraction(1, c)), _scale(g, Fraction(1, c))
    if c != 1:
        f = {e: v // c for e, v in f.items()}
        g = {e: v // c for e, v in g.items()}

    f_norm = max(abs(v) for v in f.values())
    g_norm = max(abs(v) for v in g.values())
    bound = 2 * min(f_norm, g_norm) + 29
    x = max(
        min(bound, 99 * math.isqrt(bound)),
        2 * min(f_norm // abs(_leading(f)[1]), g_norm // abs(_leading(g)[1])) + 4,
    )
    for _ in range(HEU_GCD_MAX):
        ff = _eval_at(f, k, x)
        gg = _eval_at(g, k, x)
        if ff and gg:
            h, _, _ = _heu_gcd(ff, gg)
            h = _integer_primitive(_interpolate(h, k, x))[1]
            cff = _divide(f, h, integral=True)
            if cff is not None:
                cfg = _divide(g, h, integral=True)
                if cfg is not None:
                    return _scale(h, c), cff, cfg
        x = 73794 * x * math.isqrt(math.isqrt(x)) // 27011
    raise _HeuristicGCDFailed()


def _prem(f: Terms, g: Terms, k: int) -> Terms:
    """Pseudo-remainder of ``f`` by ``g`` as polynomials in indeterminate ``k``."""
    dg = _degree_in(g, k)
    lc_g = _coeffs_in(g, k)[dg]
    r = f
    while r:
        dr = _degree_in(r, k)
        if dr < dg:
            break
        lc_r = _coeffs_in(r, k)[dr]
        step = tuple(dr - dg if i == k else 0 for i in range(len(next(iter(g)))))
        r = _add_terms(_mul_terms(lc_g, r), _mul_terms(lc_r, _shift(g, step)), sub)
    if r:
        r = _integer_primitive(r)[1]
    return r


def _content_in(terms: Terms, k: int):
    """(content, primitive part) of integer ``terms`` viewed as a polynomial in ``k``."""
    groups = iter(_coeffs_in(terms, k).values())
    content = _integer_primitive(next(groups))[1]
    for coeff in groups:
        if len(content) == 1 and not any(next(iter(content))):
            break
        content = _gcd_only(content, coeff)
    if len(content) == 1 and not any(next(iter(content))):
        return content, _integer_primitive(terms)[1]
    return content, _integer_primitive(_divide(terms, content))[1]


def _prs_gcd(f: Terms, g: Terms) -> Terms:
    """Primitive-PRS gcd of nonzero integer polynomials, recursive in the highest indeterminate."""
    arity = len(next(iter(f)))
    one = {(0,) * arity: 1}
    k = _main_var(f, g)
    if k < 0:
        return one
    if _degree_in(f, k) < _degree_in(g, k):
        f, g = g, f
    if _degree_in(g, k) == 0:
        h = _integer_primitive(g)[1]
        for coeff in _coeffs_in(f, k).values():
            h = _gcd_only(h, coeff)
        return h
    cf, big = _content_in(f, k)
    cg, small = _content_in(g, k)
    content = _gcd_only(cf, cg)
    while True:
        r = _prem(big, small, k)
        if not r:
            break
        if _degree_in(r, k) == 0:
            small = one
            break
        big, small = small, _content_in(r, k)[1]
    return _integer_primitive(_mul_terms(content, small))[1]


def _zz_gcd(f: Terms, g: Terms):
    """gcd of integer-primitive nonzero polynomials with exact integer cofactors.

    Returns (h, f/h, g/h) with ``h`` primitive and of positive leading coefficient.
    """
    arity = len(next(iter(f)))
    unit = (0,) * arity
    if f == g:
        return f, {unit: 1}, {unit: 1}
    mf = _monomial_content(f)
    mg = _monomial_content(g)
    mh = tuple(map(min, mf, mg))
    if any(mf):
        f = _shift(f, mf, sub)
    if any(mg):
        g = _shift(g, mg, sub)

    if len(f) == 1 or len(g) == 1:
        h, cff, cfg = {unit: 1}, f, g
    else:
        try:
            h, cff, cfg = _heu_gcd(f, g)
        except _HeuristicGCDFailed:
            logger.debug("heuristic gcd failed on %d/%d terms, using PRS", len(f), len(g))
            h = _prs_gcd(f, g)
            cff = _divide(f, h, integral=True)
            cfg = _divide(g, h, integral=True)
        if _leading(h)[1] < 0:
            h = _scale(h, -1)
            cff = _scale(cff, -1)
            cfg = _scale(cfg, -1)

    if any(mh):
        h = _shift(h, mh)
    if mf != mh:
        cff = _shift(cff, tuple(map(sub, mf, mh)))
    if mg != mh:
        cfg = _shift(cfg, tuple(map(sub, mg, mh)))
    return h, cff, cfg


def _gcd_only(a: Terms, b: Terms) -> Terms:
    return _zz_gcd(_integer_primitive(a)[1], _integer_primitive(b)[1])[0]


def _cancel_terms(a: Terms, b: Terms):
    """(h, a/h, b/h) for nonzero rational ``a``, ``b`` with ``h`` their normalized gcd."""
    ca, f = _integer_primitive(a)
    cb, g = _integer_primitive(b)
    h, cff, cfg = _zz_gcd(f, g)
    return h, _scale(cff, ca), _scale(cfg, cb)


class Polynomial:
    """Immutable sparse polynomial in the indeterminates of a ``VarTable``."""

    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table: VarTable, terms: Optional[Mapping[Monomial, RationalLike]] = None):
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != table.arity or any(x < 0 for x in e):
                raise ValueError(f"bad monomial {e} for {table.names}")
            c = as_rational(c)
            if c:
                clean[e] = _coeff(clean.get(e, 0) + c)
                if not clean[e]:
                    del clean[e]
        self._set(table, clean)

    def _set(self, table, terms):
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, key, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def _wrap(cls, table: VarTable, terms: Terms) -> "Polynomial":
        p = cls.__new__(cls)
        p._set(table, terms)
        return p

    @classmethod
    def constant(cls, table: VarTable, c) -> "Polynomial":
        c = _coeff(as_rational(c))
        return cls._wrap(table, {(0,) * table.arity: c} if c else {})

    @classmethod
    def variable(cls, table: VarTable, name: str) -> "Polynomial":
        i = table.index(name)
        return cls._wrap(table, {tuple(int(j == i) for j in range(table.arity)): 1})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    @property
    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return as_rational(next(iter(self.terms.values()), 0))

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, name: Optional[str] = None) -> int:
        if name is None:
            return self.total_degree()
        k = self.table.index(name)
        return max((e[k] for e in self.terms), default=-1)

    def occurring(self) -> Tuple[str, ...]:
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return tuple(self.table.names[i] for i in sorted(used))

    def leading_term(self) -> Tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        e, c = _leading(self.terms)
        return e, as_rational(c)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.table != self.table:
                raise TableMismatch(f"{self.table.names} vs {other.table.names}")
            return other
        if isinstance(other, RationalLike):
            return Polynomial.constant(self.table, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(self.table, _add_terms(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(self.table, _add_terms(self.terms, other.terms, sub))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(self.table, _mul_terms(self.terms, other.terms))

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial._wrap(self.table, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        return poly_pow(self, k)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, RationalLike):
            other = Polynomial.constant(self.table, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.table, frozenset(self.terms.items()))))
        return self._hash

    def __str__(self):
        return poly_canonical_string(self)

    def __repr__(self):
        return f"Polynomial({poly_canonical_string(self)!r})"


def poly_const(table: VarTable, c) -> Polynomial:
    return Polynomial.constant(table, c)


def poly_var(table: VarTable, name: str) -> Polynomial:
    return Polynomial.variable(table, name)


def _same_table(a: Polynomial, b: Polynomial):
    if a.table != b.table:
        raise TableMismatch(f"{a.table.names} vs {b.table.names}")


def poly_arith(a: Polynomial, b: Polynomial, op: Literal["add", "sub", "mul"]) -> Polynomial:
    _same_table(a, b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poly_neg(p: Polynomial) -> Polynomial:
    return -p


def poly_scale(p: Polynomial, c) -> Polynomial:
    return Polynomial._wrap(p.table, _scale(p.terms, as_rational(c)))


def poly_pow(p: Polynomial, k: int) -> Polynomial:
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"polynomial exponent must be a non-negative integer, got {k!r}")
    result = Polynomial.constant(p.table, 1)
    base = p
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def poly_eval(p: Polynomial, subst: Mapping[str, RationalLike]) -> Fraction:
    """Exact value of ``p`` at a rational point, computed over a common denominator."""
    if not p.terms:
        return Fraction(0)
    arity = p.table.arity
    top = [0] * arity
    for e in p.terms:
        for i, x in enumerate(e):
            if x > top[i]:
                top[i] = x
    nums, dens = [], []
    den_total = 1
    for i, name in enumerate(p.table.names):
        if not top[i]:
            nums.append(None)
            dens.append(None)
            continue
        if name not in subst:
            raise MissingBinding(f"no value bound for {name!r}")
        v = as_rational(subst[name])
        a, b = v.numerator, v.denominator
        nums.append([a ** j for j in range(top[i] + 1)])
        dens.append([b ** j for j in range(top[i] + 1)])
        den_total *= dens[-1][top[i]]
    coeff_den = math.lcm(*(c.denominator for c in p.terms.values()))
    total = 0
    for e, c in p.terms.items():
        v = c.numerator * (coeff_den // c.denominator)
        for i, x in enumerate(e):
            if top[i]:
                v *= nums[i][x] * dens[i][top[i] - x]
        total += v
    return Fraction(total, den_total * coeff_den)


def poly_content(p: Polynomial) -> Fraction:
    if not p.terms:
        return Fraction(0)
    return _integer_primitive(p.terms)[0]


def poly_primitive(p: Polynomial) -> Tuple[Fraction, Polynomial]:
    """(content, primitive part): ``p == content * primitive`` with an integer primitive part of
    coefficient gcd 1 and positive leading coefficient."""
    if not p.terms:
        return Fraction(0), p
    content, prim = _integer_primitive(p.terms)
    return content, Polynomial._wrap(p.table, prim)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    _same_table(a, b)
    if not a.terms:
        return poly_primitive(b)[1]
    if not b.terms:
        return poly_primitive(a)[1]
    h, _, _ = _cancel_terms(a.terms, b.terms)
    return Polynomial._wrap(a.table, h)


def poly_cancel(a: Polynomial, b: Polynomial) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """(g, a/g, b/g) with ``g = poly_gcd(a, b)``; both operands must be nonzero."""
    _same_table(a, b)
    if not a.terms or not b.terms:
        raise ValueError("poly_cancel needs nonzero operands")
    h, cff, cfg = _cancel_terms(a.terms, b.terms)
    wrap = Polynomial._wrap
    return wrap(a.table, h), wrap(a.table, cff), wrap(a.table, cfg)


def poly_divexact(a: Polynomial, b: Polynomial) -> Polynomial:
    _same_table(a, b)
    if not b.terms:
        raise DivisionByZero(f"({a}) / 0")
    if not a.terms:
        return a
    q = _divide(a.terms, b.terms)
    if q is None:
        raise InexactDivision(f"{b} does not divide {a}")
    return Polynomial._wrap(a.table, q)


def _format_monomial(table: VarTable, e: Monomial) -> str:
    return "*".join(
        name if x == 1 else f"{name}^{x}" for name, x in zip(table.names, e) if x
    )


def poly_canonical_string(p: Polynomial, factored: bool = False) -> str:
    if not p.terms:
        return "0"
    if factored:
        content, prim = poly_primitive(p)
        if content != 1:
            body = poly_canonical_string(prim)
            if content == -1:
                return f"-({body})"
            return f"{rat_format(content)}*({body})"
    parts = []
    for e, c in sorted(p.terms.items(), key=lambda item: _order_key(item[0]), reverse=True):
        c = as_rational(c)
        mono = _format_monomial(p.table, e)
        magnitude = abs(c)
        if not mono:
            body = rat_format(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{rat_format(magnitude)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts)
