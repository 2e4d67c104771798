"""
Laurent polynomials in one variable over a pluggable coefficient domain.

Three coefficient domains are supported:

* ``RATIONAL``: exact rationals (``int`` when integral, ``fractions.Fraction`` otherwise);
* ``LAURENT_IN_Q``: Laurent polynomials in the formal variable ``q`` over ``RATIONAL``;
* ``complex_domain(tol)``: double precision complex numbers, where anything below ``tol`` counts as zero.

The loop parameter is never an independent symbol: it is always ``-q - 1/q``, see :func:`delta`.

>>> x = LaurentPoly.monomial(1)
>>> (x + 1) * (x - 1)
LaurentPoly('x^2 - 1')
>>> (x**2 + x**-2).to_t_variable()
LaurentPoly('t^2 - 2')
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Mapping, Union

Number = Union[int, Fraction, complex]


class DomainMismatch(ValueError):
    """Raised when polynomials over different coefficient domains are combined."""


class NotDivisible(ArithmeticError):
    """Raised by :meth:`LaurentPoly.exact_div` when the division leaves a remainder."""


@dataclass(frozen=True)
class CoeffDomain:
    kind: str
    tol: float | None = None

    def __post_init__(self):
        if self.kind not in ("rational", "laurent_q", "complex"):
            raise ValueError(f"unknown coefficient domain {self.kind!r}")
        if self.kind == "complex":
            if self.tol is None or not self.tol > 0:
                raise ValueError("complex domain needs a positive tolerance")
        elif self.tol is not None:
            raise ValueError("only the complex domain carries a tolerance")

    @property
    def exact(self) -> bool:
        return self.kind != "complex"

    @property
    def numeric(self) -> bool:
        """True when q must be supplied as a number (the loop parameter is not symbolic)."""
        return self.kind != "laurent_q"

    def coerce(self, c: Any):
        """Convert a Python number (or q-polynomial) into a normalized coefficient of this domain."""
        if self.kind == "rational":
            if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
                raise DomainMismatch(f"{c!r} is not a rational number")
            return _norm_rat(c)
        if self.kind == "complex":
            if isinstance(c, LaurentPoly):
                raise DomainMismatch("polynomial used as a complex scalar")
            return complex(c)
        if isinstance(c, LaurentPoly):
            if c.domain is not RATIONAL or c.var != "q":
                raise DomainMismatch("LAURENT_IN_Q coefficients must be rational polynomials in q")
            return c
        if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
            return LaurentPoly._make({0: _norm_rat(c)} if c else {}, RATIONAL, "q")
        raise DomainMismatch(f"{c!r} is not a Laurent polynomial in q")

    def is_zero(self, c) -> bool:
        if self.kind == "complex":
            return abs(c) < self.tol
        if self.kind == "laurent_q":
            return not c.coeffs
        return c == 0

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def div(self, a, b):
        """Exact quotient a/b in the coefficient ring, or None when it does not exist."""
        if self.kind == "rational":
            return _norm_rat(Fraction(a) / b)
        if self.kind == "complex":
            return a / b
        try:
            return a.exact_div(b)
        except NotDivisible:
            return None

    def __repr__(self):
        if self.kind == "complex":
            return f"COMPLEX(tol={self.tol:g})"
        return "RATIONAL" if self.kind == "rational" else "LAURENT_IN_Q"


RATIONAL = CoeffDomain("rational")
LAURENT_IN_Q = CoeffDomain("laurent_q")


def complex_domain(tol: float = 1e-9) -> CoeffDomain:
    return CoeffDomain("complex", tol)


def _norm_rat(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    return int(c)


def _same_domain(a: CoeffDomain, b: CoeffDomain) -> bool:
    return a is b or a == b


class LaurentPoly:
    """
    An immutable Laurent polynomial, stored as a sparse map exponent -> nonzero coefficient.

    The variable name is cosmetic (``x`` for the diagram variable, ``q`` for the loop parameter tower,
    ``t`` for the symmetric variable ``x + 1/x``), but two polynomials only combine when the names agree.
    """

    __slots__ = ("coeffs", "domain", "var", "_hash")

    def __init__(self, coeffs: Mapping[int, Any] | None = None, domain: CoeffDomain = RATIONAL, var: str = "x"):
        clean = {}
        for e, c in (coeffs or {}).items():
            c = domain.coerce(c)
            if not domain.is_zero(c):
                clean[int(e)] = c
        self.coeffs = clean
        self.domain = domain
        self.var = var
        self._hash = None

    @classmethod
    def _make(cls, coeffs: dict, domain: CoeffDomain, var: str) -> LaurentPoly:
        p = cls.__new__(cls)
        p.coeffs = coeffs
        p.domain = domain
        p.var = var
        p._hash = None
        return p

    @classmethod
    def zero(cls, domain: CoeffDomain = RATIONAL, var: str = "x") -> LaurentPoly:
        return cls._make({}, domain, var)

    @classmethod
    def constant(cls, c, domain: CoeffDomain = RATIONAL, var: str = "x") -> LaurentPoly:
        return cls({0: c}, domain, var)

    @classmethod
    def monomial(cls, e: int, c=1, domain: CoeffDomain = RATIONAL, var: str = "x") -> LaurentPoly:
        return cls({e: c}, domain, var)

    # ----------------------------------------------------------------- basic queries

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, e: int):
        c = self.coeffs.get(e)
        return self.domain.zero() if c is None else c

    def min_max_deg(self) -> tuple[int, int]:
        """Smallest and largest exponent carrying a nonzero coefficient."""
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degrees")
        return min(self.coeffs), max(self.coeffs)

    def is_monomial(self) -> bool:
        """Units of the Laurent ring over a field are exactly the nonzero monomials."""
        return len(self.coeffs) == 1

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self.coeffs)

    # ----------------------------------------------------------------- arithmetic

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.var == self.var:
                if not _same_domain(other.domain, self.domain):
                    raise DomainMismatch(f"{self.domain!r} vs {other.domain!r}")
                return other
            if self.domain.kind == "laurent_q" and other.var == "q" and other.domain is RATIONAL:
                return LaurentPoly._make({0: other} if other.coeffs else {}, self.domain, self.var)
            raise DomainMismatch(f"cannot combine variables {self.var!r} and {other.var!r}")
        c = self.domain.coerce(other)
        if self.domain.is_zero(c):
            return LaurentPoly._make({}, self.domain, self.var)
        return LaurentPoly._make({0: c}, self.domain, self.var)

    def _clean(self, c):
        return c if self.domain.kind != "rational" else _norm_rat(c)

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        out = dict(self.coeffs)
        is_zero = self.domain.is_zero
        for e, c in other.coeffs.items():
            if e in out:
                s = self._clean(out[e] + c)
                if is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return LaurentPoly._make(out, self.domain, self.var)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._make({e: -c for e, c in self.coeffs.items()}, self.domain, self.var)

    def __sub__(self, other) -> LaurentPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> LaurentPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return LaurentPoly._make({}, self.domain, self.var)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e in out:
                    out[e] = out[e] + c1 * c2
                else:
                    out[e] = c1 * c2
        is_zero = self.domain.is_zero
        if self.domain.kind == "rational":
            out = {e: _norm_rat(c) for e, c in out.items() if c != 0}
        else:
            out = {e: c for e, c in out.items() if not is_zero(c)}
        return LaurentPoly._make(out, self.domain, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self.coeffs.items()
            return LaurentPoly._make({e * n: self.domain.div(self.domain.one(), c) ** (-n)}, self.domain, self.var)
        result = self._coerce(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, s: int) -> LaurentPoly:
        """Multiply by the unit monomial var^s."""
        return LaurentPoly._make({e + s: c for e, c in self.coeffs.items()}, self.domain, self.var)

    def scale(self, c) -> LaurentPoly:
        return self * c

    def substitute_power(self, k: int) -> LaurentPoly:
        """Return p(x^k), i.e. every exponent e becomes k*e."""
        if k < 1:
            raise ValueError("substitute_power needs k >= 1")
        return LaurentPoly._make({k * e: c for e, c in self.coeffs.items()}, self.domain, self.var)

    def rename(self, var: str) -> LaurentPoly:
        return LaurentPoly._make(dict(self.coeffs), self.domain, var)

    # ----------------------------------------------------------------- division

    def _divmod_top(self, d: LaurentPoly):
        """Top-down long division. Returns (quotient, ok) where ok says the remainder vanished."""
        d = self._coerce(d)
        if not d.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        dom = self.domain
        if not self.coeffs:
            return LaurentPoly._make({}, dom, self.var), True
        dmin, dmax = d.min_max_deg()
        lc = d.coeffs[dmax]
        floor = min(self.coeffs) - dmin
        rem = dict(self.coeffs)
        quo = {}
        while rem:
            top = max(rem)
            e = top - dmax
            if e < floor:
                return LaurentPoly._make(quo, dom, self.var), False
            c = dom.div(rem[top], lc)
            if c is None:
                return LaurentPoly._make(quo, dom, self.var), False
            quo[e] = c
            for de, dc in d.coeffs.items():
                k = e + de
                v = rem.get(k)
                v = -(c * dc) if v is None else self._clean(v - c * dc)
                if dom.is_zero(v):
                    rem.pop(k, None)
                else:
                    rem[k] = v
            if dom.kind == "complex":
                rem.pop(top, None)
        return LaurentPoly._make(quo, dom, self.var), True

    def divides(self, p) -> bool:
        """True iff ``p = self * r`` for a Laurent polynomial r over the coefficient ring."""
        _, ok = self._coerce(p)._divmod_top(self)
        return ok

    def exact_div(self, d) -> LaurentPoly:
        """The quotient self / d; raises :class:`NotDivisible` if it is not a Laurent polynomial."""
        quo, ok = self._divmod_top(d)
        if not ok:
            raise NotDivisible(f"{d!r} does not divide {self!r}")
        return quo

    # ----------------------------------------------------------------- symmetry

    def is_symmetric(self) -> bool:
        """True iff the coefficients of x^e and x^-e agree for every e."""
        dom = self.domain
        for e, c in self.coeffs.items():
            if e > 0:
                other = self.coeffs.get(-e)
                if other is None or not dom.is_zero(self._clean(c - other)):
                    return False
            elif e < 0 and -e not in self.coeffs:
                return False
        return True

    def to_t_variable(self) -> LaurentPoly:
        """The unique polynomial W with W(x + 1/x) = self."""
        if not self.is_symmetric():
            raise ValueError("to_t_variable needs a polynomial symmetric under x -> 1/x")
        rest = self
        out = {}
        while rest.coeffs:
            n = max(rest.coeffs)
            c = rest.coeffs[n]
            out[n] = c
            rest = rest - _x_plus_inverse_power(n, self.domain, self.var) * c
            if self.domain.kind == "complex":
                rest = LaurentPoly._make({e: v for e, v in rest.coeffs.items() if e < n}, rest.domain, rest.var)
        return LaurentPoly(out, self.domain, "t")

    def from_t_variable(self, var: str = "x") -> LaurentPoly:
        """Substitute t := x + 1/x into a polynomial in t."""
        if not self.is_polynomial():
            raise ValueError("from_t_variable needs nonnegative exponents")
        out = LaurentPoly.zero(self.domain, var)
        for n, c in self.coeffs.items():
            out = out + _x_plus_inverse_power(n, self.domain, var) * c
        return out

    # ----------------------------------------------------------------- evaluation

    def evaluate_q(self, q_value, domain: CoeffDomain | None = None) -> LaurentPoly:
        """Specialize q to a number, turning a LAURENT_IN_Q polynomial into a numeric one."""
        if self.domain.kind != "laurent_q":
            raise DomainMismatch("evaluate_q needs a LAURENT_IN_Q polynomial")
        if domain is None:
            domain = complex_domain() if isinstance(q_value, complex) else RATIONAL
        if domain.kind == "rational":
            if q_value == 0:
                raise ZeroDivisionError("q must be nonzero")
            vals = {e: _eval_rational(c, Fraction(q_value)) for e, c in self.coeffs.items()}
        else:
            vals = {e: eval_complex(c, q_value) for e, c in self.coeffs.items()}
        return LaurentPoly(vals, domain, self.var)

    def __call__(self, z, q_value=None):
        return eval_complex(self, z, q_value)

    # ----------------------------------------------------------------- comparison / display

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.var == other.var and _same_domain(self.domain, other.domain) and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, complex)):
            try:
                return self == self._coerce(other)
            except DomainMismatch:
                return False
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, self.domain, frozenset(self.coeffs.items())))
        return self._hash

    def isclose(self, other, tol: float = 1e-9) -> bool:
        other = self._coerce(other)
        keys = set(self.coeffs) | set(other.coeffs)
        return all(abs(complex(_to_number(self.coeff(e))) - complex(_to_number(other.coeff(e)))) <= tol
                   for e in keys)

    def __repr__(self):
        return f"LaurentPoly('{self}')"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = "" if e == 0 else self.var if e == 1 else f"{self.var}^{e}"
            if isinstance(c, LaurentPoly):
                cs = str(c)
                neg = False
                if len(c.coeffs) > 1:
                    cs = f"({cs})"
                elif cs.startswith("-"):
                    neg, cs = True, cs[1:]
                if cs == "1" and mono:
                    cs = ""
                term = cs + ("*" if cs and mono else "") + mono if mono else cs
            elif isinstance(c, complex):
                neg = False
                term = f"({c.real:.6g}{c.imag:+.6g}j)" + ("*" + mono if mono else "")
            else:
                neg = c < 0
                a = abs(c)
                cs = "" if (a == 1 and mono) else str(a)
                term = cs + ("*" if "/" in cs and mono else "") + mono
            sign = (" - " if neg else " + ") if parts else ("-" if neg else "")
            parts.append(sign + term)
        return "".join(parts)

    # ----------------------------------------------------------------- serialization

    def to_json(self) -> dict:
        """``{"var": ..., "coeffs": {"<exponent>": <coefficient>}}`` with exponents in increasing order."""
        out = {}
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            if isinstance(c, LaurentPoly):
                out[str(e)] = c.to_json()
            elif isinstance(c, complex):
                out[str(e)] = [c.real, c.imag]
            else:
                out[str(e)] = str(Fraction(c))
        return {"var": self.var, "coeffs": out}

    @classmethod
    def from_json(cls, obj: Mapping, domain: CoeffDomain | None = None) -> LaurentPoly:
        var = obj.get("var", "x")
        raw = obj["coeffs"]
        if domain is None:
            values = list(raw.values())
            if values and isinstance(values[0], Mapping):
                domain = LAURENT_IN_Q
            elif values and isinstance(values[0], (list, tuple)):
                domain = complex_domain()
            else:
                domain = RATIONAL
        coeffs = {}
        for e, c in raw.items():
            if domain.kind == "laurent_q":
                coeffs[int(e)] = cls.from_json(c, RATIONAL)
            elif domain.kind == "complex":
                coeffs[int(e)] = complex(c[0], c[1])
            else:
                coeffs[int(e)] = Fraction(c)
        return cls(coeffs, domain, var)


def _to_number(c):
    if isinstance(c, LaurentPoly):
        if c.coeffs and set(c.coeffs) != {0}:
            raise ValueError("non-constant coefficient has no numeric value")
        return c.coeffs.get(0, 0)
    return c


def _eval_rational(p: LaurentPoly, q: Fraction):
    return _norm_rat(sum((Fraction(c) * q**e for e, c in p.coeffs.items()), Fraction(0)))


_XPI_CACHE: dict = {}


def _x_plus_inverse_power(n: int, domain: CoeffDomain, var: str) -> LaurentPoly:
    """(x + 1/x)^n, expanded by the binomial theorem."""
    key = (n, domain, var)
    p = _XPI_CACHE.get(key)
    if p is None:
        p = LaurentPoly({n - 2 * i: math.comb(n, i) for i in range(n + 1)}, domain, var)
        _XPI_CACHE[key] = p
    return p


def eval_complex(p: LaurentPoly, z, q_value=None) -> complex:
    """Numeric value of p at x = z (and q = q_value for LAURENT_IN_Q coefficients)."""
    if not p.coeffs:
        return 0j
    z = complex(z)
    if z == 0 and any(e < 0 for e in p.coeffs):
        raise ZeroDivisionError("cannot evaluate negative powers at z = 0")
    if p.domain.kind == "laurent_q":
        if q_value is None:
            raise ValueError("q_value is required for LAURENT_IN_Q polynomials")
        return sum(eval_complex(c, q_value) * z**e for e, c in p.coeffs.items())
    return sum(complex(c) * z**e for e, c in p.coeffs.items())


def _zero_check(z):
    if complex(z) == 0:
        raise ZeroDivisionError("evaluation point must be nonzero")


# ----------------------------------------------------------------------------- module-level API


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def min_max_deg(p: LaurentPoly) -> tuple[int, int]:
    return p.min_max_deg()


def substitute_power(p: LaurentPoly, k: int) -> LaurentPoly:
    return p.substitute_power(k)


def divides(d: LaurentPoly, p: LaurentPoly) -> bool:
    return d.divides(p)


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    return p.exact_div(d)


def is_symmetric(p: LaurentPoly) -> bool:
    return p.is_symmetric()


def to_t_variable(p: LaurentPoly) -> LaurentPoly:
    return p.to_t_variable()


def eval_point(p: LaurentPoly, z, q_value=None) -> complex:
    """Like :func:`eval_complex` but rejects z = 0 outright, as the sheets of the center do."""
    _zero_check(z)
    return eval_complex(p, z, q_value)


# ----------------------------------------------------------------------------- the q tower

Q = LaurentPoly.monomial(1, var="q")


def q_power(n: int) -> LaurentPoly:
    """q^n as a coefficient of LAURENT_IN_Q."""
    return LaurentPoly._make({n: 1}, RATIONAL, "q")


def delta(domain: CoeffDomain = LAURENT_IN_Q, q=None):
    """The loop parameter -q - 1/q as a scalar of the given domain."""
    if domain.kind == "laurent_q":
        q_scalar(domain, q)
        return LaurentPoly._make({1: -1, -1: -1}, RATIONAL, "q")
    qs = q_scalar(domain, q)
    inv = 1 / qs if domain.kind == "complex" else Fraction(1) / qs
    return domain.coerce(-qs - inv)


def q_scalar(domain: CoeffDomain = LAURENT_IN_Q, q=None):
    """q as a scalar of the domain: the formal variable, or the supplied number."""
    if domain.kind == "laurent_q":
        if q is not None:
            raise ValueError("symbolic mode does not take a numeric q")
        return Q
    if q is None:
        raise ValueError(f"{domain!r} needs a numeric value of q")
    if q == 0:
        raise ValueError("q must be nonzero")
    return domain.coerce(q if domain.kind == "complex" else Fraction(q))


def x_poly(coeffs: Mapping[int, Any] | Iterable, domain: CoeffDomain = LAURENT_IN_Q) -> LaurentPoly:
    """Convenience constructor for polynomials in x."""
    return LaurentPoly(dict(coeffs), domain, "x")
