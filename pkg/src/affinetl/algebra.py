"""
Elements of the affine Temperley-Lieb algebra T_N(delta): finite linear combinations of diagrams in D(N, N).

The product of two diagrams is delta^(loops) times their composite; delta is always -q - 1/q, symbolic in
LAURENT_IN_Q mode and numeric otherwise.

>>> E = AlgebraElement.from_diagram(cup_cap(2, 1))
>>> E * E == E.scale(delta())
True
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Mapping, NamedTuple

from . import diagrams as dg
from .diagrams import AffineDiagram, cup_cap  # noqa: F401  (cup_cap is used by the doctest)
from .laurent import LAURENT_IN_Q, CoeffDomain, DomainMismatch, LaurentPoly, delta as _delta
from .polys import tau_set


def delta(domain: CoeffDomain = LAURENT_IN_Q, q=None):
    return _delta(domain, q)


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    N: int
    terms: Mapping[AffineDiagram, Any]
    domain: CoeffDomain = LAURENT_IN_Q
    q: Any = None

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be positive")
        if self.domain.numeric and (self.q is None or self.q == 0):
            raise ValueError(f"{self.domain!r} needs a nonzero numeric q")
        if not self.domain.numeric and self.q is not None:
            raise ValueError("symbolic mode does not take a numeric q")
        clean = {}
        for d, c in self.terms.items():
            if d.top != self.N or d.bottom != self.N:
                raise ValueError(f"diagram of type ({d.bottom}, {d.top}) in an element of T_{self.N}")
            c = self.domain.coerce(c)
            if not self.domain.is_zero(c):
                clean[d] = c
        object.__setattr__(self, "terms", clean)

    # ----------------------------------------------------------------- construction

    @classmethod
    def zero(cls, N: int, domain: CoeffDomain = LAURENT_IN_Q, q=None) -> AlgebraElement:
        return cls(N, {}, domain, q)

    @classmethod
    def one(cls, N: int, domain: CoeffDomain = LAURENT_IN_Q, q=None) -> AlgebraElement:
        return cls(N, {dg.identity(N): 1}, domain, q)

    @classmethod
    def from_diagram(cls, d: AffineDiagram, coeff=1, domain: CoeffDomain = LAURENT_IN_Q, q=None) -> AlgebraElement:
        if d.top != d.bottom:
            raise ValueError("algebra elements need diagrams with as many top as bottom points")
        return cls(d.top, {d: coeff}, domain, q)

    def like(self, terms: Mapping[AffineDiagram, Any]) -> AlgebraElement:
        return AlgebraElement(self.N, terms, self.domain, self.q)

    # ----------------------------------------------------------------- arithmetic

    def _check(self, other: AlgebraElement):
        if not isinstance(other, AlgebraElement):
            raise TypeError(f"cannot combine an algebra element with {type(other).__name__}")
        if other.N != self.N:
            raise ValueError(f"N mismatch: {self.N} vs {other.N}")
        if other.domain != self.domain or other.q != self.q:
            raise DomainMismatch("algebra elements over different coefficient domains")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            out[d] = out[d] + c if d in out else c
        return self.like(out)

    def __neg__(self) -> AlgebraElement:
        return self.like({d: -c for d, c in self.terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c) -> AlgebraElement:
        c = self.domain.coerce(c)
        return self.like({d: v * c for d, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (self.N, self.domain, self.q) == (other.N, other.domain, other.q) and self.terms == other.terms

    def __hash__(self):
        return hash((self.N, frozenset(self.terms.items())))

    def isclose(self, other: AlgebraElement, tol: float = 1e-9) -> bool:
        self._check(other)
        keys = set(self.terms) | set(other.terms)
        zero = self.domain.zero()
        return all(abs(self.terms.get(d, zero) - other.terms.get(d, zero)) <= tol for d in keys)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return f"AlgebraElement(N={self.N}, 0)"
        return f"AlgebraElement(N={self.N}, " + " + ".join(f"({c})*{d}" for d, c in self.terms.items()) + ")"

    # ----------------------------------------------------------------- json

    def to_json(self) -> dict:
        out = {"N": self.N, "terms": [{"diagram": d.to_json(), "coeff": _coeff_json(c)} for d, c in self.terms.items()]}
        if self.q is not None:
            out["q"] = [complex(self.q).real, complex(self.q).imag] if self.domain.kind == "complex" else str(self.q)
        return out

    @classmethod
    def from_json(cls, obj: Mapping, domain: CoeffDomain = LAURENT_IN_Q, q=None) -> AlgebraElement:
        terms: dict = {}
        for t in obj["terms"]:
            d = AffineDiagram.from_json(t["diagram"])
            c = _coeff_from_json(t["coeff"], domain)
            terms[d] = terms[d] + c if d in terms else c
        return cls(int(obj["N"]), terms, domain, q)


def _coeff_json(c):
    # coefficients travel as constant polynomials so that one schema covers every domain
    return LaurentPoly.constant(c, _domain_of(c), "x").to_json()


def _domain_of(c):
    from .laurent import RATIONAL, complex_domain
    if isinstance(c, LaurentPoly):
        return LAURENT_IN_Q
    if isinstance(c, complex):
        return complex_domain()
    return RATIONAL


def _coeff_from_json(obj, domain: CoeffDomain):
    if isinstance(obj, (int, str)):
        from fractions import Fraction
        return domain.coerce(Fraction(obj))
    p = LaurentPoly.from_json(obj)
    c = p.coeff(0)
    if set(p.coeffs) - {0}:
        raise ValueError("algebra coefficients must be constants")
    if domain.kind == "laurent_q" and not isinstance(c, LaurentPoly):
        return domain.coerce(c)
    if domain.kind == "complex" and isinstance(c, LaurentPoly):
        raise DomainMismatch("symbolic coefficient in a numeric element")
    return domain.coerce(c)


# ----------------------------------------------------------------------------- operations


def multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of (alpha, beta) -> delta^loops * (alpha o beta)."""
    a._check(b)
    dlt = delta(a.domain, a.q)
    powers = [a.domain.one()]
    out: dict = {}
    for da, ca in a.terms.items():
        for db, cb in b.terms.items():
            d, loops = dg.compose(da, db)
            while len(powers) <= loops:
                powers.append(powers[-1] * dlt)
            c = ca * cb * powers[loops]
            out[d] = out[d] + c if d in out else c
    return a.like(out)


def star(a: AlgebraElement) -> AlgebraElement:
    """Termwise reflection; an anti-automorphism."""
    return a.like({dg.reflect(d): c for d, c in a.terms.items()})


class DegreeData(NamedTuple):
    deg: int
    principal_part: AlgebraElement


def degree_data(a: AlgebraElement) -> DegreeData:
    """Maximal number of through arcs in the support, and the terms attaining it."""
    if not a.terms:
        raise ValueError("the zero element has no degree")
    deg = max(d.through_count for d in a.terms)
    return DegreeData(deg, a.like({d: c for d, c in a.terms.items() if d.through_count == deg}))


def in_filtration_ideal(a: AlgebraElement, k: int) -> bool:
    """Membership in I^k_N: every diagram has at most k through arcs."""
    if k not in tau_set(a.N):
        raise ValueError(f"k={k} is not in T_{a.N}")
    return all(d.through_count <= k for d in a.terms)


def in_fan_green_subalgebra(d: AffineDiagram) -> bool:
    """The unit, or a non-monic diagram of even rank."""
    if d.top != d.bottom:
        raise ValueError("expected a diagram in D(N, N)")
    return d == dg.identity(d.top) or (not dg.is_monic(d) and dg.rank(d) % 2 == 0)


def element_from_factored(mu: AffineDiagram, P: LaurentPoly, nu: AffineDiagram,
                          domain: CoeffDomain | None = None, q=None) -> AlgebraElement:
    """
    mu P(tau_k) nu^*: the sum over exponents e of coeff(P, e) * (mu o tau_k^e o nu^*).

    No loops can close here, since mu and nu are standard (monic) and the middle is a twist.
    """
    if mu.bottom != nu.bottom or mu.top != nu.top:
        raise ValueError("mu and nu must be standard diagrams of the same type")
    k, N = mu.bottom, mu.top
    domain = P.domain if domain is None else domain
    if P.domain != domain:
        raise DomainMismatch("coefficient polynomial lives in a different domain")
    if k == 0 and any(e < 0 for e in P.coeffs):
        raise ValueError("tau_0 is not invertible: negative exponents are not allowed for k = 0")
    nu_star = dg.reflect(nu)
    terms: dict = {}
    for e, c in P.coeffs.items():
        d, loops = dg.compose_many(mu, dg.twist(k, e), nu_star)
        if loops:
            raise AssertionError("a loop closed between standard diagrams and a twist")
        terms[d] = terms[d] + c if d in terms else c
    return AlgebraElement(N, terms, domain, q)


def tau(N: int, power: int = 1, domain: CoeffDomain = LAURENT_IN_Q, q=None) -> AlgebraElement:
    return AlgebraElement.from_diagram(dg.twist(N, power), 1, domain, q)


def sum_elements(items: Iterable[AlgebraElement], N: int, domain: CoeffDomain = LAURENT_IN_Q, q=None) -> AlgebraElement:
    out: dict = {}
    for it in items:
        for d, c in it.terms.items():
            out[d] = out[d] + c if d in out else c
    return AlgebraElement(N, out, domain, q)
