"""
Geometry of the center: ideal generators, sheet evaluations, gluing points, and the explicit center of T_3.

A central element is a tuple of Laurent polynomials (f_k) indexed by T_N, where f_k is the scalar by which it
acts on M_k. The sheets are S_k = C^x for k > 0 and S_0 = C; a point z of S_k evaluates f to f_k(z), or for
k = 0 to f_0(t) with t + 1/t = z.

>>> [str(p) for p in ideal_generators(x_poly({1: 1, -1: 1}), "LAURENT")]
['1 + x^-2', 'x + x^-1', 'x^2 + 1']
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from . import diagrams as dg
from .algebra import AlgebraElement, element_from_factored, sum_elements
from .cellrep import cell_basis
from .laurent import CoeffDomain, LaurentPoly, complex_domain, delta, x_poly  # noqa: F401  (x_poly is used by the doctests)
from .linalg import LaurentMatrix
from .polys import h_factors, h_polynomial, p_polynomial, tau_set

__all__ = [
    "SheetPoint", "CenterElementTL3", "GluingReport", "h_polynomial", "p_polynomial", "ideal_generators",
    "psi_evaluate", "is_central_tl3", "hat_matrix", "candidate_gluings", "confirmed_gluings_tl3",
    "variety_summary", "sheet_roots", "ideal_coordinates", "evaluation_vector", "tl3_central_element",
]


# ----------------------------------------------------------------------------- ideal generators


def ideal_generators(P: LaurentPoly, ring: str = "LAURENT", companions: Sequence[LaurentPoly] = (),
                     extend: bool = True) -> list[LaurentPoly]:
    """
    Algebra generators of the ideal P*C[x] (ring "POLY") or P*C[x, 1/x] (ring "LAURENT").

    POLY: {1, x} for constant P, else x^i P for 0 <= i < deg P.
    LAURENT: {x, 1/x} for a unit; {x + a, 1/a + 1/x} when P is x + a up to a unit; otherwise P is recentered
    so that its exponents run from -m to n with m, n >= 1 and the family is x^j P for -m <= j <= n - 1. With
    ``extend`` the range of j is widened until the family, together with ``companions``, reaches degrees
    -M and M with one member touching only -M and another touching only M (the shape needed for the image of
    the evaluation map to be closed).
    """
    if P.is_zero():
        raise ValueError("the zero ideal")
    dom = P.domain
    x = LaurentPoly.monomial(1, 1, dom)
    lo, hi = P.min_max_deg()
    if ring.upper() == "POLY":
        if lo < 0:
            raise ValueError("POLY ring needs a polynomial without negative powers")
        if hi == 0:
            return [LaurentPoly.constant(1, dom), x]
        return [P.shift(i) for i in range(hi)]
    if ring.upper() != "LAURENT":
        raise ValueError(f"unknown ring {ring!r}")
    if lo == hi:
        return [x, LaurentPoly.monomial(-1, 1, dom)]
    if hi - lo == 1:
        lead = P.coeff(hi)
        alpha = dom.div(P.coeff(lo), lead)
        inv = dom.div(dom.one(), alpha) if alpha is not None else None
        if inv is None:
            raise ValueError("x + a needs an invertible constant a over this coefficient domain")
        return [x + alpha, LaurentPoly({0: inv, -1: 1}, dom)]
    span = hi - lo
    m = span // 2
    n = span - m
    P = P.shift(-lo - m)
    j_lo, j_hi = -m, n - 1
    if extend:
        M = max(m - j_lo, j_hi + n)
        for c in companions:
            if not c.is_zero():
                clo, chi = c.min_max_deg()
                M = max(M, -clo, chi)
        j_lo, j_hi = m - M, M - n
    return [P.shift(j) for j in range(j_lo, j_hi + 1)]


def _curve_hypotheses(family: Sequence[LaurentPoly]) -> bool:
    """Degree shape on a family of Laurent polynomials under which the evaluation curve is closed."""
    degs = [p.min_max_deg() for p in family if not p.is_zero()]
    if not degs:
        return False
    M = -min(d[0] for d in degs)
    if M <= 0 or max(d[1] for d in degs) != M:
        return False
    left = any(a == -M and b < M for a, b in degs)
    right = any(a > -M and b == M for a, b in degs)
    return left and right


# ----------------------------------------------------------------------------- sheets and evaluations


@dataclass(frozen=True)
class SheetPoint:
    k: int
    z: complex

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        if self.k < 0:
            raise ValueError("sheet index must be nonnegative")
        if self.k > 0 and self.z == 0:
            raise ValueError("sheets with k > 0 are punctured at 0")

    def to_json(self) -> dict:
        return {"k": self.k, "z": [self.z.real, self.z.imag]}

    @classmethod
    def from_json(cls, obj: Mapping) -> SheetPoint:
        return cls(int(obj["k"]), complex(*obj["z"]))

    def close_to(self, other: SheetPoint, tol: float) -> bool:
        return self.k == other.k and abs(self.z - other.z) <= tol * max(1.0, abs(self.z))


def psi_evaluate(f: Mapping[int, LaurentPoly], p: SheetPoint, q_value=None) -> complex:
    """psi_{k,z}(f): f_k(z) for k > 0, and f_0(t) with t + 1/t = z for k = 0."""
    fk = f[p.k]
    if p.k > 0:
        return fk(p.z, q_value)
    if not fk.is_symmetric():
        raise ValueError("the k = 0 component of a central element must be symmetric")
    return fk.to_t_variable()(p.z, q_value) if fk.coeffs else 0j


def sheet_roots(k: int, N: int, q_value, tol: float = 1e-9) -> list[complex]:
    """
    The special points of sheet k: roots of P_k(x^k) for k > 0, and z = t + 1/t over roots t of P_0 for k = 0.

    P_k(x^k) is a product of factors f(x^k) with f running over the factors of H_r, r <= k; each factor is
    a binomial whose roots come from companion-matrix eigenvalues (numpy.roots). Duplicates are merged.
    """
    dom = complex_domain(tol)
    power = max(k, 1)
    found: list[complex] = []
    for r in tau_set(N):
        if r > k:
            continue
        for f, _ in h_factors(r, N, dom, q_value):
            fk = f.substitute_power(power)
            lo, hi = fk.min_max_deg()
            coeffs = [complex(fk.coeff(e)) for e in range(hi, lo - 1, -1)]
            for t in np.roots(coeffs):
                t = complex(t)
                z = t + 1 / t if k == 0 else t
                if not any(abs(z - u) <= tol * max(1.0, abs(z)) for u in found):
                    found.append(z)
    return sorted(found, key=lambda z: (round(z.real, 9), round(z.imag, 9)))


def _sheet_value(p: SheetPoint) -> complex:
    # the quantity x^k of the necessary gluing condition; for k = 0 it is x^0 = 1
    return p.z ** p.k if p.k > 0 else 1 + 0j


def candidate_gluings(N: int, q_value, tol: float = 1e-9) -> list[tuple[SheetPoint, SheetPoint]]:
    """
    All pairs of special points (on one sheet or on two) with x^k = y^m within tolerance, i.e. the pairs
    satisfying the necessary conditions for being identified in the center variety.
    """
    if q_value == 0:
        raise ValueError("q must be nonzero")
    points = [SheetPoint(k, z) for k in reversed(tau_set(N)) for z in sheet_roots(k, N, q_value, tol)]
    out = []
    for i, a in enumerate(points):
        va = _sheet_value(a)
        for b in points[i + 1:]:
            vb = _sheet_value(b)
            if abs(va - vb) <= tol * max(1.0, abs(va)):
                out.append((a, b))
    return out


def confirmed_gluings_tl3(q_value, tol: float = 1e-9) -> GluingReport:
    """
    The identified points of the center variety of T_3: z in {+-sqrt(q), +-1/sqrt(q)} on sheet 3 glued to
    w = z^3 on sheet 1, i.e. the solutions of z^2 + z^-2 + delta = 0. Coincident pairs are merged.
    """
    if q_value == 0:
        raise ValueError("q must be nonzero")
    s = cmath.sqrt(complex(q_value))
    pairs: list[tuple[SheetPoint, SheetPoint]] = []
    for z in (s, -s, 1 / s, -1 / s):
        a, b = SheetPoint(3, z), SheetPoint(1, z ** 3)
        if not any(a.close_to(u, tol) and b.close_to(v, tol) for u, v in pairs):
            pairs.append((a, b))
    return GluingReport(3, complex(q_value), 2, candidate_gluings(3, q_value, tol), pairs, sheets=[1, 3])


CANDIDATES_ONLY = "N != 3: candidates only"


@dataclass(frozen=True)
class GluingReport:
    N: int
    q_value: complex | None
    component_count: int
    candidates: list = field(default_factory=list)
    confirmed: list | str = CANDIDATES_ONLY
    sheets: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        def pair(p):
            return {"from": p[0].to_json(), "to": p[1].to_json()}

        q = None if self.q_value is None else [complex(self.q_value).real, complex(self.q_value).imag]
        out = {"N": self.N, "q": q, "components": self.component_count,
               "candidates": [pair(p) for p in self.candidates],
               "confirmed": self.confirmed if isinstance(self.confirmed, str) else [pair(p) for p in self.confirmed]}
        if self.sheets:
            out["sheets"] = list(self.sheets)
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    @classmethod
    def from_json(cls, obj: Mapping) -> GluingReport:
        def pair(p):
            return SheetPoint.from_json(p["from"]), SheetPoint.from_json(p["to"])

        conf = obj["confirmed"]
        return cls(int(obj["N"]), None if obj.get("q") is None else complex(*obj["q"]), int(obj["components"]),
                   [pair(p) for p in obj["candidates"]], conf if isinstance(conf, str) else [pair(p) for p in conf],
                   list(obj.get("sheets", [])), list(obj.get("notes", [])))


def gluing_report(N: int, q_value, tol: float = 1e-9) -> GluingReport:
    if N == 3:
        return confirmed_gluings_tl3(q_value, tol)
    return GluingReport(N, complex(q_value), N // 2 + 1, candidate_gluings(N, q_value, tol), CANDIDATES_ONLY,
                        sheets=tau_set(N))


def variety_summary(N: int) -> GluingReport:
    """Component count, sheets, and the sets on which the evaluation map is injective."""
    notes = []
    for k in tau_set(N):
        if k == 0:
            notes.append("sheet 0 = C: injective off {t + 1/t : P_0(t) = 0}")
        else:
            notes.append(f"sheet {k} = C^x: injective off the roots of P_{k}(x^{k})")
    return GluingReport(N, None, N // 2 + 1, [], CANDIDATES_ONLY, sheets=tau_set(N), notes=notes)


# ----------------------------------------------------------------------------- coordinates from the ideal


def ideal_coordinates(N: int, q_value, tol: float = 1e-9) -> list[dict[int, LaurentPoly]]:
    """
    A generating family of the ideal of the center that is a product of principal ideals, as central tuples:
    for k > 0 the generators of P_k(x^k) C[x, 1/x]; for k = 0 the elements (x + 1/x)^i P_0(x) that generate
    P_0 C_s[x, 1/x]. Each tuple is zero off its own sheet.
    """
    dom = complex_domain(tol)
    family = []
    levels = tau_set(N)
    zero = LaurentPoly.zero(dom)
    for k in levels:
        P = p_polynomial(k, N, dom, q_value).substitute_power(max(k, 1))
        if k == 0:
            gens = [g.from_t_variable() for g in ideal_generators(P.to_t_variable(), "POLY")]
        else:
            gens = ideal_generators(P, "LAURENT")
        for g in gens:
            family.append({s: (g if s == k else zero) for s in levels})
    return family


def evaluation_vector(p: SheetPoint, family: Sequence[Mapping[int, LaurentPoly]]) -> np.ndarray:
    return np.array([psi_evaluate(f, p) for f in family], dtype=complex)


# ----------------------------------------------------------------------------- T_3


@dataclass(frozen=True)
class CenterElementTL3:
    """A central element of T_3, as the scalars S on M_3 and T on M_1."""

    S: LaurentPoly
    T: LaurentPoly
    q_value: object = None

    def __post_init__(self):
        if not is_central_tl3((self.S, self.T), self.q_value):
            raise ValueError("S(x) - T(x^3) is not divisible by x^2 + x^-2 + delta")

    def tuple(self) -> dict[int, LaurentPoly]:
        return {3: self.S, 1: self.T}


def _tl3_relation(domain: CoeffDomain, q_value) -> LaurentPoly:
    return LaurentPoly({2: 1, -2: 1, 0: delta(domain, q_value)}, domain)


def is_central_tl3(e: tuple[LaurentPoly, LaurentPoly], q_value=None) -> bool:
    """(S, T) is a central element of T_3 iff x^2 + x^-2 + delta divides S(x) - T(x^3)."""
    S, T = e
    if S.domain != T.domain:
        raise ValueError("S and T must share a coefficient domain")
    rel = _tl3_relation(S.domain, q_value)
    return rel.divides(S - T.substitute_power(3))


def hat_matrix(P: LaurentPoly) -> LaurentMatrix:
    """
    Split P = P0(x^3) + x P1(x^3) + x^-1 P2(x^3) and arrange the pieces as the 3x3 matrix by which P(tau_3)
    acts on M_1.

    >>> print(hat_matrix(x_poly({1: 1})).to_text())
    [ 0  0  1 ]
    [ x  0  0 ]
    [ 0  1  0 ]
    """
    dom = P.domain
    parts: list[dict] = [{}, {}, {}]
    for e, c in P.coeffs.items():
        r = e % 3
        if r == 0:
            parts[0][e // 3] = c
        elif r == 1:
            parts[1][(e - 1) // 3] = c
        else:
            parts[2][(e + 1) // 3] = c
    p0, p1, p2 = (LaurentPoly(p, dom) for p in parts)
    x = LaurentPoly.monomial(1, 1, dom)
    xi = LaurentPoly.monomial(-1, 1, dom)
    return LaurentMatrix([[p0, xi * p2, p1], [x * p1, p0, p2], [p2, p1, p0]], dom)


def tl3_central_element(T: LaurentPoly, V: LaurentPoly, q_value=None) -> tuple[AlgebraElement, CenterElementTL3]:
    """
    The central element with M_1-scalar T and M_3-scalar S = T(x^3) + V (x^2 + x^-2 + delta):
    S(tau_3) - sum beta_i Vhat_ij(tau_1) beta_j^*. On M_1 it acts by hat(S) - hat(V) R_1 = hat(T(x^3)) = T I.
    """
    dom = T.domain
    S = T.substitute_power(3) + V * _tl3_relation(dom, q_value)
    parts = [element_from_factored(dg.identity(3), S, dg.identity(3), dom, q_value)]
    Vh = hat_matrix(V)
    basis = cell_basis(1, 3).basis
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            if not Vh[i, j].is_zero():
                parts.append(element_from_factored(bi, -Vh[i, j], bj, dom, q_value))
    return sum_elements(parts, 3, dom, q_value), CenterElementTL3(S, T, q_value)
