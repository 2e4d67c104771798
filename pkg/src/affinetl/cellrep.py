"""
Cell modules M_k and the matrix realization of T_N(delta).

M_k is the free Laurent-polynomial module on the standard diagrams of D(k, N). A diagram acts on the left by
composition; the composite is rewritten in the basis by

* k > 0: zero if it has fewer than k through arcs, otherwise delta^loops * x^e * beta where the composite
  equals beta tau_k^e with beta standard;
* k = 0: delta^loops * (x + 1/x)^c * beta where c counts the non-contractible circles.

Matrices act on coordinate columns and rows/columns follow ``enumerate_standard``.

>>> print(gram_matrix(1, 3).to_text())
[ (-q - q^-1)            1         x^-1 ]
[           1  (-q - q^-1)            x ]
[           x         x^-1  (-q - q^-1) ]
"""
from __future__ import annotations

import dataclasses
import functools
from typing import NamedTuple

from . import diagrams as dg
from .algebra import AlgebraElement, degree_data, element_from_factored, multiply, sum_elements
from .diagrams import AffineDiagram
from .laurent import LAURENT_IN_Q, CoeffDomain, LaurentPoly, delta
from .linalg import LaurentMatrix, adjugate, laurent_det
from .polys import check_level, d_k, g_polynomial, h_polynomial, p_polynomial, tau_set

__all__ = [
    "CellBasis", "cell_basis", "gram_matrix", "action_matrix", "adjugate", "g_polynomial", "verify_det_identity",
    "twist_pushing_check", "element_from_matrix", "pure_component_element", "faithfulness_witness",
    "laurent_det", "tau_set", "d_k", "h_polynomial", "p_polynomial",
]


class CellBasis(NamedTuple):
    k: int
    N: int
    basis: tuple[AffineDiagram, ...]
    index: dict

    @property
    def d_k(self) -> int:
        return len(self.basis)


@functools.lru_cache(maxsize=None)
def cell_basis(k: int, N: int) -> CellBasis:
    check_level(k, N)
    basis = dg.enumerate_standard(k, N)
    return CellBasis(k, N, basis, {b: i for i, b in enumerate(basis)})


class _Ring:
    """Cached powers of delta and of (x + 1/x) for one coefficient domain."""

    def __init__(self, domain: CoeffDomain, q):
        self.domain = domain
        self.delta = delta(domain, q)
        self._dp = [domain.one()]
        self._xp = [LaurentPoly.constant(1, domain)]

    def delta_power(self, n: int):
        while len(self._dp) <= n:
            self._dp.append(self._dp[-1] * self.delta)
        return self._dp[n]

    def circle_power(self, n: int) -> LaurentPoly:
        while len(self._xp) <= n:
            self._xp.append(self._xp[-1] * LaurentPoly({1: 1, -1: 1}, self.domain))
        return self._xp[n]


@functools.lru_cache(maxsize=64)
def _ring(domain: CoeffDomain, q) -> _Ring:
    return _Ring(domain, q)


def _reduce(gamma: AffineDiagram, loops: int, k: int, ring: _Ring):
    """
    Rewrite a composite gamma in D(k, n) (times delta^loops) in the standard basis.
    Returns (standard diagram, coefficient polynomial) or None when gamma vanishes in M_k.
    """
    c = ring.delta_power(loops)
    if k == 0:
        return dataclasses.replace(gamma, circles=0), ring.circle_power(gamma.circles) * c
    if gamma.through_count < k:
        return None
    std, r = dg.standardize(gamma)
    return std, LaurentPoly.monomial(-r, c, ring.domain)


# ----------------------------------------------------------------------------- Gram matrices


@functools.lru_cache(maxsize=None)
def gram_matrix(k: int, N: int, domain: CoeffDomain = LAURENT_IN_Q, q=None) -> LaurentMatrix:
    """R_k: entry (j, s) is the image of beta_j^* beta_s in D(k, k)."""
    cb = cell_basis(k, N)
    ring = _ring(domain, q)
    zero = LaurentPoly.zero(domain)
    rows = []
    for bj in cb.basis:
        bj_star = dg.reflect(bj)
        row = []
        for bs in cb.basis:
            gamma, loops = dg.compose(bj_star, bs)
            if k == 0:
                row.append(ring.circle_power(gamma.circles) * ring.delta_power(loops))
            elif gamma.through_count < k:
                row.append(zero)
            else:
                row.append(LaurentPoly.monomial(dg.total_winding(gamma), ring.delta_power(loops), domain))
        rows.append(row)
    return LaurentMatrix(rows, domain)


def verify_det_identity(k: int, N: int, domain: CoeffDomain = LAURENT_IN_Q, q=None) -> int:
    """The sign s with det R_k = s * G_k; raises AssertionError if det R_k is neither G_k nor -G_k."""
    if not domain.exact:
        raise ValueError("the determinant identity is checked in exact arithmetic")
    det = laurent_det(gram_matrix(k, N, domain, q))
    g = g_polynomial(k, N, domain, q)
    if det == g:
        return 1
    if det == -g:
        return -1
    raise AssertionError(f"det R_{k} for N={N} is not +-G_{k}")


# ----------------------------------------------------------------------------- action


def action_matrix(a: AlgebraElement, k: int) -> LaurentMatrix:
    """pi_k(a): the matrix of left multiplication by a on M_k."""
    cb = cell_basis(k, a.N)
    ring = _ring(a.domain, a.q)
    n = cb.d_k
    cols = [dict() for _ in range(n)]
    for alpha, coeff in a.terms.items():
        for j, beta in enumerate(cb.basis):
            gamma, loops = dg.compose(alpha, beta)
            red = _reduce(gamma, loops, k, ring)
            if red is None:
                continue
            std, poly = red
            i = cb.index[std]
            v = poly * coeff
            cols[j][i] = cols[j][i] + v if i in cols[j] else v
    zero = LaurentPoly.zero(a.domain)
    return LaurentMatrix([[cols[j].get(i, zero) for j in range(n)] for i in range(n)], a.domain)


def action_matrices(a: AlgebraElement) -> dict[int, LaurentMatrix]:
    return {k: action_matrix(a, k) for k in tau_set(a.N)}


def faithfulness_witness(a: AlgebraElement) -> int:
    """A level k where a acts nontrivially. The degree of a always works; other levels are a fallback."""
    if a.is_zero():
        raise ValueError("the zero element acts trivially everywhere")
    deg = degree_data(a).deg
    for k in [deg] + [t for t in reversed(tau_set(a.N)) if t != deg]:
        if not action_matrix(a, k).is_zero():
            return k
    raise AssertionError("a nonzero element acts trivially on every cell module")


# ----------------------------------------------------------------------------- elements from matrices


def element_from_matrix(C: LaurentMatrix, r: int, N: int, q=None) -> AlgebraElement:
    """
    The element sum_{i,j} beta_i C_ij(tau_r) beta_j^*, whose action on M_r is C R_r.

    For r = 0 the entries must be symmetric; C_ij(tau_0) then means W_ij(tau_0) with W_ij(x + 1/x) = C_ij.
    """
    cb = cell_basis(r, N)
    if C.shape != (cb.d_k, cb.d_k):
        raise ValueError(f"expected a {cb.d_k}x{cb.d_k} matrix")
    parts = []
    for i, bi in enumerate(cb.basis):
        for j, bj in enumerate(cb.basis):
            p = C[i, j]
            if p.is_zero():
                continue
            if r == 0:
                p = p.to_t_variable().rename("x")
            parts.append(element_from_factored(bi, p, bj, C.domain, q))
    return sum_elements(parts, N, C.domain, q)


def twist_pushing_check(mu: AffineDiagram, nu: AffineDiagram, k: int, domain: CoeffDomain = LAURENT_IN_Q,
                        q=None) -> bool:
    """
    Check pi_k(mu tau_r^r nu^*) = x^k pi_k(mu nu^*) for standard mu, nu with r through arcs (k <= r).
    At k = 0 the factor is x^0 = 1: a full turn of strands that are all capped off below is isotopic away.
    """
    r = mu.bottom
    if r == 0:
        raise ValueError("twist pushing needs r > 0")
    if k > r:
        raise ValueError("k must not exceed r")
    one = LaurentPoly.constant(1, domain)
    lhs = action_matrix(element_from_factored(mu, LaurentPoly.monomial(r, 1, domain), nu, domain, q), k)
    rhs = action_matrix(element_from_factored(mu, one, nu, domain, q), k) * LaurentPoly.monomial(k, 1, domain)
    return lhs == rhs if domain.exact else lhs.isclose(rhs, domain.tol)


def _divide_matrix(m: LaurentMatrix, p: LaurentPoly) -> LaurentMatrix | None:
    if not all(p.divides(e) for row in m.entries for e in row):
        return None
    return m.map(lambda e: e.exact_div(p))


def pure_component_element(r: int, B: LaurentMatrix, N: int, q=None) -> AlgebraElement:
    """
    An element a with pi_r(a) = P_r(x^r) B (P_0(x) B when r = 0) and, whenever the construction below
    allows it, pi_s(a) = 0 for s != r.

    Construction (exact modes): Q = H_r(x^r) / det R_r, C = Q B N_r with N_r the adjugate of R_r, and
    a_r = sum beta_i P_{r-2}(tau_r^r) C_ij(tau_r) beta_j^*, so that pi_r(a_r) = P_{r-2}(x^r) C R_r = P_r(x^r) B.
    Levels above r vanish automatically. For each level 0 < k < r the action of a_r is divisible by P_k(x^k)
    and is cancelled by a recursively built a_k. At k = 0 the action is cancelled the same way when it is
    divisible by P_0 with symmetric quotient; otherwise it is left in place.
    """
    domain = B.domain
    if not domain.exact:
        raise ValueError("pure_component_element needs exact arithmetic")
    check_level(r, N)
    R = gram_matrix(r, N, domain, q)
    if B.shape != R.shape:
        raise ValueError(f"B must be {R.shape[0]}x{R.shape[0]}")
    if r == 0 and not all(e.is_symmetric() for row in B.entries for e in row):
        raise ValueError("at r = 0 the entries of B must be symmetric")
    det = laurent_det(R)
    Q = h_polynomial(r, N, domain, q).substitute_power(max(r, 1)).exact_div(det)
    C = (B @ adjugate(R)) * Q
    levels = tau_set(N)
    lower = [k for k in levels if k < r]
    if lower and r > 0:
        C = C * p_polynomial(lower[-1], N, domain, q).substitute_power(r)
    a = element_from_matrix(C, r, N, q)
    for k in reversed(lower):
        image = action_matrix(a, k)
        if image.is_zero():
            continue
        quotient = _divide_matrix(image, p_polynomial(k, N, domain, q).substitute_power(max(k, 1)))
        if quotient is None or (k == 0 and not all(e.is_symmetric() for row in quotient.entries for e in row)):
            if k == 0:
                continue
            raise AssertionError(f"pi_{k}(a_{r}) is not divisible by P_{k}(x^{k})")
        a = a + pure_component_element(k, -quotient, N, q)
    return a


def commutes(a: AlgebraElement, b: AlgebraElement) -> bool:
    return multiply(a, b) == multiply(b, a)
