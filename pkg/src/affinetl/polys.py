"""
The polynomials attached to the cell modules: the index set T_N, the ranks d_k, and G_k, H_k, P_k.

G_k collects the roots of the Gram determinants above level k; H_k is the smallest Laurent polynomial with
G_k(x) dividing H_k(x^k), and P_k multiplies the H_r for r <= k.

Every function takes a coefficient domain and, for numeric domains, a value of q:

* LAURENT_IN_Q: symbolic in q, valid for generic q (no coincidences among the powers q^r);
* RATIONAL: q a nonzero rational, coincidences resolved exactly;
* COMPLEX: q a nonzero complex number, coincidences resolved within the domain tolerance.

>>> str(g_polynomial(1, 3))
'x^2 + (-q^3 - q^-3) + x^-2'
>>> str(h_polynomial(2, 4))
'x + (-q^4 - q^-4) + x^-1'
"""
from __future__ import annotations

import math
from fractions import Fraction

from .laurent import LAURENT_IN_Q, CoeffDomain, LaurentPoly, NotDivisible, q_power


def tau_set(N: int) -> list[int]:
    """{t : 0 <= t <= N, t = N mod 2}, ascending."""
    if N < 1:
        raise ValueError("N must be positive")
    return list(range(N % 2, N + 1, 2))


def check_level(k: int, N: int):
    if k not in tau_set(N):
        raise ValueError(f"k={k} is not in T_{N} = {tau_set(N)}")


def d_k(k: int, N: int) -> int:
    """Rank of the k-th cell module: C(N, (N-k)/2)."""
    check_level(k, N)
    return math.comb(N, (N - k) // 2)


def _specialize(p: LaurentPoly, domain: CoeffDomain, q) -> LaurentPoly:
    if domain.kind == "laurent_q":
        if q is not None:
            raise ValueError("symbolic mode does not take a numeric q")
        return p
    if q is None or q == 0:
        raise ValueError("numeric modes need a nonzero q")
    return p.evaluate_q(q if domain.kind == "complex" else Fraction(q), domain)


def g_polynomial(k: int, N: int, domain: CoeffDomain = LAURENT_IN_Q, q=None) -> LaurentPoly:
    """G_k = product over r in T_N, r > k of (x^2 + x^-2 - q^r - q^-r)^(d_r); G_N = 1."""
    check_level(k, N)
    out = LaurentPoly.constant(1, LAURENT_IN_Q)
    for r in tau_set(N):
        if r > k:
            factor = LaurentPoly({2: 1, -2: 1, 0: -(q_power(r) + q_power(-r))}, LAURENT_IN_Q)
            out = out * factor ** d_k(r, N)
    return _specialize(out, domain, q)


# ----------------------------------------------------------------------------- H_k by root pushforward


def _x2_roots(k: int, N: int, domain: CoeffDomain, q) -> list[tuple[object, int]]:
    """
    Roots c of G_k as a polynomial in x^2, with multiplicities: c = q^(+-r) for r > k.

    Symbolic mode represents c by its exponent of q; numeric modes by its value. Equal values are merged.
    """
    out: list[list] = []
    for r in tau_set(N):
        if r <= k:
            continue
        for s in (r, -r):
            c = s if domain.kind == "laurent_q" else _num_q(domain, q) ** s
            for entry in out:
                if _same(domain, entry[0], c):
                    entry[1] += d_k(r, N)
                    break
            else:
                out.append([c, d_k(r, N)])
    return [(c, m) for c, m in out]


def _num_q(domain, q):
    return complex(q) if domain.kind == "complex" else Fraction(q)


def _same(domain: CoeffDomain, a, b) -> bool:
    if domain.kind == "complex":
        return abs(a - b) <= domain.tol * max(1.0, abs(a), abs(b))
    return a == b


def h_factors(k: int, N: int, domain: CoeffDomain = LAURENT_IN_Q, q=None) -> list[tuple[LaurentPoly, int]]:
    """
    H_k up to a unit monomial, as a list of (factor, multiplicity) with pairwise coprime factors.

    For k = 0 the factors are x^2 - c over the roots c of G_0 in x^2. For k > 0 each root c of G_k in x^2 is
    pushed forward under y = x^k: for even k to the root c^(k/2), giving the factor y - c^(k/2); for odd k to
    the pair +-c^(k/2), giving y^2 - c^k. Pushed roots that coincide keep the largest multiplicity among
    their preimages.
    """
    check_level(k, N)
    roots = _x2_roots(k, N, domain, q)
    if k == 0:
        pushed = [[c, m] for c, m in roots]
    else:
        pushed = []
        for c, m in roots:
            if domain.kind == "laurent_q":
                key = c * k // 2 if k % 2 == 0 else c * k
            else:
                key = c ** (k // 2) if k % 2 == 0 else c ** k
            for entry in pushed:
                if _same(domain, entry[0], key):
                    entry[1] = max(entry[1], m)
                    break
            else:
                pushed.append([key, m])
    deg = 1 if k % 2 == 0 and k > 0 else 2
    out = []
    for key, m in pushed:
        root = q_power(key) if domain.kind == "laurent_q" else key
        out.append((LaurentPoly({deg: 1, 0: -root}, domain), m))
    return out


def h_polynomial(k: int, N: int, domain: CoeffDomain = LAURENT_IN_Q, q=None, verify: bool = True) -> LaurentPoly:
    """
    The smallest Laurent polynomial H_k with G_k(x) dividing H_k(x^k), centered and monic; H_0 = G_0.

    Built from :func:`h_factors`; the divisibility is re-verified by exact division unless ``verify`` is off.
    """
    if k == 0:
        check_level(k, N)
        return g_polynomial(0, N, domain, q)
    out = LaurentPoly.constant(1, domain)
    for factor, m in h_factors(k, N, domain, q):
        out = out * factor ** m
    lo, hi = out.min_max_deg()
    out = out.shift(-((lo + hi) // 2))
    if verify:
        _verify_h(out, k, N, domain, q)
    return out


def _verify_h(h: LaurentPoly, k: int, N: int, domain: CoeffDomain, q):
    if domain.kind != "complex":
        if not g_polynomial(k, N, domain, q).divides(h.substitute_power(k)):
            raise NotDivisible(f"G_{k} does not divide H_{k}(x^{k}) for N={N}")
        return
    # Floating-point long division is unstable here (G_k has roots on both sides of the unit circle), so
    # check instead that every root +-sqrt(c) of G_k is a root of some factor f(x^k) of H_k carrying at
    # least the multiplicity of c.
    factors = h_factors(k, N, domain, q)
    for c, need in _x2_roots(k, N, domain, q):
        x0 = complex(c) ** 0.5
        for x in (x0, -x0):
            have = 0
            for f, m in factors:
                scale = sum(abs(v) * abs(x) ** (k * e) for e, v in f.coeffs.items())
                if abs(f(x ** k)) <= domain.tol * max(1.0, scale):
                    have += m
            if have < need:
                raise NotDivisible(f"G_{k} does not divide H_{k}(x^{k}) for N={N} at q={q}")


def p_polynomial(k: int, N: int, domain: CoeffDomain = LAURENT_IN_Q, q=None) -> LaurentPoly:
    """P_k = product of H_r over r in T_N with r <= k."""
    check_level(k, N)
    out = LaurentPoly.constant(1, domain)
    for r in tau_set(N):
        if r <= k:
            out = out * h_polynomial(r, N, domain, q)
    return out
