"""
Elements supported on one cell module
=====================================

For a level r and a matrix B, pure_component_element tries to build an algebra element acting by
P_r(x^r) B on M_r and by zero everywhere else. With three strands this works at every level. With
two strands, level 2 is obstructed: the twist acts on M_0 by a permutation, so the part of a that
survives on M_0 is governed by the values of P_2(x^2) B at x = +-1, which do not vanish.
"""
from __future__ import annotations

from affinetl import LaurentMatrix, action_matrix, p_polynomial, pure_component_element, tau_set

for N, r in [(3, 1), (3, 3), (2, 0), (2, 2)]:
    n = 3 if (N, r) == (3, 1) else (2 if (N, r) == (2, 0) else 1)
    B = LaurentMatrix.identity(n)
    a = pure_component_element(r, B, N)
    P = p_polynomial(r, N).substitute_power(max(r, 1))
    ok_r = action_matrix(a, r) == B * P
    others = {s: action_matrix(a, s).is_zero() for s in tau_set(N) if s != r}
    print(f"N={N} r={r}: target component ok={ok_r}, other components vanish: {others}")

# the obstruction in numbers: P_2(x^2) at x = 1 is 2 - q^2 - q^-2, not zero
P2 = p_polynomial(2, 2).substitute_power(2)
print("P_2(x^2) =", P2)
print("at x = 1, q = 3:", P2(1, 3).real)
print("leftover on M_0:")
print(action_matrix(pure_component_element(2, LaurentMatrix.identity(1), 2), 0).to_text())
