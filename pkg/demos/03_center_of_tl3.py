"""
The center of the three-strand algebra
======================================

A central element acts by a scalar S(x) on M_3 and T(x) on M_1; the pair is central exactly when
x^2 + x^-2 + delta divides S(x) - T(x^3). Where that binomial vanishes, the two sheets of the center
are glued together.
"""
from __future__ import annotations

import random

import numpy as np

from affinetl import (AlgebraElement, SheetPoint, action_matrix, commutes, confirmed_gluings_tl3,
                      evaluation_vector, ideal_coordinates, is_central_tl3, tau, tl3_central_element, x_poly)
from affinetl import diagrams as dg

x = x_poly({1: 1})
print("(x^3, x) central:", is_central_tl3((x ** 3, x)))
print("(x, x) central:  ", is_central_tl3((x, x)))

# build a central element from T and V and watch it commute with the generators
T = x_poly({1: 1, -1: 2})
V = x_poly({0: 1})
a, c = tl3_central_element(T, V)
print("S =", c.S)
print("commutes with tau:", commutes(a, tau(3)))
print("commutes with E1: ", commutes(a, AlgebraElement.from_diagram(dg.cup_cap(3, 1))))
print("acts on M_1 by:")
print(action_matrix(a, 1).to_text())

# gluing points for a few values of q
for q in (-1, 1, 4):
    rep = confirmed_gluings_tl3(q)
    pairs = ", ".join(f"z={a.z:.3g} ~ w={b.z:.3g}" for a, b in rep.confirmed)
    print(f"q = {q}: {pairs}")

# away from the special points the ideal coordinates separate points of the sheets
rng = random.Random(0)
fam = ideal_coordinates(3, 4)
pts = [SheetPoint(rng.choice([1, 3]), complex(rng.uniform(0.5, 2), rng.uniform(-1, 1))) for _ in range(5)]
vecs = [evaluation_vector(p, fam) for p in pts]
gaps = [np.linalg.norm(vecs[i] - vecs[j]) for i in range(5) for j in range(i + 1, 5)]
print(f"{len(fam)} coordinates, smallest separation among 5 points: {min(gaps):.3g}")
