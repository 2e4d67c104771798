"""
Acceptance suite: one check per criterion, each printing a single PASS/FAIL line.

Run under pytest (``pytest -v tests/test_acceptance.py -s`` shows the lines inline; they are also repeated in
the terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import cmath
import itertools
import math
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from affinetl import diagrams as dg  # noqa: E402
from affinetl.algebra import AlgebraElement, degree_data, multiply, star, tau  # noqa: E402
from affinetl.cellrep import (action_matrix, cell_basis, commutes, faithfulness_witness, gram_matrix,  # noqa: E402
                              pure_component_element, tau_set, twist_pushing_check, verify_det_identity)
from affinetl.center import (SheetPoint, confirmed_gluings_tl3, evaluation_vector, ideal_coordinates,  # noqa: E402
                             is_central_tl3, sheet_roots, tl3_central_element)
from affinetl.laurent import LAURENT_IN_Q, LaurentPoly, delta, x_poly  # noqa: E402
from affinetl.linalg import LaurentMatrix, laurent_det  # noqa: E402
from affinetl.polys import g_polynomial, p_polynomial  # noqa: E402

from helpers import (cofactor_det, random_diagram, random_element, random_nonzero_element,  # noqa: E402
                     random_matrix, random_types, random_x_poly, rank_fraction)

RESULTS: list[str] = []

ONE = x_poly({0: 1})
ZERO = LaurentPoly.zero(LAURENT_IN_Q)
X, XI = x_poly({1: 1}), x_poly({-1: 1})
DLT = x_poly({0: delta()})


def mat(rows):
    return LaurentMatrix(rows, LAURENT_IN_Q)


def report(n: int, title: str, ok: bool, detail: str, seconds: float, budget: float) -> str:
    status = "PASS" if ok else "FAIL"
    line = f"{status}  criterion {n}: {title} [{detail}; {seconds:.1f}s of {budget:.0f}s]"
    RESULTS.append(line)
    print(line)
    return line


# ----------------------------------------------------------------------------- 1


def criterion_1():
    """det R_k = +-G_k exactly for N <= 6; the small cases are also checked against cofactor expansion."""
    signs = {}
    ok = True
    for N in range(1, 7):
        for k in tau_set(N):
            R = gram_matrix(k, N)
            det = laurent_det(R)
            G = g_polynomial(k, N)
            if det == G:
                signs[(N, k)] = 1
            elif det == -G:
                signs[(N, k)] = -1
            else:
                ok = False
                signs[(N, k)] = 0
            if R.shape[0] <= 4 and det != cofactor_det(R.entries):
                ok = False
            # the library's own sign report must agree with the direct comparison
            if signs[(N, k)] and verify_det_identity(k, N) != signs[(N, k)]:
                ok = False
    neg = sorted(key for key, s in signs.items() if s == -1)
    return ok, f"{len(signs)} pairs, largest {math.comb(6, 3)}x{math.comb(6, 3)}, minus sign at {neg}"


# ----------------------------------------------------------------------------- 2


def criterion_2():
    R1 = gram_matrix(1, 3)
    ok = R1 == mat([[DLT, ONE, XI], [ONE, DLT, X], [X, XI, DLT]])
    expected = {
        1: (mat([[ZERO, ZERO, ONE], [X, ZERO, ZERO], [ZERO, ONE, ZERO]]), X),
        2: (mat([[ZERO, ONE, ZERO], [ZERO, ZERO, X], [X, ZERO, ZERO]]), X * X),
        3: (LaurentMatrix.scalar(3, X), X * X * X),
    }
    for p, (M1, s3) in expected.items():
        t = tau(3, p)
        ok &= action_matrix(t, 1) == M1
        ok &= action_matrix(t, 3) == mat([[s3]])
    # tau_3^3 = x times the identity on M_1: its matrix over x is the identity
    ok &= action_matrix(tau(3, 3), 1) == LaurentMatrix.identity(3) * X
    return ok, "R_1 and pi_1, pi_3 of tau_3, tau_3^2, tau_3^3"


# ----------------------------------------------------------------------------- 3


def criterion_3():
    ok = True
    checked = 0
    for N in range(1, 11):
        for k in range(N % 2, N + 1, 2):
            basis = dg.enumerate_standard(k, N)
            ok &= len(basis) == math.comb(N, (N - k) // 2)
            ok &= len(set(basis)) == len(basis)
            checked += 1
    return ok, f"{checked} (N, k) pairs up to N = 10"


# ----------------------------------------------------------------------------- 4


def _same_pairs(got, want, tol):
    if len(got) != len(want):
        return False
    left = list(want)
    for a, b in got:
        hit = [i for i, (z, w) in enumerate(left) if abs(a.z - z) <= tol and abs(b.z - w) <= tol]
        if not hit:
            return False
        left.pop(hit[0])
    return True


def criterion_4():
    tol = 1e-9
    want = {
        -1: [(1j, -1j), (-1j, 1j)],
        1: [(1, 1), (-1, -1)],
        4: [(z, z ** 3) for z in (2, -2, 0.5, -0.5)],
    }
    ok = True
    rng = random.Random(40)
    samples = [tl3_central_element(random_x_poly(rng), random_x_poly(rng))[1] for _ in range(5)]
    for q, pairs in want.items():
        rep = confirmed_gluings_tl3(q, tol)
        got = [(a, b) for a, b in rep.confirmed]
        ok &= all(a.k == 3 and b.k == 1 for a, b in got)
        ok &= _same_pairs(got, pairs, tol)
        # independent oracle: the glued z solve z^2 + z^-2 - q - 1/q = 0, and central elements agree there
        for a, b in got:
            ok &= abs(a.z ** 2 + a.z ** -2 - q - 1 / q) <= tol
            for c in samples:
                sv, tv = c.S(a.z, q), c.T(b.z, q)
                ok &= cmath.isclose(sv, tv, rel_tol=1e-9, abs_tol=1e-9)
    return ok, "q = -1, 1, 4"


# ----------------------------------------------------------------------------- 5


def _rational_value(p: LaurentPoly, z: Fraction, q: Fraction) -> Fraction:
    return sum((c * z ** e for e, c in p.evaluate_q(q).coeffs.items()), Fraction(0))


def _commutant_dimension(z: Fraction, q: Fraction) -> int:
    """Dimension of the matrices commuting with pi_1 + pi_3 of the generators of T_3 at x = z."""
    gens = [tau(3), tau(3, -1)] + [AlgebraElement.from_diagram(dg.cup_cap(3, i)) for i in (1, 2, 3)]
    blocks = []
    for g in gens:
        m1 = action_matrix(g, 1)
        m3 = action_matrix(g, 3)
        full = [[Fraction(0)] * 4 for _ in range(4)]
        for i in range(3):
            for j in range(3):
                full[i][j] = _rational_value(m1[i, j], z, q)
        full[3][3] = _rational_value(m3[0, 0], z, q)
        blocks.append(full)
    # unknown Y (4x4, row-major); equations Y M - M Y = 0 for each generator
    rows = []
    for M in blocks:
        for i in range(4):
            for j in range(4):
                row = [Fraction(0)] * 16
                for t in range(4):
                    row[i * 4 + t] += M[t][j]
                    row[t * 4 + j] -= M[i][t]
                rows.append(row)
    return 16 - rank_fraction(rows)


def criterion_5():
    ok = is_central_tl3((X ** 3, X)) and not is_central_tl3((X, X))
    rng = random.Random(50)
    probe = AlgebraElement.from_diagram(dg.cup_cap(3, 1))
    t3 = tau(3)
    for _ in range(50):
        T, V = random_x_poly(rng), random_x_poly(rng)
        a, c = tl3_central_element(T, V)
        ok &= is_central_tl3((c.S, c.T))
        ok &= commutes(a, t3) and commutes(a, probe)
        ok &= action_matrix(a, 1) == LaurentMatrix.scalar(3, T) and action_matrix(a, 3) == mat([[c.S]])
    # converse at a generic point: only the scalars on each component commute with the whole image
    dim = _commutant_dimension(Fraction(2), Fraction(3))
    ok &= dim == 2
    return ok, f"50 random central pairs; commutant dimension {dim} at x = 2, q = 3"


# ----------------------------------------------------------------------------- 6


def _pure_case(N: int, r: int, B: LaurentMatrix) -> list[str]:
    a = pure_component_element(r, B, N)
    P = p_polynomial(r, N).substitute_power(max(r, 1))
    bad = []
    if action_matrix(a, r) != B * P:
        bad.append(f"N={N} r={r}: pi_{r}(a) != P_{r} B")
    for s in tau_set(N):
        if s != r and not action_matrix(a, s).is_zero():
            bad.append(f"N={N} r={r}: pi_{s}(a) != 0")
    if degree_data(a).deg > r:
        bad.append(f"N={N} r={r}: a not in I^{r}")
    return bad


def criterion_6():
    rng = random.Random(60)
    failures: list[str] = []
    for N, r in [(3, 1), (3, 3), (2, 0), (2, 2)]:
        n = cell_basis(r, N).d_k
        for B in (LaurentMatrix.identity(n), random_matrix(n, rng, symmetric=(r == 0))):
            failures += _pure_case(N, r, B)
    failures = sorted(set(failures))
    return not failures, "; ".join(failures) if failures else "N = 3 r in {1, 3}, N = 2 r in {0, 2}"


# ----------------------------------------------------------------------------- 7


def criterion_7():
    rng = random.Random(70)
    cases = 500
    counts = dict.fromkeys(["assoc", "identity", "star", "twist", "deg", "realizable"], 0)
    fails = dict.fromkeys(counts, 0)

    def check(name, cond):
        counts[name] += 1
        if not cond:
            fails[name] += 1

    for i in range(cases):
        # diagram level, mixed types
        a_, b_, c_, d_ = random_types(rng, 4)
        x = random_diagram(a_, b_, rng)
        y = random_diagram(b_, c_, rng)
        z = random_diagram(c_, d_, rng)
        xy = dg.compose(x, y)
        yz = dg.compose(y, z)
        left = dg.compose(xy.diagram, z)
        right = dg.compose(x, yz.diagram)
        check("assoc", left.diagram == right.diagram and xy.loops + left.loops == yz.loops + right.loops)
        check("identity", dg.compose(dg.identity(a_), x) == (x, 0) and dg.compose(x, dg.identity(b_)) == (x, 0))
        check("star", dg.reflect(xy.diagram) == dg.compose(dg.reflect(y), dg.reflect(x)).diagram)
        check("realizable", all(dg.diagram_is_realizable(d) for d in (xy.diagram, yz.diagram, left.diagram)))
        # element level in the algebra
        N = rng.randint(1, 4)
        e, f = random_nonzero_element(N, rng), random_nonzero_element(N, rng)
        if i % 5 == 0:
            g = random_element(N, rng, 1)
            check("assoc", multiply(multiply(e, f), g) == multiply(e, multiply(f, g)))
        ef = multiply(e, f)
        check("deg", ef.is_zero() or degree_data(ef).deg <= min(degree_data(e).deg, degree_data(f).deg))
        check("star", star(ef) == multiply(star(f), star(e)))
        one = AlgebraElement.one(N)
        check("identity", multiply(one, e) == e and multiply(e, one) == e)
        # twist pushing on standard diagrams
        M = rng.randint(1, 4)
        r = rng.choice([t for t in tau_set(M) if t > 0])
        k = rng.choice([t for t in tau_set(M) if t <= r])
        basis = cell_basis(r, M).basis
        check("twist", twist_pushing_check(rng.choice(basis), rng.choice(basis), k))
    ok = all(v == 0 for v in fails.values()) and all(v >= cases for v in counts.values())
    return ok, ", ".join(f"{k} {counts[k] - fails[k]}/{counts[k]}" for k in counts)


# ----------------------------------------------------------------------------- 8


def criterion_8():
    rng = random.Random(80)
    ok = True
    for _ in range(100):
        a = random_nonzero_element(rng.randint(1, 4), rng)
        k = faithfulness_witness(a)
        ok &= k == degree_data(a).deg and not action_matrix(a, k).is_zero()
    return ok, "100 random nonzero elements, N <= 4"


# ----------------------------------------------------------------------------- 9


def criterion_9():
    rng = random.Random(90)
    q = 4
    ok = True
    detail = []
    for N in (3, 4):
        fam = ideal_coordinates(N, q)
        roots = {k: sheet_roots(k, N, q) for k in tau_set(N)}
        pts = []
        while len(pts) < 50:
            k = rng.choice(tau_set(N))
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            if (k > 0 and abs(z) < 0.2) or any(abs(z - u) < 1e-3 for u in roots[k]):
                continue
            pts.append(SheetPoint(k, z))
        vecs = [evaluation_vector(p, fam) for p in pts]
        gap = min(np.linalg.norm(vecs[i] - vecs[j]) for i, j in itertools.combinations(range(50), 2))
        ok &= gap > 1e-6
        detail.append(f"N={N} min gap {gap:.2e}")
    return ok, ", ".join(detail)


# ----------------------------------------------------------------------------- driver

CRITERIA = [
    (1, "Gram determinant identity", criterion_1, 60),
    (2, "T_3 golden matrices", criterion_2, 5),
    (3, "cell module dimensions", criterion_3, 10),
    (4, "T_3 gluing points", criterion_4, 1),
    (5, "T_3 center membership", criterion_5, 30),
    (6, "pure component construction", criterion_6, 60),
    (7, "property suites", criterion_7, 120),
    (8, "faithfulness witness", criterion_8, 30),
    (9, "desingularization injectivity", criterion_9, 5),
]


def run_one(n, title, fn, budget):
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure of the criterion, reported on its line
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    report(n, title, ok and elapsed <= budget, detail, elapsed, budget)
    return ok, elapsed


@pytest.mark.parametrize("n,title,fn,budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(n, title, fn, budget):
    ok, elapsed = run_one(n, title, fn, budget)
    assert ok, RESULTS[-1]
    assert elapsed <= budget, RESULTS[-1]


if __name__ == "__main__":
    results = [run_one(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
