"""Random generators and independent oracles shared by the test modules."""
from __future__ import annotations

import functools
import random
from fractions import Fraction

from affinetl import diagrams as dg
from affinetl.algebra import AlgebraElement, sum_elements
from affinetl.laurent import LAURENT_IN_Q, RATIONAL, LaurentPoly
from affinetl.linalg import LaurentMatrix


# ----------------------------------------------------------------------------- diagrams


def random_word(n: int, rng: random.Random, length: int | None = None) -> dg.AffineDiagram:
    """A random product of the generators cup_cap(n, i) and tau_n^(+-1) in D(n, n), circles dropped."""
    d = dg.identity(n)
    if n == 0:
        return dg.twist(0, rng.randint(0, 2))
    gens = [dg.twist(n), dg.reflect(dg.twist(n))]
    if n >= 2:
        gens += [dg.cup_cap(n, i) for i in range(1, n + 1)]
    for _ in range(rng.randint(0, 5) if length is None else length):
        d = dg.compose(d, rng.choice(gens)).diagram
    return d


@functools.lru_cache(maxsize=None)
def brute_pool(top: int, bottom: int) -> tuple[dg.AffineDiagram, ...]:
    if top == bottom == 0:
        return tuple(dg.twist(0, c) for c in range(3))
    return tuple(dg.all_diagrams_brute(top, bottom, 2, 2))


def random_diagram(top: int, bottom: int, rng: random.Random) -> dg.AffineDiagram:
    """Either a brute-force pool member or a twisted sandwich word(top) . base . word(bottom)."""
    if rng.random() < 0.5:
        return rng.choice(brute_pool(top, bottom))
    base = rng.choice(brute_pool(top, bottom))
    return dg.compose_many(random_word(top, rng), base, random_word(bottom, rng)).diagram


def random_types(rng: random.Random, count: int, max_n: int = 4) -> list[int]:
    """``count`` sizes in 0..max_n sharing one parity (composable chain of diagram types)."""
    parity = rng.randint(0, 1)
    sizes = [s for s in range(max_n + 1) if s % 2 == parity]
    return [rng.choice(sizes) for _ in range(count)]


# ----------------------------------------------------------------------------- algebra elements


def random_q_coeff(rng: random.Random) -> LaurentPoly:
    """A small nonzero Laurent polynomial in q with integer coefficients, as an x-constant."""
    while True:
        c = {e: rng.randint(-2, 2) for e in range(-1, 2)}
        p = LaurentPoly(c, RATIONAL, var="q")
        if not p.is_zero():
            return p


def random_element(N: int, rng: random.Random, terms: int | None = None) -> AlgebraElement:
    parts = []
    for _ in range(rng.randint(1, 4) if terms is None else terms):
        d = random_diagram(N, N, rng)
        parts.append(AlgebraElement.from_diagram(d, rng.choice([1, -1, 2, 3]) * random_q_coeff(rng)))
    return sum_elements(parts, N)


def random_nonzero_element(N: int, rng: random.Random) -> AlgebraElement:
    while True:
        a = random_element(N, rng)
        if not a.is_zero():
            return a


def random_x_poly(rng: random.Random, lo: int = -2, hi: int = 2, symmetric: bool = False) -> LaurentPoly:
    p = LaurentPoly({e: rng.randint(-3, 3) for e in range(lo, hi + 1)}, LAURENT_IN_Q)
    if symmetric:
        p = p + LaurentPoly({-e: c for e, c in p.coeffs.items()}, LAURENT_IN_Q)
    return p


def random_matrix(n: int, rng: random.Random, symmetric: bool = False) -> LaurentMatrix:
    return LaurentMatrix([[random_x_poly(rng, -1, 1, symmetric) for _ in range(n)] for _ in range(n)], LAURENT_IN_Q)


# ----------------------------------------------------------------------------- oracles


def cofactor_det(rows: list[list]):
    """Laplace expansion along the first row; generic over any ring with +, -, *."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def poly_rem(num: list[Fraction], den: list[Fraction]) -> list[Fraction]:
    """Remainder of num by den, both dense coefficient lists from the constant term up."""
    num = list(num)
    while len(num) >= len(den):
        c = num[-1] / den[-1]
        shift = len(num) - len(den)
        for i, d in enumerate(den):
            num[shift + i] -= c * d
        num.pop()
    return num


def rank_fraction(rows: list[list[Fraction]]) -> int:
    """Rank of a rational matrix by Gaussian elimination."""
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def rngs():
    """Hypothesis strategy for seeded generators: shrinks over the seed, not over every draw."""
    from hypothesis import strategies as st

    return st.integers(0, 2 ** 32 - 1).map(random.Random)
