"""
Affine diagrams: non-crossing arc systems on the lateral surface of a cylinder.

Marked points are numbered 1..n on the top circle and 1..m on the bottom circle, with a fixed cut line
running between point n and point 1 on both circles. Internally a diagram of type (m, n) (bottom m, top n)
stores, for every point index ``p`` (top points 0..n-1, then bottom points n..n+m-1):

* ``partner[p]``: the other endpoint of the arc through p;
* ``offset[p]``: how many periods the arc moves to the right in the universal cover when it is followed
  from p to its partner. ``offset[partner[p]] == -offset[p]``.

For a through arc from bottom point j to top point i, ``offset[B_j]`` is the winding number of the arc
(+1 per crossing of the cut in the direction of increasing index). A same-side arc between points a < b is
either direct (both offsets 0) or wraps through the cut (``offset[b] = +1``, ``offset[a] = -1``); no other
value is embeddable. Because lifted endpoints determine an arc system up to isotopy, this data is a
canonical form and equality of homotopy classes is plain equality of the stored tuples.

Composition glues the bottom of the upper diagram to the top of the lower one and follows chains through
the middle row, summing offsets. Closed chains with net offset 0 are contractible loops; net offset +-1 are
non-contractible circles.

>>> t3 = twist(3)
>>> compose(t3, reflect(t3)).diagram == identity(3)
True
>>> rank(twist(1, 3))
3
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple


@dataclass(frozen=True)
class Arc:
    """
    One arc, as it appears in the JSON format.

    ``a`` and ``b`` are tagged points like ``("T", 1)`` or ``("B", 2)`` (1-based). For through arcs ``w`` is
    the winding from the bottom endpoint to the top endpoint; for same-side arcs it is the wrap bit.
    """

    a: tuple[str, int]
    b: tuple[str, int]
    w: int = 0

    @property
    def is_through(self) -> bool:
        return self.a[0] != self.b[0]

    def to_json(self) -> dict:
        return {"a": f"{self.a[0]}{self.a[1]}", "b": f"{self.b[0]}{self.b[1]}", "w": self.w}

    @classmethod
    def from_json(cls, obj: dict) -> Arc:
        return cls(_parse_point(obj["a"]), _parse_point(obj["b"]), int(obj.get("w", 0)))


def _parse_point(s: str) -> tuple[str, int]:
    side, idx = s[0].upper(), int(s[1:])
    if side not in "TB" or idx < 1:
        raise ValueError(f"bad point label {s!r}")
    return side, idx


@dataclass(frozen=True)
class AffineDiagram:
    top: int
    bottom: int
    partner: tuple[int, ...]
    offset: tuple[int, ...]
    circles: int = 0

    def __post_init__(self):
        size = self.top + self.bottom
        if self.top < 0 or self.bottom < 0 or (self.top - self.bottom) % 2:
            raise ValueError(f"bad arity ({self.bottom}, {self.top})")
        if len(self.partner) != size or len(self.offset) != size:
            raise ValueError("partner/offset length does not match the point count")
        if self.circles < 0:
            raise ValueError("negative circle count")

    # ----------------------------------------------------------------- point helpers

    def is_top(self, p: int) -> bool:
        return p < self.top

    def label(self, p: int) -> tuple[str, int]:
        return ("T", p + 1) if p < self.top else ("B", p - self.top + 1)

    def index(self, point: tuple[str, int]) -> int:
        side, i = point
        if side == "T":
            if not 1 <= i <= self.top:
                raise ValueError(f"no top point {i}")
            return i - 1
        if not 1 <= i <= self.bottom:
            raise ValueError(f"no bottom point {i}")
        return self.top + i - 1

    # ----------------------------------------------------------------- structure

    def through_arcs(self) -> list[tuple[int, int, int]]:
        """(bottom index j, top index i, winding) for every through arc, 0-based, sorted by j."""
        out = []
        for j in range(self.bottom):
            p = self.top + j
            t = self.partner[p]
            if t < self.top:
                out.append((j, t, self.offset[p]))
        return out

    @property
    def through_count(self) -> int:
        return sum(1 for j in range(self.bottom) if self.partner[self.top + j] < self.top)

    def arcs(self) -> list[Arc]:
        out = []
        for p in range(self.top + self.bottom):
            r = self.partner[p]
            if self.is_top(p) != self.is_top(r):
                if self.is_top(p):
                    continue
                out.append(Arc(self.label(r), self.label(p), self.offset[p]))
            elif p < r:
                out.append(Arc(self.label(p), self.label(r), 1 if self.offset[r] == 1 else 0))
        return sorted(out, key=lambda a: (a.a[0] != "T", a.a[1]))

    def to_json(self) -> dict:
        return {"top": self.top, "bottom": self.bottom, "arcs": [a.to_json() for a in self.arcs()],
                "circles": self.circles}

    @classmethod
    def from_json(cls, obj: dict) -> AffineDiagram:
        return from_arcs(int(obj["top"]), int(obj["bottom"]), [Arc.from_json(a) for a in obj["arcs"]],
                         int(obj.get("circles", 0)))

    def __str__(self):
        body = ", ".join(f"{a.a[0]}{a.a[1]}-{a.b[0]}{a.b[1]}" + (f"[{a.w:+d}]" if a.w else "") for a in self.arcs())
        circ = f"; {self.circles} circle(s)" if self.circles else ""
        return f"D({self.bottom},{self.top}){{{body}{circ}}}"


class ComposeResult(NamedTuple):
    diagram: AffineDiagram
    loops: int


# ----------------------------------------------------------------------------- construction


def from_arcs(top: int, bottom: int, arcs: Iterable[Arc], circles: int = 0) -> AffineDiagram:
    """Build a diagram from explicit arcs, rejecting anything that is not embeddable on the cylinder."""
    d = _from_arcs_unchecked(top, bottom, arcs, circles)
    if not _realizable(d):
        raise ValueError("arc system is not realizable without crossings")
    return d


def _from_arcs_unchecked(top: int, bottom: int, arcs: Iterable[Arc], circles: int) -> AffineDiagram:
    size = top + bottom
    partner = [-1] * size
    offset = [0] * size

    def idx(pt):
        side, i = pt
        if side == "T" and 1 <= i <= top:
            return i - 1
        if side == "B" and 1 <= i <= bottom:
            return top + i - 1
        raise ValueError(f"point {side}{i} out of range")

    for arc in arcs:
        a, b = idx(arc.a), idx(arc.b)
        if a == b:
            raise ValueError("an arc needs two distinct endpoints")
        if partner[a] != -1 or partner[b] != -1:
            raise ValueError("a point is used by two arcs")
        partner[a], partner[b] = b, a
        if arc.is_through:
            lo, hi = (a, b) if a >= top else (b, a)
            offset[lo], offset[hi] = arc.w, -arc.w
        else:
            if arc.w not in (0, 1):
                raise ValueError("same-side arcs carry a wrap bit 0 or 1")
            lo, hi = sorted((a, b))
            offset[lo], offset[hi] = -arc.w, arc.w
    if -1 in partner:
        raise ValueError("every marked point must be the endpoint of exactly one arc")
    return AffineDiagram(top, bottom, tuple(partner), tuple(offset), circles)


def twist(k: int, power: int = 1) -> AffineDiagram:
    """
    The twist tau_k raised to ``power``: bottom i goes to top i + power (mod k) with the strands that pass the
    cut carrying the winding. For k = 0 the twist is a single non-contractible circle.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        if power < 0:
            raise ValueError("tau_0 is not invertible")
        return AffineDiagram(0, 0, (), (), power)
    partner = [0] * (2 * k)
    offset = [0] * (2 * k)
    for i in range(k):
        t, w = (i + power) % k, (i + power) // k
        partner[k + i], partner[t] = t, k + i
        offset[k + i], offset[t] = w, -w
    return AffineDiagram(k, k, tuple(partner), tuple(offset), 0)


def identity(n: int) -> AffineDiagram:
    return twist(n, 0)


make_identity = identity
make_twist = twist


def cup_cap(n: int, i: int) -> AffineDiagram:
    """The Temperley-Lieb generator joining points i, i+1 (1-based, cyclic) on top and on bottom."""
    j = i % n + 1
    w = 1 if j < i else 0
    arcs = [Arc(("T", i), ("T", j), w), Arc(("B", i), ("B", j), w)]
    arcs += [Arc(("B", p), ("T", p), 0) for p in range(1, n + 1) if p not in (i, j)]
    return from_arcs(n, n, arcs)


# ----------------------------------------------------------------------------- composition


def compose(alpha: AffineDiagram, beta: AffineDiagram) -> ComposeResult:
    """
    Stack ``alpha`` on top of ``beta``: the bottom of alpha is glued to the top of beta.

    Returns the reduced diagram and the number of contractible loops that were removed.
    """
    if alpha.bottom != beta.top:
        raise ValueError(f"arity mismatch: alpha has {alpha.bottom} bottom points, beta has {beta.top} top points")
    n, m, k = alpha.top, alpha.bottom, beta.bottom
    ap, ao, bp, bo = alpha.partner, alpha.offset, beta.partner, beta.offset
    partner = [0] * (n + k)
    offset = [0] * (n + k)
    visited = [False] * m
    for start in range(n + k):
        if start < n:
            p, w = ap[start], ao[start]
            in_alpha = True
        else:
            p, w = bp[m + start - n], bo[m + start - n]
            in_alpha = False
        while True:
            if in_alpha:
                if p < n:
                    end = p
                    break
                mid = p - n
                visited[mid] = True
                w += bo[mid]
                p = bp[mid]
                in_alpha = False
            else:
                if p >= m:
                    end = p - m + n
                    break
                visited[p] = True
                w += ao[n + p]
                p = ap[n + p]
                in_alpha = True
        partner[start] = end
        offset[start] = w
    loops = 0
    circles = alpha.circles + beta.circles
    for j in range(m):
        if visited[j]:
            continue
        w = 0
        mid = j
        while True:
            visited[mid] = True
            w += ao[n + mid]
            a = ap[n + mid] - n
            w += bo[a]
            visited[a] = True
            mid = bp[a]
            if mid == j:
                break
        if w == 0:
            loops += 1
        elif abs(w) == 1:
            circles += 1
        else:
            raise AssertionError(f"closed curve with winding {w} cannot be embedded")
    out = AffineDiagram(n, k, tuple(partner), tuple(offset), circles)
    _check_local(out)
    return ComposeResult(out, loops)


def _check_local(d: AffineDiagram):
    """Cheap consistency checks on a freshly composed diagram."""
    t = d.top
    for p in range(t + d.bottom):
        r = d.partner[p]
        if (p < t) == (r < t) and p < r and d.offset[p] not in (0, -1):
            raise AssertionError(f"same-side arc with offset {d.offset[p]}")
    if d.circles and any(d.partner[t + j] < t for j in range(d.bottom)):
        raise AssertionError("non-contractible circle alongside a through arc")


def compose_many(*ds: AffineDiagram) -> ComposeResult:
    result, loops = ds[0], 0
    for d in ds[1:]:
        result, extra = compose(result, d)
        loops += extra
    return ComposeResult(result, loops)


def reflect(d: AffineDiagram) -> AffineDiagram:
    """Reflection in a horizontal line: top and bottom swap, windings change sign, wrap bits stay."""
    n, m = d.top, d.bottom

    def flip(p):
        return p + m if p < n else p - n

    partner = [0] * (n + m)
    offset = [0] * (n + m)
    for p in range(n + m):
        partner[flip(p)] = flip(d.partner[p])
        offset[flip(p)] = d.offset[p]
    return AffineDiagram(m, n, tuple(partner), tuple(offset), d.circles)


# ----------------------------------------------------------------------------- invariants


def rank(d: AffineDiagram) -> int:
    """Minimal number of intersections with the cut line."""
    total = d.circles
    t = d.top
    for p in range(t + d.bottom):
        r = d.partner[p]
        if p >= t and r < t:
            total += abs(d.offset[p])
        elif (p < t) == (r < t) and p < r:
            total += 1 if d.offset[r] == 1 else 0
    return total


def is_monic(d: AffineDiagram) -> bool:
    """No arc joins a bottom point to a bottom point."""
    t = d.top
    return all(d.partner[t + j] < t for j in range(d.bottom))


def is_standard(d: AffineDiagram) -> bool:
    """Monic, no circles, and no through arc crosses the cut."""
    if d.circles or not is_monic(d):
        return False
    return all(w == 0 for _, _, w in d.through_arcs())


def total_winding(d: AffineDiagram) -> int:
    return sum(w for _, _, w in d.through_arcs())


# ----------------------------------------------------------------------------- realizability


def _lift(d: AffineDiagram, p: int, copy: int) -> tuple[int, Fraction]:
    # Boundary of the strip read as one circle: bottom line left to right, then top line right to left.
    if p < d.top:
        return 1, -(copy + Fraction(2 * p + 1, 2 * d.top))
    return 0, copy + Fraction(2 * (p - d.top) + 1, 2 * d.bottom)


def _interleave(a, b) -> bool:
    a0, a1 = sorted(a)
    b0, b1 = sorted(b)
    return a0 < b0 < a1 < b1 or b0 < a0 < b1 < a1


def _realizable(d: AffineDiagram) -> bool:
    size = d.top + d.bottom
    part, off = d.partner, d.offset
    for p in range(size):
        r = part[p]
        if not 0 <= r < size or r == p or part[r] != p or off[r] != -off[p]:
            return False
        if (p < d.top) == (r < d.top) and p < r and off[p] not in (0, -1):
            return False
    through = [p for p in range(d.top, size) if part[p] < d.top]
    if d.circles and through:
        return False
    reps = [p for p in range(size) if p < part[p]]
    window = sum(abs(off[p]) for p in reps) + 2
    chords = {p: (_lift(d, p, 0), _lift(d, part[p], off[p])) for p in reps}
    for i, p in enumerate(reps):
        for r in reps[i:]:
            for s in range(-window, window + 1):
                if r == p and s == 0:
                    continue
                other = (_shift(chords[r][0], s), _shift(chords[r][1], s))
                if _interleave(chords[p], other):
                    return False
    return True


def _shift(point, s):
    side, pos = point
    return side, pos + s if side == 0 else pos - s


def is_realizable(top: int, bottom: int, arcs: Iterable[Arc], circles: int = 0) -> bool:
    """
    True iff the annotated arc system embeds in the cylinder without crossings.

    The check lifts every arc to the universal cover (an infinite strip) and tests all pairs of lifts within a
    window of the total winding plus two periods for interleaving endpoints.
    """
    try:
        d = _from_arcs_unchecked(top, bottom, list(arcs), circles)
    except ValueError:
        return False
    return _realizable(d)


def diagram_is_realizable(d: AffineDiagram) -> bool:
    return _realizable(d)


# ----------------------------------------------------------------------------- standard diagrams


def _cyclic_matching(n: int, openers: Iterable[int]) -> tuple[list[tuple[int, int]], list[int]]:
    """Match each opener with the nearest free closer clockwise. Returns (pairs, unmatched points), 0-based."""
    kinds = ["(" if i in set(openers) else ")" for i in range(n)]
    alive = list(range(n))
    pairs = []
    changed = True
    while changed and any(kinds[i] == "(" for i in alive):
        changed = False
        for pos in range(len(alive)):
            a, b = alive[pos], alive[(pos + 1) % len(alive)]
            if kinds[a] == "(" and kinds[b] == ")" and a != b:
                pairs.append((a, b))
                alive = [p for p in alive if p not in (a, b)]
                changed = True
                break
    return pairs, alive


@functools.lru_cache(maxsize=None)
def enumerate_standard(k: int, n: int) -> tuple[AffineDiagram, ...]:
    """
    All standard monic diagrams of type (k, n): n top points, k bottom points.

    Each is a choice of (n - k)/2 cups, given by their clockwise-first endpoints ("openers"), matched
    cyclically so that no cup encloses a free point; free points run straight down to bottom 1..k.
    Sorted lexicographically by their (opener, closer) pairs.

    >>> [str(d) for d in enumerate_standard(1, 3)]
    ['D(1,3){T1-T2, T3-B1}', 'D(1,3){T1-B1, T2-T3}', 'D(1,3){T1-T3[+1], T2-B1}']
    """
    if n < 1 or k < 0 or k > n or (n - k) % 2:
        raise ValueError(f"no standard diagrams of type ({k}, {n})")
    cups = (n - k) // 2
    found = []
    for openers in itertools.combinations(range(n), cups):
        pairs, free = _cyclic_matching(n, openers)
        partner = [0] * (n + k)
        offset = [0] * (n + k)
        for o, c in pairs:
            partner[o], partner[c] = c, o
            if o > c:
                offset[o], offset[c] = 1, -1
        for j, t in enumerate(sorted(free)):
            partner[n + j], partner[t] = t, n + j
        key = tuple(sorted((o + 1, c + 1) for o, c in pairs))
        found.append((key, AffineDiagram(n, k, tuple(partner), tuple(offset), 0)))
    found.sort(key=lambda kd: kd[0])
    return tuple(d for _, d in found)


def standard_key(d: AffineDiagram) -> tuple[tuple[int, int], ...]:
    """The sort key of a standard diagram: its cups as sorted (opener, closer) pairs, 1-based."""
    out = []
    for p in range(d.top):
        r = d.partner[p]
        if r < d.top and p < r:
            out.append((r + 1, p + 1) if d.offset[r] == 1 else (p + 1, r + 1))
    return tuple(sorted(out))


def standardize(d: AffineDiagram) -> tuple[AffineDiagram, int]:
    """
    For a monic diagram with k > 0 bottom points, the unique (standard, r) with d composed with tau_k^r
    equal to ``standard``. Equivalently d = standard * tau_k^(-r).
    """
    if not is_monic(d):
        raise ValueError("standardize needs a monic diagram")
    k = d.bottom
    if k == 0:
        raise ValueError("standardize needs at least one bottom point")
    r = -total_winding(d)
    std, loops = compose(d, twist(k, r))
    if loops or not is_standard(std):
        raise AssertionError("untwisting did not produce a standard diagram")
    return std, r


def factorize(d: AffineDiagram) -> tuple[AffineDiagram, int, AffineDiagram]:
    """
    The unique (mu, r, nu) with d = mu * tau_t^r * nu^*, mu and nu standard with t bottom points each.

    For t = 0, r is the number of non-contractible circles.
    """
    n, m = d.top, d.bottom
    top_free = sorted(p for p in range(n) if d.partner[p] >= n)
    bot_free = sorted(j for j in range(m) if d.partner[n + j] < n)
    t = len(top_free)
    mu = _half(d, range(n), top_free, n, t, lambda p: p)
    nu = _half(d, range(n, n + m), [n + j for j in bot_free], m, t, lambda p: p - n)
    if t == 0:
        r = d.circles
        rebuilt = compose_many(mu, twist(0, r), reflect(nu)).diagram
    else:
        base = compose(mu, reflect(nu)).diagram
        r = total_winding(d) - total_winding(base)
        rebuilt = compose_many(mu, twist(t, r), reflect(nu)).diagram
    if rebuilt != d:
        raise AssertionError("factorization does not recompose to the input")
    return mu, r, nu


def _half(d: AffineDiagram, points, free, count, t, local) -> AffineDiagram:
    partner = [0] * (count + t)
    offset = [0] * (count + t)
    free_set = set(free)
    for p in points:
        if p in free_set:
            continue
        partner[local(p)] = local(d.partner[p])
        offset[local(p)] = d.offset[p]
    for j, p in enumerate(free):
        partner[local(p)], partner[count + j] = count + j, local(p)
    return AffineDiagram(count, t, tuple(partner), tuple(offset), 0)


def all_diagrams_brute(top: int, bottom: int, max_winding: int, max_circles: int = 0) -> Iterator[AffineDiagram]:
    """
    Every realizable diagram of the given type with through windings bounded by ``max_winding``, found by
    enumerating perfect matchings with all annotations and filtering with the realizability check.
    Exponential; meant for small cross-checks.
    """
    points = [("T", i) for i in range(1, top + 1)] + [("B", j) for j in range(1, bottom + 1)]

    def matchings(rest):
        if not rest:
            yield []
            return
        a = rest[0]
        for i in range(1, len(rest)):
            b = rest[i]
            for m in matchings(rest[1:i] + rest[i + 1:]):
                yield [(a, b)] + m

    for m in matchings(points):
        options = []
        for a, b in m:
            if a[0] != b[0]:
                options.append([Arc(a, b, w) for w in range(-max_winding, max_winding + 1)])
            else:
                options.append([Arc(a, b, 0), Arc(a, b, 1)])
        for choice in itertools.product(*options):
            has_through = any(arc.is_through for arc in choice)
            for c in range(1 if has_through else max_circles + 1):
                d = _from_arcs_unchecked(top, bottom, choice, c)
                if _realizable(d):
                    yield d
