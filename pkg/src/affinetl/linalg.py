"""
Dense matrices of Laurent polynomials, with exact determinants and adjugates.

For the exact domains the determinant runs fraction-free (Bareiss) elimination on Kronecker-packed big
integers: each row is first cleared to honest polynomials in x and q by a unit monomial and a denominator,
then every entry is evaluated at ``q = 2^B, x = 2^(B*(Dq+1))``. Evaluation is a ring homomorphism, so the
exact divisions of Bareiss become exact integer divisions, and since every intermediate Bareiss entry is a
minor of the input, the Hadamard-type bound on minors fixes a slot width B for which the final integer
unpacks back into coefficients without overlap.

The complex domain uses the same elimination on :class:`LaurentPoly` values directly.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from .laurent import LAURENT_IN_Q, RATIONAL, CoeffDomain, DomainMismatch, LaurentPoly

try:
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover - gmpy2 is an optional accelerator
    _bigint = int


class LaurentMatrix:
    """An immutable rectangular matrix of :class:`LaurentPoly` entries over one domain."""

    __slots__ = ("rows", "cols", "entries", "domain")

    def __init__(self, entries: Sequence[Sequence[LaurentPoly]], domain: CoeffDomain | None = None):
        rows = tuple(tuple(r) for r in entries)
        if not rows or not rows[0]:
            raise ValueError("matrices must have at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        if domain is None:
            domain = rows[0][0].domain
        for r in rows:
            for e in r:
                if not isinstance(e, LaurentPoly) or e.domain != domain or e.var != "x":
                    raise DomainMismatch("matrix entries must be polynomials in x over one domain")
        self.entries = rows
        self.rows = len(rows)
        self.cols = len(rows[0])
        self.domain = domain

    @classmethod
    def from_function(cls, rows: int, cols: int, f: Callable[[int, int], LaurentPoly], domain: CoeffDomain):
        return cls([[f(i, j) for j in range(cols)] for i in range(rows)], domain)

    @classmethod
    def zeros(cls, rows: int, cols: int, domain: CoeffDomain = LAURENT_IN_Q) -> LaurentMatrix:
        z = LaurentPoly.zero(domain)
        return cls([[z] * cols for _ in range(rows)], domain)

    @classmethod
    def identity(cls, n: int, domain: CoeffDomain = LAURENT_IN_Q) -> LaurentMatrix:
        z, o = LaurentPoly.zero(domain), LaurentPoly.constant(1, domain)
        return cls([[o if i == j else z for j in range(n)] for i in range(n)], domain)

    @classmethod
    def scalar(cls, n: int, p: LaurentPoly) -> LaurentMatrix:
        z = LaurentPoly.zero(p.domain)
        return cls([[p if i == j else z for j in range(n)] for i in range(n)], p.domain)

    def __getitem__(self, ij) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(not e for r in self.entries for e in r)

    def map(self, f: Callable[[LaurentPoly], LaurentPoly]) -> LaurentMatrix:
        return LaurentMatrix([[f(e) for e in r] for r in self.entries])

    def transpose(self) -> LaurentMatrix:
        return LaurentMatrix(list(zip(*self.entries)), self.domain)

    def __add__(self, other: LaurentMatrix) -> LaurentMatrix:
        self._check_same_shape(other)
        return LaurentMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.domain)

    def __sub__(self, other: LaurentMatrix) -> LaurentMatrix:
        self._check_same_shape(other)
        return LaurentMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.domain)

    def __neg__(self) -> LaurentMatrix:
        return self.map(lambda e: -e)

    def __mul__(self, c) -> LaurentMatrix:
        """Entrywise product with a scalar or a polynomial in x."""
        if isinstance(c, LaurentMatrix):
            raise TypeError("use @ for matrix products")
        return self.map(lambda e: e * c)

    __rmul__ = __mul__

    def __matmul__(self, other: LaurentMatrix) -> LaurentMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        if self.domain != other.domain:
            raise DomainMismatch(f"{self.domain!r} vs {other.domain!r}")
        zero = LaurentPoly.zero(self.domain)
        cols = list(zip(*other.entries))
        out = []
        for r in self.entries:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return LaurentMatrix(out, self.domain)

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.shape == other.shape and self.domain == other.domain and self.entries == other.entries

    def __hash__(self):
        return hash((self.entries, self.domain))

    def isclose(self, other: LaurentMatrix, tol: float = 1e-9) -> bool:
        self._check_same_shape(other)
        return all(a.isclose(b, tol) for r, s in zip(self.entries, other.entries) for a, b in zip(r, s))

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def minor(self, i: int, j: int) -> LaurentMatrix:
        """The submatrix with row i and column j deleted."""
        return LaurentMatrix([r[:j] + r[j + 1:] for k, r in enumerate(self.entries) if k != i], self.domain)

    def det(self) -> LaurentPoly:
        return laurent_det(self)

    def adjugate(self) -> LaurentMatrix:
        return adjugate(self)

    def evaluate_q(self, q_value, domain: CoeffDomain | None = None) -> LaurentMatrix:
        return self.map(lambda e: e.evaluate_q(q_value, domain))

    def to_json(self) -> list:
        return [[e.to_json() for e in r] for r in self.entries]

    @classmethod
    def from_json(cls, obj: list, domain: CoeffDomain | None = None) -> LaurentMatrix:
        entries = [[LaurentPoly.from_json(e, domain) for e in r] for r in obj]
        if domain is None:
            kinds = {e.domain for r in entries for e in r if e}
            if len(kinds) > 1:
                raise DomainMismatch("mixed domains in matrix JSON")
            domain = kinds.pop() if kinds else RATIONAL
            entries = [[e if e else LaurentPoly.zero(domain) for e in r] for r in entries]
        return cls(entries, domain)

    def to_text(self) -> str:
        """Aligned plain-text table."""
        cells = [[str(e) for e in r] for r in self.entries]
        widths = [max(len(cells[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        return "\n".join("[ " + "  ".join(c.rjust(w) for c, w in zip(r, widths)) + " ]" for r in cells)

    def __repr__(self):
        return f"LaurentMatrix({self.rows}x{self.cols}, {self.domain!r})\n{self.to_text()}"


# ----------------------------------------------------------------------------- packing


def _flatten(p: LaurentPoly) -> dict[tuple[int, int], Fraction | int]:
    """Map (x exponent, q exponent) -> rational coefficient."""
    if p.domain.kind == "laurent_q":
        return {(ex, eq): c for ex, cq in p.coeffs.items() for eq, c in cq.coeffs.items()}
    return {(ex, 0): c for ex, c in p.coeffs.items()}


class _Packing:
    """Row-wise normalization plus the Kronecker layout shared by det and adjugate."""

    def __init__(self, rows: list[list[dict]], extra_l1: int = 0):
        self.n = len(rows)
        self.x_shift = []
        self.q_shift = []
        self.denoms = []
        int_rows = []
        dq_total = dx_total = 0
        l1_product = 1
        for row in rows:
            terms = [k for entry in row for k in entry]
            if not terms:
                int_rows.append(None)
                self.x_shift.append(0)
                self.q_shift.append(0)
                self.denoms.append(1)
                continue
            sx = min(k[0] for k in terms)
            sq = min(k[1] for k in terms)
            den = math.lcm(*(Fraction(c).denominator for entry in row for c in entry.values()))
            irow = [{(ex - sx, eq - sq): int(c * den) for (ex, eq), c in entry.items()} for entry in row]
            dx_total += max(k[0] for k in terms) - sx
            dq_total += max(k[1] for k in terms) - sq
            l1_product *= sum(abs(c) for entry in irow for c in entry.values()) + extra_l1
            self.x_shift.append(sx)
            self.q_shift.append(sq)
            self.denoms.append(den)
            int_rows.append(irow)
        self.int_rows = int_rows
        self.dx = dx_total
        self.dq = dq_total
        # Slot width in bits: one sign bit over the largest possible minor coefficient, rounded to bytes.
        bits = max(l1_product, 1).bit_length() + 2
        self.slot_bytes = (bits + 7) // 8
        self.B = 8 * self.slot_bytes
        self.stride = dq_total + 1

    def pack(self, entry: dict) -> int:
        B, stride = self.B, self.stride
        v = 0
        for (ex, eq), c in entry.items():
            v += c << (B * (ex * stride + eq))
        return _bigint(v)

    def unpack(self, v) -> dict[tuple[int, int], int]:
        """Signed base-2^B digits of v, as (x exponent, q exponent) -> integer coefficient."""
        v = int(v)
        if v == 0:
            return {}
        slots = (self.dx + 1) * self.stride
        sb = self.slot_bytes
        offset = int.from_bytes((b"\x00" * (sb - 1) + b"\x80") * slots, "little")
        raw = (v + offset).to_bytes(slots * sb + 1, "little")
        half = 1 << (self.B - 1)
        out = {}
        for idx in range(slots):
            d = int.from_bytes(raw[idx * sb:(idx + 1) * sb], "little") - half
            if d:
                out[divmod(idx, self.stride)] = d
        if raw[slots * sb]:
            raise AssertionError("packed value overflowed its degree bound")
        return out


def _unflatten(coeffs: dict, domain: CoeffDomain, scale: Fraction, sx: int, sq: int) -> LaurentPoly:
    if domain.kind == "laurent_q":
        grouped: dict[int, dict[int, Fraction]] = {}
        for (ex, eq), c in coeffs.items():
            grouped.setdefault(ex + sx, {})[eq + sq] = Fraction(c) * scale
        return LaurentPoly({ex: LaurentPoly(qc, RATIONAL, "q") for ex, qc in grouped.items()}, domain)
    return LaurentPoly({ex + sx: Fraction(c) * scale for (ex, _), c in coeffs.items()}, domain)


def _bareiss(a: list[list]) -> tuple[object, bool]:
    """Fraction-free elimination in place. Returns (det, nonsingular)."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0, False
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            if aik == 0:
                for j in range(k + 1, n):
                    rowi[j] = (rowi[j] * akk) // prev
            else:
                for j in range(k + 1, n):
                    rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
        prev = akk
    d = a[n - 1][n - 1]
    return sign * d, d != 0


def _bareiss_generic(a: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(a)
    sign = 1
    prev = None
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(a[0][0].domain)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                v = a[i][j] * akk - aik * a[k][j]
                a[i][j] = v if prev is None else v.exact_div(prev)
        prev = akk
    return a[n - 1][n - 1] * sign


def laurent_det(m: LaurentMatrix) -> LaurentPoly:
    """
    Exact determinant of a square Laurent matrix.

    >>> from .laurent import x_poly
    >>> laurent_det(LaurentMatrix([[x_poly({1: 1}), x_poly({0: 1})], [x_poly({0: 1}), x_poly({-1: 1})]]))
    LaurentPoly('0')
    """
    if not m.is_square():
        raise ValueError(f"determinant of a non-square {m.shape} matrix")
    dom = m.domain
    if not dom.exact:
        return _bareiss_generic([list(r) for r in m.entries])
    pk = _Packing([[_flatten(e) for e in r] for r in m.entries])
    if any(r is None for r in pk.int_rows):
        return LaurentPoly.zero(dom)
    packed = [[pk.pack(e) for e in r] for r in pk.int_rows]
    d, _ = _bareiss(packed)
    scale = Fraction(1, math.prod(pk.denoms))
    return _unflatten(pk.unpack(d), dom, scale, sum(pk.x_shift), sum(pk.q_shift))


def adjugate(m: LaurentMatrix) -> LaurentMatrix:
    """
    The classical adjoint: entry (i, j) is (-1)^(i+j) times the (j, i) minor, so that adj(R) R = det(R) I.

    Exact domains use fraction-free Gauss-Jordan on the packed integers of ``[R | I]``; the right block ends
    up as ``D * R^-1`` where D = +-det(R). Singular input falls back to cofactors.
    """
    if not m.is_square():
        raise ValueError(f"adjugate of a non-square {m.shape} matrix")
    n = m.rows
    dom = m.domain
    if n == 1:
        return LaurentMatrix.identity(1, dom)
    if not dom.exact:
        return _adjugate_cofactors(m)
    rows = [[_flatten(e) for e in r] for r in m.entries]
    pk = _Packing(rows, extra_l1=1)
    if any(r is None for r in pk.int_rows):
        return _adjugate_cofactors(m)
    # Row i was scaled by u_i = den_i * x^-sx_i * q^-sq_i. Identity columns stay unscaled integers.
    a = [[pk.pack(e) for e in r] + [_bigint(1 if i == j else 0) for j in range(n)]
         for i, r in enumerate(pk.int_rows)]
    width = 2 * n
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                return _adjugate_cofactors(m)
        akk = a[k][k]
        rowk = a[k]
        for i in range(n):
            if i == k:
                continue
            rowi = a[i]
            aik = rowi[k]
            for j in range(width):
                if j != k:
                    rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    # Left block is D*I with D = a[k][k]; right block X satisfies X * U R = D I for U = diag(u_i).
    d_packed = a[0][0]
    d_shifted = _unflatten(pk.unpack(d_packed), dom, Fraction(1), 0, 0)
    det_true = laurent_det(m)
    # det(U R) = det(U) det(R) = D * s with s = +-1 depending on row swaps.
    unit_det = _unit(dom, Fraction(math.prod(pk.denoms)), -sum(pk.x_shift), -sum(pk.q_shift))
    det_scaled = det_true * unit_det
    if det_scaled == d_shifted:
        s = 1
    elif det_scaled == -d_shifted:
        s = -1
    else:
        raise AssertionError("Gauss-Jordan pivot disagrees with the determinant")
    # adj(UR) = s * X;  adj(R) = adj(U^-1 UR) = adj(UR) adj(U^-1) = adj(UR) * U / det(U).
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = _unflatten(pk.unpack(a[i][n + j]), dom, Fraction(1), 0, 0)
            u_j = _unit(dom, Fraction(pk.denoms[j]), -pk.x_shift[j], -pk.q_shift[j])
            row.append(entry * u_j * s)
        out.append(row)
    inv_unit = _unit(dom, Fraction(1, math.prod(pk.denoms)), sum(pk.x_shift), sum(pk.q_shift))
    return LaurentMatrix([[e * inv_unit for e in r] for r in out], dom)


def _unit(dom: CoeffDomain, c: Fraction, ex: int, eq: int) -> LaurentPoly:
    if dom.kind == "laurent_q":
        return LaurentPoly({ex: LaurentPoly({eq: c}, RATIONAL, "q")}, dom)
    return LaurentPoly({ex: c}, dom)


def _adjugate_cofactors(m: LaurentMatrix) -> LaurentMatrix:
    n = m.rows
    return LaurentMatrix.from_function(
        n, n, lambda i, j: laurent_det(m.minor(j, i)) * (-1 if (i + j) % 2 else 1), m.domain)

