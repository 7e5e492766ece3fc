"""R-matrices, weight operators, and operator algebra for both invariants.

Two braid-group representations are built here, both acting on V (x) V for a
small vector space V with basis v_0..v_{d-1}:

* the third colored Alexander representation (d = 3), built from the nilpotent
  quantum-sl2 formula at sixth root of unity q = w, with the color variable
  realized as q**lambda = t.  Entries are one-variable Laurent polynomials
  over Z[w].
* the Links-Gould representation (d = 4) from quantum gl(2|1), with entries in
  two variables t0 = s0**2, t1 = s1**2 and the square root
  Y = sqrt((t0 - 1)(1 - t1)) adjoined.

Positive braid letters act by R, negative by its inverse; R**-1 is derived
from the cubic minimal polynomial of R and verified by multiplication, never
transcribed.

Operators are stored sparsely.  ``LocalOperator`` is a square matrix over any
of the package's exact rings; basis order on V (x) V is v_i (x) v_j -> d*i + j
with the left factor the lower-numbered strand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping

from .ring import (
    CycScalar,
    ExtScalar,
    GENERIC_MODULUS,
    LaurentPoly1,
    LaurentPoly2,
    ext_generic,
    ext_specialized,
    specialize,
)


def q_int_bracket(a: int) -> CycScalar:
    """{a} = w**a - w**-a at q = w."""
    return CycScalar.omega_power(a) - CycScalar.omega_power(-a)


def q_colored_bracket(c: int) -> LaurentPoly1:
    """{lambda + c} = t*w**c - t**-1 * w**-c with t standing for q**lambda."""
    return LaurentPoly1({1: CycScalar.omega_power(c),
                         -1: -CycScalar.omega_power(-c)})


def _pochhammer_cyc(a: int, n: int) -> CycScalar:
    """{a; n} = {a}{a-1}...{a-n+1} as a scalar."""
    out = CycScalar.one()
    for k in range(n):
        out = out * q_int_bracket(a - k)
    return out


def q_pochhammer(a: int, n: int, *, colored: bool = False) -> LaurentPoly1:
    """{a; n} for integer a, or {lambda + a; n} when colored."""
    if n < 0:
        raise ValueError("Pochhammer length must be >= 0")
    if not colored:
        return LaurentPoly1.constant(_pochhammer_cyc(a, n))
    out = LaurentPoly1.one()
    for k in range(n):
        out = out * q_colored_bracket(a - k)
    return out


class LocalOperator:
    """Sparse square matrix over an exact ring; (row, col) -> nonzero entry."""

    __slots__ = ("size", "_entries")

    def __init__(self, size: int, entries: Mapping[tuple[int, int], object]) -> None:
        self.size = size
        self._entries = {rc: v for rc, v in entries.items() if v}

    @classmethod
    def identity(cls, size: int, one) -> "LocalOperator":
        return cls(size, {(i, i): one for i in range(size)})

    def get(self, row: int, col: int):
        return self._entries.get((row, col))

    def entries(self) -> list[tuple[int, int, object]]:
        return [(r, c, self._entries[(r, c)]) for r, c in sorted(self._entries)]

    def nnz(self) -> int:
        return len(self._entries)

    def columns(self) -> dict[int, list[tuple[int, object]]]:
        cols: dict[int, list[tuple[int, object]]] = {}
        for (r, c), v in self._entries.items():
            cols.setdefault(c, []).append((r, v))
        for lst in cols.values():
            lst.sort(key=lambda rv: rv[0])
        return cols

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, LocalOperator)
                and self.size == other.size
                and self._entries == other._entries)

    def __bool__(self) -> bool:
        return bool(self._entries)

    def __add__(self, other: "LocalOperator") -> "LocalOperator":
        if self.size != other.size:
            raise ValueError("size mismatch")
        out = dict(self._entries)
        for rc, v in other._entries.items():
            cur = out.get(rc)
            out[rc] = v if cur is None else cur + v
        return LocalOperator(self.size, out)

    def __sub__(self, other: "LocalOperator") -> "LocalOperator":
        return self + other.scale_neg()

    def scale_neg(self) -> "LocalOperator":
        return LocalOperator(self.size, {rc: -v for rc, v in self._entries.items()})

    def scale(self, factor) -> "LocalOperator":
        return LocalOperator(self.size,
                             {rc: v * factor for rc, v in self._entries.items()})

    def __matmul__(self, other: "LocalOperator") -> "LocalOperator":
        """Sparse matrix product self @ other (apply other first)."""
        if self.size != other.size:
            raise ValueError("size mismatch")
        other_by_row: dict[int, list[tuple[int, object]]] = {}
        for (k, c), v in other._entries.items():
            other_by_row.setdefault(k, []).append((c, v))
        out: dict[tuple[int, int], object] = {}
        for (r, k), u in self._entries.items():
            hits = other_by_row.get(k)
            if not hits:
                continue
            for c, v in hits:
                rc = (r, c)
                prod = u * v
                cur = out.get(rc)
                out[rc] = prod if cur is None else cur + prod
        return LocalOperator(self.size, out)

    def map_values(self, fn: Callable[[object], object]) -> "LocalOperator":
        return LocalOperator(self.size,
                             {rc: fn(v) for rc, v in self._entries.items()})

    def text_dump(self) -> str:
        lines = [f"size {self.size}, {self.nnz()} nonzero"]
        width = len(str(self.size - 1))
        for r, c, v in self.entries():
            lines.append(f"  [{r:>{width}},{c:>{width}}] {v}")
        return "\n".join(lines)


def tensor(a: LocalOperator, b: LocalOperator) -> LocalOperator:
    """Kronecker product; row order (ra, rb) -> ra * b.size + rb."""
    out: dict[tuple[int, int], object] = {}
    for (ra, ca), va in a._entries.items():
        for (rb, cb), vb in b._entries.items():
            out[(ra * b.size + rb, ca * b.size + cb)] = va * vb
    return LocalOperator(a.size * b.size, out)


@dataclass(frozen=True)
class DiagonalOperator:
    """Diagonal operator on V, used as the closure weight on traced strands."""

    values: tuple

    @property
    def dim(self) -> int:
        return len(self.values)


# --- colored Alexander side (d = 3) ---------------------------------------

ADO_DIM = 3


@lru_cache(maxsize=None)
def build_ado3_r() -> LocalOperator:
    """Third colored Alexander R-matrix from the nilpotent summation formula.

    R(v_i (x) v_j) = t**(2-i-j) * sum_n w**(2(i+n)(j-n) + n(n-1)/2)
        * {i+n; n}/{n; n} * {lambda - j + n; n} * v_{j-n} (x) v_{i+n}
    with n running over 0 <= n <= min(j, 2 - i).  The scalar ratio
    {i+n; n}/{n; n} is computed by exact division in Z[w].
    """
    d = ADO_DIM
    entries: dict[tuple[int, int], LaurentPoly1] = {}
    for i in range(d):
        for j in range(d):
            col = d * i + j
            for n in range(0, min(j, d - 1 - i) + 1):
                row = d * (j - n) + (i + n)
                ratio = _pochhammer_cyc(i + n, n).exact_div(_pochhammer_cyc(n, n))
                omega_exp = 2 * (i + n) * (j - n) + n * (n - 1) // 2
                coeff = LaurentPoly1.t_power(2 - i - j,
                                             CycScalar.omega_power(omega_exp))
                value = coeff * ratio * q_pochhammer(-j + n, n, colored=True)
                cur = entries.get((row, col))
                entries[(row, col)] = value if cur is None else cur + value
    return LocalOperator(d * d, entries)


@lru_cache(maxsize=None)
def build_ado3_h() -> DiagonalOperator:
    """Closure weight h = diag(t**2 * w**(2i)) on the 3-dimensional V."""
    t2 = LaurentPoly1.t_power(2)
    return DiagonalOperator(tuple(
        t2 * CycScalar.omega_power(2 * i) for i in range(ADO_DIM)))


def ado_cubic_coeffs() -> tuple[LaurentPoly1, LaurentPoly1, LaurentPoly1]:
    """(c2, c1, c0) with R**3 = c2 R**2 + c1 R + c0 Id for the d=3 R-matrix."""
    w2 = CycScalar.omega_power(2)
    c2 = LaurentPoly1({-2: w2, 0: (-1, 0), 2: (1, 0)})
    c1 = LaurentPoly1({-2: w2, 0: -w2, 2: (1, 0)})
    c0 = LaurentPoly1.constant(-w2)
    return c2, c1, c0


# --- Links-Gould side (d = 4) ----------------------------------------------

LG_DIM = 4


def _p2(e0: int, e1: int, c: int = 1) -> LaurentPoly2:
    return LaurentPoly2.monomial(e0, e1, c)


@lru_cache(maxsize=None)
def build_lg_r() -> LocalOperator:
    """Links-Gould R-matrix on V (x) V, dim V = 4, transcribed entrywise.

    Entries live in Z[s0**±1, s1**±1] extended by Y with
    Y**2 = (t0 - 1)(1 - t1), t0 = s0**2, t1 = s1**2.
    """
    one = LaurentPoly2.one()
    s0 = _p2(1, 0)
    s1 = _p2(0, 1)
    s0s1 = _p2(1, 1)
    t0 = _p2(2, 0)
    t1 = _p2(0, 2)
    t0t1 = _p2(2, 2)
    even: dict[tuple[int, int], LaurentPoly2] = {
        (0, 0): t0,
        (1, 4): s0,
        (2, 8): s0,
        (3, 12): one,
        (4, 1): s0,
        (4, 4): t0 - one,
        (5, 5): -one,
        (6, 6): t0t1 - one,
        (6, 9): -s0s1,
        (7, 13): s1,
        (8, 2): s0,
        (8, 8): t0 - one,
        (9, 6): -s0s1,
        (10, 10): -one,
        (11, 14): s1,
        (12, 3): one,
        (12, 12): GENERIC_MODULUS,      # the Y**2 entry
        (13, 7): s1,
        (13, 13): t1 - one,
        (14, 11): s1,
        (14, 14): t1 - one,
        (15, 15): t1,
    }
    odd: dict[tuple[int, int], LaurentPoly2] = {
        (6, 12): -s0s1,
        (9, 12): one,
        (12, 6): -s0s1,
        (12, 9): one,
    }
    entries: dict[tuple[int, int], ExtScalar] = {}
    for rc, v in even.items():
        entries[rc] = ext_generic(even=v)
    for rc, v in odd.items():
        cur = entries.get(rc)
        entries[rc] = (ext_generic(odd=v) if cur is None
                       else ExtScalar(cur.even, cur.odd + v, cur.modulus))
    return LocalOperator(LG_DIM * LG_DIM, entries)


@lru_cache(maxsize=None)
def build_lg_h() -> DiagonalOperator:
    """Links-Gould closure weight diag(t0**-1, -t1, -t0**-1, t1)."""
    return DiagonalOperator((
        ext_generic(even=_p2(-2, 0)),
        ext_generic(even=_p2(0, 2, -1)),
        ext_generic(even=_p2(-2, 0, -1)),
        ext_generic(even=_p2(0, 2)),
    ))


def lg_cubic_coeffs() -> tuple[ExtScalar, ExtScalar, ExtScalar]:
    """(c2, c1, c0) with R**3 = c2 R**2 + c1 R + c0 Id for the d=4 R-matrix."""
    one = LaurentPoly2.one()
    t0 = _p2(2, 0)
    t1 = _p2(0, 2)
    t0t1 = _p2(2, 2)
    c2 = ext_generic(even=t0 + t1 - one)
    c1 = ext_generic(even=t0 + t1 - t0t1)
    c0 = ext_generic(even=-t0t1)
    return c2, c1, c0


@lru_cache(maxsize=None)
def build_lg_r_specialized() -> LocalOperator:
    """Links-Gould R with t0 = t**2, t1 = w**2 t**-2 substituted entrywise."""
    return build_lg_r().map_values(specialize)


@lru_cache(maxsize=None)
def build_lg_h_specialized() -> DiagonalOperator:
    return DiagonalOperator(tuple(specialize(v) for v in build_lg_h().values))


def lg_specialized_cubic_coeffs() -> tuple[ExtScalar, ExtScalar, ExtScalar]:
    c2, c1, c0 = lg_cubic_coeffs()
    return specialize(c2), specialize(c1), specialize(c0)


# --- inversion and derived operators ---------------------------------------

def _ring_one_like(x):
    """The multiplicative unit of the ring x lives in."""
    if isinstance(x, LaurentPoly1):
        return LaurentPoly1.one()
    if isinstance(x, LaurentPoly2):
        return LaurentPoly2.one()
    if isinstance(x, ExtScalar):
        return ExtScalar(_ring_one_like(x.even), type(x.even).zero(), x.modulus)
    raise TypeError(f"unsupported ring element {type(x).__name__}")


def ring_unit_inverse(x):
    """Inverse of a unit-monomial ring element (the only divisions we allow)."""
    if isinstance(x, (LaurentPoly1, LaurentPoly2)):
        return x.unit_monomial_inverse()
    if isinstance(x, ExtScalar):
        if x.odd:
            raise ZeroDivisionError("cannot invert an ExtScalar with odd part")
        return ExtScalar(ring_unit_inverse(x.even), type(x.even).zero(), x.modulus)
    raise TypeError(f"unsupported ring element {type(x).__name__}")


def operator_one(op: LocalOperator):
    for v in op._entries.values():
        return _ring_one_like(v)
    raise ValueError("cannot infer ring from the zero operator")


def invert_r(r: LocalOperator, cubic: tuple) -> LocalOperator:
    """R**-1 = c0**-1 (R**2 - c2 R - c1 Id) from R**3 = c2 R**2 + c1 R + c0 Id.

    The result is verified by multiplying back to the identity on both sides;
    a failure raises rather than returning a wrong inverse.
    """
    c2, c1, c0 = cubic
    one = operator_one(r)
    ident = LocalOperator.identity(r.size, one)
    rinv = (r @ r - r.scale(c2) - ident.scale(c1)).scale(ring_unit_inverse(c0))
    if r @ rinv != ident or rinv @ r != ident:
        raise ValueError("cubic-based inverse failed verification")
    return rinv


@lru_cache(maxsize=None)
def build_ado3_r_inverse() -> LocalOperator:
    return invert_r(build_ado3_r(), ado_cubic_coeffs())


@lru_cache(maxsize=None)
def build_lg_r_inverse() -> LocalOperator:
    return invert_r(build_lg_r(), lg_cubic_coeffs())


@lru_cache(maxsize=None)
def build_lg_r_inverse_specialized() -> LocalOperator:
    return invert_r(build_lg_r_specialized(), lg_specialized_cubic_coeffs())


def skein_variable_pair(sample) -> tuple:
    """(t0, t1) read in the coefficient ring of the given specimen element.

    Two-variable rings carry t0, t1 themselves; the one-variable ring sees
    them through the specialization t0 = t**2, t1 = w**2 t**-2.
    """
    if isinstance(sample, ExtScalar):
        t0, t1 = skein_variable_pair(sample.even)
        zero = type(sample.even).zero()
        return (ExtScalar(t0, zero, sample.modulus),
                ExtScalar(t1, zero, sample.modulus))
    if isinstance(sample, LaurentPoly2):
        return _p2(2, 0), _p2(0, 2)
    if isinstance(sample, LaurentPoly1):
        return (LaurentPoly1.t_power(2),
                LaurentPoly1.t_power(-2, CycScalar.omega_power(2)))
    raise TypeError(f"unsupported ring element {type(sample).__name__}")


def build_q_operators(r: LocalOperator, rinv: LocalOperator) -> tuple[LocalOperator, LocalOperator]:
    """Denominator-cleared skein operators for the given R-matrix.

    Q0c = t0 R + t0 (1 - t1) Id - t0 t1 R**-1   (this is (t0 - t1) Q0)
    Q1c = t1 R + t1 (1 - t0) Id - t0 t1 R**-1   (this is (t1 - t0) Q1)
    The variables t0, t1 are read in the ring of R's entries, so the d = 3
    matrix gets the one-variable specialization automatically.
    """
    one = operator_one(r)
    t0, t1 = skein_variable_pair(one)
    ident = LocalOperator.identity(r.size, one)
    t0t1 = t0 * t1
    q0 = r.scale(t0) + ident.scale(t0 * (one - t1)) - rinv.scale(t0t1)
    q1 = r.scale(t1) + ident.scale(t1 * (one - t0)) - rinv.scale(t0t1)
    return q0, q1
