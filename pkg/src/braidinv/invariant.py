"""Braid-closure invariants via sparse state evolution and partial trace.

The operator invariant of a braid b on n strands is computed column by
column: for each middle multi-index m over strands 2..n, the basis state
(b_1 = 0, m) is pushed through the braid letter by letter, and the weighted
diagonal amplitude is accumulated.  Writing phi(b) for the representation and
h for the closure weight on V,

    O[a, c] = sum_m  h(m) * <(a, m) | phi(b) | (c, m)>,

the theory guarantees O is a scalar multiple of the identity; the scalar is
the invariant of the closure (strand 1 is the strand cut open).  The a != 0
blocks of column 0 are asserted to vanish, and ``paranoid=True`` evolves all
d**n basis columns to verify the full proportionality O = c * Id.

States are sparse maps from packed keys to amplitudes: strand s contributes
two bits at position 2(s-1) (both representations have d <= 4), and a braid
letter ±k touches only the four bits of strands k, k+1.  Per letter and
strand pair the R-matrix column is precompiled to (key delta, coefficient
terms) lists, so the hot loop is pure integer and dict work.  Three
coefficient kernels cover the rings involved:

* ``cyc``  -- Laurent polynomials over Z[w] as {exp: (a, b)} dicts
              (colored Alexander, d = 3);
* ``ext1`` -- pairs (even, odd) of such dicts with Y**2 folded in via the
              specialized modulus (Links-Gould at t0 = t**2, t1 = w**2 t**-2,
              d = 4);
* ``ext2`` -- pairs of {(e0, e1): int} dicts in the two-variable generic ring
              (Links-Gould, d = 4).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable

from .braid import BraidWord
from .rep import (
    DiagonalOperator,
    LocalOperator,
    build_ado3_h,
    build_ado3_r,
    build_ado3_r_inverse,
    build_lg_h,
    build_lg_h_specialized,
    build_lg_r,
    build_lg_r_inverse,
    build_lg_r_inverse_specialized,
    build_lg_r_specialized,
)
from .ring import (
    ExtScalar,
    LaurentPoly1,
    LaurentPoly2,
    ext_generic,
    ext_specialized,
)


class ProportionalityError(RuntimeError):
    """The open-strand operator failed to be a multiple of the identity."""


@dataclass(frozen=True)
class InvariantValue:
    """An exact invariant value together with what produced it."""

    braid: BraidWord
    kind: str                    # "ado3" | "lg" | "lg-spec"
    value: object                # LaurentPoly1 or LaurentPoly2
    paranoid: bool = False


# --- coefficient kernels ----------------------------------------------------

def _conv_cyc(dst: dict, src: dict, terms: tuple) -> None:
    """dst += src * terms over Z[w][t, t**-1]; terms are (exp, a, b)."""
    for te, ea, eb in terms:
        for pe, (pa, pb) in src.items():
            ne = pe + te
            na = pa * ea - pb * eb
            nb = pa * eb + pb * ea + pb * eb
            cur = dst.get(ne)
            if cur is None:
                dst[ne] = (na, nb)
            else:
                dst[ne] = (cur[0] + na, cur[1] + nb)


def _conv_int2(dst: dict, src: dict, terms: tuple) -> None:
    """dst += src * terms over Z[s0:pm1, s1:pm1]; terms are (e0, e1, c)."""
    for t0, t1, c in terms:
        for (p0, p1), pc in src.items():
            ne = (p0 + t0, p1 + t1)
            dst[ne] = dst.get(ne, 0) + pc * c


def _prune_cyc(amp: dict) -> dict:
    return {e: c for e, c in amp.items() if c[0] or c[1]}


def _prune_int2(amp: dict) -> dict:
    return {e: c for e, c in amp.items() if c}


def _apply_cyc(state: dict, shift: int, table: list) -> dict:
    out: dict = {}
    for key, amp in state.items():
        for delta, terms in table[(key >> shift) & 15]:
            nk = key + delta
            acc = out.get(nk)
            if acc is None:
                acc = {}
                out[nk] = acc
            _conv_cyc(acc, amp, terms)
    res: dict = {}
    for nk, acc in out.items():
        acc = _prune_cyc(acc)
        if acc:
            res[nk] = acc
    return res


def _apply_ext(state: dict, shift: int, table: list, conv, prune) -> dict:
    out: dict = {}
    for key, (ae, ao) in state.items():
        for delta, ev, od, odp in table[(key >> shift) & 15]:
            nk = key + delta
            acc = out.get(nk)
            if acc is None:
                acc = ({}, {})
                out[nk] = acc
            de, do = acc
            if ev:
                if ae:
                    conv(de, ae, ev)
                if ao:
                    conv(do, ao, ev)
            if od:
                if ae:
                    conv(do, ae, od)
                if ao:
                    conv(de, ao, odp)   # odd*odd picks up Y**2 = modulus
    res: dict = {}
    for nk, (de, do) in out.items():
        de = prune(de)
        do = prune(do)
        if de or do:
            res[nk] = (de, do)
    return res


class _Kernel:
    """Ring-specific raw operations the evolution engine is generic over."""

    __slots__ = ("kind", "dim", "conv", "prune")

    def __init__(self, kind: str, dim: int) -> None:
        self.kind = kind
        self.dim = dim
        self.conv = _conv_cyc if kind in ("cyc", "ext1") else _conv_int2
        self.prune = _prune_cyc if kind in ("cyc", "ext1") else _prune_int2

    def one(self):
        if self.kind == "cyc":
            return {0: (1, 0)}
        if self.kind == "ext1":
            return ({0: (1, 0)}, {})
        return ({(0, 0): 1}, {})

    def apply(self, state: dict, shift: int, table: list) -> dict:
        if self.kind == "cyc":
            return _apply_cyc(state, shift, table)
        return _apply_ext(state, shift, table, self.conv, self.prune)

    def acc_weighted(self, dst, src, weight_terms: tuple) -> None:
        """dst += src * weight, with an even (scalar-ring) weight."""
        if self.kind == "cyc":
            self.conv(dst, src, weight_terms)
        else:
            de, do = dst
            ae, ao = src
            if ae:
                self.conv(de, ae, weight_terms)
            if ao:
                self.conv(do, ao, weight_terms)

    def fresh_total(self):
        return {} if self.kind == "cyc" else ({}, {})

    def total_is_zero(self, total) -> bool:
        if self.kind == "cyc":
            return not self.prune(total)
        de, do = total
        return not self.prune(de) and not self.prune(do)

    def wrap(self, total):
        """Raw accumulator -> public ring element."""
        if self.kind == "cyc":
            return LaurentPoly1(self.prune(total))
        de, do = total
        if self.kind == "ext1":
            return ext_specialized(LaurentPoly1(_prune_cyc(de)),
                                   LaurentPoly1(_prune_cyc(do)))
        return ext_generic(LaurentPoly2(_prune_int2(de)),
                           LaurentPoly2(_prune_int2(do)))


_KERNELS = {
    "cyc": _Kernel("cyc", 3),
    "ext1": _Kernel("ext1", 4),
    "ext2": _Kernel("ext2", 4),
}


# --- operator compilation ---------------------------------------------------

def _compile_value(kind: str, value) -> tuple:
    """Ring element -> the flat coefficient terms the kernels consume."""
    if kind == "cyc":
        return (tuple((k, a, b) for k, (a, b) in sorted(value._terms.items())),)
    if kind == "ext1":
        ev = tuple((k, a, b) for k, (a, b) in sorted(value.even._terms.items()))
        od = tuple((k, a, b) for k, (a, b) in sorted(value.odd._terms.items()))
        odp = tuple((k, a, b) for k, (a, b)
                    in sorted((value.odd * value.modulus)._terms.items()))
        return (ev, od, odp)
    ev = tuple((e0, e1, c) for (e0, e1), c in sorted(value.even._terms.items()))
    od = tuple((e0, e1, c) for (e0, e1), c in sorted(value.odd._terms.items()))
    odp = tuple((e0, e1, c) for (e0, e1), c
                in sorted((value.odd * value.modulus)._terms.items()))
    return (ev, od, odp)


def _table16(op: LocalOperator, d: int, shift: int, kind: str) -> list:
    """Per pair-bit-pattern outputs of a local operator at a given position."""
    cols = op.columns()
    table: list[tuple] = [() for _ in range(16)]
    for pb in range(16):
        i = pb & 3
        j = pb >> 2
        if i >= d or j >= d:
            continue
        outs = []
        for row, value in cols.get(d * i + j, ()):
            i2, j2 = divmod(row, d)
            npb = i2 | (j2 << 2)
            outs.append(((npb - pb) << shift,) + _compile_value(kind, value))
        table[pb] = tuple(outs)
    return table


def compile_letter_tables(r: LocalOperator, rinv: LocalOperator, d: int,
                          strands: int, kind: str) -> dict[int, tuple[int, list]]:
    """letter -> (shift, 16-entry table) for every letter valid on n strands."""
    tables: dict[int, tuple[int, list]] = {}
    for k in range(1, strands):
        shift = 2 * (k - 1)
        tables[k] = (shift, _table16(r, d, shift, kind))
        tables[-k] = (shift, _table16(rinv, d, shift, kind))
    return tables


_BUILDERS = {
    "ado3": (build_ado3_r, build_ado3_r_inverse, build_ado3_h, "cyc", 3),
    "lg": (build_lg_r, build_lg_r_inverse, build_lg_h, "ext2", 4),
    "lg-spec": (build_lg_r_specialized, build_lg_r_inverse_specialized,
                build_lg_h_specialized, "ext1", 4),
}


@lru_cache(maxsize=None)
def _tables_for(invariant: str, strands: int) -> dict[int, tuple[int, list]]:
    build_r, build_rinv, _, kind, d = _BUILDERS[invariant]
    return compile_letter_tables(build_r(), build_rinv(), d, strands, kind)


@lru_cache(maxsize=None)
def _weight_monomials(invariant: str) -> list[tuple]:
    """The closure weight of each basis vector as a single compiled term."""
    _, _, build_h, kind, _ = _BUILDERS[invariant]
    return _compile_weights(build_h(), kind)


def _compile_weights(h: DiagonalOperator, kind: str) -> list[tuple]:
    out = []
    for v in h.values:
        compiled = _compile_value(kind, v)
        if kind != "cyc" and compiled[1]:
            raise ValueError("closure weights must be even")
        terms = compiled[0]
        if len(terms) != 1:
            raise ValueError("closure weights must be monomials")
        out.append(terms)
    return out


def _middle_weight(kind: str, mons: list[tuple], m: tuple[int, ...]) -> tuple:
    """Product of the weight monomials of a middle multi-index, as one term."""
    if kind in ("cyc", "ext1"):
        exp, a, b = 0, 1, 0
        for digit in m:
            ((te, ea, eb),) = mons[digit]
            exp += te
            a, b = a * ea - b * eb, a * eb + b * ea + b * eb
        return ((exp, a, b),)
    e0, e1, c = 0, 0, 1
    for digit in m:
        ((t0, t1, tc),) = mons[digit]
        e0 += t0
        e1 += t1
        c *= tc
    return ((e0, e1, c),)


def evolve_state(state: dict, word: Iterable[int],
                 tables: dict[int, tuple[int, list]], kernel: _Kernel) -> dict:
    """Apply braid letters in order to a raw sparse state."""
    for letter in word:
        shift, table = tables[letter]
        state = kernel.apply(state, shift, table)
    return state


def _pack(m: tuple[int, ...]) -> int:
    key = 0
    for pos, digit in enumerate(m):
        key |= digit << (2 * pos)
    return key


# --- public state-level API --------------------------------------------------

class StateVector:
    """Sparse vector in the n-fold tensor power of V, exact amplitudes."""

    __slots__ = ("strands", "dim", "kind", "_raw")

    def __init__(self, strands: int, dim: int, kind: str, raw: dict) -> None:
        self.strands = strands
        self.dim = dim
        self.kind = kind
        self._raw = raw

    @classmethod
    def basis(cls, strands: int, index: tuple[int, ...],
              invariant: str) -> "StateVector":
        _, _, _, kind, d = _BUILDERS[invariant]
        if len(index) != strands or any(not 0 <= i < d for i in index):
            raise ValueError(f"index {index} invalid for {strands} strands, dim {d}")
        return cls(strands, d, kind, {_pack(index): _KERNELS[kind].one()})

    def amplitudes(self) -> dict[tuple[int, ...], object]:
        """Unpacked {multi-index: ring element} view, zero amplitudes dropped."""
        kernel = _KERNELS[self.kind]
        out = {}
        for key, amp in self._raw.items():
            idx = tuple((key >> (2 * s)) & 3 for s in range(self.strands))
            value = kernel.wrap(amp)
            if value:
                out[idx] = value
        return out

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, StateVector)
                and self.strands == other.strands
                and self.kind == other.kind
                and self.amplitudes() == other.amplitudes())


def _kind_of_values(values) -> str:
    first = next((v for v in values if v), None)
    if isinstance(first, LaurentPoly1):
        return "cyc"
    if isinstance(first, ExtScalar):
        return "ext1" if isinstance(first.even, LaurentPoly1) else "ext2"
    raise TypeError(f"unsupported ring element {type(first).__name__}")


def apply_local(state: StateVector, op: LocalOperator, position: int) -> StateVector:
    """Apply a two-strand operator at strands (position, position + 1)."""
    if not 1 <= position < state.strands:
        raise ValueError(f"position {position} invalid for {state.strands} strands")
    kernel = _KERNELS[state.kind]
    shift = 2 * (position - 1)
    table = _table16(op, state.dim, shift, state.kind)
    raw = kernel.apply(state._raw, shift, table)
    return StateVector(state.strands, state.dim, state.kind, raw)


def braid_action(b: BraidWord, state: StateVector, r: LocalOperator,
                 rinv: LocalOperator) -> StateVector:
    """Push a state through a braid word (bottom-up; +k acts by r, -k by rinv)."""
    if b.strands != state.strands:
        raise ValueError("strand count mismatch")
    kernel = _KERNELS[state.kind]
    tables = compile_letter_tables(r, rinv, state.dim, b.strands, state.kind)
    raw = evolve_state(state._raw, b.word, tables, kernel)
    return StateVector(state.strands, state.dim, state.kind, raw)


# --- closure scalars ---------------------------------------------------------

def _trace_core(b: BraidWord, tables, kernel: _Kernel, d: int,
                mons: list[tuple], *, paranoid: bool, open_strand: str):
    """Shared partial-trace loop; returns the raw proportionality scalar."""
    n = b.strands
    open_shift = 0 if open_strand == "first" else 2 * (n - 1)
    mid_shift = 2 if open_strand == "first" else 0
    columns = range(d) if paranoid else (0,)
    totals = {(a, c): kernel.fresh_total() for a in range(d) for c in columns}
    for m in product(range(d), repeat=n - 1):
        wterms = _middle_weight(kernel.kind, mons, m)
        mkey = _pack(m) << mid_shift
        for c in columns:
            key0 = mkey | (c << open_shift)
            state = evolve_state({key0: kernel.one()}, b.word, tables, kernel)
            for a in range(d):
                amp = state.get(mkey | (a << open_shift))
                if amp:
                    kernel.acc_weighted(totals[(a, c)], amp, wterms)
    for (a, c), total in totals.items():
        if a != c and not kernel.total_is_zero(total):
            raise ProportionalityError(
                f"closure operator of {b} has a nonzero off-diagonal block "
                f"({a}, {c}): {kernel.wrap(total)}")
    scalar = kernel.wrap(totals[(0, 0)])
    if paranoid:
        for a in range(1, d):
            if kernel.wrap(totals[(a, a)]) != scalar:
                raise ProportionalityError(
                    f"closure operator of {b} is diagonal but not scalar "
                    f"(block {a} differs)")
    return scalar


def _closure_scalar(b: BraidWord, invariant: str, *, paranoid: bool = False,
                    open_strand: str = "first"):
    _, _, _, kind, d = _BUILDERS[invariant]
    return _trace_core(b, _tables_for(invariant, b.strands), _KERNELS[kind], d,
                       _weight_monomials(invariant), paranoid=paranoid,
                       open_strand=open_strand)


def partial_trace_scalar(b: BraidWord, r: LocalOperator, rinv: LocalOperator,
                         h: DiagonalOperator, *, paranoid: bool = False):
    """Weighted partial trace over strands 2..n of the braid representation.

    Generic-operator variant of the compute_* functions: compiles the given
    operators instead of the built-in ones and returns the proportionality
    scalar as a public ring element.
    """
    kind = _kind_of_values(h.values)
    kernel = _KERNELS[kind]
    tables = compile_letter_tables(r, rinv, h.dim, max(b.strands, 2), kind)
    mons = _compile_weights(h, kind)
    return _trace_core(b, tables, kernel, h.dim, mons, paranoid=paranoid,
                       open_strand="first")


def compute_ado3(b: BraidWord, *, paranoid: bool = False) -> InvariantValue:
    """Third colored Alexander invariant of the closure of b."""
    value = _closure_scalar(b, "ado3", paranoid=paranoid)
    return InvariantValue(braid=b, kind="ado3", value=value, paranoid=paranoid)


def compute_lg(b: BraidWord, *, paranoid: bool = False) -> InvariantValue:
    """Links-Gould invariant, generic two variables.

    The raw scalar lives in the Y-extension; for closures the odd part
    vanishes and the even part is the invariant.  A nonzero odd part would
    mean the trace is not the link invariant it is supposed to be, so it is a
    hard error, like the proportionality check.
    """
    scalar = _closure_scalar(b, "lg", paranoid=paranoid)
    if scalar.odd:
        raise ProportionalityError(
            f"Links-Gould scalar of {b} has a nonzero odd part: {scalar.odd}")
    return InvariantValue(braid=b, kind="lg", value=scalar.even, paranoid=paranoid)


def compute_lg_specialized(b: BraidWord, *, paranoid: bool = False) -> InvariantValue:
    """Links-Gould at t0 = t**2, t1 = w**2 t**-2, computed in one variable."""
    scalar = _closure_scalar(b, "lg-spec", paranoid=paranoid)
    if scalar.odd:
        raise ProportionalityError(
            f"specialized Links-Gould scalar of {b} has a nonzero odd part")
    return InvariantValue(braid=b, kind="lg-spec", value=scalar.even,
                          paranoid=paranoid)
