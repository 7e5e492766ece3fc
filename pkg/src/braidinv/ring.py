"""Exact arithmetic over the third cyclotomic integers and their Laurent rings.

Every value in this package is exact.  The base scalar ring is Z[w] where
w = exp(i*pi/3) is a primitive sixth root of unity, represented as integer
pairs (a, b) meaning a + b*w and reduced with the single relation

    w**2 = w - 1.

Useful consequences: w**3 = -1, w**-1 = 1 - w, and (2w - 1)**2 = -3, so
2w - 1 plays the role of i*sqrt(3).  The field norm N(a + b*w) = a**2 + a*b
+ b**2 is multiplicative; the units are exactly the six elements of norm one,
{1, w, w - 1, -1, -w, 1 - w} = {w**k : 0 <= k < 6}.

On top of the scalars live three polynomial-flavoured types:

* ``LaurentPoly1``  -- Laurent polynomials in one variable t with CycScalar
  coefficients (the value ring of the colored Alexander invariant).
* ``LaurentPoly2``  -- integer Laurent polynomials in two variables s0, s1,
  where the geometrically meaningful variables are t0 = s0**2, t1 = s1**2;
  "is a polynomial in t0, t1" means every exponent pair is even.
* ``ExtScalar``     -- elements e + o*Y of a rank-2 extension with Y**2 = p
  for a fixed modulus polynomial p (the square-root scalar the two-variable
  R-matrix needs).

``specialize`` maps the two-variable world onto the one-variable world by
t0 = t**2, t1 = w**2 * t**-2, realized on the square roots as s0 -> t and
s1 -> w * t**-1.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Iterator, Mapping, Union


# powers of w as (a, b) pairs, index mod 6
_OMEGA_POWERS = (
    (1, 0),    # w^0
    (0, 1),    # w^1
    (-1, 1),   # w^2 = w - 1
    (-1, 0),   # w^3 = -1
    (0, -1),   # w^4
    (1, -1),   # w^5 = 1 - w
)


class CycScalar:
    """An element a + b*w of Z[w], w = exp(i*pi/3), reduced via w**2 = w - 1."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0) -> None:
        self.a = a
        self.b = b

    @classmethod
    def zero(cls) -> "CycScalar":
        return cls(0, 0)

    @classmethod
    def one(cls) -> "CycScalar":
        return cls(1, 0)

    @classmethod
    def omega(cls) -> "CycScalar":
        return cls(0, 1)

    @classmethod
    def omega_power(cls, k: int) -> "CycScalar":
        return cls(*_OMEGA_POWERS[k % 6])

    def __add__(self, other: "CycScalar") -> "CycScalar":
        return CycScalar(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "CycScalar") -> "CycScalar":
        return CycScalar(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "CycScalar":
        return CycScalar(-self.a, -self.b)

    def __mul__(self, other: Union["CycScalar", int]) -> "CycScalar":
        if isinstance(other, int):
            return CycScalar(self.a * other, self.b * other)
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        # (a1 + b1 w)(a2 + b2 w), then w^2 -> w - 1
        return CycScalar(a1 * a2 - b1 * b2, a1 * b2 + b1 * a2 + b1 * b2)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycScalar":
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = CycScalar(1, 0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CycScalar)
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def norm(self) -> int:
        """Field norm a**2 + a*b + b**2; multiplicative and >= 0."""
        return self.a * self.a + self.a * self.b + self.b * self.b

    def is_unit(self) -> bool:
        return self.norm() == 1

    def galois_conjugate(self) -> "CycScalar":
        """The nontrivial automorphism w -> 1 - w (complex conjugation)."""
        return CycScalar(self.a + self.b, -self.b)

    def unit_inverse(self) -> "CycScalar":
        """Inverse of a unit.  x * sigma(x) = N(x) = 1, so x**-1 = sigma(x)."""
        if not self.is_unit():
            raise ZeroDivisionError(f"{self!r} is not a unit of Z[w]")
        return self.galois_conjugate()

    def exact_div(self, other: "CycScalar") -> "CycScalar":
        """Exact division in Z[w]; raises if the quotient is not integral."""
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[w]")
        num = self * other.galois_conjugate()
        qa, ra = divmod(num.a, n)
        qb, rb = divmod(num.b, n)
        if ra or rb:
            raise ValueError(f"{self!r} is not divisible by {other!r}")
        return CycScalar(qa, qb)

    def to_complex(self) -> complex:
        """Floating-point embedding with w = (1 + i*sqrt(3))/2 (diagnostic)."""
        return self.a + self.b * complex(0.5, math.sqrt(3.0) / 2.0)

    def __str__(self) -> str:
        return _coeff_str(self.a, self.b)

    def __repr__(self) -> str:
        return f"CycScalar({self.a}, {self.b})"


def _coeff_str(a: int, b: int) -> str:
    """Canonical rendering of a + b*w with zero parts elided; '0' if both zero."""
    if a == 0 and b == 0:
        return "0"
    if b == 0:
        return str(a)
    if a == 0:
        return f"{b}*w"
    return f"{a}{b:+d}*w"


_COEFF_RE = re.compile(r"^(-?\d+)?(?:(?:(?<=\d)([+-]\d+)|(-?\d+))\*w)?$")


def _parse_coeff(body: str) -> tuple[int, int]:
    m = _COEFF_RE.match(body)
    if not m or (m.group(1) is None and m.group(3) is None):
        raise ValueError(f"malformed coefficient {body!r}")
    a = int(m.group(1)) if m.group(1) is not None else 0
    btxt = m.group(2) if m.group(2) is not None else m.group(3)
    b = int(btxt) if btxt is not None else 0
    return a, b


CoeffLike = Union[CycScalar, int, tuple]


def _coeff_pair(c: CoeffLike) -> tuple[int, int]:
    if isinstance(c, CycScalar):
        return (c.a, c.b)
    if isinstance(c, int):
        return (c, 0)
    return (int(c[0]), int(c[1]))


class LaurentPoly1:
    """Laurent polynomial in t over Z[w], as a sparse exponent -> (a, b) map."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, CoeffLike] | None = None) -> None:
        clean: dict[int, tuple[int, int]] = {}
        if terms:
            for k, c in terms.items():
                a, b = _coeff_pair(c)
                if a or b:
                    clean[k] = (a, b)
        self._terms = clean

    @classmethod
    def zero(cls) -> "LaurentPoly1":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly1":
        return cls({0: (1, 0)})

    @classmethod
    def constant(cls, c: CoeffLike) -> "LaurentPoly1":
        return cls({0: c})

    @classmethod
    def t_power(cls, k: int, c: CoeffLike = 1) -> "LaurentPoly1":
        return cls({k: c})

    def coeff(self, k: int) -> CycScalar:
        a, b = self._terms.get(k, (0, 0))
        return CycScalar(a, b)

    def items(self) -> Iterator[tuple[int, CycScalar]]:
        for k in sorted(self._terms):
            a, b = self._terms[k]
            yield k, CycScalar(a, b)

    def exponents(self) -> list[int]:
        return sorted(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly1) and self._terms == other._terms

    def __add__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        out = dict(self._terms)
        for k, (a, b) in other._terms.items():
            cur = out.get(k)
            if cur is None:
                out[k] = (a, b)
            else:
                na, nb = cur[0] + a, cur[1] + b
                if na or nb:
                    out[k] = (na, nb)
                else:
                    del out[k]
        res = LaurentPoly1.__new__(LaurentPoly1)
        res._terms = out
        return res

    def __neg__(self) -> "LaurentPoly1":
        res = LaurentPoly1.__new__(LaurentPoly1)
        res._terms = {k: (-a, -b) for k, (a, b) in self._terms.items()}
        return res

    def __sub__(self, other: "LaurentPoly1") -> "LaurentPoly1":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly1", CycScalar, int]) -> "LaurentPoly1":
        if isinstance(other, (CycScalar, int)):
            oa, ob = _coeff_pair(other)
            out: dict[int, tuple[int, int]] = {}
            for k, (a, b) in self._terms.items():
                na = a * oa - b * ob
                nb = a * ob + b * oa + b * ob
                if na or nb:
                    out[k] = (na, nb)
            res = LaurentPoly1.__new__(LaurentPoly1)
            res._terms = out
            return res
        out = {}
        for k1, (a1, b1) in self._terms.items():
            for k2, (a2, b2) in other._terms.items():
                k = k1 + k2
                na = a1 * a2 - b1 * b2
                nb = a1 * b2 + b1 * a2 + b1 * b2
                cur = out.get(k)
                if cur is None:
                    out[k] = (na, nb)
                else:
                    out[k] = (cur[0] + na, cur[1] + nb)
        res = LaurentPoly1.__new__(LaurentPoly1)
        res._terms = {k: c for k, c in out.items() if c[0] or c[1]}
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly1":
        if n < 0:
            return self.unit_monomial_inverse() ** (-n)
        result = LaurentPoly1.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def is_unit_monomial(self) -> bool:
        """True iff the polynomial is u * t**k with u a unit of Z[w]."""
        if len(self._terms) != 1:
            return False
        ((_, (a, b)),) = self._terms.items()
        return CycScalar(a, b).is_unit()

    def unit_monomial_inverse(self) -> "LaurentPoly1":
        """Inverse of u * t**k; only unit monomials are invertible here."""
        if not self.is_unit_monomial():
            raise ZeroDivisionError(f"{self} is not a unit monomial")
        ((k, (a, b)),) = self._terms.items()
        inv = CycScalar(a, b).unit_inverse()
        return LaurentPoly1({-k: inv})

    def evaluate(self, value: CycScalar) -> CycScalar:
        """Evaluate at t = value; value must be a unit if negative powers occur."""
        total = CycScalar.zero()
        for k, c in self.items():
            total = total + c * (value ** k)
        return total

    def substitute_unit_over_t(self, unit: CycScalar) -> "LaurentPoly1":
        """Substitute t -> unit * t**-1 (used for the palindromic symmetry)."""
        out: dict[int, tuple[int, int]] = {}
        for k, (a, b) in self._terms.items():
            c = CycScalar(a, b) * (unit ** k)
            if c:
                out[-k] = (c.a, c.b)
        return LaurentPoly1(out)

    def to_complex(self, t: complex) -> complex:
        """Float evaluation (diagnostic only)."""
        return sum(CycScalar(a, b).to_complex() * t ** k
                   for k, (a, b) in self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "(0)"
        parts = []
        for k in sorted(self._terms):
            a, b = self._terms[k]
            body = f"({_coeff_str(a, b)})"
            parts.append(body if k == 0 else f"{body}*t^{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly1({self._terms!r})"


_TERM_RE = re.compile(r"^\(([^()]*)\)(?:\*t\^(-?\d+))?$")


def parse_poly(text: str) -> LaurentPoly1:
    """Parse the canonical one-variable format produced by ``str``.

    Grammar: terms joined by " + ", each "(a+b*w)*t^k" with zero parts of the
    coefficient elided and "*t^0" elided; the zero polynomial is "(0)".
    """
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    terms: dict[int, tuple[int, int]] = {}
    for pos, piece in enumerate(text.split(" + ")):
        m = _TERM_RE.match(piece.strip())
        if not m:
            raise ValueError(f"malformed term {piece!r} (term {pos + 1})")
        a, b = _parse_coeff(m.group(1))
        k = int(m.group(2)) if m.group(2) is not None else 0
        if k in terms:
            raise ValueError(f"duplicate exponent t^{k} (term {pos + 1})")
        if a or b:
            terms[k] = (a, b)
    return LaurentPoly1(terms)


class LaurentPoly2:
    """Integer Laurent polynomial in s0, s1; t0 = s0**2 and t1 = s1**2."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None) -> None:
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for key, c in terms.items():
                if c:
                    clean[(int(key[0]), int(key[1]))] = int(c)
        self._terms = clean

    @classmethod
    def zero(cls) -> "LaurentPoly2":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, e0: int, e1: int, c: int = 1) -> "LaurentPoly2":
        return cls({(e0, e1): c})

    def coeff(self, e0: int, e1: int) -> int:
        return self._terms.get((e0, e1), 0)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        for key in sorted(self._terms):
            yield key, self._terms[key]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentPoly2) and self._terms == other._terms

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        out = dict(self._terms)
        for key, c in other._terms.items():
            n = out.get(key, 0) + c
            if n:
                out[key] = n
            else:
                out.pop(key, None)
        res = LaurentPoly2.__new__(LaurentPoly2)
        res._terms = out
        return res

    def __neg__(self) -> "LaurentPoly2":
        res = LaurentPoly2.__new__(LaurentPoly2)
        res._terms = {key: -c for key, c in self._terms.items()}
        return res

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly2", int]) -> "LaurentPoly2":
        if isinstance(other, int):
            res = LaurentPoly2.__new__(LaurentPoly2)
            res._terms = ({} if other == 0 else
                          {key: c * other for key, c in self._terms.items()})
            return res
        out: dict[tuple[int, int], int] = {}
        for (x1, y1), c1 in self._terms.items():
            for (x2, y2), c2 in other._terms.items():
                key = (x1 + x2, y1 + y2)
                out[key] = out.get(key, 0) + c1 * c2
        res = LaurentPoly2.__new__(LaurentPoly2)
        res._terms = {key: c for key, c in out.items() if c}
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            raise ValueError("negative powers unsupported for LaurentPoly2")
        result = LaurentPoly2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_polynomial_in_squares(self) -> bool:
        """True iff every exponent pair is even, i.e. a true t0/t1 polynomial."""
        return all(e0 % 2 == 0 and e1 % 2 == 0 for e0, e1 in self._terms)

    def is_unit_monomial(self) -> bool:
        """True iff the polynomial is ±1 times a single monomial."""
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return c in (1, -1)

    def unit_monomial_inverse(self) -> "LaurentPoly2":
        if not self.is_unit_monomial():
            raise ZeroDivisionError(f"{self} is not a unit monomial")
        (((e0, e1), c),) = self._terms.items()
        return LaurentPoly2({(-e0, -e1): c})

    def __str__(self) -> str:
        if not self._terms:
            return "(0)"
        parts = []
        for (e0, e1) in sorted(self._terms):
            c = self._terms[(e0, e1)]
            body = f"({c})"
            if e0:
                body += f"*s0^{e0}"
            if e1:
                body += f"*s1^{e1}"
            parts.append(body)
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly2({self._terms!r})"


class ExtScalar:
    """Element even + odd*Y of a rank-2 extension with Y**2 = modulus.

    The even/odd components and the modulus live in a common coefficient ring
    (LaurentPoly2 for the generic two-variable scalars, LaurentPoly1 after
    specialization).  Arithmetic requires equal moduli.
    """

    __slots__ = ("even", "odd", "modulus")

    def __init__(self, even, odd, modulus) -> None:
        self.even = even
        self.odd = odd
        self.modulus = modulus

    def _check(self, other: "ExtScalar") -> None:
        if self.modulus is not other.modulus and self.modulus != other.modulus:
            raise ValueError("ExtScalar arithmetic across different moduli")

    def __add__(self, other: "ExtScalar") -> "ExtScalar":
        self._check(other)
        return ExtScalar(self.even + other.even, self.odd + other.odd, self.modulus)

    def __sub__(self, other: "ExtScalar") -> "ExtScalar":
        self._check(other)
        return ExtScalar(self.even - other.even, self.odd - other.odd, self.modulus)

    def __neg__(self) -> "ExtScalar":
        return ExtScalar(-self.even, -self.odd, self.modulus)

    def __mul__(self, other: "ExtScalar") -> "ExtScalar":
        self._check(other)
        e1, o1, e2, o2 = self.even, self.odd, other.even, other.odd
        return ExtScalar(e1 * e2 + (o1 * o2) * self.modulus,
                         e1 * o2 + o1 * e2, self.modulus)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ExtScalar)
                and self.even == other.even
                and self.odd == other.odd
                and self.modulus == other.modulus)

    def __bool__(self) -> bool:
        return bool(self.even) or bool(self.odd)

    def is_even(self) -> bool:
        return not self.odd

    def y_conjugate(self) -> "ExtScalar":
        """The automorphism Y -> -Y; invariant values must be fixed by it."""
        return ExtScalar(self.even, -self.odd, self.modulus)

    def __str__(self) -> str:
        if not self.odd:
            return str(self.even)
        return f"{self.even} + Y*[{self.odd}]"

    def __repr__(self) -> str:
        return f"ExtScalar({self.even!r}, {self.odd!r})"


# Y**2 for the generic two-variable extension: (t0 - 1)(1 - t1) expanded in s.
GENERIC_MODULUS = LaurentPoly2(
    {(2, 0): 1, (2, 2): -1, (0, 0): -1, (0, 2): 1}
)

# Its image under t0 = t**2, t1 = w**2 t**-2: t**2 - w + (w - 1) t**-2.
SPECIALIZED_MODULUS = LaurentPoly1({2: (1, 0), 0: (0, -1), -2: (-1, 1)})


def ext_generic(even: LaurentPoly2 | None = None,
                odd: LaurentPoly2 | None = None) -> ExtScalar:
    return ExtScalar(even if even is not None else LaurentPoly2.zero(),
                     odd if odd is not None else LaurentPoly2.zero(),
                     GENERIC_MODULUS)


def ext_specialized(even: LaurentPoly1 | None = None,
                    odd: LaurentPoly1 | None = None) -> ExtScalar:
    return ExtScalar(even if even is not None else LaurentPoly1.zero(),
                     odd if odd is not None else LaurentPoly1.zero(),
                     SPECIALIZED_MODULUS)


def specialize_poly2(p: LaurentPoly2) -> LaurentPoly1:
    """Substitute s0 -> t, s1 -> w * t**-1 (so t0 -> t**2, t1 -> w**2 t**-2)."""
    terms: dict[int, tuple[int, int]] = {}
    for (e0, e1), c in p._terms.items():
        wa, wb = _OMEGA_POWERS[e1 % 6]
        k = e0 - e1
        cur = terms.get(k)
        na, nb = c * wa, c * wb
        if cur is not None:
            na, nb = cur[0] + na, cur[1] + nb
        if na or nb:
            terms[k] = (na, nb)
        elif cur is not None:
            del terms[k]
    return LaurentPoly1(terms)


def specialize(x: Union[LaurentPoly2, ExtScalar]) -> Union[LaurentPoly1, ExtScalar]:
    """Apply t0 = t**2, t1 = w**2 t**-2 to a two-variable value."""
    if isinstance(x, LaurentPoly2):
        return specialize_poly2(x)
    if isinstance(x, ExtScalar):
        if not isinstance(x.even, LaurentPoly2):
            raise TypeError("ExtScalar is already specialized")
        return ExtScalar(specialize_poly2(x.even), specialize_poly2(x.odd),
                         SPECIALIZED_MODULUS)
    raise TypeError(f"cannot specialize {type(x).__name__}")


def cyc_units() -> Iterable[CycScalar]:
    """The six units of Z[w]: w**k for k = 0..5 (w**3 = -1 covers the signs)."""
    for k in range(6):
        yield CycScalar.omega_power(k)
