"""Shared fixtures and random generators for the test suite."""

from __future__ import annotations

import random

from braidinv.braid import BraidWord
from braidinv.ring import CycScalar, LaurentPoly1, LaurentPoly2

# i*sqrt(3) = 2w - 1, since w = (1 + i*sqrt(3))/2
ISQRT3 = CycScalar(-1, 2)


def half(x: CycScalar) -> CycScalar:
    return x.exact_div(CycScalar(2, 0))


def printed_ado_entries() -> dict[tuple[int, int], LaurentPoly1]:
    """The published 9x9 colored Alexander R-matrix, transcribed verbatim.

    Basis order v0 x v0, v0 x v1, v0 x v2, v1 x v0, ..., v2 x v2; positions
    not listed are zero.  Fractions with denominator 2 are exact in Z[w]
    (i*sqrt(3) = 2w - 1 makes every numerator even).
    """
    one = CycScalar.one()
    t = LaurentPoly1.t_power
    # (2t^2 - i*sqrt(3) + 1) / (2 t^2)
    a = LaurentPoly1({0: one, -2: half(one - ISQRT3)})
    t2_minus_1 = LaurentPoly1({2: one, 0: -one})
    return {
        (0, 0): t(2),
        (1, 1): t2_minus_1,
        (1, 3): t(1),
        (2, 2): t2_minus_1 * a,
        (2, 4): LaurentPoly1({1: one, -1: -one}),
        (2, 6): LaurentPoly1.one(),
        (3, 1): t(1),
        (4, 2): LaurentPoly1({-1: one, 1: half(one + ISQRT3)}),
        (4, 4): LaurentPoly1.constant(half(ISQRT3 - one)),
        (5, 5): -a,
        (5, 7): LaurentPoly1({-1: -half(one + ISQRT3)}),
        (6, 2): LaurentPoly1.one(),
        (7, 5): LaurentPoly1({-1: -half(one + ISQRT3)}),
        (8, 8): LaurentPoly1({-2: half(ISQRT3 - one)}),
    }


def random_cyc(rng: random.Random, bound: int = 9) -> CycScalar:
    return CycScalar(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_poly1(rng: random.Random, max_terms: int = 5,
                 exp_range: int = 5) -> LaurentPoly1:
    return LaurentPoly1({rng.randint(-exp_range, exp_range): random_cyc(rng)
                         for _ in range(rng.randint(0, max_terms))})


def random_poly2(rng: random.Random, max_terms: int = 4,
                 exp_range: int = 3) -> LaurentPoly2:
    return LaurentPoly2({(rng.randint(-exp_range, exp_range),
                          rng.randint(-exp_range, exp_range)):
                         rng.randint(-9, 9)
                         for _ in range(rng.randint(0, max_terms))})


def random_braid(rng: random.Random, max_strands: int = 5,
                 max_len: int = 12, min_strands: int = 1) -> BraidWord:
    """Random braid with a bias toward fewer strands (cheap to evaluate)."""
    choices = [n for n in range(min_strands, max_strands + 1)
               for _ in range(max_strands + 1 - n)]
    n = rng.choice(choices)
    if n == 1:
        return BraidWord(1, ())
    length = rng.randint(0, max_len)
    word = tuple(rng.choice((1, -1)) * rng.randint(1, n - 1)
                 for _ in range(length))
    return BraidWord(n, word)
