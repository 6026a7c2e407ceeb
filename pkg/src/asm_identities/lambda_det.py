"""The lambda-determinant, by condensation and by expansion over ASMs.

Both routes work at exact rational points.  Condensation only ever needs
contiguous square minors, so it is a dynamic program over
``(top row, left column, size)``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .arith import distinct_rationals, rand_rational
from .asm import all_asms, count_neg_ones, inversion_number
from .errors import OrderTooLarge, ResampleExhausted, ZeroCentralMinor, ZeroEntry
from .report import CheckReport
from .tournaments import product_side

RESAMPLE_BUDGET = 100

PROBLEM1_NOTE = (
    "checked in cleared form S(M)*S(central) = S(TL)*S(BR) + lam*S(TR)*S(BL) with S the ASM-sum "
    "lambda-determinant; the lam term pairs the top-right and bottom-left corner minors"
)


def as_rat_matrix(M: Sequence[Sequence]) -> tuple:
    rows = tuple(tuple(Fraction(x) for x in row) for row in M)
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return rows


def minor(M: Sequence[Sequence], top: int, left: int, size: int) -> tuple:
    """Contiguous ``size x size`` submatrix starting at ``(top, left)``."""
    n = len(M)
    if top < 0 or left < 0 or top + size > n or left + size > n:
        raise IndexError(f"minor ({top}, {left}, {size}) outside a {n}x{n} matrix")
    return tuple(tuple(M[top + i][left:left + size]) for i in range(size))


def condense_table(M: Sequence[Sequence], lam) -> dict:
    """All contiguous-minor lambda-determinants, keyed by ``(top, left, size)``.

    Size-0 minors are implicitly 1 and not stored.
    """
    M = as_rat_matrix(M)
    lam = Fraction(lam)
    n = len(M)
    D = {}
    for i in range(n):
        for j in range(n):
            D[i, j, 1] = M[i][j]
    for s in range(2, n + 1):
        for i in range(n - s + 1):
            for j in range(n - s + 1):
                central = D[i + 1, j + 1, s - 2] if s > 2 else 1
                if central == 0:
                    raise ZeroCentralMinor(f"minor ({i + 1}, {j + 1}, {s - 2}) vanishes")
                top_left, bottom_right = D[i, j, s - 1], D[i + 1, j + 1, s - 1]
                top_right, bottom_left = D[i, j + 1, s - 1], D[i + 1, j, s - 1]
                D[i, j, s] = (top_left * bottom_right + lam * top_right * bottom_left) / central
    return D


def lambda_det_condense(M: Sequence[Sequence], lam) -> Fraction:
    n = len(M)
    if n == 0:
        return Fraction(1)
    return condense_table(M, lam)[0, 0, n]


@lru_cache(maxsize=8)
def _asm_terms(n: int) -> tuple:
    """Per ASM: (lam exponent I - N, N, positions of +1, positions of -1)."""
    out = []
    for A in all_asms(n):
        pos = tuple((i, j) for i in range(n) for j in range(n) if A.rows[i][j] == 1)
        neg = tuple((i, j) for i in range(n) for j in range(n) if A.rows[i][j] == -1)
        out.append((inversion_number(A) - count_neg_ones(A), len(neg), pos, neg))
    return tuple(out)


def lambda_det_asm_sum(M: Sequence[Sequence], lam) -> Fraction:
    """``sum_A lam^(I-N) (1+lam)^N prod m_ij^a_ij`` over all ASMs of order n."""
    M = as_rat_matrix(M)
    lam = Fraction(lam)
    n = len(M)
    if n == 0:
        return Fraction(1)
    terms = _asm_terms(n)
    for _, _, _, neg in terms:
        for i, j in neg:
            if M[i][j] == 0:
                raise ZeroEntry(f"entry ({i}, {j}) is zero but appears with exponent -1")
    lam_pow, one_pow = {}, {}
    total = Fraction(0)
    for e, k, pos, neg in terms:
        if e not in lam_pow:
            lam_pow[e] = lam ** e
        if k not in one_pow:
            one_pow[k] = (1 + lam) ** k
        w = lam_pow[e] * one_pow[k]
        if not w:
            continue
        for i, j in pos:
            w *= M[i][j]
        for i, j in neg:
            w /= M[i][j]
        total += w
    return total


# identity checks

def vandermonde_like(xs: Sequence) -> tuple:
    """Matrix ``(x_i^(n-j))`` with 1-based ``j``, i.e. descending powers."""
    n = len(xs)
    return tuple(tuple(Fraction(x) ** (n - 1 - j) for j in range(n)) for x in xs)


def _random_nonzero_matrix(rng: random.Random, n: int) -> tuple:
    return tuple(tuple(rand_rational(rng, reject=lambda v: v == 0) for _ in range(n)) for _ in range(n))


def check_prop1(n: int, trials: int = 10, seed: int = 0) -> CheckReport:
    """Condensation of ``(x_i^(n-j))`` against the expanded product of ``x_i + lam x_j``."""
    if not 1 <= n <= 7:
        raise OrderTooLarge(f"check_prop1 supports 1 <= n <= 7, got {n}")
    rng = random.Random(seed)
    prod = product_side(n)
    witnesses, resamples = [], 0
    for t in range(trials):
        for _ in range(RESAMPLE_BUDGET):
            xs = distinct_rationals(rng, n)
            lam = rand_rational(rng)
            try:
                lhs = lambda_det_condense(vandermonde_like(xs), lam)
                break
            except ZeroCentralMinor:
                resamples += 1
        else:
            raise ResampleExhausted("could not find a point with nonzero central minors")
        point = {"lam": lam, **{f"x{i + 1}": x for i, x in enumerate(xs)}}
        rhs = prod.evaluate(point)
        if lhs != rhs:
            witnesses.append({"trial": t, "point": point, "condensation": lhs, "product": rhs})
    return CheckReport("prop1", n, not witnesses, trials, seed, witnesses, details={"resamples": resamples})


def check_prop2(n: int, trials: int = 10, seed: int = 0) -> CheckReport:
    """Condensation against the ASM expansion at random nonzero-entry matrices."""
    if not 1 <= n <= 6:
        raise OrderTooLarge(f"check_prop2 supports 1 <= n <= 6, got {n}")
    rng = random.Random(seed)
    witnesses, resamples = [], 0
    for t in range(trials):
        for _ in range(RESAMPLE_BUDGET):
            M = _random_nonzero_matrix(rng, n)
            lam = rand_rational(rng)
            try:
                cond = lambda_det_condense(M, lam)
                break
            except ZeroCentralMinor:
                resamples += 1
        else:
            raise ResampleExhausted("could not find a matrix with nonzero central minors")
        expansion = lambda_det_asm_sum(M, lam)
        if cond != expansion:
            witnesses.append({"trial": t, "matrix": M, "lam": lam, "condensation": cond, "asm_sum": expansion})
    return CheckReport("prop2", n, not witnesses, trials, seed, witnesses, details={"resamples": resamples})


def problem1_sides(M: Sequence[Sequence], lam) -> tuple[Fraction, Fraction]:
    """Both sides of the cleared condensation identity, every factor an ASM sum."""
    M = as_rat_matrix(M)
    n = len(M)
    S = lambda top, left, size: lambda_det_asm_sum(minor(M, top, left, size), lam)
    lhs = S(0, 0, n) * S(1, 1, n - 2)
    rhs = S(1, 1, n - 1) * S(0, 0, n - 1) + Fraction(lam) * S(1, 0, n - 1) * S(0, 1, n - 1)
    return lhs, rhs


def check_problem1(n: int, trials: int = 10, seed: int = 0) -> CheckReport:
    if n < 3:
        raise ValueError(f"check_problem1 needs n >= 3, got {n}")
    if n > 6:
        raise OrderTooLarge(f"check_problem1 supports n <= 6, got {n}")
    rng = random.Random(seed)
    witnesses = []
    for t in range(trials):
        M = _random_nonzero_matrix(rng, n)
        lam = rand_rational(rng)
        lhs, rhs = problem1_sides(M, lam)
        if lhs != rhs:
            witnesses.append({"trial": t, "matrix": M, "lam": lam, "lhs": lhs, "rhs": rhs})
    return CheckReport("problem1", n, not witnesses, trials, seed, witnesses, notes=PROBLEM1_NOTE)
