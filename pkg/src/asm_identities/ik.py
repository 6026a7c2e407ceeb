"""Izergin-Korepin determinant and its specializations.

The determinant identities (IK, Cauchy, Borchardt) divide by Vandermonde
products, so they are checked at exact random points.  The ``a = -1``
identity is division-free and is checked as a polynomial identity in
``x1..xn, y1..yn``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Optional, Sequence

from .arith import LaurentPoly, PolyRing, distinct_rationals, interpolate, rand_rational
from .asm import VertexKind, all_stats, enumerate_asms, sum_over_asms
from .errors import DegeneratePoint, OrderTooLarge, ResampleExhausted
from .report import CheckReport

MAX_PERMANENT_N = 8
MAX_IK_RHS_N = 6
MAX_EQ11_N = 5


# plain linear algebra over Q

def classical_det(M: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in M]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                row, top = a[r], a[col]
                for c in range(col + 1, n):
                    row[c] -= f * top[c]
    return det


def permanent(M: Sequence[Sequence], method: Optional[str] = None) -> Fraction:
    """Exact permanent.

    ``method`` is ``"direct"`` (sum over permutations) or ``"ryser"``
    (inclusion-exclusion over column subsets); by default direct is used
    up to n = 6 and Ryser above.
    """
    a = [[Fraction(x) for x in row] for row in M]
    n = len(a)
    if n > MAX_PERMANENT_N:
        raise OrderTooLarge(f"permanent is limited to n <= {MAX_PERMANENT_N}")
    if method is None:
        method = "direct" if n <= 6 else "ryser"
    if method == "direct":
        return sum((prod((a[i][s[i]] for i in range(n)), start=Fraction(1))
                    for s in itertools.permutations(range(n))), Fraction(0))
    if method == "ryser":
        total = Fraction(0)
        for mask in range(1, 1 << n):
            cols = [j for j in range(n) if mask >> j & 1]
            term = Fraction(1)
            for i in range(n):
                term *= sum((a[i][j] for j in cols), Fraction(0))
                if not term:
                    break
            total += -term if (n - len(cols)) % 2 else term
        return total
    raise ValueError(f"unknown method {method!r}")


# sample points

@dataclass(frozen=True)
class IkPoint:
    a: Fraction
    xs: tuple
    ys: tuple

    @property
    def n(self) -> int:
        return len(self.xs)

    def validate(self) -> "IkPoint":
        if len(self.xs) != len(self.ys):
            raise DegeneratePoint("xs and ys differ in length")
        if len(set(self.xs)) != len(self.xs) or len(set(self.ys)) != len(self.ys):
            raise DegeneratePoint("coordinates must be pairwise distinct")
        for x in self.xs:
            for y in self.ys:
                if x + y == 0 or self.a * x + y == 0:
                    raise DegeneratePoint(f"x={x}, y={y} makes a denominator vanish (a={self.a})")
        return self

    def swap_x(self, i: int) -> "IkPoint":
        xs = list(self.xs)
        xs[i], xs[i + 1] = xs[i + 1], xs[i]
        return IkPoint(self.a, tuple(xs), self.ys)

    def swap_y(self, j: int) -> "IkPoint":
        ys = list(self.ys)
        ys[j], ys[j + 1] = ys[j + 1], ys[j]
        return IkPoint(self.a, self.xs, tuple(ys))

    def with_a(self, a) -> "IkPoint":
        return IkPoint(Fraction(a), self.xs, self.ys).validate()


def make_point(a, xs, ys) -> IkPoint:
    return IkPoint(Fraction(a), tuple(map(Fraction, xs)), tuple(map(Fraction, ys))).validate()


def sample_point(rng: random.Random, n: int, a=None) -> IkPoint:
    """Random non-degenerate point; ``a`` is drawn too unless given."""
    a = rand_rational(rng) if a is None else Fraction(a)
    xs = distinct_rationals(rng, n)
    ys = distinct_rationals(rng, n, reject=lambda y: any(x + y == 0 or a * x + y == 0 for x in xs))
    return IkPoint(a, tuple(xs), tuple(ys)).validate()


def _vandermonde(p: IkPoint) -> Fraction:
    n = p.n
    return prod(((p.xs[i] - p.xs[j]) * (p.ys[i] - p.ys[j]) for i in range(n) for j in range(i + 1, n)),
                start=Fraction(1))


# Izergin-Korepin

def ik_lhs(p: IkPoint) -> Fraction:
    """``det(1/((x_i+y_j)(a x_i+y_j))) * prod (x_i+y_j)(a x_i+y_j) / prod_{i<j} (x_i-x_j)(y_i-y_j)``."""
    p.validate()
    pairs = [[(x + y) * (p.a * x + y) for y in p.ys] for x in p.xs]
    det = classical_det([[1 / v for v in row] for row in pairs])
    return det * prod((v for row in pairs for v in row), start=Fraction(1)) / _vandermonde(p)


@lru_cache(maxsize=8)
def _ik_table(n: int) -> tuple:
    """Per ASM: (N, C(n,2) - I, V cells, NE/SW cells, NW/SE cells)."""
    half = comb(n, 2)
    out = []
    for _, st in all_stats(n):
        cells = {k: [] for k in VertexKind}
        for i, row in enumerate(st.kinds.kinds):
            for j, k in enumerate(row):
                cells[k].append((i, j))
        out.append((
            st.neg_ones,
            half - st.inversion,
            tuple(cells[VertexKind.V]),
            tuple(cells[VertexKind.NE] + cells[VertexKind.SW]),
            tuple(cells[VertexKind.NW] + cells[VertexKind.SE]),
        ))
    return tuple(out)


def ik_rhs(p: IkPoint) -> Fraction:
    """Weighted sum over ASMs:
    ``(-1)^N (1-a)^(2N) a^(C(n,2)-I) prod_V x_i y_j prod_{NE,SW} (a x_i+y_j) prod_{NW,SE} (x_i+y_j)``.
    """
    p.validate()
    n = p.n
    if n > MAX_IK_RHS_N:
        raise OrderTooLarge(f"ik_rhs is limited to n <= {MAX_IK_RHS_N}")
    a, xs, ys = p.a, p.xs, p.ys
    tilted = [[a * x + y for y in ys] for x in xs]
    plain = [[x + y for y in ys] for x in xs]
    total = Fraction(0)
    for neg, apow, vcells, tilted_cells, plain_cells in _ik_table(n):
        w = (-1) ** neg * (1 - a) ** (2 * neg) * a ** apow
        if not w:
            continue
        for i, j in vcells:
            w *= xs[i] * ys[j]
        for i, j in tilted_cells:
            w *= tilted[i][j]
        for i, j in plain_cells:
            w *= plain[i][j]
        total += w
    return total


def _guard(n: int, limit: int, what: str):
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > limit:
        raise OrderTooLarge(f"{what} is limited to n <= {limit}, got n = {n}")


def check_ik(n: int, trials: int = 10, seed: int = 0, a=None) -> CheckReport:
    """Determinant side against the ASM sum at random points (``a`` random unless fixed)."""
    _guard(n, 5, "check_ik")
    rng = random.Random(seed)
    witnesses = []
    for t in range(trials):
        p = sample_point(rng, n, a)
        lhs, rhs = ik_lhs(p), ik_rhs(p)
        if lhs != rhs:
            witnesses.append({"trial": t, "a": p.a, "xs": p.xs, "ys": p.ys, "lhs": lhs, "rhs": rhs})
    return CheckReport("ik", n, not witnesses, trials, seed, witnesses)


def check_ik_symmetry(n: int, trials: int = 10, seed: int = 0) -> CheckReport:
    """ASM-sum side is unchanged by every adjacent transposition of the x's and of the y's."""
    _guard(n, 5, "check_ik_symmetry")
    rng = random.Random(seed)
    witnesses = []
    for t in range(trials):
        p = sample_point(rng, n)
        base = ik_rhs(p)
        for k in range(n - 1):
            for label, q in (("x", p.swap_x(k)), ("y", p.swap_y(k))):
                v = ik_rhs(q)
                if v != base:
                    witnesses.append({"trial": t, "swap": f"{label}{k + 1}<->{label}{k + 2}",
                                      "before": base, "after": v})
    return CheckReport("ik-symmetry", n, not witnesses, trials, seed, witnesses)


def ik_rhs_in_a(n: int, xs: Sequence, ys: Sequence, nodes: Sequence) -> list[Fraction]:
    """Coefficients in ``a`` of the ASM-sum side with x, y fixed, by interpolation at ``nodes``."""
    values = [ik_rhs(make_point(a, xs, ys)) for a in nodes]
    return interpolate(nodes, values)


def check_ik_degree(n: int, seed: int = 0) -> CheckReport:
    """The ASM-sum side is a polynomial in ``a`` of degree exactly ``n(n-1)``.

    The top power comes only from the reversal permutation matrix, whose
    coefficient is ``prod x_i^(n-1)``.  Two extra nodes beyond the
    interpolation set confirm there are no higher terms.
    """
    _guard(n, 5, "check_ik_degree")
    rng = random.Random(seed)
    deg = n * (n - 1)
    p = sample_point(rng, n, a=1)
    nodes: list = []
    while len(nodes) < deg + 3:
        a = rand_rational(rng)
        if a in nodes:
            continue
        try:
            p.with_a(a)
        except DegeneratePoint:
            continue
        nodes.append(a)
    coeffs = ik_rhs_in_a(n, p.xs, p.ys, nodes[:deg + 1])
    witnesses = []
    poly_at = lambda a: sum((c * a ** k for k, c in enumerate(coeffs)), Fraction(0))
    for a in nodes[deg + 1:]:
        got = ik_rhs(p.with_a(a))
        if poly_at(a) != got:
            witnesses.append({"a": a, "interpolated": poly_at(a), "direct": got})
    lead = prod((x ** (n - 1) for x in p.xs), start=Fraction(1))
    if coeffs[deg] != lead:
        witnesses.append({"leading_coefficient": coeffs[deg], "expected": lead})
    return CheckReport("ik-degree", n, not witnesses, len(nodes), seed, witnesses,
                       details={"degree": deg})


def check_cauchy(n: int, trials: int = 10, seed: int = 0) -> CheckReport:
    """``det(1/(x_i+y_j)) prod (x_i+y_j) / prod_{i<j} (x_i-x_j)(y_i-y_j) == 1``."""
    _guard(n, 8, "check_cauchy")
    rng = random.Random(seed)
    witnesses = []
    for t in range(trials):
        p = sample_point(rng, n, a=1)
        sums = [[x + y for y in p.ys] for x in p.xs]
        det = classical_det([[1 / s for s in row] for row in sums])
        value = det * prod((s for row in sums for s in row), start=Fraction(1)) / _vandermonde(p)
        if value != 1:
            witnesses.append({"trial": t, "xs": p.xs, "ys": p.ys, "value": value})
    return CheckReport("cauchy", n, not witnesses, trials, seed, witnesses)


def borchardt_sides(p: IkPoint) -> tuple[Fraction, Fraction]:
    sums = [[x + y for y in p.ys] for x in p.xs]
    all_sums = prod((s for row in sums for s in row), start=Fraction(1))
    lhs = classical_det([[1 / s ** 2 for s in row] for row in sums]) * all_sums ** 2 / _vandermonde(p)
    rhs = permanent([[1 / s for s in row] for row in sums]) * all_sums
    return lhs, rhs


def check_borchardt(n: int, trials: int = 10, seed: int = 0) -> CheckReport:
    _guard(n, 7, "check_borchardt")
    rng = random.Random(seed)
    witnesses = []
    for t in range(trials):
        p = sample_point(rng, n, a=1)
        lhs, rhs = borchardt_sides(p)
        if lhs != rhs:
            witnesses.append({"trial": t, "xs": p.xs, "ys": p.ys, "lhs": lhs, "rhs": rhs})
    return CheckReport("borchardt", n, not witnesses, trials, seed, witnesses)


# counting

def asm_count_formula(n: int) -> int:
    """``prod_{j=0}^{n-1} (3j+1)! / (n+j)!``."""
    if n < 1:
        raise ValueError("order must be at least 1")
    value = prod((Fraction(factorial(3 * j + 1), factorial(n + j)) for j in range(n)), start=Fraction(1))
    if value.denominator != 1:
        raise ArithmeticError(f"product formula is not integral at n={n}: {value}")
    return value.numerator


def check_count(n: int) -> CheckReport:
    _guard(n, 7, "check_count")
    formula = asm_count_formula(n)
    counted = sum(1 for _ in enumerate_asms(n))
    witnesses = [] if formula == counted else [{"formula": formula, "enumerated": counted}]
    return CheckReport("count", n, not witnesses, witnesses=witnesses,
                       details={"formula": formula, "enumerated": counted})


# the a = -1 polynomial identity

def eq11_ring(n: int) -> PolyRing:
    return PolyRing([f"x{i}" for i in range(1, n + 1)] + [f"y{j}" for j in range(1, n + 1)])


def eq11_x_factor(n: int) -> LaurentPoly:
    """``sum_B 2^N(B) prod x_i^Ein_i(B)``."""
    _guard(n, MAX_EQ11_N, "eq11")
    terms: dict = {}
    for _, st in all_stats(n):
        key = st.ein_by_row + (0,) * n
        terms[key] = terms.get(key, 0) + 2 ** st.neg_ones
    return eq11_ring(n).from_terms(terms)


def eq11_y_factor(n: int) -> LaurentPoly:
    """``sum_C 2^N(C) prod y_j^Nin_j(C)``."""
    _guard(n, MAX_EQ11_N, "eq11")
    terms: dict = {}
    for _, st in all_stats(n):
        key = (0,) * n + st.nin_by_col
        terms[key] = terms.get(key, 0) + 2 ** st.neg_ones
    return eq11_ring(n).from_terms(terms)


def eq11_lhs(n: int) -> LaurentPoly:
    """Double sum over pairs (B, C), computed as the product of its two factors."""
    return eq11_x_factor(n) * eq11_y_factor(n)


@lru_cache(maxsize=None)
def _linear_power(n: int, i: int, j: int, sign: int, k: int) -> LaurentPoly:
    """``(x_i + sign * y_j)^k`` in the eq11 ring."""
    R = eq11_ring(n)
    return (R.gen(i) + sign * R.gen(n + j)) ** k


def eq11_rhs(n: int, neg_one_weight: int = 4) -> LaurentPoly:
    """``sum_A (-1)^(I-N) 4^N prod_H x_i prod_V y_j prod_NE (x_i+y_j) prod_SW (-x_i-y_j)
    prod_NW (-x_i+y_j) prod_SE (x_i-y_j)``.

    Every factor is local to a cell (``I - N`` is the number of SW
    vertices), so the sum runs as a row transfer instead of one expansion
    per ASM.  ``neg_one_weight`` replaces the 4 (fault injection only).
    """
    _guard(n, MAX_EQ11_N, "eq11")
    R = eq11_ring(n)
    g = R.gens()
    x, y = g[:n], g[n:]
    K = VertexKind
    weights = {}
    for i in range(n):
        for j in range(n):
            weights[i, j, K.H] = x[i]
            weights[i, j, K.V] = neg_one_weight * y[j]
            weights[i, j, K.NE] = x[i] + y[j]
            weights[i, j, K.SW] = -(-x[i] - y[j])  # sign from (-1)^(I-N)
            weights[i, j, K.NW] = -x[i] + y[j]
            weights[i, j, K.SE] = x[i] - y[j]
    return sum_over_asms(n, lambda i, j, k: weights[i, j, k], R.one)


def eq11_rhs_bruteforce(n: int, neg_one_weight: int = 4) -> LaurentPoly:
    """Same sum as :func:`eq11_rhs`, expanded one ASM at a time."""
    _guard(n, MAX_EQ11_N, "eq11")
    R = eq11_ring(n)
    total = R.zero
    for _, st in all_stats(n):
        sign = (-1) ** (st.inversion - st.neg_ones + st.sw_total + st.nw_total)
        mono = [0] * (2 * n)
        plus: dict = {}   # (i, j) -> multiplicity of (x_i + y_j)
        minus: dict = {}  # (i, j) -> multiplicity of (x_i - y_j)
        for i, row in enumerate(st.kinds.kinds):
            for j, k in enumerate(row):
                if k is VertexKind.H:
                    mono[i] += 1
                elif k is VertexKind.V:
                    mono[n + j] += 1
                elif k in (VertexKind.NE, VertexKind.SW):
                    plus[i, j] = plus.get((i, j), 0) + 1
                else:
                    minus[i, j] = minus.get((i, j), 0) + 1
        term = R.monomial(mono, sign * neg_one_weight ** st.neg_ones)
        for (i, j), k in plus.items():
            term = term * _linear_power(n, i, j, 1, k)
        for (i, j), k in minus.items():
            term = term * _linear_power(n, i, j, -1, k)
        total = total + term
    return total


def eq11_closed_form(n: int) -> LaurentPoly:
    """``prod_{i<j} (x_i + x_j)(y_i + y_j)`` before any normalization."""
    R = eq11_ring(n)
    g = R.gens()
    out = R.one
    for i in range(n):
        for j in range(i + 1, n):
            out = out * (g[i] + g[j]) * (g[n + i] + g[n + j])
    return out


@dataclass(frozen=True)
class Eq11Normalization:
    """How the closed form is transformed to match the stated identity.

    ``sign`` is ``"+1"``, ``"-1"`` or ``"(-1)^C(n,2)"``; ``x_product``
    multiplies by ``x1...xn``; ``negate_y`` substitutes ``y_j -> -y_j``.
    """

    sign: str
    x_product: bool
    negate_y: bool

    def apply(self, n: int, poly: LaurentPoly) -> LaurentPoly:
        if self.negate_y:
            poly = poly.rescale({n + j: -1 for j in range(n)})
        if self.x_product:
            poly = poly * LaurentPoly.monomial(poly.variables, [1] * n + [0] * n)
        s = {"+1": 1, "-1": -1, "(-1)^C(n,2)": (-1) ** comb(n, 2)}[self.sign]
        return poly * s

    def describe(self) -> str:
        parts = [f"sign {self.sign}"]
        parts.append("times x1...xn" if self.x_product else "no x-product")
        parts.append("y -> -y" if self.negate_y else "y unchanged")
        return ", ".join(parts)


def _candidates() -> list:
    out = []
    for negate_y in (False, True):
        for x_product in (False, True):
            for sign in ("+1", "-1", "(-1)^C(n,2)"):
                out.append(Eq11Normalization(sign, x_product, negate_y))
    # fewest transformations first
    out.sort(key=lambda c: (c.negate_y + c.x_product + (c.sign != "+1"), c.negate_y, c.sign))
    return out


@lru_cache(maxsize=None)
def resolve_eq11_normalization() -> tuple:
    """Find, exhaustively at n = 1 and n = 2, which normalizations of the closed
    form agree with both stated sides.  Returns ``(chosen, all_matching)``.
    """
    sides = {n: (eq11_lhs(n), eq11_rhs(n), eq11_closed_form(n)) for n in (1, 2)}
    if any(lhs != rhs for lhs, rhs, _ in sides.values()):
        raise ArithmeticError("the two sides of the a=-1 identity disagree at n <= 2")
    matching = [c for c in _candidates()
                if all(c.apply(n, closed) == lhs for n, (lhs, _, closed) in sides.items())]
    if not matching:
        raise ArithmeticError("no candidate normalization reproduces the a=-1 identity at n <= 2")
    return matching[0], tuple(matching)


def check_eq11(n: int, trials: int = 3, seed: int = 0, lhs=None, rhs=None) -> CheckReport:
    """Exact polynomial check of the ``a = -1`` identity.

    Besides ``lhs == rhs`` this compares both to the normalized closed form
    and, at ``trials`` random points, ties the polynomial back to the
    Izergin-Korepin sides at ``a = -1`` (which need the ``y -> -y`` and
    ``x1...xn`` bookkeeping to line up).  ``lhs``/``rhs`` override the
    computed sides for fault injection.
    """
    _guard(n, MAX_EQ11_N, "check_eq11")
    chosen, matching = resolve_eq11_normalization()
    lhs = eq11_lhs(n) if lhs is None else lhs
    rhs = eq11_rhs(n) if rhs is None else rhs
    closed = chosen.apply(n, eq11_closed_form(n))
    from .tournaments import _diff_witnesses

    witnesses = _diff_witnesses(lhs, rhs)
    witnesses += [dict(w, against="closed form") for w in _diff_witnesses(lhs, closed, ("lhs", "closed"))]

    rng = random.Random(seed)
    half = (-1) ** comb(n, 2)
    for t in range(trials):
        p = sample_point(rng, n, a=-1)
        xprod = prod(p.xs, start=Fraction(1))
        point = {f"x{i + 1}": x for i, x in enumerate(p.xs)}
        point.update({f"y{j + 1}": -y for j, y in enumerate(p.ys)})
        poly_value = rhs.evaluate(point) / xprod
        det_side, sum_side = ik_lhs(p), ik_rhs(p)
        closed_value = half * prod(((p.xs[i] + p.xs[j]) * (p.ys[i] + p.ys[j])
                                    for i in range(n) for j in range(i + 1, n)), start=Fraction(1))
        if not (poly_value == sum_side == det_side == closed_value):
            witnesses.append({"trial": t, "xs": p.xs, "ys": p.ys, "polynomial_at_-y_over_xprod": poly_value,
                              "ik_sum_a=-1": sum_side, "ik_det_a=-1": det_side, "signed_closed": closed_value})

    notes = (
        f"frozen normalization (resolved exhaustively at n=1,2): closed form prod_(i<j)(x_i+x_j)(y_i+y_j) "
        f"with {chosen.describe()}; equivalent candidates: {'; '.join(c.describe() for c in matching)}. "
        f"Raw sides compared without normalization: {'equal' if lhs == rhs else 'NOT equal'}. "
        f"Ein counts west edges pointing east (r[i][j-1]=0); Nin counts south edges pointing north (c[i][j]=0)."
    )
    return CheckReport("eq11", n, not witnesses, trials, seed, witnesses[:20], notes=notes,
                       details={"terms": len(lhs)})
