"""Tournaments and the two sides of the tournament / six-vertex identity.

Polynomials here live in the ring ``(lam, x1, ..., xn)``; see :func:`eq6_ring`.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional

from .arith import LaurentPoly, PolyRing
from .asm import all_stats, enumerate_decorated, stats
from .errors import OrderTooLarge
from .report import CheckReport

MAX_TOURNAMENT_N = 6
MAX_ASM_SIDE_N = 7
MAX_CHECK_N = 6
MAX_AUDIT_N = 5


def _guard(n: int, limit: int, what: str):
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > limit:
        raise OrderTooLarge(f"{what} is limited to n <= {limit}, got n = {n}")


def pairs(n: int) -> list[tuple[int, int]]:
    """Unordered pairs ``(i, j)``, ``i < j``, in lexicographic order."""
    return list(combinations(range(n), 2))


@dataclass(frozen=True)
class Tournament:
    """Orientation of the complete graph on ``n`` vertices.

    ``backward[k]`` refers to the k-th pair ``(i, j)`` of :func:`pairs`;
    False means ``i -> j``, True means ``j -> i`` (an upset).
    """

    n: int
    backward: tuple

    def __post_init__(self):
        if len(self.backward) != comb(self.n, 2):
            raise ValueError(f"expected {comb(self.n, 2)} edge bits, got {len(self.backward)}")

    def edges(self) -> list[tuple[int, int]]:
        """Directed edges ``(tail, head)``."""
        return [(j, i) if b else (i, j) for (i, j), b in zip(pairs(self.n), self.backward)]


def enumerate_tournaments(n: int) -> Iterator[Tournament]:
    """All ``2^C(n,2)`` tournaments; counter bit k orients pair k."""
    m = comb(n, 2)
    for code in range(1 << m):
        yield Tournament(n, tuple(bool(code >> k & 1) for k in range(m)))


def upset_count(T: Tournament) -> int:
    return sum(T.backward)


def out_degrees(T: Tournament) -> tuple:
    deg = [0] * T.n
    for tail, _ in T.edges():
        deg[tail] += 1
    return tuple(deg)


def eq6_ring(n: int) -> PolyRing:
    return PolyRing(["lam"] + [f"x{i}" for i in range(1, n + 1)])


def tournament_side_eq6(n: int) -> LaurentPoly:
    """``sum_T lam^U(T) prod x_i^outdeg(i)`` by enumeration."""
    _guard(n, MAX_TOURNAMENT_N, "tournament enumeration")
    counts = Counter((upset_count(T),) + out_degrees(T) for T in enumerate_tournaments(n))
    return eq6_ring(n).from_terms(counts)


def product_side(n: int) -> LaurentPoly:
    """Expanded ``prod_{i<j} (x_i + lam x_j)``."""
    R = eq6_ring(n)
    lam, *xs = R.gens()
    out = R.one
    for i, j in pairs(n):
        out = out * (xs[i] + lam * xs[j])
    return out


def asm_side_eq6(n: int) -> LaurentPoly:
    """``sum_A lam^SW(A) (1 + lam)^V(A) prod x_i^(SW_i + SE_i + V_i)`` with column statistics."""
    _guard(n, MAX_ASM_SIDE_N, "ASM-side expansion")
    terms: Counter = Counter()
    for _, st in all_stats(n):
        xs = st.column_exponents
        for k in range(st.v_total + 1):
            terms[(st.sw_total + k,) + xs] += comb(st.v_total, k)
    return eq6_ring(n).from_terms(terms)


def _diff_witnesses(p: LaurentPoly, q: LaurentPoly, labels=("lhs", "rhs"), limit: int = 10) -> list:
    out = []
    for key in sorted(set(p.terms) | set(q.terms)):
        a, b = p.coefficient(key), q.coefficient(key)
        if a != b:
            out.append({"monomial": list(key), labels[0]: a, labels[1]: b})
            if len(out) == limit:
                break
    return out


def check_eq6(n: int, asm_side: Optional[LaurentPoly] = None) -> CheckReport:
    """Tournament sum versus weighted ASM sum, both against the expanded product.

    ``asm_side`` overrides the computed ASM side (for fault injection).
    """
    _guard(n, MAX_CHECK_N, "check_eq6")
    tour = tournament_side_eq6(n)
    asms = asm_side_eq6(n) if asm_side is None else asm_side
    prod = product_side(n)
    witnesses = _diff_witnesses(tour, asms, ("tournaments", "asms"))
    witnesses += [dict(w, against="product") for w in _diff_witnesses(tour, prod, ("tournaments", "product"))]
    return CheckReport(
        identity="eq6",
        n=n,
        passed=not witnesses,
        witnesses=witnesses,
        notes="monomial key is (lam power, x1..xn exponents); x exponents on the ASM side are column statistics",
        details={"terms": len(tour)},
    )


@dataclass(frozen=True)
class AuditRow:
    lambda_power: int
    x_exponents: tuple
    tournament_count: int
    decorated_asm_count: int

    @property
    def balanced(self) -> bool:
        return self.tournament_count == self.decorated_asm_count


def audit_eq6(n: int) -> list[AuditRow]:
    """Coefficient-level table of the tournament identity.

    For every key ``(lam power, x-exponents)`` count tournaments with that
    ``(U, outdegrees)`` and decorated ASMs with that
    ``(#SW + #left choices, column statistics)``.
    """
    _guard(n, MAX_AUDIT_N, "audit_eq6")
    tour = Counter((upset_count(T), out_degrees(T)) for T in enumerate_tournaments(n))
    deco: Counter = Counter()
    cache = {}
    for D in enumerate_decorated(n):
        st = cache.get(D.base)
        if st is None:
            st = cache[D.base] = stats(D.base)
        deco[(st.sw_total + D.left_count, st.column_exponents)] += 1
    keys = sorted(set(tour) | set(deco))
    return [AuditRow(k[0], k[1], tour[k], deco[k]) for k in keys]


AUDIT_HEADER = ("lambda_power", "x_exponents", "tournament_count", "decorated_asm_count")


def audit_to_csv(rows: list[AuditRow], totals: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(AUDIT_HEADER)
    for r in rows:
        w.writerow((r.lambda_power, ";".join(map(str, r.x_exponents)), r.tournament_count, r.decorated_asm_count))
    if totals:
        w.writerow(("total", "", sum(r.tournament_count for r in rows), sum(r.decorated_asm_count for r in rows)))
    return buf.getvalue()
