"""Alternating sign matrices and their six-vertex configurations.

Conventions used throughout (0-based indices):

* ``r[i][j]`` is the row prefix sum ``a[i][0] + ... + a[i][j]`` and
  ``c[i][j]`` the column prefix sum ``a[0][j] + ... + a[i][j]``.  For an
  ASM both are always 0 or 1.
* The horizontal edge to the right of cell ``(i, j)`` points left when
  ``r[i][j] == 1`` and right when it is 0; the vertical edge below the
  cell points down when ``c[i][j] == 1`` and up when it is 0.  This
  reproduces the domain-wall boundary: arrows leave through the top and
  bottom and enter from the left and right.
* A zero entry is then classified by ``(r, c)``::

      (0, 0) -> NE    (1, 1) -> SW    (0, 1) -> SE    (1, 0) -> NW

  and entries 1 / -1 are the horizontal / vertical vertices.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

import numpy as np

from .arith import LaurentPoly, PolyRing
from .errors import (
    BadColSum,
    BadEntry,
    BadRowSum,
    BrokenAlternation,
    InconsistentConfig,
    NotSquare,
)


class VertexKind(enum.Enum):
    H = "H"
    V = "V"
    SW = "SW"
    NW = "NW"
    NE = "NE"
    SE = "SE"

    def __repr__(self) -> str:
        return self.value


# zero entries, keyed by (row prefix, column prefix)
_ZERO_KIND = {
    (0, 0): VertexKind.NE,
    (1, 1): VertexKind.SW,
    (0, 1): VertexKind.SE,
    (1, 0): VertexKind.NW,
}


class Choice(enum.Enum):
    LEFT = "L"
    RIGHT = "R"


class Direction(enum.Enum):
    WEST = "W"
    EAST = "E"


@dataclass(frozen=True)
class Asm:
    """An alternating sign matrix; build one with :func:`validate`."""

    rows: tuple

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "Asm":
        return Asm(tuple(zip(*self.rows)))

    def is_permutation(self) -> bool:
        return all(-1 not in row for row in self.rows)

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.rows], separators=(",", ":"))

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{a:2d}" for a in row) for row in self.rows)


def validate(raw) -> Asm:
    """Check ``raw`` (nested sequence or array) and return it as an :class:`Asm`."""
    try:
        rows = [list(r) for r in raw]
    except TypeError as exc:
        raise NotSquare("input is not a two-dimensional array") from exc
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotSquare(f"expected a nonempty square array, got row lengths {[len(r) for r in rows]}")
    for i, row in enumerate(rows):
        for j, a in enumerate(row):
            if isinstance(a, bool) or a not in (-1, 0, 1) or int(a) != a:
                raise BadEntry(f"entry ({i}, {j}) = {a!r} is not in {{-1, 0, 1}}")
    rows = [[int(a) for a in r] for r in rows]
    for i, row in enumerate(rows):
        if sum(row) != 1:
            raise BadRowSum(f"row {i} sums to {sum(row)}")
    for j in range(n):
        s = sum(rows[i][j] for i in range(n))
        if s != 1:
            raise BadColSum(f"column {j} sums to {s}")
    for i, row in enumerate(rows):
        for j, p in enumerate(itertools.accumulate(row)):
            if p not in (0, 1):
                raise BrokenAlternation(f"row {i} prefix sum reaches {p} at column {j}")
    for j in range(n):
        for i, p in enumerate(itertools.accumulate(rows[k][j] for k in range(n))):
            if p not in (0, 1):
                raise BrokenAlternation(f"column {j} prefix sum reaches {p} at row {i}")
    return Asm(tuple(tuple(r) for r in rows))


def identity(n: int) -> Asm:
    return Asm(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def permutation_matrix(perm: Sequence[int]) -> Asm:
    """Matrix with a 1 at ``(i, perm[i])``."""
    n = len(perm)
    return Asm(tuple(tuple(int(perm[i] == j) for j in range(n)) for i in range(n)))


# enumeration

@lru_cache(maxsize=None)
def _row_transitions(n: int, state: int) -> tuple:
    """All legal next rows given the column prefix bitmask ``state``.

    A row is legal when its own prefix sums stay in {0,1}, it sums to 1,
    and each column prefix stays in {0,1}: +1 only where the bit is clear,
    -1 only where it is set.  Returned sorted lexicographically by row.
    """
    out = []

    def extend(j: int, prefix: int, row: list, st: int):
        if j == n:
            if prefix == 1:
                out.append((tuple(row), st))
            return
        bit = 1 << j
        row.append(0)
        extend(j + 1, prefix, row, st)
        row.pop()
        if prefix == 0 and not st & bit:
            row.append(1)
            extend(j + 1, 1, row, st | bit)
            row.pop()
        elif prefix == 1 and st & bit:
            row.append(-1)
            extend(j + 1, 0, row, st & ~bit)
            row.pop()

    extend(0, 0, [], state)
    out.sort()
    return tuple(out)


def enumerate_asms(n: int) -> Iterator[Asm]:
    """Yield every ASM of order ``n`` exactly once, in lexicographic row order.

    Row-by-row backtracking with the column prefix sums (a bitmask) as the
    state.  Every partial matrix extends to at least one ASM, so no branch
    is wasted.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    rows: list = []

    def rec(i: int, state: int):
        if i == n:
            yield Asm(tuple(rows))
            return
        for row, nxt in _row_transitions(n, state):
            rows.append(row)
            yield from rec(i + 1, nxt)
            rows.pop()

    yield from rec(0, 0)


@lru_cache(maxsize=8)
def all_asms(n: int) -> tuple:
    """Cached tuple form of :func:`enumerate_asms`."""
    return tuple(enumerate_asms(n))


# statistics

def inversion_number(A: Asm) -> int:
    """Sum of ``a[i][j] * a[k][l]`` over ``i < k`` and ``j > l``."""
    a = A.array
    # strictly_ne[k, l] = sum of a[i, j] over i < k, j > l
    col_suffix = np.cumsum(a[:, ::-1], axis=1)[:, ::-1]  # sum over j' >= j
    above = np.cumsum(col_suffix, axis=0) - col_suffix  # rows strictly above
    strictly_ne = np.zeros_like(a)
    strictly_ne[:, :-1] = above[:, 1:]
    return int((a * strictly_ne).sum())


def count_neg_ones(A: Asm) -> int:
    return sum(row.count(-1) for row in A.rows)


def prefix_sums(A: Asm) -> tuple[np.ndarray, np.ndarray]:
    a = A.array
    return np.cumsum(a, axis=1), np.cumsum(a, axis=0)


@dataclass(frozen=True)
class SixVertexConfig:
    """Grid of vertex kinds.  Invariants are checked by :meth:`violations`,
    not on construction, so inconsistent grids can be represented and
    rejected by :func:`from_six_vertex`."""

    kinds: tuple

    @property
    def n(self) -> int:
        return len(self.kinds)

    def count(self, kind: VertexKind) -> int:
        return sum(row.count(kind) for row in self.kinds)

    def counts(self) -> dict:
        return {k: self.count(k) for k in VertexKind}

    def violations(self) -> list[str]:
        c = self.counts()
        out = []
        if c[VertexKind.SW] != c[VertexKind.NE]:
            out.append(f"#SW={c[VertexKind.SW]} != #NE={c[VertexKind.NE]}")
        if c[VertexKind.SE] != c[VertexKind.NW]:
            out.append(f"#SE={c[VertexKind.SE]} != #NW={c[VertexKind.NW]}")
        if c[VertexKind.H] != self.n + c[VertexKind.V]:
            out.append(f"#H={c[VertexKind.H]} != n + #V={self.n + c[VertexKind.V]}")
        return out

    def to_codes(self) -> list:
        return [[k.value for k in row] for row in self.kinds]

    def to_json(self) -> str:
        return json.dumps(self.to_codes(), separators=(",", ":"))

    @classmethod
    def from_codes(cls, codes) -> "SixVertexConfig":
        return cls(tuple(tuple(VertexKind(c) for c in row) for row in codes))

    def __str__(self) -> str:
        return "\n".join(" ".join(f"{k.value:>2}" for k in row) for row in self.kinds)


def to_six_vertex(A: Asm) -> SixVertexConfig:
    r, c = prefix_sums(A)
    n = A.n
    kinds = []
    for i in range(n):
        row = []
        for j in range(n):
            a = A.rows[i][j]
            if a == 1:
                row.append(VertexKind.H)
            elif a == -1:
                row.append(VertexKind.V)
            else:
                row.append(_ZERO_KIND[int(r[i, j]), int(c[i, j])])
        kinds.append(tuple(row))
    return SixVertexConfig(tuple(kinds))


def from_six_vertex(C: SixVertexConfig) -> Asm:
    """Inverse of :func:`to_six_vertex`: H -> 1, V -> -1, anything else -> 0.

    The zero cells are determined by the H/V positions, so the grid must
    also agree with the image of the recovered matrix.
    """
    raw = [[1 if k is VertexKind.H else -1 if k is VertexKind.V else 0 for k in row] for row in C.kinds]
    try:
        A = validate(raw)
    except Exception as exc:
        raise InconsistentConfig(f"H/V pattern is not an ASM: {exc}") from exc
    if to_six_vertex(A) != C:
        raise InconsistentConfig("zero-entry vertex kinds disagree with the H/V pattern")
    return A


@dataclass(frozen=True)
class AsmStats:
    n: int
    inversion: int
    neg_ones: int
    sw_total: int
    se_total: int
    ne_total: int
    nw_total: int
    v_total: int
    h_total: int
    sw_by_col: tuple
    se_by_col: tuple
    v_by_col: tuple
    ein_by_row: tuple
    nin_by_col: tuple
    kinds: SixVertexConfig = field(repr=False, compare=False)

    _JSON_KEYS = (
        ("inversion", "inversion"), ("negOnes", "neg_ones"),
        ("swTotal", "sw_total"), ("seTotal", "se_total"), ("neTotal", "ne_total"),
        ("nwTotal", "nw_total"), ("vTotal", "v_total"), ("hTotal", "h_total"),
        ("swByCol", "sw_by_col"), ("seByCol", "se_by_col"), ("vByCol", "v_by_col"),
        ("einByRow", "ein_by_row"), ("ninByCol", "nin_by_col"),
    )

    def to_dict(self) -> dict:
        d = {"n": self.n}
        for key, attr in self._JSON_KEYS:
            v = getattr(self, attr)
            d[key] = list(v) if isinstance(v, tuple) else v
        d["kinds"] = self.kinds.to_codes()
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @property
    def column_exponents(self) -> tuple:
        """``SW_i + SE_i + V_i`` per column: the x-exponents of the six-vertex form."""
        return tuple(a + b + c for a, b, c in zip(self.sw_by_col, self.se_by_col, self.v_by_col))


def stats(A: Asm) -> AsmStats:
    n = A.n
    cfg = to_six_vertex(A)
    r, c = prefix_sums(A)
    kinds = np.array([[k.value for k in row] for row in cfg.kinds])
    by_col = lambda code: tuple(int(x) for x in (kinds == code).sum(axis=0))
    total = lambda code: int((kinds == code).sum())
    # in-edge from the left: the edge west of (i, j) points right, i.e. r[i][j-1] == 0
    r_west = np.zeros_like(r)
    r_west[:, 1:] = r[:, :-1]
    # in-edge from below: the edge south of (i, j) points up, i.e. c[i][j] == 0
    return AsmStats(
        n=n,
        inversion=inversion_number(A),
        neg_ones=count_neg_ones(A),
        sw_total=total("SW"),
        se_total=total("SE"),
        ne_total=total("NE"),
        nw_total=total("NW"),
        v_total=total("V"),
        h_total=total("H"),
        sw_by_col=by_col("SW"),
        se_by_col=by_col("SE"),
        v_by_col=by_col("V"),
        ein_by_row=tuple(int(x) for x in (r_west == 0).sum(axis=1)),
        nin_by_col=tuple(int(x) for x in (c == 0).sum(axis=0)),
        kinds=cfg,
    )


@lru_cache(maxsize=8)
def all_stats(n: int) -> tuple:
    """``(A, stats(A))`` for every ASM of order ``n``, cached."""
    return tuple((A, stats(A)) for A in all_asms(n))


def prop3_claims(A: Asm) -> list[tuple[str, int, int]]:
    """The vertex-count claims as ``(name, claimed, observed)`` triples.

    #SW and #NE are each ``I(A) - N(A)``; #SE and #NW are each
    ``C(n, 2) - I(A)``.
    """
    n = A.n
    inv, neg = inversion_number(A), count_neg_ones(A)
    cnt = to_six_vertex(A).counts()
    half = comb(n, 2) - inv
    return [
        ("horizontal = n + N", n + neg, cnt[VertexKind.H]),
        ("vertical = N", neg, cnt[VertexKind.V]),
        ("southwest = I - N", inv - neg, cnt[VertexKind.SW]),
        ("northeast = I - N", inv - neg, cnt[VertexKind.NE]),
        ("southeast = C(n,2) - I", half, cnt[VertexKind.SE]),
        ("northwest = C(n,2) - I", half, cnt[VertexKind.NW]),
    ]


def check_prop3(A: Asm):
    from .report import CheckReport

    claims = prop3_claims(A)
    witnesses = [
        {"claim": name, "claimed": want, "observed": got, "asm": [list(r) for r in A.rows]}
        for name, want, got in claims
        if want != got
    ]
    return CheckReport(
        identity="prop3",
        n=A.n,
        passed=not witnesses,
        witnesses=witnesses,
        details={"claims": [{"claim": nm, "claimed": w, "observed": g} for nm, w, g in claims]},
    )


def check_prop3_suite(n: int):
    """Run :func:`check_prop3` over every ASM of order ``n``."""
    from .report import CheckReport

    witnesses = []
    count = 0
    for A in enumerate_asms(n):
        count += 1
        rep = check_prop3(A)
        witnesses.extend(rep.witnesses)
    return CheckReport(
        identity="prop3",
        n=n,
        passed=not witnesses,
        witnesses=witnesses[:10],
        details={"asms_checked": count, "failures": len(witnesses)},
    )


# weights and monomials

LAMBDA_RING = PolyRing(["lam"])


def asm_lambda_weight(A: Asm, ring: PolyRing = LAMBDA_RING) -> LaurentPoly:
    """``lam^(I - N) * (1 + lam)^N`` as a polynomial in the ring's first variable."""
    lam = ring.gen(0)
    inv, neg = inversion_number(A), count_neg_ones(A)
    return lam ** (inv - neg) * (ring.one + lam) ** neg


def monomial_eq5(A: Asm) -> tuple:
    """Exponent vector of ``prod x_i^((n - j) a_ij)`` (1-based ``j``): a row statistic."""
    n = A.n
    return tuple(sum((n - 1 - j) * a for j, a in enumerate(row)) for row in A.rows)


def monomial_sixvertex(A: Asm) -> tuple:
    """Exponent vector ``SW_i + SE_i + V_i`` counted down column ``i``.

    Equal to ``monomial_eq5(A.transpose())``; the two agree for a single
    ``A`` only when the statistic happens to be transpose-invariant, and
    agree in aggregate because transposition preserves ``I`` and ``N``.
    """
    return stats(A).column_exponents


# decorated ASMs and initiating vertices

@dataclass(frozen=True)
class DecoratedAsm:
    """An ASM with a left/right choice at each -1, listed in row-major order."""

    base: Asm
    choices: tuple

    def __post_init__(self):
        if len(self.choices) != count_neg_ones(self.base):
            raise ValueError(
                f"need {count_neg_ones(self.base)} choices, got {len(self.choices)}"
            )

    @property
    def left_count(self) -> int:
        return sum(ch is Choice.LEFT for ch in self.choices)


def neg_one_positions(A: Asm) -> list[tuple[int, int]]:
    return [(i, j) for i, row in enumerate(A.rows) for j, a in enumerate(row) if a == -1]


def enumerate_decorated(n: int) -> Iterator[DecoratedAsm]:
    for A in enumerate_asms(n):
        for choices in itertools.product((Choice.LEFT, Choice.RIGHT), repeat=count_neg_ones(A)):
            yield DecoratedAsm(A, choices)


def initiating_vertices(D: DecoratedAsm) -> list[tuple[int, int, Direction]]:
    """Vertices with an in-edge from the north, with the out-edge they use.

    SW leaves to the west, SE to the east, and a vertical vertex goes
    whichever way its decoration says.
    """
    cfg = to_six_vertex(D.base)
    choice_at = dict(zip(neg_one_positions(D.base), D.choices))
    out = []
    for i, row in enumerate(cfg.kinds):
        for j, k in enumerate(row):
            if k is VertexKind.SW:
                out.append((i, j, Direction.WEST))
            elif k is VertexKind.SE:
                out.append((i, j, Direction.EAST))
            elif k is VertexKind.V:
                d = Direction.WEST if choice_at[i, j] is Choice.LEFT else Direction.EAST
                out.append((i, j, d))
    return out


def sum_over_asms(n: int, cell_weight, one):
    """``sum_A prod_{(i,j)} cell_weight(i, j, kind)`` without listing the ASMs.

    Row-by-row transfer over the column prefix bitmask: the kind of every
    cell in a row depends only on that row and the bitmask after it, so
    partial sums can be merged per state.  ``one`` is the multiplicative
    identity of whatever ring the weights live in.
    """
    layer = {0: one}
    for i in range(n):
        nxt: dict = {}
        for state, acc in layer.items():
            for row, new_state in _row_transitions(n, state):
                w = acc
                prefix = 0
                for j, a in enumerate(row):
                    prefix += a
                    if a == 1:
                        kind = VertexKind.H
                    elif a == -1:
                        kind = VertexKind.V
                    else:
                        kind = _ZERO_KIND[prefix, new_state >> j & 1]
                    w = w * cell_weight(i, j, kind)
                nxt[new_state] = nxt[new_state] + w if new_state in nxt else w
        layer = nxt
    (total,) = layer.values()
    return total
