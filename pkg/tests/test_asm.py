import itertools
import json
from math import comb

import numpy as np
import pytest

from asm_identities import asm
from asm_identities.asm import (
    Choice,
    DecoratedAsm,
    Direction,
    SixVertexConfig,
    VertexKind,
    asm_lambda_weight,
    check_prop3,
    count_neg_ones,
    enumerate_asms,
    enumerate_decorated,
    from_six_vertex,
    identity,
    initiating_vertices,
    inversion_number,
    monomial_eq5,
    monomial_sixvertex,
    permutation_matrix,
    stats,
    to_six_vertex,
    validate,
)
from asm_identities.errors import (
    BadColSum,
    BadEntry,
    BadRowSum,
    BrokenAlternation,
    InconsistentConfig,
    NotSquare,
)

from asm_fixtures import CENTER, FIVE, FIVE_HORIZONTAL, FIVE_VERTICAL, FOUR, kinds_from_arrows

H, V, SW, NW, NE, SE = (VertexKind[k] for k in ("H", "V", "SW", "NW", "NE", "SE"))


def brute_force_asms(n):
    """Every {-1,0,1} matrix whose rows pass the row test, filtered by validate."""
    rows = [r for r in itertools.product((-1, 0, 1), repeat=n)
            if sum(r) == 1 and all(p in (0, 1) for p in itertools.accumulate(r))]
    out = []
    for m in itertools.product(rows, repeat=n):
        try:
            out.append(validate(m))
        except Exception:
            pass
    return out


def brute_inversions(A):
    n = A.n
    return sum(A[i, j] * A[k, l]
               for i in range(n) for j in range(n) for k in range(n) for l in range(n)
               if i < k and j > l)


# validate

def test_validate_accepts_reference_examples():
    assert validate(FIVE).n == 5
    assert validate(FOUR).n == 4
    for n in range(1, 6):
        assert validate(np.eye(n, dtype=int)) == identity(n)


@pytest.mark.parametrize("raw, exc", [
    ([[1, -1], [0, 1]], BadRowSum),
    ([[1, 0], [1, 0]], BadColSum),
    ([[1, 0, 0], [0, 1]], NotSquare),
    ([], NotSquare),
    ([[2]], BadEntry),
    ([[0, 1, 0], [1, 0, 0], [0, 0, 1.5]], BadEntry),
    ([[1, -1, 1], [0, 1, 0], [0, 1, 0]], BrokenAlternation),
    ([[0, 0, 1], [1, 0, -1], [0, 1, 1]], BadRowSum),
])
def test_validate_errors(raw, exc):
    with pytest.raises(exc):
        validate(raw)


def test_validate_alternation_in_column():
    # every row alternates; column 1 opens with -1
    with pytest.raises(BrokenAlternation, match="column 1"):
        validate([[1, -1, 1], [0, 1, 0], [0, 1, 0]])


# enumeration

def test_enumerate_small():
    assert list(enumerate_asms(1)) == [validate([[1]])]
    threes = list(enumerate_asms(3))
    assert len(threes) == 7
    assert sum(A.is_permutation() for A in threes) == 6
    assert validate(CENTER) in threes


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_enumerate_matches_brute_force(n):
    listed = list(enumerate_asms(n))
    assert len(set(listed)) == len(listed)
    assert set(listed) == set(brute_force_asms(n))


def test_enumerate_order_is_lexicographic_and_valid():
    listed = list(enumerate_asms(5))
    assert len(listed) == 429
    assert [A.rows for A in listed] == sorted(A.rows for A in listed)
    for A in listed:
        assert validate(A.rows) == A


# statistics

def test_inversion_number_examples():
    assert inversion_number(identity(4)) == 0
    assert inversion_number(permutation_matrix([2, 1, 0])) == 3
    assert inversion_number(validate(FOUR)) == 5
    assert inversion_number(validate(CENTER)) == 2


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_inversion_number_matches_brute_force(n):
    for A in enumerate_asms(n):
        assert inversion_number(A) == brute_inversions(A)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_inversions_of_permutations(n):
    for perm in itertools.permutations(range(n)):
        classical = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        assert inversion_number(permutation_matrix(perm)) == classical


def test_count_neg_ones():
    assert count_neg_ones(permutation_matrix([1, 2, 0])) == 0
    assert count_neg_ones(validate(CENTER)) == 1
    assert count_neg_ones(validate(FIVE)) == 2


# six-vertex bijection

def test_identity_kinds():
    cfg = to_six_vertex(identity(3))
    for i in range(3):
        for j in range(3):
            want = H if i == j else NW if j > i else SE
            assert cfg.kinds[i][j] is want


def test_center_kinds():
    assert to_six_vertex(validate(CENTER)).to_codes() == [["NE", "H", "NW"], ["H", "V", "H"], ["SE", "H", "SW"]]


def test_five_by_five_matches_arrow_diagram():
    cfg = to_six_vertex(validate(FIVE))
    assert cfg.to_codes() == kinds_from_arrows(FIVE_HORIZONTAL, FIVE_VERTICAL)
    assert cfg.count(H) == 7 and cfg.count(V) == 2


def test_arrow_diagram_ein_nin():
    st = stats(validate(FIVE))
    ein = [row[:-1].count("R") for row in FIVE_HORIZONTAL]
    nin = [sum(FIVE_VERTICAL[i + 1][j] == "U" for i in range(5)) for j in range(5)]
    assert list(st.ein_by_row) == ein
    assert list(st.nin_by_col) == nin


def test_round_trip_examples():
    for raw in (FIVE, FOUR, CENTER):
        A = validate(raw)
        assert from_six_vertex(to_six_vertex(A)) == A
    assert from_six_vertex(to_six_vertex(identity(4))) == identity(4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_round_trip_exhaustive(n):
    for A in enumerate_asms(n):
        cfg = to_six_vertex(A)
        assert not cfg.violations()
        assert from_six_vertex(cfg) == A


def test_from_six_vertex_rejects():
    with pytest.raises(InconsistentConfig):
        from_six_vertex(SixVertexConfig(((NE,) * 3,) * 3))
    # right H/V pattern, wrong zero kinds
    bad = [list(r) for r in to_six_vertex(identity(3)).kinds]
    bad[0][1] = SE
    with pytest.raises(InconsistentConfig):
        from_six_vertex(SixVertexConfig(tuple(map(tuple, bad))))


def test_config_json_round_trip():
    cfg = to_six_vertex(validate(FIVE))
    assert SixVertexConfig.from_codes(json.loads(cfg.to_json())) == cfg


def test_stats_examples():
    st = stats(identity(3))
    assert (st.inversion, st.neg_ones) == (0, 0)
    assert st.sw_by_col == (0, 0, 0) and st.se_by_col == (2, 1, 0) and st.v_by_col == (0, 0, 0)
    st = stats(validate(CENTER))
    assert (st.inversion, st.neg_ones) == (2, 1)
    st = stats(validate(FOUR))
    assert (st.inversion, st.neg_ones) == (5, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_stats_invariants(n):
    half = comb(n, 2)
    for A in enumerate_asms(n):
        st = stats(A)
        assert st.sw_total == st.ne_total == st.inversion - st.neg_ones
        assert st.se_total == st.nw_total == half - st.inversion
        assert st.v_total == st.neg_ones and st.h_total == n + st.neg_ones
        assert sum(st.column_exponents) == st.sw_total + st.se_total + st.v_total == half
        # in-edges from the left: H, NE, SE; from below: NE, NW, V
        assert sum(st.ein_by_row) == st.h_total + st.ne_total + st.se_total
        assert sum(st.nin_by_col) == st.ne_total + st.nw_total + st.v_total


def test_stats_json_keys():
    d = json.loads(stats(validate(FIVE)).to_json())
    assert d["negOnes"] == 2 and d["hTotal"] == 7 and d["vTotal"] == 2
    assert set(d) >= {"inversion", "swTotal", "seTotal", "neTotal", "nwTotal", "swByCol", "seByCol",
                      "vByCol", "einByRow", "ninByCol", "kinds"}


def test_prop3_examples():
    rep = check_prop3(identity(4))
    assert rep.passed
    claims = {c["claim"]: (c["claimed"], c["observed"]) for c in rep.details["claims"]}
    assert claims["horizontal = n + N"] == (4, 4)
    assert claims["southeast = C(n,2) - I"] == (6, 6)
    rep = check_prop3(validate(CENTER))
    claims = {c["claim"]: c["observed"] for c in rep.details["claims"]}
    assert rep.passed and claims == {
        "horizontal = n + N": 4, "vertical = N": 1, "southwest = I - N": 1,
        "northeast = I - N": 1, "southeast = C(n,2) - I": 1, "northwest = C(n,2) - I": 1,
    }


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_prop3_exhaustive(n):
    assert asm.check_prop3_suite(n).passed


# weights and monomials

def test_lambda_weights():
    R = asm.LAMBDA_RING
    lam = R.gen(0)
    assert asm_lambda_weight(identity(3)) == R.one
    assert asm_lambda_weight(validate(CENTER)) == lam + lam ** 2
    assert asm_lambda_weight(validate(FOUR)) == lam ** 3 * (1 + lam) ** 2


def test_monomials():
    assert monomial_eq5(identity(3)) == (2, 1, 0)
    assert monomial_eq5(validate(CENTER)) == (1, 1, 1)
    assert monomial_eq5(permutation_matrix([2, 1, 0])) == (0, 1, 2)
    assert monomial_sixvertex(identity(3)) == (2, 1, 0)
    assert monomial_sixvertex(validate(CENTER)) == (1, 1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sixvertex_monomial_is_transposed_row_monomial(n):
    R = asm.LAMBDA_RING
    lam = R.gen(0)
    for A in enumerate_asms(n):
        st = stats(A)
        assert monomial_sixvertex(A) == monomial_eq5(A.transpose())
        assert asm_lambda_weight(A) == lam ** st.sw_total * (1 + lam) ** st.v_total


def test_per_asm_monomial_equality_fails_for_a_three_cycle():
    # column statistic of A equals the row statistic of A^T, not of A
    A = permutation_matrix([1, 2, 0])
    assert monomial_eq5(A) == (1, 0, 2)
    assert monomial_sixvertex(A) == (0, 2, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_monomial_multisets_agree(n):
    # the aggregate statement survives: transposition preserves I and N
    row = sorted((inversion_number(A), count_neg_ones(A), monomial_eq5(A)) for A in enumerate_asms(n))
    col = sorted((inversion_number(A), count_neg_ones(A), monomial_sixvertex(A)) for A in enumerate_asms(n))
    assert row == col


# decorated ASMs

def test_decorated_counts():
    assert sum(1 for _ in enumerate_decorated(1)) == 1
    assert sum(1 for _ in enumerate_decorated(3)) == 8
    assert sum(1 for _ in enumerate_decorated(4)) == 64


def test_decorated_needs_one_choice_per_minus_one():
    with pytest.raises(ValueError):
        DecoratedAsm(validate(CENTER), ())


def test_initiating_vertices_identity():
    recs = initiating_vertices(DecoratedAsm(identity(3), ()))
    assert recs == [(1, 0, Direction.EAST), (2, 0, Direction.EAST), (2, 1, Direction.EAST)]


def test_initiating_vertices_center():
    recs = initiating_vertices(DecoratedAsm(validate(CENTER), (Choice.RIGHT,)))
    assert sorted(recs) == sorted([(2, 2, Direction.WEST), (2, 0, Direction.EAST), (1, 1, Direction.EAST)])
    left = initiating_vertices(DecoratedAsm(validate(CENTER), (Choice.LEFT,)))
    assert (1, 1, Direction.WEST) in left and len(left) == len(recs)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_initiating_vertex_counts(n):
    for D in enumerate_decorated(n):
        st = stats(D.base)
        recs = initiating_vertices(D)
        assert len(recs) == comb(n, 2)
        assert sum(d is Direction.WEST for *_, d in recs) == st.sw_total + D.left_count


def test_sum_over_asms_counts_and_weights():
    # all weights 1 counts ASMs; weight 2 at V gives sum of 2^N = 2^C(n,2)
    for n in range(1, 6):
        assert asm.sum_over_asms(n, lambda i, j, k: 1, 1) == len(asm.all_asms(n))
        assert asm.sum_over_asms(n, lambda i, j, k: 2 if k is V else 1, 1) == 2 ** comb(n, 2)
