import json
from fractions import Fraction as F
from math import comb

import pytest

from kapparing.pairing import pair
from kapparing.poly import UniPoly
from kapparing.tables import block11_polynomial
from kapparing.verify import (
    CheckReport,
    block11_check,
    block11_det,
    block11_rows,
    check_divisor_relation,
    codim1_check,
    codim1_expected,
    det_law_check,
    det_law_constant,
    det_polynomial,
    divisor_profiles,
    monotone_in_n,
    partition_set_check,
    psi_matrix_M,
    run_suite,
    table1_check,
    table2,
)


def test_divisor_n3_by_hand():
    q1, q2, q3 = divisor_profiles(3)
    assert (q1, q2, q3) == (((1, 2), (0, 3)), ((1, 1), (0, 4)), ((0, 5),))
    assert pair((2,), q3) / 24 == F(1, 24) == pair((2,), q1) + pair((2,), q2)
    assert pair((1, 1), q3) / 24 == F(1, 4) == pair((1, 1), q1) + pair((1, 1), q2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_divisor_relation(n):
    assert check_divisor_relation(n).passed


def test_psi_matrix_M_examples():
    for m in range(-2, 8):
        assert psi_matrix_M(m, 1) == [[1, comb(m, 2) if m >= 0 else F(m * (m - 1), 2)],
                                      [1, F(m * (m - 1), 2) - (m - 2)]]
    for g in range(1, 5):
        M = psi_matrix_M(2, g)
        assert M[0] == M[1] == [1, 1] + [0] * (g - 1)
    assert psi_matrix_M(5, 2)[2][1] == F(29, 5)


def test_det_law_small():
    assert det_polynomial(1) == UniPoly((F(2), F(-1)))
    assert det_law_constant(1) == -1
    d2 = det_polynomial(2)
    assert d2.degree == 2 and d2(2) == 0 and d2(5) == 0
    for g in (1, 2, 3):
        assert det_law_check(g).passed


def test_table1_examples():
    rep = table1_check(1, 5)
    assert rep.passed and len(rep.cases) == 11
    rows = {c.case_id.split()[-1]: c for c in table1_check(2, 8).cases}
    assert rows["(d)"].actual == 1
    assert table1_check(2, 8).passed


def test_table1_row_d2_values():
    # [DERIVED] C(d+1, 2) + 1 at g=1, d=3 and 29/5 at g=2, d=3
    from kapparing.tables import SMALL_PSI_ROWS
    f = dict((lbl, fn) for lbl, _, fn in SMALL_PSI_ROWS)["(d,2)"]
    assert f(1, 3) == 7
    assert f(2, 3) == F(29, 5)


def test_block11_profile_count_and_independence():
    assert len(block11_rows(2, 9)) == 11
    with pytest.raises(ValueError, match="11"):
        from kapparing.verify import block11_matrix
        block11_matrix(3, 9)
    assert block11_det(2, 9) == block11_det(2, 10)


def test_block11_large_vertex_normalization_matches_printed():
    # the printed value corresponds to normalizing by the large vertex only
    for g, ds in [(2, (9, 10)), (3, (11, 12))]:
        assert block11_check(g, ds, normalization="large-vertex").passed


def test_block11_lambda_ratio_is_constant():
    for g, d in [(2, 9), (3, 11)]:
        assert block11_det(g, d) / block11_polynomial(g) == -2 * 24**6


def test_codim1_examples():
    assert codim1_expected(1, 5) == 4
    assert codim1_expected(2, 2) == 4
    assert codim1_expected(2, 4) == 7
    assert codim1_check(1, 5).passed and codim1_check(2, 4).passed


def test_table2_examples():
    rows, rep = table2(2, 2, 10, g_min=2)
    assert rows[-1] == {"codim": 2, "genus": 2, "points": 10, "degree": 11, "rank": 45}
    assert rep.passed and monotone_in_n(rows)
    rows, _ = table2(3, 1, 9, g_min=1)
    assert rows[-1]["rank"] == 11


def test_partition_set_examples():
    assert partition_set_check(2, 1, 3).passed
    assert partition_set_check(4, 2, 4).passed
    assert partition_set_check(5, 2, 2).passed


def test_partition_set_boundary_cell():
    # (3,3) in degree 6 on M_{3,1} would need a genus-2 vertex with no special points
    rep = partition_set_check(6, 3, 1)
    assert not rep.passed
    assert rep.cases[0].actual == ["6", "5+1", "4+2"]


def test_report_json_shape():
    rep = CheckReport("x")
    rep.add("a", F(1, 2), F(1, 2))
    rep.add("b", 3, 4)
    d = json.loads(json.dumps(rep.to_dict()))
    assert d["suite"] == "x" and d["passed"] is False
    assert d["cases"][0]["expected"] == "1/2" and d["cases"][0]["pass"] is True
    assert "FAIL" in rep.to_text()


def test_run_suite_unknown():
    with pytest.raises(ValueError):
        run_suite("nope")
