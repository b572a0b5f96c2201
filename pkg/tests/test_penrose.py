"""Per-equation verification reports and class labelling."""

import pytest

import support
from geninv import (DimensionMismatch, PenroseReport, RMatrix, check, classify,
                    drazin_inverse, full_rank_reduce, g1_inverse, g13_inverse,
                    identity, moore_penrose, zeros)


def test_golden_pseudoinverse_report():
    rep = check(support.EX1, support.EX1_PINV)
    assert rep.eq1 and rep.eq2 and rep.eq3 and rep.eq4
    assert "MP" in rep.classes


def test_golden_group_inverse_report():
    # for this matrix the group inverse coincides with the pseudoinverse
    rep = check(support.EX1, support.EX1_PINV)
    assert rep.eq1 and rep.eq2 and rep.eq5
    assert "group" in rep.classes


def test_zero_candidate():
    a = support.EX1
    rep = check(a, zeros(3, 3))
    assert not rep.eq1
    assert rep.eq2


def test_non_square_has_na_slots():
    a = RMatrix.from_rows([[1, 0, 0], [0, 1, 0]])
    rep = check(a, moore_penrose(a))
    assert rep.eq5 is None and rep.eq6 is None
    assert "MP" in rep.classes
    assert "group" not in rep.classes


def test_dimension_check():
    with pytest.raises(DimensionMismatch):
        check(support.EX1, zeros(2, 3))


def test_index_override():
    # eq6 at k = 0 demands X*A = I, which fails for a singular matrix
    rep0 = check(support.EX1, support.EX1_PINV, index=0)
    assert rep0.eq6 is False
    rep1 = check(support.EX1, support.EX1_PINV, index=1)
    assert rep1.eq6 is True


def test_classify_all_true():
    rep = check(identity(2), identity(2))
    labels = classify(rep)
    for expected in ("MP", "group", "Drazin"):
        assert expected in labels


def test_classify_drazin_only():
    rep = PenroseReport(eq1=False, eq2=True, eq3=False, eq4=False,
                        eq5=True, eq6=True, classes=())
    assert classify(rep) == ["{2}", "{5}", "{5^k}", "Drazin"]


def test_classify_one_three():
    rep = PenroseReport(eq1=True, eq2=False, eq3=True, eq4=False,
                        eq5=False, eq6=False, classes=())
    assert classify(rep) == ["{1}", "{3}", "{1,3}"]


def test_classes_match_classify():
    rep = check(support.EX3, support.EX3_PINV)
    assert list(rep.classes) == classify(rep)


def test_constructor_reports_contain_advertised_classes():
    a = support.EX1
    f = full_rank_reduce(a)
    assert "{1}" in check(a, g1_inverse(f)).classes
    assert "{1,3}" in check(a, g13_inverse(f)).classes
    assert "Drazin" in check(a, drazin_inverse(a)).classes
