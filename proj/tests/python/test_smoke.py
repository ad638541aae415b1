import pytest

import rsurf


def test_pairing_and_canonical_class():
    assert rsurf.pairing("1;0,0,0,0,0", "1;0,0,0,0,0") == 1
    assert rsurf.pairing("2;1,1,1,1,1", "2;1,1,1,1,1") == -1
    assert rsurf.canonical_class(5) == [-3, -1, -1, -1, -1, -1]


def test_area_is_exact():
    assert rsurf.area("1|1/3,1/3,1/3,1/3,1/3", "0;0,0,0,0,-1") == "1/3"
    assert rsurf.area("1|1/2,1/4,1/4,1/4,1/4", "0;-1,1,0,0,0") == "1/4"


@pytest.mark.parametrize("k,count", [(3, 8), (4, 20), (5, 40), (6, 72), (7, 126), (8, 240)])
def test_root_counts(k, count):
    assert len(rsurf.enumerate_roots(k)) == count
    assert rsurf.positive_root_count(k) == count // 2


def test_reduce_class():
    trace = rsurf.reduce_class("4;2,2,2,1,1")
    assert trace["output"] == [2, 1, 1, 0, 0, 0]
    assert rsurf.reduce_class("3;1,1,1,1,1")["steps"] == []
    with pytest.raises(rsurf.PreconditionError):
        rsurf.reduce_class("1;1,1")


def test_monotone_report():
    r = rsurf.report("1|1/3,1/3,1/3,1/3,1/3")
    assert r["face"] == "M"
    assert r["gamma_L"] == "D_5"
    assert r["N_omega"] == 0
    assert r["torelli"] == "MCG(S2,5)"
    assert r["weyl_order"] == 1920
    assert r["pi1_rank"] == 0


def test_report_requires_reduced_form():
    with pytest.raises(rsurf.PreconditionError):
        rsurf.report("1|1/8,1/2,1/8,1/8,1/8")
    assert rsurf.report("1|1/8,1/2,1/8,1/8,1/8", auto_reduce=True)["face"] == "MOA"


def test_parse_errors_are_value_errors():
    with pytest.raises(ValueError):
        rsurf.classify_face("1|1/x,1/2")
    with pytest.raises(rsurf.DimensionError):
        rsurf.table_markdown(9)


def test_face_round_trip():
    assert rsurf.classify_face(rsurf.sample_face(5, "MBC")) == "MBC"


def test_tables_match_golden():
    for k in range(2, 6):
        assert rsurf.table_matches_golden(k)
    assert "| MOABCD | trivial | 20 |" in rsurf.table_markdown(5)


def test_braid_abelianizations():
    assert rsurf.pure_braid_ab(5)["free_rank"] == 5
    assert rsurf.pure_braid_ab(4)["free_rank"] == 2
    assert rsurf.sphere_braid_ab(5)["torsion"] == [8]


def test_verify_all_pass():
    results = rsurf.verify()
    assert len(results) == 10
    assert all(r["pass"] for r in results), [r for r in results if not r["pass"]]
