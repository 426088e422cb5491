import pytest
from sympy import isprime

from primegenus import data
from primegenus.census import (check_classification, check_small_prime, classify, classify_small_prime,
                               hypermap_census, nonorientable_census, orbit_sizes, reflection_involution,
                               verify_embedded_tables)
from primegenus.groups import group
from primegenus.signatures import genus_of_kernel

PRIMES = [7, 11, 13, 17, 19, 23, 29, 31]


@pytest.mark.parametrize("p", PRIMES)
def test_matches_case_table(p):
    recs = classify(p)
    assert check_classification(p, recs) == []
    for r in recs:
        assert group(r.group_spec).n == r.rho * p
        assert genus_of_kernel(r.sig, r.rho * p) == p + 1


def test_examples():
    assert {r.case_id for r in classify(13)} == {"i", "iv", "v", "vii", "viii", "ix", "x"}
    assert {r.case_id for r in classify(17)} == {"iii", "vii", "viii"}
    assert {r.case_id for r in classify(11)} == {"ii", "vi", "viii"}
    x = next(r for r in classify(13) if r.case_id == "x")
    assert (x.group_spec, x.kernel_count, x.surfaces) == ("PSL(2,13)", 3, 3)


def test_full_group_targets():
    recs = classify(7)
    by_case = {r.case_id: r for r in recs}
    assert "PGL(2,7) [case xi]" in by_case["xii"].full_group
    assert by_case["xi"].rho == 2 * by_case["xii"].rho
    assert classify(11)[1].full_group.startswith("Gpr(11,10) [case ii]")


def test_rho_min():
    assert all(r.rho >= 6 for r in classify(13, rho_min=6))
    with pytest.raises(ValueError):
        classify(15)


def test_hypermaps_p11():
    recs = hypermap_census(11)
    assert sum(r.case_id == "ii" for r in recs) == 4
    assert sum(r.case_id == "vi" for r in recs) == 12
    assert orbit_sizes(recs, "vi") == [6, 6]
    assert all(r.chiral for r in recs)


@pytest.mark.parametrize("p", [7, 13])
def test_chirality_split(p):
    for r in hypermap_census(p):
        assert r.chiral == (r.case_id in ("i", "ii", "iii", "iv", "vi"))


def test_nonorientable():
    n13 = nonorientable_census(13)
    assert [(r.base.conder_ref, r.petrie, r.conder_ref) for r in n13] == [("R14.2", 13, "N15.1")]
    n7 = nonorientable_census(7)
    assert sorted((r.base.conder_ref, r.petrie) for r in n7) == [("R8.1", 8), ("R8.2", 7), ("RPH8.2", 7)]
    absent = [r for r in nonorientable_census(7, include_absent=True) if not r.quotient_exists]
    assert [r.base.conder_ref for r in absent] == ["RPH8.1"]
    for r in n7 + n13:
        assert r.characteristic == -(r.base.genus - 1)
        assert reflection_involution(r.base.tuple) is not None


def test_small_prime():
    recs = classify_small_prime(5)
    assert check_small_prime(5, recs) == []
    found = {(r.group_spec, r.sig.short()) for r in recs}
    assert ("V25:S3", "(2,3,10)") in found and ("A5", "(2,2,2,3)") in found
    n5 = nonorientable_census(5)
    assert [(r.base.conder_ref, r.conder_ref) for r in n5] == [("R6.2", "N7.1")]


def test_verify_report():
    rep = verify_embedded_tables(primes=(7, 13), small_prime=False)
    assert rep.all_passed, [(i.name, i.detail) for i in rep.failures()]
    names = [i.name for i in rep.items]
    assert "sigma rho=8" in names and any(n.startswith("jacobian case viii p=7") for n in names)


def test_verify_detects_tampering(tmp_path, monkeypatch):
    for f in data.data_dir().glob("*.txt"):
        (tmp_path / f.name).write_text(f.read_text())
    t1 = tmp_path / "cases.txt"
    t1.write_text(t1.read_text().replace("PSL(2,13)\t=13\t3\t3", "PSL(2,13)\t=13\t4\t3"))
    monkeypatch.setenv("CENSUS_DATA_DIR", str(tmp_path))
    rep = verify_embedded_tables(primes=(13,), small_prime=False)
    assert not rep.all_passed
    assert any(i.name == "case table p=13" for i in rep.failures())


def test_data_tables():
    with pytest.raises(ValueError):
        data.eval_count("__import__('os')", 7)
    assert data.eval_count("2*(p+1)", 7) == 16
    assert data.condition_holds("1mod3", 13) and not data.condition_holds("=7", 13)
    for case, rho, *_ in data.read_table("cases", 7):
        assert int(rho) >= 3
    assert all(isprime(int(r[1])) for r in data.read_table("sporadic", 8))
