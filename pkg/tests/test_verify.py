from qhermite import verify


def test_all_suites_pass_and_cover_every_tag():
    entries = verify.run_suite("all", 8)
    assert verify.all_passed(entries)
    assert {e["paper_ref"] for e in entries} == verify.EXPECTED_TAGS


def test_workers_do_not_change_the_report():
    assert verify.run_suite("genfun", 6, workers=3) == verify.run_suite("genfun", 6)


def test_family_filter():
    entries = verify.run_suite("ladder", 6, family="HI")
    assert entries and {e["paper_ref"] for e in entries} == {"ladder:HI"}


def test_errors_are_reported(monkeypatch):
    def boom(*a):
        raise ZeroDivisionError("boom")

    monkeypatch.setitem(verify._CHECKS, "umbral", boom)
    entries = verify.run_suite("umbral", 2)
    umbral = [e for e in entries if e["paper_ref"] == "umbral:inverse"]
    assert umbral and all(e["status"] == "error" and "boom" in e["witness"] for e in umbral)
    assert not verify.all_passed(entries)
