from blocktoeplitz.verify import SUITES, run_verification


def test_counting_oracle_suite():
    r = run_verification("counting-oracle")
    assert r.passed and len(r.checks) > 300 and r.first_failure is None


def test_decomposition_suite_defaults():
    r = run_verification("decomposition")
    assert r.passed, r.first_failure


def test_witness_suite():
    r = run_verification("lemmas")
    assert r.passed, r.first_failure
    names = [c.name for c in r.checks]
    assert any(n.startswith("sign-decay") for n in names)
    assert any(n.startswith("l0-dominance") for n in names)
    assert any(n.startswith("wigner-catalan") for n in names)


def test_report_dict():
    d = run_verification("lemmas").to_dict()
    assert d["pass"] is True and d["first_failure"] is None and d["n_checks"] == len(d["checks"])
    assert "all" in SUITES
