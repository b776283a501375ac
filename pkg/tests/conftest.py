def pytest_runtest_logreport(report):
    """One PASS/FAIL line per acceptance criterion."""
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        status = "PASS" if report.passed else "FAIL"
        print(f"\n[ACCEPTANCE] {status}: {name}")
    elif report.failed:  # setup/teardown error
        print(f"\n[ACCEPTANCE] FAIL: {name} (error outside test body)")
