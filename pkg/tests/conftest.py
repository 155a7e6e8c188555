import pytest

# criterion id -> (passed, detail); filled by tests/test_acceptance.py
ACCEPTANCE: dict[str, tuple[bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion.

    The test body calls ``detail(text)`` as it goes; the outcome is taken
    from whether the test itself passed.
    """
    name = request.node.name
    notes: list[str] = []
    yield notes.append
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    ACCEPTANCE[name] = (ok, "; ".join(notes))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE, key=lambda s: int(s.split("_")[1][2:])):
        ok, detail = ACCEPTANCE[name]
        terminalreporter.write_line("%s %s  %s" % ("PASS" if ok else "FAIL", name, detail))
