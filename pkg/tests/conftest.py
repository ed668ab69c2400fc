import pytest

# criterion number -> (title, passed, seconds, detail); filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, secs, detail = ACCEPTANCE[n]
        status = "PASS" if ok else "FAIL"
        line = f"criterion {n}: {status}  {title}  ({secs:.1f}s)"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)


@pytest.fixture
def acceptance():
    return ACCEPTANCE
