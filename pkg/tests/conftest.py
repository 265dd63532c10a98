import pytest

from hbounds.io import bundled


@pytest.fixture(scope="session")
def A1():
    return bundled("A1")


@pytest.fixture(scope="session")
def A2():
    return bundled("A2")


@pytest.fixture(scope="session")
def counterexample():
    return bundled("counterexample")


def pytest_terminal_summary(terminalreporter):
    from helpers import ACCEPTANCE

    if not ACCEPTANCE:
        return
    by_criterion = {}
    for crit, label, ok, detail in ACCEPTANCE:
        by_criterion.setdefault(crit, []).append((label, ok, detail))
    terminalreporter.write_sep("=", "acceptance criteria")
    for crit in sorted(by_criterion):
        parts = by_criterion[crit]
        verdict = "PASS" if all(ok for _, ok, _ in parts) else "FAIL"
        terminalreporter.write_line(f"{verdict}  criterion {crit:>2}")
        for label, ok, detail in parts:
            mark = "ok  " if ok else "FAIL"
            terminalreporter.write_line(f"        {mark} {label}" + (f": {detail}" if detail else ""))
