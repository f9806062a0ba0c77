import pytest

from pgroupcoh.catalog import build_catalog

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def cat33():
    return build_catalog(3, 3)


@pytest.fixture(scope="session")
def cat34():
    return build_catalog(3, 4)


@pytest.fixture(scope="session")
def oracle_report():
    from pgroupcoh.verify import oracle_compare

    return oracle_compare()


@pytest.fixture(scope="session")
def properties_report():
    from pgroupcoh.verify import verify_properties

    return verify_properties(seed=0)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
