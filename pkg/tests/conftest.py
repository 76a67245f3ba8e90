import pytest

from degbern import identities


@pytest.fixture(scope="session")
def default_reports():
    """The whole catalog at default limits, run once per session."""
    return identities.run_suite()
