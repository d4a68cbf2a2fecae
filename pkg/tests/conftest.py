import pytest
from hypothesis import HealthCheck, settings

from grigorchuk import parse_omega

settings.register_profile(
    "det",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("det")

SUITE_SPECS = ("012", "01", "02", "2:01", "10:012")


@pytest.fixture(scope="session")
def suite():
    return tuple(parse_omega(s) for s in SUITE_SPECS)


@pytest.fixture(scope="session")
def omega012():
    return parse_omega("012")
