import pytest

from diraczb import PhysicalParams, build_truncated_model

from helpers import make_preset_packet


@pytest.fixture(scope="session")
def params1000():
    return PhysicalParams(omega=1e3)


@pytest.fixture(scope="session")
def fig1():
    return make_preset_packet("fig1")


@pytest.fixture(scope="session")
def fig2():
    return make_preset_packet("fig2")


@pytest.fixture(scope="session")
def fig3():
    return make_preset_packet("fig3")


@pytest.fixture(scope="session")
def fig1_model(fig1):
    packet, params, _ = fig1
    return build_truncated_model(params, packet.n_max + 2)
