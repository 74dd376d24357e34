import pytest

from figutil import primary_cli_available, run_primary, write_synthetic_run


@pytest.fixture(scope="session")
def synthetic_run(tmp_path_factory):
    return write_synthetic_run(tmp_path_factory.mktemp("synthetic"))


@pytest.fixture(scope="session")
def synthetic_scan(tmp_path_factory):
    out_dir = tmp_path_factory.mktemp("scan")
    path = out_dir / "scan.csv"
    with path.open("w") as fh:
        fh.write("omega,t_zb,t_cl,t_r\n")
        for omega in (100.0, 1000.0, 10000.0):
            fh.write(f"{omega},{1e-4 / omega**0.1},{4e-2 * 1000 / omega},"
                     f"{40.0 * (1000 / omega)**2}\n")
    return path


def _preset_run(tmp_path_factory, preset, *extra):
    if not primary_cli_available():
        pytest.skip("diraczb CLI not installed")
    out = tmp_path_factory.mktemp(f"{preset}run")
    proc = run_primary("run", "--preset", preset, *extra, "--out-dir", str(out))
    assert proc.returncode == 0, proc.stderr
    return out


@pytest.fixture(scope="session")
def fig1_run(tmp_path_factory):
    return _preset_run(tmp_path_factory, "fig1", "--no-oracle")


@pytest.fixture(scope="session")
def fig2_run(tmp_path_factory):
    return _preset_run(tmp_path_factory, "fig2", "--no-oracle")


@pytest.fixture(scope="session")
def fig3_run(tmp_path_factory):
    return _preset_run(tmp_path_factory, "fig3", "--no-oracle")


@pytest.fixture(scope="session")
def fig4_run(tmp_path_factory):
    return _preset_run(tmp_path_factory, "fig4")
