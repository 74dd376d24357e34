from zbfigures.cli import main


def test_trace_command(synthetic_run, tmp_path, capsys):
    out = tmp_path / "fig.png"
    code = main(["trace", "--trace", str(synthetic_run / "trace.csv"),
                 "--metadata", str(synthetic_run / "metadata.json"),
                 "--revivals", str(synthetic_run / "revivals.json"),
                 "--out", str(out)])
    assert code == 0
    assert out.is_file()
    assert str(out) in capsys.readouterr().out


def test_trace_command_subset_panels(synthetic_run, tmp_path):
    out = tmp_path / "fig.png"
    assert main(["trace", "--trace", str(synthetic_run / "trace.csv"),
                 "--metadata", str(synthetic_run / "metadata.json"),
                 "--panels", "zb", "classical", "--out", str(out)]) == 0


def test_scan_command(synthetic_scan, tmp_path):
    out = tmp_path / "scan.png"
    assert main(["scan", "--scan", str(synthetic_scan), "--out", str(out)]) == 0
    assert out.is_file()


def test_bad_inputs_exit_2(synthetic_run, tmp_path):
    assert main(["trace", "--trace", "/missing.csv",
                 "--metadata", str(synthetic_run / "metadata.json"),
                 "--out", str(tmp_path / "f.png")]) == 2
    assert main(["trace", "--trace", str(synthetic_run / "trace.csv"),
                 "--metadata", str(synthetic_run / "metadata.json"),
                 "--panels", "bogus", "--out", str(tmp_path / "f.png")]) == 2
    assert main(["scan", "--scan", "/missing.csv", "--out", str(tmp_path / "f.png")]) == 2
