import numpy as np
import pytest
from PIL import Image

from zbfigures import (
    CHECKSUM_KEY,
    FigureSpec,
    InputError,
    build_scan_figure,
    build_trace_figure,
    joint_checksum,
    render_scan_figure,
    render_trace_figure,
)

from figutil import TIMESCALES, write_synthetic_run


def spec_for(run_dir, out, panels=("zb", "classical", "revival"), revivals=False):
    return FigureSpec(
        trace_csv=run_dir / "trace.csv",
        metadata_json=run_dir / "metadata.json",
        panels=tuple(panels),
        output=out,
        revivals_json=(run_dir / "revivals.json") if revivals else None,
    )


def test_three_stacked_panels(synthetic_run, tmp_path):
    fig, checksum = build_trace_figure(spec_for(synthetic_run, tmp_path / "f.png"))
    assert len(fig.axes) == 3
    assert checksum == joint_checksum([synthetic_run / "trace.csv",
                                       synthetic_run / "metadata.json"])


def test_marker_lines_at_period_multiples(synthetic_run, tmp_path):
    fig, _ = build_trace_figure(spec_for(synthetic_run, tmp_path / "f.png", panels=("zb",)))
    ax = fig.axes[0]
    # one trace line plus dotted verticals at k*t_zb, k = 1..5 inside [0, 6 t_zb)
    vlines = [ln for ln in ax.lines if ln.get_linestyle() == ":"]
    assert len(vlines) == 5
    positions = sorted(ln.get_xdata()[0] for ln in vlines)
    assert np.allclose(positions, TIMESCALES["t_zb"] * np.arange(1, 6), rtol=1e-12)


def test_empty_and_unknown_panels_rejected(synthetic_run, tmp_path):
    with pytest.raises(InputError, match="empty"):
        spec_for(synthetic_run, tmp_path / "f.png", panels=())
    with pytest.raises(InputError, match="unknown"):
        spec_for(synthetic_run, tmp_path / "f.png", panels=("zb", "bogus"))


def test_insufficient_coverage_rejected(tmp_path):
    short = write_synthetic_run(tmp_path / "short", span_factor=0.5)
    with pytest.raises(InputError, match="covers"):
        build_trace_figure(spec_for(short, tmp_path / "f.png", panels=("revival",)))


def test_revival_annotations(tmp_path):
    matched = write_synthetic_run(tmp_path / "ok", matched=True)
    missing = write_synthetic_run(tmp_path / "no", matched=False)
    fig, _ = build_trace_figure(spec_for(matched, tmp_path / "a.png",
                                         panels=("revival",), revivals=True))
    labels = [t.get_text() for t in fig.axes[0].texts]
    assert any("m=1: revival" in s for s in labels)
    fig, _ = build_trace_figure(spec_for(missing, tmp_path / "b.png",
                                         panels=("revival",), revivals=True))
    labels = [t.get_text() for t in fig.axes[0].texts]
    assert any("m=1: no revival" in s for s in labels)
    assert any("m=2: no revival" in s for s in labels)


def test_saved_png_embeds_checksum(synthetic_run, tmp_path):
    out = tmp_path / "fig.png"
    path = render_trace_figure(spec_for(synthetic_run, out, revivals=True))
    assert path == out and out.is_file()
    info = Image.open(out).info
    expected = joint_checksum([synthetic_run / "trace.csv",
                               synthetic_run / "metadata.json",
                               synthetic_run / "revivals.json"])
    assert info.get(CHECKSUM_KEY) == expected


def test_marker_period_override(synthetic_run, tmp_path):
    # classical panel marked with T_ZB multiples instead of its default T_CL
    spec = FigureSpec(
        trace_csv=synthetic_run / "trace.csv",
        metadata_json=synthetic_run / "metadata.json",
        panels=("classical",),
        output=tmp_path / "f.png",
        markers={"classical": "t_zb"},
    )
    fig, _ = build_trace_figure(spec)
    marks = sorted(ln.get_xdata()[0] for ln in fig.axes[0].lines
                   if ln.get_linestyle() == ":")
    assert np.allclose(np.diff(marks), TIMESCALES["t_zb"], rtol=1e-12)


def test_scan_rejects_bad_header(tmp_path):
    bad = tmp_path / "scan.csv"
    bad.write_text("w,a,b,c\n1,2,3,4\n")
    with pytest.raises(InputError, match="header"):
        build_scan_figure(bad, tmp_path / "s.png")


def test_scan_figure_three_curves(synthetic_scan, tmp_path):
    fig, _ = build_scan_figure(synthetic_scan, tmp_path / "s.png")
    ax = fig.axes[0]
    assert len(ax.lines) == 3
    assert ax.get_xscale() == "log" and ax.get_yscale() == "log"
    assert {t.get_text() for t in ax.get_legend().get_texts()} == {"T_ZB", "T_CL", "T_R"}


def test_scan_single_row_markers_only(tmp_path):
    path = tmp_path / "one.csv"
    path.write_text("omega,t_zb,t_cl,t_r\n1000,1e-4,1e-2,1.0\n")
    fig, _ = build_scan_figure(path, tmp_path / "s.png")
    for line in fig.axes[0].lines:
        assert line.get_linestyle() == "None"
        assert line.get_marker() != ""


def test_scan_render_saves(synthetic_scan, tmp_path):
    out = render_scan_figure(synthetic_scan, tmp_path / "scan.png")
    assert out.is_file()
    assert CHECKSUM_KEY in Image.open(out).info
