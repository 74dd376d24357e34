"""Publication-style figures for diraczb trace/scan/revival output files."""

__version__ = "0.1.0"

from .io import (
    InputError,
    joint_checksum,
    read_metadata,
    read_revivals,
    read_scan_csv,
    read_trace_csv,
)
from .render import (
    CHECKSUM_KEY,
    PANELS,
    FigureSpec,
    build_scan_figure,
    build_trace_figure,
    render_scan_figure,
    render_trace_figure,
)

__all__ = [name for name in dir() if not name.startswith("_")]
