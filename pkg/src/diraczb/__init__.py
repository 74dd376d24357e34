"""Trembling-motion (Zitterbewegung) revivals of a bound Dirac particle.

Simulation and analysis toolkit for the (2+1)-dimensional Dirac oscillator:
localized two-branch wave packets, closed-form and dense-matrix velocity
dynamics, characteristic time scales, and envelope/revival detection.
"""

__version__ = "0.1.0"

from .analysis import (
    Envelope,
    RevivalEvent,
    RevivalReport,
    decreasing_prefix,
    detect_revivals,
    quasiclassical_decay,
    revival_report_json,
    zb_envelope,
)
from .dynamics import (
    TimeGrid,
    Trace,
    autocorrelation,
    evolve_state,
    expectation_velocity_oracle,
    expectation_velocity_y_oracle,
    fit_proportionality,
    sample_trace,
    velocity_x_closed,
    velocity_y,
    write_trace_csv,
)
from .errors import ContractError, CoverageError, SamplingError, TruncationError
from .model import (
    LOWER,
    SPEED_OF_LIGHT,
    UPPER,
    Branch,
    PhysicalParams,
    SpinorWeights,
    TruncatedModel,
    basis_index,
    build_truncated_model,
    eigenspinor,
    eigenspinor_vector,
    energy,
    spinor_weights,
    velocity_y_matrix,
    xi,
)
from .packet import (
    PacketSpec,
    WavePacket,
    build_packet,
    gaussian_coefficients,
    recommend_cutoff,
)
from .timescales import (
    DerivativeCheck,
    TimeScales,
    classical_period,
    compute_timescales,
    derivative_consistency_check,
    default_scan_omegas,
    omega_scan,
    revival_time,
    write_scan_csv,
    zb_period,
)

__all__ = [name for name in dir() if not name.startswith("_")]
