import numpy as np

from diraczb import PacketSpec, PhysicalParams, build_packet, compute_timescales, recommend_cutoff
from diraczb.presets import TRACE_PRESETS


def make_preset_packet(name):
    """Packet + params + timescales for a named preset, recommended cutoff."""
    preset = TRACE_PRESETS[name]
    params = PhysicalParams(omega=preset.omega)
    n_max = recommend_cutoff(preset.n0, preset.sigma)
    packet = build_packet(PacketSpec(preset.n0, preset.sigma, n_max), params)
    return packet, params, compute_timescales(params, preset.n0)


def count_local_maxima(values) -> int:
    v = np.asarray(values)
    return int(np.sum((v[1:-1] > v[:-2]) & (v[1:-1] > v[2:])))
