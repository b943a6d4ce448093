"""Pure-numpy Monte Carlo kernel for link STP / expected-throughput estimates.

Fallback used when the compiled extension is unavailable; both backends
implement the same sampling model (per-sample LoS state selects the matching
gain and fading law) and are statistically interchangeable.
"""

from __future__ import annotations

import math

import numpy as np


def _draw_amplitude_gain(rng, p_los, g_los, g_nlos, k_rice, samples):
    los = rng.random(samples) < p_los
    nu = math.sqrt(k_rice / (k_rice + 1.0))
    sigma = math.sqrt(0.5 / (k_rice + 1.0))
    rice = np.hypot(nu + sigma * rng.standard_normal(samples),
                    sigma * rng.standard_normal(samples))
    rayleigh = np.sqrt(-2.0 * np.log(1.0 - rng.random(samples)))
    return np.where(los, g_los * rice, g_nlos * rayleigh)


def link_stp_er(own, interferers, p_u, n0, r_th, samples, seed):
    """Estimate (STP, expected throughput) of one link by joint fading draws.

    ``own`` and each interferer are (p_los, g_los, g_nlos, k_rice) tuples for
    the path to this link's receiver.
    """
    if samples <= 0:
        raise ValueError("samples must be positive")
    rng = np.random.default_rng(seed)
    signal = p_u * _draw_amplitude_gain(rng, *own, samples)
    denom = np.full(samples, n0)
    for itf in interferers:
        denom += p_u * _draw_amplitude_gain(rng, *itf, samples)
    rate = np.log2(1.0 + signal / denom)
    ok = rate > r_th
    stp = float(np.count_nonzero(ok)) / samples
    er = float(np.where(ok, rate, 0.0).sum()) / samples
    return stp, er
