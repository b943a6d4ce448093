"""Monte Carlo backend selection: compiled extension if built, numpy otherwise.

Set ``AOI_UAV_SIM_PUREPY=1`` to force the pure-Python path (used by the
backend-comparison benchmark and tests).
"""

from __future__ import annotations

import os

import numpy as np

from . import _mc_numpy

if os.environ.get("AOI_UAV_SIM_PUREPY") == "1":
    _ext = None
else:
    try:
        from . import _mc_ext as _ext  # type: ignore[attr-defined]
    except ImportError:
        _ext = None

HAVE_EXT = _ext is not None
BACKEND_NAME = "cython" if HAVE_EXT else "numpy"


def mc_link_stats(own, interferers, p_u, n0, r_th, samples, seed,
                  force_numpy=False):
    """(stp, er) of a link; ``own``/``interferers`` are
    (p_los, g_los, g_nlos, k_rice) parameter tuples."""
    if _ext is None or force_numpy:
        return _mc_numpy.link_stp_er(own, interferers, p_u, n0, r_th,
                                     samples, seed)
    nw = len(interferers)
    i_p = np.empty(nw)
    i_gl = np.empty(nw)
    i_gn = np.empty(nw)
    i_k = np.empty(nw)
    for idx, (p_los, g_los, g_nlos, k_rice) in enumerate(interferers):
        i_p[idx] = p_los
        i_gl[idx] = g_los
        i_gn[idx] = g_nlos
        i_k[idx] = k_rice
    return _ext.link_stp_er(own[0], own[1], own[2], own[3],
                            i_p, i_gl, i_gn, i_k,
                            p_u, n0, r_th, samples, seed)
