# cython: language_level=3
"""Compiled Monte Carlo kernel for link STP / expected-throughput estimates.

Same sampling model as the numpy fallback; uses an inline xoshiro256++ RNG
with the Marsaglia polar method so one call never touches Python objects
inside the sample loop.
"""

from libc.math cimport log, log2, sqrt


cdef extern from *:
    """
    #include <stdint.h>

    typedef struct { uint64_t s0, s1, s2, s3; } xoshiro_t;

    static inline uint64_t splitmix64_next(uint64_t *state) {
        uint64_t z = (*state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static inline void xoshiro_seed(xoshiro_t *st, uint64_t seed) {
        uint64_t sm = seed;
        st->s0 = splitmix64_next(&sm);
        st->s1 = splitmix64_next(&sm);
        st->s2 = splitmix64_next(&sm);
        st->s3 = splitmix64_next(&sm);
    }

    static inline uint64_t rotl64(uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    static inline uint64_t xoshiro_next(xoshiro_t *st) {
        uint64_t result = rotl64(st->s0 + st->s3, 23) + st->s0;
        uint64_t t = st->s1 << 17;
        st->s2 ^= st->s0;
        st->s3 ^= st->s1;
        st->s1 ^= st->s2;
        st->s0 ^= st->s3;
        st->s2 ^= t;
        st->s3 = rotl64(st->s3, 45);
        return result;
    }

    static inline double xoshiro_uniform(xoshiro_t *st) {
        return (xoshiro_next(st) >> 11) * (1.0 / 9007199254740992.0);
    }
    """
    ctypedef struct xoshiro_t:
        unsigned long long s0, s1, s2, s3
    void xoshiro_seed(xoshiro_t *st, unsigned long long seed) nogil
    double xoshiro_uniform(xoshiro_t *st) nogil


cdef struct gauss_state_t:
    double spare
    bint has_spare


cdef inline double _normal(xoshiro_t *rng, gauss_state_t *gs) nogil:
    cdef double u, v, s, m
    if gs.has_spare:
        gs.has_spare = False
        return gs.spare
    while True:
        u = 2.0 * xoshiro_uniform(rng) - 1.0
        v = 2.0 * xoshiro_uniform(rng) - 1.0
        s = u * u + v * v
        if 0.0 < s < 1.0:
            break
    m = sqrt(-2.0 * log(s) / s)
    gs.spare = v * m
    gs.has_spare = True
    return u * m


cdef inline double _amplitude_gain(xoshiro_t *rng, gauss_state_t *gs,
                                   double p_los, double g_los, double g_nlos,
                                   double nu, double sigma) nogil:
    cdef double a, b
    if xoshiro_uniform(rng) < p_los:
        a = nu + sigma * _normal(rng, gs)
        b = sigma * _normal(rng, gs)
        return g_los * sqrt(a * a + b * b)
    return g_nlos * sqrt(-2.0 * log(1.0 - xoshiro_uniform(rng)))


def link_stp_er(double p_los, double g_los, double g_nlos, double k_rice,
                double[::1] i_p_los, double[::1] i_g_los,
                double[::1] i_g_nlos, double[::1] i_k_rice,
                double p_u, double n0, double r_th,
                Py_ssize_t samples, unsigned long long seed):
    """Return (stp, er) for one link given its co-channel interferer set."""
    if samples <= 0:
        raise ValueError("samples must be positive")
    cdef Py_ssize_t nw = i_p_los.shape[0]
    if nw > 64:
        raise ValueError("too many interferers for the compiled kernel")

    cdef double own_nu = sqrt(k_rice / (k_rice + 1.0))
    cdef double own_sigma = sqrt(0.5 / (k_rice + 1.0))
    cdef double[64] w_nu
    cdef double[64] w_sigma
    cdef Py_ssize_t w, s
    for w in range(nw):
        w_nu[w] = sqrt(i_k_rice[w] / (i_k_rice[w] + 1.0))
        w_sigma[w] = sqrt(0.5 / (i_k_rice[w] + 1.0))

    cdef xoshiro_t rng
    cdef gauss_state_t gs
    gs.spare = 0.0
    gs.has_spare = False
    xoshiro_seed(&rng, seed)

    cdef double signal, denom, rate
    cdef double er_sum = 0.0
    cdef Py_ssize_t hits = 0
    with nogil:
        for s in range(samples):
            signal = p_u * _amplitude_gain(&rng, &gs, p_los, g_los, g_nlos,
                                           own_nu, own_sigma)
            denom = n0
            for w in range(nw):
                denom += p_u * _amplitude_gain(&rng, &gs, i_p_los[w],
                                               i_g_los[w], i_g_nlos[w],
                                               w_nu[w], w_sigma[w])
            rate = log2(1.0 + signal / denom)
            if rate > r_th:
                hits += 1
                er_sum += rate
    return hits / <double>samples, er_sum / <double>samples
