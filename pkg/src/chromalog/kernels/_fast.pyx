# Fused sRGB -> LUV -> nearest-bin kernels. Must stay arithmetically
# identical to _purepy (same operation order) so backends agree bit-for-bit.

import numpy as np

cimport numpy as cnp
from libc.math cimport pow

cnp.import_array()

cdef double ONE_THIRD = 1.0 / 3.0


cdef inline void _pixel_luv(const unsigned char[:, ::1] rgb, Py_ssize_t i,
                            const double[::1] lut, const double[::1] p,
                            double *out) noexcept nogil:
    cdef double lr = lut[rgb[i, 0]]
    cdef double lg = lut[rgb[i, 1]]
    cdef double lb = lut[rgb[i, 2]]
    cdef double x = lr * p[0] + lg * p[1] + lb * p[2]
    cdef double y = lr * p[3] + lg * p[4] + lb * p[5]
    cdef double z = lr * p[6] + lg * p[7] + lb * p[8]
    cdef double d = x + 15.0 * y + 3.0 * z
    cdef double yr, lstar, up, vp
    if d == 0.0:
        out[0] = 0.0
        out[1] = 0.0
        out[2] = 0.0
        return
    yr = y / p[9]
    if yr > p[12]:
        lstar = 116.0 * pow(yr, ONE_THIRD) - 16.0
    else:
        lstar = p[13] * yr
    up = 4.0 * x / d
    vp = 9.0 * y / d
    out[0] = lstar
    out[1] = 13.0 * lstar * (up - p[10])
    out[2] = 13.0 * lstar * (vp - p[11])


def rgb_to_luv(const unsigned char[:, ::1] rgb, const double[::1] lut, const double[::1] p):
    cdef Py_ssize_t n = rgb.shape[0]
    out_arr = np.empty((n, 3), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            _pixel_luv(rgb, i, lut, p, &out[i, 0])
    return out_arr


def assign(const unsigned char[:, ::1] rgb, const double[:, ::1] centers,
           const double[::1] lut, const double[::1] p):
    cdef Py_ssize_t n = rgb.shape[0]
    cdef Py_ssize_t nbins = centers.shape[0]
    out_arr = np.empty(n, dtype=np.int64)
    cdef cnp.int64_t[::1] out = out_arr
    cdef double luv[3]
    cdef double best, d2, dl, du, dv
    cdef Py_ssize_t i, k, arg
    with nogil:
        for i in range(n):
            _pixel_luv(rgb, i, lut, p, luv)
            arg = 0
            dl = luv[0] - centers[0, 0]
            du = luv[1] - centers[0, 1]
            dv = luv[2] - centers[0, 2]
            best = dl * dl + du * du + dv * dv
            for k in range(1, nbins):
                dl = luv[0] - centers[k, 0]
                du = luv[1] - centers[k, 1]
                dv = luv[2] - centers[k, 2]
                d2 = dl * dl + du * du + dv * dv
                if d2 < best:
                    best = d2
                    arg = k
            out[i] = arg
    return out_arr
