# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact kernels.

Same API and semantics as _kernel_py. Inputs whose magnitudes provably
keep every intermediate below 2^62 run on C 64-bit integers; everything
else is handed to the pure-Python implementation, which is the semantic
reference and always correct. Results are identical either way.
"""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.limits cimport LLONG_MIN

from . import _kernel_py as _obj

cdef long long _LIMIT_ENTRY = (<long long>1) << 26
cdef long long _LIMIT_DEN = (<long long>1) << 30


cdef inline long long _ll_abs(long long v) noexcept nogil:
    return -v if v < 0 else v


cdef long long _ll_gcd(long long a, long long b) noexcept nogil:
    cdef long long t
    a = _ll_abs(a)
    b = _ll_abs(b)
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef long long _fill(list vals, long long* buf, Py_ssize_t n) except? -1:
    """Copy Python ints into buf; returns max |entry| or raises OverflowError."""
    cdef Py_ssize_t k
    cdef long long v, m = 0
    for k in range(n):
        v = vals[k]
        buf[k] = v
        if v == LLONG_MIN:
            raise OverflowError
        v = _ll_abs(v)
        if v > m:
            m = v
    return m


cdef list _box(long long* buf, Py_ssize_t n):
    cdef Py_ssize_t k
    out = [0] * n
    for k in range(n):
        out[k] = buf[k]
    return out


cdef void _norm_ll(long long* den, long long* re, long long* im, Py_ssize_t n) noexcept nogil:
    cdef long long g, d = den[0]
    cdef Py_ssize_t k
    if d < 0:
        d = -d
        for k in range(n):
            re[k] = -re[k]
            im[k] = -im[k]
    g = d
    for k in range(n):
        if re[k] != 0:
            g = _ll_gcd(g, re[k])
            if g == 1:
                den[0] = d
                return
    for k in range(n):
        if im[k] != 0:
            g = _ll_gcd(g, im[k])
            if g == 1:
                den[0] = d
                return
    if g == 0:
        den[0] = 1
        return
    if g > 1:
        d //= g
        for k in range(n):
            re[k] //= g
            im[k] //= g
    den[0] = d


def normalize(den, re, im):
    cdef Py_ssize_t n = len(re)
    cdef long long cden
    cdef long long* buf
    try:
        cden = den
        if _ll_abs(cden) >= _LIMIT_DEN * _LIMIT_DEN:
            return _obj.normalize(den, re, im)
    except OverflowError:
        return _obj.normalize(den, re, im)
    buf = <long long*> PyMem_Malloc(2 * n * sizeof(long long))
    if buf == NULL:
        raise MemoryError
    try:
        _fill(re, buf, n)
        _fill(im, buf + n, n)
    except OverflowError:
        PyMem_Free(buf)
        return _obj.normalize(den, re, im)
    try:
        _norm_ll(&cden, buf, buf + n, n)
        return cden, _box(buf, n), _box(buf + n, n)
    finally:
        PyMem_Free(buf)


def mat_add(d, a, b):
    return _addsub(d, a, b, 1)


def mat_sub(d, a, b):
    return _addsub(d, a, b, -1)


cdef _addsub(Py_ssize_t d, a, b, long long sign):
    cdef Py_ssize_t n = d * d, k
    cdef long long cda, cdb, ma, mb, mia, mib, den
    da, ra, ia = a
    db, rb, ib = b
    cdef long long* buf = <long long*> PyMem_Malloc(6 * n * sizeof(long long))
    if buf == NULL:
        raise MemoryError
    try:
        try:
            cda = da
            cdb = db
            ma = _fill(ra, buf, n)
            mia = _fill(ia, buf + n, n)
            mb = _fill(rb, buf + 2 * n, n)
            mib = _fill(ib, buf + 3 * n, n)
        except OverflowError:
            return _obj.mat_add(d, a, b) if sign > 0 else _obj.mat_sub(d, a, b)
        if mia > ma:
            ma = mia
        if mib > mb:
            mb = mib
        if cda >= _LIMIT_DEN or cdb >= _LIMIT_DEN or ma >= _LIMIT_DEN or mb >= _LIMIT_DEN:
            return _obj.mat_add(d, a, b) if sign > 0 else _obj.mat_sub(d, a, b)
        for k in range(n):
            buf[4 * n + k] = buf[k] * cdb + sign * buf[2 * n + k] * cda
            buf[5 * n + k] = buf[n + k] * cdb + sign * buf[3 * n + k] * cda
        den = cda * cdb
        _norm_ll(&den, buf + 4 * n, buf + 5 * n, n)
        return den, _box(buf + 4 * n, n), _box(buf + 5 * n, n)
    finally:
        PyMem_Free(buf)


def mat_scale(d, a, num_re, num_im, num_den):
    cdef Py_ssize_t n = (<Py_ssize_t>d) * (<Py_ssize_t>d), k
    cdef long long cda, cnr, cni, cnd, ma, mia, mn, den
    da, ra, ia = a
    cdef long long* buf = <long long*> PyMem_Malloc(4 * n * sizeof(long long))
    if buf == NULL:
        raise MemoryError
    try:
        try:
            cda = da
            cnr = num_re
            cni = num_im
            cnd = num_den
            ma = _fill(ra, buf, n)
            mia = _fill(ia, buf + n, n)
        except OverflowError:
            return _obj.mat_scale(d, a, num_re, num_im, num_den)
        if mia > ma:
            ma = mia
        mn = _ll_abs(cnr)
        if _ll_abs(cni) > mn:
            mn = _ll_abs(cni)
        if (cda >= _LIMIT_DEN or _ll_abs(cnd) >= _LIMIT_DEN or ma >= _LIMIT_DEN
                or mn >= _LIMIT_DEN):
            return _obj.mat_scale(d, a, num_re, num_im, num_den)
        for k in range(n):
            buf[2 * n + k] = buf[k] * cnr - buf[n + k] * cni
            buf[3 * n + k] = buf[k] * cni + buf[n + k] * cnr
        den = cda * cnd
        _norm_ll(&den, buf + 2 * n, buf + 3 * n, n)
        return den, _box(buf + 2 * n, n), _box(buf + 3 * n, n)
    finally:
        PyMem_Free(buf)


def mat_mul(d, a, b):
    cdef Py_ssize_t cd = d, n = cd * cd, i, j, k, ioff, koff
    cdef long long cda, cdb, ma, mb, mia, mib, den, avr, avi
    cdef bint a_real, b_real
    da, ra, ia = a
    db, rb, ib = b
    if cd > 64:
        return _obj.mat_mul(d, a, b)
    cdef long long* buf = <long long*> PyMem_Malloc(6 * n * sizeof(long long))
    if buf == NULL:
        raise MemoryError
    try:
        try:
            cda = da
            cdb = db
            ma = _fill(ra, buf, n)
            mia = _fill(ia, buf + n, n)
            mb = _fill(rb, buf + 2 * n, n)
            mib = _fill(ib, buf + 3 * n, n)
        except OverflowError:
            return _obj.mat_mul(d, a, b)
        if mia > ma:
            ma = mia
        if mib > mb:
            mb = mib
        # accumulator bound: 2 * d * ma * mb < 2^62 given ma, mb < 2^26, d <= 64
        if cda >= _LIMIT_DEN or cdb >= _LIMIT_DEN or ma >= _LIMIT_ENTRY or mb >= _LIMIT_ENTRY:
            return _obj.mat_mul(d, a, b)
        a_real = mia == 0
        b_real = mib == 0
        for k in range(2 * n):
            buf[4 * n + k] = 0
        if a_real and b_real:
            for i in range(cd):
                ioff = i * cd
                for k in range(cd):
                    avr = buf[ioff + k]
                    if avr != 0:
                        koff = k * cd
                        for j in range(cd):
                            buf[4 * n + ioff + j] += avr * buf[2 * n + koff + j]
        else:
            for i in range(cd):
                ioff = i * cd
                for k in range(cd):
                    avr = buf[ioff + k]
                    avi = buf[n + ioff + k]
                    if avr != 0 or avi != 0:
                        koff = k * cd
                        for j in range(cd):
                            buf[4 * n + ioff + j] += (
                                avr * buf[2 * n + koff + j] - avi * buf[3 * n + koff + j]
                            )
                            buf[5 * n + ioff + j] += (
                                avr * buf[3 * n + koff + j] + avi * buf[2 * n + koff + j]
                            )
        den = cda * cdb
        _norm_ll(&den, buf + 4 * n, buf + 5 * n, n)
        return den, _box(buf + 4 * n, n), _box(buf + 5 * n, n)
    finally:
        PyMem_Free(buf)


def mat_pow(d, a, k):
    cdef Py_ssize_t cd = d, i
    cdef long long kk = k
    re = [0] * (cd * cd)
    for i in range(cd):
        re[i * cd + i] = 1
    out = (1, re, [0] * (cd * cd))
    base = a
    while kk:
        if kk & 1:
            out = mat_mul(d, out, base)
        base = mat_mul(d, base, base)
        kk >>= 1
    return out


def charpoly_ints(d, re, im):
    cdef Py_ssize_t cd = d, n = cd * cd, i, j, kk, koff, ioff
    cdef long long ma, mia, tr_re, tr_im, ck_re, ck_im, avr, avi
    cdef int step
    if cd > 8:
        return _obj.charpoly_ints(d, re, im)
    cdef long long abuf_re[64]
    cdef long long abuf_im[64]
    cdef long long mre[64]
    cdef long long mim[64]
    cdef long long amre[64]
    cdef long long amim[64]
    cdef long long bre[9]
    cdef long long bim[9]
    try:
        ma = _fill(re, abuf_re, n)
        mia = _fill(im, abuf_im, n)
    except OverflowError:
        return _obj.charpoly_ints(d, re, im)
    if mia > ma:
        ma = mia
    # every intermediate is bounded by (4*d*d*(ma+1))^d; see the growth
    # argument in the pure kernel's history: |M_{k+1}| <= 2d * (2d*ma) * |M_k|
    if (4 * d * d * (int(ma) + 1)) ** d >= (1 << 60):
        return _obj.charpoly_ints(d, re, im)
    for i in range(cd + 1):
        bre[i] = 0
        bim[i] = 0
    bre[0] = 1
    for i in range(n):
        mre[i] = 0
        mim[i] = 0
    for i in range(cd):
        mre[i * cd + i] = 1
    for step in range(1, cd + 1):
        for i in range(n):
            amre[i] = 0
            amim[i] = 0
        for i in range(cd):
            ioff = i * cd
            for kk in range(cd):
                avr = abuf_re[ioff + kk]
                avi = abuf_im[ioff + kk]
                if avr != 0 or avi != 0:
                    koff = kk * cd
                    for j in range(cd):
                        amre[ioff + j] += avr * mre[koff + j] - avi * mim[koff + j]
                        amim[ioff + j] += avr * mim[koff + j] + avi * mre[koff + j]
        tr_re = 0
        tr_im = 0
        for i in range(cd):
            tr_re += amre[i * cd + i]
            tr_im += amim[i * cd + i]
        if tr_re % step != 0 or tr_im % step != 0:
            raise AssertionError("trace not divisible in exact charpoly")
        ck_re = -(tr_re // step)
        ck_im = -(tr_im // step)
        bre[step] = ck_re
        bim[step] = ck_im
        if step < cd:
            for i in range(n):
                mre[i] = amre[i]
                mim[i] = amim[i]
            for i in range(cd):
                mre[i * cd + i] += ck_re
                mim[i * cd + i] += ck_im
    cre = [0] * (cd + 1)
    cim = [0] * (cd + 1)
    for j in range(cd + 1):
        cre[j] = bre[cd - j]
        cim[j] = bim[cd - j]
    return cre, cim


def echelon(nrows, ncols, re, im):
    # Bareiss intermediates grow past 64 bits too easily to bound cheaply;
    # exactness beats speed here
    return _obj.echelon(nrows, ncols, re, im)
