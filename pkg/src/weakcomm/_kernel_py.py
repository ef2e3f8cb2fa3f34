"""Pure-Python exact kernels.

Matrices are carried in a normalized flat representation: a triple
``(den, re, im)`` where ``den`` is a positive int, ``re`` and ``im`` are
row-major lists of ints of length d*d, and gcd(den, content) == 1. The
represented matrix is (RE + i*IM) / den. The compiled backend implements
the same functions with the same semantics.
"""

from __future__ import annotations

from math import gcd


def normalize(den, re, im):
    if den < 0:
        den = -den
        re = [-v for v in re]
        im = [-v for v in im]
    g = den
    for v in re:
        if v:
            g = gcd(g, v)
            if g == 1:
                return den, re, im
    for v in im:
        if v:
            g = gcd(g, v)
            if g == 1:
                return den, re, im
    if g == 0:
        return 1, re, im
    if g > 1:
        den //= g
        re = [v // g for v in re]
        im = [v // g for v in im]
    return den, re, im


def mat_add(d, a, b):
    da, ra, ia = a
    db, rb, ib = b
    re = [ra[k] * db + rb[k] * da for k in range(d * d)]
    im = [ia[k] * db + ib[k] * da for k in range(d * d)]
    return normalize(da * db, re, im)


def mat_sub(d, a, b):
    da, ra, ia = a
    db, rb, ib = b
    re = [ra[k] * db - rb[k] * da for k in range(d * d)]
    im = [ia[k] * db - ib[k] * da for k in range(d * d)]
    return normalize(da * db, re, im)


def mat_scale(d, a, num_re, num_im, num_den):
    da, ra, ia = a
    re = [ra[k] * num_re - ia[k] * num_im for k in range(d * d)]
    im = [ra[k] * num_im + ia[k] * num_re for k in range(d * d)]
    return normalize(da * num_den, re, im)


def mat_mul(d, a, b):
    da, ra, ia = a
    db, rb, ib = b
    n = d * d
    re = [0] * n
    im = [0] * n
    a_real = not any(ia)
    b_real = not any(ib)
    if a_real and b_real:
        for i in range(d):
            ioff = i * d
            for k in range(d):
                av = ra[ioff + k]
                if av:
                    koff = k * d
                    for j in range(d):
                        re[ioff + j] += av * rb[koff + j]
    else:
        for i in range(d):
            ioff = i * d
            for k in range(d):
                avr = ra[ioff + k]
                avi = ia[ioff + k]
                if avr or avi:
                    koff = k * d
                    for j in range(d):
                        bvr = rb[koff + j]
                        bvi = ib[koff + j]
                        re[ioff + j] += avr * bvr - avi * bvi
                        im[ioff + j] += avr * bvi + avi * bvr
    return normalize(da * db, re, im)


def mat_pow(d, a, k):
    den = 1
    re = [0] * (d * d)
    im = [0] * (d * d)
    for i in range(d):
        re[i * d + i] = 1
    out = (den, re, im)
    base = a
    while k:
        if k & 1:
            out = mat_mul(d, out, base)
        base = mat_mul(d, base, base)
        k >>= 1
    return out


def charpoly_ints(d, re, im):
    """Faddeev-LeVerrier over the Gaussian integers.

    Input: an integer matrix (flat re/im of length d*d, no denominator).
    Output: ascending coefficient lists (cre, cim) of det(lambda*I - A),
    length d+1, monic. All intermediate divisions are exact.
    """
    n = d * d
    # descending coefficients b_0..b_d with b_0 = 1
    bre = [0] * (d + 1)
    bim = [0] * (d + 1)
    bre[0] = 1
    mre = [0] * n
    mim = [0] * n
    for i in range(d):
        mre[i * d + i] = 1
    for k in range(1, d + 1):
        # AM = A*M, plain integer matmul
        amre = [0] * n
        amim = [0] * n
        for i in range(d):
            ioff = i * d
            for kk in range(d):
                avr = re[ioff + kk]
                avi = im[ioff + kk]
                if avr or avi:
                    koff = kk * d
                    for j in range(d):
                        amre[ioff + j] += avr * mre[koff + j] - avi * mim[koff + j]
                        amim[ioff + j] += avr * mim[koff + j] + avi * mre[koff + j]
        tr_re = sum(amre[i * d + i] for i in range(d))
        tr_im = sum(amim[i * d + i] for i in range(d))
        assert tr_re % k == 0 and tr_im % k == 0
        ck_re = -(tr_re // k)
        ck_im = -(tr_im // k)
        bre[k] = ck_re
        bim[k] = ck_im
        if k < d:
            mre = amre
            mim = amim
            for i in range(d):
                mre[i * d + i] += ck_re
                mim[i * d + i] += ck_im
    # ascending order: coefficient of lambda^j is b_{d-j}
    cre = [bre[d - j] for j in range(d + 1)]
    cim = [bim[d - j] for j in range(d + 1)]
    return cre, cim


def _gdiv_exact(xr, xi, pr, pi):
    # exact division of Gaussian integers: (xr+xi*i) / (pr+pi*i)
    nrm = pr * pr + pi * pi
    qr = xr * pr + xi * pi
    qi = xi * pr - xr * pi
    assert qr % nrm == 0 and qi % nrm == 0
    return qr // nrm, qi // nrm


def echelon(nrows, ncols, re, im):
    """Fraction-free Bareiss elimination over the Gaussian integers.

    Input: flat row-major integer matrix. Returns (rank, pivots, ere, eim)
    where pivots lists the pivot column of each of the first `rank` rows of
    the echelon form.
    """
    r = [list(re[i * ncols:(i + 1) * ncols]) for i in range(nrows)]
    m = [list(im[i * ncols:(i + 1) * ncols]) for i in range(nrows)]
    prev_r, prev_i = 1, 0
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        p = -1
        for rr in range(row, nrows):
            if r[rr][col] or m[rr][col]:
                p = rr
                break
        if p < 0:
            continue
        if p != row:
            r[row], r[p] = r[p], r[row]
            m[row], m[p] = m[p], m[row]
        pr = r[row][col]
        pi = m[row][col]
        for rr in range(row + 1, nrows):
            fr = r[rr][col]
            fi = m[rr][col]
            for cc in range(col + 1, ncols):
                xr = (pr * r[rr][cc] - pi * m[rr][cc]) - (fr * r[row][cc] - fi * m[row][cc])
                xi = (pr * m[rr][cc] + pi * r[rr][cc]) - (fr * m[row][cc] + fi * r[row][cc])
                if prev_r != 1 or prev_i != 0:
                    xr, xi = _gdiv_exact(xr, xi, prev_r, prev_i)
                r[rr][cc] = xr
                m[rr][cc] = xi
            r[rr][col] = 0
            m[rr][col] = 0
        prev_r, prev_i = pr, pi
        pivots.append(col)
        row += 1
    ere = [v for rowvals in r for v in rowvals]
    eim = [v for rowvals in m for v in rowvals]
    return row, pivots, ere, eim
