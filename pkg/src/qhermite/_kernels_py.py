"""Pure-Python integer polynomial kernels.

Coefficient lists are little-endian (index = exponent offset) and hold
Python ints. ``mul`` switches to Kronecker substitution for long inputs so
the work lands in CPython's bigint multiplication.
"""

NAME = "python"

_KRONECKER_MIN = 12


def _pack(coeffs, bits):
    v = 0
    for c in reversed(coeffs):
        v = (v << bits) + c
    return v


def _unpack(v, bits, n):
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    full = 1 << bits
    out = [0] * n
    for i in range(n):
        d = v & mask
        if d >= half:
            d -= full
        out[i] = d
        v = (v - d) >> bits
    return out


def _schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def mul(a, b):
    """Product of two integer polynomials given as coefficient lists."""
    if not a or not b:
        return []
    if min(len(a), len(b)) < _KRONECKER_MIN:
        return _schoolbook(a, b)
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    prod = _pack(a, bits) * _pack(b, bits)
    return _unpack(prod, bits, len(a) + len(b) - 1)


def divexact(a, b):
    """Quotient a / b over the integers, or None if it is not exact there.

    ``b`` must be nonzero with a nonzero last coefficient.
    """
    na, nb = len(a), len(b)
    if na == 0:
        return []
    if na < nb:
        return None
    r = list(a)
    lead = b[-1]
    q = [0] * (na - nb + 1)
    for i in range(na - nb, -1, -1):
        t = r[i + nb - 1]
        if t:
            c, rem = divmod(t, lead)
            if rem:
                return None
            q[i] = c
            for j in range(nb):
                if b[j]:
                    r[i + j] -= c * b[j]
    if any(r):
        return None
    return q
