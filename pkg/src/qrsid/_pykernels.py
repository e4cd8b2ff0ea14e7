"""Pure-Python versions of the integer series kernels.

Every kernel works on plain lists of Python ints that hold the coefficients
of a power series in one variable, index = exponent.
"""


def mul_trunc(a, b, n):
    """First ``n`` coefficients of the product of ``a`` and ``b``."""
    la, lb = min(len(a), n), min(len(b), n)
    out = [0] * n
    if la == 0 or lb == 0:
        return out
    if la > lb:
        a, b, la, lb = b, a, lb, la
    for i in range(la):
        ai = a[i]
        if not ai:
            continue
        top = min(lb, n - i)
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def inv_unit(a, n):
    """Inverse of ``a`` modulo x^n; requires ``a[0]`` to be 1 or -1."""
    a0 = a[0]
    if a0 not in (1, -1):
        raise ValueError("leading coefficient must be a unit")
    if n <= 0:
        return []
    la = min(len(a), n)
    nz = [(i, a[i]) for i in range(1, la) if a[i]]
    out = [0] * n
    out[0] = a0
    for k in range(1, n):
        s = 0
        for i, ai in nz:
            if i > k:
                break
            s += ai * out[k - i]
        out[k] = -a0 * s
    return out


def div_binomial(a, c, s, n):
    """``a / (1 - c x^s)`` truncated to ``n`` terms (``c`` an int)."""
    out = list(a[:n]) + [0] * (n - len(a))
    if c == 0:
        return out
    for k in range(s, n):
        prev = out[k - s]
        if prev:
            out[k] += c * prev
    return out


def mul_binomial(a, c, s, n):
    """``a * (1 - c x^s)`` truncated to ``n`` terms (``c`` an int)."""
    out = list(a[:n]) + [0] * (n - len(a))
    if c == 0:
        return out
    for k in range(n - 1, s - 1, -1):
        prev = out[k - s]
        if prev:
            out[k] -= c * prev
    return out
