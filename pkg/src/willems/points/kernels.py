"""Grid scan for candidate zeros of a polynomial system.

Points are encoded by a flat index into the grid V^n (V sorted ascending,
first coordinate most significant), so ascending indices are points in
lexicographic order.  The scan evaluates in float64 and keeps points whose
residual is tiny relative to the absolute term sum; callers re-verify
candidates exactly.

Two interchangeable backends: a numba-compiled loop and a chunked numpy
evaluation.  Setting ``WILLEMS_NO_NUMBA=1`` (or lacking numba) selects numpy.
"""
import os

import numpy as np

REL_TOL = 1e-9
CHUNK = 1 << 20

_numba_scan = None
if os.environ.get("WILLEMS_NO_NUMBA", "") not in ("1", "true", "yes"):
    try:
        from numba import njit
    except ImportError:  # pragma: no cover
        njit = None
    if njit is not None:

        @njit(cache=True)
        def _numba_scan(exps, coefs, offsets, powtab, n, k, start, stop, tol, out):
            count = 0
            ngen = offsets.shape[0] - 1
            digits = np.empty(n, dtype=np.int64)
            for idx in range(start, stop):
                r = idx
                for j in range(n - 1, -1, -1):
                    digits[j] = r % k
                    r //= k
                ok = True
                for g in range(ngen):
                    val = 0.0
                    scale = 0.0
                    for t in range(offsets[g], offsets[g + 1]):
                        term = coefs[t]
                        for j in range(n):
                            e = exps[t, j]
                            if e:
                                term *= powtab[digits[j], e]
                        val += term
                        scale += abs(term)
                    if abs(val) > tol * scale:
                        ok = False
                        break
                if ok:
                    out[count] = idx
                    count += 1
            return count


BACKEND = "numba" if _numba_scan is not None else "numpy"


def compile_system(polys, n):
    """Flatten rational polynomials into (exps, coefs, offsets) arrays."""
    exps, coefs, offsets = [], [], [0]
    for p in polys:
        for m, c in sorted(p.terms.items()):
            exps.append(m)
            coefs.append(float(c))
        offsets.append(len(coefs))
    exps = np.array(exps, dtype=np.int64).reshape(-1, n)
    return exps, np.array(coefs, dtype=np.float64), np.array(offsets, dtype=np.int64)


def power_table(values, maxdeg):
    v = np.array([float(x) for x in values], dtype=np.float64)
    tab = np.ones((len(v), maxdeg + 1), dtype=np.float64)
    for e in range(1, maxdeg + 1):
        tab[:, e] = tab[:, e - 1] * v
    return tab


def _numpy_chunk(exps, coefs, offsets, powtab, n, k, start, stop, tol):
    idx = np.arange(start, stop, dtype=np.int64)
    digits = np.empty((n, idx.size), dtype=np.int64)
    r = idx.copy()
    for j in range(n - 1, -1, -1):
        digits[j] = r % k
        r //= k
    keep = np.ones(idx.size, dtype=bool)
    for g in range(offsets.size - 1):
        val = np.zeros(idx.size)
        scale = np.zeros(idx.size)
        for t in range(offsets[g], offsets[g + 1]):
            term = np.full(idx.size, coefs[t])
            for j in range(n):
                e = exps[t, j]
                if e:
                    term = term * powtab[digits[j], e]
            val += term
            scale += np.abs(term)
        keep &= np.abs(val) <= tol * scale
    return idx[keep]


def scan(exps, coefs, offsets, powtab, n, k, start=0, stop=None, chunk=CHUNK, backend=None):
    """Ascending flat indices in [start, stop) that pass the float filter."""
    stop = k ** n if stop is None else stop
    backend = backend or BACKEND
    if backend == "numba" and _numba_scan is None:
        raise RuntimeError("numba backend requested but unavailable")
    parts = []
    for lo in range(start, stop, chunk):
        hi = min(stop, lo + chunk)
        if backend == "numba":
            buf = np.empty(hi - lo, dtype=np.int64)
            c = _numba_scan(exps, coefs, offsets, powtab, n, k, lo, hi, REL_TOL, buf)
            parts.append(buf[:c])
        else:
            parts.append(_numpy_chunk(exps, coefs, offsets, powtab, n, k, lo, hi, REL_TOL))
    return np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)


def decode(idx, n, k):
    digits = []
    for _ in range(n):
        digits.append(int(idx % k))
        idx //= k
    return digits[::-1]
