"""Pure-Python cyclic Jacobi kernel.

Fallback for platforms where the compiled extension is unavailable. The
arithmetic mirrors ``_jacobi.pyx`` operation for operation (and that module
is compiled with floating-point contraction disabled), so the two backends
produce identical results up to, at worst, the last bit.
"""

from __future__ import annotations

import math


def cycle_sweeps(a, v, tol_off, max_sweeps):
    """Run cyclic Jacobi sweeps on the symmetric matrix ``a`` in place.

    ``a`` and ``v`` are square C-contiguous float64 numpy arrays; ``v`` must
    come in as the identity and accumulates the rotations, so on exit its
    columns hold the eigenvector basis for the (near-)diagonal ``a``.
    Returns ``(sweeps_run, off_norm)`` where ``off_norm`` is the Frobenius
    norm of the off-diagonal part. Convergence checking is left to the
    caller; this function never raises.
    """
    n = a.shape[0]
    am = a.tolist()
    vm = v.tolist()
    off = _off_norm(am, n)
    sweeps = 0
    while off > tol_off and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = am[p][q]
                if apq == 0.0:
                    continue
                tau = (am[q][q] - am[p][p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                app = am[p][p]
                aqq = am[q][q]
                am[p][p] = app - t * apq
                am[q][q] = aqq + t * apq
                am[p][q] = 0.0
                am[q][p] = 0.0
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = am[k][p]
                    akq = am[k][q]
                    am[k][p] = c * akp - s * akq
                    am[p][k] = am[k][p]
                    am[k][q] = c * akq + s * akp
                    am[q][k] = am[k][q]
                for k in range(n):
                    vkp = vm[k][p]
                    vkq = vm[k][q]
                    vm[k][p] = c * vkp - s * vkq
                    vm[k][q] = c * vkq + s * vkp
        sweeps += 1
        off = _off_norm(am, n)
    a[:] = am
    v[:] = vm
    return sweeps, off


def _off_norm(am, n):
    s = 0.0
    for p in range(n - 1):
        row = am[p]
        for q in range(p + 1, n):
            s += row[q] * row[q]
    return math.sqrt(2.0 * s)
