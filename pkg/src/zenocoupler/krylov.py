"""Lanczos approximation of exp(i t A) v for real symmetric sparse A.

One Krylov basis is built per substep; the step length is then chosen as the
largest fraction of the remaining interval whose a-posteriori error estimate
(the classical ``beta_m |e_m^T exp(i t T_m) e_1|`` bound) meets the requested
error per unit length.  Full reorthogonalisation keeps the basis orthonormal,
which matters more than speed at the tolerances used here.
"""

from __future__ import annotations

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import StepFailure


def _lanczos(matvec, v, m):
    n = v.shape[0]
    beta0 = np.linalg.norm(v)
    V = np.empty((m + 1, n), dtype=complex)
    alpha = np.zeros(m)
    beta = np.zeros(m)
    V[0] = v / beta0
    k = 0
    for k in range(m):
        w = matvec(V[k])
        alpha[k] = np.real(np.vdot(V[k], w))
        w = w - alpha[k] * V[k]
        if k > 0:
            w = w - beta[k - 1] * V[k - 1]
        # twice is enough
        for _ in range(2):
            w = w - V[:k + 1].T @ (V[:k + 1].conj() @ w)
        beta[k] = np.linalg.norm(w)
        if beta[k] <= 1e-14 * max(1.0, abs(alpha[k])):
            # invariant subspace: the projection is exact
            return V[:k + 1], alpha[:k + 1], beta[:k], beta0, 0.0
        V[k + 1] = w / beta[k]
    return V[:m], alpha, beta[:m - 1], beta0, beta[m - 1]


def expi_action(A, v, t, rtol=1e-10, m=30, min_step=None, callback=None):
    """Return ``(exp(i t A) v, error_estimate, substeps)``.

    ``rtol`` bounds the estimated error relative to ``|v|`` over the whole
    interval; each substep is allowed a share proportional to its length.
    ``callback(v, z)`` is called after every substep.
    """
    v = np.asarray(v, dtype=complex)
    if t == 0 or not np.any(v):
        return v.copy(), 0.0, 0
    if t < 0:
        raise ValueError("t must be non-negative")
    m = min(m, v.shape[0])
    matvec = A.dot if hasattr(A, "dot") else A
    min_step = t * 1e-10 if min_step is None else min_step
    norm0 = np.linalg.norm(v)
    done, total_err, steps = 0.0, 0.0, 0
    while done < t:
        remaining = t - done
        V, alpha, beta, beta0, resid = _lanczos(matvec, v, m)
        if alpha.size == 1:
            evals, evecs = alpha.copy(), np.ones((1, 1))
        else:
            evals, evecs = eigh_tridiagonal(alpha, beta)
        h = remaining
        while True:
            y = evecs @ (np.exp(1j * h * evals) * evecs[0].conj())
            err = beta0 * resid * abs(y[-1]) * h
            if err <= rtol * norm0 * h / t or resid == 0.0:
                break
            h *= 0.5
            if h < min_step:
                raise StepFailure(f"step size fell below {min_step:g} at z={done:g}")
        v = beta0 * (V.T @ y)
        done = t if h == remaining else done + h
        total_err += err
        steps += 1
        if callback is not None:
            callback(v, done)
    return v, total_err, steps
