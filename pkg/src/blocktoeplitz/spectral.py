"""Eigenvalues of real symmetric matrices and empirical spectral moments.

The eigensolver reduces to tridiagonal form with Householder reflections
(lower triangle only) and then runs implicit-shift QL on the tridiagonal.
Eigenvectors are never formed.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numba
import numpy as np

DEFLATION_TOL = 1e-14
MAX_SWEEPS = 50
# absolute floor on the unit-scaled matrix, far below the Householder backward error
ABS_DEFLATION_FLOOR = 1e-30
SYMMETRY_RTOL = 1e-12


class EigenSolverError(RuntimeError):
    pass


@numba.njit(cache=True)
def _tridiagonalize(a):
    n = a.shape[0]
    d = np.empty(n)
    e = np.zeros(n)
    v = np.empty(n)
    p = np.empty(n)
    for k in range(n - 2):
        m = k + 1
        d[k] = a[k, k]
        # the reflector is invariant under scaling v, so normalize the column first
        sc = 0.0
        for i in range(m, n):
            sc = max(sc, abs(a[i, k]))
        if sc == 0.0:
            e[k] = 0.0
            continue
        s = 0.0
        for i in range(m, n):
            v[i] = a[i, k] / sc
            s += v[i] * v[i]
        alpha = math.sqrt(s)
        x0 = v[m]
        if x0 > 0.0:
            alpha = -alpha
        v[m] = x0 - alpha
        vn = s - x0 * x0 + v[m] * v[m]
        e[k] = alpha * sc
        if vn == 0.0:
            continue
        tau = 2.0 / vn
        for i in range(m, n):
            p[i] = 0.0
        for i in range(m, n):
            vi = v[i]
            acc = a[i, i] * vi
            for j in range(m, i):
                aij = a[i, j]
                acc += aij * v[j]
                p[j] += aij * vi
            p[i] += acc
        K = 0.0
        for i in range(m, n):
            p[i] *= tau
            K += p[i] * v[i]
        K *= 0.5 * tau
        for i in range(m, n):
            p[i] -= K * v[i]
        for i in range(m, n):
            vi = v[i]
            wi = p[i]
            for j in range(m, i + 1):
                a[i, j] -= vi * p[j] + wi * v[j]
    if n >= 2:
        d[n - 2] = a[n - 2, n - 2]
        e[n - 2] = a[n - 1, n - 2]
    d[n - 1] = a[n - 1, n - 1]
    e[n - 1] = 0.0
    return d, e


@numba.njit(cache=True)
def _tridiagonal_ql(d, e, tol, max_sweeps, floor):
    # returns -1 on success, else the index whose eigenvalue failed to converge
    n = d.shape[0]
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= tol * dd or abs(e[m]) <= floor:
                    break
                m += 1
            if m == l:
                break
            if it == max_sweeps:
                return l
            it += 1
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            i = m - 1
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return -1


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: np.ndarray
    scale: float = 1.0

    @property
    def dim(self) -> int:
        return int(self.eigenvalues.shape[0])

    def scaled(self) -> np.ndarray:
        return self.eigenvalues / self.scale


def check_symmetric(m: np.ndarray) -> None:
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    ref = float(np.max(np.abs(m))) if m.size else 0.0
    if ref and float(np.max(np.abs(m - m.T))) > SYMMETRY_RTOL * ref:
        raise ValueError("matrix is not symmetric")


def eigenvalues_symmetric(m: np.ndarray) -> Spectrum:
    """All eigenvalues of a real symmetric matrix, ascending."""
    check_symmetric(m)
    a = np.array(m, dtype=np.float64, order="C")
    if a.shape[0] == 0:
        return Spectrum(np.empty(0))
    # work at unit max-entry so squared norms neither overflow nor underflow
    amax = float(np.max(np.abs(a)))
    if amax == 0.0:
        return Spectrum(np.zeros(a.shape[0]))
    d, e = _tridiagonalize(a / amax)
    bad = _tridiagonal_ql(d, e, DEFLATION_TOL, MAX_SWEEPS, ABS_DEFLATION_FLOOR)
    if bad >= 0:
        raise EigenSolverError(f"eigenvalue {bad} did not converge within {MAX_SWEEPS} sweeps")
    return Spectrum(np.sort(d) * amax)


@dataclass
class EmpiricalMoments:
    beta_hat: np.ndarray  # beta_hat[h-1] is the h-th moment
    stderr: np.ndarray
    replicates: int = 1
    samples: np.ndarray | None = field(default=None, repr=False)

    @property
    def h_max(self) -> int:
        return int(self.beta_hat.shape[0])

    def __getitem__(self, h: int) -> float:
        return float(self.beta_hat[h - 1])


def esd_moments(spec: Spectrum, scale: float, h_max: int) -> EmpiricalMoments:
    if scale <= 0:
        raise ValueError("scale must be positive")
    x = spec.eigenvalues / scale
    beta = np.array([np.mean(x**h) for h in range(1, h_max + 1)])
    return EmpiricalMoments(beta, np.full(h_max, np.nan), 1, beta[None, :])


def aggregate_moments(runs: list[EmpiricalMoments]) -> EmpiricalMoments:
    """Mean moments across replicates with standard errors (ddof=1)."""
    samples = np.vstack([r.beta_hat for r in runs])
    R = samples.shape[0]
    stderr = samples.std(axis=0, ddof=1) / math.sqrt(R) if R > 1 else np.full(samples.shape[1], np.nan)
    return EmpiricalMoments(samples.mean(axis=0), stderr, R, samples)


def trace_moment(m: np.ndarray, h: int, scale: float = 1.0) -> float:
    """``(1/N) Tr((M/scale)^h)`` by matrix products."""
    if h < 1:
        raise ValueError("h must be at least 1")
    b = np.asarray(m, dtype=np.float64) / scale
    half = h // 2
    p = np.eye(b.shape[0]) if half == 0 else b
    for _ in range(half - 1):
        p = p @ b
    q = p @ b if h % 2 else p
    # Tr(P Q) with both powers of a symmetric matrix
    return float(np.sum(p * q) / b.shape[0])


def histogram(spec: Spectrum, scale: float = 1.0, bins="auto", range=None):
    """List of ``(left, right, density)``; densities integrate to 1."""
    x = spec.eigenvalues / scale
    if x.size == 0:
        raise ValueError("histogram needs at least one eigenvalue")
    dens, edges = np.histogram(x, bins=bins, range=range, density=True)
    return [(float(edges[i]), float(edges[i + 1]), float(dens[i])) for i in np.arange(dens.size)]


def write_eigenvalue_csv(spectra: list[Spectrum], path, scale: float = 1.0) -> None:
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["replicate", "index", "eigenvalue"])
        for r, spec in enumerate(spectra):
            for i, lam in enumerate(spec.eigenvalues / scale):
                w.writerow([r, i, repr(float(lam))])
