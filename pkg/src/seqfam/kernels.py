"""Pair-correlation backends and backend selection.

Two interchangeable implementations of the same computation (all periodic
cross-correlation magnitudes for a list of sequence pairs):

* "compiled": the Cython extension, direct O(period**2) summation per pair,
  OpenMP-parallel over pairs. Selected automatically when the extension
  built at install time.
* "fft": vectorized fallback; per-sequence DFTs are precomputed once and
  each pair costs one spectrum product plus one inverse transform.

Both must agree to within 1e-6; tests and the benchmark script compare
them directly. A slow pure-Python "reference" path exists for oracle
checks at tiny sizes.
"""

import os

import numpy as np
import scipy.fft

from .errors import ParameterError

try:
    from . import _corrkernel
except ImportError:  # pragma: no cover - depends on build environment
    _corrkernel = None

COMPILED_AVAILABLE = _corrkernel is not None


def default_backend() -> str:
    if os.environ.get("SEQFAM_FORCE_FFT"):
        return "fft"
    return "compiled" if COMPILED_AVAILABLE else "fft"


def resolve_backend(name: str | None) -> str:
    if name in (None, "auto"):
        return default_backend()
    if name not in ("compiled", "fft", "reference"):
        raise ParameterError(f"unknown correlation backend {name!r}")
    if name == "compiled" and not COMPILED_AVAILABLE:
        raise ParameterError("compiled correlation kernel is not available in this install")
    return name


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None or jobs <= 0:
        return os.cpu_count() or 1
    return jobs


class PairScanner:
    """Precomputes per-backend state for one symbol matrix, then serves pair blocks."""

    def __init__(self, symbols: np.ndarray, M: int, backend: str | None = "auto", jobs: int | None = None):
        symbols = np.asarray(symbols)
        if symbols.ndim != 2:
            raise ParameterError("symbols must be a 2-D (sequence, time) array")
        self.backend = resolve_backend(backend)
        self.jobs = resolve_jobs(jobs)
        self.M = M
        self.count, self.period = symbols.shape
        if self.backend == "compiled":
            self._symbols = np.ascontiguousarray(symbols, dtype=np.int32)
            angles = 2.0 * np.pi * np.arange(2 * M, dtype=np.float64) / M
            self._cos = np.cos(angles)
            self._sin = np.sin(angles)
        else:
            self._phases = np.exp(2j * np.pi * (symbols % M) / M)
            if self.backend == "fft":
                self._spectra = scipy.fft.fft(self._phases, axis=1, workers=self.jobs)

    def correlations_abs(self, left, right) -> np.ndarray:
        """|R(tau)| for every pair (left[b], right[b]) and every shift tau."""
        left = np.asarray(left, dtype=np.int64)
        right = np.asarray(right, dtype=np.int64)
        if self.backend == "compiled":
            out = np.empty((left.size, self.period), dtype=np.float64)
            _corrkernel.pair_abs_correlations(
                self._symbols, left, right, self._cos, self._sin, self.M, out, self.jobs
            )
            return out
        if self.backend == "fft":
            spectra = self._spectra[left] * np.conj(self._spectra[right])
            vals = scipy.fft.fft(spectra, axis=1, workers=self.jobs) / self.period
            return np.abs(vals)
        return self._reference(left, right)

    def _reference(self, left, right) -> np.ndarray:
        out = np.empty((left.size, self.period), dtype=np.float64)
        for b, (i, j) in enumerate(zip(left, right)):
            for tau in range(self.period):
                prod = self._phases[i] * np.conj(np.roll(self._phases[j], -tau))
                out[b, tau] = abs(prod.sum())
        return out
