"""Exhaustive periodic correlation analysis of a sequence family.

The scan covers every unordered pair of family members (autocorrelations
included once) at every shift, excluding only the trivial same-sequence
zero-shift case. It tracks the family-wide maximum with argmax witnesses,
a histogram of magnitudes, and per-pair bounds that use the actual
irreducible-part degrees of the two columns involved.
"""

import math
import time
from dataclasses import dataclass

import numpy as np

from . import polys
from .columns import column_polynomial, coset
from .errors import InternalCheckError, ParameterError
from .family import SequenceFamily
from .fields import ExtensionContext, FieldContext
from .kernels import PairScanner
from .sequences import MSequence

TOLERANCE = 1e-6
WITNESS_CAP = 100
_MATCH_TOL = 1e-9

# Histograms bin |R| rounded to 6 decimals. Large alphabets can make nearly
# every correlation value distinct at that resolution, so once the exact
# histogram passes this many entries the scan degrades deterministically to
# fixed 1e-3-wide bins and records the resolution in the report.
HISTOGRAM_EXACT_LIMIT = 1 << 20
_FINE_SCALE = 10**6
_COARSE_SCALE = 10**3


def cross_correlation(a: MSequence, b: MSequence, tau: int) -> complex:
    """R(tau) = sum_t w**(a(t) - b(t+tau)) as a complex double."""
    if a.period != b.period:
        raise ParameterError("period mismatch")
    if a.M != b.M:
        raise ParameterError("alphabet mismatch")
    if not 0 <= tau < a.period:
        raise ParameterError("shift out of range")
    diff = a.symbols - np.roll(b.symbols, -tau)
    return complex(np.exp(2j * np.pi * (diff % a.M) / a.M).sum())


@dataclass(frozen=True)
class WeilBoundInput:
    """Degrees and GF(q)-root counts of the distinct monic irreducible arguments."""

    terms: tuple[tuple[int, int], ...]
    q: int


def weil_bound(inp: WeilBoundInput) -> float:
    """(sum of degrees - 1) * sqrt(q) + total root count."""
    if len(inp.terms) < 1:
        raise ParameterError("at least one polynomial term is required")
    degs = sum(t[0] for t in inp.terms)
    roots = sum(t[1] for t in inp.terms)
    return (degs - 1) * math.sqrt(inp.q) + roots


@dataclass
class CorrelationReport:
    """Everything the scan produced, JSON/CSV serializable."""

    q: int
    d: int
    M: int
    policy: str
    family_size: int
    delta_max: float
    bound: float
    bound_ok: bool
    argmax: list[dict]
    histogram: dict[float, int]
    histogram_resolution: float
    pair_bound_ok: bool
    pair_bound_violations: list[dict]
    same_column_bound_ok: bool
    backend: str
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "d": self.d,
            "M": self.M,
            "policy": self.policy,
            "family_size": self.family_size,
            "delta_max": self.delta_max,
            "bound": self.bound,
            "bound_ok": self.bound_ok,
            "pair_bound_ok": self.pair_bound_ok,
            "pair_bound_violations": self.pair_bound_violations,
            "same_column_bound_ok": self.same_column_bound_ok,
            "argmax": self.argmax,
            "histogram": {f"{k:.6f}": v for k, v in sorted(self.histogram.items())},
            "histogram_resolution": self.histogram_resolution,
            "backend": self.backend,
            "elapsed": self.elapsed,
        }

    def histogram_csv(self) -> str:
        lines = ["abs_correlation,count"]
        lines += [f"{k:.6f},{v}" for k, v in sorted(self.histogram.items())]
        return "\n".join(lines) + "\n"


class _HistogramAccumulator:
    """Counts quantized magnitudes, degrading to coarse bins if they explode."""

    def __init__(self, period: int):
        self.scale = _FINE_SCALE
        self.keys = np.empty(0, dtype=np.int64)
        self.counts = np.empty(0, dtype=np.int64)
        self._coarse_len = (period + 2) * _COARSE_SCALE
        self._dense = None

    def add(self, values: np.ndarray) -> None:
        if self._dense is None:
            quantized = np.rint(values * self.scale).astype(np.int64)
            new_keys, new_counts = np.unique(quantized, return_counts=True)
            self.keys, self.counts = _merge_counts(self.keys, self.counts, new_keys, new_counts)
            if self.keys.size > HISTOGRAM_EXACT_LIMIT:
                self._degrade()
        else:
            quantized = np.rint(values * _COARSE_SCALE).astype(np.int64)
            self._dense += np.bincount(quantized, minlength=self._coarse_len)

    def _degrade(self) -> None:
        self.scale = _COARSE_SCALE
        self._dense = np.zeros(self._coarse_len, dtype=np.int64)
        ratio = _FINE_SCALE // _COARSE_SCALE
        coarse = (self.keys + ratio // 2) // ratio  # round, matching the direct path
        np.add.at(self._dense, coarse, self.counts)
        self.keys = self.counts = None

    def result(self) -> dict[float, int]:
        if self._dense is not None:
            nz = np.flatnonzero(self._dense)
            return {int(k) / self.scale: int(self._dense[k]) for k in nz}
        return {k / self.scale: int(v) for k, v in zip(self.keys.tolist(), self.counts.tolist())}


def _merge_counts(keys, counts, new_keys, new_counts):
    """Merge two sorted (key, count) histograms into one sorted histogram."""
    cat = np.concatenate([keys, new_keys])
    cnt = np.concatenate([counts, new_counts])
    order = np.argsort(cat, kind="mergesort")
    cat, cnt = cat[order], cnt[order]
    uniq, starts = np.unique(cat, return_index=True)
    return uniq, np.add.reduceat(cnt, starts)


def _pair_blocks(n: int, block: int):
    """Yield (left, right) index arrays covering all i <= j in lexicographic order."""
    left = np.empty(block, dtype=np.int64)
    right = np.empty(block, dtype=np.int64)
    fill = 0
    for i in range(n):
        j = i
        while j < n:
            take = min(n - j, block - fill)
            left[fill : fill + take] = i
            right[fill : fill + take] = np.arange(j, j + take, dtype=np.int64)
            fill += take
            j += take
            if fill == block:
                yield left, right, fill
                fill = 0
    if fill:
        yield left, right, fill


def max_correlation(
    family: SequenceFamily,
    backend: str | None = "auto",
    jobs: int | None = None,
    block_elements: int = 1 << 22,
) -> CorrelationReport:
    """Exhaustive scan of all nontrivial auto- and cross-correlations.

    Deduplicates by conjugate symmetry: only ordered pairs with
    (c1, l1) <= (c2, l2) are scanned, autocorrelations once. The argmax
    list is deterministic (lexicographic on (c1, l1, c2, l2, tau)) and
    capped at WITNESS_CAP entries.
    """
    if family.size < 1:
        raise ParameterError("family is empty")
    start = time.perf_counter()
    symbols = family.symbols_matrix()
    n, period = symbols.shape
    scanner = PairScanner(symbols, family.M, backend=backend, jobs=jobs)
    sqrt_q = math.sqrt(family.q)
    degs = family.degree_per_sequence()
    c_arr = np.array([s.c for s in family.sequences], dtype=np.int64)
    l_arr = np.array([s.l for s in family.sequences], dtype=np.int64)

    delta_max = -1.0
    witnesses: list[dict] = []
    histogram = _HistogramAccumulator(period)
    violations: list[dict] = []
    same_col_ok = True
    block = max(1024, block_elements // period)

    def witness(bi: int, bj: int, tau: int, value: float) -> dict:
        return {
            "c1": int(c_arr[bi]),
            "l1": int(l_arr[bi]),
            "c2": int(c_arr[bj]),
            "l2": int(l_arr[bj]),
            "tau": int(tau),
            "value": float(value),
        }

    for left, right, fill in _pair_blocks(n, block):
        lf, rt = left[:fill], right[:fill]
        vals = scanner.correlations_abs(lf, rt)

        auto = lf == rt
        if auto.any():
            trivial = vals[auto, 0]
            if np.any(np.abs(trivial - period) > TOLERANCE):
                raise InternalCheckError("trivial correlation does not equal the period")
            vals[auto, 0] = -1.0

        pair_bound = (degs[lf] + degs[rt] - 1) * sqrt_q + 1.0
        over = vals > pair_bound[:, None] + TOLERANCE
        if over.any():
            for bi, tau in np.argwhere(over)[:WITNESS_CAP]:
                entry = witness(lf[bi], rt[bi], tau, vals[bi, tau])
                entry["pair_bound"] = float(pair_bound[bi])
                violations.append(entry)

        same_col = (l_arr[lf] == l_arr[rt]) & (c_arr[lf] != c_arr[rt])
        if same_col.any():
            sharp = (degs[lf] - 1) * sqrt_q + 1.0
            if np.any(vals[same_col, 0] > sharp[same_col] + TOLERANCE):
                same_col_ok = False

        histogram.add(vals[vals >= 0.0])

        block_max = float(vals.max()) if vals.size else -1.0
        if block_max > delta_max:
            delta_max = block_max
            witnesses = [w for w in witnesses if w["value"] >= delta_max - _MATCH_TOL]
        if block_max >= delta_max - _MATCH_TOL and len(witnesses) < WITNESS_CAP:
            hits = np.argwhere(vals >= delta_max - _MATCH_TOL)
            for bi, tau in hits[: WITNESS_CAP - len(witnesses)]:
                witnesses.append(witness(lf[bi], rt[bi], tau, vals[bi, tau]))

    bound = (2 * family.d - 1) * sqrt_q + 1.0
    return CorrelationReport(
        q=family.q,
        d=family.d,
        M=family.M,
        policy=family.policy,
        family_size=family.size,
        delta_max=delta_max,
        bound=bound,
        bound_ok=delta_max <= bound + TOLERANCE,
        argmax=witnesses,
        histogram=histogram.result(),
        histogram_resolution=1.0 / histogram.scale,
        pair_bound_ok=not violations,
        pair_bound_violations=violations,
        same_column_bound_ok=same_col_ok,
        backend=scanner.backend,
        elapsed=time.perf_counter() - start,
    )


def _canonical_rotation(symbols: np.ndarray) -> bytes:
    period = symbols.size
    rotations = symbols[(np.arange(period)[:, None] + np.arange(period)) % period]
    order = np.lexsort(rotations.T[::-1])
    return rotations[order[0]].tobytes()


def cyclic_inequivalence(family) -> tuple[bool, dict | None]:
    """True iff no two distinct members are cyclic shifts of one another.

    Works by exact symbol comparison (canonical-rotation bucketing plus a
    direct shift search on collisions), independent of the correlation
    machinery.
    """
    sequences = family.sequences if isinstance(family, SequenceFamily) else tuple(family)
    buckets: dict[bytes, int] = {}
    for idx, seq in enumerate(sequences):
        key = _canonical_rotation(np.asarray(seq.symbols, dtype=np.int64))
        if key not in buckets:
            buckets[key] = idx
            continue
        first = buckets[key]
        ref = sequences[first].symbols
        for tau in range(seq.period):
            if np.array_equal(ref, np.roll(seq.symbols, -tau)):
                return False, {
                    "index1": first,
                    "c1": sequences[first].c,
                    "l1": sequences[first].l,
                    "index2": idx,
                    "c2": seq.c,
                    "l2": seq.l,
                    "tau": tau,
                }
        raise InternalCheckError("canonical rotations collided without a shift match")
    return True, None


def empirical_character_sum(ctx: FieldContext, M: int, terms) -> complex:
    """Direct sum over all field elements of a product of character values.

    terms is an iterable of (poly, power, coeff): each factor is the
    order-M character raised to `power`, evaluated at coeff * poly(x),
    under the value-1-at-zero convention.
    """
    if (ctx.q - 1) % M != 0:
        raise ParameterError("M must divide q-1")
    xs = np.arange(ctx.q, dtype=np.int64)
    total = np.zeros(ctx.q, dtype=np.int64)
    for poly, power, coeff in terms:
        if power % M == 0:
            raise ParameterError("characters must be nontrivial")
        if coeff == 0:
            raise ParameterError("polynomial coefficients must be nonzero")
        vals = ctx.mul_arr(np.int64(coeff), polys.eval_arr(ctx, poly, xs))
        total += (power % M) * ctx.log[vals]
    return complex(np.exp(2j * np.pi * (total % M) / M).sum())


def correlation_via_character_sum(
    ext: ExtensionContext, M: int, c1: int, l1: int, c2: int, l2: int, tau: int
) -> complex:
    """R(tau) recomputed through the character-sum identity.

    Expresses the correlation of c1*v_l1 against c2*v_l2 as a constant
    phase times a two-factor character sum over the whole base field,
    minus the zero-term bookkeeping contribution. Must match the direct
    symbol-domain computation to floating-point accuracy.
    """
    base, d, q = ext.base, ext.d, ext.q
    cp1 = column_polynomial(ext, l1)
    d1 = cp1.min_poly_degree
    full2 = coset(l2, ext.size - 1, q)
    d2 = full2.size
    beta_shift = base.pow_(base.beta, -tau)
    shifted = (1,)
    for j in full2.members:
        root_neg = ext.mul(int(ext.exp[(-j) % (ext.size - 1)]), beta_shift)
        shifted = polys.mul_linear(ext, shifted, root_neg)
    if any(c >= q for c in shifted):
        raise InternalCheckError("shifted column polynomial left the base field")

    k1 = (c1 * (d // d1)) % M
    k2 = (-c2 * (d // d2)) % M
    phase0 = (c1 * l1 - c2 * l2 - c2 * d * tau) % M
    xs = np.arange(q, dtype=np.int64)
    logs1 = base.log[polys.eval_arr(base, cp1.min_poly, xs)]
    logs2 = base.log[polys.eval_arr(base, shifted, xs)]
    total = phase0 + k1 * logs1 + k2 * logs2
    inner = np.exp(2j * np.pi * (total % M) / M).sum()
    return complex(inner - 1.0)
