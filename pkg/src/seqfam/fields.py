"""Deterministic table-driven construction of GF(p**n) and GF(q**d).

Elements are packed integers: polynomial coefficients over GF(p) in base p,
low-degree coefficient least significant. The degree-d extension of GF(q)
reuses the same packing, so its base-q digits are GF(q) encodings and the
base field embeds as the encodings below q.

Every context carries full exp/log tables for its multiplicative group,
with the log convention log(0) = 0 (so that order-M characters evaluate
to 1 at zero). Construction is deterministic: the modulus polynomial is
the lexicographically smallest monic irreducible (coefficients compared
low-degree first) and the generator is the smallest-encoding element that
satisfies the required order (and norm, for extensions) conditions.
"""

import itertools
import math
import os

import numpy as np

from . import polys
from .errors import InternalCheckError, ParameterError, TableLimitError
from .intmath import is_prime, prime_factors

DEFAULT_TABLE_LIMIT = 1 << 24


def table_limit(override: int | None = None) -> int:
    """Effective log-table cap: explicit override, else SEQFAM_TABLE_LIMIT, else default."""
    if override is not None:
        return int(override)
    env = os.environ.get("SEQFAM_TABLE_LIMIT")
    return int(env) if env else DEFAULT_TABLE_LIMIT


def _unpack(values: np.ndarray, p: int, digits: int) -> np.ndarray:
    powers = p ** np.arange(digits, dtype=np.int64)
    return (values[:, None] // powers) % p


def _pack(digit_rows: np.ndarray, p: int) -> np.ndarray:
    powers = p ** np.arange(digit_rows.shape[1], dtype=np.int64)
    return digit_rows @ powers


class _TableField:
    """Shared scalar/vector arithmetic over precomputed exp/log tables."""

    p: int
    digits: int
    size: int
    exp: np.ndarray
    log: np.ndarray

    # -- additive structure (digitwise mod p) --------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.digits == 1:
            return (a + b) % self.p
        p, out, shift = self.p, 0, 1
        for _ in range(self.digits):
            out += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.digits == 1:
            return (-a) % self.p
        p, out, shift = self.p, 0, 1
        for _ in range(self.digits):
            out += ((p - a % p) % p) * shift
            a //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def add_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.digits == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        shift = 1
        for _ in range(self.digits):
            out += ((a + b) % self.p) * shift
            a = a // self.p
            b = b // self.p
            shift *= self.p
        return out

    def neg_arr(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.digits == 1:
            return (-a) % self.p
        out = np.zeros(a.shape, dtype=np.int64)
        shift = 1
        for _ in range(self.digits):
            out += ((-a) % self.p) * shift
            a = a // self.p
            shift *= self.p
        return out

    # -- multiplicative structure (log tables) --------------------------------

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(int(self.log[a]) + int(self.log[b])) % (self.size - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return int(self.exp[(-int(self.log[a])) % (self.size - 1)])

    def pow_(self, a: int, k: int) -> int:
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError("negative power of 0")
            return 0
        return int(self.exp[(int(self.log[a]) * k) % (self.size - 1)])

    def mul_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        idx = (self.log[a] + self.log[b]) % (self.size - 1)
        return np.where((a != 0) & (b != 0), self.exp[idx], 0)

    def pow_arr(self, a, k: int):
        a = np.asarray(a, dtype=np.int64)
        idx = (self.log[a] * (k % (self.size - 1))) % (self.size - 1)
        return np.where(a != 0, self.exp[idx], 0)

    def dlog(self, x: int) -> int:
        """Discrete log of x base the context generator, with dlog(0) = 0."""
        return int(self.log[x])

    def order(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("order of 0")
        return (self.size - 1) // math.gcd(int(self.log[a]), self.size - 1)

    def elements(self) -> range:
        return range(self.size)


def _mul_const_digit_matrix(raw_mul, c: int, p: int, digits: int) -> np.ndarray:
    """Matrix over GF(p) of the multiply-by-c map in the packed-digit basis."""
    cols = np.empty((digits, digits), dtype=np.int64)
    basis = 1
    for j in range(digits):
        prod = raw_mul(c, basis)
        for i in range(digits):
            cols[i, j] = prod % p
            prod //= p
        basis *= p
    return cols


def _exp_table(size: int, beta: int, raw_mul, raw_pow, p: int, digits: int) -> np.ndarray:
    """exp[t] = beta**t for 0 <= t < size-1, filled by block doubling.

    Each round multiplies the known block by the constant beta**filled,
    which is a GF(p)-linear map on packed digits, so the whole block is
    one integer matmul.
    """
    n = size - 1
    exp = np.empty(n, dtype=np.int64)
    exp[0] = 1
    filled = 1
    while filled < n:
        c = raw_pow(beta, filled)
        mat = _mul_const_digit_matrix(raw_mul, c, p, digits)
        take = min(filled, n - filled)
        block = _unpack(exp[:take], p, digits)
        exp[filled : filled + take] = _pack((block @ mat.T) % p, p)
        filled += take
    return exp


def _log_table(size: int, exp: np.ndarray) -> np.ndarray:
    log = np.zeros(size, dtype=np.int64)
    log[exp] = np.arange(size - 1, dtype=np.int64)
    return log


def _raw_pow(raw_mul, a: int, k: int) -> int:
    out = 1
    while k:
        if k & 1:
            out = raw_mul(out, a)
        a = raw_mul(a, a)
        k >>= 1
    return out


def _smallest_generator(size: int, raw_mul) -> int:
    """Smallest-encoding element of multiplicative order size-1."""
    primes = prime_factors(size - 1)
    for g in range(1, size):
        if _raw_pow(raw_mul, g, size - 1) != 1:
            continue  # not even a unit of the right exponent: broken ring guard
        if all(_raw_pow(raw_mul, g, (size - 1) // r) != 1 for r in primes):
            return g
    raise InternalCheckError("no generator found; field arithmetic is broken")


class FieldContext(_TableField):
    """GF(q) = GF(p**n) with a fixed modulus polynomial and generator beta."""

    def __init__(self, p, n, modulus, beta, exp, log):
        self.p = p
        self.n = n
        self.q = p**n
        self.size = self.q
        self.digits = n
        self.modulus = modulus
        self.beta = beta
        self.exp = exp
        self.log = log

    def __repr__(self):
        return f"FieldContext(q={self.q}, modulus={polys.format_coeffs(self.modulus)}, beta={self.beta})"

    def descriptor(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "q": self.q,
            "modulus": list(self.modulus),
            "beta": self.beta,
        }

    def validate(self) -> None:
        """Recheck the construction invariants from first principles."""
        if np.unique(self.exp).size != self.q - 1:
            raise InternalCheckError("generator order is not q-1")
        if not np.array_equal(self.log[self.exp], np.arange(self.q - 1)):
            raise InternalCheckError("log table does not invert exp table")
        if self.log[0] != 0:
            raise InternalCheckError("log(0) must be 0")
        if self.n > 1:
            _check_irreducible_by_trial_division(_prime_context(self.p), self.modulus)


class ExtensionContext(_TableField):
    """GF(q**d) as a degree-d extension of an existing GF(q) representation."""

    def __init__(self, base: FieldContext, d, modulus, alpha, exp, log):
        self.base = base
        self.p = base.p
        self.d = d
        self.q = base.q
        self.size = base.q**d
        self.digits = base.n * d
        self.norm_ratio = (self.size - 1) // (base.q - 1)
        self.modulus = modulus
        self.alpha = alpha
        self.exp = exp
        self.log = log

    def __repr__(self):
        return f"ExtensionContext(q={self.q}, d={self.d}, alpha={self.alpha})"

    @property
    def derived_beta(self) -> int:
        return self.norm(self.alpha)

    def norm(self, x: int) -> int:
        """Norm down to GF(q): x**((q**d-1)/(q-1)), with norm(0) = 0."""
        if x == 0:
            return 0
        return int(self.exp[(int(self.log[x]) * self.norm_ratio) % (self.size - 1)])

    def norm_arr(self, xs) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        idx = (self.log[xs] * self.norm_ratio) % (self.size - 1)
        return np.where(xs != 0, self.exp[idx], 0)

    def frobenius(self, x: int, k: int = 1) -> int:
        """x**(q**k), the k-fold base-field Frobenius."""
        return self.pow_(x, pow(self.q, k, self.size - 1)) if x else 0

    def trace(self, x: int) -> int:
        """Sum of the d Frobenius conjugates; lands in GF(q)."""
        acc = 0
        for j in range(self.d):
            acc = self.add(acc, self.frobenius(x, j))
        return acc

    def in_base_field(self, x: int) -> bool:
        return 0 <= x < self.q

    def descriptor(self) -> dict:
        out = self.base.descriptor()
        out.update(
            {
                "d": self.d,
                "ext_modulus": list(self.modulus),
                "alpha": self.alpha,
            }
        )
        return out

    def validate(self, samples: int = 64) -> None:
        if np.unique(self.exp).size != self.size - 1:
            raise InternalCheckError("alpha order is not q**d - 1")
        if self.derived_beta != self.base.beta:
            raise InternalCheckError("norm(alpha) != beta")
        if int(self.exp[self.norm_ratio % (self.size - 1)]) != self.base.beta:
            raise InternalCheckError("alpha**((q**d-1)/(q-1)) != beta")
        _check_irreducible_by_trial_division(self.base, self.modulus)
        rng = np.random.default_rng(0)
        xs = rng.integers(0, self.size, size=samples)
        for x in map(int, xs):
            if not self.in_base_field(self.norm(x)):
                raise InternalCheckError("norm left the base field")
            if not self.in_base_field(self.trace(x)):
                raise InternalCheckError("trace left the base field")


def _prime_context(p: int) -> FieldContext:
    """GF(p) with modulus x and beta the smallest primitive root."""
    beta = _smallest_generator(p, lambda a, b: (a * b) % p)
    exp = _exp_table(p, beta, lambda a, b: (a * b) % p, lambda a, k: pow(a, k, p), p, 1)
    return FieldContext(p, 1, (0, 1), beta, exp, _log_table(p, exp))


def _to_coeffs(x: int, radix: int, length: int) -> tuple:
    out = []
    for _ in range(length):
        out.append(x % radix)
        x //= radix
    return polys.trim(out)


def _from_coeffs(coeffs, radix: int) -> int:
    out = 0
    for c in reversed(coeffs):
        out = out * radix + c
    return out


def _smallest_irreducible(ctx, deg: int) -> tuple:
    """Lexicographically smallest monic irreducible of the given degree over ctx."""
    for tail in itertools.product(range(ctx.size), repeat=deg):
        if deg > 1 and tail[0] == 0:
            continue  # divisible by x
        candidate = tail + (1,)
        if polys.is_irreducible(ctx, candidate):
            return candidate
    raise InternalCheckError("no irreducible polynomial found")


def _check_irreducible_by_trial_division(coeff_ctx, modulus) -> None:
    """Spec-level invariant check: divide by every monic poly of degree <= n/2."""
    n = polys.degree(modulus)
    if n <= 1:
        return
    for deg in range(1, n // 2 + 1):
        for tail in itertools.product(range(coeff_ctx.size), repeat=deg):
            if polys.is_zero(polys.mod(coeff_ctx, modulus, tail + (1,))):
                raise InternalCheckError(f"modulus has a degree-{deg} factor")


def build_field(p: int, n: int, limit: int | None = None) -> FieldContext:
    """Construct GF(p**n) deterministically.

    The modulus is the lexicographically smallest monic irreducible of
    degree n over GF(p) (constant term compared first) and beta is the
    primitive element with the smallest packed-integer encoding.
    """
    if not is_prime(p):
        raise ParameterError(f"p={p} is not prime")
    if n < 1:
        raise ParameterError("n must be >= 1")
    q = p**n
    if q > table_limit(limit):
        raise TableLimitError(f"q={q} exceeds the table limit {table_limit(limit)}")
    prime_ctx = _prime_context(p)
    if n == 1:
        return prime_ctx

    modulus = _smallest_irreducible(prime_ctx, n)

    def raw_mul(a, b):
        prod = polys.mul(prime_ctx, _to_coeffs(a, p, n), _to_coeffs(b, p, n))
        return _from_coeffs(polys.mod(prime_ctx, prod, modulus), p)

    beta = _smallest_generator(q, raw_mul)
    exp = _exp_table(q, beta, raw_mul, lambda a, k: _raw_pow(raw_mul, a, k), p, n)
    return FieldContext(p, n, modulus, beta, exp, _log_table(q, exp))


def build_extension(base: FieldContext, d: int, limit: int | None = None) -> ExtensionContext:
    """Construct GF(q**d) on top of an existing GF(q) representation.

    alpha is the smallest-encoding primitive element whose norm equals
    base.beta, so the base field's generator is fixed first and the
    extension is chosen to be compatible with it.
    """
    if d < 2:
        raise ParameterError("extension degree d must be >= 2")
    q = base.q
    size = q**d
    if size > table_limit(limit):
        raise TableLimitError(f"q**d={size} exceeds the table limit {table_limit(limit)}")

    modulus = _smallest_irreducible(base, d)

    def raw_mul(a, b):
        prod = polys.mul(base, _to_coeffs(a, q, d), _to_coeffs(b, q, d))
        return _from_coeffs(polys.mod(base, prod, modulus), q)

    ratio = (size - 1) // (q - 1)
    primes = prime_factors(size - 1)
    alpha = 0
    for cand in range(2, size):
        if _raw_pow(raw_mul, cand, ratio) != base.beta:
            continue
        if all(_raw_pow(raw_mul, cand, (size - 1) // r) != 1 for r in primes):
            alpha = cand
            break
    if alpha == 0:
        raise InternalCheckError("no primitive element with norm beta found")

    exp = _exp_table(size, alpha, raw_mul, lambda a, k: _raw_pow(raw_mul, a, k), base.p, base.n * d)
    ext = ExtensionContext(base, d, modulus, alpha, exp, _log_table(size, exp))
    if int(ext.exp[ratio % (size - 1)]) != base.beta:
        raise InternalCheckError("norm(alpha) disagrees with beta after table build")
    return ext
