"""Elementary integer number theory (trial-division scale).

Everything here works on plain Python ints, so values beyond 64 bits are
fine; inputs are expected to stay below ~2**40 where trial division is
still instant.
"""

from functools import reduce


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}, by trial division."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    for d in (2, 3):
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
    d = 5
    while d * d <= n:
        for step in (d, d + 2):
            while n % step == 0:
                out[step] = out.get(step, 0) + 1
                n //= step
        d += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> list[int]:
    return sorted(factorize(n))


def divisors(n: int) -> list[int]:
    """All positive divisors of n, sorted ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    return reduce(lambda acc, p: acc // p * (p - 1), factorize(n), n)


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def as_prime_power(q: int) -> tuple[int, int]:
    """Write q = p**n for a prime p, or raise ValueError."""
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, n),) = fac.items()
    return p, n


def iter_prime_powers(lo: int, hi: int):
    """Yield (p, n, q) for every prime power q with lo <= q <= hi."""
    for q in range(max(lo, 2), hi + 1):
        fac = factorize(q)
        if len(fac) == 1:
            ((p, n),) = fac.items()
            yield p, n, q
