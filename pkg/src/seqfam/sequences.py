"""M-ary Sidelnikov sequences and order-M multiplicative characters.

Symbols are computed from the field log tables with the log(0) = 0
convention, so the character value at zero is 1 and the symbol at the
index where the generator power hits -1 is 0.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError
from .fields import ExtensionContext, FieldContext


@dataclass(frozen=True, eq=False)
class MSequence:
    """An M-ary sequence of known period with construction provenance.

    kind is one of "sidelnikov" (period q-1 base sequence), "long"
    (period q**d-1 sequence over the extension), "column" (one column of
    the array listing) or "family" (constant multiple of a column).
    The l index is -1 for kinds that are not tied to a single column.
    """

    symbols: np.ndarray
    period: int
    M: int
    kind: str
    q: int
    d: int = 1
    l: int = -1
    c: int = 1

    def __post_init__(self):
        sym = np.asarray(self.symbols, dtype=np.int64)
        sym.setflags(write=False)
        object.__setattr__(self, "symbols", sym)
        if sym.shape != (self.period,):
            raise ParameterError("symbol array length must equal the period")
        if sym.size and (sym.min() < 0 or sym.max() >= self.M):
            raise ParameterError("symbols must lie in [0, M)")

    def shifted(self, tau: int) -> "MSequence":
        """Cyclic shift: result(t) = self(t + tau)."""
        return MSequence(
            np.roll(self.symbols, -tau), self.period, self.M, self.kind,
            self.q, self.d, self.l, self.c,
        )

    def header(self) -> str:
        return f"# q={self.q} d={self.d} M={self.M} l={self.l} c={self.c}"


def _check_alphabet(q: int, M: int) -> None:
    if M < 2:
        raise ParameterError("M must be >= 2")
    if (q - 1) % M != 0:
        raise ParameterError(f"M must divide q-1 (q={q}, M={M})")


def sidelnikov_sequence(ctx: FieldContext, M: int) -> MSequence:
    """Base sequence of period q-1: s(t) = log(beta**t + 1) mod M."""
    _check_alphabet(ctx.q, M)
    shifted = ctx.add_arr(ctx.exp, 1)
    symbols = ctx.log[shifted] % M
    return MSequence(symbols, ctx.q - 1, M, "sidelnikov", ctx.q, 1, 0, 1)


def sidelnikov_sequence_via_cosets(ctx: FieldContext, M: int) -> MSequence:
    """Same sequence built from the coset-membership definition.

    Classifies beta**t by which set {beta**(M*j+k) - 1} it falls in;
    kept as an independent route for identity testing against the log
    formula.
    """
    _check_alphabet(ctx.q, M)
    q = ctx.q
    klass = np.zeros(q, dtype=np.int64)
    minus_one = ctx.neg(1)
    members = ctx.add_arr(ctx.exp, np.full(q - 1, minus_one, dtype=np.int64))
    klass[members] = np.arange(q - 1) % M
    symbols = klass[ctx.exp].copy()
    symbols[ctx.exp == minus_one] = 0
    return MSequence(symbols, q - 1, M, "sidelnikov", q, 1, 0, 1)


def sidelnikov_sequence_ext(ext: ExtensionContext, M: int) -> MSequence:
    """Period q**d-1 sequence, computed through the norm to the base field.

    Deliberately routes through log(N(alpha**t + 1)) rather than the
    extension log so the direct-definition route stays available as an
    independent cross-check.
    """
    _check_alphabet(ext.q, M)
    shifted = ext.add_arr(ext.exp, 1)
    norms = ext.norm_arr(shifted)
    symbols = ext.base.log[norms] % M
    return MSequence(symbols, ext.size - 1, M, "long", ext.q, ext.d, -1, 1)


def sidelnikov_sequence_ext_direct(ext: ExtensionContext, M: int) -> MSequence:
    """Direct definition over the big field: s(t) = log_alpha(alpha**t + 1) mod M."""
    _check_alphabet(ext.q, M)
    shifted = ext.add_arr(ext.exp, 1)
    symbols = ext.log[shifted] % M
    return MSequence(symbols, ext.size - 1, M, "long", ext.q, ext.d, -1, 1)


@dataclass(frozen=True)
class Character:
    """Multiplicative character of order M with the value-1-at-zero convention."""

    M: int
    field: FieldContext = field(repr=False)

    def __post_init__(self):
        _check_alphabet(self.field.size, self.M)

    def value(self, x: int) -> complex:
        return complex(np.exp(2j * np.pi * (self.field.dlog(x) % self.M) / self.M))

    def values(self, xs) -> np.ndarray:
        logs = self.field.log[np.asarray(xs, dtype=np.int64)]
        return np.exp(2j * np.pi * (logs % self.M) / self.M)


def character_value(chi: Character, x: int) -> complex:
    return chi.value(x)


def unit_root_powers(M: int, exponents) -> np.ndarray:
    """exp(2*pi*i*e/M) for an integer array of exponents."""
    return np.exp(2j * np.pi * (np.asarray(exponents) % M) / M)


def format_sequence(seq: MSequence) -> str:
    return seq.header() + "\n" + ",".join(str(int(s)) for s in seq.symbols)


def write_sequences(fp, sequences) -> None:
    """Export format: a header line then a comma-separated symbol line per sequence."""
    for seq in sequences:
        fp.write(format_sequence(seq) + "\n")


def read_sequences(fp) -> list[MSequence]:
    """Parse the export format back into MSequence values."""
    out = []
    header = None
    for line in fp:
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            header = dict(part.split("=") for part in line[1:].split())
            continue
        if header is None:
            raise ParameterError("symbol line without a preceding header")
        symbols = np.array([int(tok) for tok in line.split(",")], dtype=np.int64)
        out.append(
            MSequence(
                symbols, len(symbols), int(header["M"]), "imported",
                int(header["q"]), int(header["d"]), int(header["l"]), int(header["c"]),
            )
        )
        header = None
    return out
