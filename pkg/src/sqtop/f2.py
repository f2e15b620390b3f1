"""Linear algebra over GF(2) with rows packed into Python integers.

Bit ``c`` of a row integer is the entry in column ``c``.  XOR of two rows is a
single big-integer operation, which is word-level elimination done in C.
Pivot choice is always the lowest available column, so every result below is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import InvalidInput

__all__ = [
    "BitVector",
    "BitMatrix",
    "rank",
    "rank_of_rows",
    "rref",
    "kernel_basis",
    "solve_in_span",
    "Quotient",
    "quotient_basis",
]


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits >> self.length:
            raise InvalidInput("bits set beyond vector length")

    @classmethod
    def from_list(cls, entries: Iterable[int]) -> "BitVector":
        entries = list(entries)
        bits = 0
        for i, e in enumerate(entries):
            if e & 1:
                bits |= 1 << i
        return cls(len(entries), bits)

    @classmethod
    def unit(cls, length: int, i: int) -> "BitVector":
        return cls(length, 1 << i)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return self.bits >> i & 1

    def __add__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise InvalidInput("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    __xor__ = __add__

    def __bool__(self) -> bool:
        return self.bits != 0

    def __len__(self) -> int:
        return self.length

    def support(self) -> list[int]:
        return [i for i in range(self.length) if self.bits >> i & 1]

    def to_list(self) -> list[int]:
        return [self.bits >> i & 1 for i in range(self.length)]

    def weight(self) -> int:
        return self.bits.bit_count()


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.data) != self.rows:
            raise InvalidInput("row count mismatch")
        if any(r >> self.cols for r in self.data):
            raise InvalidInput("row wider than column count")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "BitMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = []
        for r in rows:
            if len(r) != cols:
                raise InvalidInput("ragged matrix")
            data.append(BitVector.from_list(r).bits)
        return cls(len(rows), cols, tuple(data))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[int]) -> "BitMatrix":
        """Assemble a matrix from column bit masks (bit r = row r)."""
        data = [0] * rows
        for c, col in enumerate(columns):
            r = 0
            while col:
                if col & 1:
                    data[r] |= 1 << c
                col >>= 1
                r += 1
        return cls(rows, len(columns), tuple(data))

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i])

    def column(self, j: int) -> int:
        col = 0
        for i, r in enumerate(self.data):
            if r >> j & 1:
                col |= 1 << i
        return col

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "BitMatrix":
        return BitMatrix(self.cols, self.rows, tuple(self.columns()))

    def apply(self, v: int) -> int:
        """Matrix times column vector, both as bit masks."""
        out = 0
        for i, r in enumerate(self.data):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.cols != other.rows:
            raise InvalidInput("shape mismatch")
        data = []
        for r in self.data:
            acc = 0
            k = 0
            while r:
                if r & 1:
                    acc ^= other.data[k]
                r >>= 1
                k += 1
            data.append(acc)
        return BitMatrix(self.rows, other.cols, tuple(data))

    def is_zero(self) -> bool:
        return not any(self.data)

    def to_lists(self) -> list[list[int]]:
        return [[r >> j & 1 for j in range(self.cols)] for r in self.data]


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


def rank_of_rows(rows: Iterable[int]) -> int:
    """Rank of a family of row masks."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            p = _low(r)
            q = pivots.get(p)
            if q is None:
                pivots[p] = r
                break
            r ^= q
    return len(pivots)


def rank(M: BitMatrix) -> int:
    return rank_of_rows(M.data)


def rref(rows: Iterable[int]) -> dict[int, int]:
    """Reduced row echelon form as {pivot column: row}."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            p = _low(r)
            q = pivots.get(p)
            if q is None:
                break
            r ^= q
        if not r:
            continue
        p = _low(r)
        for c in list(pivots):
            if r >> c & 1:
                r ^= pivots[c]
        for c, q in pivots.items():
            if q >> p & 1:
                pivots[c] = q ^ r
        pivots[p] = r
    return pivots


def kernel_basis(M: BitMatrix) -> list[BitVector]:
    """Right null space basis, one vector per free column in ascending order."""
    pivots = rref(M.data)
    out = []
    for f in range(M.cols):
        if f in pivots:
            continue
        v = 1 << f
        for p, r in pivots.items():
            if r >> f & 1:
                v |= 1 << p
        out.append(BitVector(M.cols, v))
    return out


def solve_in_span(basis: Sequence[BitVector], target: BitVector) -> tuple[int, ...] | None:
    """Coefficients c with sum c_i basis_i = target, or None if target is outside the span.

    When the basis is dependent the returned solution is one of several.
    """
    for b in basis:
        if b.length != target.length:
            raise InvalidInput("length mismatch")
    pivots: dict[int, tuple[int, int]] = {}
    for i, b in enumerate(basis):
        r, tag = b.bits, 1 << i
        while r:
            p = _low(r)
            if p not in pivots:
                pivots[p] = (r, tag)
                break
            q, qt = pivots[p]
            r ^= q
            tag ^= qt
    r, tag = target.bits, 0
    while r:
        p = _low(r)
        if p not in pivots:
            return None
        q, qt = pivots[p]
        r ^= q
        tag ^= qt
    return tuple(tag >> i & 1 for i in range(len(basis)))


@dataclass(frozen=True)
class Quotient:
    """Basis of span(Z) / span(B).

    ``representatives`` are drawn from Z; ``reduce`` sends an element of
    span(Z) to its coordinates along the representatives.
    """

    length: int
    representatives: tuple[BitVector, ...]
    reduce_bits: Callable[[int], int]

    def reduce(self, v: BitVector | int) -> tuple[int, ...]:
        bits = v.bits if isinstance(v, BitVector) else v
        tag = self.reduce_bits(bits)
        return tuple(tag >> i & 1 for i in range(len(self.representatives)))

    @property
    def dim(self) -> int:
        return len(self.representatives)


def quotient_basis(Z: Sequence[BitVector | int], B: Sequence[BitVector | int], length: int | None = None) -> Quotient:
    """Complement basis of span(B) inside span(Z).

    Accepts BitVectors or raw bit masks (then ``length`` must be given or
    inferred from a BitVector).
    """
    if length is None:
        for v in list(Z) + list(B):
            if isinstance(v, BitVector):
                length = v.length
                break
        else:
            length = 0

    def bits(v):
        if isinstance(v, BitVector):
            if v.length != length:
                raise InvalidInput("length mismatch")
            return v.bits
        return v

    # echelon rows carry a tag: the row is congruent to the sum of the tagged
    # representatives modulo span(B)
    pivots: dict[int, tuple[int, int]] = {}

    def insert(r: int, tag: int) -> tuple[int, int]:
        while r:
            p = _low(r)
            hit = pivots.get(p)
            if hit is None:
                pivots[p] = (r, tag)
                return r, tag
            r ^= hit[0]
            tag ^= hit[1]
        return 0, tag

    for b in B:
        insert(bits(b), 0)
    reps: list[BitVector] = []
    for z in Z:
        zb = bits(z)
        k = len(reps)
        r, _ = insert(zb, 1 << k)
        if r:
            reps.append(BitVector(length, zb))

    z_rows = [bits(z) for z in Z]
    if rank_of_rows(z_rows + [bits(b) for b in B]) != rank_of_rows(z_rows):
        raise InvalidInput("B is not contained in span(Z)")

    frozen = dict(pivots)

    def reduce_bits(v: int) -> int:
        tag = 0
        while v:
            hit = frozen.get(_low(v))
            if hit is None:
                raise InvalidInput("vector is not in span(Z)")
            v ^= hit[0]
            tag ^= hit[1]
        return tag

    return Quotient(length, tuple(reps), reduce_bits)
