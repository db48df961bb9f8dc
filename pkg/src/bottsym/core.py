"""Bott matrices and the column predicates that govern their quotient manifolds.

A strictly upper-triangular (0,1) matrix A of size n determines a real Bott
manifold M(A), a flat quotient of the n-torus.  The questions this package
answers about M(A) are all functions of the columns of A read as vectors over
GF(2):

* M(A) is orientable exactly when every row of A has even weight;
* M(A) carries a symplectic (indeed Kähler) structure exactly when the
  columns can be split into pairs of equal columns;
* the first Betti number of M(A) is the number of zero columns.

Rows and columns are packed into machine integers (bit ``i-1`` of column ``j``
holds the entry in row ``i``), so column comparison is a single word
comparison.  The exhaustive census over all size-8 matrices depends on this
representation staying cheap.

Indices are 1-based throughout, matching the usual notation A^i_j for the
entry in row i, column j.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


class NotSymplecticError(ValueError):
    """Raised when a construction requires a column pairing that does not exist."""


class BottMatrix:
    """Strictly upper-triangular (0,1) matrix, immutable after construction.

    Rows and columns are exposed both as packed bit masks (``row_bits``,
    ``column_bits``) and through the 1-based accessors ``entry`` and
    ``column``.
    """

    __slots__ = ("n", "rows", "cols")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have positive size")
        packed = []
        for i, row in enumerate(rows, start=1):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            bits = 0
            for j, entry in enumerate(row, start=1):
                if entry not in (0, 1):
                    raise ValueError(f"entry ({i},{j}) is {entry!r}, expected 0 or 1")
                if entry and j <= i:
                    raise ValueError(
                        f"entry ({i},{j}) is nonzero on or below the diagonal"
                    )
                bits |= entry << (j - 1)
            packed.append(bits)
        object.__setattr__  # noqa: B018  (slots class; plain assignment below)
        self._init(n, tuple(packed))

    def _init(self, n, row_bits):
        # shared by the validated constructor and the trusted fast path
        cols = [0] * n
        for i, bits in enumerate(row_bits):
            while bits:
                low = bits & -bits
                cols[low.bit_length() - 1] |= 1 << i
                bits ^= low
        BottMatrix.n.__set__(self, n)
        BottMatrix.rows.__set__(self, row_bits)
        BottMatrix.cols.__set__(self, tuple(cols))

    @classmethod
    def _from_row_bits(cls, n, row_bits):
        """Trusted constructor for enumeration loops; skips validation."""
        self = object.__new__(cls)
        self._init(n, row_bits)
        return self

    @classmethod
    def zero(cls, n):
        if n < 1:
            raise ValueError("matrix must have positive size")
        return cls._from_row_bits(n, (0,) * n)

    @classmethod
    def from_strings(cls, *rows):
        """Build from compact row strings, e.g. ``from_strings("0110", "0000", ...)``."""
        return cls([[int(ch) for ch in r] for r in rows])

    def entry(self, i, j):
        """Entry A^i_j (1-based)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i},{j}) out of range for size {self.n}")
        return (self.rows[i - 1] >> (j - 1)) & 1

    def row_bits(self, i):
        """Row i as a bit mask (bit j-1 is A^i_j)."""
        if not (1 <= i <= self.n):
            raise IndexError(f"row {i} out of range for size {self.n}")
        return self.rows[i - 1]

    def column_bits(self, j):
        """Column j as a bit mask (bit i-1 is A^i_j)."""
        if not (1 <= j <= self.n):
            raise IndexError(f"column {j} out of range for size {self.n}")
        return self.cols[j - 1]

    def is_zero(self):
        return not any(self.rows)

    def to_row_strings(self):
        return [
            "".join(str((bits >> (j - 1)) & 1) for j in range(1, self.n + 1))
            for bits in self.rows
        ]

    def compact(self):
        """Single-line form ``"0110;0000;0000;0000"``; reparsed by the CLI."""
        return ";".join(self.to_row_strings())

    def __eq__(self, other):
        if not isinstance(other, BottMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"BottMatrix({self.compact()!r})"


class ColumnVector:
    """Bit vector over GF(2); ``^`` is coordinatewise addition.

    Entries are 1-based; iterating yields the entries top to bottom.
    """

    __slots__ = ("length", "bits")

    def __init__(self, length, bits=0):
        if length < 0:
            raise ValueError("length must be non-negative")
        if not 0 <= bits < (1 << length):
            raise ValueError(f"bits 0x{bits:x} do not fit in length {length}")
        self.length = length
        self.bits = bits

    @classmethod
    def from_entries(cls, entries):
        entries = list(entries)
        bits = 0
        for pos, e in enumerate(entries):
            if e not in (0, 1):
                raise ValueError(f"entry {e!r} is not a bit")
            bits |= e << pos
        return cls(len(entries), bits)

    def entry(self, i):
        if not (1 <= i <= self.length):
            raise IndexError(f"entry {i} out of range for length {self.length}")
        return (self.bits >> (i - 1)) & 1

    def is_zero(self):
        return self.bits == 0

    def __xor__(self, other):
        if not isinstance(other, ColumnVector):
            return NotImplemented
        if self.length != other.length:
            raise ValueError("length mismatch")
        return ColumnVector(self.length, self.bits ^ other.bits)

    def __iter__(self):
        for i in range(self.length):
            yield (self.bits >> i) & 1

    def __eq__(self, other):
        if not isinstance(other, ColumnVector):
            return NotImplemented
        return self.length == other.length and self.bits == other.bits

    def __hash__(self):
        return hash((self.length, self.bits))

    def __repr__(self):
        return f"ColumnVector.from_entries({tuple(self)})"


@dataclass(frozen=True)
class Pairing:
    """Partition of {1, ..., size} into unordered pairs.

    Pairs are stored as (a, b) with a < b and listed in increasing order of
    their smaller member; ``find_pairing`` additionally guarantees the two
    columns within each pair are equal.
    """

    size: int
    pairs: tuple

    def __post_init__(self):
        if self.size % 2:
            raise ValueError("a pairing needs an even number of indices")
        seen = set()
        norm = []
        for pair in self.pairs:
            a, b = pair
            if a == b:
                raise ValueError(f"pair ({a},{b}) repeats an index")
            if not (1 <= a <= self.size and 1 <= b <= self.size):
                raise ValueError(f"pair ({a},{b}) out of range for size {self.size}")
            if a > b:
                a, b = b, a
            if a in seen or b in seen:
                raise ValueError(f"index reused in pair ({a},{b})")
            seen.update((a, b))
            norm.append((a, b))
        if len(seen) != self.size:
            raise ValueError("pairs must cover every index exactly once")
        norm.sort()
        object.__setattr__(self, "pairs", tuple(norm))

    def partner(self, j):
        for a, b in self.pairs:
            if j == a:
                return b
            if j == b:
                return a
        raise IndexError(f"index {j} not covered by pairing")


def validate_pairing(A, pairing):
    """Check that ``pairing`` pairs equal columns of ``A``; raise otherwise."""
    if pairing.size != A.n:
        raise ValueError(f"pairing size {pairing.size} != matrix size {A.n}")
    for a, b in pairing.pairs:
        if A.cols[a - 1] != A.cols[b - 1]:
            raise NotSymplecticError(
                f"columns {a} and {b} differ, pairing invalid for this matrix"
            )


def column(A, j):
    """Column A_j as a GF(2) vector."""
    return ColumnVector(A.n, A.column_bits(j))


def is_orientable(A):
    """True iff every row of A has even weight."""
    return all(bits.bit_count() % 2 == 0 for bits in A.rows)


def is_symplectic(A):
    """True iff the columns of A split into pairs of equal columns.

    Column equality is an equivalence relation, so a perfect pairing exists
    exactly when every distinct column value occurs an even number of times;
    odd sizes therefore never qualify.  The acceptance suite checks this
    multiplicity criterion against an exhaustive pairing search.
    """
    if A.n % 2:
        return False
    return all(m % 2 == 0 for m in Counter(A.cols).values())


def find_pairing(A):
    """A column pairing for A, or None when no pairing exists.

    Within each class of equal columns the indices are sorted increasingly
    and paired consecutively, which makes the output deterministic; no
    canonicity beyond that is claimed.
    """
    if not is_symplectic(A):
        return None
    by_value = {}
    for j in range(1, A.n + 1):
        by_value.setdefault(A.cols[j - 1], []).append(j)
    pairs = []
    for indices in by_value.values():
        for k in range(0, len(indices), 2):
            pairs.append((indices[k], indices[k + 1]))
    return Pairing(A.n, tuple(pairs))


def flux_rank(A):
    """Number of zero columns of A = dimension of the degree-1 cohomology."""
    return sum(1 for c in A.cols if c == 0)
