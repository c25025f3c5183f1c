"""Toric 0/1 matrices and superpermutation-matrix verification.

Rows are stored as packed Python ints (bit j is column j), so extracting an
n-wide block at a column offset is a rotate-and-mask.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .perms import (
    Permutation,
    all_permutations,
    format_word,
    from0,
    inc_class,
    parse_word,
    rot_class,
)


@dataclass(frozen=True)
class UniversalWord:
    letters: tuple[int, ...]
    n: int

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        object.__setattr__(self, "letters", letters)
        if self.n < 1:
            raise ValueError("n must be positive")
        bad = [x for x in letters if not 1 <= x <= self.n]
        if bad:
            raise ValueError(f"letters {sorted(set(bad))} outside 1..{self.n}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return format_word(self.letters, self.n)

    @classmethod
    def parse(cls, text: str, n: int) -> UniversalWord:
        return cls(parse_word(text), n)


def as_word(w, n: int | None = None) -> UniversalWord:
    if isinstance(w, UniversalWord):
        if n is not None and n != w.n:
            raise ValueError(f"word is over 1..{w.n}, not 1..{n}")
        return w
    if isinstance(w, str):
        letters = parse_word(w)
    else:
        letters = tuple(w)
    if n is None:
        n = max(letters)
    return UniversalWord(letters, n)


class ToricBinaryMatrix:
    """An m x p matrix over {0,1} with wrap-around indexing in both directions."""

    __slots__ = ("rows", "m", "p")

    def __init__(self, entries):
        arr = np.asarray(entries)
        if arr.ndim != 2 or arr.size == 0:
            raise ValueError("expected a non-empty 2-d array")
        if not np.isin(arr, (0, 1)).all():
            raise ValueError("entries must be 0 or 1")
        self.m, self.p = arr.shape
        self.rows = tuple(
            sum(1 << j for j in range(self.p) if arr[i, j]) for i in range(self.m)
        )

    @classmethod
    def from_rows(cls, rows: Sequence[int], p: int) -> ToricBinaryMatrix:
        obj = cls.__new__(cls)
        obj.m, obj.p = len(rows), p
        if obj.m == 0 or p <= 0:
            raise ValueError("empty matrix")
        mask = (1 << p) - 1
        if any(r & ~mask for r in rows):
            raise ValueError("row has bits beyond column count")
        obj.rows = tuple(rows)
        return obj

    @classmethod
    def from_strings(cls, lines: Iterable[str]) -> ToricBinaryMatrix:
        return cls([[int(ch) for ch in line.strip()] for line in lines if line.strip()])

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.p

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i % self.m] >> (j % self.p)) & 1

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.m, self.p), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            for j in range(self.p):
                out[i, j] = (r >> j) & 1
        return out

    def to_strings(self) -> list[str]:
        return ["".join(str((r >> j) & 1) for j in range(self.p)) for r in self.rows]

    def window(self, i: int, j0: int, width: int) -> int:
        """Bits j0 .. j0+width-1 of row i (both indices toric), packed from bit 0."""
        r, p = self.rows[i % self.m], self.p
        j0 %= p
        rotated = ((r >> j0) | (r << (p - j0))) & ((1 << p) - 1)
        return rotated & ((1 << width) - 1)

    def __eq__(self, other):
        if not isinstance(other, ToricBinaryMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.p, self.rows))

    def __repr__(self):
        return f"ToricBinaryMatrix({self.m}x{self.p})"

    def __str__(self):
        return "\n".join(self.to_strings())


def dump_matrix(t: ToricBinaryMatrix, n: int) -> str:
    """Text format: header ``m p n`` then m lines of '0'/'1'."""
    return "\n".join([f"{t.m} {t.p} {n}", *t.to_strings()]) + "\n"


def load_matrix(text: str) -> tuple[ToricBinaryMatrix, int]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        m, p, n = (int(x) for x in lines[0].split())
    except ValueError:
        raise ValueError("first line must be 'm p n'") from None
    body = lines[1:]
    if len(body) != m or any(len(ln) != p for ln in body):
        raise ValueError(f"expected {m} rows of {p} characters")
    return ToricBinaryMatrix.from_strings(body), n


def _check_block_fits(t: ToricBinaryMatrix, n: int):
    if n > t.m or n > t.p:
        raise ValueError(f"{n}x{n} block does not fit a {t.m}x{t.p} torus")


def _block_rows(m) -> tuple[int, ...]:
    arr = np.asarray(m)
    return tuple(sum(1 << j for j in range(arr.shape[1]) if arr[i, j]) for i in range(arr.shape[0]))


def contains_block(t: ToricBinaryMatrix, m) -> bool:
    """True iff the square 0/1 matrix m occurs in t as a (wrap-around) block."""
    target = _block_rows(m)
    n = len(target)
    _check_block_fits(t, n)
    for i0 in range(t.m):
        for j0 in range(t.p):
            if all(t.window(i0 + i, j0, n) == target[i] for i in range(n)):
                return True
    return False


def _block_perm0(t: ToricBinaryMatrix, i0: int, j0: int, n: int):
    """The 0-based permutation whose matrix sits at anchor (i0, j0), or None."""
    word = [0] * n
    seen = 0
    for i in range(n):
        bits = t.window(i0 + i, j0, n)
        if bits == 0 or bits & (bits - 1):
            return None
        if seen & bits:
            return None
        seen |= bits
        # row i has its single 1 in column j, i.e. pi(j) = i
        word[bits.bit_length() - 1] = i
    return tuple(word)


def permutations_in(t: ToricBinaryMatrix, n: int, shortcut: bool = True) -> set[Permutation]:
    """Every permutation whose matrix occurs in t as a block.

    With ``shortcut`` and exactly n rows (resp. n columns), only row anchor 0
    (resp. column anchor 0) is scanned and the hits are closed under value
    shifts (resp. word rotations); toricity guarantees the other anchors
    contribute exactly those class members.
    """
    _check_block_fits(t, n)
    if shortcut and t.m == n:
        hits = {_block_perm0(t, 0, j0, n) for j0 in range(t.p)}
        hits.discard(None)
        return {q for h in hits for q in inc_class(from0(h)).members()}
    if shortcut and t.p == n:
        hits = {_block_perm0(t, i0, 0, n) for i0 in range(t.m)}
        hits.discard(None)
        return {q for h in hits for q in rot_class(from0(h)).members()}
    hits = {_block_perm0(t, i0, j0, n) for i0 in range(t.m) for j0 in range(t.p)}
    hits.discard(None)
    return {from0(h) for h in hits}


@dataclass
class MatrixReport:
    ok: bool
    n: int
    missing: list[Permutation] = field(default_factory=list)
    method: str = "full scan"

    def __bool__(self):
        return self.ok


def is_superpermutation_matrix(t: ToricBinaryMatrix, n: int, shortcut: bool = True) -> MatrixReport:
    found = permutations_in(t, n, shortcut=shortcut)
    missing = [q for q in all_permutations(n) if q not in found]
    if shortcut and t.m == n:
        method = "row anchor 0, closed under value shifts"
    elif shortcut and t.p == n:
        method = "column anchor 0, closed under rotations"
    else:
        method = "full scan"
    return MatrixReport(not missing, n, missing, method)


def transpose(t: ToricBinaryMatrix) -> ToricBinaryMatrix:
    rows = [sum(((t.rows[i] >> j) & 1) << i for i in range(t.m)) for j in range(t.p)]
    return ToricBinaryMatrix.from_rows(rows, t.m)


def word_to_matrix(w, n: int | None = None) -> ToricBinaryMatrix:
    """n x |w| matrix whose i-th column is e_{w(i)}."""
    w = as_word(w, n)
    if not w.letters:
        raise ValueError("empty word")
    rows = [0] * w.n
    for j, letter in enumerate(w.letters):
        rows[letter - 1] |= 1 << j
    return ToricBinaryMatrix.from_rows(rows, len(w.letters))


def matrix_to_word(t: ToricBinaryMatrix) -> UniversalWord:
    letters = []
    for j in range(t.p):
        ones = [i for i in range(t.m) if (t.rows[i] >> j) & 1]
        if len(ones) != 1:
            raise ValueError(f"column {j + 1} is not a basis vector")
        letters.append(ones[0] + 1)
    return UniversalWord(tuple(letters), t.m)


def square_pad(t: ToricBinaryMatrix, n: int) -> ToricBinaryMatrix:
    """Square an n-row superpermutation matrix: rows L1..Ln, L1..L(n-1), then zero rows."""
    if t.m != n:
        raise ValueError(f"expected {n} rows, got {t.m}")
    if t.p < 2 * n - 1:
        raise ValueError(f"need at least {2 * n - 1} columns, got {t.p}")
    rows = list(t.rows) + list(t.rows[: n - 1])
    rows += [0] * (t.p - len(rows))
    return ToricBinaryMatrix.from_rows(rows, t.p)


@dataclass
class BruteResult:
    n: int
    columns: int
    witness: ToricBinaryMatrix
    candidates_checked: int
    note: str = (
        "search restricted to matrices whose columns are basis vectors: with exactly n rows "
        "every block spans all rows, so a column with zero or several 1s lies in no "
        "permutation block and can be dropped"
    )


class SearchExhausted(LookupError):
    pass


def brute_min_columns(n: int, max_cols: int) -> BruteResult:
    """Smallest p with an n x p superpermutation matrix, by exhaustive search (n <= 3)."""
    if n > 3:
        raise ValueError("exhaustive search is limited to n <= 3")
    if n < 1:
        raise ValueError("n must be positive")
    checked = 0
    for p in range(n, max_cols + 1):
        for word in itertools.product(range(1, n + 1), repeat=p):
            # one representative per rotation class of cyclic words
            if any(word[k:] + word[:k] < word for k in range(1, p)):
                continue
            checked += 1
            t = word_to_matrix(word, n)
            if is_superpermutation_matrix(t, n):
                return BruteResult(n, p, t, checked)
    raise SearchExhausted(f"no {n}-row superpermutation matrix with at most {max_cols} columns")
