"""Permutations as one-line words, the cyclic shift sigma, and the two class actions.

Every public function speaks 1-based values (``1243`` means pi(1)=1, pi(2)=2,
pi(3)=4, pi(4)=3).  The graph and search code work on 0-based tuples for speed;
the ``*0`` helpers at the bottom of this module are the bridge.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np


def format_word(letters: Sequence[int], n: int) -> str:
    """Digit string for n <= 9, comma separated integers beyond."""
    if n <= 9:
        return "".join(str(x) for x in letters)
    return ",".join(str(x) for x in letters)


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text:
        return tuple(int(tok) for tok in text.split(",") if tok.strip())
    if not text.isdigit():
        raise ValueError(f"cannot parse word {text!r}")
    return tuple(int(ch) for ch in text)


@dataclass(frozen=True, order=True)
class Permutation:
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(int(x) for x in self.word)
        object.__setattr__(self, "word", word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a permutation of 1..{len(word)}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        return self.word[i - 1]

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return format_word(self.word, self.n)

    def __repr__(self):
        return f"Permutation({self})"

    @classmethod
    def parse(cls, text: str) -> Permutation:
        return cls(parse_word(text))


def perm(text_or_word) -> Permutation:
    """Shorthand: ``perm("1243")`` or ``perm([1, 2, 4, 3])``."""
    if isinstance(text_or_word, Permutation):
        return text_or_word
    if isinstance(text_or_word, str):
        return Permutation.parse(text_or_word)
    return Permutation(tuple(text_or_word))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def all_permutations(n: int) -> Iterable[Permutation]:
    """S_n in lexicographic order of words."""
    for w in itertools.permutations(range(1, n + 1)):
        yield Permutation(w)


def _check_same_size(a: Permutation, b: Permutation):
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a o b)(i) = a(b(i))."""
    _check_same_size(a, b)
    return Permutation(tuple(a.word[j - 1] for j in b.word))


def inverse(a: Permutation) -> Permutation:
    inv = [0] * a.n
    for i, v in enumerate(a.word, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def sigma(n: int) -> Permutation:
    """The n-cycle i -> i+1 (mod n); word 23...n1."""
    if n < 1:
        raise ValueError("n must be positive")
    return Permutation(tuple(range(2, n + 1)) + (1,))


def order(a: Permutation) -> int:
    seen = set()
    result = 1
    for start in range(1, a.n + 1):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = a(x)
            length += 1
        result = math.lcm(result, length)
    return result


def power(a: Permutation, k: int) -> Permutation:
    """a^k for any integer k (negative exponents via the order of a)."""
    result = identity(a.n)
    for _ in range(k % order(a)):
        result = compose(a, result)
    return result


def shift_values(a: Permutation, k: int) -> Permutation:
    """Add k to every letter modulo n; equals compose(sigma^k, a)."""
    n = a.n
    return Permutation(tuple((x - 1 + k) % n + 1 for x in a.word))


def rotate_word(a: Permutation, k: int) -> Permutation:
    """Rotate the word left by k; equals compose(a, sigma^k)."""
    k %= a.n
    return Permutation(a.word[k:] + a.word[:k])


@dataclass(frozen=True, order=True)
class IncClass:
    """Value-shift class {sigma^k o pi}; ``rep`` is the member whose word starts with 1."""

    rep: Permutation

    def __post_init__(self):
        if self.rep.word[0] != 1:
            raise ValueError(f"{self.rep} is not a canonical representative")

    @property
    def n(self) -> int:
        return self.rep.n

    def members(self) -> list[Permutation]:
        return [shift_values(self.rep, k) for k in range(self.n)]

    def __str__(self):
        return f"inc({self.rep})"


@dataclass(frozen=True, order=True)
class RotClass:
    """Rotation class {pi o sigma^k}; ``rep`` is the rotation whose word starts with 1."""

    rep: Permutation

    def __post_init__(self):
        if self.rep.word[0] != 1:
            raise ValueError(f"{self.rep} is not a canonical representative")

    @property
    def n(self) -> int:
        return self.rep.n

    def members(self) -> list[Permutation]:
        return [rotate_word(self.rep, k) for k in range(self.n)]

    def __str__(self):
        return f"rot({self.rep})"


def inc_class(a: Permutation) -> IncClass:
    return IncClass(shift_values(a, 1 - a.word[0]))


def rot_class(a: Permutation) -> RotClass:
    return RotClass(rotate_word(a, a.word.index(1)))


def perm_matrix(a: Permutation) -> np.ndarray:
    """M(pi): column j is the basis vector e_{pi(j)}; read-only uint8 array."""
    n = a.n
    m = np.zeros((n, n), dtype=np.uint8)
    m[np.array(a.word) - 1, np.arange(n)] = 1
    m.setflags(write=False)
    return m


def matrix_to_perm(m) -> Permutation:
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("not a square matrix")
    if not np.isin(arr, (0, 1)).all():
        raise ValueError("not a permutation matrix: entries outside {0,1}")
    if (arr.sum(axis=0) != 1).any() or (arr.sum(axis=1) != 1).any():
        raise ValueError("not a permutation matrix: a row or column sum differs from 1")
    return Permutation(tuple(int(i) + 1 for i in arr.argmax(axis=0)))


# 0-based helpers for the graph and search code

def canon_inc0(w: Sequence[int], n: int) -> tuple[int, ...]:
    s = w[0]
    return tuple((x - s) % n for x in w)


def canon_rot0(w: Sequence[int]) -> tuple[int, ...]:
    i = list(w).index(0)
    return tuple(w[i:]) + tuple(w[:i])


@lru_cache(maxsize=None)
def class_reps0(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical 0-based representatives (first letter 0) in lexicographic order.

    The same list serves both class kinds: inc reps and rot reps are exactly
    the permutations starting with their smallest letter.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return tuple((0,) + p for p in itertools.permutations(range(1, n)))


@lru_cache(maxsize=None)
def class_index0(n: int) -> dict[tuple[int, ...], int]:
    return {rep: i for i, rep in enumerate(class_reps0(n))}


def to0(a: Permutation) -> tuple[int, ...]:
    return tuple(x - 1 for x in a.word)


def from0(w: Sequence[int]) -> Permutation:
    return Permutation(tuple(x + 1 for x in w))


def inc_classes(n: int) -> list[IncClass]:
    return [IncClass(from0(r)) for r in class_reps0(n)]


def rot_classes(n: int) -> list[RotClass]:
    return [RotClass(from0(r)) for r in class_reps0(n)]
