"""Classical superpermutations: verification, the Ashlock-Tillotson recursion, and G_n paths."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Sequence

from .perms import Permutation, all_permutations


@dataclass
class SuperpermReport:
    ok: bool
    n: int
    missing: list[Permutation] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def permutation_windows(word: Sequence[int], n: int) -> list[tuple[int, ...]]:
    """Length-n factors that are permutations of 1..n, in order of appearance (repeats kept)."""
    full = set(range(1, n + 1))
    word = tuple(word)
    return [word[i: i + n] for i in range(len(word) - n + 1) if set(word[i: i + n]) == full]


def is_superpermutation(word: Sequence[int], n: int) -> SuperpermReport:
    if any(not 1 <= x <= n for x in word):
        raise ValueError(f"letters must lie in 1..{n}")
    found = set(permutation_windows(word, n))
    missing = [p for p in all_permutations(n) if p.word not in found]
    return SuperpermReport(not missing, n, missing)


def _merge(left: list[int], right: Sequence[int]) -> None:
    """Append ``right`` to ``left`` dropping the longest suffix/prefix overlap."""
    for k in range(min(len(left), len(right) - 1), 0, -1):
        if left[-k:] == list(right[:k]):
            left.extend(right[k:])
            return
    left.extend(right)


def ashlock_tillotson(n: int) -> tuple[int, ...]:
    """Recursive superpermutation of length 1! + 2! + ... + n!."""
    if n < 1:
        raise ValueError("n must be positive")
    word: list[int] = [1]
    for m in range(2, n + 1):
        seen, order = set(), []
        for w in permutation_windows(word, m - 1):
            if w not in seen:
                seen.add(w)
                order.append(w)
        out: list[int] = []
        for w in order:
            _merge(out, list(w) + [m] + list(w))
        word = out
    return tuple(word)


def g_weight(a: Permutation, b: Permutation) -> int:
    """Fewest letters u with b a suffix of a.u."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")
    n = a.n
    for k in range(n + 1):
        if a.word[k:] == b.word[: n - k]:
            return k
    raise AssertionError("unreachable")


def path_to_superperm(path: Sequence[Permutation]) -> tuple[int, ...]:
    """Word of length w(path) + n spelled by a walk in G_n."""
    if not path:
        raise ValueError("empty path")
    n = path[0].n
    word = list(path[0].word)
    for a, b in zip(path, path[1:]):
        if b.n != n:
            raise ValueError("mixed permutation sizes")
        k = g_weight(a, b)
        word.extend(b.word[n - k:])
    return tuple(word)


def superperm_to_path(word: Sequence[int], n: int) -> list[Permutation]:
    report = is_superpermutation(word, n)
    if not report:
        raise ValueError(f"not a superpermutation: {len(report.missing)} permutations missing")
    path = [Permutation(w) for w in permutation_windows(word, n)]
    return [p for i, p in enumerate(path) if i == 0 or p != path[i - 1]]


def path_weight(path: Sequence[Permutation]) -> int:
    return sum(g_weight(a, b) for a, b in zip(path, path[1:]))


def classic_lower_bound(n: int) -> int:
    if n < 3:
        raise ValueError("lower-bound formula needs n >= 3")
    return factorial(n) + factorial(n - 1) + factorial(n - 2) + n - 3


def classic_upper_bound(n: int) -> int:
    if n < 4:
        raise ValueError("upper-bound formula needs n >= 4")
    return factorial(n) + factorial(n - 1) + factorial(n - 2) + factorial(n - 3) + n - 3


def classic_bounds(n: int) -> tuple[int, int]:
    return classic_lower_bound(n), classic_upper_bound(n)
