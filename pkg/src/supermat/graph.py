"""Transition graphs H_n (value-shift classes, append columns) and K_n (rotation classes, append rows).

Vertices are the (n-1)! canonical representatives in lexicographic order.  An
edge weight is the least number of letters to append to a member of the source
class (dropping as many from its front) so that the last n letters form a
member of the target class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .perms import (
    IncClass,
    Permutation,
    RotClass,
    canon_inc0,
    class_index0,
    class_reps0,
    from0,
    inc_class,
    inc_classes,
    inverse,
    perm_matrix,
    rot_class,
    rot_classes,
    rotate_word,
    to0,
)
from .toric import UniversalWord, as_word

DEFAULT_MAX_N = 9
DEFAULT_MATERIALIZE_UPTO = 7


class BudgetExceeded(RuntimeError):
    pass


class NotUniversal(ValueError):
    pass


def check_budget(n: int, max_n: int = DEFAULT_MAX_N):
    if n < 1:
        raise ValueError("n must be positive")
    if n > max_n:
        raise BudgetExceeded(f"(n-1)! vertices for n={n} exceeds the budget (max n={max_n})")


def extend_window(window: Sequence[int], target_rep: Sequence[int], n: int) -> tuple[int, tuple[int, ...]]:
    """Cheapest move from a concrete 0-based window into the class of ``target_rep``.

    Returns (k, new_window): k letters appended, new_window the member of the
    target class that now ends the word.  For k >= 1 the member is forced by
    its first letter, window[k].
    """
    window = tuple(window)
    if canon_inc0(window, n) == tuple(target_rep):
        return 0, window
    for k in range(1, n):
        s = window[k]
        member = tuple((x + s) % n for x in target_rep)
        if member[: n - k] == window[k:]:
            return k, member
    raise AssertionError("unreachable: a length-1 overlap always exists")


def edge_weight_H(a: IncClass, b: IncClass) -> int:
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")
    return extend_window(to0(a.rep), to0(b.rep), a.n)[0]


def edge_weight_K(a: RotClass, b: RotClass) -> int:
    """Weight in K_n, through the transpose duality with H_n on inverse permutations."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")
    return edge_weight_H(inc_class(inverse(a.rep)), inc_class(inverse(b.rep)))


def edge_weight_K_rows(a: RotClass, b: RotClass) -> int:
    """Weight in K_n by matching matrix rows directly (independent of the duality)."""
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")
    if a == b:
        return 0
    n = a.n
    rows_a = [tuple(r) for r in perm_matrix(a.rep)]
    targets = [[tuple(r) for r in perm_matrix(q)] for q in b.members()]
    for k in range(1, n + 1):
        tail = rows_a[k:]
        if any(t[: n - k] == tail for t in targets):
            return k
    raise AssertionError("unreachable")


def weight1_successor(a: IncClass) -> IncClass:
    return inc_class(rotate_word(a.rep, 1))


class TransitionGraph:
    """H_n or K_n with a dense weight matrix (n <= materialize_upto) or lazy rows."""

    def __init__(self, n: int, kind: str = "H", materialize_upto: int = DEFAULT_MATERIALIZE_UPTO):
        kind = kind.upper()
        if kind not in ("H", "K"):
            raise ValueError("kind must be 'H' or 'K'")
        self.n = n
        self.kind = kind
        self.reps0 = class_reps0(n)
        self.index = class_index0(n)
        self._reps = np.array(self.reps0, dtype=np.int16).reshape(len(self.reps0), n)
        self._rows: dict[int, np.ndarray] = {}
        if kind == "K":
            # K_n(a, b) = H_n(inc(a^-1), inc(b^-1))
            self._to_h = np.array(
                [self.index[canon_inc0(_inverse0(r), n)] for r in self.reps0], dtype=np.int64
            )
        self._matrix = None
        if n <= materialize_upto:
            self._matrix = np.stack([self._compute_row(i) for i in range(len(self.reps0))])
            self._matrix.setflags(write=False)

    def __len__(self):
        return len(self.reps0)

    @property
    def vertices(self) -> list:
        return inc_classes(self.n) if self.kind == "H" else rot_classes(self.n)

    def vertex_label(self, i: int) -> str:
        return str(from0(self.reps0[i]))

    def _h_row(self, rep: Sequence[int]) -> np.ndarray:
        n = self.n
        reps = self._reps
        w = np.full(len(self.reps0), n - 1, dtype=np.int8)
        done = np.zeros(len(self.reps0), dtype=bool)
        for k in range(1, n - 1):
            suffix = np.array(rep[k:], dtype=np.int16)
            match = np.all((reps[:, : n - k] + rep[k]) % n == suffix, axis=1)
            w[match & ~done] = k
            done |= match
        w[self.index[canon_inc0(rep, n)]] = 0
        return w

    def _compute_row(self, i: int) -> np.ndarray:
        if self.kind == "H":
            return self._h_row(self.reps0[i])
        h_row = self._h_row(self.reps0[self._to_h[i]])
        return h_row[self._to_h]

    def weight_row(self, i: int) -> np.ndarray:
        """Weights of all edges leaving vertex i."""
        if self._matrix is not None:
            return self._matrix[i]
        row = self._rows.get(i)
        if row is None:
            row = self._compute_row(i)
            row.setflags(write=False)
            # identical values under concurrent insertion, so a plain dict is enough
            self._rows[i] = row
        return row

    def weight(self, i: int, j: int) -> int:
        if self._matrix is not None:
            return int(self._matrix[i, j])
        if self.kind == "H":
            return extend_window(self.reps0[i], self.reps0[j], self.n)[0]
        return extend_window(self.reps0[self._to_h[i]], self.reps0[self._to_h[j]], self.n)[0]

    def weight_matrix(self) -> np.ndarray:
        if self._matrix is not None:
            return self._matrix
        return np.stack([self.weight_row(i) for i in range(len(self))])

    def successor1(self, i: int) -> int | None:
        """Index of the weight-1 out-neighbour, or None for a fixed point."""
        n = self.n
        rep = self.reps0[i]
        if self.kind == "H":
            j = self.index[canon_inc0(rep[1:] + rep[:1], n)]
        else:
            h = self.reps0[self._to_h[i]]
            hj = self.index[canon_inc0(h[1:] + h[:1], n)]
            j = int(np.flatnonzero(self._to_h == hj)[0])
        return None if j == i else j

    def edges(self, max_weight: int = 1):
        """(i, j, w) for i != j with w <= max_weight, in vertex order."""
        for i in range(len(self)):
            row = self.weight_row(i)
            for j in np.flatnonzero((row <= max_weight) & (row > 0)):
                yield i, int(j), int(row[j])


def _inverse0(w: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, v in enumerate(w):
        inv[v] = i
    return tuple(inv)


def build_graph(n: int, kind: str = "H", max_n: int = DEFAULT_MAX_N,
                materialize_upto: int = DEFAULT_MATERIALIZE_UPTO) -> TransitionGraph:
    check_budget(n, max_n)
    return TransitionGraph(n, kind, materialize_upto=materialize_upto)


@dataclass(frozen=True)
class CoveringPath:
    """A walk through H_n given by vertex indices (lexicographic class order)."""

    n: int
    vertices: tuple[int, ...]
    kind: str = "H"

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        size = len(class_reps0(self.n))
        if not self.vertices:
            raise ValueError("malformed path: no vertices")
        if any(not 0 <= v < size for v in self.vertices):
            raise ValueError("malformed path: vertex index out of range")
        if any(a == b for a, b in zip(self.vertices, self.vertices[1:])):
            raise ValueError("malformed path: repeated consecutive vertex")

    @property
    def classes(self) -> list[IncClass]:
        reps = class_reps0(self.n)
        return [IncClass(from0(reps[v])) for v in self.vertices]

    def is_covering(self) -> bool:
        return len(set(self.vertices)) == len(class_reps0(self.n))

    def weight(self) -> int:
        reps = class_reps0(self.n)
        return sum(
            extend_window(reps[a], reps[b], self.n)[0]
            for a, b in zip(self.vertices, self.vertices[1:])
        )


def path_to_word(p: CoveringPath) -> UniversalWord:
    """Start from the first representative, then append the letters each edge demands."""
    if p.kind != "H":
        raise ValueError("words correspond to paths in H_n")
    n = p.n
    reps = class_reps0(n)
    window = reps[p.vertices[0]]
    letters = list(window)
    for v in p.vertices[1:]:
        k, window = extend_window(window, reps[v], n)
        letters.extend(window[n - k:])
    return UniversalWord(tuple(x + 1 for x in letters), n)


def window_classes(letters: Sequence[int], n: int) -> list[int]:
    """Class index of every length-n window that is a permutation, in order (0-based letters)."""
    index = class_index0(n)
    out = []
    full = set(range(n))
    for i in range(len(letters) - n + 1):
        w = letters[i: i + n]
        if set(w) == full:
            out.append(index[canon_inc0(w, n)])
    return out


@dataclass
class WordReport:
    ok: bool
    n: int
    missing: list[IncClass]

    def __bool__(self):
        return self.ok


def verify_universal_word(u, n: int | None = None) -> WordReport:
    w = as_word(u, n)
    seen = set(window_classes([x - 1 for x in w.letters], w.n))
    reps = class_reps0(w.n)
    missing = [IncClass(from0(reps[i])) for i in range(len(reps)) if i not in seen]
    return WordReport(not missing, w.n, missing)


def word_to_path(u, n: int | None = None) -> CoveringPath:
    """Classes of the permutation windows of u, in order of appearance.

    Consecutive windows of the same class collapse to one vertex.  The path
    weight is at most |u| - n, with equality when no letter is wasted.
    """
    w = as_word(u, n)
    report = verify_universal_word(w)
    if not report:
        raise NotUniversal(f"word misses {len(report.missing)} classes, e.g. {report.missing[0]}")
    seq = window_classes([x - 1 for x in w.letters], w.n)
    collapsed = [seq[0]]
    for v in seq[1:]:
        if v != collapsed[-1]:
            collapsed.append(v)
    return CoveringPath(w.n, tuple(collapsed))
