"""Short universal words from covering paths of H_n.

Three constructions share one result type:

* ``greedy_cycle_path`` walks each weight-1 cycle completely, then jumps to the
  cheapest vertex of an unvisited cycle (measured from the current vertex).
* ``nearest_neighbor_path`` always moves to the cheapest unvisited vertex.
* ``exact_min_word`` is a depth-first branch and bound over simple covering
  paths, seeded with the greedy word.

Every tie is broken towards the smallest vertex index, i.e. the
lexicographically smallest canonical representative.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .census import one_cycle_ids
from .graph import CoveringPath, TransitionGraph, build_graph, path_to_word
from .perms import IncClass, canon_inc0, class_index0, class_reps0, to0
from .toric import UniversalWord

logger = logging.getLogger(__name__)

MEMO_LIMIT = 4_000_000


@dataclass
class SearchResult:
    n: int
    method: str
    word: UniversalWord
    length: int
    weight: int
    optimal: bool
    elapsed: float
    path: CoveringPath
    nodes_expanded: int = 0

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "method": self.method,
            "word": str(self.word),
            "length": self.length,
            "weight": self.weight,
            "optimal": self.optimal,
            "elapsed": round(self.elapsed, 6),
            "nodes_expanded": self.nodes_expanded,
            "path": [str(c.rep) for c in self.path.classes],
        }


def _result(n, method, vertices, started, optimal=False, nodes=0) -> SearchResult:
    path = CoveringPath(n, tuple(vertices))
    word = path_to_word(path)
    weight = len(word) - n
    return SearchResult(n, method, word, len(word), weight, optimal,
                        time.perf_counter() - started, path, nodes)


def _successors(n: int) -> list[int]:
    index = class_index0(n)
    return [index[canon_inc0(r[1:] + r[:1], n)] for r in class_reps0(n)]


def _graph(n: int, graph: TransitionGraph | None) -> TransitionGraph:
    if graph is None:
        return build_graph(n, "H")
    if graph.n != n or graph.kind != "H":
        raise ValueError("expected H_n for the requested n")
    return graph


def greedy_cycle_path(n: int, graph: TransitionGraph | None = None) -> SearchResult:
    started = time.perf_counter()
    g = _graph(n, graph)
    succ = _successors(n)
    cycle_of, cycles = one_cycle_ids(n)
    cycle_of = np.array(cycle_of)
    done_cycles = np.zeros(len(cycles), dtype=bool)
    cur = 0
    path = [cur]
    while True:
        # the entry vertex's predecessor on the cycle is reached after d-1 weight-1 edges
        for _ in range(len(cycles[cycle_of[cur]]) - 1):
            cur = succ[cur]
            path.append(cur)
        done_cycles[cycle_of[cur]] = True
        if done_cycles.all():
            break
        row = g.weight_row(cur).astype(np.int64)
        row[done_cycles[cycle_of]] = n + 1
        cur = int(np.argmin(row))
        path.append(cur)
    return _result(n, "greedy-cycle", path, started)


def nearest_neighbor_path(n: int, start: IncClass | None = None,
                          graph: TransitionGraph | None = None) -> SearchResult:
    started = time.perf_counter()
    g = _graph(n, graph)
    cur = 0 if start is None else class_index0(n)[to0(start.rep)]
    visited = np.zeros(len(g), dtype=bool)
    visited[cur] = True
    path = [cur]
    for _ in range(len(g) - 1):
        row = g.weight_row(cur).astype(np.int64)
        row[visited] = n + 1
        cur = int(np.argmin(row))
        visited[cur] = True
        path.append(cur)
    return _result(n, "nearest-neighbor", path, started)


def remaining_lower_bound(unvisited: int, untouched_cycles: int) -> int:
    """Every new vertex costs at least 1; entering an untouched 1-cycle costs at least 2."""
    return unvisited + untouched_cycles


def prefix_potential(n: int, vertices: Sequence[int]) -> int:
    """Lower bound on the weight still needed after the walk ``vertices``."""
    cycle_of, cycles = one_cycle_ids(n)
    seen = set(vertices)
    touched = {cycle_of[v] for v in seen}
    return remaining_lower_bound(len(class_reps0(n)) - len(seen), len(cycles) - len(touched))


class _Stop(Exception):
    pass


def exact_min_word(n: int, time_limit: float | None = None, node_limit: int | None = None,
                   on_improve: Callable[[SearchResult], None] | None = None,
                   graph: TransitionGraph | None = None) -> SearchResult:
    """Branch and bound for the shortest universal word.

    Only simple paths are explored: H_n weights satisfy the triangle inequality,
    so revisiting a vertex never shortens a walk.  ``optimal`` is True only when
    the search space was exhausted within the limits.
    """
    started = time.perf_counter()
    g = _graph(n, graph)
    V = len(g)
    W = g.weight_matrix().tolist()
    cycle_of, cycles = one_cycle_ids(n)
    seed = greedy_cycle_path(n, g)
    best = {"weight": seed.weight, "path": list(seed.path.vertices)}
    if on_improve:
        on_improve(seed)
    order = [sorted((j for j in range(V) if j != i), key=lambda j: (W[i][j], j)) for i in range(V)]
    memo: dict[tuple[int, int], int] = {}
    nodes = 0
    deadline = None if time_limit is None else started + time_limit
    path: list[int] = []

    def dfs(v, mask, cyc_mask, weight, unvisited, untouched):
        nonlocal nodes
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise _Stop
        if deadline is not None and nodes % 4096 == 0 and time.perf_counter() > deadline:
            raise _Stop
        if unvisited == 0:
            if weight < best["weight"]:
                best["weight"], best["path"] = weight, list(path)
                logger.info("n=%d: improved to length %d", n, weight + n)
                if on_improve:
                    on_improve(_result(n, "exact", path, started, nodes=nodes))
            return
        floor = unvisited - 1 + max(untouched - 1, 0)
        for j in order[v]:
            if mask >> j & 1:
                continue
            w = W[v][j]
            if weight + w + floor >= best["weight"]:
                break
            c = cycle_of[j]
            fresh = not (cyc_mask >> c & 1)
            new_weight = weight + w
            if new_weight + remaining_lower_bound(unvisited - 1, untouched - fresh) >= best["weight"]:
                continue
            key = (mask | 1 << j, j)
            prev = memo.get(key)
            if prev is not None and prev <= new_weight:
                continue
            if prev is not None or len(memo) < MEMO_LIMIT:
                memo[key] = new_weight
            path.append(j)
            dfs(j, mask | 1 << j, cyc_mask | 1 << c, new_weight, unvisited - 1, untouched - fresh)
            path.pop()

    exhausted = True
    try:
        for s in range(V):
            if remaining_lower_bound(V - 1, len(cycles) - 1) >= best["weight"]:
                break
            path[:] = [s]
            dfs(s, 1 << s, 1 << cycle_of[s], 0, V - 1, len(cycles) - 1)
    except _Stop:
        exhausted = False
    return _result(n, "exact", best["path"], started, optimal=exhausted, nodes=nodes)
