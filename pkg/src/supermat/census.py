"""Weight-1 cycles of H_n: enumeration, Euler's totient, E(d, n) and the divisor recursion."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .graph import check_budget
from .perms import IncClass, canon_inc0, class_index0, class_reps0, from0


def euler_phi(k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    result, m, p = k, k, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class CycleCensus:
    n: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        """L(n), the number of 1-cycles."""
        return sum(self.counts.values())

    @property
    def covered(self) -> int:
        return sum(d * c for d, c in self.counts.items())

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "counts": {str(d): c for d, c in sorted(self.counts.items())},
            "phi": euler_phi(self.n),
            "sum_d_counts": self.covered,
            "vertices": factorial(self.n - 1),
            "total_cycles": self.total,
        }


def one_cycle_ids(n: int, max_n: int = 9) -> tuple[list[int], list[list[int]]]:
    """Orbits of the weight-1 successor map over vertex indices.

    Returns (cycle_of_vertex, cycles); cycles are listed by smallest member and
    each one starts at that member, following weight-1 edges.
    """
    check_budget(n, max_n)
    reps = class_reps0(n)
    index = class_index0(n)
    succ = [index[canon_inc0(r[1:] + r[:1], n)] for r in reps]
    cycle_of = [-1] * len(reps)
    cycles = []
    for start in range(len(reps)):
        if cycle_of[start] >= 0:
            continue
        orbit, v = [], start
        while cycle_of[v] < 0:
            cycle_of[v] = len(cycles)
            orbit.append(v)
            v = succ[v]
        if v != start:
            raise AssertionError("weight-1 successor map is not a permutation")
        cycles.append(orbit)
    return cycle_of, cycles


def enumerate_one_cycles(n: int, max_n: int = 9) -> list[list[IncClass]]:
    reps = class_reps0(n)
    return [[IncClass(from0(reps[v])) for v in orbit] for orbit in one_cycle_ids(n, max_n)[1]]


def census_enumerated(n: int, max_n: int = 9) -> CycleCensus:
    counts = {d: 0 for d in divisors(n)}
    for orbit in one_cycle_ids(n, max_n)[1]:
        counts[len(orbit)] = counts.get(len(orbit), 0) + 1
    return CycleCensus(n, counts)


def e_count(d: int, n: int) -> int:
    """|E(d, n)| = phi(n/d) (n/d)^(d-1) (d-1)!."""
    if d < 1 or n % d:
        raise ValueError(f"{d} does not divide {n}")
    p = n // d
    return euler_phi(p) * p ** (d - 1) * factorial(d - 1)


def enumerate_e_set(d: int, n: int) -> set[int]:
    """Vertex indices of inc-classes with pi(i+d) = pi(i) + k for some k, all i mod n."""
    if n % d:
        raise ValueError(f"{d} does not divide {n}")
    out = set()
    for idx, r in enumerate(class_reps0(n)):
        k = (r[d % n] - r[0]) % n
        if all((r[(i + d) % n] - r[i]) % n == k for i in range(n)):
            out.add(idx)
    return out


def census_formula(n: int) -> CycleCensus:
    """Cycle counts from |E(d, n)| by the recursion over divisors, smallest first."""
    if n < 1:
        raise ValueError("n must be positive")
    counts: dict[int, int] = {}
    for d in divisors(n):
        rest = e_count(d, n) - sum(k * counts[k] for k in counts if d % k == 0)
        q, r = divmod(rest, d)
        if r or q < 0:
            raise ArithmeticError(f"non-integral cycle count at n={n}, d={d}")
        counts[d] = q
    return CycleCensus(n, counts)
