"""Closed-form bounds on the shortest universal word for value-shift classes.

All arithmetic is exact: ints for I, C, B, S, L and Fractions for B' and the
ratio diagnostics.

C(n) is computed as (n-1)! + n - 2 + L(n).  The lower-bound argument ends
with the constant n - 2, and the published table (C(3)=5, C(4)=11, C(5)=35)
agrees with it, although the displayed statement reads n - 1.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import factorial

from .census import census_formula, divisors, euler_phi

# Values as printed in the published table; PUBLISHED[n] = (I, C, best, B, S).
PUBLISHED = {
    1: (1, 1, 1, 1, 1),
    2: (2, 2, 2, 3, 2),
    3: (4, 5, 5, 5, 5),
    4: (9, 11, 12, 13, 19),
    5: (28, 35, 39, 49, 97),
    6: (125, 148, 164, 217, 601),
    7: (726, 823, 915, 1261, 4321),
    8: (5047, 5686, 6118, 8881, 35280),
}
PUBLISHED_COLUMNS = ("I", "C", "best", "B", "S")


def _check_n(n: int):
    if n < 1:
        raise ValueError("n must be positive")


def bound_I(n: int) -> int:
    _check_n(n)
    return factorial(n - 1) + n - 1


def bound_S(n: int) -> int:
    _check_n(n)
    return (n - 1) * factorial(n - 1) + 1


def bound_L(n: int) -> int:
    return census_formula(n).total


def bound_B(n: int) -> int:
    census = census_formula(n)
    return 1 + sum(c * (d + n - 2) for d, c in census.counts.items())


def bound_B_from_total(n: int) -> int:
    """The same bound written as 1 + (n-1)! + L(n)(n-2)."""
    return 1 + factorial(n - 1) + bound_L(n) * (n - 2)


def bound_C(n: int) -> int:
    _check_n(n)
    return factorial(n - 1) + n - 2 + bound_L(n)


def totient_sum(n: int) -> Fraction:
    """sum over d | n of phi(n/d) n^(d-1) (d-1)! / d^d."""
    _check_n(n)
    return sum(
        (Fraction(euler_phi(n // d) * n ** (d - 1) * factorial(d - 1), d ** d) for d in divisors(n)),
        Fraction(0),
    )


def bound_Bprime(n: int) -> Fraction:
    return 1 + factorial(n - 1) + totient_sum(n) * (n - 2)


def is_prime(p: int) -> bool:
    return p >= 2 and euler_phi(p) == p - 1


def prime_B_closed_form(p: int) -> int:
    """1 + (p-1)^2 (2((p-2)! - 1)/p + 1), exact for prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    value = 1 + (p - 1) ** 2 * (Fraction(2 * (factorial(p - 2) - 1), p) + 1)
    if value.denominator != 1:
        raise ArithmeticError(f"closed form is not integral at p={p}")
    return int(value)


def prime_B_expanded(p: int) -> int:
    """1 + (p-1)^2 + 2(p-1)((p-1)! - (p-1))/p, the intermediate form of the prime case."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q, r = divmod(factorial(p - 1) - (p - 1), p)
    if r:
        raise ArithmeticError(f"(p-1)! - (p-1) not divisible by p={p}")
    return 1 + (p - 1) ** 2 + 2 * (p - 1) * q


@dataclass
class BoundsRow:
    n: int
    I: int
    C: int
    B: int
    S: int
    Bprime: Fraction
    best_found: int | None = None
    best_optimal: bool = False

    def as_dict(self) -> dict:
        d = asdict(self)
        d["Bprime"] = f"{self.Bprime.numerator}/{self.Bprime.denominator}"
        return d


def bounds_row(n: int, best_found: int | None = None, best_optimal: bool = False) -> BoundsRow:
    return BoundsRow(n, bound_I(n), bound_C(n), bound_B(n), bound_S(n), bound_Bprime(n),
                     best_found, best_optimal)


def bounds_table(n_max: int, best: dict[int, tuple[int, bool]] | None = None) -> list[BoundsRow]:
    """Rows 1..n_max; ``best`` maps n to (length, optimal) from the constructions."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    best = best or {}
    rows = []
    for n in range(1, n_max + 1):
        length, optimal = best.get(n, (None, False))
        rows.append(bounds_row(n, length, optimal))
    return rows


def published_discrepancies(rows: list[BoundsRow]) -> list[str]:
    """Human-readable notes where a computed value differs from the printed table."""
    notes = []
    for row in rows:
        printed = PUBLISHED.get(row.n)
        if printed is None:
            continue
        for col, value in zip(PUBLISHED_COLUMNS, printed):
            if col == "best":
                continue
            ours = getattr(row, col)
            if ours != value:
                notes.append(
                    f"{col}({row.n}) = {ours} from the formula; the published table prints {value}"
                )
    return notes


@dataclass
class RatioEntry:
    n: int
    B_ratio: Fraction       # B(n)/(n-1)!
    Bprime_ratio: Fraction  # B'(n)/(n-1)!
    L_ratio: Fraction       # L(n)/(n-2)!


def ratio_report(n_max: int) -> list[RatioEntry]:
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    out = []
    for n in range(3, n_max + 1):
        f1, f2 = factorial(n - 1), factorial(n - 2)
        out.append(RatioEntry(n, Fraction(bound_B(n), f1), bound_Bprime(n) / f1,
                              Fraction(bound_L(n), f2)))
    return out


def cycle_ratio_window(n: int) -> tuple[Fraction, Fraction]:
    """Exact interval [(n-1)/n, totient_sum(n)/(n-2)!] that must contain L(n)/(n-2)!."""
    return Fraction(n - 1, n), totient_sum(n) / factorial(n - 2)
