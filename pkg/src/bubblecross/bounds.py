"""Exact crossing-bound arithmetic.

Three independent evaluations of the same quantity: the parity
recurrences iterated from the n = 6 base drawing, the unrolled sum with
one polynomial term per generation, and the factored bracket form.  All
arithmetic is arbitrary-precision integers or exact rationals; every
division is checked to leave no remainder, and the table builder
compares the three evaluations row by row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .config import TABLE_LIMIT
from .mesh import mesh_max

NU_D6 = 5196        # crossing total of the base drawing at n = 6
NU_DPRIME6 = 866    # one sixth of it, the per-sector total
CR_B5_BOUND = 120


def base_values() -> dict[str, int]:
    """Small-case constants anchoring the recurrences."""
    return {
        "cr_B2": 0,
        "cr_B3": 0,
        "cr_B4": 0,
        "cr_B5_bound": CR_B5_BOUND,
        "nu_D6": NU_D6,
        "nu_Dprime6": NU_DPRIME6,
    }


def _exact_div(num: int, den: int, what: str) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{what}: {num} not divisible by {den}")
    return q


def added_term_even(n: int) -> int:
    """Polynomial increment of the construction step leaving even n."""
    if n % 2 or n < 6:
        raise ValueError(f"even-step increment needs even n >= 6, got {n}")
    poly = 3 * n**4 - 13 * n**3 + 18 * n**2 - 8 * n
    return _exact_div(factorial(n) * poly, 144, "even-step increment")


def added_term_odd(n: int) -> int:
    """Polynomial increment of the construction step leaving odd n."""
    if n % 2 == 0 or n < 7:
        raise ValueError(f"odd-step increment needs odd n >= 7, got {n}")
    poly = 3 * n**5 - 13 * n**4 + 21 * n**3 - 17 * n**2 + 6
    return _exact_div(factorial(n - 1) * poly, 144, "odd-step increment")


def mesh_increment_even(n: int) -> int:
    """Even-step increment recomputed from the mesh worst case.

    At even n every sector vertex splits its arcs (m-2, m-1) or (m-1, m-2)
    with m = (n+2)/2, and both splits share the same odd-size worst case,
    so the increment is simply vertex count times worst case.
    """
    if n % 2 or n < 6:
        raise ValueError(f"needs even n >= 6, got {n}")
    m = (n + 2) // 2
    worst = mesh_max(n + 1, m - 1)
    if worst != mesh_max(n + 1, m - 2):
        raise ArithmeticError(f"the two admissible splits disagree at size {n + 1}")
    return _exact_div(factorial(n), 6, "sector vertex count") * worst


def mesh_increment_odd(n: int) -> int:
    """Odd-step increment from the mesh worst cases, weighted by how many
    vertices carry a balanced arc split versus an offset one."""
    if n % 2 == 0 or n < 7:
        raise ValueError(f"needs odd n >= 7, got {n}")
    m = (n + 1) // 2
    balanced = mesh_max(n + 1, m - 1)
    offset = mesh_max(n + 1, m)
    weighted = (n + 1) // 2 * balanced + (n - 1) // 2 * offset
    return _exact_div(factorial(n - 1), 6, "per-parent weighting") * weighted


def recurrence_even(n: int, nu_prime: int) -> int:
    """One construction step from even n: scale by n^2, add the increment."""
    term = added_term_even(n)
    cross = mesh_increment_even(n)
    if term != cross:
        raise ArithmeticError(f"even-step increment mismatch at n={n}: {term} vs {cross}")
    return n * n * nu_prime + term


def recurrence_odd(n: int, nu_prime: int) -> int:
    """One construction step from odd n: scale by n^2, add the increment."""
    term = added_term_odd(n)
    cross = mesh_increment_odd(n)
    if term != cross:
        raise ArithmeticError(f"odd-step increment mismatch at n={n}: {term} vs {cross}")
    return n * n * nu_prime + term


def nu_dprime(n: int) -> int:
    """Per-sector crossing bound, iterated from the n = 6 base."""
    if n < 6:
        raise ValueError(f"recurrence starts at n=6, got {n}")
    val = NU_DPRIME6
    for k in range(6, n):
        val = recurrence_even(k, val) if k % 2 == 0 else recurrence_odd(k, val)
    return val


def nu_dn(n: int) -> int:
    """Crossing bound of the full drawing: six sectors."""
    return 6 * nu_dprime(n)


def summed_bound(n: int) -> int:
    """Unrolled form: scaled base total plus one term per generation."""
    if n < 7:
        raise ValueError(f"unrolled form starts at n=7, got {n}")
    fn1 = factorial(n - 1)
    total = (fn1 // factorial(5)) ** 2 * NU_D6
    for i in range(7, n + 1, 2):
        poly = 3 * i**4 - 25 * i**3 + 75 * i**2 - 95 * i + 42
        term = _exact_div(factorial(i - 1) * poly, 24, "odd generation term")
        total += (fn1 // factorial(i - 1)) ** 2 * term
    for i in range(8, n + 1, 2):
        poly = 3 * i**5 - 28 * i**4 + 103 * i**3 - 188 * i**2 + 164 * i - 48
        term = _exact_div(factorial(i - 2) * poly, 24, "even generation term")
        total += (fn1 // factorial(i - 1)) ** 2 * term
    return total


def bracket(n: int) -> Fraction:
    """The exact coefficient of ((n-1)!)^2 in the factored bound."""
    if n < 7:
        raise ValueError(f"bracket form starts at n=7, got {n}")
    b = Fraction(127, 300) + Fraction(5, 24 * factorial(n - 4))
    for i in range(3, n - 4):
        b += Fraction(1, 3 * factorial(i))
    for i in range(8, n + 1, 2):
        b += (Fraction(1, 8 * factorial(i - 3))
              - Fraction(1, 4 * factorial(i - 2))
              + Fraction(1, 4 * factorial(i - 1) * (i - 1)))
    return b


def bracket_bound(n: int) -> int:
    """((n-1)!)^2 times the bracket; must come out a whole number."""
    v = factorial(n - 1) ** 2 * bracket(n)
    if v.denominator != 1:
        raise ArithmeticError(f"bracket bound at n={n} is not an integer: {v}")
    return int(v)


@dataclass(frozen=True)
class BoundRow:
    n: int
    nu_recurrence: int
    nu_sum: int
    nu_bracket: int

    @property
    def bound(self) -> int:
        return self.nu_recurrence


def bound_table(n_max: int, limit: int = TABLE_LIMIT) -> list[BoundRow]:
    """Rows for n = 7..n_max; the three evaluations must agree exactly."""
    if not 7 <= n_max <= limit:
        raise ValueError(f"n_max must lie in [7, {limit}], got {n_max}")
    rows = []
    vprime = NU_DPRIME6
    for k in range(6, n_max):
        vprime = recurrence_even(k, vprime) if k % 2 == 0 else recurrence_odd(k, vprime)
        n = k + 1
        row = BoundRow(n, 6 * vprime, summed_bound(n), bracket_bound(n))
        if not row.nu_recurrence == row.nu_sum == row.nu_bracket:
            raise ArithmeticError(
                f"bound evaluations diverge first at n={n}: "
                f"recurrence={row.nu_recurrence} sum={row.nu_sum} bracket={row.nu_bracket}"
            )
        rows.append(row)
    return rows


def ratio_string(row: BoundRow, digits: int = 12) -> str:
    """bound / ((n-1)!)^2 as a rounded decimal string (approximate)."""
    den = factorial(row.n - 1) ** 2
    scaled = (row.bound * 10**digits + den // 2) // den
    return f"{scaled // 10**digits}.{scaled % 10**digits:0{digits}d}"


def table_csv(rows) -> str:
    out = ["n,bound,ratio_approx"]
    for row in rows:
        out.append(f"{row.n},{row.bound},{ratio_string(row)}")
    return "\r\n".join(out) + "\r\n"


def table_json(rows) -> str:
    payload = {"rows": [{"bound": str(r.bound), "n": r.n} for r in rows]}
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"
