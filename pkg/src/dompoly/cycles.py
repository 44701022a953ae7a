"""Cycle-family machinery: polynomials, derived sequences, ord_3 class.

The domination polynomial of the cycle C_n satisfies, for n >= 4,

    D(C_n,x) = x * (D(C_{n-1},x) + D(C_{n-2},x) + D(C_{n-3},x))

with C_1 = K_1 and C_2 = K_2 as base cases. Everything else in this
module is a scalar shadow of that recurrence:

    alpha_n = D(C_n, -1)           beta_n = D'(C_n, -1)
    theta_n = D''(C_n, -1)         a_n    = D(C_n, -3)
    a_n     = (-1)^n * 3^ceil(n/3) * b_n

Each sequence is provided twice, as a closed form and as a recurrence,
and the test suite cross-asserts both routes against direct evaluation
of the polynomial (or its derivatives) at the relevant point, so a wrong
branch in any one route cannot survive.

All results are memoized behind a lock; returned values are immutable.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import InternalInconsistencyError, ParameterDomainError
from .polynomials import IntPolynomial

__all__ = [
    "cycle_polynomial",
    "alpha",
    "alpha_by_recurrence",
    "beta",
    "beta_by_recurrence",
    "theta",
    "theta_by_recurrence",
    "a_value",
    "b_value",
    "b_value_by_factoring",
    "Ord3Class",
    "ord3_classification",
    "REMARK_RESIDUES_MOD_27",
]

# Residues r mod 27 with r % 3 == 1 for which ord_3(a_n) is one above the
# baseline ceil(n/3).
REMARK_RESIDUES_MOD_27 = frozenset({4, 13, 22})


def _ceil3(n: int) -> int:
    return (n + 2) // 3


class _Cache:
    """Monotone memo tables for the cycle recurrences, lock-serialized."""

    def __init__(self):
        self.lock = threading.Lock()
        self.polys = [
            None,
            IntPolynomial((0, 1)),          # D(C_1) = x
            IntPolynomial((0, 2, 1)),       # D(C_2) = x^2 + 2x
            IntPolynomial((0, 3, 3, 1)),    # D(C_3) = x^3 + 3x^2 + 3x
        ]
        self.alpha = [None, -1, -1, -1]
        self.beta = [None, 1, 0, 0]
        self.theta = [None, 0, 2, 0]
        self.a = [None, -3, 3, -9]
        self.b = [None, 1, 1, 3]

    def extend_polys(self, n: int):
        p = self.polys
        while len(p) <= n:
            p.append((p[-1] + p[-2] + p[-3]).times_x())

    def extend_scalars(self, n: int):
        al, be, th, a, b = self.alpha, self.beta, self.theta, self.a, self.b
        while len(al) <= n:
            k = len(al)
            al.append(-(al[k - 1] + al[k - 2] + al[k - 3]))
            be.append(-(al[k] + be[k - 1] + be[k - 2] + be[k - 3]))
            th.append(-2 * al[k] - 2 * be[k] - (th[k - 1] + th[k - 2] + th[k - 3]))
            a.append(-3 * (a[k - 1] + a[k - 2] + a[k - 3]))
            if k % 3 == 0:
                b.append(3 * b[k - 1] - 3 * b[k - 2] + b[k - 3])
            elif k % 3 == 1:
                b.append(b[k - 1] - b[k - 2] + b[k - 3])
            else:
                b.append(3 * b[k - 1] - b[k - 2] + b[k - 3])


_CACHE = _Cache()


def _require_positive(n: int):
    if n < 1:
        raise ParameterDomainError(f"cycle sequences need n >= 1, got {n}")


def cycle_polynomial(n: int) -> IntPolynomial:
    """D(C_n, x), exactly, via the memoized three-term recurrence."""
    _require_positive(n)
    with _CACHE.lock:
        _CACHE.extend_polys(n)
        return _CACHE.polys[n]


def alpha(n: int) -> int:
    """D(C_n, -1): 3 when 4 | n, else -1."""
    _require_positive(n)
    return 3 if n % 4 == 0 else -1


def alpha_by_recurrence(n: int) -> int:
    _require_positive(n)
    with _CACHE.lock:
        _CACHE.extend_scalars(n)
        return _CACHE.alpha[n]


def beta(n: int) -> int:
    """D'(C_n, -1) in closed form: -n, n, 0, 0 by n mod 4."""
    _require_positive(n)
    r = n % 4
    if r == 0:
        return -n
    if r == 1:
        return n
    return 0


def beta_by_recurrence(n: int) -> int:
    _require_positive(n)
    with _CACHE.lock:
        _CACHE.extend_scalars(n)
        return _CACHE.beta[n]


def theta(n: int) -> int:
    """D''(C_n, -1) in closed form, by n mod 4."""
    _require_positive(n)
    r = n % 4
    if r == 0:
        return n * (n - 4) // 4
    if r == 1:
        return -n * (n - 1) // 2
    if r == 2:
        return n * (n + 2) // 4
    return 0


def theta_by_recurrence(n: int) -> int:
    _require_positive(n)
    with _CACHE.lock:
        _CACHE.extend_scalars(n)
        return _CACHE.theta[n]


def a_value(n: int) -> int:
    """a_n = D(C_n, -3), via the integer recurrence a_n = -3(a_{n-1}+a_{n-2}+a_{n-3})."""
    _require_positive(n)
    with _CACHE.lock:
        _CACHE.extend_scalars(n)
        return _CACHE.a[n]


def b_value(n: int) -> int:
    """b_n with a_n = (-1)^n * 3^ceil(n/3) * b_n, via the 3-branch recurrence.

    The recurrence is the fast route; `b_value_by_factoring` recomputes the
    same number from a_n and is used as a cross-check.
    """
    _require_positive(n)
    with _CACHE.lock:
        _CACHE.extend_scalars(n)
        return _CACHE.b[n]


def b_value_by_factoring(n: int) -> int:
    """b_n obtained by dividing a_n by its forced sign and 3-power."""
    _require_positive(n)
    a_n = a_value(n)
    q, r = divmod(a_n if n % 2 == 0 else -a_n, 3 ** _ceil3(n))
    if r != 0:
        raise InternalInconsistencyError(
            f"3^ceil({n}/3) does not divide a_{n} = {a_n}"
        )
    return q


@dataclass(frozen=True)
class Ord3Class:
    """Predicted 3-adic valuation of a_n = D(C_n, -3)."""

    n: int
    predicted_ord: int
    residue_class: int            # n mod 3
    remark_exceptional: bool      # n mod 27 in {4, 13, 22}


def ord3_classification(n: int) -> Ord3Class:
    """Classify ord_3(a_n) from n alone.

    Baseline ceil(n/3); one higher when 3 | n, and, within the
    n % 3 == 1 residue class, exactly when n mod 27 is in {4, 13, 22}.
    """
    _require_positive(n)
    base = _ceil3(n)
    r = n % 3
    exceptional = n % 27 in REMARK_RESIDUES_MOD_27
    if r == 0:
        predicted = base + 1
    elif r == 1:
        predicted = base + 1 if exceptional else base
    else:
        predicted = base
    return Ord3Class(
        n=n, predicted_ord=predicted, residue_class=r, remark_exceptional=exceptional
    )
