"""Closed forms for every count: Catalan, totient, the rooted counts,
the quotient terms, and the unrooted class numbers.

Everything is exact integer arithmetic.  Divisions are guarded: each one is
mathematically integral, so a remainder raises :class:`NotDivisible` and
means a bug, never a data condition.

Conventions used throughout (``n`` is the degree of the field minus one):

* ``p_total(n)``   rooted configurations on 2n slots (= count_valid(2n)),
* ``q_closed(n)``  valid strings of odd length 2n-1,
* ``c_closed(m)``  quasi-valid strings of length m,
* ``sigma_generic(n)``  unrooted generic classes,
* ``p_plus(n)``    unrooted classes of the full family.

The odd-index closed form of ``c_closed`` uses the degree-2 recurrence
``h_j = 11 h_{j-1} + h_{j-2}`` (h_0 = 1, h_1 = 11), i.e. the complete
homogeneous sums for the roots of X^2 - 11X - 1.  Pairing it with the signs
of the ``a`` coefficients below is the combination that reproduces the
recursion counts (c_3 = 7, not -15); the cross-check against
:func:`vecfield_census.bracketing.count_quasi` pins this down in the tests.
"""

from __future__ import annotations

import math
import threading
from functools import lru_cache

from .bracketing import count_valid
from .errors import NegativeResult, NotADivisor, NotDivisible

__all__ = [
    "exact_div",
    "divisors",
    "catalan",
    "euler_phi",
    "sigma_generic",
    "p_nk",
    "p_total",
    "q_closed",
    "a_coeff",
    "h_seq",
    "c_closed",
    "vertex_face_term",
    "edge_face_term",
    "p_plus",
    "growth_estimates",
    "SIGMA_GROWTH_LIMIT",
    "P_PLUS_GROWTH_LIMIT",
]

# Limits of the n-th roots of the two class counts.
SIGMA_GROWTH_LIMIT = 4.0
P_PLUS_GROWTH_LIMIT = 2.0 / (5.0 * math.sqrt(5.0) - 11.0)


def exact_div(numerator: int, denominator: int) -> int:
    """Integer division that insists on a zero remainder."""
    q, r = divmod(numerator, denominator)
    if r:
        raise NotDivisible(numerator, denominator)
    return q


def divisors(m: int) -> list[int]:
    """All positive divisors of m, ascending."""
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def catalan(n: int) -> int:
    return exact_div(math.comb(2 * n, n), n + 1)


def euler_phi(l: int) -> int:
    """Totient by trial-division factorization."""
    if l < 1:
        raise ValueError("totient needs a positive argument")
    result = l
    rest = l
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def rising(x: int, k: int) -> int:
    """Rising factorial x (x+1) ... (x+k-1); empty product for k = 0."""
    out = 1
    for i in range(k):
        out *= x + i
    return out


def p_nk(n: int, k: int) -> int:
    """Rooted configurations on 2n slots whose tree has exactly k edges.

    Zero for k > n (the rising factorial of -n hits zero).
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    num = rising(-2 * n, k) * rising(-n, k) * 2**k
    den = rising(2, k) * math.factorial(k)
    return exact_div(num, den)


@lru_cache(maxsize=None)
def p_total(n: int) -> int:
    """All rooted configurations on 2n slots: sum of p_nk over k."""
    return sum(p_nk(n, k) for k in range(n + 1))


def q_closed(n: int) -> int:
    """Valid strings of length 2n-1, by Lagrange inversion of the pair grammar."""
    if n < 1:
        raise ValueError("q_closed needs n >= 1")
    total = sum(
        math.comb(2 * n, k) * math.comb(n, n - 1 - k) * 2**k for k in range(n)
    )
    return exact_div(total, n)


@lru_cache(maxsize=None)
def a_coeff(n: int) -> int:
    """Signed series coefficients of 2z(3z-1)p^2 + (2z+1)p + (z-2)."""
    if n == 0:
        return -1
    if n == 1:
        return 4
    six = sum(p_total(k) * p_total(n - 2 - k) for k in range(n - 1))
    two = sum(p_total(k) * p_total(n - 1 - k) for k in range(n - 1))
    return 6 * six - 2 * two + p_total(n)


_h_lock = threading.Lock()
_h_table: list[int] = [1, 11]


def h_seq(j: int) -> int:
    """h_j = 11 h_{j-1} + h_{j-2} with h_0 = 1, h_1 = 11."""
    if j < 0:
        raise ValueError("index must be >= 0")
    if j >= len(_h_table):
        with _h_lock:
            while len(_h_table) <= j:
                _h_table.append(11 * _h_table[-1] + _h_table[-2])
    return _h_table[j]


@lru_cache(maxsize=None)
def c_closed(m: int) -> int:
    """Quasi-valid strings of length m, in closed form.

    Odd index 2j+1:  -sum_k a_coeff(k) * h_seq(j-k).
    Even index 2j:   c_closed(2j+1) - 4 * sum_i p_total(j-i-1) * c_closed(2i+1).
    """
    if m < 0:
        raise ValueError("length must be >= 0")
    if m == 0:
        return 1
    if m % 2:
        j = (m - 1) // 2
        value = -sum(a_coeff(k) * h_seq(j - k) for k in range(j + 1))
    else:
        j = m // 2
        value = c_closed(2 * j + 1) - 4 * sum(
            p_total(j - i - 1) * c_closed(2 * i + 1) for i in range(j)
        )
    if value < 0:
        raise NegativeResult(f"c({m}) came out negative: {value}")
    return value


def vertex_face_term(n: int, l: int) -> int:
    """Quotient count for a rotation of order l >= 2 (vertex-face axis).

    Even 2n/l: rooted quotients of half size with a marked vertex; odd 2n/l:
    quasi-valid strings of that length.
    """
    if l < 2 or (2 * n) % l:
        raise NotADivisor(f"l={l} must be >= 2 and divide {2 * n}")
    q = 2 * n // l
    if q % 2 == 0:
        half = q // 2
        return sum(p_nk(half, k) * (k + 1) for k in range(half + 1))
    return c_closed(q)


def edge_face_term(n: int) -> int:
    """Half-turn quotients whose axis pierces an edge: 2n p_{(n-1)/2}, odd n only."""
    if n < 1:
        raise ValueError("edge_face_term needs n >= 1")
    if n % 2 == 0:
        return 0
    return 2 * n * p_total((n - 1) // 2)


def sigma_generic(n: int) -> int:
    """Unrooted generic classes in degree n+1 (all links solid, no dots)."""
    if n < 1:
        raise ValueError("sigma_generic needs n >= 1")
    total = catalan(n)
    total += sum(
        euler_phi(l) * math.comb(2 * n // l, n // l)
        for l in divisors(n)
        if l >= 2
    )
    if n % 2:
        total += math.comb(n, (n - 1) // 2)
    return exact_div(total, 2 * n)


def p_plus(n: int) -> int:
    """Unrooted classes of the full family in degree n+1."""
    if n < 1:
        raise ValueError("p_plus needs n >= 1")
    total = p_total(n)
    total += sum(
        euler_phi(l) * vertex_face_term(n, l)
        for l in divisors(2 * n)
        if l >= 2
    )
    total += edge_face_term(n)
    return exact_div(total, 2 * n)


def growth_estimates(n_max: int) -> list[tuple[int, float, float]]:
    """(n, sigma_generic(n)**(1/n), p_plus(n)**(1/n)) for n = 1 .. n_max.

    Computed through logarithms of the exact integers, so the floats carry
    full double precision at any n.  The two sequences increase towards
    ``SIGMA_GROWTH_LIMIT`` = 4 and ``P_PLUS_GROWTH_LIMIT`` ~ 11.0902.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows = []
    for n in range(1, n_max + 1):
        s_root = math.exp(math.log(sigma_generic(n)) / n)
        p_root = math.exp(math.log(p_plus(n)) / n)
        rows.append((n, s_root, p_root))
    return rows
