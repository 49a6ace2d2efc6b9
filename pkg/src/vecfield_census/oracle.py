"""Brute-force ground truth: exhaustive enumeration and orbit counting.

The exhaustive passes stream every valid string of a given length as a
(codes, partner) pair and, per diagram, compute all rotated readings as
packed base-8 integers.  One digit per slot keeps a rotation step O(1):
shifting the packed code moves every symbol one slot later, the slot that
wrapped around becomes an opening symbol at the front, and its partner's
digit flips from opening to closing (+1).  Comparing packed codes gives the
fixed-point counts, their minimum the canonical orbit representative.

Everything here is capped: the default full-family cap is n = 7 (about
6 * 10^5 configurations), the generic cap n = 10.  Raise the cap with the
``cap`` argument or the VECFIELD_ORACLE_CAP environment variable if you
accept the exponential runtime.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Callable, Iterator

from . import formulas
from .bracketing import (
    SYMBOL_CHARS,
    _walk_codes,
    count_quasi,
    count_valid,
    enumerate_valid,
    symbol_sort_key,
)
from .errors import CapExceeded
from .formulas import (
    edge_face_term,
    euler_phi,
    exact_div,
    p_nk,
    p_plus,
    sigma_generic,
    vertex_face_term,
)
from .trees import GeneralizedTree

__all__ = [
    "DEFAULT_FULL_CAP",
    "DEFAULT_GENERIC_CAP",
    "CAP_ENV_VAR",
    "VerificationReport",
    "fix_count",
    "burnside_orbit_count",
    "list_orbit_representatives",
    "generic_orbit_count",
    "decomposition_check",
    "pnk_histogram",
    "quasi_count_exhaustive",
    "run_suite",
]

DEFAULT_FULL_CAP = 7
DEFAULT_GENERIC_CAP = 10
CAP_ENV_VAR = "VECFIELD_ORACLE_CAP"


def _resolve_cap(cap: int | None, default: int) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None:
        return int(env)
    return default


def _check_cap(n: int, cap: int | None, default: int) -> None:
    limit = _resolve_cap(cap, default)
    if not 1 <= n:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise CapExceeded(n, limit)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one cross-check; ``passed`` iff expected == computed."""

    check: str
    n: int
    expected: int
    computed: int
    breakdown: tuple[tuple[str, int], ...] | None = None
    passed: bool = False

    @classmethod
    def make(
        cls,
        check: str,
        n: int,
        expected: int,
        computed: int,
        breakdown: list[tuple[str, int]] | None = None,
    ) -> "VerificationReport":
        return cls(
            check,
            n,
            expected,
            computed,
            None if breakdown is None else tuple(breakdown),
            expected == computed,
        )

    def to_json_dict(self) -> dict:
        out = {
            "check": self.check,
            "n": self.n,
            "expected": self.expected,
            "computed": self.computed,
            "passed": self.passed,
        }
        if self.breakdown is not None:
            out["breakdown"] = [[label, value] for label, value in self.breakdown]
        return out


# ---------------------------------------------------------------------------
# Packed-rotation scans
# ---------------------------------------------------------------------------

def _unpack(code: int, m: int) -> str:
    chars = []
    for i in range(m):
        chars.append(SYMBOL_CHARS[(code >> (3 * (m - 1 - i))) & 7])
    return "".join(chars)


def _walk_matchings(pairs: int) -> Iterator[tuple[list[int], list[int]]]:
    """All balanced solid-bracket strings with ``pairs`` pairs (no dots)."""
    m = 2 * pairs
    codes = [0] * m
    partner = [-1] * m
    stack: list[int] = []

    def rec(i: int) -> Iterator[tuple[list[int], list[int]]]:
        if i == m:
            yield codes, partner
            return
        if len(stack) < m - i:
            stack.append(i)
            codes[i] = 2  # '['
            yield from rec(i + 1)
            stack.pop()
        if stack:
            p = stack.pop()
            codes[i] = 3  # ']'
            partner[i] = p
            partner[p] = i
            yield from rec(i + 1)
            partner[i] = -1
            partner[p] = -1
            stack.append(p)

    return rec(0)


_cache_lock = threading.Lock()
_full_cache: dict[int, tuple[tuple[int, ...], tuple[str, ...]]] = {}
_generic_cache: dict[int, tuple[tuple[int, ...], tuple[str, ...]]] = {}


def _family_scan(
    n: int, walker_factory: Callable[[], Iterator], cache: dict
) -> tuple[tuple[int, ...], tuple[str, ...]]:
    with _cache_lock:
        hit = cache.get(n)
    if hit is not None:
        return hit
    m = 2 * n
    fix, reps = _scan_stream(walker_factory(), m)
    rep_strings = tuple(
        sorted((_unpack(c, m) for c in reps), key=symbol_sort_key)
    )
    result = (tuple(fix), rep_strings)
    with _cache_lock:
        cache[n] = result
    return result


def _scan_stream(
    walker: Iterator[tuple[list[int], list[int]]], m: int
) -> tuple[list[int], set[int]]:
    fix = [0] * m
    reps: set[int] = set()
    total = 0
    top_shift = 3 * (m - 1)
    for codes, partner in walker:
        total += 1
        packed = 0
        for c in codes:
            packed = (packed << 3) | c
        base = packed
        best = packed
        for r in range(1, m):
            s = m - r
            t = partner[s]
            packed >>= 3
            if t >= 0:
                packed += (codes[s] & 6) << top_shift
                jp = t + r
                if jp >= m:
                    jp -= m
                packed += 1 << (3 * (m - 1 - jp))
            else:
                packed += 4 << top_shift
            if packed == base:
                fix[r] += 1
            if packed < best:
                best = packed
        reps.add(best)
    fix[0] = total
    return fix, reps


def _full_family(n: int) -> tuple[tuple[int, ...], tuple[str, ...]]:
    return _family_scan(n, lambda: _walk_codes(2 * n), _full_cache)


def _generic_family(n: int) -> tuple[tuple[int, ...], tuple[str, ...]]:
    return _family_scan(n, lambda: _walk_matchings(n), _generic_cache)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def fix_count(n: int, r: int, cap: int | None = None) -> int:
    """Valid diagrams on 2n slots fixed by rotation r, by exhaustive streaming."""
    _check_cap(n, cap, DEFAULT_FULL_CAP)
    if not 0 <= r < 2 * n:
        raise ValueError("rotation must satisfy 0 <= r < 2n")
    fix, _ = _full_family(n)
    return fix[r]


def burnside_orbit_count(n: int, cap: int | None = None) -> int:
    """Orbit count as the average number of fixed diagrams over all rotations."""
    _check_cap(n, cap, DEFAULT_FULL_CAP)
    fix, _ = _full_family(n)
    return exact_div(sum(fix), 2 * n)


def list_orbit_representatives(n: int, cap: int | None = None) -> list[str]:
    """Canonical form of every orbit, sorted by the symbol order."""
    _check_cap(n, cap, DEFAULT_FULL_CAP)
    _, reps = _full_family(n)
    return list(reps)


def generic_orbit_count(n: int, cap: int | None = None) -> int:
    """Orbit count restricted to generic diagrams (all-solid perfect matchings)."""
    _check_cap(n, cap, DEFAULT_GENERIC_CAP)
    _, reps = _generic_family(n)
    return len(reps)


def decomposition_check(n: int, cap: int | None = None) -> VerificationReport:
    """Nontrivial fixed points against the quotient-term sum, with breakdown."""
    _check_cap(n, cap, DEFAULT_FULL_CAP)
    fix, _ = _full_family(n)
    computed = sum(fix[1:])
    breakdown: list[tuple[str, int]] = []
    expected = 0
    for l in formulas.divisors(2 * n):
        if l < 2:
            continue
        term = euler_phi(l) * vertex_face_term(n, l)
        breakdown.append((f"order {l}", term))
        expected += term
    edge = edge_face_term(n)
    breakdown.append(("edge-axial", edge))
    expected += edge
    return VerificationReport.make(
        "liskovets-decomposition", n, expected, computed, breakdown
    )


def pnk_histogram(n: int, cap: int | None = None) -> dict[int, int]:
    """Edge-count histogram over all rooted configurations on 2n slots.

    Goes through the tree decoder on purpose, as an independent route to the
    ``p_nk`` closed form.
    """
    _check_cap(n, cap, DEFAULT_FULL_CAP)
    hist: dict[int, int] = {}
    for s in enumerate_valid(2 * n):
        k = GeneralizedTree.from_bracketing(s).stats().edges
        hist[k] = hist.get(k, 0) + 1
    return dict(sorted(hist.items()))


def quasi_count_exhaustive(m: int, cap: int | None = None) -> int:
    """Count quasi-valid strings of length m by materializing the set.

    Memory is proportional to the set, so the cap is stricter here.
    """
    limit = _resolve_cap(cap, DEFAULT_FULL_CAP)
    if m < 0:
        raise ValueError("length must be >= 0")
    if m > 2 * limit - 2:
        raise CapExceeded(m, 2 * limit - 2)
    strings = set(enumerate_valid(m))
    if m:
        for w in enumerate_valid(m - 1):
            for i in range(m):
                strings.add(w[:i] + "." + w[i:])
    return len(strings)


# ---------------------------------------------------------------------------
# The cross-check suite
# ---------------------------------------------------------------------------

# Published reference values of the unrooted class counts for n = 1 .. 10.
# Everything below n = 10 is confirmed by the exhaustive oracle; see the
# test suite for the status of the last entry.
REFERENCE_P_PLUS = (3, 6, 26, 123, 801, 5686, 43846, 353987, 2968801, 25605445)


def _aggregate(
    check: str, n: int, outcomes: Iterator[bool]
) -> VerificationReport:
    attempted = passed = 0
    for ok in outcomes:
        attempted += 1
        passed += bool(ok)
    return VerificationReport.make(check, n, attempted, passed)


def run_suite(
    full_max: int | None = None,
    generic_max: int | None = None,
    closed_max: int = 120,
    quasi_max: int = 240,
    gf_max: int = 100,
    roundtrip_max: int = 8,
    cap: int | None = None,
) -> list[VerificationReport]:
    """Run every cross-check at the given depths; one report per check."""
    from .diagram import BoardDiagram  # local import to avoid cycles

    full_max = min(
        _resolve_cap(cap, DEFAULT_FULL_CAP),
        full_max if full_max is not None else 5,
    )
    generic_max = min(
        _resolve_cap(cap, DEFAULT_GENERIC_CAP),
        generic_max if generic_max is not None else 8,
    )
    reports: list[VerificationReport] = []

    for i, ref in enumerate(REFERENCE_P_PLUS, start=1):
        reports.append(
            VerificationReport.make("reference-class-count", i, ref, p_plus(i))
        )

    reports.append(
        _aggregate(
            "valid-count-closed-form",
            closed_max,
            (
                count_valid(2 * i) == formulas.p_total(i)
                and (i == 0 or count_valid(2 * i - 1) == formulas.q_closed(i))
                for i in range(closed_max + 1)
            ),
        )
    )
    reports.append(
        _aggregate(
            "quasi-count-closed-form",
            quasi_max,
            (count_quasi(i) == formulas.c_closed(i) for i in range(quasi_max + 1)),
        )
    )

    p, q = formulas.p_total, formulas.q_closed
    r = lambda i: formulas.c_closed(2 * i)  # noqa: E731
    s = lambda i: formulas.c_closed(2 * i + 1)  # noqa: E731
    qq = lambda i: 0 if i == 0 else q(i)  # noqa: E731
    reports.append(
        _aggregate(
            "gf-even-split",
            gf_max,
            (
                p(i)
                == (1 if i == 0 else 0)
                + qq(i)
                + 2 * sum(p(k) * p(i - 1 - k) for k in range(i))
                for i in range(gf_max + 1)
            ),
        )
    )
    reports.append(
        _aggregate(
            "gf-odd-split",
            gf_max,
            (
                qq(i) == p(i - 1) + 2 * sum(p(k) * qq(i - 1 - k) for k in range(i))
                for i in range(1, gf_max + 1)
            ),
        )
    )
    reports.append(
        _aggregate(
            "gf-quasi-odd-split",
            gf_max,
            (
                s(i) == r(i) + 4 * sum(p(i - 1 - k) * s(k) for k in range(i))
                for i in range(gf_max + 1)
            ),
        )
    )
    reports.append(
        _aggregate(
            "gf-quasi-even-split",
            gf_max,
            (
                r(i)
                == (1 if i == 0 else s(i - 1))
                + 2 * sum(p(k) * r(i - 1 - k) for k in range(i))
                + 2 * sum(qq(i - 1 - k) * s(k) for k in range(i))
                for i in range(gf_max + 1)
            ),
        )
    )
    reports.append(
        _aggregate(
            "gf-degree2-inversion",
            gf_max,
            (
                (s(i - 2) if i >= 2 else 0) + 11 * (s(i - 1) if i >= 1 else 0) - s(i)
                == formulas.a_coeff(i)
                for i in range(gf_max + 1)
            ),
        )
    )

    for i in range(1, full_max + 1):
        reports.append(
            VerificationReport.make(
                "burnside-vs-closed", i, p_plus(i), burnside_orbit_count(i, cap=cap)
            )
        )
        reports.append(
            VerificationReport.make(
                "canonical-orbits-vs-closed",
                i,
                p_plus(i),
                len(list_orbit_representatives(i, cap=cap)),
            )
        )
        reports.append(decomposition_check(i, cap=cap))

    for i in range(1, generic_max + 1):
        reports.append(
            VerificationReport.make(
                "generic-orbits-vs-closed",
                i,
                sigma_generic(i),
                generic_orbit_count(i, cap=cap),
            )
        )

    for i in range(1, min(full_max, 6) + 1):
        hist = pnk_histogram(i, cap=cap)
        reports.append(
            _aggregate(
                "edge-histogram-vs-closed",
                i,
                (hist.get(k, 0) == p_nk(i, k) for k in range(i + 1)),
            )
        )

    def diagram_roundtrips() -> Iterator[bool]:
        for ln in range(2, roundtrip_max + 1, 2):
            for w in enumerate_valid(ln):
                yield BoardDiagram.from_bracketing(w).to_bracketing() == w

    def tree_roundtrips() -> Iterator[bool]:
        for ln in range(roundtrip_max + 1):
            for w in enumerate_valid(ln):
                yield GeneralizedTree.from_bracketing(w).to_bracketing() == w

    def rotation_closure() -> Iterator[bool]:
        from .errors import NotValid

        for ln in range(2, roundtrip_max + 1, 2):
            for w in enumerate_valid(ln):
                d = BoardDiagram.from_bracketing(w)
                try:
                    for rr in range(ln):
                        d.rotated(rr)  # the constructor re-validates
                except NotValid:
                    yield False
                else:
                    yield True

    reports.append(
        _aggregate("diagram-roundtrip", roundtrip_max, diagram_roundtrips())
    )
    reports.append(_aggregate("tree-roundtrip", roundtrip_max, tree_roundtrips()))
    reports.append(
        _aggregate("rotation-closure", roundtrip_max, rotation_closure())
    )

    def divisibility() -> Iterator[bool]:
        for i in range(1, closed_max + 1):
            sigma_generic(i)
            p_plus(i)
            yield True

    reports.append(_aggregate("quotient-divisibility", closed_max, divisibility()))
    return reports
