"""Bracketing strings over the five-symbol alphabet ``( ) [ ] .``.

A string over this alphabet encodes a boundary configuration: a matched pair
of round parentheses is a dashed (homoclinic) link, a matched pair of square
brackets is a solid (transversal) link, and a dot is an unpaired slot.

A string is *valid* when it is produced by the grammar

    S  ->  empty  |  "." S  |  "(" E ")" S  |  "[" E "]" S

where ``E`` ranges over valid strings of even length.  Operationally this
means a single scan with one mixed stack succeeds: every closing symbol
matches the kind of the innermost open symbol (so pairs of different kinds
never cross), the interior of every pair has even length, and the stack is
empty at the end.  For even lengths this coincides with the classical
counting rules (balance, prefix dominance, even and balanced interiors);
for odd lengths the grammar is the definition.

Symbol order for every lexicographic comparison in this package is fixed:

    (  <  )  <  [  <  ]  <  .

Note that this is *not* ASCII order ('.' sorts below '[' in ASCII), so use
:func:`symbol_sort_key` instead of plain string comparison.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Iterator, NamedTuple

from .errors import NotValid, UnknownCharacter

__all__ = [
    "BracketSymbol",
    "PairKind",
    "Pair",
    "PairingTable",
    "parse_string",
    "symbol_sort_key",
    "is_valid",
    "is_quasi_valid",
    "match_pairs",
    "enumerate_valid",
    "count_valid",
    "count_quasi",
]


class BracketSymbol(IntEnum):
    """The five symbols, in their fixed comparison order."""

    ROUND_OPEN = 0
    ROUND_CLOSE = 1
    SQUARE_OPEN = 2
    SQUARE_CLOSE = 3
    DOT = 4


class PairKind(Enum):
    ROUND = "round"
    SQUARE = "square"


# Canonical character per symbol code, and accepted input characters.
SYMBOL_CHARS = "()[]."
_CHAR_TO_CODE = {c: i for i, c in enumerate(SYMBOL_CHARS)}
_CHAR_TO_CODE["•"] = 4  # bullet alias for the dot

_OPEN_R, _CLOSE_R, _OPEN_S, _CLOSE_S, _DOT = range(5)


def parse_string(text: str) -> str:
    """Normalize ``text`` to canonical symbols, ignoring whitespace.

    Both ``.`` and the bullet ``•`` denote a dot.  Any other
    non-whitespace character raises :class:`UnknownCharacter` with its
    position in the original text.
    """
    out = []
    for pos, ch in enumerate(text):
        if ch.isspace():
            continue
        code = _CHAR_TO_CODE.get(ch)
        if code is None:
            raise UnknownCharacter(pos, ch)
        out.append(SYMBOL_CHARS[code])
    return "".join(out)


def symbol_sort_key(s: str) -> tuple[int, ...]:
    """Sort key realizing the fixed symbol order on canonical strings."""
    return tuple(_CHAR_TO_CODE[c] for c in s)


def _codes(s: str) -> list[int]:
    return [_CHAR_TO_CODE[c] for c in parse_string(s)]


class Pair(NamedTuple):
    open_index: int
    close_index: int
    kind: PairKind


@dataclass(frozen=True)
class PairingTable:
    """The matched pairs and dot positions of a valid string."""

    length: int
    pairs: frozenset[Pair]
    dots: frozenset[int]

    def to_string(self) -> str:
        """Rebuild the string this table was extracted from."""
        chars = ["?"] * self.length
        for p in self.pairs:
            open_c, close_c = ("(", ")") if p.kind is PairKind.ROUND else ("[", "]")
            chars[p.open_index] = open_c
            chars[p.close_index] = close_c
        for d in self.dots:
            chars[d] = "."
        return "".join(chars)


def _match_codes(codes: list[int]) -> list[int]:
    """Stack-match ``codes``; return the partner array (-1 for dots).

    Raises :class:`NotValid` naming the first violated condition:
    "unbalanced", "crossing", or "odd interior".
    """
    partner = [-1] * len(codes)
    stack: list[tuple[int, int]] = []  # (open code, position)
    for i, c in enumerate(codes):
        if c == _DOT:
            continue
        if c == _OPEN_R or c == _OPEN_S:
            stack.append((c, i))
            continue
        want = c - 1  # matching open code
        if not stack:
            raise NotValid("unbalanced", i)
        top_code, top_pos = stack[-1]
        if top_code != want:
            # The close either crosses a pair opened later, or has no
            # unmatched open at all.
            if any(code == want for code, _ in stack):
                raise NotValid("crossing", i)
            raise NotValid("unbalanced", i)
        if (i - top_pos - 1) % 2:
            raise NotValid("odd interior", i)
        stack.pop()
        partner[top_pos] = i
        partner[i] = top_pos
    if stack:
        raise NotValid("unbalanced", stack[-1][1])
    return partner


def is_valid(s: str) -> bool:
    """Whether ``s`` is a valid bracketing (any length, including odd)."""
    try:
        _match_codes(_codes(s))
    except NotValid:
        return False
    return True


def is_quasi_valid(s: str) -> bool:
    """Whether ``s`` is valid or has one dot whose removal leaves it valid."""
    t = parse_string(s)
    if is_valid(t):
        return True
    return any(
        c == "." and is_valid(t[:i] + t[i + 1 :]) for i, c in enumerate(t)
    )


def match_pairs(s: str) -> PairingTable:
    """Extract the unique pairing of a valid string; raise NotValid otherwise."""
    codes = _codes(s)
    partner = _match_codes(codes)
    pairs = []
    dots = []
    for i, j in enumerate(partner):
        if j < 0:
            dots.append(i)
        elif i < j:
            kind = PairKind.ROUND if codes[i] == _OPEN_R else PairKind.SQUARE
            pairs.append(Pair(i, j, kind))
    return PairingTable(len(codes), frozenset(pairs), frozenset(dots))


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------

def _min_close(stack: list[int], pos: int, n: int) -> bool:
    """Whether the open positions in ``stack`` can all close within length n.

    Closing greedily from the top: a pair opened at p closes at the first
    position of parity (p+1) mod 2, padding with a single dot when the
    parity is off.  Any slack after the last close is top-level dots, so the
    greedy schedule is feasible iff any schedule is.
    """
    for p in reversed(stack):
        if (pos ^ (p + 1)) & 1:
            pos += 1
        pos += 1
    return pos <= n


def _walk_codes(n: int) -> Iterator[tuple[list[int], list[int]]]:
    """Yield (codes, partner) for every valid string of length n, in lex order.

    The two lists are reused between yields; callers that keep them must copy.
    """
    if n < 0:
        raise ValueError("length must be >= 0")
    codes = [0] * n
    partner = [-1] * n
    kinds: list[int] = []  # open codes, parallel to opens
    opens: list[int] = []  # open positions

    def rec(i: int) -> Iterator[tuple[list[int], list[int]]]:
        if i == n:
            yield codes, partner
            return
        nxt = i + 1
        for open_code in (_OPEN_R, _OPEN_S):
            opens.append(i)
            if _min_close(opens, nxt, n):
                kinds.append(open_code)
                codes[i] = open_code
                yield from rec(nxt)
                kinds.pop()
            opens.pop()
            if opens and kinds[-1] == open_code and not (i - opens[-1] - 1) % 2:
                p = opens.pop()
                k = kinds.pop()
                if _min_close(opens, nxt, n):
                    codes[i] = open_code + 1
                    partner[i] = p
                    partner[p] = i
                    yield from rec(nxt)
                    partner[i] = -1
                    partner[p] = -1
                kinds.append(k)
                opens.append(p)
        if _min_close(opens, nxt, n):
            codes[i] = _DOT
            yield from rec(nxt)

    return rec(0)


def enumerate_valid(n: int) -> Iterator[str]:
    """Stream every valid string of length ``n`` exactly once, in lex order.

    Memory is O(n) per step; nothing is materialized.
    """
    for codes, _ in _walk_codes(n):
        yield "".join(SYMBOL_CHARS[c] for c in codes)


# ---------------------------------------------------------------------------
# Counting recursions
# ---------------------------------------------------------------------------
#
# valid:  b_0 = 1,  b_m = b_{m-1} + 2 * sum_{2a+t+2=m} b_{2a} b_t
# quasi:  c_0 = 1,  c_m = c_{m-1} + 2 * sum_{2a+t+2=m} b_{2a} c_t
#                                 + 2 * sum_{2a+t+3=m} c_{2a+1} b_t
#
# The first term strips a leading dot; the convolution terms strip a leading
# pair of either kind whose interior is even (resp. odd for the second quasi
# sum).  Tables are dense, append-only and guarded by a lock so concurrent
# callers see a read-mostly cache.

_table_lock = threading.Lock()
_b_table: list[int] = [1]
_c_table: list[int] = [1]


def count_valid(n: int) -> int:
    """Number of valid strings of length ``n`` (exact, arbitrary precision)."""
    if n < 0:
        raise ValueError("length must be >= 0")
    if n >= len(_b_table):
        with _table_lock:
            while len(_b_table) <= n:
                m = len(_b_table)
                conv = 0
                for a in range((m - 2) // 2 + 1):
                    conv += _b_table[2 * a] * _b_table[m - 2 - 2 * a]
                _b_table.append(_b_table[m - 1] + 2 * conv)
    return _b_table[n]


def count_quasi(m: int) -> int:
    """Number of quasi-valid strings of length ``m``."""
    if m < 0:
        raise ValueError("length must be >= 0")
    count_valid(m)  # grow the b table first; separate lock acquisition
    if m >= len(_c_table):
        with _table_lock:
            while len(_c_table) <= m:
                k = len(_c_table)
                even_interior = 0
                for a in range((k - 2) // 2 + 1):
                    even_interior += _b_table[2 * a] * _c_table[k - 2 - 2 * a]
                odd_interior = 0
                for a in range((k - 3) // 2 + 1):
                    odd_interior += _c_table[2 * a + 1] * _b_table[k - 3 - 2 * a]
                _c_table.append(
                    _c_table[k - 1] + 2 * even_interior + 2 * odd_interior
                )
    return _c_table[m]
