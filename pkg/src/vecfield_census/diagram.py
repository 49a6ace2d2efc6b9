"""Board diagrams: cyclic slot configurations with typed, non-crossing pairings.

A diagram has an even number of boundary slots; each slot is unpaired or
paired with another slot by a solid (transversal) or dashed (homoclinic)
link.  Reading the slots from slot 0 (smaller index of a pair opens, larger
closes, unpaired slots are dots) must give a valid bracketing, and that
string determines the diagram.

The cyclic group of slot rotations acts on diagrams; two diagrams are
equivalent when one is a rotation of the other, and :meth:`canonical_form`
picks the lexicographically smallest reading over the orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import bracketing
from .bracketing import PairKind, match_pairs, symbol_sort_key
from .errors import NotValid, OddLength

__all__ = ["EdgeKind", "BoardDiagram"]


class EdgeKind(Enum):
    TRANSVERSAL = "T"  # square brackets, solid
    HOMOCLINIC = "H"  # round parentheses, dashed


_KIND_FOR_PAIR = {
    PairKind.SQUARE: EdgeKind.TRANSVERSAL,
    PairKind.ROUND: EdgeKind.HOMOCLINIC,
}
_OPEN_CHAR = {EdgeKind.TRANSVERSAL: "[", EdgeKind.HOMOCLINIC: "("}
_CLOSE_CHAR = {EdgeKind.TRANSVERSAL: "]", EdgeKind.HOMOCLINIC: ")"}


@dataclass(frozen=True)
class BoardDiagram:
    """2n slots with a partial non-crossing pairing.

    ``partners[i]`` is the partner slot of ``i`` or -1 when unpaired;
    ``kinds[i]`` is the link kind or None.  Construction checks the full
    invariant (fixed-point-free involution with matching kinds, and the
    read-off string is valid with exactly these pairs).
    """

    partners: tuple[int, ...]
    kinds: tuple[EdgeKind | None, ...]

    def __post_init__(self) -> None:
        m = len(self.partners)
        if m == 0 or m % 2:
            raise NotValid("a diagram needs a positive even number of slots")
        if len(self.kinds) != m:
            raise NotValid("partners and kinds must have equal length")
        for i, j in enumerate(self.partners):
            if j == -1:
                if self.kinds[i] is not None:
                    raise NotValid(f"unpaired slot {i} carries a kind")
                continue
            if not 0 <= j < m or j == i or self.partners[j] != i:
                raise NotValid(f"pairing is not an involution at slot {i}")
            if self.kinds[i] is None or self.kinds[i] is not self.kinds[j]:
                raise NotValid(f"kind mismatch on pair {i}-{j}")
        # The reading must be valid and must match back to the same pairs:
        # this is what rules out crossings and odd gaps.
        table = match_pairs(self.to_bracketing())
        pairs = {(p.open_index, p.close_index) for p in table.pairs}
        ours = {
            (i, j) for i, j in enumerate(self.partners) if j != -1 and i < j
        }
        if pairs != ours:
            raise NotValid("pairing disagrees with the matching of its reading")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_bracketing(cls, s: str) -> "BoardDiagram":
        """Diagram of a valid even-length string; dots become unpaired slots."""
        s = bracketing.parse_string(s)
        table = match_pairs(s)
        if len(s) % 2:
            raise OddLength(f"diagram strings must have even length, got {len(s)}")
        m = len(s)
        partners = [-1] * m
        kinds: list[EdgeKind | None] = [None] * m
        for p in table.pairs:
            kind = _KIND_FOR_PAIR[p.kind]
            partners[p.open_index] = p.close_index
            partners[p.close_index] = p.open_index
            kinds[p.open_index] = kind
            kinds[p.close_index] = kind
        return cls(tuple(partners), tuple(kinds))

    @classmethod
    def from_json_dict(cls, data: dict) -> "BoardDiagram":
        slots = data["slots"]
        partners = []
        kinds: list[EdgeKind | None] = []
        for slot in slots:
            j = slot["partner"]
            partners.append(-1 if j is None else int(j))
            kinds.append(None if slot["kind"] is None else EdgeKind(slot["kind"]))
        d = cls(tuple(partners), tuple(kinds))
        if "n" in data and int(data["n"]) * 2 != d.slot_count:
            raise NotValid("declared n disagrees with the slot list")
        return d

    # -- views --------------------------------------------------------------

    @property
    def slot_count(self) -> int:
        return len(self.partners)

    def to_bracketing(self) -> str:
        chars = []
        for i, j in enumerate(self.partners):
            if j == -1:
                chars.append(".")
            elif i < j:
                chars.append(_OPEN_CHAR[self.kinds[i]])
            else:
                chars.append(_CLOSE_CHAR[self.kinds[i]])
        return "".join(chars)

    def to_json_dict(self) -> dict:
        return {
            "n": self.slot_count // 2,
            "slots": [
                {
                    "partner": None if j == -1 else j,
                    "kind": None if k is None else k.value,
                }
                for j, k in zip(self.partners, self.kinds)
            ],
        }

    # -- rotation action ----------------------------------------------------

    def rotated(self, r: int) -> "BoardDiagram":
        """The diagram with every slot relation shifted by ``r``.

        Slot (i + r) mod 2n of the result holds the state slot i had here,
        with its partner shifted the same way.  ``r`` may be any integer.
        """
        m = self.slot_count
        r %= m
        partners = [-1] * m
        kinds: list[EdgeKind | None] = [None] * m
        for i, j in enumerate(self.partners):
            partners[(i + r) % m] = -1 if j == -1 else (j + r) % m
            kinds[(i + r) % m] = self.kinds[i]
        return BoardDiagram(tuple(partners), tuple(kinds))

    def period(self) -> int:
        """Smallest r > 0 with ``rotated(r) == self``; divides the slot count."""
        m = self.slot_count
        for r in range(1, m + 1):
            if m % r == 0 and self.rotated(r) == self:
                return r
        raise AssertionError("unreachable: rotation by slot_count is the identity")

    def canonical_form(self) -> str:
        """Smallest reading over the rotation orbit, under the symbol order.

        Two diagrams are rotation-equivalent iff their canonical forms agree.
        """
        return min(
            (self.rotated(r).to_bracketing() for r in range(self.slot_count)),
            key=symbol_sort_key,
        )

    def is_generic(self) -> bool:
        """No unpaired slot and every link transversal."""
        return all(j != -1 for j in self.partners) and all(
            k is EdgeKind.TRANSVERSAL for k in self.kinds
        )
