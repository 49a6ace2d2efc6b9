"""Generalized plane trees: two edge kinds plus half-edges, with contour codec.

The contour walk of a rooted plane tree visits the incidences of each vertex
in order, descending along full edges and back: an edge passed for the first
time writes its opening bracket, the second passage writes the closing one,
and a half-edge (an edge with only one endpoint) is passed once and writes a
dot.  Solid edges use square brackets, dashed edges round ones.  Decoding a
valid string therefore rebuilds the tree, with the first symbol as the root
orientation.

Vertices store their non-parent incidences in contour order, which makes the
representation canonical and equality structural.  Trees are immutable
values; every operation returns a new tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import bracketing
from .diagram import EdgeKind
from .errors import NoEdgeAtVertexOrBeyond, NotValid

__all__ = [
    "HalfEdge",
    "Edge",
    "PlaneVertex",
    "GeneralizedTree",
    "TreeStats",
    "HALF_EDGE",
]


@dataclass(frozen=True)
class HalfEdge:
    """An incidence attached to a single vertex."""


HALF_EDGE = HalfEdge()


@dataclass(frozen=True)
class Edge:
    kind: EdgeKind
    child: "PlaneVertex"


Incidence = Union[Edge, HalfEdge]


@dataclass(frozen=True)
class PlaneVertex:
    incidences: tuple[Incidence, ...] = ()


@dataclass(frozen=True)
class TreeStats:
    edges: int
    vertices: int
    half_edges: int


_OPEN_FOR_KIND = {EdgeKind.TRANSVERSAL: "[", EdgeKind.HOMOCLINIC: "("}
_CLOSE_FOR_KIND = {EdgeKind.TRANSVERSAL: "]", EdgeKind.HOMOCLINIC: ")"}
_KIND_FOR_OPEN = {"[": EdgeKind.TRANSVERSAL, "(": EdgeKind.HOMOCLINIC}

# A half-edge reference is the index path from the root: every entry but the
# last descends into an Edge incidence, the last selects the HalfEdge itself.
HalfEdgeRef = tuple[int, ...]


@dataclass(frozen=True)
class GeneralizedTree:
    root: PlaneVertex

    # -- codec ---------------------------------------------------------------

    @classmethod
    def from_bracketing(cls, s: str) -> "GeneralizedTree":
        """Decode the contour string ``s`` (must be valid)."""
        s = bracketing.parse_string(s)
        if not bracketing.is_valid(s):
            raise NotValid("tree decoding needs a valid string")
        children: list[list[Incidence]] = [[]]
        open_kinds: list[EdgeKind] = []
        for ch in s:
            if ch == ".":
                children[-1].append(HALF_EDGE)
            elif ch in _KIND_FOR_OPEN:
                children.append([])
                open_kinds.append(_KIND_FOR_OPEN[ch])
            else:
                done = children.pop()
                children[-1].append(Edge(open_kinds.pop(), PlaneVertex(tuple(done))))
        return cls(PlaneVertex(tuple(children[0])))

    def to_bracketing(self) -> str:
        parts: list[str] = []

        def walk(v: PlaneVertex) -> None:
            for inc in v.incidences:
                if isinstance(inc, HalfEdge):
                    parts.append(".")
                else:
                    parts.append(_OPEN_FOR_KIND[inc.kind])
                    walk(inc.child)
                    parts.append(_CLOSE_FOR_KIND[inc.kind])

        walk(self.root)
        return "".join(parts)

    # -- statistics ----------------------------------------------------------

    def stats(self) -> TreeStats:
        edges = vertices = half_edges = 0

        def walk(v: PlaneVertex) -> None:
            nonlocal edges, vertices, half_edges
            vertices += 1
            for inc in v.incidences:
                if isinstance(inc, HalfEdge):
                    half_edges += 1
                else:
                    edges += 1
                    walk(inc.child)

        walk(self.root)
        return TreeStats(edges, vertices, half_edges)

    # -- half-edge handling ----------------------------------------------------

    def half_edge_refs(self) -> list[HalfEdgeRef]:
        """References to every half-edge, in contour order."""
        refs: list[HalfEdgeRef] = []

        def walk(v: PlaneVertex, prefix: tuple[int, ...]) -> None:
            for idx, inc in enumerate(v.incidences):
                if isinstance(inc, HalfEdge):
                    refs.append(prefix + (idx,))
                else:
                    walk(inc.child, prefix + (idx,))

        walk(self.root, ())
        return refs

    def reroot_from_half_edge(self, ref: HalfEdgeRef) -> "GeneralizedTree":
        """Drop the referenced half-edge and re-root at the next full edge.

        Scanning the circular incidence order of the half-edge's vertex in
        contour direction (the parent edge sits just before the stored
        incidences), the first full edge found becomes the new root edge, and
        the half-edge's vertex the new root vertex.  Raises
        :class:`NoEdgeAtVertexOrBeyond` when the tree has no full edge at all.
        """
        if not ref:
            raise ValueError("empty half-edge reference")
        spine = [self.root]
        for idx in ref[:-1]:
            inc = spine[-1].incidences[idx]
            if not isinstance(inc, Edge):
                raise ValueError("reference path does not descend along edges")
            spine.append(inc.child)
        v = spine[-1]
        mark = ref[-1]
        if not (0 <= mark < len(v.incidences)) or not isinstance(
            v.incidences[mark], HalfEdge
        ):
            raise ValueError("reference does not point at a half-edge")

        has_parent = len(spine) > 1
        # Circular order at v, excluding the marked half-edge, starting just
        # after the mark.  -1 stands for the parent slot.
        slots = ([-1] if has_parent else []) + list(range(len(v.incidences)))
        pos = slots.index(mark)
        order = slots[pos + 1 :] + slots[:pos]

        first = next(
            (
                q
                for q, slot in enumerate(order)
                if slot == -1 or isinstance(v.incidences[slot], Edge)
            ),
            None,
        )
        if first is None:
            raise NoEdgeAtVertexOrBeyond("the tree has no full edge")
        order = order[first:] + order[:first]

        idxs = list(ref[:-1])
        new_incidences: list[Incidence] = []
        for slot in order:
            if slot == -1:
                parent_edge = spine[-2].incidences[idxs[-1]]
                assert isinstance(parent_edge, Edge)
                new_incidences.append(
                    Edge(parent_edge.kind, _hang_above(spine, idxs))
                )
            else:
                new_incidences.append(v.incidences[slot])
        return GeneralizedTree(PlaneVertex(tuple(new_incidences)))

    # -- rendering -------------------------------------------------------------

    def to_dot(self) -> str:
        """Graphviz source: solid/dashed edges, point stubs, root double-circled."""
        lines = ["graph generalized_tree {", "  node [shape=circle];"]
        counter = {"v": 0, "h": 0}

        def next_id(prefix: str) -> str:
            name = f"{prefix}{counter[prefix]}"
            counter[prefix] += 1
            return name

        def walk(v: PlaneVertex, vid: str) -> None:
            for inc in v.incidences:
                if isinstance(inc, HalfEdge):
                    hid = next_id("h")
                    lines.append(f'  {hid} [shape=point, label=""];')
                    lines.append(f"  {vid} -- {hid};")
                else:
                    cid = next_id("v")
                    lines.append(f'  {cid} [label=""];')
                    style = (
                        "solid" if inc.kind is EdgeKind.TRANSVERSAL else "dashed"
                    )
                    lines.append(f"  {vid} -- {cid} [style={style}];")
                    walk(inc.child, cid)

        root_id = next_id("v")
        lines.append(f'  {root_id} [label="", peripheries=2];')
        walk(self.root, root_id)
        lines.append("}")
        return "\n".join(lines)

    # -- JSON ------------------------------------------------------------------

    def to_json_dict(self) -> dict:
        def encode(v: PlaneVertex) -> dict:
            incs = []
            for inc in v.incidences:
                if isinstance(inc, HalfEdge):
                    incs.append({"half_edge": True})
                else:
                    incs.append({"kind": inc.kind.value, "child": encode(inc.child)})
            return {"incidences": incs}

        return {"tree": encode(self.root)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "GeneralizedTree":
        def decode(node: dict) -> PlaneVertex:
            incs: list[Incidence] = []
            for item in node.get("incidences", ()):
                if item.get("half_edge"):
                    incs.append(HALF_EDGE)
                else:
                    incs.append(Edge(EdgeKind(item["kind"]), decode(item["child"])))
            return PlaneVertex(tuple(incs))

        return cls(decode(data["tree"]))


def _hang_above(spine: list[PlaneVertex], idxs: list[int]) -> PlaneVertex:
    """Everything above ``spine[-1]``, re-hung as a subtree below it.

    ``spine[k+1]`` is reached from ``spine[k]`` through incidence
    ``idxs[k]``; the cyclic incidence orders are preserved.
    """

    def build(k: int) -> PlaneVertex:
        u = spine[k]
        j = idxs[k]
        slots = ([-1] if k > 0 else []) + list(range(len(u.incidences)))
        pos = slots.index(j)
        order = slots[pos + 1 :] + slots[:pos]
        incs: list[Incidence] = []
        for slot in order:
            if slot == -1:
                parent_edge = spine[k - 1].incidences[idxs[k - 1]]
                assert isinstance(parent_edge, Edge)
                incs.append(Edge(parent_edge.kind, build(k - 1)))
            else:
                incs.append(u.incidences[slot])
        return PlaneVertex(tuple(incs))

    return build(len(spine) - 2)
