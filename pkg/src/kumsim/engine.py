"""Storage-graph memory shared by the two pointer-machine flavors.

A StorageGraph is the working memory of a pointer machine.  Two variants
sit behind one interface:

* KUM: an undirected ported graph with a hard degree bound.  link()
  occupies one named port on each endpoint and the edge is visible from
  both sides; unlink() removes it from both.
* SMM: a directed graph.  Each node has one outgoing pointer slot per
  direction label, targets are overwritten freely, and a node's in-degree
  is unconstrained (that asymmetry is the whole point of keeping both
  models around).

Every mutating or probing primitive costs exactly one step on the graph's
step counter; idle() buys any number of do-nothing steps at once.
graph_stats() is harness instrumentation and costs nothing.

Node handles are plain ints, stable for the life of the graph (nodes are
never deleted, only unlinked).  Colors and port labels are declared as
name strings in new_graph() and addressed as small ints afterwards, in
declaration order; palette[0] is the default color of every fresh node.
"""

from __future__ import annotations

import enum
from typing import Optional, Sequence


class ModelKind(enum.Enum):
    KUM = "kum"
    SMM = "smm"


# Handles and symbols at the operation level.  Kept as bare ints for speed;
# the names exist so signatures read the way the machine model talks.
NodeRef = int
Color = int
PortLabel = int

MAX_PALETTE = 64


class EngineError(Exception):
    """A primitive was applied in a state that the model forbids."""


class DegreeBoundExceeded(EngineError):
    pass


class PortOccupied(EngineError):
    pass


class PortFree(EngineError):
    pass


class UnknownColor(EngineError):
    pass


class ModelMismatch(EngineError):
    """link() on an SMM graph, or set_pointer() on a KUM graph."""


class StorageGraph:
    """Ported-graph storage with step-exact cost accounting.

    Construct via new_graph().  All failed primitives raise a subclass of
    EngineError and leave the graph untouched.
    """

    __slots__ = (
        "model", "degree_bound", "palette", "labels",
        "step_counter", "_is_kum", "_ncolors", "_nports",
        "_adj", "_peer", "_color", "_deg", "_indeg",
        "_node_count", "_max_degree", "_max_in_degree",
        "_color_ids", "_port_ids",
    )

    def __init__(self, model: ModelKind, degree_bound: Optional[int],
                 palette: Sequence[str], labels: Sequence[str]):
        if not isinstance(model, ModelKind):
            raise ValueError("model must be a ModelKind")
        if not palette:
            raise ValueError("palette must not be empty")
        if len(palette) > MAX_PALETTE:
            raise ValueError("palette size capped at %d" % MAX_PALETTE)
        if not labels:
            raise ValueError("label alphabet must not be empty")
        if len(set(palette)) != len(palette):
            raise ValueError("duplicate color names")
        if len(set(labels)) != len(labels):
            raise ValueError("duplicate port labels")

        self.model = model
        self._is_kum = model is ModelKind.KUM
        if self._is_kum:
            # The port alphabet may be larger than the degree bound; the
            # bound is enforced per node at link time, not at creation.
            if degree_bound is None or degree_bound < 1:
                raise ValueError("KUM requires a positive degree bound")
            self.degree_bound = degree_bound
        else:
            # SMM out-degree is capped by the direction alphabet itself;
            # an explicit bound is accepted but must agree.
            if degree_bound is not None and degree_bound != len(labels):
                raise ValueError("SMM out-degree bound is |labels|")
            self.degree_bound = len(labels)

        self.palette = tuple(palette)
        self.labels = tuple(labels)
        self._color_ids = {name: i for i, name in enumerate(self.palette)}
        self._port_ids = {name: i for i, name in enumerate(self.labels)}
        self._ncolors = len(self.palette)
        self._nports = len(self.labels)

        self._adj: list[list[Optional[int]]] = []
        self._peer: list[list[Optional[int]]] = []   # KUM: far-side port ids
        self._color: list[int] = []
        self._deg: list[int] = []                    # KUM degree / SMM out-degree
        self._indeg: list[int] = []                  # SMM only
        self._node_count = 0
        self._max_degree = 0
        self._max_in_degree = 0
        self.step_counter = 0
        self._alloc(0)   # the initial node; construction costs no steps

    # -- name resolution (free, harness-side) ------------------------------

    def color_id(self, name: str) -> Color:
        try:
            return self._color_ids[name]
        except KeyError:
            raise UnknownColor(name) from None

    def port_id(self, name: str) -> PortLabel:
        try:
            return self._port_ids[name]
        except KeyError:
            raise ValueError("unknown port label %r" % (name,)) from None

    @property
    def initial_node(self) -> NodeRef:
        return 0

    # -- internals ----------------------------------------------------------

    def _alloc(self, c: int) -> int:
        v = self._node_count
        self._adj.append([None] * self._nports)
        if self._is_kum:
            self._peer.append([None] * self._nports)
        self._color.append(c)
        self._deg.append(0)
        self._indeg.append(0)
        self._node_count = v + 1
        return v

    def _check_node(self, v) -> None:
        if type(v) is not int or not 0 <= v < self._node_count:
            raise ValueError("not a node handle of this graph: %r" % (v,))

    def _check_port(self, p) -> None:
        if type(p) is not int or not 0 <= p < self._nports:
            raise ValueError("not a port id of this graph: %r" % (p,))

    # -- primitives (one step each) ------------------------------------------

    def create_node(self, c: Color) -> NodeRef:
        if type(c) is not int or not 0 <= c < self._ncolors:
            raise UnknownColor(c)
        self.step_counter += 1
        return self._alloc(c)

    def link(self, a: NodeRef, pa: PortLabel, b: NodeRef, pb: PortLabel) -> None:
        """Attach an undirected edge between port pa of a and port pb of b."""
        if not self._is_kum:
            raise ModelMismatch("link() is a KUM primitive; use set_pointer()")
        self._check_node(a)
        self._check_node(b)
        self._check_port(pa)
        self._check_port(pb)
        adj = self._adj
        if adj[a][pa] is not None or adj[b][pb] is not None:
            raise PortOccupied((a, pa) if adj[a][pa] is not None else (b, pb))
        if a == b and pa == pb:
            raise PortOccupied((a, pa))
        deg = self._deg
        bound = self.degree_bound
        if a == b:
            if deg[a] + 2 > bound:
                raise DegreeBoundExceeded(
                    "node %d would exceed degree bound %d" % (a, bound))
        elif deg[a] + 1 > bound or deg[b] + 1 > bound:
            v = a if deg[a] + 1 > bound else b
            raise DegreeBoundExceeded(
                "node %d would exceed degree bound %d" % (v, bound))
        adj[a][pa] = b
        adj[b][pb] = a
        peer = self._peer
        peer[a][pa] = pb
        peer[b][pb] = pa
        if a == b:
            deg[a] += 2
        else:
            deg[a] += 1
            deg[b] += 1
        m = deg[a] if deg[a] >= deg[b] else deg[b]
        if m > self._max_degree:
            self._max_degree = m
        self.step_counter += 1

    def set_pointer(self, a: NodeRef, d: PortLabel, b: NodeRef) -> None:
        """Aim the directed pointer (a, d) at b, overwriting any old target."""
        if self._is_kum:
            raise ModelMismatch("set_pointer() is an SMM primitive; use link()")
        self._check_node(a)
        self._check_node(b)
        self._check_port(d)
        adj = self._adj
        old = adj[a][d]
        indeg = self._indeg
        if old is not None:
            indeg[old] -= 1
        else:
            self._deg[a] += 1
        adj[a][d] = b
        indeg[b] += 1
        if indeg[b] > self._max_in_degree:
            self._max_in_degree = indeg[b]
        if self._deg[a] > self._max_degree:
            self._max_degree = self._deg[a]
        self.step_counter += 1

    def unlink(self, a: NodeRef, p: PortLabel) -> None:
        """Remove the edge or pointer at port p of a (both sides, for KUM)."""
        self._check_node(a)
        self._check_port(p)
        adj = self._adj
        b = adj[a][p]
        if b is None:
            raise PortFree((a, p))
        if self._is_kum:
            peer = self._peer
            pb = peer[a][p]
            adj[a][p] = None
            peer[a][p] = None
            adj[b][pb] = None
            peer[b][pb] = None
            deg = self._deg
            if a == b:
                deg[a] -= 2
            else:
                deg[a] -= 1
                deg[b] -= 1
        else:
            adj[a][p] = None
            self._deg[a] -= 1
            self._indeg[b] -= 1
        self.step_counter += 1

    def neighbor(self, a: NodeRef, p: PortLabel) -> Optional[NodeRef]:
        if not 0 <= a < self._node_count:
            self._check_node(a)
        self.step_counter += 1
        return self._adj[a][p]

    def get_color(self, a: NodeRef) -> Color:
        if not 0 <= a < self._node_count:
            self._check_node(a)
        self.step_counter += 1
        return self._color[a]

    def set_color(self, a: NodeRef, c: Color) -> None:
        if not 0 <= a < self._node_count:
            self._check_node(a)
        if type(c) is not int or not 0 <= c < self._ncolors:
            raise UnknownColor(c)
        self._color[a] = c
        self.step_counter += 1

    def identity_eq(self, a: NodeRef, b: NodeRef) -> bool:
        self._check_node(a)
        self._check_node(b)
        self.step_counter += 1
        return a == b

    def idle(self, count: int = 1) -> None:
        """Spend count do-nothing steps (used to pad work to a fixed cadence)."""
        if count < 0:
            raise ValueError("idle count must be nonnegative")
        self.step_counter += count

    # -- observers (zero steps) ----------------------------------------------

    def graph_stats(self) -> dict:
        """Snapshot of instrumentation watermarks.  Costs no steps."""
        return {
            "node_count": self._node_count,
            "max_degree": self._max_degree,
            "max_in_degree": self._max_in_degree,
        }

    def degree(self, a: NodeRef) -> int:
        self._check_node(a)
        return self._deg[a]

    def in_degree(self, a: NodeRef) -> int:
        self._check_node(a)
        return self._indeg[a]

    def fork(self) -> "StorageGraph":
        """Deep-copy the graph state so two futures can be explored.

        Harness-side; costs no steps on either copy.
        """
        g = StorageGraph.__new__(StorageGraph)
        g.model = self.model
        g._is_kum = self._is_kum
        g.degree_bound = self.degree_bound
        g.palette = self.palette
        g.labels = self.labels
        g._color_ids = self._color_ids
        g._port_ids = self._port_ids
        g._ncolors = self._ncolors
        g._nports = self._nports
        g._adj = [row[:] for row in self._adj]
        g._peer = [row[:] for row in self._peer] if self._is_kum else []
        g._color = self._color[:]
        g._deg = self._deg[:]
        g._indeg = self._indeg[:]
        g._node_count = self._node_count
        g._max_degree = self._max_degree
        g._max_in_degree = self._max_in_degree
        g.step_counter = self.step_counter
        return g


def new_graph(model: ModelKind, degree_bound: Optional[int],
              palette: Sequence[str], labels: Sequence[str]) -> StorageGraph:
    """Fresh graph with one initial node of the default color and 0 steps."""
    return StorageGraph(model, degree_bound, palette, labels)
