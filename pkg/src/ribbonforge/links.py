"""Link diagrams, their state ribbon graphs, and representability.

A link diagram in PD (planar diagram) notation is smoothed at every
crossing; the circles of the all-A state become the vertices of a ribbon
graph and every crossing contributes one edge.  A ribbon graph arises this
way from some diagram exactly when it has no minor equivalent to the
twisted loop, the bouquet of three pairwise interlaced loops, or the
toroidal theta.  This module builds the state graph, decides
representability, and backs every verdict with either a plane partial-dual
witness or a replayable minor certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain, combinations
from typing import Iterable

from .errors import (
    InternalInvariantViolation,
    NotABouquet,
    OrientabilityViolation,
    ParseError,
    RibbonError,
    SizeBoundExceeded,
    StrandCountError,
    UnknownLabel,
    UnknownVertex,
)
from .limits import PLANE_DUAL_MAX_EDGES, effective_bound
from .minors import (
    MinorScript,
    Step,
    bbar1_script,
    build_B,
    build_theta_t,
    has_minor,
    verified_script,
)
from .moves import contract_edge, delete_edge, partial_dual
from .presentation import (
    Arrow,
    ArrowPresentation,
    component_count,
    component_vertex_sets,
    components,
    delete_vertex,
    presentation,
    restriction,
    spanning_tree,
    underlying_edges,
)
from .surfaces import is_orientable, surface_summary

# -- PD codes ----------------------------------------------------------------

Crossing = tuple[str, str, str, str]


@dataclass(frozen=True)
class PDCode:
    """A link diagram: 4-tuples of strand labels, one per crossing.

    Labels are listed counterclockwise around the crossing starting at the
    incoming understrand.  Every strand label appears exactly twice across
    the whole diagram.
    """

    crossings: tuple[Crossing, ...]

    @property
    def strand_labels(self) -> tuple[str, ...]:
        return tuple(sorted({s for cr in self.crossings for s in cr}))


def pd_code(crossings: Iterable[Iterable[str]]) -> PDCode:
    """Validated PDCode constructor."""
    rows = []
    counts: dict[str, int] = {}
    for cr in crossings:
        row = tuple(str(s) for s in cr)
        if len(row) != 4:
            raise ParseError(f"crossing needs 4 strand labels, got {row!r}")
        rows.append(row)
        for s in row:
            counts[s] = counts.get(s, 0) + 1
    bad = sorted(s for s, k in counts.items() if k != 2)
    if bad:
        raise StrandCountError(
            f"strand labels must appear exactly twice; violated by: {', '.join(bad)}"
        )
    return PDCode(tuple(rows))


def parse_pd(text: str) -> PDCode:
    """Parse PD notation: ``X(a,b,c,d)`` or ``X a b c d``, ``#`` comments."""
    tokens: list[str] = []
    for line in text.splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(line.replace("(", " ").replace(")", " ").replace(",", " ").split())
    crossings = []
    i = 0
    while i < len(tokens):
        if tokens[i] != "X":
            raise ParseError(f"expected 'X', found {tokens[i]!r}")
        if i + 4 >= len(tokens) or "X" in tokens[i + 1 : i + 5]:
            raise ParseError("crossing needs exactly 4 strand labels")
        crossings.append(tokens[i + 1 : i + 5])
        i += 5
    return pd_code(crossings)


def serialize_pd(code: PDCode) -> str:
    return " ".join("X({})".format(",".join(cr)) for cr in code.crossings)


# -- the all-A (or all-B) state ribbon graph ---------------------------------

# Smoothing arcs pair the crossing's slot positions; the first slot of each
# pair is the tail of that arc's arrow, following one counterclockwise sweep.
_SMOOTHINGS = {"A": ((0, 1), (2, 3)), "B": ((1, 2), (3, 0))}


def all_A_ribbon_graph(code: PDCode, convention: str = "A") -> ArrowPresentation:
    """The ribbon graph of the all-A (or all-B) smoothing state.

    State circles become vertices; every crossing becomes one edge whose
    two arrows mark where its smoothing arcs run along the circles.  The
    result is always orientable; a violation means the arrow-direction
    convention is broken and is raised, never papered over.
    """
    if convention not in _SMOOTHINGS:
        raise RibbonError(f"smoothing convention must be 'A' or 'B', not {convention!r}")
    pairs = _SMOOTHINGS[convention]

    slot_of: dict[str, list[tuple[int, int]]] = {}
    for ci, crossing in enumerate(code.crossings):
        for k, s in enumerate(crossing):
            slot_of.setdefault(s, []).append((ci, k))
    strand: dict[tuple[int, int], tuple[int, int]] = {}
    for s, slots in slot_of.items():
        if len(slots) != 2:
            raise StrandCountError(f"strand {s!r} does not appear exactly twice")
        strand[slots[0]] = slots[1]
        strand[slots[1]] = slots[0]

    partner: dict[tuple[int, int], tuple[int, int]] = {}
    tails: set[tuple[int, int]] = set()
    for ci in range(len(code.crossings)):
        for p, q in pairs:
            partner[(ci, p)] = (ci, q)
            partner[(ci, q)] = (ci, p)
            tails.add((ci, p))

    visited: set[tuple[int, int]] = set()
    curves: list[list[Arrow]] = []
    for start in sorted(partner):
        if start in visited:
            continue
        word: list[Arrow] = []
        cur = start
        while True:
            nxt = partner[cur]
            visited.add(cur)
            visited.add(nxt)
            word.append(Arrow(str(cur[0] + 1), cur in tails))
            cur = strand[nxt]
            if cur == start:
                break
        curves.append(word)
    state = presentation(curves)
    if not is_orientable(state):
        raise OrientabilityViolation(
            "state ribbon graph came out non-orientable; "
            "the smoothing arrow convention is broken"
        )
    return state


# -- interlacement -----------------------------------------------------------


@dataclass(frozen=True)
class IntersectionGraph:
    """Which loops of a bouquet interlace: e ~ f iff they read e f e f."""

    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]

    def adjacent(self, e: str, f: str) -> bool:
        return tuple(sorted((e, f))) in self.edges

    def neighbours(self, e: str) -> list[str]:
        out = [b if a == e else a for a, b in self.edges if e in (a, b)]
        return sorted(out)

    def as_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(pair) for pair in sorted(self.edges)],
        }


def intersection_graph(pres: ArrowPresentation) -> IntersectionGraph:
    """The interlacement graph of a one-vertex ribbon graph."""
    if len(pres.curves) != 1:
        raise NotABouquet(
            f"interlacement needs a single vertex, found {len(pres.curves)}"
        )
    word = [a.label for a in pres.curves[0]]
    pos: dict[str, list[int]] = {}
    for i, label in enumerate(word):
        pos.setdefault(label, []).append(i)
    labels = tuple(sorted(pos))
    edges = set()
    for e, f in combinations(labels, 2):
        i, j = pos[e]
        between = sum(1 for p in pos[f] if i < p < j)
        if between == 1:
            edges.add((e, f))
    return IntersectionGraph(labels, frozenset(edges))


def _two_colour(
    graph: IntersectionGraph,
) -> tuple[dict[str, int] | None, tuple[str, ...] | None]:
    """Bipartition or a minimal odd cycle.

    Colours each interlacement component from its smallest label (colour 0).
    On success returns (colouring, None); otherwise (None, cycle) with the
    shortest odd cycle, ties broken lexicographically.
    """
    adj = {v: graph.neighbours(v) for v in graph.vertices}
    colour: dict[str, int] = {}
    bipartite = True
    for root in graph.vertices:
        if root in colour:
            continue
        colour[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w not in colour:
                        colour[w] = colour[v] ^ 1
                        nxt.append(w)
                    elif colour[w] == colour[v]:
                        bipartite = False
            frontier = nxt
    if bipartite:
        return colour, None

    best: tuple[int, tuple[str, ...]] | None = None
    for start in graph.vertices:
        stack: list[tuple[str, ...]] = [(start,)]
        while stack:
            path = stack.pop()
            tip = path[-1]
            if len(path) >= 3 and len(path) % 2 == 1 and start in adj[tip]:
                key = (len(path), path)
                if best is None or key < best:
                    best = key
            if best is not None and len(path) >= best[0]:
                continue
            for w in adj[tip]:
                if w > start and w not in path:
                    stack.append(path + (w,))
    if best is None:
        raise InternalInvariantViolation("non-bipartite graph with no odd cycle")
    return None, best[1]


# -- plane-biseparations ------------------------------------------------------


def is_separating_vertex(pres: ArrowPresentation, index: int) -> bool:
    """Whether the edges at a vertex split into two or more blocks.

    Each loop at the vertex is its own block; non-loop edges fall in the
    same block exactly when their far endpoints are connected after the
    vertex is removed.  Two or more blocks means the vertex separates.
    """
    if not 0 <= index < len(pres.curves):
        raise UnknownVertex(f"no curve with index {index}")
    edges = underlying_edges(pres)
    loops = sum(1 for a, b in edges.values() if a == b == index)
    far = sorted(
        {a if b == index else b for a, b in edges.values() if (a == index) != (b == index)}
    )
    blocks = loops
    if far:
        remainder = component_vertex_sets(delete_vertex(pres, index))
        shifted = [w - 1 if w > index else w for w in far]
        blocks += len({next(i for i, comp in enumerate(remainder) if w in comp)
                       for w in shifted})
    return blocks >= 2


def _spanning_piece_count(pres: ArrowPresentation, side: set[str]) -> int:
    """Components of the spanning subgraph on one edge side (all vertices kept)."""
    parent = list(range(len(pres.curves)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for label in side:
        a, b = pres.endpoints(label)
        parent[find(a)] = find(b)
    return len({find(i) for i in range(len(parent))})


def defines_plane_biseparation(
    pres: ArrowPresentation, labels: Iterable[str]
) -> bool:
    """Whether an edge subset splits the graph into plane pieces glued tree-wise.

    True iff (1) every component of the subgraph on the chosen edges and of
    the subgraph on the rest is plane, and (2) the pieces — components of
    the two spanning subgraphs, one per side — meet in a tree pattern:
    counting one link per vertex between the piece of each side holding it,
    the piece structure of each component must be acyclic, which happens
    exactly when the two piece counts sum to vertices + components.  The
    tree pattern forces every vertex shared by the two sides to be a
    separating vertex, and moreover rules out closed chains of pieces,
    whose extra homology would push the genus of the partial dual above
    zero even though all pieces are plane.
    """
    chosen = {str(l) for l in labels}
    unknown = chosen - set(pres.labels())
    if unknown:
        raise UnknownLabel(f"labels not present: {', '.join(sorted(unknown))}")
    rest = set(pres.labels()) - chosen
    for side in (chosen, rest):
        if surface_summary(restriction(pres, side)).euler_genus != 0:
            return False
    pieces = _spanning_piece_count(pres, chosen) + _spanning_piece_count(pres, rest)
    return pieces == pres.vertex_count + component_count(pres)


def brute_force_plane_dual(
    pres: ArrowPresentation, max_edges: int | None = None
) -> tuple[str, ...] | None:
    """The lexicographically least edge subset whose partial dual is plane.

    Exhaustive over all subsets; the authoritative but exponential oracle
    that the decision procedure is tested against.
    """
    bound = effective_bound(PLANE_DUAL_MAX_EDGES, max_edges)
    if pres.edge_count > bound:
        raise SizeBoundExceeded(
            f"{pres.edge_count} edges exceeds plane-dual search bound {bound}"
        )
    labels = pres.labels()
    subsets = chain.from_iterable(
        combinations(labels, r) for r in range(len(labels) + 1)
    )
    for sub in sorted(subsets):
        if surface_summary(partial_dual(pres, set(sub))).euler_genus == 0:
            return sub
    return None


# -- the decision procedure ---------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    """Outcome of the representability decision, with supporting evidence.

    Exactly one of witness (an edge subset whose partial dual is plane) or
    certificate (a replayed minor script to a forbidden pattern, named in
    certificate_target) is present — unless certificate extraction was
    explicitly declined.  odd_cycle reports the interlacement obstruction
    when one exists.
    """

    representable: bool
    witness: tuple[str, ...] | None = None
    certificate: MinorScript | None = None
    certificate_target: str | None = None
    odd_cycle: tuple[str, ...] | None = None

    def as_dict(self) -> dict:
        return {
            "representable": self.representable,
            "witness": list(self.witness) if self.witness is not None else None,
            "certificate": (
                {"target": self.certificate_target, "steps": self.certificate.as_json()}
                if self.certificate is not None
                else None
            ),
            "odd_cycle": list(self.odd_cycle) if self.odd_cycle is not None else None,
        }


def _pattern_certificate(
    pres: ArrowPresentation,
    tree: tuple[str, ...],
    cycle: tuple[str, ...],
    max_edges: int | None,
) -> tuple[MinorScript, str]:
    """A minor script from ``pres`` to B3 or the toroidal theta.

    First trims the graph to the odd interlacement cycle pulled back through
    the spanning tree and searches there; falls back to a full search.
    """
    keep = set(cycle) | set(tree)
    prefix: list[Step] = []
    cur = pres
    for label in sorted(set(pres.labels()) - keep):
        prefix.append(("delete_edge", label))
        cur = delete_edge(cur, label)
    for idx in sorted(cur.isolated_vertices(), reverse=True):
        prefix.append(("delete_vertex", idx))
        cur = delete_vertex(cur, idx)
    for label in sorted(set(tree) - set(cycle)):
        prefix.append(("contract_edge", label))
        cur = contract_edge(cur, label)
    targets = (("b3", build_B(3)), ("theta_t", build_theta_t()))
    for name, target in targets:
        found, inner = has_minor(cur, target, max_edges)
        if found:
            steps = tuple(prefix) + inner.steps
            return verified_script(pres, steps, target, max_edges), name
    for name, target in targets:
        found, script = has_minor(pres, target, max_edges)
        if found:
            return script, name
    raise InternalInvariantViolation(
        "odd interlacement cycle but neither forbidden pattern found"
    )


def represents_link(
    pres: ArrowPresentation,
    max_edges: int | None = None,
    certificates: bool = True,
) -> Verdict:
    """Decide whether the ribbon graph is the all-A state of some diagram.

    The decision is polynomial: the graph must be orientable and, component
    by component, the interlacement graph of its spanning-tree partial dual
    must be bipartite.  A positive answer carries a verified plane-dual
    witness; a negative one carries a verified minor certificate to one of
    the three forbidden patterns (unless ``certificates`` is off, which
    skips the potentially expensive extraction).
    """
    if not is_orientable(pres):
        cert = bbar1_script(pres, max_edges) if certificates else None
        return Verdict(
            representable=False,
            certificate=cert,
            certificate_target="bbar1" if cert else None,
        )
    witness: list[str] = []
    for comp in components(pres):
        tree = spanning_tree(comp)
        bouquet = partial_dual(comp, set(tree))
        if len(bouquet.curves) != 1:
            raise InternalInvariantViolation(
                "spanning-tree partial dual is not a one-vertex graph"
            )
        graph = intersection_graph(bouquet)
        colouring, cycle = _two_colour(graph)
        if colouring is None:
            cert, name = (None, None)
            if certificates:
                cert, name = _pattern_certificate(pres, tree, cycle, max_edges)
            return Verdict(
                representable=False,
                certificate=cert,
                certificate_target=name,
                odd_cycle=cycle,
            )
        marked = {label for label, c in colouring.items() if c == 0}
        witness.extend(sorted(set(tree) ^ marked))
    if surface_summary(partial_dual(pres, set(witness))).euler_genus != 0:
        raise InternalInvariantViolation("bipartite witness is not plane")
    return Verdict(representable=True, witness=tuple(sorted(witness)))
