"""Modular decomposition and modular-width-parameterized enumeration.

The decomposition is a plain recursive partition scheme: split on connected
components (union node) or co-components (join node); otherwise the maximal
proper strong modules are assembled from minimal-module closures and the node
is prime. Enumeration walks the tree bottom-up, combining child results with
quotient-level results; exhaustive enumeration is only ever invoked on prime
quotients, which are capped in size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bitset import VertexSet, canonical_sets, iter_bits
from .errors import CapExceeded, InputError
from .graph import Graph, _components_masks, _graph_from_adj, _nbr_mask
from .recognition import PmcCatalog, _min_sep_mask, _pmc_mask

# Exhaustive enumeration on a prime quotient refuses above this many vertices.
PRIME_NODE_CAP = 20


@dataclass(frozen=True)
class ModuleNode:
    """One node of a modular decomposition tree.

    ``vertices`` is the original-graph vertex set of the subtree. Internal
    nodes carry their quotient graph on one vertex per child (edgeless for
    union nodes, complete for join nodes); leaves carry a single vertex and
    no quotient.
    """

    kind: str  # "leaf" | "union" | "join" | "prime"
    vertices: VertexSet
    children: tuple["ModuleNode", ...] = ()
    quotient: Graph | None = None


@dataclass(frozen=True)
class ModuleTree:
    graph: Graph
    root: ModuleNode


def _co_components_masks(adj: tuple[int, ...], space: int) -> list[int]:
    """Connected components of the complement of the subgraph induced on ``space``."""
    comps = []
    rem = space
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= space & ~adj[v] & ~(1 << v)
            frontier = nxt & rem & ~comp
            comp |= frontier
        comps.append(comp)
        rem &= ~comp
    return comps


def _module_closure(adj: tuple[int, ...], space: int, seed: int) -> int:
    """Smallest module of the subgraph on ``space`` containing ``seed``.

    Grows the set by absorbing every outside vertex that distinguishes it
    (has both a neighbor and a non-neighbor inside).
    """
    m = seed
    while True:
        added = 0
        for z in iter_bits(space & ~m):
            az = adj[z]
            if (az & m) and (m & ~az):
                added |= 1 << z
        if not added:
            return m
        m |= added
        if m == space:
            return m


def _prime_partition(adj: tuple[int, ...], space: int) -> list[int]:
    """Maximal proper strong modules of a connected, co-connected subgraph.

    The block containing x is the union of all proper minimal modules through
    x; blocks of distinct unassigned vertices never overlap.
    """
    parts = []
    assigned = 0
    for x in iter_bits(space):
        if (assigned >> x) & 1:
            continue
        block = 1 << x
        for y in iter_bits(space & ~(1 << x)):
            if (block >> y) & 1:
                continue
            closure = _module_closure(adj, space, (1 << x) | (1 << y))
            if closure != space:
                block |= closure
        assert block & assigned == 0, "strong modules must not overlap"
        parts.append(block)
        assigned |= block
    return parts


def _decompose(g: Graph, space: int) -> ModuleNode:
    if space & (space - 1) == 0:
        return ModuleNode(kind="leaf", vertices=VertexSet(space))
    comps = _components_masks(g.adj, space)
    if len(comps) > 1:
        children = tuple(_decompose(g, c) for c in comps)
        quotient = _graph_from_adj(len(children), [0] * len(children))
        return ModuleNode("union", VertexSet(space), children, quotient)
    co_comps = _co_components_masks(g.adj, space)
    if len(co_comps) > 1:
        children = tuple(_decompose(g, c) for c in co_comps)
        p = len(children)
        full = (1 << p) - 1
        quotient = _graph_from_adj(p, [full & ~(1 << i) for i in range(p)])
        return ModuleNode("join", VertexSet(space), children, quotient)
    parts = _prime_partition(g.adj, space)
    assert len(parts) >= 2, "prime split of a connected, co-connected graph"
    children = tuple(_decompose(g, part) for part in parts)
    reps = [part & -part for part in parts]
    adj_q = [0] * len(parts)
    for i, rep in enumerate(reps):
        rv = rep.bit_length() - 1
        for j, part in enumerate(parts):
            if j != i and g.adj[rv] & part:
                adj_q[i] |= 1 << j
    return ModuleNode("prime", VertexSet(space), children, _graph_from_adj(len(parts), adj_q))


def modular_decomposition(g: Graph) -> ModuleTree:
    """Modular decomposition tree of a nonempty graph."""
    if g.n == 0:
        raise InputError("graph must be nonempty")
    return ModuleTree(graph=g, root=_decompose(g, g.full_mask))


def modular_width(t: ModuleTree) -> int:
    """Maximum child count over prime nodes; 0 for trees without prime nodes."""
    width = 0
    stack = [t.root]
    while stack:
        node = stack.pop()
        if node.kind == "prime":
            width = max(width, len(node.children))
        stack.extend(node.children)
    return width


def expand(quotient_set: VertexSet, children_vertex_sets: Sequence[VertexSet]) -> VertexSet:
    """Union of the child vertex sets selected by a quotient vertex set."""
    mask = 0
    for i in quotient_set:
        if i >= len(children_vertex_sets):
            raise InputError(f"quotient vertex {i} out of range")
        mask |= children_vertex_sets[i].mask
    return VertexSet(mask)


def contract(h_set: VertexSet, children_vertex_sets: Sequence[VertexSet]) -> VertexSet:
    """Quotient vertices whose child set intersects the given set."""
    mask = 0
    for i, child in enumerate(children_vertex_sets):
        if child.mask & h_set.mask:
            mask |= 1 << i
    return VertexSet(mask)


def expand_graph(quotient: Graph, modules: Sequence[Graph]) -> tuple[Graph, list[VertexSet]]:
    """Replace each quotient vertex by a module graph.

    Edges inside each module are kept and every pair of modules whose quotient
    vertices are adjacent is fully joined. Returns the expanded graph together
    with the vertex set each module occupies.
    """
    if len(modules) != quotient.n:
        raise InputError("need exactly one module graph per quotient vertex")
    offsets = []
    total = 0
    for mod in modules:
        offsets.append(total)
        total += mod.n
    child_sets = [
        VertexSet(((1 << mod.n) - 1) << off) for mod, off in zip(modules, offsets)
    ]
    adj = [0] * total
    for mod, off in zip(modules, offsets):
        for v in range(mod.n):
            adj[off + v] |= mod.adj[v] << off
    for i in range(quotient.n):
        for j in iter_bits(quotient.adj[i]):
            if j < i:
                continue
            for v in iter_bits(child_sets[i].mask):
                adj[v] |= child_sets[j].mask
            for v in iter_bits(child_sets[j].mask):
                adj[v] |= child_sets[i].mask
    return _graph_from_adj(total, adj), child_sets


def _exhaustive_masks(g: Graph, cap: int, context: str) -> tuple[list[int], list[int]]:
    if g.n > cap:
        raise CapExceeded(f"{context}: n={g.n} exceeds cap {cap}")
    adj = g.adj
    full = g.full_mask
    seps = [m for m in range(1 << g.n) if _min_sep_mask(adj, m, full)]
    pmcs = [m for m in range(1, 1 << g.n) if _pmc_mask(adj, m, full)]
    return seps, pmcs


def base_enumerate(quotient: Graph, cap: int = PRIME_NODE_CAP) -> tuple[list[VertexSet], PmcCatalog]:
    """Exhaustive minimal separators and PMC catalog of a (small) graph."""
    seps, pmcs = _exhaustive_masks(quotient, cap, "prime-quotient enumeration refused")
    return canonical_sets(seps), PmcCatalog.from_verified(quotient, pmcs)


def _enumerate_node(g: Graph, node: ModuleNode, cap: int) -> tuple[set[int], set[int]]:
    if node.kind == "leaf":
        return set(), {node.vertices.mask}
    child_results = [_enumerate_node(g, c, cap) for c in node.children]
    space = node.vertices.mask
    sep_cands: set[int] = set()
    pmc_cands: set[int] = set()
    if node.kind == "union":
        # The edgeless quotient contributes only the empty separator; its PMC
        # expansions are clique children that the child catalogs already hold.
        sep_cands.add(0)
    elif node.kind == "join":
        # A complete quotient has no separators and one PMC: everything.
        pmc_cands.add(space)
    else:
        q_seps, q_pmcs = _exhaustive_masks(
            node.quotient, cap, "prime-quotient enumeration refused"
        )
        child_masks = [c.vertices.mask for c in node.children]
        for qm in q_seps:
            mask = 0
            for i in iter_bits(qm):
                mask |= child_masks[i]
            sep_cands.add(mask)
        for qm in q_pmcs:
            mask = 0
            for i in iter_bits(qm):
                mask |= child_masks[i]
            pmc_cands.add(mask)
    for child, (child_seps, child_pmcs) in zip(node.children, child_results):
        nh = _nbr_mask(g.adj, child.vertices.mask) & space
        for s in child_seps:
            sep_cands.add(s | nh)
        for o in child_pmcs:
            pmc_cands.add(o | nh)
    adj = g.adj
    seps = {s for s in sep_cands if _min_sep_mask(adj, s, space)}
    pmcs = {o for o in pmc_cands if o and _pmc_mask(adj, o, space)}
    return seps, pmcs


def enumerate_by_mw(
    g: Graph, tree: ModuleTree | None = None, cap: int = PRIME_NODE_CAP
) -> tuple[list[VertexSet], PmcCatalog]:
    """Minimal separators and PMC catalog of g via its modular decomposition.

    At each tree node the candidates are expansions of quotient-level results
    plus each child result padded with the child's outside neighborhood; all
    candidates are verified against the node's induced subgraph, so the final
    lists are exactly the separators and PMCs of g.
    """
    if tree is None:
        tree = modular_decomposition(g)
    elif tree.graph != g:
        raise InputError("decomposition tree was built for a different graph")
    seps, pmcs = _enumerate_node(g, tree.root, cap)
    return canonical_sets(seps), PmcCatalog.from_verified(g, pmcs)


def separators_by_mw(
    g: Graph, tree: ModuleTree | None = None, cap: int = PRIME_NODE_CAP
) -> list[VertexSet]:
    return enumerate_by_mw(g, tree, cap)[0]


def pmcs_by_mw(
    g: Graph, tree: ModuleTree | None = None, cap: int = PRIME_NODE_CAP
) -> PmcCatalog:
    return enumerate_by_mw(g, tree, cap)[1]


def tree_to_json(t: ModuleTree) -> dict:
    """JSON-friendly rendering: node kind, vertices, children, quotient edges."""

    def render(node: ModuleNode) -> dict:
        out: dict = {"kind": node.kind, "vertices": node.vertices.to_list()}
        if node.kind != "leaf":
            assert node.quotient is not None
            out["children"] = [render(c) for c in node.children]
            out["quotient"] = {
                "n": node.quotient.n,
                "edges": [[u, v] for u, v in node.quotient.edges()],
            }
        return out

    return {"modular_width": modular_width(t), "root": render(t.root)}
