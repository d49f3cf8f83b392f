"""Vertex-cover computation and cover-parameterized enumeration of separators and PMCs.

The enumerators walk partition spaces of a vertex cover W: 3^|W| three-partitions
for minimal separators, 4^|W| four-partitions (plus a pair choice) for PMCs with
an active separator, and an incremental sweep over prefix graphs to finish the
full PMC catalog. Every candidate is verified by the recognizers, so each stage
may over-generate freely.
"""

from __future__ import annotations

from itertools import product
from multiprocessing import Pool
from typing import Iterator, NamedTuple

from .bitset import VertexSet, canonical_sets, iter_bits
from .errors import InputError
from .graph import Graph, _components_masks, _validate_subset, prefix_graph
from .recognition import PmcCatalog, _min_sep_mask, _pmc_mask


class ThreePartition(NamedTuple):
    """Split of a vertex cover into two component sides and a separator part (bitmasks)."""

    d1: int
    sep: int
    d2: int


class FourPartition(NamedTuple):
    """Split of a vertex cover into far side, x-side, y-side and clique part (bitmasks)."""

    ds: int
    dx: int
    dy: int
    om: int


def three_partitions(wmask: int) -> Iterator[ThreePartition]:
    bits = [1 << v for v in iter_bits(wmask)]
    for assign in product(range(3), repeat=len(bits)):
        parts = [0, 0, 0]
        for b, a in zip(bits, assign):
            parts[a] |= b
        yield ThreePartition(*parts)


def four_partitions(wmask: int) -> Iterator[FourPartition]:
    bits = [1 << v for v in iter_bits(wmask)]
    for assign in product(range(4), repeat=len(bits)):
        parts = [0, 0, 0, 0]
        for b, a in zip(bits, assign):
            parts[a] |= b
        yield FourPartition(*parts)


def is_vertex_cover(g: Graph, w: VertexSet) -> bool:
    _validate_subset(g, w)
    outside = g.full_mask & ~w.mask
    return all(g.adj[v] & outside == 0 for v in iter_bits(outside))


def _require_cover(g: Graph, w: VertexSet) -> None:
    if not is_vertex_cover(g, w):
        raise InputError(f"{w!r} is not a vertex cover of the graph")


def minimum_vertex_cover(g: Graph) -> VertexSet:
    """An exact minimum vertex cover, deterministic for a given graph.

    Branches on a maximum-degree vertex (take it, or take its whole
    neighborhood), with the safe degree-1 reduction of taking the neighbor.
    Ties break toward the lowest vertex index and the first optimum found is
    kept, so repeated runs return the same cover.
    """
    adj = g.adj
    best_size = g.n + 1
    best_mask = 0

    def search(alive: int, cover: int, size: int) -> None:
        nonlocal best_size, best_mask
        one_v = -1
        top_v = -1
        top_deg = 0
        for v in iter_bits(alive):
            d = (adj[v] & alive).bit_count()
            if d > top_deg:
                top_deg = d
                top_v = v
            if d == 1 and one_v < 0:
                one_v = v
        if top_deg == 0:
            if size < best_size:
                best_size = size
                best_mask = cover
            return
        if size + 1 >= best_size:
            return
        if one_v >= 0:
            u_bit = adj[one_v] & alive
            u_bit &= -u_bit
            search(alive & ~u_bit, cover | u_bit, size + 1)
            return
        bit = 1 << top_v
        search(alive & ~bit, cover | bit, size + 1)
        nb = adj[top_v] & alive
        if size + nb.bit_count() < best_size:
            search(alive & ~nb & ~bit, cover | nb, size + nb.bit_count())

    search(g.full_mask, 0, 0)
    return VertexSet(best_mask)


def _sep_chunk(args):
    """Three-partition range [lo, hi) decoded in base 3; returns candidate masks."""
    adj, wbits, nonw, lo, hi = args
    out = set()
    for idx in range(lo, hi):
        d1 = sep = d2 = 0
        rem = idx
        for b in wbits:
            rem, a = divmod(rem, 3)
            if a == 0:
                d1 |= b
            elif a == 1:
                sep |= b
            else:
                d2 |= b
        cand = sep
        for x, ax in nonw:
            if (ax & d1) and (ax & d2):
                cand |= 1 << x
        out.add(cand)
    return out


def _sep_masks_by_vc(g: Graph, wmask: int, jobs: int = 1) -> list[int]:
    """Verified minimal-separator masks from the 3-partition sweep of the cover."""
    adj = g.adj
    nonw = [(x, adj[x]) for x in iter_bits(g.full_mask & ~wmask)]
    cands: set[int] = set()
    if jobs <= 1:
        for d1, sep, d2 in three_partitions(wmask):
            cand = sep
            for x, ax in nonw:
                if (ax & d1) and (ax & d2):
                    cand |= 1 << x
            cands.add(cand)
    else:
        wbits = [1 << v for v in iter_bits(wmask)]
        total = 3 ** len(wbits)
        step = -(-total // jobs)
        tasks = [
            (adj, wbits, nonw, lo, min(lo + step, total))
            for lo in range(0, total, step)
        ]
        with Pool(processes=jobs) as pool:
            for part in pool.map(_sep_chunk, tasks):
                cands |= part
    full = g.full_mask
    return sorted(m for m in cands if _min_sep_mask(adj, m, full))


def separators_by_vc(g: Graph, w: VertexSet, jobs: int = 1) -> list[VertexSet]:
    """All minimal separators of g, enumerated through the vertex cover w.

    For each three-partition (D1, S, D2) of w the candidate is S plus every
    outside vertex whose neighborhood meets both D1 and D2; candidates are
    kept only if they pass the recognizer. The result is complete and has at
    most 3^|w| members.
    """
    _require_cover(g, w)
    return canonical_sets(_sep_masks_by_vc(g, w.mask, jobs=jobs))


def _active_pmc_masks(g: Graph, wmask: int, sep_masks) -> set[int]:
    """Verified PMC masks covering every PMC of g that has an active separator.

    Three generation routes, all then filtered by the recognizer:
    closed neighborhoods N[t]; separator extensions S + (N(t) & C) for each
    enumerated separator S, vertex t and component C of g - S; and candidates
    rebuilt from four-partitions of the cover together with a pair choice,
    where an outside vertex joins the candidate if it sees the far side and
    the near sides, or sees no far side but both near sides and their pair
    vertices. Candidate t and the pair range over all vertices, a harmless
    superset of what is needed.
    """
    adj = g.adj
    full = g.full_mask
    n = g.n
    cands: set[int] = set()

    for t in range(n):
        cands.add(adj[t] | (1 << t))

    for s in sep_masks:
        comps = _components_masks(adj, full & ~s)
        for t in range(n):
            nt = adj[t]
            for c in comps:
                inside = nt & c
                if inside:
                    cands.add(s | inside)

    nonw = full & ~wmask
    nonw_bits = [(z, adj[z]) for z in iter_bits(nonw)]
    side_masks = sorted({adj[x] & nonw for x in range(n)})
    for ds, dx, dy, om in four_partitions(wmask):
        sees_ds = sees_dx = sees_dy = 0
        for z, az in nonw_bits:
            zb = 1 << z
            if az & ds:
                sees_ds |= zb
            if az & dx:
                sees_dx |= zb
            if az & dy:
                sees_dy |= zb
        near = sees_dx | sees_dy
        base = om | (sees_ds & near)
        quiet = nonw & ~sees_ds
        xs = {sees_dx | a for a in side_masks}
        ys = {sees_dy | a for a in side_masks}
        for mx in xs:
            pre = quiet & mx & near
            for my in ys:
                cands.add(base | (pre & my))

    return {m for m in cands if m and _pmc_mask(adj, m, full)}


def active_pmcs_by_vc(g: Graph, w: VertexSet) -> PmcCatalog:
    """A verified catalog containing every PMC of g that has an active separator."""
    _require_cover(g, w)
    seps = _sep_masks_by_vc(g, w.mask)
    return PmcCatalog.from_verified(g, _active_pmc_masks(g, w.mask, seps))


def pmcs_by_vc(g: Graph) -> PmcCatalog:
    """The complete PMC catalog of g, built incrementally over prefix graphs.

    Vertices are taken in ascending index order. At step i the catalog of
    G[0..i-1] is the verified union of: the active-separator PMCs of the
    prefix (enumerated with the restriction of one fixed minimum cover of g,
    which covers every prefix), each prefix separator extended by vertex i-1,
    and every catalog member of the previous prefix with and without i-1.
    """
    if g.n == 0:
        raise InputError("graph must be nonempty")
    wmask = minimum_vertex_cover(g).mask
    prev: set[int] = set()
    for i in range(1, g.n + 1):
        gi = prefix_graph(g, i)
        adj_i = gi.adj
        full_i = gi.full_mask
        wi = wmask & full_i
        seps_i = _sep_masks_by_vc(gi, wi)
        cur = _active_pmc_masks(gi, wi, seps_i)
        vb = 1 << (i - 1)
        extra = {s | vb for s in seps_i}
        extra.update(prev)
        extra.update(o | vb for o in prev)
        cur.update(m for m in extra - cur if m and _pmc_mask(adj_i, m, full_i))
        prev = cur
    return PmcCatalog.from_verified(g, prev)
