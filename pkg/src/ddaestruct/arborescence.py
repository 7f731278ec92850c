"""Enumeration of all spanning arborescences of a digraph from a fixed root.

The enumerator grows a rooted subtree depth-first.  A frontier stack holds
the arcs leading from the current subtree to outside nodes; the top arc is
repeatedly popped, added to the tree, and all completions of the enlarged
tree are enumerated recursively.  Afterwards the arc is deleted from the
working graph and the next frontier arc is tried, until the arc just
deleted turns out to be a *bridge*: an arc contained in every remaining
spanning arborescence, recognisable because after its deletion no other
arc enters its head from a nondescendant of that head in the most recently
emitted tree.  Deleted arcs are journalled and restored on the way out, so
the working graph is back to the input when the run finishes.

Two properties of the bookkeeping are load-bearing:

* growth is depth-first (new frontier arcs are pushed on top, so the next
  pop extends the deepest leaf), which guarantees the last emitted tree has
  the fewest descendants below the tested arc's head and makes the
  nondescendant bridge test sound;
* frontier arcs invalidated by a tree extension (arcs pointing at the node
  just added) are removed from the middle of the stack and later reinserted
  at the exact positions they were removed from.

Memory is proportional to the arc count, never to the number of trees:
trees are handed to a visitor as immutable snapshots and forgotten.

Two independent oracles are provided for verification: exhaustive search
over arc subsets, and the in-degree Laplacian minor determinant evaluated
in exact integer arithmetic.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Callable

from .errors import CapExceeded, RootNotInGraph


class Digraph:
    """Simple digraph: hashable node ids, at most one arc per ordered pair."""

    def __init__(self, nodes, arcs):
        self.nodes = frozenset(nodes)
        self.arcs: frozenset[tuple] = frozenset(arcs)
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) not allowed")
            if u not in self.nodes or v not in self.nodes:
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside the node set")

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.nodes == other.nodes
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.nodes, self.arcs))


@dataclass(frozen=True)
class Arborescence:
    """A spanning out-tree: every node reachable from the root, unique in-arcs."""

    root: object
    arcs: frozenset[tuple]

    def sorted_arcs(self) -> list[tuple]:
        return sorted(self.arcs)


def validate_arborescence(t: Arborescence, g: Digraph) -> list[str]:
    """Check the arborescence invariants of t against its host graph g.

    Returns one message per violation; empty means t is a spanning
    arborescence of g rooted at t.root.
    """
    problems = []
    if t.root not in g.nodes:
        problems.append(f"root {t.root} not in graph")
        return problems
    if not t.arcs <= g.arcs:
        problems.append(f"arcs {sorted(t.arcs - g.arcs)} not in graph")
    if len(t.arcs) != len(g.nodes) - 1:
        problems.append(f"{len(t.arcs)} arcs for {len(g.nodes)} nodes")
    heads = [v for _, v in t.arcs]
    if len(set(heads)) != len(heads):
        problems.append("some node has two incoming arcs")
    if t.root in heads:
        problems.append("root has an incoming arc")
    children: dict = {}
    for u, v in t.arcs:
        children.setdefault(u, []).append(v)
    seen = {t.root}
    stack = [t.root]
    while stack:
        x = stack.pop()
        for y in children.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != g.nodes:
        problems.append(f"nodes {sorted(g.nodes - seen)} unreachable from root")
    return problems


def descendants(tree: Arborescence, v) -> frozenset:
    """Nodes reachable from v (v included) using only arcs of the tree."""
    children: dict = {}
    nodes = {tree.root}
    for a, b in tree.arcs:
        children.setdefault(a, []).append(b)
        nodes.add(a)
        nodes.add(b)
    if v not in nodes:
        raise ValueError(f"{v} is not a node of the tree")
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in children.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def is_bridge(g: Digraph, e: tuple, last_tree: Arborescence) -> bool:
    """Decide whether e = (u, v) was a bridge when it was deleted.

    g is the working graph with e (and all previously processed arcs)
    already removed; last_tree is the most recently emitted tree.  e was a
    bridge iff no remaining arc enters v from a nondescendant of v in
    last_tree.  Sound only under the enumerator's depth-first growth order.
    """
    _, v = e
    desc = descendants(last_tree, v)
    for u2, v2 in g.arcs:
        if v2 == v and (u2, v2) != e and u2 not in desc:
            return False
    return True


class GrowRun:
    """One enumeration run over a digraph, with inspectable working state.

    Splitting construction from execution lets callers (and tests) look at
    the working graph after a run: `working_arcs()` must equal the input
    arc set once `execute` returns, whatever the stop reason.
    """

    def __init__(self, g: Digraph, root):
        if root not in g.nodes:
            raise RootNotInGraph(f"root {root!r} not in graph")
        self.graph = g
        self.root = root
        self.node_ids = sorted(g.nodes)
        self._idx = {x: i for i, x in enumerate(self.node_ids)}
        self._n = len(self.node_ids)
        arc_list = sorted(g.arcs)
        self._arc_list = arc_list
        self._tail = [self._idx[u] for u, _ in arc_list]
        self._head = [self._idx[v] for _, v in arc_list]
        self._out: list[list[int]] = [[] for _ in range(self._n)]
        self._in: list[list[int]] = [[] for _ in range(self._n)]
        for a, (u, v) in enumerate(arc_list):
            self._out[self._idx[u]].append(a)
            self._in[self._idx[v]].append(a)
        self._alive = [True] * len(arc_list)
        self.count = 0
        self.stopped: str | None = None

    def working_arcs(self) -> frozenset[tuple]:
        """Arc set of the working graph (all arcs once a run has unwound)."""
        return frozenset(
            arc for a, arc in enumerate(self._arc_list) if self._alive[a]
        )

    def _snapshot(self, parent: list[int], r: int) -> Arborescence:
        ids = self.node_ids
        tail = self._tail
        arcs = frozenset(
            (ids[tail[parent[x]]], ids[x]) for x in range(self._n) if x != r
        )
        return Arborescence(self.root, arcs)

    def execute(
        self,
        visitor: Callable[[Arborescence], None] | None = None,
        limit: int | None = None,
        deadline: float | None = None,
        bridge_hook: Callable | None = None,
    ) -> int:
        """Enumerate; returns the number of trees emitted.

        visitor, if given, receives each spanning arborescence exactly once.
        limit stops the run cleanly after that many trees; deadline (a
        time.monotonic() point) stops it when the clock passes; either way
        the working graph is fully restored.  bridge_hook, for white-box
        testing, is called as hook(arc, tree_arcs, remaining_arcs) whenever
        the bridge test fires.
        """
        n = self._n
        r = self._idx[self.root]
        head = self._head
        tail = self._tail
        out_arcs = self._out
        in_arcs = self._in
        alive = self._alive
        self.count = 0
        self.stopped = None
        if limit is not None and limit <= 0:
            self.stopped = "limit"
            return 0

        # no spanning arborescence unless every node is reachable from the root
        seen = {r}
        stack = [r]
        while stack:
            x = stack.pop()
            for a in out_arcs[x]:
                y = head[a]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != n:
            return 0

        in_tree = [False] * n
        in_tree[r] = True
        parent = [-1] * n
        last_parent = [-1] * n
        # frontier stack; F_head mirrors the arc heads so that membership
        # scans run at C speed
        F: list[int] = []
        F_head: list[int] = []
        for a in reversed(out_arcs[r]):
            F.append(a)
            F_head.append(head[a])

        tree_size = 1
        count = 0
        stop: str | None = None

        def grow() -> None:
            nonlocal tree_size, count, stop
            if tree_size == n:
                count += 1
                last_parent[:] = parent
                if visitor is not None:
                    visitor(self._snapshot(parent, r))
                if limit is not None and count >= limit:
                    stop = "limit"
                elif deadline is not None and time.monotonic() >= deadline:
                    stop = "deadline"
                return
            ff: list[int] = []
            while True:
                e = F.pop()
                F_head.pop()
                v = head[e]
                # add e to the tree
                in_tree[v] = True
                parent[v] = e
                tree_size += 1
                # drop frontier arcs now pointing into the tree, remembering
                # their positions
                removed: list[tuple[int, int]] = []
                pos = 0
                while True:
                    try:
                        k = F_head.index(v, pos)
                    except ValueError:
                        break
                    removed.append((k, F[k]))
                    del F[k]
                    del F_head[k]
                    pos = k
                # push the new leaf's outgoing arcs, deepest-first
                base = len(F)
                for a in reversed(out_arcs[v]):
                    if alive[a] and not in_tree[head[a]]:
                        F.append(a)
                        F_head.append(head[a])
                npushed = len(F) - base

                grow()

                # undo this extension: pop what we pushed, reinsert what we
                # removed at the recorded positions, detach the leaf
                if npushed:
                    del F[-npushed:]
                    del F_head[-npushed:]
                for k, a in reversed(removed):
                    F.insert(k, a)
                    F_head.insert(k, head[a])
                in_tree[v] = False
                parent[v] = -1
                tree_size -= 1
                if stop is not None:
                    # aborted runs restore e instead of processing it further
                    F.append(e)
                    F_head.append(v)
                    break
                # delete e from the working graph and test whether it was
                # the last way into v
                alive[e] = False
                ff.append(e)
                bridge = True
                for a in in_arcs[v]:
                    if alive[a]:
                        u = tail[a]
                        x = u
                        while x != v:
                            pa = last_parent[x]
                            if pa < 0:
                                break
                            x = tail[pa]
                        else:
                            continue  # u descends from v in the last tree
                        bridge = False
                        break
                if bridge:
                    if bridge_hook is not None:
                        bridge_hook(
                            self._arc_list[e],
                            self._current_tree_arcs(parent, r),
                            self.working_arcs(),
                        )
                    break
            # put every arc processed at this level back
            while ff:
                a = ff.pop()
                F.append(a)
                F_head.append(head[a])
                alive[a] = True

        grow()
        self.count = count
        self.stopped = stop
        return self.count

    def _current_tree_arcs(self, parent: list[int], r: int) -> frozenset[tuple]:
        ids = self.node_ids
        tail = self._tail
        return frozenset(
            (ids[tail[parent[x]]], ids[x])
            for x in range(self._n)
            if x != r and parent[x] >= 0
        )


def enumerate_arborescences(
    g: Digraph,
    root,
    visitor: Callable[[Arborescence], None] | None = None,
    limit: int | None = None,
) -> int:
    """Stream every spanning arborescence of g rooted at root to the visitor.

    Returns the number of trees found (or emitted before `limit` struck).
    The input graph is never modified.
    """
    return GrowRun(g, root).execute(visitor=visitor, limit=limit)


def brute_force_arborescences(g: Digraph, root, cap: int = 8) -> set[Arborescence]:
    """Independent oracle: test every (|V|-1)-subset of the arc set.

    Only feasible for small graphs, hence the node-count cap.
    """
    if root not in g.nodes:
        raise RootNotInGraph(f"root {root!r} not in graph")
    if len(g.nodes) > cap:
        raise CapExceeded(f"{len(g.nodes)} nodes exceeds cap {cap}")
    n = len(g.nodes)
    found = set()
    for sub in itertools.combinations(sorted(g.arcs), n - 1):
        t = Arborescence(root, frozenset(sub))
        if not validate_arborescence(t, g):
            found.add(t)
    return found


def count_arborescences(g: Digraph, root) -> int:
    """Count spanning arborescences exactly via the in-degree Laplacian.

    The determinant of the Laplacian with the root's row and column removed
    equals the number of spanning out-trees from the root; it is evaluated
    with fraction-free (Bareiss) elimination over Python integers, so the
    result is exact at any size.
    """
    if root not in g.nodes:
        raise RootNotInGraph(f"root {root!r} not in graph")
    order = sorted(x for x in g.nodes if x != root)
    pos = {x: i for i, x in enumerate(order)}
    m = len(order)
    if m == 0:
        return 1
    mat = [[0] * m for _ in range(m)]
    for u, v in g.arcs:
        if v == root:
            continue
        j = pos[v]
        mat[j][j] += 1  # in-degree on the diagonal
        if u != root:
            mat[pos[u]][j] -= 1
    return _bareiss_det(mat)


def _bareiss_det(mat: list[list[int]]) -> int:
    """Exact integer determinant by fraction-free Gaussian elimination."""
    m = len(mat)
    sign = 1
    prev = 1
    for k in range(m - 1):
        if mat[k][k] == 0:
            for r in range(k + 1, m):
                if mat[r][k] != 0:
                    mat[k], mat[r] = mat[r], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = mat[k][k]
        for i in range(k + 1, m):
            row_i = mat[i]
            row_k = mat[k]
            lead = row_i[k]
            for j in range(k + 1, m):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * mat[m - 1][m - 1]
