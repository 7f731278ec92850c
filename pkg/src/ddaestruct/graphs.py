"""Bipartite structure graphs of a delay DAE.

Two views of the same incidence data:

* the shifting graph, whose variable side collapses all derivative orders
  of variable k at shift p into a single group node (k, p), and
* the occurrence graph, whose variable side keeps every concrete
  occurrence (k, p, q) as its own node.

An implicit link between equations is precisely one that exists in the
first view but not in the second; both are therefore needed downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

from .structure import DdaeStructure, VarOccurrence


@dataclass(frozen=True, order=True)
class VariableGroup:
    """Group node (k, p): all derivative orders of variable k at shift p."""

    var_index: int
    shift: int


class ShiftingGraph:
    """Bipartite graph between equation ids and variable groups.

    Adjacency is precomputed in ascending (var_index, shift) order so that
    every traversal in the package is deterministic.
    """

    def __init__(self, eq_nodes, group_nodes, edges):
        self.eq_nodes: tuple[int, ...] = tuple(eq_nodes)
        self.group_nodes: frozenset[VariableGroup] = frozenset(group_nodes)
        self.edges: frozenset[tuple[int, VariableGroup]] = frozenset(edges)
        eq_set = set(self.eq_nodes)
        for i, v in self.edges:
            if i not in eq_set or v not in self.group_nodes:
                raise ValueError(f"edge ({i}, {v}) has an endpoint outside the node sets")
        untouched = self.group_nodes - {v for _, v in self.edges}
        if untouched:
            # isolated equation nodes are legitimate, isolated groups are not
            raise ValueError(f"group nodes without any edge: {sorted(untouched)}")
        self._groups_of: dict[int, tuple[VariableGroup, ...]] = {i: () for i in self.eq_nodes}
        self._eqs_of: dict[VariableGroup, tuple[int, ...]] = {v: () for v in self.group_nodes}
        by_eq: dict[int, list[VariableGroup]] = {i: [] for i in self.eq_nodes}
        by_group: dict[VariableGroup, list[int]] = {v: [] for v in self.group_nodes}
        for i, v in self.edges:
            by_eq[i].append(v)
            by_group[v].append(i)
        for i, vs in by_eq.items():
            self._groups_of[i] = tuple(sorted(vs))
        for v, eqs in by_group.items():
            self._eqs_of[v] = tuple(sorted(eqs))

    def groups_of(self, i: int) -> tuple[VariableGroup, ...]:
        return self._groups_of[i]

    def eqs_of(self, v: VariableGroup) -> tuple[int, ...]:
        return self._eqs_of[v]

    def has_edge(self, i: int, v: VariableGroup) -> bool:
        return (i, v) in self.edges


class DdaeGraph:
    """Bipartite graph between equation ids and concrete occurrences."""

    def __init__(self, eq_nodes, var_nodes, edges):
        self.eq_nodes: tuple[int, ...] = tuple(eq_nodes)
        self.var_nodes: frozenset[VarOccurrence] = frozenset(var_nodes)
        self.edges: frozenset[tuple[int, VarOccurrence]] = frozenset(edges)
        self._occs_of: dict[int, frozenset[VarOccurrence]] = {}
        by_eq: dict[int, set[VarOccurrence]] = {i: set() for i in self.eq_nodes}
        for i, o in self.edges:
            by_eq[i].add(o)
        for i, occs in by_eq.items():
            self._occs_of[i] = frozenset(occs)

    def occurrences_of(self, i: int) -> frozenset[VarOccurrence]:
        return self._occs_of[i]


def build_shifting_graph(s: DdaeStructure) -> ShiftingGraph:
    """Collapse derivative orders: one group node per (k, p) that occurs."""
    edges = set()
    groups = set()
    for eq in s.equations:
        for occ in eq.occurrences:
            g = VariableGroup(occ.var_index, occ.shift)
            groups.add(g)
            edges.add((eq.eq_index, g))
    return ShiftingGraph(range(1, s.n_equations + 1), groups, edges)


def build_ddae_graph(s: DdaeStructure) -> DdaeGraph:
    """One variable node per distinct occurrence triple; edges mirror incidence."""
    edges = set()
    var_nodes = set()
    for eq in s.equations:
        for occ in eq.occurrences:
            var_nodes.add(occ)
            edges.add((eq.eq_index, occ))
    return DdaeGraph(range(1, s.n_equations + 1), var_nodes, edges)


def highest_shift_groups(g: ShiftingGraph) -> frozenset[VariableGroup]:
    """The group nodes that may be matched to an equation.

    A group (k, p) qualifies iff p >= 0 and no group (k, p') with p' > p
    exists anywhere in the graph; negatively shifted groups never qualify.
    """
    top: dict[int, int] = {}
    for v in g.group_nodes:
        cur = top.get(v.var_index)
        if cur is None or v.shift > cur:
            top[v.var_index] = v.shift
    return frozenset(
        VariableGroup(k, p) for k, p in top.items() if p >= 0
    )
