"""Equation-to-group matching and alternating-path reachability.

The matching assigns each equation an adjacent variable group of highest
shift, injectively, extending along augmenting paths in the classic
structural-analysis fashion: first look for a free admissible group, then
try to re-route an already matched neighbour.  Equations for which no
augmenting path exists are *exposed*; the set of equations an exposed node
can reach by alternating paths (non-matching edge first, then a matching
edge, and so on) is what every downstream step operates on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotExposed
from .graphs import ShiftingGraph, VariableGroup, highest_shift_groups


@dataclass(frozen=True)
class Matching:
    """Injective map from equation ids to variable groups."""

    pairs: dict[int, VariableGroup] = field(default_factory=dict)

    def group_of(self, i: int) -> VariableGroup | None:
        return self.pairs.get(i)

    def eq_of(self, v: VariableGroup) -> int | None:
        for i, g in self.pairs.items():
            if g == v:
                return i
        return None

    def is_matched(self, i: int) -> bool:
        return i in self.pairs

    @property
    def matched_groups(self) -> frozenset[VariableGroup]:
        return frozenset(self.pairs.values())

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class ReachReport:
    """Alternating-path reachability from one exposed equation."""

    exposed: int
    reached_eqs: frozenset[int]
    reached_groups: frozenset[VariableGroup]


def _try_augment(
    g: ShiftingGraph,
    eq2group: dict[int, VariableGroup],
    group2eq: dict[VariableGroup, int],
    i: int,
    matchable: frozenset[VariableGroup],
    visited_eqs: set[int],
    visited_groups: set[VariableGroup],
) -> bool:
    """Depth-first augmenting step from equation i; mutates the dicts on success."""
    # first pass: a free admissible group ends the path
    for v in g.groups_of(i):
        if v not in group2eq and v in matchable:
            eq2group[i] = v
            group2eq[v] = i
            return True
    # second pass: re-route through matched groups
    for v in g.groups_of(i):
        if v in visited_groups or v not in group2eq:
            continue
        visited_groups.add(v)
        k = group2eq[v]
        visited_eqs.add(k)
        if _try_augment(g, eq2group, group2eq, k, matchable, visited_eqs, visited_groups):
            eq2group[i] = v
            group2eq[v] = i
            return True
    return False


def augment_path(
    g: ShiftingGraph,
    m: Matching,
    i: int,
    matchable: frozenset[VariableGroup],
) -> tuple[bool, Matching, ReachReport | None]:
    """Try to extend the matching by an augmenting path starting at equation i.

    Returns (True, extended matching, None) on success.  On failure the
    matching is returned unchanged together with a report of exactly the
    equation nodes and matched groups touched by alternating paths from i.
    """
    eq2group = dict(m.pairs)
    group2eq = {v: k for k, v in eq2group.items()}
    visited_eqs: set[int] = set()
    visited_groups: set[VariableGroup] = set()
    ok = _try_augment(g, eq2group, group2eq, i, matchable, visited_eqs, visited_groups)
    if ok:
        return True, Matching(eq2group), None
    report = ReachReport(i, frozenset(visited_eqs), frozenset(visited_groups))
    return False, m, report


def compute_matching(g: ShiftingGraph) -> tuple[Matching, list[ReachReport]]:
    """Match equations to highest-shift groups, in ascending equation order.

    Failure to augment is permanent, so each equation is tried once.  The
    reports for the exposed equations are computed against the final
    matching, one per exposed node in ascending order.
    """
    matchable = highest_shift_groups(g)
    eq2group: dict[int, VariableGroup] = {}
    group2eq: dict[VariableGroup, int] = {}
    exposed: list[int] = []
    for i in g.eq_nodes:
        if not _try_augment(g, eq2group, group2eq, i, matchable, set(), set()):
            exposed.append(i)
    m = Matching(eq2group)
    reports = [alternating_reach(g, m, j) for j in exposed]
    return m, reports


def alternating_reach(g: ShiftingGraph, m: Matching, j: int) -> ReachReport:
    """All equations reachable from the unmatched equation j by alternating paths.

    Each path leaves an equation through a non-matching edge and continues
    through the matching edge of the group it lands on; unmatched groups are
    dead ends and are not reported.
    """
    if j not in g.eq_nodes:
        raise NotExposed(f"equation {j} is not in the graph")
    if m.is_matched(j):
        raise NotExposed(f"equation {j} is matched to {m.group_of(j)}")
    group2eq = {v: k for k, v in m.pairs.items()}
    reached_eqs: set[int] = set()
    reached_groups: set[VariableGroup] = set()
    stack = [j]
    seen_eqs = {j}
    while stack:
        i = stack.pop()
        for v in g.groups_of(i):
            if v in reached_groups:
                continue
            k = group2eq.get(v)
            if k is None:
                continue
            reached_groups.add(v)
            if k not in seen_eqs:
                seen_eqs.add(k)
                reached_eqs.add(k)
                stack.append(k)
    return ReachReport(j, frozenset(reached_eqs), frozenset(reached_groups))
