from typing import Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from prereqrefiner.model import Edge, Hierarchy, Skill
from prereqrefiner.util import PipelineError
from .decision import EdgeDecision, Verdict


class FinalHierarchy:
    """
    The refined learning hierarchy: every kept link in its original direction, every reversed link flipped, each
    with its relevance degree. Deleted links are absent from ``edges`` but remain in ``provenance``.

    :ivar skills: the skills of the hierarchy (unchanged by refinement)
    :ivar edges: list of (Edge, relevance) in the order the decisions were given
    :ivar provenance: every EdgeDecision the hierarchy was built from, deleted ones included
    :ivar cycle_warnings: witness cycles (skill id sequences) found in the result
    :ivar collision_warnings: messages about distinct decisions that produced the same link
    """

    def __init__(self, skills: Sequence[Skill], edges: List[Tuple[Edge, float]], provenance: List[EdgeDecision],
                 cycle_warnings: List[List[str]], collision_warnings: Optional[List[str]] = None):
        self.skills = tuple(skills)
        self.edges = list(edges)
        self.provenance = list(provenance)
        self.cycle_warnings = list(cycle_warnings)
        self.collision_warnings = list(collision_warnings) if collision_warnings else []

    @property
    def skill_ids(self):
        return [s.id for s in self.skills]

    @property
    def warnings(self) -> List[str]:
        return ["cycle in final hierarchy: {}".format(" -> ".join(cycle + [cycle[0]]))
                for cycle in self.cycle_warnings] + self.collision_warnings

    def relevance_of(self, edge: Edge) -> Optional[float]:
        for e, relevance in self.edges:
            if e == edge:
                return relevance
        return None

    def decisions_with(self, verdict: Verdict) -> List[EdgeDecision]:
        return [d for d in self.provenance if d.verdict == verdict]

    def to_graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.skill_ids)
        for edge, relevance in self.edges:
            graph.add_edge(edge.source, edge.target, relevance=relevance)
        return graph

    def __repr__(self):
        return "FinalHierarchy(edges: [{}], deleted: [{}])".format(
            ", ".join("{}:{:.2f}".format(e.name, r) for e, r in self.edges),
            ", ".join(d.original.name for d in self.decisions_with(Verdict.DELETED)))


def _as_edge(e: Union[Edge, Tuple[str, str]]) -> Edge:
    return e if isinstance(e, Edge) else Edge(*e)


def check_acyclic(edges: Iterable[Union[Edge, Tuple[str, str]]]) -> List[List[str]]:
    """
    Audits a set of links for directed cycles.

    :param edges: links, as Edge objects or (source, target) pairs
    :return: one witness cycle (a list of skill ids, first node not repeated) per strongly connected component with
        more than one node, plus one per self-loop; empty iff the links form a DAG
    """
    graph = nx.DiGraph()
    graph.add_edges_from((e.source, e.target) for e in map(_as_edge, edges))
    order = {node: idx for idx, node in enumerate(graph.nodes)}

    cycles = []
    for component in nx.strongly_connected_components(graph):
        if len(component) == 1:
            node = next(iter(component))
            if graph.has_edge(node, node):
                cycles.append([node])
            continue
        start = min(component, key=order.get)
        witness = [u for u, _ in nx.find_cycle(graph.subgraph(component), source=start)]
        pivot = witness.index(min(witness, key=order.get))
        cycles.append(witness[pivot:] + witness[:pivot])
    cycles.sort(key=lambda cycle: order[cycle[0]])
    return cycles


def build_final_hierarchy(decisions: Sequence[EdgeDecision],
                          skills: Union[Hierarchy, Sequence[Union[Skill, str]]]) -> FinalHierarchy:
    """
    Assembles the final hierarchy from scratch out of the per-link decisions and audits it for cycles. The input
    hierarchy is never modified.

    If two decisions produce the same link (a kept i -> j and a reversed j -> i), the link is emitted once with the
    larger relevance and a collision warning is recorded; both decisions stay in the provenance.

    :param decisions: one decision per original link
    :param skills: the skills of the hierarchy, or the Hierarchy itself
    :return: the FinalHierarchy
    """
    if isinstance(skills, Hierarchy):
        skills = skills.skills
    skills = [s if isinstance(s, Skill) else Skill(s) for s in skills]

    seen = set()
    for d in decisions:
        if d.original in seen:
            raise PipelineError("decision", "link {} was decided more than once".format(d.original.name),
                                d.original)
        seen.add(d.original)

    relevance = dict()
    origin = dict()
    collisions = []
    for d in decisions:
        edge = d.result_edge
        if edge is None:
            continue
        if edge in relevance:
            collisions.append("link collision: {} produced by both {} ({}) and {} ({})".format(
                edge.name, origin[edge].original.name, origin[edge].verdict.value, d.original.name, d.verdict.value))
            if d.relevance > relevance[edge]:
                relevance[edge] = d.relevance
                origin[edge] = d
            continue
        relevance[edge] = d.relevance
        origin[edge] = d

    edges = list(relevance.items())
    return FinalHierarchy(skills, edges, list(decisions), check_acyclic(e for e, _ in edges), collisions)
