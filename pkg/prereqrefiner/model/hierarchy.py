import json
import os
from typing import List, Dict, Iterable, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
import pandas as pd

from prereqrefiner.util import HierarchyError
from .skill import Skill, Edge


class Hierarchy:
    """
    Represents an expert's learning hierarchy: an ordered list of skills and an ordered list of directed prerequisite
    links between them. A Hierarchy is immutable once built; use :func:`build_hierarchy` (or one of the loaders) to
    construct a validated instance.

    Edge order is the construction order and fixes the column order of every downstream matrix.

    :param skills: ordered skills
    :param edges: ordered prerequisite links

    :ivar skill_ids: skill ids in hierarchy order
    :ivar ids_to_idx: a mapping from skill id to its row/column index in the matrix view
    """

    def __init__(self, skills: Sequence[Skill], edges: Sequence[Edge]):
        self._skills = tuple(skills)
        self._edges = tuple(edges)
        self.skill_ids = tuple(s.id for s in self._skills)
        self.ids_to_idx = {sid: idx for idx, sid in enumerate(self.skill_ids)}

    @property
    def skills(self) -> Tuple[Skill, ...]:
        return self._skills

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self._edges

    def get_skill(self, skill_id: str) -> Skill:
        return self._skills[self.ids_to_idx[skill_id]]

    def has_edge(self, edge: Edge) -> bool:
        return edge in self._edges

    def prerequisites_of(self, skill_id: str) -> List[str]:
        return [e.source for e in self._edges if e.target == skill_id]

    def roots(self) -> List[str]:
        targets = {e.target for e in self._edges}
        return [sid for sid in self.skill_ids if sid not in targets]

    def to_graph(self) -> nx.DiGraph:
        """
        :return: a networkx DiGraph with nodes and edges inserted in hierarchy order
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(self.skill_ids)
        graph.add_edges_from((e.source, e.target) for e in self._edges)
        return graph

    def to_dict(self) -> Dict:
        skills = []
        for skill in self._skills:
            entry = {"id": skill.id}
            if skill.label is not None:
                entry["label"] = skill.label
            skills.append(entry)
        return {"skills": skills,
                "edges": [{"from": e.source, "to": e.target} for e in self._edges]}

    def dump(self, filepath: str):
        """
        Writes the hierarchy in the JSON input format.

        :param filepath: output path
        :return: None
        """
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(self.to_dict(), f, indent=2, ensure_ascii=False)
            f.write("\n")

    @staticmethod
    def from_matrix(skills: Sequence[Union[Skill, str]], matrix) -> 'Hierarchy':
        """
        Builds a hierarchy from a square 0/1 prerequisite matrix, where matrix[i][j] = 1 means skill i is a
        prerequisite of skill j. Edges are taken in row-major order.

        :param skills: skills (or skill ids) indexing the rows and columns
        :param matrix: square array-like of 0/1 values
        :return: a validated Hierarchy
        """
        skills = [s if isinstance(s, Skill) else Skill(s) for s in skills]
        matrix = np.asarray(matrix)
        if matrix.shape != (len(skills), len(skills)):
            raise HierarchyError("prerequisite matrix of shape {} does not match {} skills"
                                 .format(matrix.shape, len(skills)))
        edges = [Edge(skills[i].id, skills[j].id)
                 for i in range(len(skills)) for j in range(len(skills)) if matrix[i, j]]
        return build_hierarchy(skills, edges)

    def __len__(self):
        return len(self._skills)

    def __eq__(self, other):
        return isinstance(other, Hierarchy) and self._skills == other._skills and self._edges == other._edges

    def __hash__(self):
        return hash((self._skills, self._edges))

    def __repr__(self):
        return "Hierarchy(skills: {}, edges: [{}])".format(list(self.skill_ids),
                                                          ", ".join(e.name for e in self._edges))


def build_hierarchy(skills: Iterable[Skill], edges: Iterable[Edge]) -> Hierarchy:
    """
    Validates skills and prerequisite links and returns an immutable Hierarchy. Input edge order is preserved.

    :param skills: skills of the hierarchy, in display / matrix order
    :param edges: prerequisite links
    :return: the validated Hierarchy
    """
    skills = list(skills)
    edges = list(edges)

    seen = set()
    for skill in skills:
        if not isinstance(skill.id, str) or skill.id == "":
            raise HierarchyError("skill ids must be non-empty strings, got {!r}".format(skill.id), skill.id)
        if skill.id in seen:
            raise HierarchyError("duplicate skill id: {}".format(skill.id), skill.id)
        seen.add(skill.id)

    seen_edges = set()
    for edge in edges:
        for endpoint in (edge.source, edge.target):
            if endpoint not in seen:
                raise HierarchyError("link {} refers to unknown skill: {}".format(edge.name, endpoint), edge)
        if edge.source == edge.target:
            raise HierarchyError("self-loop on skill {}".format(edge.source), edge)
        if edge in seen_edges:
            raise HierarchyError("duplicate link: {}".format(edge.name), edge)
        seen_edges.add(edge)

    hierarchy = Hierarchy(skills, edges)
    try:
        cycle = nx.find_cycle(hierarchy.to_graph())
    except nx.NetworkXNoCycle:
        return hierarchy
    members = [u for u, _ in cycle]
    raise HierarchyError("cycle detected: {}".format(" -> ".join(members + [members[0]])), members)


def to_matrix(h: Hierarchy) -> np.ndarray:
    """
    :return: square 0/1 matrix indexed by skill order; entry [i][j] is 1 iff skill i is a prerequisite of skill j
    """
    matrix = np.zeros((len(h.skill_ids), len(h.skill_ids)), dtype=int)
    for edge in h.edges:
        matrix[h.ids_to_idx[edge.source], h.ids_to_idx[edge.target]] = 1
    return matrix


def edges_of(h: Hierarchy) -> List[Edge]:
    """
    :return: the prerequisite links of `h` in construction order
    """
    return list(h.edges)


def _hierarchy_from_dict(d: Dict) -> Hierarchy:
    try:
        skills = [Skill(str(s["id"]), s.get("label")) for s in d.get("skills", [])]
        edges = [Edge(str(e["from"]), str(e["to"])) for e in d.get("edges", [])]
    except (KeyError, TypeError, AttributeError) as e:
        raise HierarchyError("malformed hierarchy document: {}".format(e))
    if not skills:
        # no explicit skill list: first-appearance order of the endpoints
        skills = [Skill(sid) for sid in _first_appearance(edges)]
    return build_hierarchy(skills, edges)


def _first_appearance(edges: List[Edge]) -> List[str]:
    order = []
    for edge in edges:
        for endpoint in (edge.source, edge.target):
            if endpoint not in order:
                order.append(endpoint)
    return order


def load_hierarchy(filepath: str, fmt: Optional[str] = None) -> Hierarchy:
    """
    Loads an expert hierarchy from either an edge-list CSV (header `from,to`) or a JSON document
    ``{"skills": [{"id": .., "label": ..}], "edges": [{"from": .., "to": ..}]}``.

    In JSON form the skill list fixes the skill order; in CSV form skills are ordered by first appearance.

    :param filepath: path to the hierarchy file
    :param fmt: 'csv' or 'json'; inferred from the file extension by default
    :return: the validated Hierarchy
    """
    if fmt is None:
        fmt = "csv" if os.path.splitext(filepath)[1].lower() == ".csv" else "json"
    if not os.path.isfile(filepath):
        raise HierarchyError("hierarchy file not found: {}".format(filepath), filepath)

    if fmt == "json":
        try:
            with open(filepath, "r", encoding="utf-8") as f:
                document = json.load(f)
        except json.JSONDecodeError as e:
            raise HierarchyError("invalid JSON in {}: {}".format(filepath, e), filepath)
        except UnicodeDecodeError as e:
            raise HierarchyError("hierarchy file {} is not valid UTF-8: {}".format(filepath, e), filepath)
        return _hierarchy_from_dict(document)

    try:
        df = pd.read_csv(filepath, dtype=str, keep_default_na=False, encoding="utf-8")
    except pd.errors.EmptyDataError:
        raise HierarchyError("hierarchy file {} is empty".format(filepath), filepath)
    except pd.errors.ParserError as e:
        raise HierarchyError("malformed edge-list CSV {}: {}".format(filepath, e), filepath)
    except UnicodeDecodeError as e:
        raise HierarchyError("hierarchy file {} is not valid UTF-8: {}".format(filepath, e), filepath)
    if list(df.columns) != ["from", "to"]:
        raise HierarchyError("edge-list CSV must have header 'from,to', got {}".format(",".join(df.columns)),
                             filepath)
    edges = [Edge(row["from"].strip(), row["to"].strip()) for _, row in df.iterrows()]
    return build_hierarchy([Skill(sid) for sid in _first_appearance(edges)], edges)
