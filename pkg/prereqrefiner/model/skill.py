from dataclasses import dataclass
from typing import Optional

from prereqrefiner.util import link_name


@dataclass(frozen=True)
class Skill:
    """
    A node of the learning hierarchy: an intellectual capability assessed by one grade per learner.

    :param id: unique identifier of the skill within a hierarchy
    :param label: optional display name; defaults to the id when rendering
    """
    id: str
    label: Optional[str] = None

    @property
    def display_name(self) -> str:
        return self.label if self.label else self.id


@dataclass(frozen=True)
class Edge:
    """
    A prerequisite link: skill `source` is a prerequisite of skill `target`.
    """
    source: str
    target: str

    def reversed(self) -> 'Edge':
        return Edge(self.target, self.source)

    @property
    def name(self) -> str:
        return link_name(self.source, self.target)

    def __str__(self):
        return self.name
