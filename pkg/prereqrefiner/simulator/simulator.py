from typing import Dict, Iterable, List, Optional, Union

import networkx as nx
import numpy as np
from joblib import Parallel, delayed

from prereqrefiner.decision import Verdict
from prereqrefiner.fuzzy_engine import Thresholds
from prereqrefiner.model import Edge, GradeMatrix, Hierarchy, build_hierarchy
from prereqrefiner.util import HierarchyError, SimulationError, progress, warn
from .cohortSpec import CohortSpec


def _generation_order(truth: Hierarchy) -> List[str]:
    graph = truth.to_graph()
    if not nx.is_directed_acyclic_graph(graph):
        raise SimulationError("ground-truth hierarchy must be acyclic")
    return list(nx.lexicographical_topological_sort(graph, key=truth.ids_to_idx.get))


def _generate_learner(order: List[str], prerequisites: Dict[str, List[str]], spec: CohortSpec,
                      seed_seq: np.random.SeedSequence) -> Dict[str, float]:
    rng = np.random.default_rng(seed_seq)
    low, high = spec.base_grade_range
    grades = dict()
    for skill in order:
        prereqs = prerequisites[skill]
        if not prereqs:
            value = rng.uniform(low, high)
        else:
            noise = rng.uniform(-spec.noise_spread, spec.noise_spread)
            value = min(grades[p] for p in prereqs) - spec.prerequisite_gap + noise
        grades[skill] = float(np.clip(value, 0.0, spec.g_max))
    return grades


def generate_cohort(truth: Hierarchy, spec: CohortSpec, t: Optional[Thresholds] = None, n_jobs: int = 1,
                    verbosity: int = 0) -> GradeMatrix:
    """
    Generates a synthetic grade matrix whose structure follows a ground-truth hierarchy. Per learner, root skills get
    a uniform grade in `spec.base_grade_range`; every other skill gets the grade of its weakest prerequisite, minus
    `spec.prerequisite_gap`, plus uniform noise in [-noise_spread, noise_spread], clamped to [0, g_max].

    Each learner draws from its own seed derived from `spec.seed`, so the result is the same whether learners are
    generated serially or in parallel.

    :param truth: ground-truth hierarchy (must be acyclic)
    :param spec: cohort parameters
    :param t: thresholds the cohort will be analysed with; used only to warn when the noise exceeds the CPR support
    :param n_jobs: number of joblib workers
    :param verbosity: print a status line every `verbosity` learners; 0 is silent
    :return: a GradeMatrix with learners 'L001'.. and the hierarchy's skills as columns
    """
    order = _generation_order(truth)
    if t is not None and spec.noise_spread >= min(-t.s1, t.s2):
        warn("noise_spread {} reaches the CPR support ({}, {}); true links may be deleted"
             .format(spec.noise_spread, t.s1, t.s2))
    prerequisites = {sid: truth.prerequisites_of(sid) for sid in truth.skill_ids}
    seeds = np.random.SeedSequence(spec.seed).spawn(spec.n_learners)

    step = verbosity if verbosity > 0 else spec.n_learners
    rows = []
    with Parallel(n_jobs=n_jobs, prefer="threads") as parallel:
        for start in range(0, spec.n_learners, step):
            rows.extend(parallel(delayed(_generate_learner)(order, prerequisites, spec, s)
                                 for s in seeds[start:start + step]))
            if verbosity > 0:
                progress('%03d/%03d learners generated' % (len(rows), spec.n_learners))

    width = len(str(spec.n_learners))
    learners = ["L{:0{}d}".format(i + 1, max(width, 3)) for i in range(spec.n_learners)]
    values = np.array([[row[sid] for sid in truth.skill_ids] for row in rows], dtype=float)
    return GradeMatrix(learners, list(truth.skill_ids), values.reshape(spec.n_learners, len(truth.skill_ids)),
                       g_max=spec.g_max)


def perturb_hierarchy(truth: Hierarchy, reverse: Union[Iterable[Edge], int], seed: Optional[int] = None) -> Hierarchy:
    """
    Models an expert who mis-oriented some links: returns a copy of `truth` with the given links flipped in place.

    :param truth: ground-truth hierarchy
    :param reverse: links of `truth` to flip, or a number of links to pick at random with `seed`
    :param seed: seed of the random pick when `reverse` is a number
    :return: the perturbed hierarchy
    """
    if isinstance(reverse, int):
        if not 0 <= reverse <= len(truth.edges):
            raise SimulationError("cannot reverse {} of {} links".format(reverse, len(truth.edges)))
        rng = np.random.default_rng(seed)
        picked = rng.choice(len(truth.edges), size=reverse, replace=False)
        reverse = {truth.edges[i] for i in sorted(picked)}
    else:
        reverse = set(reverse)

    for edge in reverse:
        if not truth.has_edge(edge):
            raise SimulationError("link {} is not in the ground-truth hierarchy".format(edge.name), edge)
    edges = [e.reversed() if e in reverse else e for e in truth.edges]
    try:
        return build_hierarchy(truth.skills, edges)
    except HierarchyError as e:
        raise SimulationError("reversing {} makes the hierarchy cyclic: {}".format(
            ", ".join(sorted(edge.name for edge in reverse)), e.message), sorted(edge.name for edge in reverse))


def expected_verdicts(truth: Hierarchy, expert: Hierarchy) -> Dict[Edge, Verdict]:
    """
    The verdict a perfect refinement would give each expert link: KEPT if the link is in the ground truth, REVERSED
    if its opposite is, DELETED otherwise.
    """
    true_edges = set(truth.edges)
    verdicts = dict()
    for edge in expert.edges:
        if edge in true_edges:
            verdicts[edge] = Verdict.KEPT
        elif edge.reversed() in true_edges:
            verdicts[edge] = Verdict.REVERSED
        else:
            verdicts[edge] = Verdict.DELETED
    return verdicts
