import math
import unittest
from unittest import TestCase

import numpy as np
from hypothesis import given, settings, strategies as st

from prereqrefiner.decision import DecisionConfig, HierarchyRefiner, Verdict
from prereqrefiner.fuzzy_engine import Fuzzifier, Thresholds
from prereqrefiner.model import Cohort, Edge, GradeMatrix, Skill, build_hierarchy
from prereqrefiner.refinerPipeline import RefinementPipeline, default_pipeline
from prereqrefiner.tests.util import (SAMPLE_DELETED, SAMPLE_FINAL_EDGES, SAMPLE_KEPT, SAMPLE_REVERSED, cycle_grades,
                                      cycle_hierarchy, sample_grades, sample_hierarchy)

TOL = 1e-12
ALPHA_GRID = [float(a) for a in np.linspace(0.01, 1.0, 21)]


def refine(cohort, thresholds=None, alpha_min=0.5):
    return default_pipeline(thresholds, DecisionConfig(alpha_min)).transform(cohort)


def oracle(skills, edges, grades, s1, s2, s3, alpha_min):
    """
    Straight-line refinement of every link: grade variation per learner, the two triangular degrees, exact means,
    then keep / reverse / delete.

    :return: {(source, target): (verdict, relevance)}
    """
    col = {s: i for i, s in enumerate(skills)}
    result = dict()
    for source, target in edges:
        cpr, rpr = [], []
        for row in grades:
            d = row[col[target]] - row[col[source]]
            if s1 <= d <= 0:
                cpr.append(1 - d / s1)
            elif 0 < d <= s2:
                cpr.append(1 - d / s2)
            else:
                cpr.append(0.0)
            if 0 <= d <= s2:
                rpr.append(d / s2)
            elif s2 < d <= s3:
                rpr.append((s3 - d) / (s3 - s2))
            else:
                rpr.append(0.0)
        avg_cpr = math.fsum(cpr) / len(cpr)
        avg_rpr = math.fsum(rpr) / len(rpr)
        if max(avg_cpr, avg_rpr) < alpha_min:
            result[(source, target)] = ("DELETED", None)
        elif avg_cpr >= avg_rpr:
            result[(source, target)] = ("KEPT", avg_cpr)
        else:
            result[(source, target)] = ("REVERSED", avg_rpr)
    return result


@st.composite
def instances(draw):
    n = draw(st.integers(min_value=2, max_value=5))
    skills = ["k{}".format(i) for i in range(n)]
    pairs = [(skills[i], skills[j]) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1, max_size=len(pairs)))
    n_learners = draw(st.integers(min_value=1, max_value=8))
    grade = st.one_of(st.integers(min_value=0, max_value=20).map(float),
                      st.floats(min_value=0, max_value=20, allow_nan=False))
    grades = draw(st.lists(st.lists(grade, min_size=n, max_size=n), min_size=n_learners, max_size=n_learners))
    s1 = draw(st.floats(min_value=-10, max_value=-0.5))
    s2 = draw(st.floats(min_value=0.5, max_value=10))
    s3 = s2 + draw(st.floats(min_value=0.5, max_value=10))
    alpha_min = draw(st.floats(min_value=0.01, max_value=1.0))
    return skills, edges, grades, s1, s2, s3, alpha_min


def instance_cohort(skills, edges, grades):
    hierarchy = build_hierarchy([Skill(s) for s in skills], [Edge(s, t) for s, t in edges])
    learners = ["L{}".format(i) for i in range(len(grades))]
    return Cohort(hierarchy, GradeMatrix(learners, skills, np.array(grades, dtype=float)))


def surviving(cohort):
    return {e for e, _ in cohort.get_artifact("final").edges}


class TestSampleCohort(TestCase):

    def setUp(self):
        self.cohort = refine(Cohort(sample_hierarchy(), sample_grades()))
        self.decisions = {d.original.name: d for d in self.cohort.get_artifact("decisions")}

    def test_kept(self):
        kept = {name: d.relevance for name, d in self.decisions.items() if d.verdict == Verdict.KEPT}
        self.assertEqual(set(kept), set(SAMPLE_KEPT))
        for name, relevance in SAMPLE_KEPT.items():
            self.assertAlmostEqual(kept[name], relevance, delta=TOL)

    def test_reversed(self):
        reversed_ = {name: d for name, d in self.decisions.items() if d.verdict == Verdict.REVERSED}
        self.assertEqual(set(reversed_), set(SAMPLE_REVERSED))
        for name, (result, relevance) in SAMPLE_REVERSED.items():
            self.assertEqual(reversed_[name].result_edge.name, result)
            self.assertAlmostEqual(reversed_[name].relevance, relevance, delta=TOL)

    def test_deleted(self):
        deleted = [name for name, d in self.decisions.items() if d.verdict == Verdict.DELETED]
        self.assertEqual(deleted, SAMPLE_DELETED)

    def test_final_hierarchy(self):
        final = self.cohort.get_artifact("final")
        self.assertEqual([e.name for e, _ in final.edges], SAMPLE_FINAL_EDGES)
        self.assertEqual(final.cycle_warnings, [])
        self.assertEqual(self.cohort.warnings, [])
        # the input hierarchy is untouched
        self.assertEqual(self.cohort.hierarchy, sample_hierarchy())

    def test_summarize(self):
        summary = HierarchyRefiner().summarize(self.cohort)
        self.assertEqual(summary.loc["D→F", "verdict"], "REVERSED")
        self.assertEqual(summary.loc["D→F", "result"], "F→D")

    def test_alpha_above_every_average(self):
        cohort = refine(Cohort(sample_hierarchy(), sample_grades()), alpha_min=0.75)
        self.assertEqual(cohort.get_artifact("final").edges, [])


class TestCycleExample(TestCase):

    def test_reversal_closes_cycle(self):
        cohort = refine(Cohort(cycle_hierarchy(), cycle_grades()))
        verdicts = {d.original.name: (d.verdict, d.relevance) for d in cohort.get_artifact("decisions")}
        self.assertEqual(verdicts["X→Y"][0], Verdict.KEPT)
        self.assertAlmostEqual(verdicts["X→Y"][1], 0.6, delta=TOL)
        self.assertEqual(verdicts["X→Z"][0], Verdict.REVERSED)
        self.assertAlmostEqual(verdicts["X→Z"][1], 0.8, delta=TOL)
        self.assertEqual(cohort.get_artifact("final").cycle_warnings, [["X", "Y", "Z"]])
        self.assertEqual(cohort.warnings, ["[decision] cycle in final hierarchy: X -> Y -> Z -> X"])


class TestPipeline(TestCase):

    def test_param_routing(self):
        pipe = RefinementPipeline([("fuzzify", Fuzzifier()), ("decide", HierarchyRefiner())])
        cohort = pipe.transform(Cohort(sample_hierarchy(), sample_grades()), decide__unused=1)
        self.assertEqual(len(cohort.get_artifact("decisions")), 9)

    def test_refiner_needs_averages(self):
        with self.assertRaises(ValueError):
            HierarchyRefiner().transform(Cohort(sample_hierarchy(), sample_grades()))

    def test_custom_thresholds(self):
        cohort = refine(Cohort(sample_hierarchy(), sample_grades()), thresholds=Thresholds(-10, 10, 20))
        d = next(d for d in cohort.get_artifact("decisions") if d.original.name == "D→F")
        self.assertEqual(d.verdict, Verdict.REVERSED)
        self.assertAlmostEqual(d.relevance, 0.62, delta=TOL)
        self.assertAlmostEqual(d.avg_cpr, 0.38, delta=TOL)


class TestProperties(TestCase):

    @given(instances())
    @settings(max_examples=600, deadline=None)
    def test_matches_straight_line_oracle(self, instance):
        skills, edges, grades, s1, s2, s3, alpha_min = instance
        expected = oracle(skills, edges, grades, s1, s2, s3, alpha_min)
        cohort = refine(instance_cohort(skills, edges, grades), Thresholds(s1, s2, s3), alpha_min)
        for d in cohort.get_artifact("decisions"):
            verdict, relevance = expected[(d.original.source, d.original.target)]
            self.assertEqual(d.verdict.value, verdict)
            if relevance is None:
                self.assertIsNone(d.relevance)
            else:
                self.assertAlmostEqual(d.relevance, relevance, delta=TOL)

    @given(instances())
    @settings(max_examples=100, deadline=None)
    def test_surviving_links_shrink_as_alpha_grows(self, instance):
        skills, edges, grades, s1, s2, s3, _ = instance
        previous = None
        for alpha_min in ALPHA_GRID:
            current = surviving(refine(instance_cohort(skills, edges, grades), Thresholds(s1, s2, s3), alpha_min))
            if previous is not None:
                self.assertTrue(current <= previous, "alpha {}".format(alpha_min))
            previous = current

    @given(instances())
    @settings(max_examples=200, deadline=None)
    def test_partition_of_links(self, instance):
        skills, edges, grades, s1, s2, s3, alpha_min = instance
        cohort = refine(instance_cohort(skills, edges, grades), Thresholds(s1, s2, s3), alpha_min)
        decisions = cohort.get_artifact("decisions")
        self.assertEqual(len(decisions), len(edges))
        final = cohort.get_artifact("final")
        retained = [d for d in decisions if d.verdict != Verdict.DELETED]
        self.assertEqual(len(final.edges), len(retained))
        for d in retained:
            self.assertGreaterEqual(d.relevance, alpha_min)
            self.assertLessEqual(d.relevance, 1.0)
            self.assertGreaterEqual(d.relevance, max(d.avg_cpr, d.avg_rpr) - TOL)


if __name__ == "__main__":
    unittest.main()
