import io
import math
import os
import tempfile
import unittest
from unittest import TestCase

import numpy as np
from hypothesis import given, settings, strategies as st
from numpy.testing import assert_array_equal

from prereqrefiner.model import Cohort, GradeMatrix, MissingPolicy, Skill, build_hierarchy, grade_of, load_grades
from prereqrefiner.util import GradeError
from prereqrefiner.tests.util import SAMPLE_GRADES, SAMPLE_LEARNERS, SKILL_IDS, sample_grades, sample_hierarchy


class TestLoadGrades(TestCase):

    def test_sample_grades(self):
        m = sample_grades()
        self.assertEqual(m.shape, (10, 7))
        self.assertEqual(m.learners, SAMPLE_LEARNERS)
        self.assertEqual(m.skills, SKILL_IDS)
        self.assertEqual(m.value("S1", "A"), 10)
        self.assertEqual(m.value("S8", "C"), 0)
        assert_array_equal(m.matrix, np.array(SAMPLE_GRADES, dtype=float))

    def test_single_cell(self):
        m = load_grades(io.StringIO("learner,A\nL1,0\n"))
        self.assertEqual(m.shape, (1, 1))
        self.assertEqual(grade_of(m, "L1", "A"), 0.0)

    def test_out_of_range_names_cell(self):
        with self.assertRaises(GradeError) as cm:
            load_grades(io.StringIO("learner,A,B\nL1,3,21\n"), g_max=20)
        self.assertIn("learner L1", str(cm.exception))
        self.assertIn("skill B", str(cm.exception))
        self.assertEqual(cm.exception.element, ("L1", "B"))

    def test_g_max_configurable(self):
        m = load_grades(io.StringIO("learner,A\nL1,95.5\n"), g_max=100)
        self.assertEqual(grade_of(m, "L1", "A"), 95.5)

    def test_non_numeric(self):
        with self.assertRaises(GradeError) as cm:
            load_grades(io.StringIO("learner,A\nL1,ten\n"))
        self.assertIn("non-numeric", str(cm.exception))

    def test_duplicate_learner(self):
        with self.assertRaises(GradeError) as cm:
            load_grades(io.StringIO("learner,A\nL1,1\nL1,2\n"))
        self.assertIn("L1", str(cm.exception))

    def test_duplicate_skill_column(self):
        with self.assertRaises(GradeError) as cm:
            load_grades(io.StringIO("learner,A,A\nL1,1,2\n"))
        self.assertIn("A", str(cm.exception))

    def test_missing_cell_strict(self):
        with self.assertRaises(GradeError) as cm:
            load_grades(io.StringIO("learner,A,B\nL1,1,\n"))
        self.assertIn("missing grade for learner L1, skill B", str(cm.exception))

    def test_empty_file(self):
        with self.assertRaises(GradeError) as cm:
            load_grades(io.StringIO(""))
        self.assertIn("empty", str(cm.exception))

    def test_not_utf8(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "grades.csv")
            with open(path, "wb") as f:
                f.write(b"learner,A,B\nL1,3,4\nS\xff\xfe,1,2\n")
            with self.assertRaises(GradeError) as cm:
                load_grades(path)
        self.assertTrue(str(cm.exception).startswith("[grades]"))
        self.assertIn("not valid UTF-8", str(cm.exception))
        self.assertEqual(cm.exception.element, path)

    def test_missing_cell_skip(self):
        m = load_grades(io.StringIO("learner,A,B\nL1,1,\nL2,2,3\n"), missing_policy=MissingPolicy.SKIP)
        self.assertTrue(m.has_missing)
        self.assertTrue(math.isnan(grade_of(m, "L1", "B")))

    def test_sample_lookups(self):
        m = sample_grades()
        self.assertEqual(grade_of(m, "S5", "B"), 18)
        self.assertEqual(grade_of(m, "S10", "E"), 0)
        for i, learner in enumerate(SAMPLE_LEARNERS):
            for j, skill in enumerate(SKILL_IDS):
                self.assertEqual(grade_of(m, learner, skill), SAMPLE_GRADES[i][j])

    def test_unknown_lookup(self):
        m = sample_grades()
        with self.assertRaises(GradeError):
            grade_of(m, "S11", "A")
        with self.assertRaises(GradeError):
            grade_of(m, "S1", "Z")

    @given(st.lists(st.lists(st.floats(min_value=0, max_value=20, allow_nan=False), min_size=3, max_size=3),
                    min_size=1, max_size=8))
    @settings(max_examples=200, deadline=None)
    def test_serialize_round_trip(self, rows):
        learners = ["L{}".format(i) for i in range(len(rows))]
        m = GradeMatrix(learners, ["A", "B", "C"], np.array(rows))
        reloaded = load_grades(io.StringIO(m.to_csv()))
        self.assertEqual(reloaded, m)
        self.assertTrue(((reloaded.matrix >= 0) & (reloaded.matrix <= 20)).all())


class TestCohort(TestCase):

    def test_skill_set_mismatch(self):
        h = build_hierarchy([Skill(s) for s in SKILL_IDS + ["H"]], [])
        with self.assertRaises(GradeError) as cm:
            Cohort(h, sample_grades())
        self.assertIn("hierarchy skill H", str(cm.exception))

    def test_extra_grade_column(self):
        h = build_hierarchy([Skill(s) for s in SKILL_IDS[:-1]], [])
        with self.assertRaises(GradeError) as cm:
            Cohort(h, sample_grades())
        self.assertIn("grade column G", str(cm.exception))

    def test_artifacts(self):
        cohort = Cohort(sample_hierarchy(), sample_grades())
        self.assertFalse(cohort.has_artifact("delta"))
        cohort.add_artifact("delta", 1)
        self.assertEqual(cohort.get_artifact("delta"), 1)
        cohort.add_warning("something", verbose=False)
        self.assertEqual(cohort.warnings, ["something"])


if __name__ == "__main__":
    unittest.main()
