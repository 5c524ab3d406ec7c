import os
import sys
from unittest import TestLoader, TextTestRunner

if __name__ == "__main__":
    here = os.path.dirname(os.path.abspath(__file__))
    root = os.path.dirname(os.path.dirname(here))
    tests = TestLoader().discover(here, pattern="test_*.py", top_level_dir=root)
    test_results = TextTestRunner(verbosity=int(os.environ.get("PREREQ_TEST_VERBOSITY", 1))).run(tests)
    sys.exit(0 if test_results.wasSuccessful() else 1)
