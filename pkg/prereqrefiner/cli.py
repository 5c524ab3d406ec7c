"""
Command-line front end.

    prereq-refiner refine   --hierarchy h.json --grades g.csv --out results/
    prereq-refiner simulate --hierarchy truth.json --spec cohort.json --reverse "C->E" --out sim/
    prereq-refiner validate --hierarchy h.json --grades g.csv

Every flag falls back to the environment variable PREREQ_<FLAG> (e.g. PREREQ_ALPHA_MIN), then to its default.
Exit status: 0 on success, 1 on any validation or stage error, 2 on success with warnings.
"""
import argparse
import json
import os
import sys
from dataclasses import dataclass, replace
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from prereqrefiner.decision import DEFAULT_ALPHA_MIN, DecisionConfig
from prereqrefiner.fuzzy_engine import DEFAULT_S1, DEFAULT_S2, DEFAULT_S3, Thresholds
from prereqrefiner.model import DEFAULT_G_MAX, Cohort, Edge, MissingPolicy, load_grades, load_hierarchy
from prereqrefiner.refinerPipeline import default_pipeline
from prereqrefiner.reporting import FORMATS, write_outputs
from prereqrefiner.simulator import CohortSpec, run_recovery_experiment
from prereqrefiner.util import ARROW, ConfigError, PipelineError

ENV_PREFIX = "PREREQ_"
COMMANDS = ("refine", "simulate", "validate")
RECOVERY_FILE = "recovery.json"
COHORT_FILE = "cohort.csv"
EXPERT_FILE = "expert.json"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_WARNINGS = 2


@dataclass(frozen=True)
class Config:
    """
    Validated settings of one command-line run. Threshold and alpha constraints are checked on construction, and
    violations raise a ConfigError naming the flag.
    """
    command: str = "refine"
    hierarchy_path: Optional[str] = None
    grades_path: Optional[str] = None
    s1: float = DEFAULT_S1
    s2: float = DEFAULT_S2
    s3: float = DEFAULT_S3
    alpha_min: float = DEFAULT_ALPHA_MIN
    g_max: float = DEFAULT_G_MAX
    g_max_given: bool = False
    missing_policy: MissingPolicy = MissingPolicy.STRICT
    output_dir: str = "."
    formats: Tuple[str, ...] = FORMATS
    decimals: int = 2
    include_deleted: bool = False
    spec_path: Optional[str] = None
    seed: Optional[int] = None
    reverse: Tuple[Edge, ...] = ()
    n_jobs: int = 1
    verbosity: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError("unknown command {!r}".format(self.command), self.command)
        try:
            Thresholds(self.s1, self.s2, self.s3)
        except PipelineError as e:
            raise ConfigError("--{}: {}".format(e.element, e.message), "--{}".format(e.element))
        try:
            DecisionConfig(self.alpha_min)
        except PipelineError as e:
            raise ConfigError("--alpha-min: {}".format(e.message), "--alpha-min")
        if not self.g_max > 0:
            raise ConfigError("--g-max: g-max must be positive", "--g-max")
        if self.decimals < 0:
            raise ConfigError("--decimals: decimals must be >= 0", "--decimals")
        unknown = [f for f in self.formats if f not in FORMATS]
        if unknown or not self.formats:
            raise ConfigError("--format: expected a comma-separated subset of {}, got {!r}".format(
                ",".join(FORMATS), ",".join(self.formats)), "--format")

        required = [("--hierarchy", self.hierarchy_path)]
        if self.command != "simulate":
            required.append(("--grades", self.grades_path))
        if self.spec_path is not None:
            required.append(("--spec", self.spec_path))
        for flag, path in required:
            if path is None:
                raise ConfigError("{} is required".format(flag), flag)
            if not os.path.isfile(path) or not os.access(path, os.R_OK):
                raise ConfigError("{}: cannot read file {}".format(flag, path), flag)

    @property
    def thresholds(self) -> Thresholds:
        return Thresholds(self.s1, self.s2, self.s3)

    @property
    def decision_config(self) -> DecisionConfig:
        return DecisionConfig(self.alpha_min)

    def settings(self) -> Dict:
        """Configuration echo written into the report."""
        return {"s1": float(self.s1), "s2": float(self.s2), "s3": float(self.s3),
                "alpha_min": float(self.alpha_min), "g_max": float(self.g_max),
                "missing_policy": self.missing_policy.value}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def _parse_link(text: str) -> Edge:
    for separator in ("->", ARROW, ","):
        if separator in text:
            source, target = text.split(separator, 1)
            if source.strip() and target.strip():
                return Edge(source.strip(), target.strip())
    raise ConfigError("--reverse: cannot parse link {!r}; expected SOURCE->TARGET".format(text), "--reverse")


def _missing_policy(text: str) -> MissingPolicy:
    try:
        return MissingPolicy(text.strip().upper())
    except ValueError:
        raise argparse.ArgumentTypeError("expected STRICT or SKIP, got {!r}".format(text))


def _env_default(environ: Mapping[str, str], dest: str, default):
    return environ.get(ENV_PREFIX + dest.upper(), default)


def _add_common_flags(parser: argparse.ArgumentParser, environ: Mapping[str, str]) -> None:
    def env(dest, default=None):
        return _env_default(environ, dest, default)

    parser.add_argument("--hierarchy", dest="hierarchy", default=env("hierarchy"),
                        help="expert hierarchy (JSON or from,to edge-list CSV)")
    parser.add_argument("--s1", type=float, default=env("s1", DEFAULT_S1), help="lower CPR threshold (negative)")
    parser.add_argument("--s2", type=float, default=env("s2", DEFAULT_S2), help="CPR upper / RPR peak threshold")
    parser.add_argument("--s3", type=float, default=env("s3", DEFAULT_S3), help="upper RPR threshold")
    parser.add_argument("--alpha-min", dest="alpha_min", type=float, default=env("alpha_min", DEFAULT_ALPHA_MIN),
                        help="minimum relevance for a link to survive, in (0, 1]")
    parser.add_argument("--g-max", dest="g_max", type=float, default=env("g_max"),
                        help="maximum attainable grade (default {})".format(DEFAULT_G_MAX))
    parser.add_argument("--missing-policy", dest="missing_policy", type=_missing_policy,
                        default=env("missing_policy", MissingPolicy.STRICT), help="STRICT or SKIP")
    parser.add_argument("--out", dest="out", default=env("out", "."), help="output directory")
    parser.add_argument("--format", dest="format", default=env("format", ",".join(FORMATS)),
                        help="comma-separated subset of " + ",".join(FORMATS))
    parser.add_argument("--decimals", type=int, default=env("decimals", 2), help="decimals of presented values")
    parser.add_argument("--include-deleted", dest="include_deleted", action="store_true",
                        default=str(env("include_deleted", "")).lower() in ("1", "true", "yes"),
                        help="draw deleted links in the DOT output")
    parser.add_argument("--verbosity", type=int, default=env("verbosity", 0))


def _build_parser(environ: Mapping[str, str]) -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="prereq-refiner",
                             description="Refine an expert learning hierarchy from learners' grades.")
    subparsers = parser.add_subparsers(dest="command")

    refine = subparsers.add_parser("refine", help="run the full refinement pipeline")
    _add_common_flags(refine, environ)
    refine.add_argument("--grades", default=_env_default(environ, "grades", None), help="grade matrix CSV")

    validate = subparsers.add_parser("validate", help="load and validate the inputs only")
    _add_common_flags(validate, environ)
    validate.add_argument("--grades", default=_env_default(environ, "grades", None), help="grade matrix CSV")

    simulate = subparsers.add_parser("simulate", help="refine a perturbed hierarchy on a synthetic cohort")
    _add_common_flags(simulate, environ)
    simulate.add_argument("--spec", default=_env_default(environ, "spec", None), help="cohort spec JSON")
    simulate.add_argument("--seed", type=int, default=_env_default(environ, "seed", None),
                          help="cohort seed, overrides the spec's")
    simulate.add_argument("--reverse", action="append", default=None,
                          help="ground-truth link the expert mis-oriented, as SOURCE->TARGET (repeatable)")
    simulate.add_argument("--n-jobs", dest="n_jobs", type=int, default=_env_default(environ, "n_jobs", 1))
    return parser


def parse_config(argv: Optional[Sequence[str]] = None, environ: Optional[Mapping[str, str]] = None) -> Config:
    """
    Builds the run configuration. Flags override PREREQ_* environment variables, which override defaults.

    :param argv: command-line arguments without the program name; sys.argv[1:] by default
    :param environ: environment mapping; os.environ by default
    :return: the validated Config
    """
    environ = os.environ if environ is None else environ
    args = _build_parser(environ).parse_args(list(sys.argv[1:] if argv is None else argv))
    if args.command is None:
        raise ConfigError("expected a command: {}".format(", ".join(COMMANDS)))

    reverse = args.reverse if getattr(args, "reverse", None) is not None else \
        [r for r in environ.get(ENV_PREFIX + "REVERSE", "").split(";") if r.strip()]
    return Config(
        command=args.command,
        hierarchy_path=args.hierarchy,
        grades_path=getattr(args, "grades", None),
        s1=args.s1, s2=args.s2, s3=args.s3,
        alpha_min=args.alpha_min,
        g_max=args.g_max if args.g_max is not None else DEFAULT_G_MAX,
        g_max_given=args.g_max is not None,
        missing_policy=args.missing_policy,
        output_dir=args.out,
        formats=tuple(f.strip().lower() for f in args.format.split(",") if f.strip()),
        decimals=args.decimals,
        include_deleted=args.include_deleted,
        spec_path=getattr(args, "spec", None),
        seed=getattr(args, "seed", None),
        reverse=tuple(_parse_link(r) for r in reverse),
        n_jobs=getattr(args, "n_jobs", 1),
        verbosity=args.verbosity,
    )


def _report_error(e: Exception) -> int:
    print("ERROR: {}".format(e), file=sys.stderr)
    return EXIT_ERROR


def load_cohort(c: Config) -> Cohort:
    """Loads and cross-validates the hierarchy and grade files of a configuration."""
    hierarchy = load_hierarchy(c.hierarchy_path)
    grades = load_grades(c.grades_path, g_max=c.g_max, missing_policy=c.missing_policy)
    return Cohort(hierarchy, grades)


def run_validation(c: Config) -> int:
    try:
        cohort = load_cohort(c)
    except PipelineError as e:
        return _report_error(e)
    cohort.print_summary_stats()
    return EXIT_OK


def run_pipeline(c: Config) -> int:
    """
    Runs load, validation, grade variations, fuzzification, averaging, decision, assembly and reporting.

    :return: the exit status; stage errors are written to the error stream with the stage name
    """
    try:
        cohort = load_cohort(c)
        default_pipeline(c.thresholds, c.decision_config, verbosity=c.verbosity).transform(cohort)
        write_outputs(cohort, c.output_dir, c.formats, c.settings(), c.decimals, c.include_deleted)
    except PipelineError as e:
        return _report_error(e)
    except OSError as e:
        return _report_error(ConfigError("--out: cannot write outputs: {}".format(e), "--out"))
    return EXIT_WARNINGS if cohort.warnings else EXIT_OK


def load_cohort_spec(c: Config) -> CohortSpec:
    """
    The cohort parameters of a ``simulate`` run. A spec file without ``g_max`` takes the run's g-max; a spec file
    whose ``g_max`` disagrees with an explicit --g-max is an error. --seed overrides the spec's seed.
    """
    if c.spec_path is None:
        spec = CohortSpec(g_max=c.g_max)
    else:
        document = CohortSpec.read_document(c.spec_path)
        document.setdefault("g_max", c.g_max)
        spec = CohortSpec.from_dict(document)
    return _reconciled(c, spec)


def _reconciled(c: Config, spec: CohortSpec) -> CohortSpec:
    if c.g_max_given and float(spec.g_max) != float(c.g_max):
        raise ConfigError("--g-max: g-max {} disagrees with the cohort spec's g_max {}".format(c.g_max, spec.g_max),
                          "--g-max")
    if c.seed is not None:
        spec = replace(spec, seed=c.seed)
    return spec


def run_simulation(c: Config, spec: Optional[CohortSpec] = None) -> int:
    """
    Generates a cohort from the ground-truth hierarchy, refines the expert hierarchy obtained by reversing
    ``c.reverse``, and writes the recovery statistics next to the usual outputs.

    :param c: configuration of a ``simulate`` run
    :param spec: cohort parameters; read from ``c.spec_path`` (or defaulted) if not given
    :return: the exit status
    """
    try:
        spec = load_cohort_spec(c) if spec is None else _reconciled(c, spec)
        truth = load_hierarchy(c.hierarchy_path)
        stats, cohort = run_recovery_experiment(truth, spec, c.reverse, c.thresholds, c.decision_config,
                                                n_jobs=c.n_jobs, verbosity=c.verbosity)
        settings = dict(c.settings(), g_max=float(spec.g_max))
        write_outputs(cohort, c.output_dir, c.formats, settings, c.decimals, c.include_deleted)
        cohort.grades.to_csv(os.path.join(c.output_dir, COHORT_FILE))
        cohort.hierarchy.dump(os.path.join(c.output_dir, EXPERT_FILE))
        recovery = {
            "cohort_spec": spec.to_dict(),
            "reversed": [e.name for e in c.reverse],
            "recovery": stats.to_dict(),
        }
        with open(os.path.join(c.output_dir, RECOVERY_FILE), "w", encoding="utf-8", newline="") as f:
            f.write(json.dumps(recovery, indent=2, ensure_ascii=False, allow_nan=False) + "\n")
    except PipelineError as e:
        return _report_error(e)
    except OSError as e:
        return _report_error(ConfigError("--out: cannot write outputs: {}".format(e), "--out"))
    return EXIT_WARNINGS if cohort.warnings else EXIT_OK


def main(argv: Optional[List[str]] = None, environ: Optional[Mapping[str, str]] = None) -> int:
    try:
        c = parse_config(argv, environ)
    except PipelineError as e:
        return _report_error(e)
    if c.command == "validate":
        return run_validation(c)
    if c.command == "simulate":
        return run_simulation(c)
    return run_pipeline(c)
