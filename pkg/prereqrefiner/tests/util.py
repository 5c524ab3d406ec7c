import io
import json
import os

from prereqrefiner.model import Edge, Skill, build_hierarchy, load_grades

SKILL_IDS = ["A", "B", "C", "D", "E", "F", "G"]

# construction order = column order of the delta and membership tables
SAMPLE_EDGES = [("A", "B"), ("A", "C"), ("B", "F"), ("C", "D"), ("C", "E"),
                ("D", "E"), ("E", "G"), ("D", "G"), ("D", "F")]

SAMPLE_LEARNERS = ["S{}".format(i) for i in range(1, 11)]

SAMPLE_GRADES = [
    [10, 10, 1, 3, 7, 9, 3],
    [11, 12, 5, 7, 11, 11, 7],
    [10, 11, 5, 3, 8, 10, 5],
    [13, 10, 6, 6, 10, 10, 10],
    [15, 18, 10, 12, 16, 16, 15],
    [19, 18, 6, 10, 14, 19, 13],
    [12, 11, 1, 5, 6, 10, 4],
    [3, 4, 0, 2, 5, 7, 5],
    [15, 16, 6, 10, 11, 18, 13],
    [12, 14, 5, 3, 0, 13, 0],
]

SAMPLE_DELTAS = [
    [0, -9, -1, 2, 6, 4, -4, 0, 6],
    [1, -6, -1, 2, 6, 4, -4, 0, 4],
    [1, -5, -1, -2, 3, 5, -3, 2, 7],
    [-3, -7, 0, 0, 4, 4, 0, 4, 4],
    [3, -5, -2, 2, 6, 4, -1, 3, 4],
    [-1, -13, 1, 4, 8, 4, -1, 3, 9],
    [-1, -11, -1, 4, 5, 1, -2, -1, 5],
    [1, -3, 3, 2, 5, 3, 0, 3, 5],
    [1, -9, 2, 4, 5, 1, 2, 3, 8],
    [2, -7, -1, -2, -5, -3, 0, -3, 10],
]

# per link: (mean CPR degree, mean RPR degree)
SAMPLE_AVERAGES = {
    "A→B": (0.72, 0.18), "A→C": (0.04, 0.00), "B→F": (0.74, 0.12),
    "C→D": (0.52, 0.40), "C→E": (0.06, 0.72), "D→E": (0.34, 0.60),
    "E→G": (0.66, 0.00), "D→G": (0.56, 0.36), "D→F": (0.06, 0.64),
}

AB_CPR_COLUMN = [1.0, 0.8, 0.8, 0.4, 0.4, 0.8, 0.8, 0.8, 0.8, 0.6]
AB_RPR_COLUMN = [0.0, 0.2, 0.2, 0.0, 0.6, 0.0, 0.0, 0.2, 0.2, 0.4]

SAMPLE_KEPT = {"A→B": 0.72, "B→F": 0.74, "C→D": 0.52, "E→G": 0.66, "D→G": 0.56}
SAMPLE_REVERSED = {"C→E": ("E→C", 0.72), "D→E": ("E→D", 0.60), "D→F": ("F→D", 0.64)}
SAMPLE_DELETED = ["A→C"]
SAMPLE_FINAL_EDGES = ["A→B", "B→F", "C→D", "E→C", "E→D", "E→G", "D→G", "F→D"]

JAVA_SKILLS = ["Elementary of Java", "Objects and Classes", "Packages", "Inner Classes", "Flux I/O", "Exceptions",
               "Inheritance", "Serialization", "Interfaces", "Polymorphism", "Threads", "Collections"]


def sample_edges():
    return [Edge(s, t) for s, t in SAMPLE_EDGES]


def sample_hierarchy():
    return build_hierarchy([Skill(s) for s in SKILL_IDS], sample_edges())


def sample_grades_csv() -> str:
    lines = [",".join(["learner"] + SKILL_IDS)]
    for learner, row in zip(SAMPLE_LEARNERS, SAMPLE_GRADES):
        lines.append(",".join([learner] + [str(v) for v in row]))
    return "\n".join(lines) + "\n"


def sample_grades():
    return load_grades(io.StringIO(sample_grades_csv()))


def sample_hierarchy_document():
    return {"skills": [{"id": s} for s in SKILL_IDS],
            "edges": [{"from": s, "to": t} for s, t in SAMPLE_EDGES]}


def write_sample_inputs(directory: str):
    """
    Writes the worked example's hierarchy (JSON) and grades (CSV) into `directory`.

    :return: (hierarchy path, grades path)
    """
    hierarchy_path = os.path.join(directory, "hierarchy.json")
    grades_path = os.path.join(directory, "grades.csv")
    with open(hierarchy_path, "w", encoding="utf-8") as f:
        json.dump(sample_hierarchy_document(), f)
    with open(grades_path, "w", encoding="utf-8") as f:
        f.write(sample_grades_csv())
    return hierarchy_path, grades_path


# one learner, three links; the reversal of X->Z closes the cycle X -> Y -> Z -> X
CYCLE_SKILLS = ["X", "Y", "Z"]
CYCLE_EDGES = [("X", "Y"), ("Y", "Z"), ("X", "Z")]
CYCLE_GRADES_CSV = "learner,X,Y,Z\nL1,10,12,14\n"


def cycle_hierarchy():
    return build_hierarchy([Skill(s) for s in CYCLE_SKILLS], [Edge(s, t) for s, t in CYCLE_EDGES])


def cycle_grades():
    return load_grades(io.StringIO(CYCLE_GRADES_CSV))


def write_cycle_inputs(directory: str):
    hierarchy_path = os.path.join(directory, "cycle.csv")
    grades_path = os.path.join(directory, "cycle_grades.csv")
    with open(hierarchy_path, "w", encoding="utf-8") as f:
        f.write("from,to\n" + "".join("{},{}\n".format(s, t) for s, t in CYCLE_EDGES))
    with open(grades_path, "w", encoding="utf-8") as f:
        f.write(CYCLE_GRADES_CSV)
    return hierarchy_path, grades_path


def chain_hierarchy(n: int):
    ids = ["K{}".format(i) for i in range(n)]
    return build_hierarchy([Skill(s) for s in ids], [Edge(ids[i], ids[i + 1]) for i in range(n - 1)])
