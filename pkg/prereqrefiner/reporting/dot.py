from prereqrefiner.decision import FinalHierarchy, Verdict
from prereqrefiner.util import round_half_away


def _quote(text: str) -> str:
    return '"{}"'.format(text.replace("\\", "\\\\").replace('"', '\\"'))


def render_dot(f: FinalHierarchy, include_deleted: bool = False, decimals: int = 2) -> str:
    """
    Renders the final hierarchy as a graphviz DOT digraph. Every skill is a node, deleted or not; every retained
    link is labeled with its relevance degree.

    For example, after writing the text to 'final.dot' you can lay it out with:

        dot -Tpng -O final.dot

    :param f: the final hierarchy
    :param include_deleted: also draw deleted links, dashed and grey
    :param decimals: decimals of the relevance labels
    :return: DOT text
    """
    lines = ["digraph final_hierarchy {", "\trankdir=BT;"]
    for skill in f.skills:
        lines.append("\t{} [label={}];".format(_quote(skill.id), _quote(skill.display_name)))
    for edge, relevance in f.edges:
        label = "{:.{}f}".format(round_half_away(relevance, decimals), decimals)
        lines.append("\t{} -> {} [label={}];".format(_quote(edge.source), _quote(edge.target), _quote(label)))
    if include_deleted:
        for decision in f.decisions_with(Verdict.DELETED):
            edge = decision.original
            lines.append("\t{} -> {} [style=dashed, color=grey, fontcolor=grey, label={}];".format(
                _quote(edge.source), _quote(edge.target), _quote("deleted")))
    lines.append("}")
    return "\n".join(lines) + "\n"
