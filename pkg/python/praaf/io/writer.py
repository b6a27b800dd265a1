import logging
from typing import List, Optional

import pygraphviz as pgv

from praaf.models import DEFAULT_ETA_ID, PrAAF, Probability, format_probability

logger = logging.getLogger(__name__)


def _with_probability(parts: List[str], p: Probability) -> str:
    if p != 1:
        parts = parts + [format_probability(p)]
    return ",".join(parts)


def serialize_praaf(praaf: PrAAF) -> str:
    """
    Write a PrAAF as a canonical .praaf document.

    Arguments come first and attacks second, both sorted; certain elements are
    written without a probability.
    """
    lines = [f"arg({_with_probability([a], praaf.p_args[a])})." for a in sorted(praaf.args)]
    lines.extend(
        f"att({_with_probability([e.source, e.target], praaf.p_atts[e])})." for e in sorted(praaf.atts)
    )
    logger.debug(f"Serialized {len(lines)} statements")
    return "".join(line + "\n" for line in lines)


def export_dot(praaf: PrAAF, eta_id: Optional[str] = DEFAULT_ETA_ID) -> str:
    """
    Render a PrAAF as a DOT digraph.

    Probabilistic arguments and attacks carry their probability as a label and
    the ground-truth argument is drawn as a filled double circle.
    """
    graph = pgv.AGraph(name="praaf", strict=False, directed=True)
    graph.node_attr["shape"] = "circle"
    for argument in sorted(praaf.args):
        attributes = {}
        if praaf.p_args[argument] != 1:
            attributes["xlabel"] = format_probability(praaf.p_args[argument])
        if argument == eta_id:
            attributes.update(shape="doublecircle", style="filled", fillcolor="lightgrey")
        graph.add_node(argument, **attributes)
    for edge in sorted(praaf.atts):
        attributes = {}
        if praaf.p_atts[edge] != 1:
            attributes["label"] = format_probability(praaf.p_atts[edge])
        if edge.source == eta_id:
            attributes["style"] = "dashed"
        graph.add_edge(edge.source, edge.target, **attributes)
    logger.debug(f"Built DOT graph with {graph.number_of_nodes()} nodes and {graph.number_of_edges()} edges")
    return graph.string()
