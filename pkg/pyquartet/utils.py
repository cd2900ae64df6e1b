import logging
import time
from typing import Dict, List

import networkx as nx

from pyquartet.errors import DegenerateConstruction, ScalarSyntaxError
from pyquartet.geometry import Point
from pyquartet.scalar import Rational, rat_parse

logger = logging.getLogger(__name__)


def generate_scene_graph(base_names: List[str], conjugates) -> nx.DiGraph:
    """Construction graph: base points, plus derived points fed by their reference vertices."""
    g = nx.DiGraph()
    g.add_nodes_from(base_names)
    g.add_nodes_from([conjugate.name for conjugate in conjugates], is_derived=True)
    g.add_edges_from([
        (parent, conjugate.name)
        for conjugate in conjugates
        for parent in (conjugate.point, *conjugate.reference)
    ])
    if not nx.is_directed_acyclic_graph(g):
        raise DegenerateConstruction("scene construction graph has a cycle")
    return g


def add_derived_points(g: nx.DiGraph, points: Dict[str, Point], conjugates) -> Dict[str, Point]:
    by_name = {conjugate.name: conjugate for conjugate in conjugates}
    for name in nx.topological_sort(g):
        if not g.nodes[name].get("is_derived"):
            continue
        started = time.perf_counter()
        points[name] = by_name[name].create_point(points)
        logger.debug("constructed %s from %s in %.2fs",
                     name, list(g.predecessors(name)), time.perf_counter() - started)
    return points


def parse_substitution(text: str) -> Dict[str, Rational]:
    """Parse ``m=1/3,n=1/4`` into a name -> Rational map."""
    subst = {}
    for item in (part.strip() for part in text.split(",")):
        if not item:
            continue
        name, sep, value = item.partition("=")
        name = name.strip()
        if not sep or not name:
            raise ScalarSyntaxError(f"expected name=value, got {item!r}")
        subst[name] = rat_parse(value)
    return subst

