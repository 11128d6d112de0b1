import logging
from typing import Iterable, Tuple

import networkx as nx

from .errors import NotGenerating
from .group import Group

logger = logging.getLogger(__name__)


def cayley_digraph(G: Group, X: Iterable[int]) -> nx.DiGraph:
    """
    The Cayley digraph Cay(G, X) with an edge g -> g*x for every x in X.

    Args:
        G (Group): The group.
        X (Iterable[int]): Connection set of element indices.

    Returns:
        networkx.DiGraph: Vertices are element indices, each edge carries its label x.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(G.order))
    for x in sorted(set(X)):
        for g in range(G.order):
            graph.add_edge(g, G.rows[g][x], label=x)
    return graph


def _distances(G: Group, X: Iterable[int]):
    X = set(X)
    if len(G.closure(X)) != G.order:
        raise NotGenerating(f"{sorted(X)} does not generate {G.name}")
    graph = cayley_digraph(G, X)
    return graph, nx.single_source_shortest_path_length(graph, 0)


def cayley_diameter(G: Group, X: Iterable[int]) -> int:
    """
    Diameter of the Cayley digraph, the largest distance from the identity (the digraph is vertex transitive).

    Args:
        G (Group): The group.
        X (Iterable[int]): A generating set.

    Returns:
        int: The diameter.

    Raises:
        NotGenerating: If X does not generate G.
    """
    _, distances = _distances(G, X)
    return max(distances.values())


def cayley_witness(G: Group, X: Iterable[int]) -> Tuple[int, ...]:
    """
    A product-one sequence of length diameter + 1 built from a longest geodesic.

    If 1 -> g_1 -> ... -> g_d is a shortest path with labels s_1, ..., s_d to a vertex at maximal distance,
    the sequence s_1 ... s_d g_d^-1 multiplies to 1 in this order and is an atom: a product-one part containing g_d^-1
    would give a shorter path to g_d.

    Args:
        G (Group): The group.
        X (Iterable[int]): A generating set.

    Returns:
        Tuple[int, ...]: The sequence in canonical (ascending) form.
    """
    graph, distances = _distances(G, X)
    diameter = max(distances.values())
    target = min(g for g, distance in distances.items() if distance == diameter)
    path = nx.shortest_path(graph, 0, target)
    labels = [graph.edges[a, b]['label'] for a, b in zip(path, path[1:])]
    return tuple(sorted(labels + [G.inverse[target]]))
