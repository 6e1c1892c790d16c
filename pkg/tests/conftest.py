import random

import networkx as nx
import pytest

from dmlab.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


@pytest.fixture
def rng():
    return random.Random(0xD31AB)
