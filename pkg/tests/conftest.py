import networkx as nx
import pytest

from virtspan.diagram import Kind
from virtspan.generators import corpus, random_diagram

_A = {0: 1, 1: 0, 2: 3, 3: 2}
_B = {0: 3, 1: 2, 2: 1, 3: 0}
_PASS = {0: 2, 1: 3, 2: 0, 3: 1}


def count_curves_graph(D, s):
    """Independent curve count: connected components of the port graph.

    Nodes are ports, edges are arcs of the diagram plus the joins made at
    each crossing by the state (or by passing through a virtual crossing).
    """
    G = nx.Graph()
    G.add_nodes_from(range(4 * D.n_crossings))
    for q, r in enumerate(D.matching):
        G.add_edge(q, r)
    for c, k in enumerate(D.kinds):
        table = _PASS if k is Kind.VIRTUAL else (_A if s[c] == "A" else _B)
        for t, u in table.items():
            G.add_edge(4 * c + t, 4 * c + u)
    return nx.number_connected_components(G) + D.free_loops


def random_corpus(n=60, max_real=7, max_virtual=3, seed0=1000):
    out = {}
    for i in range(n):
        seed = seed0 + i
        cr = 1 + seed % max_real
        cv = seed % (max_virtual + 1)
        out[f"rnd{seed}"] = random_diagram(seed, cr, cv)
    return out


@pytest.fixture(scope="session")
def standard_corpus():
    return corpus()


@pytest.fixture(scope="session")
def small_random():
    return random_corpus()


#: (criterion id, description, passed) lines collected by test_acceptance.
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for ac, desc, ok in sorted(ACCEPTANCE_RESULTS, key=lambda r: int(r[0][2:])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {ac:<5} {desc}")
