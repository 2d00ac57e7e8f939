import pytest

from treebraid import trees


def tree_from_edges(edges, endpoint):
    vertices = {v for e in edges for v in e}
    return trees.make_tree(vertices, edges, endpoint)


@pytest.fixture
def interval():
    return tree_from_edges([("p", "m"), ("m", "q")], "p")


@pytest.fixture
def tripod():
    return tree_from_edges([("x", "v"), ("y", "v"), ("z", "v")], "x")


@pytest.fixture
def star4():
    return tree_from_edges([("w", "v"), ("x", "v"), ("y", "v"), ("z", "v")], "w")


@pytest.fixture
def htree():
    # two degree-3 hubs u, v joined by an edge, two extra leaves each
    return tree_from_edges(
        [("p", "u"), ("a", "u"), ("u", "v"), ("v", "b"), ("v", "c")], "p"
    )


@pytest.fixture
def caterpillar3():
    # three degree-3 hubs in a row
    return tree_from_edges(
        [
            ("p", "v1"),
            ("a", "v1"),
            ("v1", "v2"),
            ("v2", "b"),
            ("v2", "v3"),
            ("v3", "c"),
            ("v3", "d"),
        ],
        "p",
    )


@pytest.fixture
def spider():
    # three tripods joined at a center: branch vertices form a Y, not linear
    edges = [("c", "n1"), ("c", "n2"), ("c", "n3")]
    for i in (1, 2, 3):
        edges += [(f"n{i}", f"l{i}a"), (f"n{i}", f"l{i}b")]
    return tree_from_edges(edges, "l1a")
