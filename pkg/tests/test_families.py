from itertools import combinations

import pytest

from becurv import families as F
from becurv import graph as G
from becurv.classify import canonical_form


def degrees(g):
    return sorted((G.degree(g, v) for v in g.vertices), reverse=True)


def triangles(g):
    return sum(
        1 for a, b, c in combinations(g.vertices, 3) if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    )


def test_basic_families():
    p1 = F.path(1)
    assert len(p1) == 1 and p1.num_edges() == 0
    c5 = F.cycle(5)
    assert (len(c5), c5.num_edges(), G.girth(c5)) == (5, 5, 5)
    s4 = F.star(4)
    assert degrees(s4) == [3, 1, 1, 1]
    q3 = F.hypercube(3)
    assert (len(q3), q3.num_edges(), set(degrees(q3))) == (8, 12, {3})


def test_star3_plus():
    s1, s2, s3 = (F.star3_plus(i) for i in (1, 2, 3))
    assert (len(s1), s1.num_edges(), triangles(s1)) == (4, 4, 1)
    assert (len(s2), s2.num_edges(), triangles(s2)) == (4, 5, 2)
    assert canonical_form(s3) == canonical_form(F.complete(4))
    assert [G.is_c4_free(g) for g in (s1, s2, s3)] == [True, False, False]


def test_paw():
    g = F.paw()
    assert degrees(g) == [3, 2, 2, 1]
    assert G.girth(g) == 3
    assert G.is_c4_free(g)


def test_friendship():
    assert canonical_form(F.friendship(1)) == canonical_form(F.cycle(3))
    f7 = F.friendship(7)
    assert len(f7) == 15 and G.degree(f7, "0") == 14
    f2 = F.friendship(2)
    assert (len(f2), f2.num_edges()) == (5, 6)
    assert all(G.is_c4_free(F.friendship(k)) for k in range(1, 21))


@pytest.mark.parametrize(
    "g",
    [F.path(1), F.path(6), F.cycle(3), F.cycle(10), F.star(2), F.star(9), F.complete(6), F.hypercube(4),
     F.star3_plus(2), F.paw(), F.friendship(5), F.petersen()],
    ids=repr,
)
def test_generators_connected_and_simple(g):
    assert g.is_connected()
    assert g.is_unweighted()
    assert g.vertices == tuple(str(i) for i in range(len(g)))


@pytest.mark.parametrize("call", [lambda: F.path(0), lambda: F.cycle(2), lambda: F.star(1),
                                  lambda: F.hypercube(0), lambda: F.star3_plus(4), lambda: F.friendship(0)])
def test_invalid_parameters(call):
    with pytest.raises(G.GraphError):
        call()


def test_generate_dispatch():
    assert F.generate("friendship", [3]) == F.friendship(3)
    assert F.generate("paw") == F.paw()
    assert F.generate("cycle", ["5"], "normalized").preset == "normalized"
    with pytest.raises(G.GraphError):
        F.generate("wheel", [5])
    with pytest.raises(G.GraphError):
        F.generate("paw", [1])
