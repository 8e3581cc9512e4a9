import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import to_nx
from twdecomp.codecs import write_graph6
from twdecomp.cutsets import compose_one_join, find_proper_one_join, one_join_blocks
from twdecomp.generators import FAMILIES, GeneratorSpec, generate, glue_two_cut
from twdecomp.graph import GraphInputError, add_vertex, complete_graph, cycle_graph
from twdecomp.recognize import is_strongly_2bipartite, recognize_long_rich_square

SPECS = [
    GeneratorSpec("wall", {"t": 2}),
    GeneratorSpec("subdivided", {"g": "C~", "rule": "random"}),
    GeneratorSpec("subdivided", {"g": GeneratorSpec("petersen"), "rule": "edge"}),
    GeneratorSpec("line-of", {"g": write_graph6(cycle_graph(5))}),
    GeneratorSpec("petersen"),
    GeneratorSpec("heawood"),
    GeneratorSpec("long-rich-square", {"paths": [[2, 0], [3, 1]]}),
    GeneratorSpec("strongly-2-bipartite", {"ny": 5, "extra": 1}),
    GeneratorSpec("glue-clique", {"g1": complete_graph(4), "g2": cycle_graph(5), "k": 2, "shuffle": True}),
    GeneratorSpec("glue-2cut", {"g1": cycle_graph(5), "g2": complete_graph(4)}),
    GeneratorSpec("compose-1join", {"g1": cycle_graph(4), "g2": cycle_graph(5), "A": [0, 2], "B": [1, 3]}),
    GeneratorSpec("random", {"n": 9, "p": 0.4}),
]


def test_every_family_has_a_generator_config():
    assert {s.family for s in SPECS} == set(FAMILIES)


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: s.family)
@given(seed=st.integers(0, 2**64 - 1))
def test_generation_is_deterministic(spec, seed):
    a = generate(GeneratorSpec(spec.family, spec.params, seed))
    b = generate(GeneratorSpec(spec.family, spec.params, seed))
    assert write_graph6(a) == write_graph6(b)


def test_bad_specs():
    with pytest.raises(GraphInputError):
        GeneratorSpec("hypercube")
    with pytest.raises(GraphInputError):
        GeneratorSpec("random", {"n": 3}, seed=-1)
    with pytest.raises(GraphInputError):
        generate(GeneratorSpec("random"))
    with pytest.raises(GraphInputError):
        generate(GeneratorSpec("subdivided", {"g": 17}))


def test_family_postconditions():
    assert generate(SPECS[0]).n == 16
    assert recognize_long_rich_square(generate(SPECS[6])) is not None
    for seed in range(10):
        g = generate(GeneratorSpec("strongly-2-bipartite", {"ny": 5, "extra": 1}, seed))
        assert is_strongly_2bipartite(g) is not None


def test_c4_glued_to_c4_is_c6():
    g, pair = glue_two_cut(cycle_graph(4), cycle_graph(4))
    assert nx.is_isomorphic(to_nx(g), nx.cycle_graph(6)) and pair == (0, 1)


def test_compose_one_join_duality():
    g1, g2 = cycle_graph(4), cycle_graph(6)
    spec = GeneratorSpec("compose-1join", {"g1": g1, "g2": g2, "A": [0, 2], "B": [1, 3]})
    g, declared = compose_one_join(g1, g2, [0, 2], [1, 3])
    assert generate(spec) == g
    (x, _), (y, _) = one_join_blocks(g, declared)
    assert nx.is_isomorphic(to_nx(x), to_nx(add_vertex(g1, [0, 2])))
    assert nx.is_isomorphic(to_nx(y), to_nx(add_vertex(g2, [1, 3])))
    # the finder may report a different join, but it must be a valid one
    find_proper_one_join(g).check(g)
