"""The twelve acceptance criteria, each at its stated size and tolerance.

Every criterion prints one PASS/FAIL line with counts and runtime (also
collected in the terminal summary).  Two literal statements are known to
be false and are marked xfail(strict=True); the corrected statements they
pin down are checked right beside them.
"""
import time

import pytest

from conftest import ACCEPTANCE_LINES
from oracles import (all_graphs_up_to, connected_graphs_up_to, has_isk4, has_unique_chord_cycle, has_wheel,
                     treewidth_by_permutations)
from twdecomp.cutsets import (find_clique_cutset, find_one_cutsets, find_proper_one_join,
                              find_proper_two_cutsets, find_two_cutsets, closure, strong_closure)
from twdecomp.detect import detect_isk4, detect_unique_chord_cycle, detect_wheel, is_t_clean
from twdecomp.families import PETERSEN
from twdecomp.graph import Graph, complete_bipartite, cycle_graph
from twdecomp.harness import (OK, corpus_t, curated_corpus, pipeline_isk4, pipeline_unique_chord,
                              ramsey_upper, verify_lemma)
from twdecomp.prime import ISK4_WHEEL_FREE, UNIQUE_CHORD_FREE
from twdecomp.recognize import NONE, recognize_basic_isk4, recognize_basic_unique_chord
from twdecomp.width import rankwidth, treewidth

SEED = 1


def record(label, passed, total, seconds, limit, extra=""):
    ok = passed == total and seconds < limit
    line = f"{'PASS' if ok else 'FAIL'} {label}: {passed}/{total} in {seconds:.1f}s (limit {limit}s){extra}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def suite(label, name, trials, limit):
    t0 = time.perf_counter()
    rep = verify_lemma(name, trials, SEED)
    dt = time.perf_counter() - t0
    ok = record(label, rep.passed, trials, dt, limit, f" [{name}, unknown {rep.unknown}]")
    assert ok, rep.failures[:3]


def test_01_subdivision_invariance():
    suite("1 subdivision invariance", "subdivision-tw", 500, 120)


def test_02_clique_cutset_law():
    suite("2 clique-cutset law", "clique-cutset-tw", 200, 120)


def test_03_two_cutset_closure_laws():
    suite("3 2-cutset closure laws", "two-cutset-closure-tw", 200, 180)


@pytest.mark.parametrize("name", ["prime-base", "prime-base-isk4", "prime-base-unique-chord"])
def test_04_prime_base_theorem(name):
    suite(f"4 prime-base theorem ({name})", name, 200, 300)


def test_05_one_join_rankwidth():
    suite("5 1-join rankwidth", "one-join-rw", 100, 300)


def test_06_line_graph_bound():
    suite("6 line-graph bound", "line-graph-tw", 200, 120)


# -- 7: 2-cutset safety ---------------------------------------------------------------

@pytest.mark.xfail(strict=True, reason="cl*(C) can leave the (ISK4, wheel)-free class when the pair is "
                                       "adjacent; see test_07_isk4_counterexample")
def test_07_two_cutset_safety_isk4_literal():
    suite("7 2-cutset safety, cl* stays (ISK4, wheel)-free", "isk4-2cutset-safe", 100, 300)


def test_07_two_cutset_safety_unique_chord():
    suite("7 2-cutset safety, cl* stays unique-chord-free", "unique-chord-2cutset-safe", 100, 300)


def test_07_two_cutset_safety_isk4_cl_or_strong():
    suite("7 (corrected) cl or cl* stays (ISK4, wheel)-free", "isk4-2cutset-safe-either", 100, 300)


def test_07_isk4_counterexample():
    g = Graph.from_edges(7, [(0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 4), (3, 6),
                             (4, 5), (5, 6)])
    assert ISK4_WHEEL_FREE(g) and not find_one_cutsets(g)
    assert frozenset({3, 4}) in {f.cut for f in find_two_cutsets(g)} and g.has_edge(3, 4)
    c = [1, 2, 5, 6]
    assert not ISK4_WHEEL_FREE(strong_closure(g, (3, 4), c).graph)
    assert ISK4_WHEEL_FREE(closure(g, (3, 4), c).graph)


# -- 8: 1-join preservation -------------------------------------------------------------

@pytest.mark.xfail(strict=True, reason="strong closures at proper 2-cutsets can gain a proper 1-join; "
                                       "see test_08_counterexamples")
def test_08_one_join_preservation_literal():
    suite("8 1-join preservation (blocks and all strong closures)", "one-join-preservation", 100, 180)


def test_08_one_join_preservation_restricted():
    suite("8 (corrected) no 1-cutset, non-adjacent pair, |C| >= 2", "one-join-preservation-restricted",
          100, 180)


@pytest.mark.parametrize("n, edges, pair, comp", [
    # the graph has a 1-cutset
    (6, [(0, 1), (1, 2), (1, 4), (1, 5), (2, 3)], (1, 3), [2]),
    # the pair is adjacent
    (6, [(0, 1), (0, 2), (0, 4), (0, 5), (1, 2), (2, 3), (2, 5), (3, 4)], (0, 2), [1]),
    # 2-connected, non-adjacent pair, singleton component
    (7, [(0, 1), (0, 5), (0, 6), (1, 2), (2, 3), (3, 4), (3, 6), (4, 5)], (0, 3), [6]),
], ids=["one-cutset", "adjacent-pair", "singleton-component"])
def test_08_counterexamples(n, edges, pair, comp):
    g = Graph.from_edges(n, edges)
    assert find_proper_one_join(g) is None
    assert frozenset(pair) in {f.cut for f in find_proper_two_cutsets(g)}
    assert find_proper_one_join(strong_closure(g, pair, comp).graph) is not None


# -- 9: structure-theorem coverage --------------------------------------------------------

def test_09_structure_theorem_coverage():
    t0 = time.perf_counter()
    graphs = [Graph.from_edges(h.number_of_nodes(), list(h.edges())) for h in connected_graphs_up_to(7)]
    isk4, uc, bad = 0, 0, []
    for g in graphs:
        if ISK4_WHEEL_FREE(g):
            isk4 += 1
            if recognize_basic_isk4(g).name == NONE and find_clique_cutset(g) is None \
                    and not find_proper_two_cutsets(g):
                bad.append(("isk4", g))
        if UNIQUE_CHORD_FREE(g):
            uc += 1
            if recognize_basic_unique_chord(g).name == NONE and not find_one_cutsets(g) \
                    and not find_proper_two_cutsets(g) and find_proper_one_join(g) is None:
                bad.append(("unique-chord", g))
    dt = time.perf_counter() - t0
    ok = record("9 structure-theorem coverage", isk4 + uc - len(bad), isk4 + uc, dt, 900,
                f" [{isk4} (ISK4, wheel)-free, {uc} unique-chord-free, n <= 7]")
    assert ok, bad[:3]


# -- 10: oracle agreement -----------------------------------------------------------------

def test_10_oracle_agreement():
    t0 = time.perf_counter()
    checks, bad = 0, []
    for h in all_graphs_up_to(7):
        g = Graph.from_edges(h.number_of_nodes(), list(h.edges()))
        for det, oracle in ((detect_isk4, has_isk4), (detect_wheel, has_wheel),
                            (detect_unique_chord_cycle, has_unique_chord_cycle)):
            res = det(g)
            checks += 1
            if not res.exhaustive or res.found != oracle(h):
                bad.append((det.__name__, g))
    for h in all_graphs_up_to(6):
        g = Graph.from_edges(h.number_of_nodes(), list(h.edges()))
        checks += 1
        if treewidth(g) != treewidth_by_permutations(h):
            bad.append(("treewidth", g))
    dt = time.perf_counter() - t0
    ok = record("10 oracle agreement", checks - len(bad), checks, dt, 900,
                " [3 detectors on every graph n <= 7, treewidth on every graph n <= 6]")
    assert ok, bad[:3]


# -- 11: named values -----------------------------------------------------------------------

def test_11_named_values(named_values):
    t0 = time.perf_counter()
    pairs = [(treewidth(PETERSEN), named_values["tw_petersen"], 4),
             (treewidth(complete_bipartite(3, 3)), named_values["tw_k33"], 3),
             (rankwidth(cycle_graph(5)), named_values["rw_c5"], 2),
             (ramsey_upper(3).upper, named_values["ramsey_3"], 6)]
    passed = sum(ours == frozen == stated for ours, frozen, stated in pairs)
    ok = record("11 named values", passed, len(pairs), time.perf_counter() - t0, 60,
                " [tw(Petersen), tw(K33), rw(C5), R(3,3)]")
    assert ok, pairs


# -- 12: end-to-end pipelines ---------------------------------------------------------------

def _clean_corpus(cls, t=3):
    return [(name, g) for name, g in curated_corpus(cls) if is_t_clean(g, t).clean]


def _literal(rep):
    return rep.tw_input is not None and rep.tw_input == rep.tw_base and \
        (rep.concrete_bound is None or rep.tw_base <= rep.concrete_bound) and rep.verdict == OK


def test_12_pipeline_isk4():
    t0 = time.perf_counter()
    corpus = _clean_corpus("isk4")
    bad = [name for name, g in corpus if not _literal(pipeline_isk4(g, 3))]
    ok = record("12 pipeline (ISK4, wheel)-free, t=3", len(corpus) - len(bad), len(corpus),
                time.perf_counter() - t0, 600, " [tw(input) = tw(base) <= bound]")
    assert ok, bad


@pytest.mark.xfail(strict=True, reason="the 1-join reduction keeps rankwidth, not treewidth; "
                                       "see test_12_unique_chord_counterexample")
def test_12_pipeline_unique_chord_literal():
    t0 = time.perf_counter()
    corpus = _clean_corpus("unique-chord")
    bad = [name for name, g in corpus if not _literal(pipeline_unique_chord(g, 3))]
    ok = record("12 pipeline unique-chord-free, t=3", len(corpus) - len(bad), len(corpus),
                time.perf_counter() - t0, 600, f" [tw(input) = tw(base) <= bound; fails on {bad[:4]}]")
    assert ok, bad


def test_12_pipeline_unique_chord_reduced():
    t0 = time.perf_counter()
    corpus = _clean_corpus("unique-chord")
    bad = []
    for name, g in corpus:
        rep = pipeline_unique_chord(g, 3)
        fine = rep.verdict == OK and rep.tw_reduced == rep.tw_base and rep.rw_chain[0] <= rep.rw_chain[-1]
        fine = fine and (rep.concrete_bound is None or rep.tw_base <= rep.concrete_bound)
        if len(rep.rw_chain) == 1:
            fine = fine and rep.tw_input == rep.tw_base
        if not fine:
            bad.append(name)
    ok = record("12 (corrected) pipeline unique-chord-free, t=3", len(corpus) - len(bad), len(corpus),
                time.perf_counter() - t0, 600, " [tw(after 1-join reduction) = tw(base) <= bound]")
    assert ok, bad


def test_12_unique_chord_counterexample():
    from twdecomp.cutsets import compose_one_join
    g, _ = compose_one_join(cycle_graph(5), cycle_graph(5), [0, 2], [0, 2])
    rep = pipeline_unique_chord(g, 3)
    assert rep.tw_input == 3 and rep.tw_base == 2 and rep.verdict == OK
    c4 = pipeline_unique_chord(cycle_graph(4), 3)
    assert (c4.tw_input, c4.tw_base) == (2, 1)


@pytest.mark.parametrize("cls", ["isk4", "unique-chord"])
def test_12_corpus_members_that_need_larger_t(cls):
    run = pipeline_isk4 if cls == "isk4" else pipeline_unique_chord
    t0 = time.perf_counter()
    rest = [(name, g) for name, g in curated_corpus(cls) if not is_t_clean(g, 3).clean]
    bad = []
    for name, g in rest:
        rep = run(g, corpus_t(g, 3))
        fine = rep.verdict == OK and rep.tw_reduced == rep.tw_base
        if cls == "isk4":
            fine = fine and rep.tw_input == rep.tw_base
        if not fine:
            bad.append(name)
    ok = record(f"12 (extra) {cls} corpus members that are not 3-clean, smallest clean t", len(rest) - len(bad),
                len(rest), time.perf_counter() - t0, 600)
    assert ok, bad
