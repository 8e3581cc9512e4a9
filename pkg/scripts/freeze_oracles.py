"""Compute reference values with the brute-force oracles and freeze them.

Writes tests/fixtures/named_values.json.  Every entry records the oracle
that produced it; the test suite compares the main implementation against
these frozen values without re-running the slow oracles.

    python3 scripts/freeze_oracles.py
"""
import json
import sys
import time
from pathlib import Path

import networkx as nx

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402


def prism():
    return nx.circular_ladder_graph(3)


def octahedron():
    return nx.complement(nx.Graph([(0, 1), (2, 3), (4, 5)]))


def main(out=ROOT / "tests" / "fixtures" / "named_values.json"):
    petersen = nx.petersen_graph()
    k33 = nx.complete_bipartite_graph(3, 3)
    c5, c6 = nx.cycle_graph(5), nx.cycle_graph(6)
    entries = []

    def freeze(name, oracle, func, *args):
        t0 = time.perf_counter()
        value = func(*args)
        entries.append({"name": name, "value": value, "oracle": oracle,
                        "seconds": round(time.perf_counter() - t0, 3)})
        print(f"{name:28s} {value!s:8s} [{oracle}]")

    freeze("tw_petersen", "treewidth_by_eliminated_sets", oracles.treewidth_by_eliminated_sets, petersen)
    freeze("tw_k33", "treewidth_by_permutations", oracles.treewidth_by_permutations, k33)
    freeze("tw_k4", "treewidth_by_permutations", oracles.treewidth_by_permutations, nx.complete_graph(4))
    freeze("rw_c5", "rankwidth_brute", oracles.rankwidth_brute, c5)
    freeze("rw_k4", "rankwidth_brute", oracles.rankwidth_brute, nx.complete_graph(4))
    freeze("rw_petersen", "rankwidth_brute", oracles.rankwidth_brute, petersen)
    freeze("cut_rank_c5_adjacent_pair", "cut_rank", oracles.cut_rank, c5, [0, 1])
    freeze("ramsey_3", "ramsey_number_3", oracles.ramsey_number_3)
    freeze("isk4_in_petersen", "has_isk4", oracles.has_isk4, petersen)
    freeze("isk4_in_k33", "has_isk4", oracles.has_isk4, k33)
    freeze("isk4_in_prism", "has_isk4", oracles.has_isk4, prism())
    freeze("isk4_in_octahedron", "has_isk4", oracles.has_isk4, octahedron())
    freeze("wheel_in_petersen", "has_wheel", oracles.has_wheel, petersen)
    freeze("unique_chord_in_petersen", "has_unique_chord_cycle", oracles.has_unique_chord_cycle, petersen)
    freeze("biclique2_in_c6", "has_induced_biclique", oracles.has_induced_biclique, c6, 2)
    freeze("biclique2_in_petersen", "has_induced_biclique", oracles.has_induced_biclique, petersen, 2)
    freeze("one_join_in_c5", "has_proper_one_join", oracles.has_proper_one_join, c5)
    freeze("c5_in_petersen", "induced_in", oracles.induced_in, c5, petersen)
    freeze("c6_in_heawood", "induced_in", oracles.induced_in, c6, nx.heawood_graph())
    for t in (1, 2, 3):
        hexes = nx.hexagonal_lattice_graph(t, t)
        freeze(f"wall_{t}_counts", "hexagonal_lattice_graph",
               lambda h: [h.number_of_nodes(), h.number_of_edges()], hexes)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps({"values": entries}, indent=1) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
