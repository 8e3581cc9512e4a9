"""Run every lemma suite and both pipelines over the curated corpus; write one JSON report.

    python scripts/run_suites.py --trials 100 --seed 1 --out results.json
"""
import argparse
import json
import time

from twdecomp.harness import LEMMAS, PIPELINES, corpus_t, curated_corpus, verify_lemma


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--t", type=int, default=3, help="smallest t tried for pipeline runs")
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    suites = []
    for name in sorted(LEMMAS):
        t0 = time.perf_counter()
        rep = verify_lemma(name, args.trials, args.seed)
        row = rep.to_json()
        row["seconds"] = round(time.perf_counter() - t0, 3)
        suites.append(row)
        print(f"{name:36s} {rep.passed:4d}/{rep.trials} unknown {rep.unknown}  {row['seconds']}s")

    pipelines = []
    for which, run in sorted(PIPELINES.items()):
        for gname, g in curated_corpus(which):
            t = corpus_t(g, args.t)
            rep = run(g, t)
            pipelines.append({"pipeline": which, "graph": gname, "t": t, **rep.to_json()})
        verdicts = [p["verdict"] for p in pipelines if p["pipeline"] == which]
        print(f"pipeline {which:27s} {verdicts.count('ok'):4d}/{len(verdicts)} ok")

    blob = json.dumps({"seed": args.seed, "trials": args.trials, "suites": suites, "pipelines": pipelines},
                      indent=1, sort_keys=True)
    if args.out == "-":
        print(blob)
    else:
        with open(args.out, "w") as fh:
            fh.write(blob + "\n")


if __name__ == "__main__":
    main()
