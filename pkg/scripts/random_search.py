"""Sweep random monomial presentations for noteworthy specimens.

Usage: python3 scripts/random_search.py [--samples N] [--seed S] [--hunt KIND]

Hunts:
  fg-false   presentations whose cohomology is not finitely generated,
             printed with the certifying eventually periodic walk
  parity     walks with an admissible even-remainder prefix that fail
             to extend (counterexamples to the naive parity closure)
  summary    no specimens, just the verdict method distribution

Specimens print as one JSON presentation per line, ready to be saved
as fixture files.
"""

import argparse
import json
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from yoneda_cps.decide import analyze
from yoneda_cps.graph import build_marked_graph
from yoneda_cps.monomial import MonomialIdeal
from yoneda_cps.presentation import make_presentation, serialize_presentation
from yoneda_cps.walks import (WalkCapExceeded, canonical_anchored,
                              enumerate_walks)

ALPHABET = "xyzw"


def random_presentation(rng, max_gens, max_relations, max_degree):
    names = list(ALPHABET[: rng.randint(1, max_gens)])
    rels = []
    for _ in range(rng.randint(1, max_relations)):
        deg = rng.randint(2, max_degree)
        rels.append(tuple(rng.choice(names) for _ in range(deg)))
    return make_presentation(names, rels)


def parity_specimens(g, max_len=4, cap=20000):
    """(walk, n) pairs where the naive parity closure fails."""
    found = []
    for s in range(2, max_len + 1):
        for vs in enumerate_walks(g, s, cap=cap):
            if canonical_anchored(g, vs) is not None:
                continue
            for n in range(1, s):
                if n % 2 == 0 or (s - n) % 2 == 0:
                    if canonical_anchored(g, vs[: n + 1]) is not None:
                        found.append((vs, n))
    return found


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--hunt", choices=("fg-false", "parity", "summary"),
                        default="summary")
    parser.add_argument("--max-gens", type=int, default=3)
    parser.add_argument("--max-relations", type=int, default=4)
    parser.add_argument("--max-degree", type=int, default=4)
    parser.add_argument("--cap", type=int, default=200000,
                        help="walk enumeration ceiling per sample")
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    methods = {}
    skipped = 0
    hits = 0
    for _ in range(args.samples):
        p = random_presentation(rng, args.max_gens, args.max_relations,
                                args.max_degree)
        if args.hunt == "parity":
            g = build_marked_graph(MonomialIdeal(p))
            try:
                specimens = parity_specimens(g)
            except WalkCapExceeded:
                skipped += 1
                continue
            if specimens:
                hits += 1
                vs, n = specimens[0]
                walk = "->".join("".join(v) for v in vs)
                print(f"# walk {walk} inadmissible, prefix n={n} admissible")
                print(json.dumps(serialize_presentation(p)))
            continue
        try:
            rep = analyze(p, cap=args.cap)
        except WalkCapExceeded:
            skipped += 1
            continue
        methods[rep.fg.method] = methods.get(rep.fg.method, 0) + 1
        if args.hunt == "fg-false" and not rep.fg.value:
            hits += 1
            witness = rep.fg.to_json()["witness"]
            print(f"# method {rep.fg.method}, witness {witness}")
            print(json.dumps(serialize_presentation(p)))
    print(f"# {args.samples} samples, {skipped} over the cap",
          file=sys.stderr)
    if args.hunt == "summary":
        for method, count in sorted(methods.items(), key=lambda kv: -kv[1]):
            print(f"{method:32s} {count}")
    else:
        print(f"# {hits} specimens", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
