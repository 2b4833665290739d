#!/usr/bin/env python3
"""Writes an aligned nucleotide FASTA evolved along a random tree.

Used to regenerate tests/data/synthetic_35.fasta:
    python3 tools/make_synthetic_fasta.py > tests/data/synthetic_35.fasta
"""
import argparse
import random


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--taxa", type=int, default=35)
    parser.add_argument("--length", type=int, default=90)
    parser.add_argument("--rate", type=float, default=0.03)
    parser.add_argument("--seed", type=int, default=20071)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    root = [rng.choice("ACGT") for _ in range(args.length)]
    pool = [root]
    while len(pool) < args.taxa:
        parent = pool.pop(rng.randrange(len(pool)))
        for _ in range(2):
            child = [rng.choice("ACGT") if rng.random() < args.rate else c for c in parent]
            pool.append(child)
    rng.shuffle(pool)
    for i, seq in enumerate(pool):
        print(f">taxon_{i + 1:02d} synthetic")
        text = "".join(seq)
        for k in range(0, len(text), 60):
            print(text[k:k + 60])


if __name__ == "__main__":
    main()
