"""Write a seeded random system as a JSON document.

    python scripts/make_fixture.py --seed 2024 --n 8 --m 4 --tnorm min out.json
"""
import argparse

from frel import TNormKind, random_system
from frel.io import SystemDocument, save_document


def main():
    p = argparse.ArgumentParser()
    p.add_argument("out")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--tnorm", default="min", choices=[k.value for k in TNormKind])
    p.add_argument("--grid-step", type=float, default=0.05)
    args = p.parse_args()
    S = random_system(args.seed, args.n, args.m, TNormKind(args.tnorm), args.grid_step)
    save_document(SystemDocument.from_system(S), args.out)
    print(f"wrote {args.n}x{args.m} {args.tnorm} system (seed {args.seed}) to {args.out}")


if __name__ == "__main__":
    main()
