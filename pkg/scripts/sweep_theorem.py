"""Sweep the closed-form iterate formulas against the geometric pentagram map."""
import argparse

from pentagram.verify import verify_iterates


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[5, 6, 7, 8, 9])
    parser.add_argument("--k", type=int, default=5)
    parser.add_argument("--trials", type=int, default=25)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--x", action="store_true", help="check x-coordinates instead of y-parameters")
    args = parser.parse_args()
    for n in args.n:
        rep = verify_iterates([n], args.k, args.trials, args.seed, with_x=args.x)
        c = rep.counts()
        print(f"n={n}: {c['pass']} passed, {c['fail']} failed, {c['skipped-degenerate']} skipped")
        for f in rep.failures:
            print(f"  {f.name}: {f.witness}")


if __name__ == "__main__":
    main()
