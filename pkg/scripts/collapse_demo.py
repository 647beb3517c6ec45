"""Iterate an axis-aligned polygon and report when its vertices fall onto two lines."""
import argparse
import random

from pentagram.errors import DegeneratePolygon
from pentagram.exact import rat_str
from pentagram.polygon import every_other_collinear, iterate, make_axis_aligned, random_axis_aligned


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4, help="half the number of vertices")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--scale", default=None, help="monodromy scale for a twisted polygon")
    parser.add_argument("--octagon", action="store_true", help="use the symmetric worked octagon")
    args = parser.parse_args()
    if args.octagon:
        A = make_axis_aligned((3, 2, -3, -2), (1, 2, -1, -2), None, (1, 1))
    else:
        A = random_axis_aligned(args.n, random.Random(args.seed), scale=args.scale)
    n = A.n // 2
    steps = n - 2 if A.is_closed() else n - 1
    print(f"predicted collapse after {steps} steps")
    for step in range(0, steps + 1):
        try:
            B = iterate(A, step)
        except DegeneratePolygon as exc:
            print(f"T^{step}: degenerate ({exc})")
            break
        odd, even = every_other_collinear(B)
        print(f"T^{step}: odd collinear={odd} even collinear={even}")
        if step == 0:
            print("  " + " ".join("(" + ",".join(rat_str(c) for c in v.xy()) + ")" for v in B.vertices))


if __name__ == "__main__":
    main()
