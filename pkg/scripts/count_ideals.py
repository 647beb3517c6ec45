"""Tabulate |J(P_k)|, |J(Q_k)| and |ASM(k)| with timings."""
import argparse
import time

from pentagram.combinat import build_P, build_Q, count_ideals, enumerate_asms


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kmax", type=int, default=5)
    args = parser.parse_args()
    print(f"{'k':>2} {'|J(P_k)|':>10} {'|J(Q_k)|':>10} {'|ASM(k)|':>10} {'seconds':>8}")
    for k in range(1, args.kmax + 1):
        start = time.perf_counter()
        p, q = count_ideals(build_P(k)), count_ideals(build_Q(k))
        asm = len(enumerate_asms(k)) if k <= 5 else float("nan")
        print(f"{k:>2} {p:>10} {q:>10} {asm:>10} {time.perf_counter() - start:>8.2f}")


if __name__ == "__main__":
    main()
