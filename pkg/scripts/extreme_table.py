"""Print rk_k(c^i) for the extreme ranks of a local artinian ring.

    python3 scripts/extreme_table.py "GF(3)[t]/(t^4)" t
"""
import argparse

from sylvester.matrix_forms import RingMatrix
from sylvester.rank_functions import ArtinianExtreme
from sylvester.ring_core import parse_element, parse_ring


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("ring", nargs="?", default="GF(2)[t]/(t^4)")
    ap.add_argument("generator", nargs="?", default="t")
    args = ap.parse_args()
    R = parse_ring(args.ring)
    c = parse_element(R, args.generator)
    n, x = 0, R.one()
    while not x.is_zero():
        x, n = x * c, n + 1
    print("k \\ i  " + "  ".join(f"{i:>5}" for i in range(n + 1)))
    for k in range(1, n + 1):
        rk = ArtinianExtreme(R, k)
        x, row = R.one(), []
        for _ in range(n + 1):
            row.append(str(rk.evaluate(RingMatrix(R, 1, 1, ((x.value,),)))))
            x = x * c
        print(f"{k:<6} " + "  ".join(f"{v:>5}" for v in row))


if __name__ == "__main__":
    main()
