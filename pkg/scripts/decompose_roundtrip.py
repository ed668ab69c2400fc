"""Mix random extremes over Z, then recover the weights from the rank values alone."""
import argparse
import random

from sylvester.axiom_verifier import random_convex
from sylvester.decomposition import RankOracle, decompose_global
from sylvester.ideal_structure import parse_descriptor
from sylvester.rank_functions import Bounds, Convex, DedekindGeneric, extreme_set
from sylvester.ring_core import parse_ring


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ring", default="Z")
    ap.add_argument("--count", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    R = parse_ring(args.ring)
    bounds = Bounds(max_prime=5, max_k=3)
    ex = extreme_set(R, bounds)
    cands = sorted({e.ideal.text() for e in ex if hasattr(e, "ideal")})
    descs = [parse_descriptor(c, R) for c in cands]
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.count):
        rk = random_convex(ex, rng, max_terms=4)
        want = {}
        for c, e in (rk.terms if isinstance(rk, Convex) else ((1, rk),)):
            if not isinstance(e, DedekindGeneric):
                want[(e.ideal.text(), e.k)] = want.get((e.ideal.text(), e.k), 0) + c
        res = decompose_global(RankOracle.of(rk), descs, depth=3, complete=True)
        ok = res.exact and res.coefficients == want
        failures += not ok
        print("ok " if ok else "BAD", rk.text())
    print(f"{args.count - failures}/{args.count} recovered exactly")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
