"""Run every axiom check on the extremes of each ring and on random convex mixes."""
import argparse
import time

from sylvester.axiom_verifier import VerifierConfig, random_convex_family, verify_suite
from sylvester.rank_functions import Bounds, extreme_set
from sylvester.ring_core import parse_ring

RINGS = {
    "GF(2)[t]/(t^3)": Bounds(),
    "Z/(27)": Bounds(),
    "Z": Bounds(),
    "GF(3)[x]": Bounds(),
    "GF(4)[t^;frob]": Bounds(max_degree=2, max_k=2),
    "Mat(2,GF(3))": Bounds(),
    "GF(2)[t]/(t^2) x Z/(9)": Bounds(),
    "Mat(2,GF(2))[t]": Bounds(),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--mixes", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = VerifierConfig(trials=args.trials, max_dim=3, degree=2, seed=args.seed)
    bad = 0
    for spec, bounds in RINGS.items():
        R = parse_ring(spec)
        ex = extreme_set(R, bounds)
        fam = ex + (random_convex_family(ex, args.mixes, seed=args.seed) if len(ex) > 1 else [])
        t0 = time.perf_counter()
        res = verify_suite(fam, cfg)
        bad += len(res.violations)
        print(f"{spec:<26} {len(fam):>3} ranks  {len(res.violations):>3} violations  "
              f"{time.perf_counter() - t0:6.1f}s")
        for v in res.violations[:3]:
            print("   ", v.to_json())
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
