"""Restrict the Laurent extremes of GF(4)[t^;frob] to its center GF(2)[s^] and compare."""
import argparse

from sylvester.axiom_verifier import MatrixSampler
from sylvester.ideal_structure import parse_descriptor
from sylvester.rank_functions import (DedekindExtreme, DedekindGeneric, LaurentExtreme,
                                      LaurentGeneric, eval_matrix, restrict_to_center)
from sylvester.ring_core import center, parse_ring

# central generator upstairs -> its preimage in the center (s = t^2)
PAIRS = {"t^2+1": "s+1", "t^4+t^2+1": "s^2+s+1"}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    R = parse_ring("GF(4)[t^;frob]")
    S = center(R).ring
    pairs = [(LaurentGeneric(R), DedekindGeneric(S))]
    for p, q in PAIRS.items():
        dp, dq = parse_descriptor(f"central:{p}", R), parse_descriptor(f"central:{q}", S)
        pairs += [(LaurentExtreme(R, dp, k), DedekindExtreme(S, dq, k)) for k in (1, 2, 3)]
    s = MatrixSampler(S, max_dim=4, seed=args.seed)
    mats = [s.structured_matrix(s.dims(), s.dims()) for _ in range(args.count)]
    bad = 0
    for lau, ded in pairs:
        r = restrict_to_center(lau)
        miss = sum(eval_matrix(r, A) != eval_matrix(ded, A) for A in mats)
        bad += miss
        print(f"{lau.text():<32} -> {ded.text():<28} {len(mats) - miss}/{len(mats)} agree")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
