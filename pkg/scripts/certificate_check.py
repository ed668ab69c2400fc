"""Diagonalize random matrices and replay every certificate."""
import argparse

from sylvester.axiom_verifier import MatrixSampler
from sylvester.matrix_forms import (diagonalize_local_artinian, diagonalize_skew, smith_form,
                                    verify_certificate)
from sylvester.ring_core import parse_ring

PRODUCERS = [
    ("GF(2)[t]/(t^3)", diagonalize_local_artinian),
    ("Z/(27)", diagonalize_local_artinian),
    ("GF(3)[t]/((t^2+1)^2)", diagonalize_local_artinian),
    ("GF(4)[t^;frob]", diagonalize_skew),
    ("GF(4)[t;frob]", diagonalize_skew),
    ("Z", smith_form),
    ("GF(3)[x]", smith_form),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--max-dim", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    bad = 0
    for spec, produce in PRODUCERS:
        R = parse_ring(spec)
        s = MatrixSampler(R, max_dim=args.max_dim, degree=2, seed=args.seed)
        fails = sum(not verify_certificate(produce(s.structured_matrix(s.dims(), s.dims())))
                    for _ in range(args.count))
        bad += fails
        print(f"{spec:<24} {produce.__name__:<28} {args.count - fails}/{args.count} replayed")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
