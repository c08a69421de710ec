#!/usr/bin/env python3
"""Run the algebra-vs-combinatorics cross-checks over a seeded random corpus.

For every instance: the closed-form H class count per operator is compared
against the matching bipartition count, and the N pair count against the
residue-valid multipartition inventory (where a kind exists for the
uniformity). Prints one line per (instance, operator) and a final summary;
exits nonzero on any mismatch.

Usage: python scripts/run_crosschecks.py [--seed N] [--budget N]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from zerolap import connected_components, count_N_pairs, count_minimal_H  # noqa: E402
from zerolap.corpus import mixed_corpus  # noqa: E402
from zerolap.errors import BudgetExceededError  # noqa: E402
from zerolap import partitions  # noqa: E402

N_PAIR_KINDS = {
    (3, "laplacian"): partitions.TRIPARTITE,
    (4, "laplacian"): partitions.L_QUAD,
    (4, "signless"): partitions.SL_QUAD,
    (5, "laplacian"): partitions.PENTA,
}


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=77)
    ap.add_argument("--budget", type=int, default=200_000)
    args = ap.parse_args()

    failures = 0
    instances = mixed_corpus(args.seed, args.budget)
    for idx, h in enumerate(instances):
        for operator in ("laplacian", "signless"):
            rep = count_minimal_H(h, operator, args.budget)
            status = {True: "ok", False: "MISMATCH", None: "skipped"}[rep.crosscheck_matched]
            if rep.crosscheck_matched is False:
                failures += 1
            line = (
                f"[{idx:02d}] k={h.k} n={h.n} |E|={h.edge_count} {operator:9s} "
                f"H={rep.h_count} expected={rep.crosscheck_expected} ({status})"
            )
            kind = N_PAIR_KINDS.get((h.k, operator))
            if kind is not None:
                decomp = connected_components(h)
                try:
                    witnesses = sum(
                        len(partitions.enumerate_multipartitions(h, c, kind, "residue", args.budget))
                        for c, single in zip(decomp.components, decomp.singleton)
                        if not single
                    )
                    pairs = count_N_pairs(h, operator)
                    n_status = "ok" if witnesses == pairs else "MISMATCH"
                    if witnesses != pairs:
                        failures += 1
                    line += f"  Npairs={pairs} {kind}={witnesses} ({n_status})"
                except BudgetExceededError:
                    line += f"  Npairs {kind}: skipped (budget)"
            print(line)

    print(f"\n{len(instances)} instances checked, {failures} mismatches")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
