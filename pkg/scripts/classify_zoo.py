#!/usr/bin/env python3
"""Print the classification table for all built-in channels."""

from bathdd import builtin, classify, to_superoperator
from bathdd.zoo import names

def main() -> int:
    cols = ("name", "dim_fixed", "dim_recurrent", "ergodic", "mixing",
            "irreducible", "dfs_free", "cycle_lengths")
    rows = []
    for name in names():
        c = classify(to_superoperator(builtin(name).channel), name=name)
        rec = c.to_record()
        rows.append([str(rec[k]) for k in cols])
    widths = [max(len(c), *(len(r[i]) for r in rows)) for i, c in enumerate(cols)]
    print("  ".join(c.ljust(w) for c, w in zip(cols, widths)))
    for r in rows:
        print("  ".join(v.ljust(w) for v, w in zip(r, widths)))
    return 0

if __name__ == "__main__":
    raise SystemExit(main())
