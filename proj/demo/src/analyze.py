"""Aggregate raw measurement histograms into the reported summary."""

import json
import os
import sys


def main():
    in_path, out_path = sys.argv[1], sys.argv[2]
    rows = []
    with open(in_path) as fh:
        for line in fh:
            if line.strip():
                rows.append(json.loads(line))

    totals = {}
    shots = 0
    for row in rows:
        shots += row["shots"]
        for bits, n in row["counts"].items():
            totals[bits] = totals.get(bits, 0) + n

    out_dir = os.path.dirname(out_path)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
    with open(out_path, "w") as fh:
        fh.write("jobs: %d\n" % len(rows))
        fh.write("total shots: %d\n" % shots)
        for bits in sorted(totals):
            fh.write("%s %d\n" % (bits, totals[bits]))


if __name__ == "__main__":
    main()
