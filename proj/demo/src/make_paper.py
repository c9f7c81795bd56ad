"""Render the analysis summary as the tables section of the write-up."""

import os
import sys


def main():
    in_path, out_path = sys.argv[1], sys.argv[2]
    with open(in_path) as fh:
        lines = [line.rstrip("\n") for line in fh]

    out_dir = os.path.dirname(out_path)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)
    with open(out_path, "w") as fh:
        fh.write("# Measurement summary\n\n")
        fh.write("| outcome | count |\n|---|---|\n")
        for line in lines:
            if line and line[0] in "01":
                bits, n = line.split()
                fh.write("| `%s` | %s |\n" % (bits, n))


if __name__ == "__main__":
    main()
