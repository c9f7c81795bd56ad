"""Submit every declared job to the quantum backend and collect histograms.

The backend endpoint comes from QREP_BACKEND_URL and the access token from
QPU_TOKEN, so the same script runs live, through a recording proxy, or
against an offline replay service without modification.
"""

import json
import os
import sys
import urllib.request


def post_json(url, payload):
    body = json.dumps(payload, sort_keys=True).encode()
    req = urllib.request.Request(
        url, data=body, headers={"Content-Type": "application/json"},
        method="POST")
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


def get_json(url):
    with urllib.request.urlopen(url) as resp:
        return json.loads(resp.read())


def main():
    problem_path, out_path = sys.argv[1], sys.argv[2]
    base = os.environ["QREP_BACKEND_URL"].rstrip("/")
    token = os.environ["QPU_TOKEN"]

    with open(problem_path) as fh:
        problem = json.load(fh)

    out_dir = os.path.dirname(out_path)
    if out_dir:
        os.makedirs(out_dir, exist_ok=True)

    with open(out_path, "w") as fh:
        for job in problem["jobs"]:
            submission = {
                "circuit": job["circuit"],
                "shots": job["shots"],
                "token": token,
            }
            submitted = post_json(base + "/jobs", submission)
            result = get_json(base + "/jobs/" + submitted["id"] + "/result")
            row = {
                "job": job["name"],
                "counts": result["counts"],
                "shots": result["shots"],
            }
            fh.write(json.dumps(row, sort_keys=True) + "\n")

    print("submitted %d jobs" % len(problem["jobs"]), file=sys.stderr)


if __name__ == "__main__":
    main()
