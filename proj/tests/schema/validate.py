"""Runs the CLI and validates every JSON document against docs/schema."""

import argparse
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        Draft202012Validator.check_schema(doc)
        schemas[doc["$id"]] = doc
    registry = Registry().with_resources(
        (sid, Resource.from_contents(doc)) for sid, doc in schemas.items()
    )
    return schemas, registry


def run(cli, args, expect):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        sys.exit(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return json.loads(proc.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--schemas", required=True, type=pathlib.Path)
    ap.add_argument("--work", required=True, type=pathlib.Path)
    opts = ap.parse_args()
    opts.work.mkdir(parents=True, exist_ok=True)

    schemas, registry = load_registry(opts.schemas)

    def validator(name):
        return Draft202012Validator(schemas[f"urn:affverma:{name}"], registry=registry)

    failures = []

    def check(name, doc, label):
        errors = sorted(validator(name).iter_errors(doc), key=lambda e: list(e.path))
        for e in errors[:5]:
            failures.append(f"{label}: {list(e.path)}: {e.message[:200]}")
        print(f"{'ok ' if not errors else 'BAD'} {label}")

    for t in ("B", "D"):
        check("dump-algebra", run(opts.cli, ["dump-algebra", "--type", t, "--l", "4"], 0), f"dump-algebra {t}4")

    verify_cases = [
        (["verify", "all", "--l-range", "4..5"], 0),
        (["verify", "triality", "--l", "4"], 0),
        (["verify", "admissible", "--l", "6"], 0),
        (["verify", "singular", "--l", "4", "--strict"], 0),
        (["verify", "singular", "--type", "D", "--l", "4", "--fault", "corrupt-vD"], 1),
    ]
    for args, expect in verify_cases:
        doc = run(opts.cli, args, expect)
        check("verify-report", doc, " ".join(args))
        if expect == 1:
            residuals = [g for r in doc["results"] for g in r.get("generators", []) if g["residual"]]
            if not residuals:
                failures.append("corrupt-vD run carries no residual")
            for g in residuals:
                check("state", g["residual"], f"residual of {g['generator']}")

    listing = opts.work / "listing.txt"
    listing.write_text("")
    proc = subprocess.run([opts.cli, "trace", "--tests", str(listing), "--no-run", "--out-dir", str(opts.work)],
                          capture_output=True, text=True)
    if proc.returncode != 1:
        failures.append(f"trace over an empty listing should report holes, exit {proc.returncode}")
    check("trace", json.loads((opts.work / "trace.json").read_text()), "trace (empty listing)")

    if failures:
        print("\n".join(failures))
        sys.exit(1)


if __name__ == "__main__":
    main()
