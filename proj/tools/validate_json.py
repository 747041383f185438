#!/usr/bin/env python3
"""Validate JSON read from a file (or stdin) against a schema; exit 1 on mismatch."""
import argparse
import json
import sys

import jsonschema


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("schema")
    ap.add_argument("document", nargs="?", default="-")
    args = ap.parse_args()
    with open(args.schema, encoding="utf-8") as f:
        schema = json.load(f)
    if args.document == "-":
        doc = json.load(sys.stdin)
    else:
        with open(args.document, encoding="utf-8") as f:
            doc = json.load(f)
    try:
        jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)
    except jsonschema.ValidationError as e:
        print(f"invalid: {e.message} at {list(e.absolute_path)}", file=sys.stderr)
        return 1
    # round trip: re-encoding and decoding gives the same document
    if json.loads(json.dumps(doc)) != doc:
        print("invalid: document does not round-trip", file=sys.stderr)
        return 1
    print("valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
