"""Validate one CLI JSON output file against the shipped schema."""
import json
import sys

import jsonschema


def main():
    schema_path, doc_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    with open(doc_path) as f:
        doc = json.load(f)
    jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)
    print("valid:", doc_path)


if __name__ == "__main__":
    main()
