"""Validates a golden CLI output file against a JSON schema."""
import json
import sys

import jsonschema


def main() -> int:
    schema_path, golden_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    with open(golden_path, encoding="utf-8") as f:
        document = json.loads(f.read())
    jsonschema.Draft202012Validator.check_schema(schema)
    jsonschema.validate(document, schema, cls=jsonschema.Draft202012Validator)
    return 0


if __name__ == "__main__":
    sys.exit(main())
