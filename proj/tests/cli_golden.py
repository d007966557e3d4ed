"""Run the bgrlab golden corpus: exit codes, JSON schema validation, pinned fields."""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema


def pointer(doc, path):
    for part in path.lstrip("/").split("/"):
        doc = doc[int(part)] if isinstance(doc, list) else doc[part]
    return doc


def validator_for(schema, name):
    sub = {"$schema": schema["$schema"], "$defs": schema["$defs"], "$ref": f"#/$defs/{name}"}
    return jsonschema.Draft202012Validator(sub)


def run_case(binary, corpus, schema, case):
    stdin = None
    if "stdin" in case:
        stdin = (corpus / case["stdin"]).read_bytes()
    proc = subprocess.run([str(binary), *case["args"]], cwd=corpus, input=stdin,
                          capture_output=True, timeout=300)
    problems = []
    if proc.returncode != case["exit"]:
        problems.append(f"exit {proc.returncode}, expected {case['exit']}")
    if "stderr" in case and case["stderr"] not in proc.stderr.decode():
        problems.append(f"stderr lacks {case['stderr']!r}")
    if "schema" in case:
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            return problems + [f"stdout is not JSON: {e}"]
        for v in (jsonschema.Draft202012Validator(schema), validator_for(schema, case["schema"])):
            errors = sorted(v.iter_errors(doc), key=str)
            if errors:
                problems.append(f"schema: {errors[0].message}")
                break
        for path, want in case.get("expect", {}).items():
            try:
                got = pointer(doc, path)
            except (KeyError, IndexError, TypeError):
                problems.append(f"{path} missing")
                continue
            if got != want:
                problems.append(f"{path} = {got!r}, expected {want!r}")
    return problems


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("binary", type=pathlib.Path)
    parser.add_argument("--corpus", type=pathlib.Path, required=True)
    parser.add_argument("--schema", type=pathlib.Path, required=True)
    args = parser.parse_args()

    schema = json.loads(args.schema.read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    cases = json.loads((args.corpus / "commands.json").read_text())
    failed = 0
    for case in cases:
        problems = run_case(args.binary.resolve(), args.corpus, schema, case)
        status = "ok  " if not problems else "FAIL"
        print(f"{status} {case['name']}" + ("" if not problems else ": " + "; ".join(problems)))
        failed += bool(problems)
    print(f"{len(cases) - failed}/{len(cases)} corpus commands passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
