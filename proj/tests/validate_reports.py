"""Validates every JSON report kind the CLI writes against the published schema."""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def run(cli, *args, ok_codes=(0,)):
    proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
    if proc.returncode not in ok_codes:
        sys.exit(f"{' '.join(args)} exited {proc.returncode}: {proc.stderr}")
    return json.loads(proc.stdout)


def main():
    cli, schema_path, fixture = sys.argv[1:4]
    schema = json.loads(Path(schema_path).read_text(encoding="utf-8"))
    validator = jsonschema.Draft202012Validator(schema)

    with tempfile.TemporaryDirectory() as tmp:
        corpus = Path(tmp) / "corpus"
        shutil.copytree(fixture, corpus)
        (corpus / "NOTICE").unlink(missing_ok=True)
        target = Path(tmp) / "2012.txt"
        shutil.move(corpus / "barack_obama" / "2012.txt", target)
        common = ["--corpus", str(corpus), "--target", str(target)]

        reports = {
            "attribute burrows": run(cli, "attribute", *common),
            "attribute cosine per-author": run(cli, "attribute", *common, "--method", "cosine",
                                               "--profile-mode", "per-author", "--n-mfw", "50"),
            "attribute yule-spearman": run(cli, "attribute", *common, "--method", "yule-spearman"),
            "yule": run(cli, "yule", *common),
            "evaluate leave-one-out": run(cli, "evaluate", "--corpus", fixture, "--n-mfw", "40"),
            "evaluate yule-replication": run(cli, "evaluate", "--corpus", fixture, "--protocol",
                                             "yule-replication", "--method", "yule-rank-manhattan",
                                             "--trials", "4"),
            "evaluate zero trials": run(cli, "evaluate", "--corpus", fixture, "--protocol",
                                        "yule-replication", "--method", "yule-spearman", "--trials", "0"),
            "check": run(cli, "check", "--instances", "20"),
            "check failing": run(cli, "check", "--instances", "20", "--inject-duality-error", "0.01",
                                 ok_codes=(1,)),
        }

    failed = 0
    for name, doc in reports.items():
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        status = "ok" if not errors else "INVALID"
        print(f"{status}: {name}")
        for err in errors:
            print(f"  {list(err.path)}: {err.message}")
        failed += bool(errors)
    sys.exit(1 if failed else 0)


if __name__ == "__main__":
    main()
