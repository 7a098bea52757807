"""Regenerate expected/*.json from the corpus: python3 tests/golden/_regen.py"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent))
from _golden import HERE, corpus, run_all  # noqa: E402

if __name__ == "__main__":
    (HERE / "expected").mkdir(exist_ok=True)
    for spec in corpus():
        runs = run_all(spec)
        out = HERE / "expected" / (spec.stem + ".json")
        out.write_text(json.dumps(runs, indent=1, sort_keys=True) + "\n", encoding="utf-8")
        print(out.name, [r["exit"] for r in runs])
