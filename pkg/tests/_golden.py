"""Golden corpus helpers shared by the CLI tests and the acceptance suite."""

import os
import pathlib
import shlex
import subprocess
import sys

HERE = pathlib.Path(__file__).resolve().parent / "golden"


def corpus():
    return sorted(HERE.glob("*.mv"))


def runs(spec):
    """(argv, expected exit) pairs declared in the file's ``# run:`` lines."""
    out = []
    for line in spec.read_text(encoding="utf-8").splitlines():
        if line.startswith("# run:"):
            cmd, _, code = line[len("# run:"):].rpartition("=>")
            out.append((shlex.split(cmd), int(code)))
    return out


def invoke(spec, argv, hashseed="0"):
    env = dict(os.environ, PYTHONHASHSEED=hashseed)
    proc = subprocess.run([sys.executable, "-m", "mvkit.cli", *argv, "--file", spec.name],
                          cwd=HERE, capture_output=True, text=True, env=env, timeout=300)
    return proc.returncode, proc.stdout, proc.stderr


def run_all(spec, hashseed="0"):
    result = []
    for argv, _ in runs(spec):
        code, out, _ = invoke(spec, argv, hashseed)
        result.append({"argv": argv, "exit": code, "stdout": out})
    return result
