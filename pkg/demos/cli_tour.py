#!/usr/bin/env python3
"""Drive the command-line interface the way a shell user would: analyze
one file, gate sections, switch formats, and run the corpus command
into an output directory."""

import subprocess
import sys
import tempfile
from pathlib import Path

from powertext import defaults

SAMPLE = """\
Act now and save big! This exclusive deal is guaranteed, proven, and
completely risk free. The secret sale ends tomorrow, so do not miss
your last chance to win a marvelous bonus prize.
"""


def run(*args: str) -> subprocess.CompletedProcess:
    cmd = [sys.executable, "-m", "powertext", *args]
    print(f"$ powertext {' '.join(args)}")
    proc = subprocess.run(cmd, capture_output=True, text=True)
    print(proc.stdout if proc.stdout else f"(exit {proc.returncode})")
    return proc


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        sample = Path(tmp) / "ad.txt"
        sample.write_text(SAMPLE, encoding="utf-8")

        run("analyze", str(sample))
        run("analyze", str(sample), "--sections", "power", "--format", "structured")

        out_dir = Path(tmp) / "reports"
        manifest = defaults.data_path(defaults.CORPUS_MANIFEST_FILE)
        run("corpus", str(manifest), "--format", "structured", "--out", str(out_dir))
        print("files written by the corpus command:")
        for path in sorted(out_dir.iterdir()):
            print(f"  {path.name:22s} {path.stat().st_size:6d} bytes")


if __name__ == "__main__":
    main()
