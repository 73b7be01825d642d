"""
File formats and the competition command line
=============================================

Write one framework in both input formats, read it back, and drive the
``dungsolve`` command exactly as a competition harness would.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

from dungsolve import parse_apx, parse_tgf, serialize_apx, serialize_tgf
from dungsolve.generate import GeneratorConfig, generate

af = generate(GeneratorConfig(5, 0.3, seed=2))
tgf, apx = serialize_tgf(af), serialize_apx(af)
print(tgf)
print(apx)
assert parse_tgf(tgf) == parse_apx(apx) == af

workdir = Path(tempfile.mkdtemp())
(workdir / "af.tgf").write_text(tgf)
(workdir / "af.apx").write_text(apx)


def dungsolve(*argv):
    proc = subprocess.run([sys.executable, "-m", "dungsolve.cli", *argv], capture_output=True, text=True)
    return proc.returncode, proc.stdout.strip(), proc.stderr.strip()


print(dungsolve())
print(dungsolve("--formats"))
print(dungsolve("--problems"))
for problem in ("SE-PR", "EE-CO", "EE-ST"):
    print(problem, dungsolve("-p", problem, "-f", str(workdir / "af.tgf"), "-fo", "tgf"))
print("DC-PR a", dungsolve("-p", "DC-PR", "-f", str(workdir / "af.apx"), "-fo", "apx", "-a", "a"))

# Errors exit with status 1, print nothing on stdout and one line on stderr.
print(dungsolve("-p", "SE-XY", "-f", str(workdir / "af.tgf"), "-fo", "tgf"))
