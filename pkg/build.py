"""Script to build the project using Nuitka.

This should be run by developers to create a standalone executable.
To run the project from source:

    python -m markoff

The executable is then run once on `gbur 1`, which must print the
exact value of alpha*_1.

"""

import argparse
from itertools import cycle
import json
from pathlib import Path
from subprocess import Popen, PIPE, run
import sys
import time
import tomllib

ROOT = Path(__file__).parent
SMOKE_COMMAND = ["gbur", "1"]
SMOKE_MINPOLY = [49, 0, -480]


def read_project() -> dict:
    """Return the poetry section of pyproject.toml."""
    with (ROOT / "pyproject.toml").open("rb") as file:
        return tomllib.load(file)["tool"]["poetry"]


def nuitka_command(project: dict, onefile: bool) -> list[str]:
    """Return the Nuitka command line for the markoff package."""
    version = project["version"]
    return [
        sys.executable,
        "-m",
        "nuitka",
        "--onefile" if onefile else "--standalone",
        "--remove-output",
        "--lto=yes",
        "--python-flag=-m",
        "--python-flag=no_docstrings",
        "--include-data-dir=config=config",
        "--assume-yes-for-downloads",
        f"--product-name={project['name']}",
        f"--product-version={version}",
        f"--file-version={version}",
        "--output-filename=markoff",
        "markoff",
    ]


def executable(onefile: bool) -> Path:
    """Return the path of the built executable."""
    name = "markoff.exe" if sys.platform == "win32" else "markoff"
    return ROOT / name if onefile else ROOT / "markoff.dist" / name


def smoke_check(path: Path) -> bool:
    """Run the executable once and check its output."""
    process = run(
        [str(path), *SMOKE_COMMAND],
        cwd=path.parent,
        capture_output=True,
        encoding="utf-8",
    )
    if process.returncode != 0:
        print(f"{path.name} exited with {process.returncode}")
        print(process.stderr)
        return False

    try:
        output = json.loads(process.stdout)["output"]
    except (json.JSONDecodeError, KeyError):
        print(f"{path.name} printed unexpected output:")
        print(process.stdout)
        return False

    minpoly = output["alpha_star"]["minpoly"]
    if minpoly != SMOKE_MINPOLY:
        print(f"alpha*_1 has the minimal polynomial {minpoly}")
        return False

    return True


parser = argparse.ArgumentParser()
parser.add_argument(
    "--onefile", action="store_true", help="build a single executable file"
)
parser.add_argument(
    "--no-check", action="store_true", help="don't run the built executable"
)
args = parser.parse_args()
project = read_project()
progress_bar = cycle(r"-\|/")
name, version = project["name"], project["version"]
print(f"Building {name} {version} with Nuitka... /", end="")
process = Popen(
    nuitka_command(project, args.onefile),
    shell=False,
    stdout=PIPE,
    stderr=PIPE,
    encoding="utf-8",
)
sys.stdout.flush()
while (code := process.poll()) is None:
    print(f"\b{next(progress_bar)}", end="")
    sys.stdout.flush()
    try:
        time.sleep(1)
    except KeyboardInterrupt:
        process.terminate()
        break

if code == 0:
    print("\bDone")
    if not args.no_check:
        if smoke_check(executable(args.onefile)):
            print("The executable runs.")
        else:
            sys.exit(1)
else:
    stdout, stderr = process.communicate()
    print("\bFAILURE")
    if stdout:
        print(stdout)
    if stderr:
        print(stderr)
    sys.exit(1)
