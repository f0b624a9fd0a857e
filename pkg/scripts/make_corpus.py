"""Regenerate the graph6 corpora in tests/data with nauty's geng.

    python3 scripts/make_corpus.py --geng /path/to/geng

geng is not bundled; build it from a nauty source tree (``./configure && make
geng``). Each file starts with the one-node graph ``@`` where geng cannot emit
it for the requested filter.
"""

from __future__ import annotations

import argparse
import subprocess
from pathlib import Path

from eulermod4.graph import is_eulerian
from eulermod4.graphio import parse_graph6

DATA = Path(__file__).resolve().parent.parent / "tests" / "data"


def geng(exe: str, *args: str) -> list[str]:
    out = subprocess.run([exe, "-q", *args], check=True, capture_output=True, text=True).stdout
    return out.split()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--geng", default="geng")
    ap.add_argument("--out", type=Path, default=DATA)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    # connected, min degree 2, then keep the even-degree ones
    euler = ["@"]
    for n in range(3, 11):
        euler += [s for s in geng(args.geng, "-c", "-d2", str(n)) if is_eulerian(parse_graph6(s))]
    files = {
        "eulerian_connected_p1-10.g6": euler,
        "connected_p1-7.g6": ["@"] + [s for n in range(2, 8) for s in geng(args.geng, "-c", str(n))],
        "connected_q1-9.g6": [s for n in range(2, 11) for s in geng(args.geng, "-c", str(n), "1:9")],
        "all_p1-8.g6": [s for n in range(1, 9) for s in geng(args.geng, str(n))],
    }
    for name, lines in files.items():
        (args.out / name).write_text("".join(s + "\n" for s in lines))
        print(f"{name}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
