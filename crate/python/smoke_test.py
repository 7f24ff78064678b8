#!/usr/bin/env python3
"""Smoke test for the aslkit_py extension module.

Builds nothing itself: expects `cargo build -p aslkit-py` to have produced
target/debug/libaslkit_py.so. Copies the shared object under an importable
name and exercises the main entry points.
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / "debug" / "libaslkit_py.so",
        ROOT / "target" / "release" / "libaslkit_py.so",
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit("libaslkit_py.so not found; run `cargo build -p aslkit-py` first")
    tmp = Path(tempfile.mkdtemp(prefix="aslkit_py_"))
    shutil.copy(built, tmp / "aslkit_py.so")
    sys.path.insert(0, str(tmp))
    import aslkit_py

    return aslkit_py


def main():
    kit = load_module()

    b3 = kit.boolean(3)
    assert len(b3) == 8
    assert b3.is_distributive_type()
    assert b3.is_cohen_macaulay()
    assert b3.is_shellable() is True
    assert b3.is_vertex_decomposable() is True
    assert not b3.is_chordal()
    assert not b3.has_linear_resolution()

    inv = b3.ring_invariants()
    assert inv["cm"] and inv["gorenstein"] and inv["level"]
    assert inv["dim"] == inv["depth"] == 4

    d21 = kit.divisor(2, 1)
    assert d21.is_chordal() and d21.has_linear_resolution()

    diamond = kit.Poset("elements: a b c d\ncovers: a<b a<c b<d c<d\n")
    hochster = diamond.betti("hochster")
    koszul = diamond.betti("koszul")
    assert hochster == koszul == [(0, 0, 1), (1, 2, 1)]
    assert diamond.regularity() == 1

    lat = kit.birkhoff(kit.Poset("elements: x y\ncovers:\n"))
    assert len(lat) == 4  # order ideals of a 2-antichain

    assert len(kit.enumerate(4)) == 16

    report = json.loads(kit.verify("divposet", max_rank=3))
    assert report["suite"] == "divposet"
    assert report["passed"] == report["instances"] > 0
    assert report["failures"] == [] and report["inconclusive"] == []

    conj = json.loads(kit.verify("conjecture", facets="a b\nb c\na c\n"))
    assert conj["failures"] == []

    print("aslkit_py smoke test: all checks passed")


if __name__ == "__main__":
    main()
