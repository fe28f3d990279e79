#!/usr/bin/env python3
"""Write the named fixture files into fixtures/ (run from the repo root)."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from facesyz import corpus
from facesyz.formats import write_complex, write_facestruct, write_fan, write_gkm
from facesyz.gkm import from_punctured_cube

HEADER = "# generated by scripts/make_fixtures.py; do not edit by hand\n"

MUTANT_NOTE = """\
# Rank-3 face structure with circle fixed components and a 4-ball orbit space.
# The top complex has column dimensions (2,3,3,0) in internal degree 0 and
# (2,3,3,1) in degree 1.  The published data fixes only dimensions and
# cohomology (k,0,k,0)/(k,0,0,0); the differential ranks are then forced to
# (1,2,0) and (1,2,1):
#   degree 0: H0=2-r0=1, H1=3-r0-r1=0, H2=3-r1-r2=1, H3=0      => r0=1 r1=2 r2=0
#   degree 1: H0=2-r0=1, H1=3-r0-r1=0, H2=3-r1-r2=0, H3=1-r2=0 => r0=1 r1=2 r2=1
# The matrices below are any exact-rational matrices realizing those ranks
# with d o d = 0; cohomology dimensions do not depend on the choice.
"""

SPHERE_NOTE = """\
# Two squares glued along all four edges: a sphere-like compact rank-2
# structure.  The top face is RAW with a two-dimensional last column; its
# cohomology (k,0,k) forces syzygy order 0, the torsion branch of the
# compact dichotomy.
"""


def main() -> None:
    out = Path(__file__).resolve().parent.parent / "fixtures"
    out.mkdir(exist_ok=True)

    fans = corpus.named_fan_fixtures()
    for name, f in sorted(fans.items()):
        (out / f"{name}.fan").write_text(HEADER + write_fan(f))

    structures = {
        "cube_2": corpus.cube_structure(2),
        "cube_3": corpus.cube_structure(3),
        "punctured_square": corpus.punctured_cube_structure(2),
        "punctured_cube_3": corpus.punctured_cube_structure(3),
        "punctured_cube_3_d2": corpus.punctured_cube_structure(3, 2),
        "vertexless": corpus.vertexless_structure(),
    }
    for name, s in sorted(structures.items()):
        (out / f"{name}.fs").write_text(HEADER + write_facestruct(s))
    (out / "mutant.fs").write_text(HEADER + MUTANT_NOTE + write_facestruct(corpus.mutant_structure()))
    (out / "sphere_like.fs").write_text(HEADER + SPHERE_NOTE + write_facestruct(corpus.sphere_like_structure()))

    for name, k in sorted(corpus.named_complexes().items()):
        (out / f"{name}.sc").write_text(HEADER + write_complex(k))

    (out / "p1.gkm").write_text(HEADER + write_gkm(corpus.gkm_p1()))
    (out / "hexagon.gkm").write_text(HEADER + write_gkm(from_punctured_cube(3)))
    (out / "square_punctured.gkm").write_text(HEADER + write_gkm(from_punctured_cube(2)))
    print(f"wrote fixtures to {out}")


if __name__ == "__main__":
    main()
