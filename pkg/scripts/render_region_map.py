#!/usr/bin/env python3
"""Render the (p, q) region map: CSV plus SVG.

Usage:
    python3 scripts/render_region_map.py [OUTDIR] [STEP]

Defaults: OUTDIR=out, STEP=0.05, window [-3, 3]^2.
"""

import pathlib
import sys

from wconvexity.raster import build_raster, write_csv, write_svg


def main(argv):
    outdir = pathlib.Path(argv[1]) if len(argv) > 1 else pathlib.Path("out")
    step = float(argv[2]) if len(argv) > 2 else 0.05
    outdir.mkdir(parents=True, exist_ok=True)
    raster = build_raster(-3.0, 3.0, -3.0, 3.0, step)
    csv_path = outdir / "region_map.csv"
    svg_path = outdir / "region_map.svg"
    write_csv(raster, csv_path)
    write_svg(raster, svg_path)
    counts = {}
    for _, _, cls in raster.cells:
        counts[cls.value] = counts.get(cls.value, 0) + 1
    print(f"wrote {csv_path} and {svg_path}")
    print(f"cells: {len(raster.cells)} -> {counts}")


if __name__ == "__main__":
    main(sys.argv)
