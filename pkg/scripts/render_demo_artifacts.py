#!/usr/bin/env python
"""Emit a small set of demo artifacts into ./out (or a directory argument):
the two classic size-6 meshes as SVG, a graph export each way, the bound
table, and a generation trace.
"""

import sys
from pathlib import Path

from bubblecross import bounds, drawing, graphs, mesh


def main() -> int:
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out")
    out.mkdir(parents=True, exist_ok=True)

    for a in (1, 2):
        spec = mesh.MeshSpec(6, a, (2, 4, 5, 3))
        path = out / f"mesh_6_{a}.svg"
        path.write_text(mesh.mesh_svg(spec), encoding="utf-8")
        print(f"{path}: {mesh.total_crossings(spec)} crossings")

    (out / "b4.dot").write_text(graphs.to_dot(graphs.build_bn(4)), encoding="utf-8")
    (out / "bprime6.json").write_text(graphs.to_json(graphs.build_bprime(6)), encoding="utf-8")
    (out / "bounds.csv").write_text(bounds.table_csv(bounds.bound_table(30)),
                                    encoding="utf-8", newline="")
    gens = drawing.run_generations(9, drawing.make_policy("fixed"))
    (out / "trace_to_9.csv").write_text(drawing.trace_csv(gens), encoding="utf-8", newline="")
    print(f"wrote graph, table and trace artifacts under {out}/")
    return 0


if __name__ == "__main__":
    sys.exit(main())
