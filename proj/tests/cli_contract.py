#!/usr/bin/env python3
"""Exit-code and output contract for the command line tool."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]
failures = []


def run(*args, expect_code=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        failures.append(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect_code}\n"
            f"stderr: {proc.stderr.strip()}"
        )
    return proc


def check(condition, label):
    if not condition:
        failures.append(label)


def main():
    dot = run("show", "dihedral", "6", "--format", "dot").stdout
    check(dot.count("[label=") == 10, "show dihedral 6 dot: 10 nodes")
    check(dot.count(" -- ") == 10, "show dihedral 6 dot: 10 edges")
    check('v9 [label="Z6#0"]' in dot, "show dihedral 6 dot: Z6#0 node")
    check("v1 -- v9;" in dot and "v8 -- v9;" in dot,
          "Z6#0 adjacent to Z2#0 and Z3#0")

    shown = json.loads(run("show", "genq", "3", "--format", "json").stdout)
    check(shown["summary"]["star_graph"] is True, "show genq 3: star")
    check(shown["vertices"][1]["label"] == "Z2#0", "show genq 3: center label")

    tiny = json.loads(run("show", "cyclic", "1", "--format", "json").stdout)
    check(tiny["summary"]["vertex_count"] == 1 and tiny["edges"] == [],
          "show cyclic 1: single vertex, no edges")

    check(run("distance", "cyclic", "12", "1:0", "12:0").stdout.strip() == "3",
          "distance cyclic 12")
    check(run("distance", "genq", "4", "2:0", "2:0").stdout.strip() == "0",
          "distance genq 4 self")
    check(run("distance", "dicyclic", "3", "4:0", "3:0").stdout.strip() == "3",
          "distance dicyclic 3")
    run("distance", "cyclic", "12", "7:0", "12:0", expect_code=2)  # no order-7 vertex
    run("distance", "cyclic", "12", "badsel", "12:0", expect_code=2)

    with tempfile.TemporaryDirectory() as tmp:
        out_path = Path(tmp) / "d12.dot"
        run("export", "dihedral", "6", "--format", "dot", "--out", str(out_path))
        exported = out_path.read_text()
        check(exported == dot, "export matches show output")

        # DOT round trip: counts in the emitted DOT match the JSON view.
        graph = json.loads(run("show", "dihedral", "6", "--format", "json").stdout)
        check(exported.count("[label=") == len(graph["vertices"]),
              "dot round trip: vertex count")
        check(exported.count(" -- ") == len(graph["edges"]),
              "dot round trip: edge count")

        figures = run("audit", "--preset", "paper-figures")
        documented = [line for line in figures.stdout.splitlines()
                      if line.startswith("[documented-discrepancy-confirmed]")]
        check(len(documented) >= 3, "paper-figures: at least 3 documented lines")

        # Without --out, the selected format goes to stdout.
        streamed = json.loads(run("audit", "--preset", "paper-figures",
                                  "--format", "json").stdout)
        check(streamed["totals"]["mismatch"] == 0, "audit json on stdout")

        report_a = Path(tmp) / "a.json"
        report_b = Path(tmp) / "b.json"
        run("audit", "--preset", "paper-figures", "--format", "json", "--out", str(report_a))
        run("audit", "--preset", "paper-figures", "--format", "json", "--out", str(report_b))
        check(report_a.read_bytes() == report_b.read_bytes(),
              "audit report byte-identical across runs")
        parsed = json.loads(report_a.read_text())
        check(parsed["totals"]["mismatch"] == 0, "paper-figures: zero MISMATCH")

        spec_path = Path(tmp) / "tiny.spec"
        spec_path.write_text("cyclic 1..12\ndihedral 2..4\n")
        csv_path = Path(tmp) / "tiny.csv"
        run("audit", str(spec_path), "--format", "csv", "--out", str(csv_path))
        header = csv_path.read_text().splitlines()[0]
        check(header == "group,quantity,predicted,evidence,computed,status,discrepancy",
              "csv header")

    run("audit", "missing.spec", expect_code=2)
    run("show", "nosuchfamily", "3", expect_code=2)
    run("show", "dicyclic", "1", expect_code=2)  # builder precondition
    run("frobnicate", expect_code=2)

    # The full default corpus: exit 0 and zero MISMATCH.
    default = run("audit", "--preset", "default")
    check("mismatch=0" in default.stdout, "default audit: zero MISMATCH")
    check("formula coverage: complete" in default.stdout, "default audit: coverage")

    if failures:
        print("CLI contract failures:")
        for f in failures:
            print(" -", f)
        return 1
    print("CLI contract: all checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
