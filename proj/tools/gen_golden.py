#!/usr/bin/env python3
"""Regenerate src/golden_tables.cpp from the reference CSVs in data/.

Usage: python3 tools/gen_golden.py  (run from the repository root)
"""
import csv
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent


def read_rows(name):
    with open(ROOT / "data" / name) as f:
        rows = [r for r in csv.reader(f) if r and not r[0].startswith("#")]
    return rows[1:]  # drop header


def main():
    orb = read_rows("table_orbifold.csv")
    cusp = read_rows("table_cusped.csv")
    out = ROOT / "src" / "golden_tables.cpp"
    with open(out, "w") as f:
        f.write("// Generated by tools/gen_golden.py from data/*.csv. Do not edit.\n")
        f.write('#include "twistcs/golden_tables.hpp"\n\n')
        f.write("namespace twistcs::golden {\n\n")
        f.write("const OrbifoldRow kOrbifoldTable[] = {\n")
        for n, k, o, c in orb:
            f.write(f"    {{{n}, {k}, {o}, {c}}},\n")
        f.write("};\n")
        f.write("const std::size_t kOrbifoldTableSize = "
                "sizeof(kOrbifoldTable) / sizeof(kOrbifoldTable[0]);\n\n")
        f.write("const CuspedRow kCuspedTable[] = {\n")
        for n, a, c in cusp:
            f.write(f"    {{{n}, {a}, {c}}},\n")
        f.write("};\n")
        f.write("const std::size_t kCuspedTableSize = "
                "sizeof(kCuspedTable) / sizeof(kCuspedTable[0]);\n\n")
        f.write("}  // namespace twistcs::golden\n")
    print(f"wrote {out} ({len(orb)} orbifold rows, {len(cusp)} cusped rows)")


if __name__ == "__main__":
    main()
