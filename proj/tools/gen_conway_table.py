#!/usr/bin/env python3
"""Regenerate include/gcl/conway_table.hpp from the Conway polynomial
database bundled with the `galois` Python package (Lubeck's tables).

Entries: odd p, p^k <= 2^22, and p <= 2048 when k == 1.
"""
import os
import sqlite3
import sys

import galois._databases as db

LIMIT = 1 << 22


def main(out_path):
    con = sqlite3.connect(os.path.join(os.path.dirname(db.__file__), "conway_polys.db"))
    rows = con.execute("select characteristic, degree, nonzero_degrees, nonzero_coeffs "
                       "from polys order by characteristic, degree").fetchall()
    lines = []
    for p, k, degs, coeffs in rows:
        if p == 2 or p ** k > LIMIT or (k == 1 and p > 2048):
            continue
        c = [0] * (k + 1)
        for e, v in zip(map(int, degs.split(",")), map(int, coeffs.split(","))):
            c[e] = v
        lines.append("    {%d, %d, {%s}}," % (p, k, ", ".join(map(str, c))))
    with open(out_path, "w") as f:
        f.write("// Generated by tools/gen_conway_table.py. Do not edit.\n")
        f.write("#pragma once\n\n#include <cstdint>\n\n")
        f.write("namespace gcl::detail {\n\ninline constexpr std::uint32_t kConwayMaxDegree = 23;\n\n")
        f.write("struct ConwayEntry {\n  std::uint32_t p;\n  std::uint32_t n;\n"
                "  std::uint32_t coeffs[kConwayMaxDegree + 1];  // c0 .. cn, monic; zero padded\n};\n\n")
        f.write("inline constexpr std::uint32_t kConwayTableLimit = %d;\n\n" % LIMIT)
        f.write("inline const ConwayEntry kConwayTable[] = {\n")
        f.write("\n".join(lines))
        f.write("\n};\n\n}  // namespace gcl::detail\n")
    print(len(lines), "entries")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/gcl/conway_table.hpp")
