import csv
import os
from typing import Iterable, List, Sequence, Tuple

import config
import term
from analytics import integer_coeffs, lco_leaf_table, series_fk
from orbits import orbit_census


def write_table(path: str, header: Sequence[str], rows: Iterable[Sequence[int]]) -> int:
    """
    Write one CSV table (header row first) and return the number of data rows.
    Parent directories are created as needed.
    """
    folder = os.path.dirname(path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    count = 0
    with open(path, "w", encoding="utf-8", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow(row)
            count += 1
    term.err.print(f"\\[dump_tables] Saved {count} rows -> {path}")
    return count


def fk_rows(k: int, order: int) -> List[Tuple[int, int, int]]:
    F, _, _ = series_fk(k, order)
    return [(n, k, c) for n, c in enumerate(integer_coeffs(F, order))]


def leaf_rows(max_n: int) -> List[Tuple[int, int, int]]:
    table = lco_leaf_table(max_n)
    return [(n, k, c) for n in sorted(table) for k, c in enumerate(table[n], start=1)]


def census_rows(n: int) -> List[Tuple[int, int, int]]:
    return [(n, length, count) for length, count in orbit_census(n).items()]


def dump_all(folder: str = config.TABLES_DIR, order: int = 16, max_k: int = 4,
             leaf_n: int = 8, census_n: int = 8) -> int:
    """The standard set: F_k coefficients for k <= max_k, the leaf table, orbit censuses for n <= census_n."""
    fk = [row for k in range(max_k + 1) for row in fk_rows(k, order)]
    census = [row for n in range(census_n + 1) for row in census_rows(n)]
    total = write_table(os.path.join(folder, "fk_series.csv"), config.CSV_HEADER, fk)
    total += write_table(os.path.join(folder, "leaf_table.csv"), config.CSV_HEADER, leaf_rows(leaf_n))
    total += write_table(os.path.join(folder, "orbit_census.csv"), config.CENSUS_HEADER, census)
    return total


def main():
    # CLI usage: writes the standard tables under config.TABLES_DIR
    dump_all()


if __name__ == "__main__":
    main()
