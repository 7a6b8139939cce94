import argparse, asyncio, importlib, json, sys
from typing import Dict, List, Optional, Sequence, Tuple

from rich import box
from rich.markup import escape
from rich.table import Table

# ===== config =====
import config
import term
from bijection import iterate
from comp_algebra import parse_composition
from dump_tables import census_rows, fk_rows, leaf_rows, write_table
from errors import CapExceeded, CompositionError, ForestError, OutOfRange, PathError
from lco import forest_from_json, forest_to_json, forest_to_path, path_to_forest
from orbits import (Universe, comp_orbit_of, comp_orbit_partition, orbit_of,
                    orbit_partition)
from path_core import check_cap, parse_path
from report import CheckResult

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


# =========================
# ====== CHECK API ========
# =========================
class CheckBase:
    name: str = "base"
    CAP: str = "ENUM_CAP"
    SIZE_OFFSET: int = 0

    def run(self, n: int) -> CheckResult:
        raise NotImplementedError


def parse_range(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a, b = (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise OutOfRange(f"range must look like a..b, got {text!r}") from None
    if a > b:
        raise OutOfRange(f"empty range {text!r}")
    return a, b


def _tag(*parts: str) -> str:
    return escape("".join(f"[{p}]" for p in parts))


# =========================
# ====== MAIN APP    ======
# =========================
class App:
    def __init__(self):
        self.checks: Dict[str, CheckBase] = {}

    # ---------- verification ----------
    def load_checks(self, names: Sequence[str]):
        for name in names:
            mod = importlib.import_module(f"checks.{name}")
            self.checks[name] = mod.CHECK_CLASS()

    def _sweep(self, name: str, lo: int, hi: int) -> List[CheckResult]:
        check = self.checks[name]
        results = []
        for n in range(lo, hi + 1):
            r = check.run(n)
            if not r.holds:
                term.err.print(f"[bold red]{_tag('verify', name)} n={n} violated:[/] {escape(r.describe())}")
            results.append(r)
        status = "[green]ok[/]" if all(r.holds for r in results) else "[bold red]FAILED[/]"
        term.err.print(f"{_tag('verify', name)} {lo}..{hi} {status}")
        return results

    async def _run_checks_once(self, plan: List[Tuple[str, int, int]]) -> List[List[CheckResult]]:
        tasks = [asyncio.create_task(asyncio.to_thread(self._sweep, name, lo, hi)) for name, lo, hi in plan]
        if not tasks:
            term.err.print("[bold red]Nothing to verify.[/]")
            return []
        return await asyncio.gather(*tasks)

    def plan_verify(self, target: str, span: Optional[str]) -> List[Tuple[str, int, int]]:
        names = list(config.CHECKS_TO_USE) if target == "all" else [target]
        if target != "all" and target not in config.CHECKS_TO_USE:
            raise OutOfRange(f"unknown verify target {target!r}")
        self.load_checks(names)
        plan = []
        for name in names:
            lo, hi = parse_range(span) if span else config.VERIFY_RANGES[name]
            check = self.checks[name]
            top, limit = hi + check.SIZE_OFFSET, getattr(config, check.CAP)
            if top > limit:
                raise CapExceeded(top, limit, what=f"{name} size")
            plan.append((name, lo, hi))
        return plan

    def cmd_verify(self, args) -> int:
        plan = self.plan_verify(args.target, args.range)
        sweeps = asyncio.run(self._run_checks_once(plan))
        targets = []
        for (name, lo, hi), results in zip(plan, sweeps):
            targets.append({
                "target": name,
                "range": [lo, hi],
                "holds": all(r.holds for r in results),
                "results": [r.to_dict() for r in results],
            })
        holds = all(t["holds"] for t in targets)
        term.out.out(json.dumps({"holds": holds, "targets": targets}, indent=2))
        return EXIT_OK if holds else EXIT_VIOLATION

    # ---------- paths ----------
    def cmd_map(self, args) -> int:
        if args.iterations < 1:
            raise OutOfRange(f"--iterations must be at least 1, got {args.iterations}")
        P = parse_path(args.path)
        term.out.out(iterate(P, args.iterations, inverse=args.g).steps)
        return EXIT_OK

    def cmd_orbit(self, args) -> int:
        if args.comp is not None:
            orbits = [[str(c) for c in comp_orbit_of(parse_composition(args.comp))]]
        elif args.cn is not None:
            check_cap(args.cn)
            orbits = [[str(c) for c in o] for o in comp_orbit_partition(args.cn)]
        elif args.all is not None:
            orbits = [[P.steps or "ε" for P in o] for o in orbit_partition(args.all, Universe(args.universe))]
        else:
            orbits = [[P.steps or "ε" for P in orbit_of(parse_path(args.path))]]
        for i, elements in enumerate(orbits):
            if i:
                term.out.out("")
            for e in elements:
                term.out.out(e)
            term.out.out(f"length={len(elements)}")
        return EXIT_OK

    def cmd_forest(self, args) -> int:
        if args.direction == "encode":
            term.out.out(forest_to_json(path_to_forest(parse_path(args.path or ""))))
        else:
            text = args.path if args.path is not None else sys.stdin.read()
            term.out.out(forest_to_path(forest_from_json(text)).steps)
        return EXIT_OK

    # ---------- tables ----------
    def cmd_table(self, args) -> int:
        if args.name == "fk-series":
            header, rows = config.CSV_HEADER, fk_rows(args.k, args.order)
        elif args.name == "leaf-table":
            header, rows = config.CSV_HEADER, leaf_rows(args.max_n)
        else:
            header, rows = config.CENSUS_HEADER, census_rows(args.n)

        if args.out:
            write_table(args.out, header, rows)
        elif args.format == "text":
            self.render_table(args.name, header, rows)
        else:
            term.out.out(",".join(header))
            for row in rows:
                term.out.out(",".join(map(str, row)))
        return EXIT_OK

    def render_table(self, title: str, header: Sequence[str], rows: List[Tuple[int, ...]]):
        table = Table(title=title, box=box.MINIMAL_HEAVY_HEAD, show_lines=False)
        for col in header:
            table.add_column(col.upper(), justify="right")
        for row in rows:
            table.add_row(*map(str, row))
        if not rows:
            table.add_row(*("-" for _ in header))
        table.caption = f"Rows: {len(rows)}"
        term.table_console().print(table)

    # ---------- dispatch ----------
    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        args = build_parser().parse_args(argv)
        if args.max_size is not None:
            for name in config.CAPS:
                setattr(config, name, args.max_size)
        handler = getattr(self, f"cmd_{args.command}")
        try:
            return handler(args)
        except CapExceeded as e:
            term.err.print(f"[bold red]{escape(str(e))}[/]")
            return EXIT_CAP
        except (PathError, CompositionError, ForestError, OutOfRange) as e:
            term.err.print(f"[bold red]error:[/] {escape(str(e))}")
            return EXIT_INPUT


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="main.py", description="Dyck path bijection F: maps, orbits, forests, checks and tables.")
    p.add_argument("--max-size", type=int, default=None, help=f"override every size cap (enumeration default {config.ENUM_CAP})")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("map", help="apply F or its inverse G")
    way = m.add_mutually_exclusive_group()
    way.add_argument("--f", action="store_true", default=True, help="apply F (default)")
    way.add_argument("--g", action="store_true", help="apply G")
    m.add_argument("--iterations", type=int, default=1)
    m.add_argument("path")

    o = sub.add_parser("orbit", help="list F-orbits")
    pick = o.add_mutually_exclusive_group(required=True)
    pick.add_argument("path", nargs="?")
    pick.add_argument("--all", type=int, metavar="N", help="every orbit of Dyck N-paths")
    pick.add_argument("--cn", type=int, metavar="N", help="every f_comp-orbit of C_N")
    pick.add_argument("--comp", metavar="C", help="f_comp-orbit of one composition, e.g. 2,1")
    o.add_argument("--universe", choices=[u.value for u in Universe], default=Universe.ALL.value)

    f = sub.add_parser("forest", help="path <-> LCO forest JSON")
    f.add_argument("direction", choices=["encode", "decode"])
    f.add_argument("path", nargs="?", help="path to encode; decode reads JSON from stdin when omitted")

    v = sub.add_parser("verify", help="run a check over a range of n")
    v.add_argument("target", choices=list(config.CHECKS_TO_USE) + ["all"])
    v.add_argument("range", nargs="?", help="a..b (default per target)")

    t = sub.add_parser("table", help="emit a table as CSV or aligned text")
    t.add_argument("name", choices=["fk-series", "leaf-table", "orbit-census"])
    t.add_argument("--k", type=int, default=0)
    t.add_argument("--order", type=int, default=12)
    t.add_argument("--max-n", type=int, default=8)
    t.add_argument("--n", type=int, default=4)
    t.add_argument("--format", choices=["csv", "text"], default="csv")
    t.add_argument("--out", help="write CSV to this file instead of stdout")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    return App().run(argv)


# =========================
# ========= BOOT ==========
# =========================
if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        term.err.print("\nInterrupted.")
        sys.exit(130)
