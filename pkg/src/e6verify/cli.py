"""Command line interface.

    e6verify verify <claim_id|all> [--json PATH] [--slow-cross-checks]
    e6verify census w_e6_order3 [--json PATH]
    e6verify export <lines27|hexagon|ag23> --out PATH
    e6verify list
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import report

log = logging.getLogger("e6verify")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="e6verify", description=__doc__.split("\n")[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check one claim or all of them")
    v.add_argument("claim", help="claim id or 'all' (see 'list')")
    v.add_argument("--json", type=Path, help="write the JSON report here")
    v.add_argument("--slow-cross-checks", action="store_true",
                   help="also run the exhaustive whole-group cross-checks")
    v.add_argument("--workers", type=int, default=1, help="processes for the W(E6) census")

    c = sub.add_parser("census", help="order-3 census of W(E6)")
    c.add_argument("target", choices=["w_e6_order3"])
    c.add_argument("--json", type=Path)
    c.add_argument("--workers", type=int, default=1)

    e = sub.add_parser("export", help="write a graph in DOT format")
    e.add_argument("graph", choices=report.GRAPHS)
    e.add_argument("--out", type=Path, required=True)

    sub.add_parser("list", help="list claim ids")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")

    if args.command == "list":
        for cid, (anchor, _) in sorted(report.CLAIMS.items()):
            print(f"{cid:<22} {anchor}")
        return 0

    if args.command == "verify":
        if args.claim != "all" and args.claim not in report.CLAIMS:
            parser.error(f"unknown claim id {args.claim!r}; choose from: all, " + ", ".join(sorted(report.CLAIMS)))
        opts = {"slow": args.slow_cross_checks, "workers": args.workers}
        certs = report.run(args.claim, opts)
        print(report.summary(certs))
        if args.json:
            args.json.write_text(report.dumps(report.report_dict(certs)), encoding="utf-8")
            log.info("wrote %s", args.json)
        return 0 if all(c.verdict == report.VERIFIED for c in certs) else 1

    if args.command == "census":
        rep = report.census_report(workers=args.workers)
        print(report.census_table(rep))
        if args.json:
            args.json.write_text(report.dumps(rep), encoding="utf-8")
        return 0

    if args.command == "export":
        try:
            path = report.export_graph(args.graph, args.out)
        except OSError as exc:
            print(f"e6verify: cannot write {args.out}: {exc}", file=sys.stderr)
            return 1
        print(path)
        return 0

    parser.error(f"unknown command {args.command}")  # pragma: no cover
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
