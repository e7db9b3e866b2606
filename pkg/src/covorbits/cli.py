"""Command-line client for the orbit service.

Every subcommand is a thin wrapper around one HTTP endpoint.  By default the
requests are dispatched in-process against the bundled ASGI application, so no
server needs to be running; --server points the same client at a live
instance.

Exit codes: 0 success/clean, 1 usage error, 2 domain or data error,
3 verification failure.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys

import httpx

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; we reserve 2 for domain errors."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="covorbits",
        description="Nilpotent orbits: enumeration, covering duality, quasi-admissibility.",
    )
    parser.add_argument(
        "--server",
        default=os.environ.get("COVORBITS_SERVER"),
        help="base URL of a running service (default: run in-process)",
    )
    parser.add_argument("--json", action="store_true", help="emit canonical JSON")
    parser.add_argument("--jobs", type=int, default=1, help="worker count for sweeps")
    parser.add_argument("--bound", type=int, default=None,
                        help="override the degree cap (audits completeness bounds)")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed echoed into sweep configs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbits", parents=[], help="list orbits with specialness and admissible degrees")
    p.add_argument("family", help="classical family A, B, C or D")
    p.add_argument("rank", type=int)

    p = sub.add_parser("bv", help="covering duality images")
    p.add_argument("family")
    p.add_argument("rank", type=int)
    p.add_argument("degree", type=int)
    p.add_argument("partition", nargs="?", default=None,
                   help="dual-group orbit as comma-separated parts; omit for the full table")

    p = sub.add_parser("verify", help="sweep the duality-image admissibility theorem")
    p.add_argument("family")
    p.add_argument("rank_max", type=int)
    p.add_argument("degree_max", type=int)

    p = sub.add_parser("n0", help="orbits admissible at no degree vs. never-images")
    p.add_argument("family")
    p.add_argument("rank", type=int)

    p = sub.add_parser("scan", help="compare the two never-sets rank by rank")
    p.add_argument("family")
    p.add_argument("rank_max", type=int)

    p = sub.add_parser("exceptional", help="query the bundled E6/E7/E8 tables")
    p.add_argument("group", help="E6, E7 or E8")
    p.add_argument("action", choices=["dump", "check", "n0"])

    p = sub.add_parser("gdim", help="graded dimensions of a weighted Dynkin diagram")
    p.add_argument("group", help="Cartan type, e.g. E6 or D5")
    p.add_argument("labels", type=int, nargs="+", help="node labels in {0,1,2}")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


async def _request(server: str | None, method: str, path: str, **kwargs) -> httpx.Response:
    if server:
        async with httpx.AsyncClient(base_url=server, timeout=600.0) as client:
            return await client.request(method, path, **kwargs)
    from .service.app import app  # deferred: keep plain client invocations light

    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(
        transport=transport, base_url="http://covorbits.internal", timeout=None
    ) as client:
        return await client.request(method, path, **kwargs)


def call(args: argparse.Namespace, method: str, path: str, **kwargs) -> dict:
    response = asyncio.run(_request(args.server, method, path, **kwargs))
    try:
        payload = response.json()
    except json.JSONDecodeError:
        print(f"malformed response ({response.status_code}) from service", file=sys.stderr)
        raise SystemExit(EXIT_DOMAIN)
    if response.status_code >= 400:
        detail = payload.get("error", {})
        message = detail.get("message") or json.dumps(payload)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_DOMAIN)
    return payload


def emit_json(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2))
    sys.stdout.write("\n")


def _fmt_partition(parts: list[int]) -> str:
    return "[" + ",".join(str(v) for v in parts) + "]"


def _fmt_degree_set(ds: dict) -> str:
    if ds["kind"] == "all":
        return "all"
    return "{" + ",".join(str(m) for m in ds.get("members") or []) + "}"


def cmd_orbits(args) -> int:
    params = {}
    if args.bound:
        params["qa_bound"] = args.bound
    payload = call(args, "GET", f"/orbits/{args.family}/{args.rank}", params=params)
    if args.json:
        emit_json(payload)
        return EXIT_OK
    print(f"{payload['family']}{payload['rank']}: {payload['count']} orbits "
          f"(partitions of {payload['orbit_weight']})")
    for row in payload["orbits"]:
        tag = "special    " if row["special"] else "not special"
        print(f"  {_fmt_partition(row['partition']):<24} {tag}  qa={_fmt_degree_set(row['qa'])}")
    return EXIT_OK


def cmd_bv(args) -> int:
    body = {"family": args.family, "rank": args.rank, "degree": args.degree}
    if args.partition is not None:
        body["partition"] = _parse_parts(args.partition)
    payload = call(args, "POST", "/bv", json=body)
    if args.json:
        emit_json(payload)
        return EXIT_OK
    print(f"{payload['family']}{payload['rank']} at degree {payload['degree']}: "
          f"dual group of type {payload['dual_family']}{payload['dual_rank']}")
    for pair in payload["pairs"]:
        print(f"  {_fmt_partition(pair['source']):<24} -> {_fmt_partition(pair['image'])}")
    return EXIT_OK


def _parse_parts(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.strip().strip("[]").split(",") if tok != ""]
    except ValueError:
        print(f"error: cannot parse partition {text!r}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def cmd_verify(args) -> int:
    body = {
        "family": args.family,
        "rank_max": args.rank_max,
        "degree_max": args.degree_max,
        "jobs": args.jobs,
        "seed": args.seed,
    }
    payload = call(args, "POST", "/verify", json=body)
    if args.json:
        emit_json(payload)
    else:
        cfg = payload["config"]
        print(f"family {cfg['family']}, ranks 1..{cfg['rank_max']}, "
              f"degrees 1..{cfg['degree_max']}: {payload['cells']} cells, "
              f"{payload['orbits_checked']} images checked, "
              f"{payload['violations']} violations")
        for rep in payload["reports"]:
            for v in rep["violations"]:
                print(f"  rank {rep['rank']} degree {rep['degree']}: {v['description']}")
    return EXIT_OK if payload["clean"] else EXIT_VERIFY


def cmd_n0(args) -> int:
    params = {}
    if args.bound:
        params["degree_cap"] = args.bound
    payload = call(args, "GET", f"/n0/{args.family}/{args.rank}", params=params)
    if args.json:
        emit_json(payload)
        return EXIT_OK
    print(f"{payload['family']}{payload['rank']} (degrees up to {payload['degree_cap']}):")
    print("  never quasi-admissible: "
          + (", ".join(_fmt_partition(p) for p in payload["n0_qa"]) or "none"))
    print("  never a duality image:  "
          + (", ".join(_fmt_partition(p) for p in payload["n0_bv"]) or "none"))
    print(f"  sets equal: {'yes' if payload['equal'] else 'no'}")
    if payload["difference"]:
        print("  extra never-images: "
              + ", ".join(_fmt_partition(p) for p in payload["difference"]))
    return EXIT_OK


def cmd_scan(args) -> int:
    body = {"family": args.family, "rank_max": args.rank_max}
    if args.bound:
        body["degree_cap"] = args.bound
    payload = call(args, "POST", "/scan", json=body)
    if args.json:
        emit_json(payload)
        return EXIT_OK
    for row in payload["rows"]:
        status = "equal" if row["equal"] else "DIFFER"
        print(f"  rank {row['rank']:>2}: |never-QA| = {len(row['n0_qa']):>3}, "
              f"|never-image| = {len(row['n0_bv']):>3}  {status}")
        if not row["equal"]:
            print("           difference: "
                  + ", ".join(_fmt_partition(p) for p in row["difference"]))
    div = payload["first_divergence_rank"]
    if div is None:
        print(f"no divergence up to rank {payload['rank_max']}")
    else:
        print(f"first divergence at rank {div}")
    return EXIT_OK


def cmd_exceptional(args) -> int:
    payload = call(args, "GET", f"/exceptional/{args.group}/{args.action}")
    if args.json:
        emit_json(payload)
        if args.action == "check":
            return EXIT_OK if payload["clean"] else EXIT_VERIFY
        return EXIT_OK
    if args.action == "dump":
        print(f"{payload['group']}: {payload['count']} orbits")
        for rec in payload["records"]:
            flags = ("special" if rec["special"] else "-") + "/" + ("even" if rec["even"] else "-")
            pairs = ",".join(f"({a},{b})" for a, b in rec["pairs"]) or "n.a."
            print(f"  {rec['label']:<14} {flags:<14} {rec['stabilizer']:<22} "
                  f"pairs={pairs:<28} qa={_fmt_degree_set(rec['qa'])}")
        return EXIT_OK
    if args.action == "check":
        print(f"{payload['group']}: {payload['rows']} rows "
              f"(expected {payload['expected_rows']}), {payload['mismatches']} mismatches")
        for issue in payload["issues"]:
            print(f"  {issue['label']} [{issue['field']}]: {issue['detail']}")
        return EXIT_OK if payload["clean"] else EXIT_VERIFY
    labels = payload["labels"]
    print(f"{payload['group']}: {len(labels)} orbits admissible at no degree")
    for label in labels:
        print(f"  {label}")
    return EXIT_OK


def cmd_gdim(args) -> int:
    payload = call(args, "POST", "/gdim", json={"group": args.group, "labels": args.labels})
    if args.json:
        emit_json(payload)
        return EXIT_OK
    print(f"{payload['group']} with labels {tuple(payload['labels'])} "
          f"(algebra dimension {payload['total_dim']})")
    for key in sorted(payload["dims"], key=int):
        layer = int(key)
        if layer >= 0:
            print(f"  dim g[{layer}] = {payload['dims'][key]}")
    print(f"  centre of g[0]: {payload['center_dim']}")
    print(f"  Levi nodes {payload['levi_nodes']} of type {payload['levi_type']}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


_HANDLERS = {
    "orbits": cmd_orbits,
    "bv": cmd_bv,
    "verify": cmd_verify,
    "n0": cmd_n0,
    "scan": cmd_scan,
    "exceptional": cmd_exceptional,
    "gdim": cmd_gdim,
    "serve": cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except SystemExit:
        raise
    except httpx.HTTPError as exc:
        print(f"error: cannot reach service: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
