"""Command-line front end.

A thin client over the service operation layer: each subcommand builds the
same request model the HTTP API uses and renders the response.  With
``--server URL`` the request is POSTed to a running service instead of being
executed in process.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import urllib.request
from typing import Optional

from .arrows import RibbonError
from .service import ops, schemas


def _read_graph(value: str) -> str:
    """Inline presentations win; otherwise treat the argument as a file path."""
    text = value.strip()
    if text.startswith("("):
        return text
    if os.path.exists(value):
        with open(value, "r", encoding="utf-8") as fh:
            return fh.read().strip()
    return text


class _Client:
    def __init__(self, server: Optional[str]):
        self.server = server.rstrip("/") if server else None

    def call(self, endpoint: str, request, response_model):
        if self.server is None:
            fn = getattr(ops, endpoint)
            out = fn(request) if request is not None else fn()
            return out.model_dump()
        url = f"{self.server}/{_ROUTES[endpoint]}"
        if request is None:
            with urllib.request.urlopen(url) as resp:
                return json.load(resp)
        data = request.model_dump_json().encode()
        http_req = urllib.request.Request(
            url, data=data, headers={"Content-Type": "application/json"})
        with urllib.request.urlopen(http_req) as resp:
            return json.load(resp)


_ROUTES = {
    "info": "info",
    "parse_graph": "parse",
    "apply_assignment": "apply",
    "dual": "dual",
    "orbit_of": "orbit",
    "medial_of": "medial",
    "checkerboard": "checkerboard",
    "cycle_family": "cfg",
    "valuations": "valuations",
    "poly": "poly",
    "enumerate_classes": "enumerate",
    "verify": "verify",
    "catalog": "verify/catalog",
}


def _emit(data: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in lines(data):
            print(line)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="ribbonpoly",
        description="Exact twisted duality, medial graphs, and polynomials of embedded graphs.")
    parser.add_argument("--server", help="URL of a running service; default runs in process")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, graph_arg=True):
        p = sub.add_parser(name, help=help_text)
        if graph_arg:
            p.add_argument("graph", help="inline presentation like '(a+ b+)(a- b+)' or a file path")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    add("info", "invariants of a graph")
    p = add("apply", "apply a ribbon-group assignment")
    p.add_argument("--gamma", required=True, help="e.g. 'tau(e1,e2),delta(e3)'")
    add("dual", "geometric dual")
    p = add("orbit", "orbit under a subgroup of the ribbon group")
    p.add_argument("--subgroup", default="full",
                   choices=["full", "delta", "tau", "taudelta", "deltataudelta"])
    p.add_argument("--max-edges", type=int, default=None)
    add("medial", "medial graph with canonical checkerboard colouring")
    p = add("cfg", "cycle family graphs of a 4-regular embedded graph")
    p.add_argument("--duality-only", action="store_true")
    p.add_argument("--max-vertices", type=int, default=None)
    p = add("valuations", "count admissible k-valuations of the medial")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--allow-equal", action="store_true")
    p = sub.add_parser("poly", help="compute a graph polynomial")
    p.add_argument("kind", choices=["penrose", "transition", "topochromatic", "br", "lv", "sbr", "chromatic"])
    p.add_argument("graph", help="inline presentation (append 'signs: e=+ f=-' for sbr) or a file path")
    p.add_argument("--weights", help="JSON per-edge [white, black, crossing] triples for 'transition'")
    p.add_argument("--at", action="append", metavar="VAR=VALUE",
                   help="evaluate at a point; repeatable")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p = add("enumerate", "all embedded graphs with a given edge count", graph_arg=False)
    p.add_argument("edges", type=int)
    p.add_argument("--max-edges", type=int, default=None)
    p = add("verify", "run a named identity verifier (or 'all')", graph_arg=False)
    p.add_argument("name", nargs="?", default="all")
    p.add_argument("--max-edges", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--describe", action="store_true", help="print the identity and exit")
    p.add_argument("--list", action="store_true", help="list the catalogue and exit")

    args = parser.parse_args(argv)
    client = _Client(args.server)

    try:
        return _dispatch(args, client)
    except RibbonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except urllib.error.URLError as exc:  # pragma: no cover - needs a live server
        print(f"server error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args, client: _Client) -> int:
    cmd = args.command
    if cmd == "info":
        data = client.call("info", schemas.GraphRequest(graph=_read_graph(args.graph)), None)
        _emit(data, args.json, lambda d: [
            f"graph: {d['graph']}",
            f"v={d['v']} e={d['e']} f={d['f']} k={d['k']} r={d['r']} n={d['n']}",
            f"euler_genus={d['euler_genus']} genus={d['genus']} "
            f"{'orientable' if d['orientable'] else 'nonorientable'}"
            + (" plane" if d["plane"] else ""),
        ])
        return 0
    if cmd == "apply":
        req = schemas.ApplyRequest(graph=_read_graph(args.graph), gamma=args.gamma)
        data = client.call("apply_assignment", req, None)
        _emit(data, args.json, lambda d: [d["graph"]])
        return 0
    if cmd == "dual":
        data = client.call("dual", schemas.GraphRequest(graph=_read_graph(args.graph)), None)
        _emit(data, args.json, lambda d: [d["graph"]])
        return 0
    if cmd == "orbit":
        req = schemas.OrbitRequest(graph=_read_graph(args.graph),
                                   subgroup=args.subgroup, max_edges=args.max_edges)
        data = client.call("orbit_of", req, None)
        _emit(data, args.json, lambda d: [f"{d['count']} members under {d['subgroup']}"] + d["members"])
        return 0
    if cmd == "medial":
        data = client.call("medial_of", schemas.GraphRequest(graph=_read_graph(args.graph)), None)
        _emit(data, args.json, lambda d: [
            f"medial: {d['medial']}",
            "origin: " + ", ".join(f"{k}<-{v}" for k, v in d["origin"].items()),
            "face colours: " + " ".join(d["face_colours"]),
        ])
        return 0
    if cmd == "cfg":
        req = schemas.CycleFamilyRequest(graph=_read_graph(args.graph),
                                         duality_only=args.duality_only,
                                         max_vertices=args.max_vertices)
        data = client.call("cycle_family", req, None)
        _emit(data, args.json, lambda d: [f"{d['count']} cycle family graphs"] + d["members"])
        return 0
    if cmd == "valuations":
        req = schemas.ValuationsRequest(graph=_read_graph(args.graph), k=args.k,
                                        allow_equal=args.allow_equal)
        data = client.call("valuations", req, None)
        _emit(data, args.json, lambda d: [f"admissible {d['k']}-valuations: {d['count']}"])
        return 0
    if cmd == "poly":
        weights = json.loads(args.weights) if args.weights else None
        at = None
        if args.at:
            at = {}
            for item in args.at:
                if "=" not in item:
                    raise RibbonError(f"bad --at item {item!r}, expected VAR=VALUE")
                var, val = item.split("=", 1)
                at[var] = val
        req = schemas.PolyRequest(graph=_read_graph(args.graph), kind=args.kind,
                                  weights=weights, at=at)
        data = client.call("poly", req, None)

        def lines(d):
            out = [d["text"]]
            if d.get("value") is not None:
                out.append(f"value: {d['value']}")
            return out

        _emit(data, args.json, lines)
        return 0
    if cmd == "enumerate":
        req = schemas.EnumerateRequest(edges=args.edges, max_edges=args.max_edges)
        data = client.call("enumerate_classes", req, None)
        _emit(data, args.json, lambda d: [f"{d['count']} embedded graphs with {d['edges']} edges"] + d["members"])
        return 0
    if cmd == "verify":
        if args.list:
            data = client.call("catalog", None, None)
            _emit(data, args.json, lambda d: d["names"])
            return 0
        if args.describe:
            data = client.call("catalog", None, None)
            if args.name == "all":
                _emit(data, args.json,
                      lambda d: [f"{n}: {d['descriptions'][n]}" for n in d["names"]])
                return 0
            if args.name not in data["descriptions"]:
                raise RibbonError(f"unknown identity {args.name!r}")
            print(f"{args.name}: {data['descriptions'][args.name]}")
            return 0
        req = schemas.VerifyRequest(name=args.name, max_edges=args.max_edges,
                                    seed=args.seed, kmax=args.kmax)
        try:
            data = client.call("verify", req, None)
        except KeyError as exc:
            raise RibbonError(str(exc))

        def lines(d):
            out = []
            for rep in d["reports"]:
                mark = "ok  " if rep["ok"] else "FAIL"
                out.append(f"{mark} {rep['name']}: {rep['instances']} checks, "
                           f"{len(rep['failures'])} failures, {rep['elapsed']:.2f}s")
                for failure in rep["failures"][:10]:
                    out.append(f"      witness: {failure}")
            out.append("all identities hold" if d["ok"] else "verification FAILED")
            return out

        _emit(data, args.json, lines)
        return 0 if data["ok"] else 1
    raise RibbonError(f"unknown command {cmd!r}")


if __name__ == "__main__":
    sys.exit(main())
