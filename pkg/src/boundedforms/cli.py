"""Command-line front end.

The CLI is a thin client of the HTTP service: every subcommand reads
its input files, posts them to the service, and formats the response.
By default the service runs in-process (no network, same code path as
a deployed server); pass --server URL to talk to a running instance.

Exit codes: 0 success/verified; 1 checked-and-failed or
hypotheses-not-met (including "no bounded regions"); 2 input error.
"""

import argparse
import json
import sys

import httpx

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

_SIGN_CHAR = {1: "+", 0: "0", -1: "-"}


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


class InProcessClient:
    """Synchronous facade over the ASGI app; no socket involved.

    Requests go through the exact service code path a deployed server
    would run, so the CLI stays a thin client either way.
    """

    def __init__(self, app):
        self._transport = httpx.ASGITransport(app=app)

    def post(self, endpoint, json=None):
        import asyncio

        async def call():
            async with httpx.AsyncClient(
                transport=self._transport, base_url="http://service"
            ) as client:
                return await client.post(endpoint, json=json)

        return asyncio.run(call())

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


def _client(args):
    if getattr(args, "server", None):
        return httpx.Client(base_url=args.server, timeout=60.0)
    from .service import app

    return InProcessClient(app)


def _read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError("cannot read %s: %s" % (path, exc), EXIT_INPUT)
    except json.JSONDecodeError as exc:
        raise CliError("malformed JSON in %s: %s" % (path, exc), EXIT_INPUT)


def _post(client, endpoint, payload, failed_on_409=True):
    resp = client.post(endpoint, json=payload)
    if resp.status_code in (400, 422):
        detail = resp.json().get("detail", "invalid input")
        raise CliError(str(detail), EXIT_INPUT)
    if resp.status_code == 409:
        detail = resp.json().get("detail", "cannot compute")
        raise CliError(str(detail), EXIT_FAILED if failed_on_409 else EXIT_INPUT)
    resp.raise_for_status()
    return resp.json()


def _arrangement_payload(args):
    return {"arrangement": _read_json(args.path), "order": args.order}


def _print_matrix(matrix):
    widths = [max(len(str(row[j])) for row in matrix) for j in range(len(matrix[0]))]
    for row in matrix:
        print("  ".join(str(e).rjust(w) for e, w in zip(row, widths)))


def _emit(args, data, human):
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        human(data)


def cmd_regions(client, args):
    data = _post(client, "/regions", _arrangement_payload(args))

    def human(d):
        print("regions: %d" % d["num_regions"])
        print("faces by dimension: %s" % d["face_counts"])
        print("euler characteristic: %d" % d["euler_characteristic"])
        for reg in d["regions"]:
            signs = "".join(_SIGN_CHAR[s] for s in reg["signs"])
            pts = ", ".join("(%s)" % ", ".join(v) for v in reg["vertices"])
            print(
                "F%d  signs %s  %d vertices: %s"
                % (reg["index"], signs, reg["vertex_count"], pts)
            )

    _emit(args, data, human)
    return EXIT_OK


def cmd_phi(client, args):
    data = _post(client, "/phi", _arrangement_payload(args))
    _emit(args, data, lambda d: _print_matrix(d["matrix"]))
    return EXIT_OK


def cmd_gram(client, args):
    data = _post(client, "/gram", _arrangement_payload(args))
    _emit(args, data, lambda d: _print_matrix(d["matrix"]))
    return EXIT_OK


def cmd_psi(client, args):
    data = _post(client, "/psi", _arrangement_payload(args))

    def human(d):
        for chain in d["chains"]:
            terms = " ".join(
                "%s[%s]"
                % (
                    "+" if t["coefficient"] > 0 else "-",
                    " ".join(str(i) for i in t["simplex"]),
                )
                for t in chain["terms"]
            )
            print("F%d: %s" % (chain["region"], terms))

    _emit(args, data, human)
    return EXIT_OK


def cmd_verify(client, args):
    data = _post(client, "/verify", _arrangement_payload(args))

    def human(d):
        print("m = %d, s = %d, r = %d" % (d["ambient_dim"], d["num_hyperplanes"], d["num_regions"]))
        print("simple: %s  coloop-free: %s" % (d["simple"], d["coloop_free"]))
        print("phi:")
        _print_matrix(d["phi"])
        if d["gram"] is not None:
            print("gram:")
            _print_matrix(d["gram"])
            print("phi == (-1)^m * gram: %s" % d["identity_holds"])
            print("psi chains are cycles: %s" % d["cycles_ok"])
            print("psi chains independent: %s" % d["psi_independent"])
        print(
            "top homology rank: %d (matches r: %s)"
            % (d["homology_rank_top"], d["rank_matches_r"])
        )
        cert = d["definiteness"]
        print(
            "(-1)^m * phi is %s; leading principal minors: %s"
            % (cert["verdict"], ", ".join(cert["minors"]))
        )
        if d["indefinite_witness"]:
            print("indefinite witness z = %s" % (tuple(d["indefinite_witness"]),))
        print("verdict: %s" % d["theorem_verdict"])

    _emit(args, data, human)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            json.dump(data, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return EXIT_OK if data["theorem_verdict"] == "verified" else EXIT_FAILED


def cmd_nerve(client, args):
    data = _post(client, "/nerve", _arrangement_payload(args))

    def human(d):
        print("independence complex f-vector: %s" % (tuple(d["independence"]["f_vector"]),))
        print("nerve complex f-vector:        %s" % (tuple(d["nerve"]["f_vector"]),))
        print("complexes equal: %s" % d["complexes_equal"])
        if d["divergent_faces"]:
            faces = ", ".join("{%s}" % ",".join(map(str, f)) for f in d["divergent_faces"])
            print("divergent faces: %s" % faces)
        print("reduced homology ranks: %s" % (tuple(d["homology_ranks"]),))

    _emit(args, data, human)
    return EXIT_OK


def cmd_homology(client, args):
    data = _post(client, "/homology", _arrangement_payload(args))

    def human(d):
        print("f-vector: %s" % (tuple(d["f_vector"]),))
        print("reduced homology ranks: %s" % (tuple(d["homology_ranks"]),))

    _emit(args, data, human)
    return EXIT_OK


def cmd_gale(client, args):
    raw = _read_json(args.matrix)
    if isinstance(raw, dict):
        matrix, theta = raw.get("matrix"), raw.get("theta")
    else:
        matrix, theta = raw, None
    if args.theta is not None:
        theta = [t.strip() for t in args.theta.split(",")]
    if not isinstance(matrix, list) or theta is None:
        raise CliError("need a matrix and a theta vector", EXIT_INPUT)
    payload = {"matrix": [[str(e) for e in row] for row in matrix],
               "theta": [str(t) for t in theta]}
    data = _post(client, "/gale", payload, failed_on_409=False)
    text = json.dumps(data, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_render(client, args):
    data = _post(client, "/render", _arrangement_payload(args), failed_on_409=False)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(data["svg"])
    return EXIT_OK


def cmd_serve(client, args):
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="boundedforms",
        description="Exact intersection pairings of bounded regions of "
        "rational hyperplane arrangements.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--order",
        choices=("lex", "input"),
        default="lex",
        help="region ordering (lexicographic sign vectors, or input-side order)",
    )
    common.add_argument(
        "--server", help="base URL of a running service (default: in-process)"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("regions", cmd_regions, "list bounded regions and face counts"),
        ("phi", cmd_phi, "intersection pairing matrix"),
        ("gram", cmd_gram, "Gram matrix of the Psi chains"),
        ("psi", cmd_psi, "signed boundary cycles in the independence complex"),
        ("nerve", cmd_nerve, "independence vs nerve complex comparison"),
        ("homology", cmd_homology, "reduced homology ranks of the independence complex"),
    ):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.add_argument("path", help="arrangement JSON file")
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", help="run every theorem-level check", parents=[common])
    p.add_argument("path", help="arrangement JSON file")
    p.add_argument("--report", help="also write the JSON report to this path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gale", help="derive an arrangement from (A, theta)", parents=[common])
    p.add_argument("matrix", help="JSON file with the matrix (and optionally theta)")
    p.add_argument("--theta", help="comma-separated rationals")
    p.add_argument("--out", help="write the arrangement file here (default: stdout)")
    p.set_defaults(func=cmd_gale)

    p = sub.add_parser("render", help="SVG picture of a planar arrangement", parents=[common])
    p.add_argument("path", help="arrangement JSON file")
    p.add_argument("out", help="output SVG path")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        with _client(args) as client:
            return args.func(client, args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
