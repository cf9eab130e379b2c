"""
Command-line client over the service handlers.

Every subcommand builds the corresponding request model and dispatches
in-process by default (no network); with --server it POSTs the same JSON to
a running service instead. Output is a single JSON document on stdout.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import urllib.request

from .service import handlers, models


def _fail_keys(result: dict) -> bool:
    """Verification failure heuristics shared by the reporting subcommands."""
    if "passed" in result:
        return not result["passed"]
    if "report" in result and isinstance(result["report"], dict):
        return not result["report"].get("ok", True)
    for key in ("flat", "invariant", "ok"):
        if key in result and result[key] is False:
            return True
    if result.get("radical", 0) != 0 and "radical" in result:
        return False  # a nonzero radical is a finding, not a failure
    return False


COMMANDS = {
    "group": (models.GroupRequest, handlers.group_info, "/group"),
    "algebra": (models.AlgebraRequest, handlers.algebra, "/algebra"),
    "relations": (models.RelationsRequest, handlers.relations, "/relations"),
    "lk-rep": (models.RepRequest, handlers.lk_rep_info, "/lk-rep"),
    "h3-rep": (models.RepRequest, handlers.h3_rep_info, "/h3-rep"),
    "flatness": (models.FlatnessRequest, handlers.flatness, "/flatness"),
    "cellular": (models.CellularRequest, handlers.cellular, "/cellular"),
    "semisimple": (models.SemisimpleRequest, handlers.semisimple, "/semisimple"),
    "cyclo-compare": (models.CycloCompareRequest, handlers.cyclo_compare, "/cyclo-compare"),
    "verify-all": (models.VerifyAllRequest, handlers.verify_all, "/verify-all"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauerlab",
        description="Brauer-type algebras of reflection groups: exact construction and verification.",
    )
    parser.add_argument("--server", help="base URL of a running service (default: in-process)")
    parser.add_argument("--out", help="also write the JSON result to this path")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--jobs", type=int, default=1, help="worker parallelism (results are identical for any N)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, *, group=False, tau=False, mu=False, prime=False, mn=False, extra=None):
        p = sub.add_parser(name)
        if group:
            p.add_argument("--group", required=True,
                           help="dihedral:<m> | h3 | b3 | a:<n> | g:<m>,1,<n>")
        if tau:
            p.add_argument("--tau", help="tau value(s), e.g. 7 or 7,3 or 1/2")
        if mu:
            p.add_argument("--mu", help="mu value(s)")
        if prime:
            p.add_argument("--prime", type=int, help="first modular prime to try")
        if mn:
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--n", type=int, required=True)
        for args, kw in (extra or []):
            p.add_argument(*args, **kw)
        return p

    add("group", group=True)
    add("algebra", group=True, extra=[(("--products",), {"action": "store_true", "default": None})])
    add("relations", extra=[(("--group",), {}), (("--kind",), {}),
                            (("--m",), {"type": int}), (("--n",), {"type": int})])
    add("lk-rep", group=True)
    add("h3-rep", group=True, extra=[(("--alpha",), {"type": int, "default": 0})])
    add("flatness", group=True, extra=[(("--kind",), {"default": "bgu", "choices": ["bmr", "bgu"]}),
                                       (("--rep",), {"default": "lk",
                                                     "choices": ["lk", "regular-group", "regular-table"]}),
                                       (("--perturb",), {"action": "store_true"})])
    add("cellular", group=True, extra=[(("--corrupted",), {"action": "store_true"})])
    add("semisimple", group=True, tau=True, mu=True, prime=True)
    add("cyclo-compare", mn=True)
    add("verify-all", group=True)
    return parser


def request_from_args(args) -> tuple:
    model_cls, handler, path = COMMANDS[args.command]
    payload = {}
    fields = model_cls.model_fields
    for name in fields:
        if not hasattr(args, name):
            continue
        value = getattr(args, name)
        if value is None:
            continue
        if name in ("tau", "mu") and isinstance(value, str):
            value = [v.strip() for v in value.split(",")]
        payload[name] = value
    if "jobs" in fields and hasattr(args, "jobs"):
        payload["jobs"] = args.jobs
    if "seed" in fields and hasattr(args, "seed"):
        payload["seed"] = args.seed
    return model_cls(**payload), handler, path


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    try:
        req, handler, path = request_from_args(args)
    except Exception as exc:  # bad request construction is a usage error
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    try:
        if args.server:
            data = json.dumps(req.model_dump()).encode()
            url = args.server.rstrip("/") + path
            http = urllib.request.Request(url, data=data,
                                          headers={"Content-Type": "application/json"})
            with urllib.request.urlopen(http) as resp:
                result = json.loads(resp.read())
        else:
            result = handler(req)
    except (ValueError, KeyError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(json.dumps({"error": f"verification failure: {exc}"}))
        return 1
    text = json.dumps(result, indent=2, default=str)
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return 1 if _fail_keys(result) else 0


if __name__ == "__main__":
    sys.exit(main())
