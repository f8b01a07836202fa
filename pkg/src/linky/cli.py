"""Command-line pipeline: ingest, generate, baseline, import/export,
evaluate, diff, extract-gt, serve.

Exit codes: 0 success, 1 usage error, 2 data error (bad records, unknown
ids, missing files), 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import evaluation, service
from .corpus import export_dataset, extract_ground_truth, generate_synthetic_dataset
from .corpus.records import dumps_record, link_to_json
from .errors import LinkyError, NoGroundTruth, WorkspaceNotLoaded
from .linkage import DEFAULT_GRAM_LEN, DEFAULT_TOP_K, Workspace, export_solution
from .stopwords import load_stopwords

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_data_dir() -> str:
    return os.environ.get("LINKY_DATA_DIR", "workspace")


def _add_data_dir(parser):
    parser.add_argument(
        "--data-dir",
        default=None,
        help="workspace directory (default: $LINKY_DATA_DIR or ./workspace)",
    )


def _open_workspace(args) -> Workspace:
    return Workspace.open(args.data_dir or _default_data_dir())


def _print_counts(counts: dict):
    for kind in ("identities", "edges", "posts", "ground_truth"):
        print(f"{kind}: {counts[kind]}")


def _print_report(report):
    print(f"method: {report.method_id}")
    print(f"n_evaluated: {report.n_evaluated}")
    print(f"prec@1: {report.prec_at_1:.3f}")
    print(f"mrr: {report.mrr:.3f}")


def build_parser() -> _Parser:
    parser = _Parser(prog="linky", description="Cross-network user identity linkage workbench.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("ingest", parents=[], help="load a dataset manifest into a workspace")
    p.add_argument("--manifest", required=True, help="path to a dataset manifest")
    _add_data_dir(p)

    p = sub.add_parser("generate", help="write a synthetic two-platform dataset")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--users", type=int, required=True)
    p.add_argument("--mutation-rate", type=float, default=0.3)
    p.add_argument("--neighbor-overlap", type=float, default=0.5)
    p.add_argument("--content-overlap", type=float, default=0.5)
    p.add_argument("--out", required=True, help="output directory for dataset files")

    p = sub.add_parser("baseline", help="run the username n-gram baseline and store its solution")
    p.add_argument("--source", required=True, help="source platform id")
    p.add_argument("--target", required=True, help="target platform id")
    p.add_argument("--n", type=int, default=DEFAULT_GRAM_LEN, help="gram length (default 3)")
    p.add_argument("--k", type=int, default=DEFAULT_TOP_K, help="candidates stored per source (default 3)")
    p.add_argument("--method-id", default=None, help="override the stored method id")
    p.add_argument("--replace", action="store_true", help="overwrite an existing solution")
    _add_data_dir(p)

    p = sub.add_parser("import", help="import a solution file from another method")
    p.add_argument("path", help="solution file to import")
    p.add_argument("--replace", action="store_true")
    _add_data_dir(p)

    p = sub.add_parser("export", help="export a stored solution to a file")
    p.add_argument("--method", required=True)
    p.add_argument("--out", required=True)
    _add_data_dir(p)

    p = sub.add_parser("evaluate", help="score a stored solution against ground truth")
    p.add_argument("--method", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", default=None, help="also write the report to this file")
    _add_data_dir(p)

    p = sub.add_parser("diff", help="sources correct under method A but not method B")
    p.add_argument("method_a")
    p.add_argument("method_b")
    p.add_argument("--criterion", default=evaluation.DEFAULT_CRITERION, help="rank1 (default) or topK")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_data_dir(p)

    p = sub.add_parser("extract-gt", help="extract declared-bio ground truth links")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--pattern", action="append", required=True, help="handle regex; repeatable")
    p.add_argument("--out", default=None, help="write links to this file instead of stdout")
    _add_data_dir(p)

    p = sub.add_parser("serve", help="serve the HTTP API for the companion UI")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8040)
    p.add_argument("--stopwords", default=None, help="stopword file, one word per line")
    p.add_argument("--topk-default", type=int, default=DEFAULT_TOP_K)
    p.add_argument("--cors-origin", default=None, help="origin allowed for cross-origin requests")
    _add_data_dir(p)

    return parser


def _cmd_ingest(args) -> int:
    ws = Workspace.ingest(args.manifest, args.data_dir or _default_data_dir())
    _print_counts(ws.dataset.counts)
    return EXIT_OK


def _cmd_generate(args) -> int:
    result = generate_synthetic_dataset(
        seed=args.seed,
        n_users=args.users,
        username_mutation_rate=args.mutation_rate,
        neighbor_overlap=args.neighbor_overlap,
        content_overlap=args.content_overlap,
    )
    out = Path(args.out)
    export_dataset(result.dataset, out)
    with open(out / "declared_bios.ndjson", "w", encoding="utf-8") as fh:
        for link in sorted(result.declared_links, key=lambda l: (l.source, l.target)):
            fh.write(dumps_record(link_to_json(link)) + "\n")
    _print_counts(result.dataset.counts)
    print(f"written: {out}")
    return EXIT_OK


def _cmd_baseline(args) -> int:
    ws = _open_workspace(args)
    solution = ws.run_baseline(
        args.source, args.target, n=args.n, k=args.k, method_id=args.method_id, replace=args.replace
    )
    print(f"stored: {solution.method.method_id}")
    try:
        _print_report(ws.evaluate(solution.method.method_id))
    except NoGroundTruth:
        print("no ground truth for this platform pair; metrics skipped")
    return EXIT_OK


def _cmd_import(args) -> int:
    ws = _open_workspace(args)
    solution = ws.import_file(args.path, replace=args.replace)
    n_sources = len(solution.predictions)
    print(f"imported: {solution.method.method_id} ({n_sources} sources)")
    return EXIT_OK


def _cmd_export(args) -> int:
    ws = _open_workspace(args)
    export_solution(ws.solution(args.method), args.out)
    print(f"written: {args.out}")
    return EXIT_OK


def _cmd_evaluate(args) -> int:
    ws = _open_workspace(args)
    report = ws.evaluate(args.method)
    if args.out:
        evaluation.write_report(report, args.out)
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True, indent=2))
    else:
        _print_report(report)
    return EXIT_OK


def _cmd_diff(args) -> int:
    ws = _open_workspace(args)
    report = ws.diff(args.method_a, args.method_b, args.criterion)
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True, indent=2))
    else:
        source_platform = ws.solution(args.method_a).source_platform
        for source_id in report.correct_in_a_not_b:
            print(ws.dataset.identity(source_platform, source_id).username)
    return EXIT_OK


def _cmd_extract_gt(args) -> int:
    ws = _open_workspace(args)
    links = extract_ground_truth(ws.dataset, args.source, args.target, args.pattern)
    lines = [dumps_record(link_to_json(link)) for link in links]
    if args.out:
        Path(args.out).write_text("".join(line + "\n" for line in lines), encoding="utf-8")
        print(f"written: {args.out} ({len(lines)} links)")
    else:
        for line in lines:
            print(line)
    return EXIT_OK


def _cmd_serve(args) -> int:
    try:
        ws = _open_workspace(args)
    except WorkspaceNotLoaded:
        ws = None
    stopwords = load_stopwords(args.stopwords) if args.stopwords else None
    service.serve(
        ws,
        host=args.host,
        port=args.port,
        stopwords=stopwords,
        topk_default=args.topk_default,
        cors_origin=args.cors_origin,
    )
    return EXIT_OK


_COMMANDS = {
    "ingest": _cmd_ingest,
    "generate": _cmd_generate,
    "baseline": _cmd_baseline,
    "import": _cmd_import,
    "export": _cmd_export,
    "evaluate": _cmd_evaluate,
    "diff": _cmd_diff,
    "extract-gt": _cmd_extract_gt,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except LinkyError as exc:
        print(f"linky: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except FileNotFoundError as exc:
        print(f"linky: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except BrokenPipeError:
        # consumer closed the pipe (e.g. | head); not our error
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return EXIT_OK
    except Exception as exc:  # pragma: no cover - defensive
        print(f"linky: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
