"""Batch command-line interface.

Exit codes: 0 ok, 1 usage error, 2 I/O error, 3 invalid data. Progress goes
to stderr; machine-readable output is JSON lines on stdout.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys
from pathlib import Path

from .evaluate import evaluate_pair
from .fixtures import GENERATORS, generate
from .metrics import analysis_to_dict, compute_profile
from .pipeline import SimplifyConfig, result_to_dict, simplify
from .sequence import MotionFormatError, load_motion, save_motion

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_DATA = 3

_CRITERIA_KEYS = ["c1", "c2", "c3", "c4", "c5"]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("MOTIONSIMP_JOBS", "1")))
    except ValueError:
        return 1


def _load_config_file(path: str) -> dict[str, str]:
    """key=value lines; blank lines and # comments ignored."""
    values = {}
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise _UsageError(f"bad config line {line!r}")
        key, _, value = line.partition("=")
        values[key.strip()] = value.strip()
    return values


def build_parser() -> _Parser:
    parser = _Parser(prog="motionsimp")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--jobs", type=int, default=_default_jobs())
        p.add_argument("--format", choices=("json", "table"), default="table")
        p.add_argument("--out-dir", default=".")

    p_an = sub.add_parser("analyze", help="complexity profiles for motion files")
    p_an.add_argument("inputs", nargs="*")
    add_common(p_an)
    p_an.add_argument("--sg-window", type=int, default=9)
    p_an.add_argument("--sg-order", type=int, default=3)

    p_si = sub.add_parser("simplify", help="run the simplification pipeline")
    p_si.add_argument("inputs", nargs="*")
    add_common(p_si)
    p_si.add_argument("--config", help="key=value config file merged under flags")
    p_si.add_argument("--criteria", default="all",
                      help="comma list of c1..c5, or all/none")
    p_si.add_argument("--k", type=float)
    p_si.add_argument("--lambda", dest="lambda_slow", type=int)
    for key in _CRITERIA_KEYS:
        p_si.add_argument(f"--tau-{key}", type=float)
        p_si.add_argument(f"--min-len-{key}", type=int)
    p_si.add_argument("--psi-target", type=float)
    p_si.add_argument("--eps", type=float)
    p_si.add_argument("--alpha", type=float)
    p_si.add_argument("--sg-window", type=int)
    p_si.add_argument("--sg-order", type=int)
    p_si.add_argument("--motion-format", choices=("json", "bin"), default="json")

    p_ev = sub.add_parser("eval", help="evaluate original/simplified pairs")
    p_ev.add_argument("pairs", nargs="*", metavar="ORIG:SIMPLIFIED")
    add_common(p_ev)
    p_ev.add_argument("--reference", help="manifest file listing reference motion paths")
    p_ev.add_argument("--fid", action="store_true",
                      help="require distribution metrics (errors without --reference)")

    p_gen = sub.add_parser("gen-fixtures", help="write synthetic motion fixtures")
    p_gen.add_argument("--kind", required=True, choices=sorted(GENERATORS))
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", required=True)
    p_gen.add_argument("--motion-format", choices=("json", "bin"), default="json")

    p_srv = sub.add_parser("serve", help="run the HTTP what-if service")
    p_srv.add_argument("--port", type=int, default=7340)
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--static", help="directory with the built studio UI to host at /")
    p_srv.add_argument("--allow-remote-cors", action="store_true")

    return parser


def _simplify_config(args) -> SimplifyConfig:
    merged: dict = {}
    if getattr(args, "config", None):
        file_vals = _load_config_file(args.config)
        for key, value in file_vals.items():
            merged[key.replace("-", "_")] = value

    def pick(name, cast, default=None):
        flag = getattr(args, name, None)
        if flag is not None:
            return flag
        if name in merged:
            return cast(merged[name])
        return default

    criteria = pick("criteria", str, "all")
    if criteria == "all":
        enabled = (True,) * 5
    elif criteria == "none":
        enabled = (False,) * 5
    else:
        chosen = {c.strip() for c in criteria.split(",")}
        unknown = chosen - set(_CRITERIA_KEYS)
        if unknown:
            raise _UsageError(f"unknown criteria {sorted(unknown)}")
        enabled = tuple(key in chosen for key in _CRITERIA_KEYS)

    tau = tuple(pick(f"tau_{key}", float) for key in _CRITERIA_KEYS)
    min_len = tuple(pick(f"min_len_{key}", int) for key in _CRITERIA_KEYS)
    kwargs = {}
    for name, cast in (
        ("k", float), ("lambda_slow", int), ("psi_target", float),
        ("eps", float), ("alpha", float), ("sg_window", int), ("sg_order", int),
    ):
        value = pick(name, cast)
        if value is not None:
            kwargs["epsilon" if name == "eps" else name] = value
    return SimplifyConfig(tau=tau, min_len=min_len, criteria_enabled=enabled, **kwargs)


def _analyze_worker(task) -> tuple[str, dict | None, str | None]:
    path, sg_window, sg_order = task
    try:
        seq = load_motion(path)
        profile = compute_profile(seq, sg_window=sg_window, sg_order=sg_order)
        return path, analysis_to_dict(seq, profile), None
    except (OSError, MotionFormatError, ValueError) as exc:
        return path, None, str(exc)


def _simplify_worker(task) -> tuple[str, tuple | None, str | None]:
    from .sequence import to_dict

    path, config = task
    try:
        seq = load_motion(path)
        result = simplify(seq, config)
        return path, (to_dict(result.motion), result_to_dict(result)), None
    except (OSError, MotionFormatError, ValueError) as exc:
        return path, None, str(exc)


def _run_parallel(jobs, fn, items):
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def cmd_analyze(args) -> int:
    failures = 0
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    rows = []
    tasks = [(path, args.sg_window, args.sg_order) for path in args.inputs]
    for path, payload, error in _run_parallel(args.jobs, _analyze_worker, tasks):
        if error is not None:
            _progress(f"error: {path}: {error}")
            failures += 1
            continue
        out = out_dir / (Path(path).stem + ".profile.json")
        out.write_text(json.dumps(payload, sort_keys=True))
        rows.append((path, payload))
    if args.format == "json":
        for path, payload in rows:
            _emit({"input": path, **{k: payload[k] for k in _CRITERIA_KEYS}})
    else:
        if rows:
            print(f"{'input':40s} {'c1':>9s} {'c2':>9s} {'c3':>9s} {'c4':>9s} {'c5':>9s}")
        for path, payload in rows:
            scores = " ".join(f"{payload[k]:9.4f}" for k in _CRITERIA_KEYS)
            print(f"{path:40s} {scores}")
    return EXIT_DATA if failures else EXIT_OK


def cmd_simplify(args) -> int:
    config = _simplify_config(args)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    failures = 0
    tasks = [(path, config) for path in args.inputs]
    for path, out_pair, error in _run_parallel(args.jobs, _simplify_worker, tasks):
        if error is not None:
            _progress(f"error: {path}: {error}")
            failures += 1
            continue
        motion_dict, payload = out_pair
        stem = Path(path).stem
        ext = "json" if args.motion_format == "json" else "bin"
        motion_path = out_dir / f"{stem}.simplified.{ext}"
        from .sequence import from_dict

        save_motion(from_dict(motion_dict), motion_path, args.motion_format)
        payload["motion_path"] = str(motion_path)
        (out_dir / f"{stem}.result.json").write_text(json.dumps(payload, sort_keys=True))
        _emit({"input": path, "motion": str(motion_path),
               "accepted": [r["criterion"] for r in payload["applied"] if r["accepted"]]})
    return EXIT_DATA if failures else EXIT_OK


def cmd_eval(args) -> int:
    reference = None
    if args.reference:
        try:
            paths = [
                line.strip()
                for line in Path(args.reference).read_text().splitlines()
                if line.strip()
            ]
            reference = [load_motion(p) for p in paths]
        except FileNotFoundError as exc:
            _progress(f"error: {exc}")
            return EXIT_IO
    if args.fid and reference is None:
        raise _UsageError("--fid requires --reference")
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    failures = 0
    for pair in args.pairs:
        if ":" not in pair:
            raise _UsageError(f"pair {pair!r} must be ORIG:SIMPLIFIED")
        orig_path, simp_path = pair.split(":", 1)
        _progress(f"evaluating {orig_path} vs {simp_path}")
        try:
            orig = load_motion(orig_path)
            simp = load_motion(simp_path)
            report = evaluate_pair(orig, simp, reference)
        except FileNotFoundError as exc:
            _progress(f"error: {exc}")
            failures += 1
            continue
        except (MotionFormatError, ValueError) as exc:
            _progress(f"error: {pair}: {exc}")
            failures += 1
            continue
        payload = report.to_dict()
        out = out_dir / (Path(simp_path).stem + ".eval.json")
        out.write_text(json.dumps(payload, sort_keys=True))
        _emit({"original": orig_path, "simplified": simp_path, **payload})
    return EXIT_DATA if failures else EXIT_OK


def cmd_gen_fixtures(args) -> int:
    seq = generate(args.kind, args.seed)
    out = Path(args.out)
    if out.parent and not out.parent.exists():
        out.parent.mkdir(parents=True, exist_ok=True)
    save_motion(seq, out, args.motion_format)
    _emit({"kind": args.kind, "seed": args.seed, "out": str(out),
           "frames": seq.num_frames})
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(static_dir=args.static, allow_remote_cors=args.allow_remote_cors)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        _progress(f"usage error: {exc}")
        return EXIT_USAGE
    handler = {
        "analyze": cmd_analyze,
        "simplify": cmd_simplify,
        "eval": cmd_eval,
        "gen-fixtures": cmd_gen_fixtures,
        "serve": cmd_serve,
    }[args.command]
    try:
        return handler(args)
    except _UsageError as exc:
        _progress(f"usage error: {exc}")
        return EXIT_USAGE
    except OSError as exc:
        _progress(f"I/O error: {exc}")
        return EXIT_IO
    except MotionFormatError as exc:
        _progress(f"data error: {exc}")
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
