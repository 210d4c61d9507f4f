"""Command line front end: ``gkdim <verb> --algebra FILE [--module FILE] ...``.

Exit codes: 0 success, 2 input error, 3 resource limit, 4 unstable result
(with ``--require-stable``, and always for the audit).  Every failure
prints one line ``gkdim: error: <kind>: <message>`` on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import (
    COMMANDS,
    ConfigError,
    JobSpec,
    dims_csv,
    load_algebra,
    load_module,
    read_dims_csv,
)
from .errors import GkdimError, ResourceLimit, UnstableInput
from .growth import gk_estimate
from .laurent import filtration_dim_K
from .modpres import DEFAULT_MAX_ROWS, induce, induced_filtration_dims, module_filtration_dims
from .ore import DEFAULT_WORD_CAP, ore_dim_closed_form, ore_dim_oracle_dims
from .simplicity import SimplicityStatus, audit_csv, check_simplicity, dichotomy_audit
from .torsion import DEFAULT_DEGREE_CAP, LaurentIdealPresentation, brookes_groves_t, eliminate

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE, EXIT_UNSTABLE = 0, 2, 3, 4


class JobFailed(Exception):
    def __init__(self, code, kind, message):
        super().__init__(message)
        self.code = code
        self.kind = kind


def _json(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _need_module(cfg, job, over=None):
    if len(job.modules) != 1:
        raise ConfigError(f"'{job.command}' needs exactly one --module")
    spec = load_module(job.modules[0], cfg)
    if over is not None and spec.presentation.over != over:
        raise ConfigError(f"'{job.command}' needs a module over {over}")
    return spec


def _rows(job):
    return job.cap if job.cap is not None else DEFAULT_MAX_ROWS


def _module_dims(spec, job):
    return list(
        module_filtration_dims(spec.presentation, job.m_max, slack=job.slack, max_rows=_rows(job)).dims
    )


def _gk_dims(cfg, job):
    if job.source == "csv":
        return read_dims_csv(job.dims_path), f"csv:{job.dims_path}"
    if job.source == "closed-form":
        if job.over == "K":
            return [filtration_dim_K(cfg.n, m) for m in range(job.m_max + 1)], "closed-form K"
        return [ore_dim_closed_form(cfg.n, m) for m in range(job.m_max + 1)], "closed-form R"
    if job.source == "oracle":
        cap = job.cap if job.cap is not None else DEFAULT_WORD_CAP
        return ore_dim_oracle_dims(cfg.derivation, job.m_max, cap), "oracle R"
    spec = _need_module(cfg, job)
    return _module_dims(spec, job), f"module {spec.module_id} over {spec.presentation.over}"


def run_job(cfg, job):
    """Run one job; returns (exit status, {file name: contents}), primary report first."""
    cmd = job.command
    if cmd == "dims":
        spec = _need_module(cfg, job)
        return EXIT_OK, {"dims.csv": dims_csv(_module_dims(spec, job))}

    if cmd == "gk":
        dims, source = _gk_dims(cfg, job)
        report = gk_estimate(dims, job.window)
        doc = report.as_dict()
        doc["source"] = source
        files = {"gk.json": _json(doc), "dims.csv": dims_csv(dims)}
        if job.require_stable and not report.stable:
            return EXIT_UNSTABLE, files
        return EXIT_OK, files

    if cmd == "induce":
        spec = _need_module(cfg, job, over="K")
        im = induce(spec.presentation, cfg.derivation)
        dims = induced_filtration_dims(im, job.m_max, slack=job.slack, max_rows=_rows(job)).dims
        return EXIT_OK, {"induced.csv": dims_csv(dims)}

    if cmd == "torsion":
        spec = _need_module(cfg, job, over="K")
        cap = job.cap if job.cap is not None else DEFAULT_DEGREE_CAP
        ideal = LaurentIdealPresentation.from_module(spec.presentation)
        profile = brookes_groves_t(ideal, degree_cap=cap)
        doc = profile.as_dict()
        doc["module"] = spec.module_id
        doc["elimination"] = {
            name: [str(g) for g in eliminate(ideal, S, cap)]
            for name, S in (
                ("{" + ",".join(map(str, sorted(S))) + "}", S)
                for S in sorted(profile.torsion, key=lambda S: (len(S), sorted(S)))
            )
        }
        return EXIT_OK, {"torsion.json": _json(doc)}

    if cmd == "oracle":
        cap = job.cap if job.cap is not None else DEFAULT_WORD_CAP
        return EXIT_OK, {"oracle.csv": dims_csv(ore_dim_oracle_dims(cfg.derivation, job.m_max, cap))}

    if cmd == "simplicity":
        return EXIT_OK, {"simplicity.json": _json(check_simplicity(cfg.derivation).as_dict())}

    if cmd == "audit":
        if not job.modules:
            raise ConfigError("'audit' needs at least one --module")
        reports = []
        for path in job.modules:
            spec = load_module(path, cfg)
            if spec.presentation.over != "R":
                raise ConfigError(f"{path}: the audit applies to modules over R")
            reports.append((spec.module_id, gk_estimate(_module_dims(spec, job), job.window), spec.asserted_simple))
        rows = dichotomy_audit(reports, cfg.n)
        return EXIT_OK, {"audit.csv": audit_csv(rows)}

    raise ConfigError(f"unknown command {cmd!r}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise JobFailed(EXIT_INPUT, "input", message)


def build_parser():
    parser = _Parser(prog="gkdim", description="Growth and GK-dimension computations for K_n[x, delta].")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--algebra", required=True, help="algebra description (TOML)")
    parser.add_argument("--module", action="append", default=[], help="module description (TOML); repeatable for audit")
    parser.add_argument("--dims", help="read the dimension sequence for 'gk' from a CSV file")
    parser.add_argument("--source", choices=("module", "closed-form", "oracle"), default=None)
    parser.add_argument("--over", choices=("K", "R"), default="R", help="free module used by --source closed-form")
    parser.add_argument("--m-max", type=int, default=8)
    parser.add_argument("--window", type=int, default=3)
    parser.add_argument("--cap", type=int, default=None)
    parser.add_argument("--slack", type=int, default=1)
    parser.add_argument("--out", help="directory for report files (default: print to stdout)")
    parser.add_argument("--require-stable", action="store_true")
    return parser


def _diagnose(kind, message):
    text = " ".join(str(message).split())
    print(f"gkdim: error: {kind}: {text}", file=sys.stderr)


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        source = args.source or ("csv" if args.dims else "module")
        job = JobSpec(
            command=args.command,
            modules=tuple(args.module),
            dims_path=args.dims,
            source=source,
            over=args.over,
            m_max=args.m_max,
            window=args.window,
            cap=args.cap,
            slack=args.slack,
            require_stable=args.require_stable,
        )
        cfg = load_algebra(args.algebra)
        if job.command == "audit":
            verdict = check_simplicity(cfg.derivation)
            if verdict.status is not SimplicityStatus.SIMPLE_BY_MCCONNELL:
                print(f"gkdim: warning: algebra is not certified simple ({verdict.status.value})", file=sys.stderr)
        status, files = run_job(cfg, job)
    except JobFailed as exc:
        _diagnose(exc.kind, exc)
        return exc.code
    except ResourceLimit as exc:
        _diagnose("resource", exc)
        return EXIT_RESOURCE
    except UnstableInput as exc:
        _diagnose("unstable", exc)
        return EXIT_UNSTABLE
    except (GkdimError, ValueError, ZeroDivisionError) as exc:
        _diagnose("input", exc)
        return EXIT_INPUT

    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for name, text in files.items():
            (out / name).write_text(text)
    else:
        # the first file is the primary report; the rest only go to --out
        sys.stdout.write(next(iter(files.values())))
    if status == EXIT_UNSTABLE:
        _diagnose("unstable", "growth degree did not stabilize")
    return status


if __name__ == "__main__":
    sys.exit(main())
