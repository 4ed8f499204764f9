"""Command-line bootstrap: argument parsing, config merging and job dispatch"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

from pydantic import ValidationError as PydanticValidationError

from hecke.constants import EXIT_VALIDATION, logger
from hecke.errors import HeckeError, ValidationError
from hecke.executor import create_job, execute_job
from hecke.schema_utils import load_config

from app.dependencies import get_jobs, get_seed, get_storage
from app.middleware import encode_record, error_to_record, exit_code_for
from app.models import JobConfig
from app.routes import COMMANDS


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="JobConfig file (YAML or JSON)")
    parser.add_argument("--output", help="write records to this JSON-lines file instead of stdout")
    parser.add_argument("--seed", type=int, help="overrides HECKE_ENGINE_SEED")
    parser.add_argument("--jobs", type=int, help="worker cap for the witness search")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")


def _add_space(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--kind", help="full, gamma0, gamma1_upper, gamma_diag or custom")
    parser.add_argument("--level", type=int, help="level N of the group")
    parser.add_argument("--sign", help="SL or GL")
    parser.add_argument("--module", help="e.g. sym:10:0:Q, trivial:F5, char:5:1:2:F5")
    parser.add_argument("--degree", type=int, help="cohomological degree, 0 or 1")
    parser.add_argument("--path", help="ambient or direct")
    parser.add_argument("--labels", help="operator labels, e.g. 2,3,7")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hecke", description="Hecke operators on cohomology, computed exactly")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="right cosets of a double coset")
    _add_space(p)
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--delta", help="row-major matrix a,b,c,d")

    p = sub.add_parser("hecke-matrix", help="matrix of T_p^(m) on H^i")
    _add_space(p)
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)

    p = sub.add_parser("eigensystems", help="simultaneous eigensystems of the labels on H^i")
    _add_space(p)

    for name in ("degree-check", "series-check"):
        p = sub.add_parser(name)
        p.add_argument("--n", type=int)
        p.add_argument("--primes", help="e.g. 2,3,5,7")

    p = sub.add_parser("reduce", help="witnesses with one-dimensional coefficients")
    _add_space(p)
    p.add_argument("--source-level", type=int, dest="level", help="alias of --level")
    p.add_argument("--mode", help="char0 or charl")
    p.add_argument("--ell", type=int)
    p.add_argument("--nu", type=int)
    p.add_argument("--target-level", type=int, help="N; the char l target has level N * ell^nu")
    p.add_argument("--modulus", type=int, help="character modulus override")

    sub.add_parser("rep-check", help="brute-force representation lemmas")
    sub.add_parser("selftest", help="the full invariant suite")
    sub.add_parser("schema", help="print the JobConfig schema")

    for p in sub.choices.values():
        _add_common(p)
    return parser


def build_config(args: argparse.Namespace) -> JobConfig:
    """Config file first, then flags given on the command line"""
    data: Dict[str, Any] = load_config(args.config) if getattr(args, "config", None) else {}
    data["command"] = args.command
    group = dict(data.get("group") or {})
    reduction = dict(data.get("reduction") or {})

    def flag(name: str):
        return getattr(args, name, None)

    for name in ("kind", "level", "sign"):
        if flag(name) is not None:
            group[name] = flag(name)
    if args.command == "reduce" and "kind" not in group:
        group["kind"] = "gamma1_upper"
    if "kind" not in group and group.get("level", 1) > 1:
        group["kind"] = "gamma0"
    data["group"] = group

    for name in ("module", "degree", "path", "p", "m", "n", "output", "jobs"):
        if flag(name) is not None:
            data[name] = flag(name)
    if flag("labels") is not None:
        data["labels"] = [x for x in flag("labels").split(",") if x.strip()]
    if flag("primes") is not None:
        data["primes"] = [int(x) for x in flag("primes").split(",") if x.strip()]
    if flag("delta") is not None:
        data["delta"] = [int(x) for x in flag("delta").split(",") if x.strip()]
    for name in ("mode", "ell", "nu", "target_level", "modulus"):
        if flag(name) is not None:
            reduction[name] = flag(name)
    data["reduction"] = reduction
    data["seed"] = get_seed(flag("seed"), data.get("seed"))
    data["jobs"] = get_jobs(flag("jobs"), data.get("jobs"))
    return JobConfig(**data)


def setup_logging(level: Optional[str] = None) -> None:
    """Apply --log-level and keep third-party loggers quiet"""
    if level:
        logging.getLogger().setLevel(level.upper())
        logger.setLevel(level.upper())
    logging.getLogger("asyncio").setLevel(logging.WARNING)


def _emit(records: List[dict]) -> None:
    for record in records:
        sys.stdout.write(encode_record(record) + "\n")
    sys.stdout.flush()


async def run_cli(argv: Optional[List[str]] = None) -> int:
    """Parse, run one job and emit its records; returns the exit code"""
    args = build_parser().parse_args(argv)
    setup_logging(getattr(args, "log_level", None))
    try:
        cfg = build_config(args)
    except (HeckeError, PydanticValidationError) as e:
        _emit([error_to_record(e)])
        return EXIT_VALIDATION

    try:
        storage = get_storage(cfg.output)
    except ValueError as e:
        _emit([error_to_record(ValidationError(str(e)))])
        return EXIT_VALIDATION
    job_id = create_job(cfg.command, cfg.model_dump(mode="json"), storage)
    job = await execute_job(job_id, lambda: COMMANDS[cfg.command](cfg), storage, error_to_record)

    if not cfg.output:
        _emit(job["records"] + ([job["error"]] if job.get("error") else []))
    else:
        logger.info(f"Wrote {len(job['records'])} records to {cfg.output}")
    return exit_code_for(job)
