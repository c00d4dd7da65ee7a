"""CLI entry point for the JB*-triple workbench."""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Tuple

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import numpy as np
import pandas as pd

from src.campaign.element_io import dumps_element, read_element, write_element
from src.campaign.registry import check_registry, load_claims
from src.campaign.reporting import load_reports, render_text, reports_to_json, write_reports
from src.campaign.runner import campaign_exit_code, run_campaign
from src.errors import PeirceSpectrumError, WorkbenchError
from src.factors.registry import FACTOR_KINDS, parse_factor_spec
from src.numeric import ToleranceConfig
from src.triples import (
    RELATION_KINDS,
    classify_tripotent,
    is_tripotent,
    peirce_frame,
    random_complete_tripotent,
    random_tripotent_in,
    relation,
)
from src.utils.config_loader import WorkbenchSettings, load_settings
from src.utils.logger import get_logger, log_event, setup_logger

logger = get_logger("jbtriple.cli")

EXIT_OK = 0
EXIT_DEVIATION = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jbtriple",
        description="JB*-triple workbench - tripotents, Peirce spaces and verification campaigns",
    )
    parser.add_argument("--seed", type=int, default=None, help="Campaign / sampler seed (default: from config)")
    parser.add_argument("--trials", type=int, default=None, help="Trial budget per suite (default: from config)")
    parser.add_argument("--eq-tol", type=float, default=None, help="Equality tolerance")
    parser.add_argument("--rank-tol", type=float, default=None, help="Rank tolerance")
    parser.add_argument("--log-level", type=str, default=None, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--config", type=str, default=None, help="Settings YAML (default: config/workbench.yaml)")

    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("factors", help="List the factor kinds and their size arguments")

    tripotent = commands.add_parser("tripotent", help="Generate or inspect tripotents")
    tripotent_commands = tripotent.add_subparsers(dest="action", required=True)
    gen = tripotent_commands.add_parser("gen", help="Sample a tripotent")
    gen.add_argument("--factor", required=True, help="Factor spec, e.g. rectangular:2,3 or spin:3+symmetric:2")
    gen.add_argument("--complete", action="store_true", help="Extend the sample to a complete tripotent")
    gen.add_argument("--within", type=str, default=None, help="Element file e; sample inside E2(e)")
    gen.add_argument("--out", type=str, default=None, help="Write the element here instead of stdout")
    check = tripotent_commands.add_parser("check", help="Tripotent test and classification (exit 1 if not)")
    check.add_argument("element", help="Element file")
    peirce = tripotent_commands.add_parser("peirce", help="Peirce ranks, spectrum and frame residuals")
    peirce.add_argument("element", help="Element file")

    rel = commands.add_parser("relation", help="Decide a relation between two tripotents (exit 1 if it fails)")
    rel.add_argument("kind", choices=RELATION_KINDS)
    rel.add_argument("u", help="Element file u")
    rel.add_argument("e", help="Element file e")

    campaign = commands.add_parser("campaign", help="Run or list verification suites")
    campaign_commands = campaign.add_subparsers(dest="action", required=True)
    campaign_commands.add_parser("list", help="List suites with their claims")
    run = campaign_commands.add_parser("run", help="Run suites matching the globs")
    run.add_argument("selection", nargs="*", default=["*"], help="Suite id globs (default: all)")
    run.add_argument("--out", type=str, default=None, help="Write the JSON report here")
    run.add_argument("--format", choices=("text", "json"), default="text", help="Output on stdout")
    run.add_argument("--workers", type=int, default=None, help="Suites run concurrently")
    run.add_argument("--timing", action="store_true", help="Record wall time (reports stop being byte-stable)")
    run.add_argument("--no-progress", action="store_true", help="Disable the progress bar")

    report = commands.add_parser("report", help="Render a saved JSON report")
    report.add_argument("path", help="Report file written by campaign run --out")
    report.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def resolve_overrides(
    args: argparse.Namespace, settings: WorkbenchSettings
) -> Tuple[ToleranceConfig, int, int]:
    """Tolerance, seed and trials with command-line flags applied over the settings."""
    tol = settings.tolerance.with_overrides(eq_tol=args.eq_tol, rank_tol=args.rank_tol)
    seed = settings.campaign.seed if args.seed is None else args.seed
    trials = settings.campaign.trials if args.trials is None else args.trials
    if trials < 1:
        raise WorkbenchError(f"--trials must be positive, got {trials}")

    flags = {"seed": args.seed, "trials": args.trials, "eq_tol": args.eq_tol, "rank_tol": args.rank_tol}
    overrides = {key: value for key, value in flags.items() if value is not None}
    if overrides:
        log_event(logger, logging.DEBUG, "Command-line overrides", extra=overrides)
    return tol, seed, trials


def cmd_factors() -> int:
    rows = [
        {"kind": kind, "sizes": counts[0], "description": description}
        for kind, (counts, description) in FACTOR_KINDS.items()
    ]
    print(pd.DataFrame(rows).to_string(index=False))
    print("\nCombine factors with '+', e.g. spin:3+symmetric:2")
    return EXIT_OK


def cmd_tripotent_gen(args: argparse.Namespace, tol: ToleranceConfig, seed: int, attempts: int) -> int:
    rng = np.random.default_rng(seed)
    space = parse_factor_spec(args.factor)
    within = read_element(args.within, expected=space) if args.within else None
    if args.complete and within is None:
        u = random_complete_tripotent(space, rng, tol, max_attempts=attempts)
    else:
        u = random_tripotent_in(space, rng, within=within, tol=tol, max_attempts=attempts)

    label = "complete tripotent" if args.complete and within is None else "tripotent"
    if args.out:
        write_element(args.out, u, label)
        logger.info(f"Tripotent written to: {args.out}")
    else:
        print(dumps_element(u, label))
    return EXIT_OK


def cmd_tripotent_check(args: argparse.Namespace, tol: ToleranceConfig, samples: int) -> int:
    u = read_element(args.element)
    check = is_tripotent(u, tol)
    print(f"factor:    {u.space.label}")
    print(f"tripotent: {'yes' if check else 'no'} (residual {check.residual:.3e})")
    if not check:
        return EXIT_DEVIATION

    flags = classify_tripotent(u, tol, samples)
    print(f"ranks:     E2={flags.peirce_ranks[0]} E1={flags.peirce_ranks[1]} E0={flags.peirce_ranks[2]}")
    for name in ("complete", "unitary", "minimal", "abelian"):
        print(f"{name + ':':<11}{'yes' if getattr(flags, name) else 'no'}")
    return EXIT_OK


def cmd_tripotent_peirce(args: argparse.Namespace, tol: ToleranceConfig) -> int:
    frame = peirce_frame(read_element(args.element), tol)
    values, counts = np.unique(np.round(frame.eigenvalues, 6), return_counts=True)
    print(f"Peirce ranks (E2, E1, E0): {frame.ranks}")
    print(f"Spectrum of L(u,u): {dict(zip(values.tolist(), counts.tolist()))}")
    print(f"Spectrum residual: {frame.spectrum_residual:.3e}")
    residuals = pd.Series(frame.identity_residuals(), name="residual")
    print(residuals.to_string(float_format=lambda v: f"{v:.3e}"))
    return EXIT_OK


def cmd_relation(args: argparse.Namespace, tol: ToleranceConfig) -> int:
    u = read_element(args.u)
    e = read_element(args.e, expected=u.space)
    verdict = relation(args.kind, u, e, tol)
    print(f"{args.kind}: {'holds' if verdict else 'fails'} (residual {verdict.residual:.3e})")
    if verdict.cross_residual is not None:
        print(f"cross-check residual: {verdict.cross_residual:.3e}")
    if verdict.witness is not None:
        print("witness:")
        print(dumps_element(verdict.witness))
    return EXIT_OK if verdict else EXIT_DEVIATION


def cmd_campaign_list(settings: WorkbenchSettings) -> int:
    suites = check_registry(load_claims(settings.claims_path))
    rows = [{"suite": s.id, "expected": s.expected, "claim": s.citation} for _, s in sorted(suites.items())]
    with pd.option_context("display.max_colwidth", 100):
        print(pd.DataFrame(rows).to_string(index=False))
    return EXIT_OK


def cmd_campaign_run(
    args: argparse.Namespace, settings: WorkbenchSettings, tol: ToleranceConfig, seed: int, trials: int
) -> int:
    workers = settings.campaign.workers if args.workers is None else args.workers
    if workers < 1:
        raise WorkbenchError(f"--workers must be positive, got {workers}")

    reports = run_campaign(
        selection=args.selection,
        seed=seed,
        trials=trials,
        tol=tol,
        sampling=settings.sampling,
        workers=workers,
        record_timing=args.timing or settings.campaign.record_timing,
        claims_path=settings.claims_path,
        progress=not args.no_progress,
    )
    if args.out:
        path = write_reports(args.out, reports)
        logger.info(f"Report written to: {path}")
    print(reports_to_json(reports) if args.format == "json" else render_text(reports))
    return campaign_exit_code(reports)


def cmd_report(args: argparse.Namespace) -> int:
    reports = load_reports(args.path)
    print(reports_to_json(reports) if args.format == "json" else render_text(reports))
    return EXIT_OK


def dispatch(args: argparse.Namespace, settings: WorkbenchSettings) -> int:
    if args.command == "factors":
        return cmd_factors()
    if args.command == "report":
        return cmd_report(args)

    tol, seed, trials = resolve_overrides(args, settings)
    if args.command == "tripotent":
        if args.action == "gen":
            return cmd_tripotent_gen(args, tol, seed, settings.sampling.extend_max_attempts)
        if args.action == "check":
            return cmd_tripotent_check(args, tol, settings.sampling.abelian_samples)
        return cmd_tripotent_peirce(args, tol)
    if args.command == "relation":
        return cmd_relation(args, tol)
    if args.action == "list":
        return cmd_campaign_list(settings)
    return cmd_campaign_run(args, settings, tol, seed, trials)


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = load_settings(args.config)
        setup_logger(
            log_level=args.log_level or settings.log_level,
            log_file=Path(settings.log_file) if settings.log_file else None,
        )
    except (WorkbenchError, FileNotFoundError, AttributeError) as e:
        print(f"Configuration error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return dispatch(args, settings)
    except PeirceSpectrumError as e:
        logger.error(f"Peirce spectrum check failed: {e} (residual {e.residual})")
        return EXIT_DEVIATION
    except (WorkbenchError, FileNotFoundError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"Unexpected error: {e}")
        return EXIT_DEVIATION


if __name__ == "__main__":
    sys.exit(main())
