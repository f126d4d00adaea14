# app/cli.py
"""
Command line surface. Human-readable text by default, deterministic JSON with --json.
Exit codes: 0 success, 1 a checked statement failed, 2 usage or parse error.
"""
import functools
import logging
from pathlib import Path
from typing import Optional

import click

from app.config import configure_logging, get_settings
from app.models.request_models import OutputRecord
from app.services import command_service
from app.services.errors import SkewCharError

logger = logging.getLogger(__name__)

EXIT_FAILED_CHECK = 1
EXIT_USAGE = 2

json_option = click.option("--json", "as_json", is_flag=True, help="Print the structured record instead of text.")


def domain_errors(command):
    """Reports domain errors on stderr and exits with the usage code."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except SkewCharError as e:
            click.echo(f"Error: {type(e).__name__}: {e}", err=True)
            click.get_current_context().exit(EXIT_USAGE)
    return wrapper


def _emit(record: OutputRecord, as_json: bool, text: str) -> None:
    click.echo(record.model_dump_json(indent=2) if as_json else text)


def _terms_text(record: OutputRecord) -> str:
    dec = record.decomposition()
    return str(dec) if dec is not None and dec.terms else "0"


def _paren(parts) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"


def _flag(value: Optional[bool]) -> str:
    return "n/a" if value is None else str(value).lower()


@click.group()
@click.option("--log-level", default=None, help="Overrides SKEWCHAR_LOG_LEVEL.")
def cli(log_level: Optional[str]):
    """Skew characters of symmetric groups and their Littlewood-Richardson coefficients."""
    configure_logging(log_level)


@cli.command()
@click.argument("skew")
@json_option
@domain_errors
def decompose(skew: str, as_json: bool):
    """Decompose the skew character [SKEW]; SKEW is 'outer/inner', e.g. '3,2,1/2,1'."""
    record = command_service.decompose(skew)
    _emit(record, as_json, _terms_text(record))


@cli.command()
@click.argument("lam")
@click.argument("mu")
@click.argument("nu")
@json_option
@domain_errors
def coef(lam: str, mu: str, nu: str, as_json: bool):
    """The LR coefficient c(LAM; MU, NU)."""
    record = command_service.coefficient(lam, mu, nu)
    lam_p, mu_p, nu_p = (_paren(record.inputs[key]) for key in ("lam", "mu", "nu"))
    text = f"c({lam_p}; {mu_p}, {nu_p}) = {record.verdict['coefficient']}"
    _emit(record, as_json, text)


@cli.command()
@click.argument("skew")
@json_option
@domain_errors
def classify(skew: str, as_json: bool):
    """Decide whether [SKEW] is multiplicity free and say why."""
    record = command_service.classify(skew)
    verdict = record.verdict
    text = f"{'multiplicity free' if verdict['multiplicity_free'] else 'not multiplicity free'}: {verdict['reason']}"
    if verdict["orientation"]:
        text += f" ({verdict['orientation']} orientation)"
    _emit(record, as_json, text)


@cli.command()
@click.argument("first")
@click.argument("second")
@json_option
@domain_errors
def equal(first: str, second: str, as_json: bool):
    """Compare the characters of two skew diagrams."""
    record = command_service.equal(first, second)
    text = "\n".join(f"{name}: {_flag(value)}" for name, value in record.verdict.items())
    _emit(record, as_json, text)


@cli.group()
def schubert():
    """Products restricted to a k x l box and the duality with skew characters."""


@schubert.command()
@click.argument("mu")
@click.argument("nu")
@click.option("--box", required=True, help="Rectangle as KxL: K columns, L rows.")
@json_option
@domain_errors
def star(mu: str, nu: str, box: str, as_json: bool):
    """[MU] * [NU] restricted to partitions fitting the box."""
    record = command_service.star(mu, nu, box)
    _emit(record, as_json, _terms_text(record))


@schubert.command()
@click.argument("mu")
@click.argument("lam")
@click.option("--box", required=True, help="Rectangle as KxL: K columns, L rows.")
@json_option
@domain_errors
def duality(mu: str, lam: str, box: str, as_json: bool):
    """Check the coefficients of [LAM/MU] against MU times the box complement of LAM."""
    record = command_service.duality(mu, lam, box)
    verdict = record.verdict
    lines = [f"duality {'holds' if verdict['holds'] else 'fails'}"]
    lines += [f"{_paren(m['alpha'])}: {m['left']} != {m['right']}" for m in verdict["mismatches"]]
    _emit(record, as_json, "\n".join(lines))
    if not verdict["holds"]:
        click.get_current_context().exit(EXIT_FAILED_CHECK)


@cli.command()
@click.option("--max-cells", type=click.IntRange(min=1), default=None, help="Overrides SKEWCHAR_MAX_CELLS.")
@click.option("--max-part", type=click.IntRange(min=1), default=None, help="Overrides SKEWCHAR_MAX_PART.")
@click.option("--max-rows", type=click.IntRange(min=1), default=None, help="Overrides SKEWCHAR_MAX_ROWS.")
@click.option("--jobs", type=click.IntRange(min=1), default=None, help="Worker processes; overrides SKEWCHAR_JOBS.")
@click.option("--progress/--no-progress", default=None, help="Progress bar on stderr.")
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Also write the JSON record here.")
@json_option
@domain_errors
def verify(max_cells, max_part, max_rows, jobs, progress, output: Optional[Path], as_json: bool):
    """Check which multiplicity-free skew characters coincide, over every basic diagram within bounds."""
    settings = get_settings()
    bounds = command_service.bounds_from(max_cells, max_part, max_rows, settings.bounds)
    record = command_service.verify(
        bounds,
        jobs=jobs if jobs is not None else settings.jobs,
        progress=progress if progress is not None else settings.progress,
    )
    if output is not None:
        output.write_text(record.model_dump_json(indent=2) + "\n", encoding="utf-8")
        logger.info(f"Report written to {output}")
    report = record.report
    lines = [
        f"diagrams examined: {report.diagrams_examined}",
        f"distinct forms: {report.distinct_forms}",
        f"multiplicity free: {report.mf_count}",
        f"equality classes: {len(report.equality_classes)} ({report.nontrivial_classes} nontrivial)",
        f"staircase confirmations: {report.staircase_confirmations}",
        f"staircase pairs checked: {report.staircase_pairs_checked}",
        f"violations: {len(report.violations)}",
    ]
    lines += [f"  {v.kind}: {v.first} vs {v.second}" for v in report.violations]
    _emit(record, as_json, "\n".join(lines))
    if not report.confirmed:
        click.get_current_context().exit(EXIT_FAILED_CHECK)


@cli.command()
@click.option("--box-size", type=click.IntRange(min=1), default=4, show_default=True, help="Side of the square box.")
@click.option("--progress/--no-progress", default=None, help="Progress bar on stderr.")
@json_option
@domain_errors
def sweep(box_size: int, progress: Optional[bool], as_json: bool):
    """Cross-check the structural classification against brute force inside a square box."""
    record = command_service.sweep(box_size, progress=progress if progress is not None else get_settings().progress)
    disagreements = record.verdict["disagreements"]
    lines = [f"disagreements: {len(disagreements)}"]
    lines += [f"  {_paren(d['skew']['outer'])}/{_paren(d['skew']['inner'])}: {d['reason']} vs brute force {d['brute_force']}" for d in disagreements]
    _emit(record, as_json, "\n".join(lines))
    if disagreements:
        click.get_current_context().exit(EXIT_FAILED_CHECK)


if __name__ == "__main__":
    cli()
