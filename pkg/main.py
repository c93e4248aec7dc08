"""
Command-line entry point: Coxeter element listings, claim verification and
Amida diagram rendering.
"""
import json
import logging
import sys
from typing import Dict, List, Optional, TextIO

import click

from amida import from_word, render_ascii, standard_from_coxeter_word
from config import ENUM_RANGE, OUTPUT_FORMATS, OracleConfig, RunConfig, load_config_from_file
from coxeter import CoxeterPath, cyclic_permutation, enumerate_paths, height, stanza_decomposition, word_from_path
from longest import even_affords_longest, find_half_power_split, is_admissible
from oracle import CLAIMS, VerificationReport, verify
from words import GeneratorWord, is_coxeter_word


logger = logging.getLogger(__name__)


def setup_logging(level: str = "WARNING"):
    """Configure logging for the application; standard output carries the results."""
    log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    logging.basicConfig(
        level=getattr(logging, level.upper()),
        format=log_format,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )


def _join(values) -> str:
    return ",".join(str(v) for v in values)


def enum_rows(n: int) -> List[Dict]:
    """One record per Coxeter path of S_n, in enumeration order."""
    rows = []
    for p in enumerate_paths(n):
        presentation = stanza_decomposition(p)
        row = {
            "path": str(p),
            "word": str(word_from_path(p)),
            "perm": str(cyclic_permutation(p)),
            "height": height(p),
            "stanzas": list(presentation.stanza_starts),
            "costanzas": list(presentation.costanza_starts),
        }
        if n % 2 == 0:
            row["longest"] = even_affords_longest(p)
        else:
            row["admissible"] = is_admissible(p)
            split = find_half_power_split(p)
            row["split"] = split.to_dict() if split else None
        rows.append(row)
    return rows


def _format_enum_row(row: Dict) -> str:
    if "longest" in row:
        flag = "longest" if row["longest"] else "-"
    else:
        flag = "admissible" if row["admissible"] else "-"
    fields = [
        row["path"],
        row["word"],
        row["perm"],
        str(row["height"]),
        _join(row["stanzas"]),
        _join(row["costanzas"]),
        flag,
    ]
    if row.get("split"):
        fields.append(f"w1={row['split']['w1']} w2={row['split']['w2']}")
    return "\t".join(fields)


def _format_report(report: VerificationReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    line = (f"{status} {report.claim} n={report.n} expected={report.expected} "
            f"computed={report.computed} ({report.elapsed_ms} ms)")
    return "\n".join([line] + [f"  witness: {w}" for w in report.witnesses])


def _open_output(path: Optional[str]) -> TextIO:
    return open(path, "w") if path else sys.stdout


def _emit(lines: List[str], path: Optional[str]):
    out = _open_output(path)
    try:
        for line in lines:
            out.write(line + "\n")
    finally:
        if path:
            out.close()


def plan_checks(run: RunConfig) -> List[tuple]:
    """
    (claim, n) pairs to verify, checked before any work starts.

    An explicit n must suit every requested claim; over a range the
    unsuitable n are skipped with a notice on standard error.
    """
    if not run.claims:
        raise click.UsageError("No claims selected")
    if not run.n_values:
        raise click.UsageError("Give --n or --max-n")
    selected = list(CLAIMS) if "all" in run.claims else list(run.claims)
    unknown = [c for c in selected if c not in CLAIMS]
    if unknown:
        raise click.UsageError(f"Unknown claim: {', '.join(unknown)}")

    plan = []
    if run.explicit_n:
        n = run.n_values[0]
        claims = selected
        if set(claims) == set(CLAIMS):
            claims = [c for c in CLAIMS if CLAIMS[c].accepts(n)]
            if not claims:
                raise click.UsageError(f"No claim covers n = {n}")
        for claim_id in claims:
            claim = CLAIMS[claim_id]
            if not claim.accepts_parity(n):
                raise click.UsageError(f"Claim {claim_id} needs {claim.parity} n, got {n}")
            if not claim.min_n <= n <= claim.max_n:
                raise click.UsageError(
                    f"Claim {claim_id} covers {claim.min_n} <= n <= {claim.max_n}, got {n}"
                )
            plan.append((claim_id, n))
        return plan

    top = max(run.n_values)
    limit = max(CLAIMS[c].max_n for c in selected)
    if top > limit:
        raise click.UsageError(f"--max-n {top} exceeds the exhaustive range (largest is {limit})")
    for claim_id in selected:
        claim = CLAIMS[claim_id]
        skipped = [n for n in run.n_values if not claim.accepts(n)]
        if skipped:
            click.echo(f"note: {claim_id} skips n = {_join(skipped)}", err=True)
        plan.extend((claim_id, n) for n in run.n_values if claim.accepts(n))
    return plan


@click.group()
@click.option("--log-level", default="WARNING",
              type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              help="Logging level (messages go to standard error)")
def cli(log_level):
    """Coxeter elements of S_n and the longest element."""
    setup_logging(log_level)


@cli.command("enum")
@click.option("--n", "n", type=int, required=True, help="Degree of S_n")
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default="text")
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None,
              help="Output file (default: standard output)")
def enum_command(n, output_format, output_path):
    """List every Coxeter element of S_n."""
    low, high = ENUM_RANGE
    if not low <= n <= high:
        raise click.UsageError(f"--n must lie in {low}..{high}, got {n}")
    rows = enum_rows(n)
    if output_format == "json":
        lines = [json.dumps(row, sort_keys=True) for row in rows]
    else:
        lines = [_format_enum_row(row) for row in rows]
    _emit(lines, output_path)


def _parse_claims(text: Optional[str]) -> List[str]:
    if not text:
        return []
    if text.strip() == "all":
        return list(CLAIMS)
    return [part.strip() for part in text.split(",") if part.strip()]


@cli.command("check")
@click.option("--n", "n", type=int, default=None, help="Single degree")
@click.option("--max-n", "max_n", type=int, default=None, help="Check every n from 3 to this")
@click.option("--claims", "claims_text", default=None, help="Comma-separated claim ids, or 'all'")
@click.option("--format", "output_format", type=click.Choice(OUTPUT_FORMATS), default=None)
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
@click.option("--workers", type=int, default=None, envvar="COXETER_WORKERS",
              help="Worker processes for the ordering sweeps")
@click.option("--budget-secs", "budget_secs", type=float, default=None,
              help="Time budget before the odd sweep falls back to the per-class search")
@click.option("--config", "-c", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="Run configuration file (JSON or YAML)")
def check_command(n, max_n, claims_text, output_format, output_path, workers, budget_secs,
                  config_path):
    """Verify claims against the brute-force oracle."""
    base = OracleConfig.from_env()
    try:
        if config_path:
            run = load_config_from_file(config_path)
        else:
            run = RunConfig(subcommand="check", budget_secs=base.budget_secs,
                            workers=base.workers)
    except ValueError as e:
        raise click.UsageError(str(e))

    if n is not None and max_n is not None:
        raise click.UsageError("Give either --n or --max-n, not both")
    if n is not None:
        run.n_values, run.explicit_n = [n], True
    elif max_n is not None:
        run.n_values, run.explicit_n = list(range(3, max_n + 1)), False
    if claims_text:
        run.claims = _parse_claims(claims_text)
    if output_format:
        run.output_format = output_format
    if output_path:
        run.output_path = output_path
    if workers is not None:
        if workers < 1:
            raise click.UsageError(f"--workers must be at least 1, got {workers}")
        run.workers = workers
    if budget_secs is not None:
        run.budget_secs = budget_secs

    plan = plan_checks(run)
    oracle_config = run.oracle_config(base)
    logger.info("Running %d checks with %d workers", len(plan), oracle_config.workers)

    reports = []
    try:
        for claim_id, degree in plan:
            reports.append(verify(degree, claim_id, oracle_config))
    except Exception as e:
        logger.error("Verification failed: %s", e, exc_info=True)
        sys.exit(1)

    if run.output_format == "json":
        lines = [json.dumps(report.to_dict()) for report in reports]
    else:
        lines = [_format_report(report) for report in reports]
    _emit(lines, run.output_path)

    failed = [r for r in reports if not r.passed]
    if failed:
        logger.warning("%d of %d checks failed", len(failed), len(reports))
        sys.exit(1)


@cli.command("render")
@click.option("--word", "word_text", default=None, help="Generator word, e.g. 3,2,3,1")
@click.option("--path", "path_text", default=None, help="Coxeter path, e.g. -,+,-")
@click.option("--n", "n", type=int, default=None, help="Degree of S_n")
@click.option("--standard", is_flag=True, help="Draw the standard diagram of a Coxeter word")
@click.option("--out", "output_path", type=click.Path(dir_okay=False), default=None)
def render_command(word_text, path_text, n, standard, output_path):
    """Draw an Amida diagram as ASCII."""
    if (word_text is None) == (path_text is None):
        raise click.UsageError("Give exactly one of --word and --path")
    try:
        if path_text is not None:
            p = CoxeterPath.parse(path_text, n)
            diagram = standard_from_coxeter_word(word_from_path(p))
        else:
            if n is None:
                raise click.UsageError("--word needs --n")
            w = GeneratorWord.parse(word_text, n)
            if standard:
                if not is_coxeter_word(w):
                    raise click.UsageError(f"[{w}] is not a Coxeter word of S_{n}")
                diagram = standard_from_coxeter_word(w)
            else:
                diagram = from_word(w)
    except ValueError as e:
        raise click.UsageError(str(e))
    _emit([render_ascii(diagram)], output_path)


def main():
    """Main execution function."""
    cli()


if __name__ == "__main__":
    main()
