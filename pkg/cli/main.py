"""Main CLI interface for frobcat."""

import logging
import sys
from typing import Any, Dict, List, Optional

import click

from algebra import present_as_quiver, presentation_to_json
from config import ConfigParser, RunConfig
from core import __version__
from core.exceptions import FrobCatError
from core.pipeline import CategoryPipeline, word_label
from homdim import fingerprint
from storage import ResultWriter, survey_frame
from suites import SuiteRunner
from .survey import iter_survey


LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

logger = logging.getLogger(__name__)


def _configure_logging(verbose: bool, quiet: bool, log_file: Optional[str]) -> None:
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    level = logging.DEBUG if verbose else logging.ERROR if quiet else logging.INFO
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)


def run_options(func):
    """Flags shared by every command that builds a pipeline."""
    options = [
        click.option('--config', 'config_file', type=click.Path(exists=True), help='YAML or JSON run configuration'),
        click.option('--type', 'type_', help='Dynkin type, e.g. A3 (A_n is the path 1-2-...-n; D/E use Bourbaki labels)'),
        click.option('--field', help='"q" for the rationals or "p:<prime>"'),
        click.option('--seed', type=int, help='Seed for every randomized step'),
        click.option('--workers', type=int, help='Worker processes for the survey'),
        click.option('--cutoff', type=int, help='Resolution length cutoff'),
        click.option('--degree-cap', type=int, help='Path-length cap when building Π'),
        click.option('--convention', help='Index convention between Weyl elements and torsion ideals'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _load_config(config_file: Optional[str], **overrides: Any) -> RunConfig:
    if 'type_' in overrides:
        overrides['type'] = overrides.pop('type_')
    return ConfigParser().load(config_file, **overrides)


@click.group()
@click.version_option(version=__version__)
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose output')
@click.option('--quiet', '-q', is_flag=True, help='Suppress output')
@click.option('--log-file', type=click.Path(), help='Also write the log to this file')
@click.pass_context
def cli(ctx, verbose, quiet, log_file):
    """frobcat - Frobenius categories C_{v,w} over Dynkin preprojective algebras."""
    ctx.ensure_object(dict)
    _configure_logging(verbose, quiet, log_file)


@cli.command()
@run_options
@click.option('--output', '-o', type=click.Path(), help='Write the TSV here instead of stdout')
def survey(config_file, output, **overrides):
    """Tabulate every (v, w) pair of W with the invariants of Π_{v,w}."""
    try:
        config = _load_config(config_file, **overrides)
        rows = list(iter_survey(config))
        writer = ResultWriter()
        frame = survey_frame(rows)
        if output:
            writer.write_survey_tsv(rows, output)
            click.echo(f"Survey written to: {output}")
        else:
            writer.write_survey_tsv(rows, click.get_text_stream('stdout'))
        click.echo(writer.survey_footer(frame))
    except FrobCatError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)


@cli.command()
@run_options
@click.option('--suite', 'suites', multiple=True, help='Suite to run (repeatable); all suites if omitted')
@click.option('--samples', type=int, help='Random samples per suite')
@click.option('--exhaustive/--sampled', default=None,
              help='Commutativity and virdim-bounds over every pair (default: on up to A3)')
@click.option('--output', '-o', type=click.Path(), help='Write the JSON report here instead of stdout')
def verify(config_file, suites, samples, exhaustive, output, **overrides):
    """Run verification suites; exit code 0 iff every assertion passes."""
    try:
        config = _load_config(config_file, samples=samples, exhaustive=exhaustive, **overrides)
        runner = SuiteRunner(config)
        names = list(suites) or runner.suite_names
        reports = [runner.run(name) for name in names]
        writer = ResultWriter()
        writer.write_report_json(reports, output or click.get_text_stream('stdout'))
        for report in reports:
            status = "PASS" if report.passed else "FAIL"
            click.echo(f"{status} {report.suite}: {len(report.assertions) - len(report.failures)}/"
                       f"{len(report.assertions)}", err=True)
            for failure in report.failures:
                click.echo(f"  {failure.name}: {failure.detail} (seed {failure.seed})", err=True)
        if not all(r.passed for r in reports):
            sys.exit(1)
    except FrobCatError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)


def presentation_payload(pipeline: CategoryPipeline, v_word: str, w_word: str) -> Dict[str, Any]:
    config = pipeline.config
    v, w = pipeline.element(v_word), pipeline.element(w_word)
    algebra = pipeline.category(v, w).pi_vw()
    presentation = present_as_quiver(algebra, config.presentation_cap)
    return {
        "type": config.type,
        "v": word_label(v),
        "w": word_label(w),
        "field": pipeline.field.label,
        "convention": config.convention,
        "presentation": presentation_to_json(presentation),
        "fingerprint": fingerprint(algebra).to_dict(),
    }


@cli.command()
@run_options
@click.option('--v', 'v_word', required=True, help='Reduced word for v, e.g. "2" or "e"')
@click.option('--w', 'w_word', required=True, help='Reduced word for w, e.g. "1,3,2,1,3"')
@click.option('--output', '-o', type=click.Path(), help='Write the JSON here instead of stdout')
def present(config_file, v_word, w_word, output, **overrides):
    """Print Π_{v,w} as a quiver with relations, with its Morita fingerprint."""
    try:
        config = _load_config(config_file, **overrides)
        payload = presentation_payload(CategoryPipeline(config), v_word, w_word)
        ResultWriter().write_presentation_json(payload, output or click.get_text_stream('stdout'))
    except FrobCatError as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)


@cli.command('validate-config')
@click.argument('config_file', type=click.Path(exists=True))
def validate_config(config_file):
    """Validate a run configuration file."""
    try:
        config = ConfigParser().load(config_file)
        for key, value in config.to_dict().items():
            click.echo(f"  {key}: {value}")
        click.echo("Configuration is valid")
    except FrobCatError as e:
        click.echo(f"Validation failed: {e}", err=True)
        sys.exit(1)


def main():
    """Main entry point."""
    cli()


if __name__ == '__main__':
    main()
