"""
Command-line front end: element arithmetic, rendering, enumeration and verification
"""

import logging
import sys

import click

from config import Config
from constants import ERROR_INVALID_LITERAL, ERROR_INVALID_WORD, GENERATOR_SETS, VERIFY_SUITES
from errors import AlgebraError, CapExceeded
from services.blockbij import BlockBijection, compose, inverse
from services.froidure_pin import froidure_pin, phi_generators
from services.verification import cardinality_oracle, run_suite
from services.words import format_letters, parse_word, phi_eval
from utils.performance import clear_performance_metrics, format_performance_summary
from utils.validation import validate_block_bijection_text, validate_word_text

logger = logging.getLogger(__name__)

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def configure_logging(level: str = None):
    """Stream handler on stderr, plus a file handler when LOG_FILE is set"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if Config.LOG_FILE:
        handlers.append(logging.FileHandler(Config.LOG_FILE))
    logging.basicConfig(
        level=getattr(logging, (level or Config.LOG_LEVEL).upper()),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
        force=True,
    )


def _element(n: int, text: str, name: str) -> BlockBijection:
    if not validate_block_bijection_text(text):
        raise click.BadParameter(f"{ERROR_INVALID_LITERAL}: {text!r}", param_hint=name)
    try:
        a = BlockBijection.from_literal(n, text)
    except AlgebraError as e:
        raise click.BadParameter(str(e), param_hint=name)
    return a


def _echo_timings():
    for line in format_performance_summary():
        click.echo(line)


def _fail(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


@click.group()
@click.option("--cap", type=click.IntRange(min=1), default=None, help="Enumeration cap (classes or elements)")
@click.option("--timings", is_flag=True, help="Print per-operation timings after the command")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), default=None)
@click.pass_context
def cli(ctx, cap, timings, log_level):
    """Block bijections and the presentation of the dual symmetric inverse monoid."""
    configure_logging(log_level)
    ctx.ensure_object(dict)
    ctx.obj["cap"] = cap
    if timings:
        clear_performance_metrics()
        ctx.call_on_close(_echo_timings)


@cli.command()
@click.argument("n", type=click.IntRange(min=1))
@click.argument("a")
@click.argument("b")
def mul(n, a, b):
    """Product A B of two block-bijection literals."""
    click.echo(compose(_element(n, a, "A"), _element(n, b, "B")).to_literal())


@cli.command()
@click.argument("n", type=click.IntRange(min=1))
@click.argument("a")
def inv(n, a):
    """Inverse (row flip) of a block-bijection literal."""
    click.echo(inverse(_element(n, a, "A")).to_literal())


@cli.command("eval")
@click.argument("n", type=click.IntRange(min=1))
@click.argument("word")
def eval_word(n, word):
    """Image of a word such as "x s2 x" or "sigma y4"."""
    if not validate_word_text(word):
        raise click.BadParameter(f"{ERROR_INVALID_WORD}: {word!r}", param_hint="WORD")
    try:
        image = phi_eval(parse_word(word, n), n)
    except AlgebraError as e:
        raise click.BadParameter(str(e), param_hint="WORD")
    click.echo(image.to_literal())


@cli.command()
@click.argument("n", type=click.IntRange(min=1))
@click.argument("a")
@click.option("--dot", is_flag=True, help="Graphviz source instead of ASCII")
def render(n, a, dot):
    """Draw a block bijection."""
    click.echo(_element(n, a, "A").render(dot=dot))


@cli.command("enumerate")
@click.argument("n", type=click.IntRange(min=1))
@click.option("--gens", type=click.Choice(GENERATOR_SETS), default="xs", show_default=True)
@click.option("--list", "show", is_flag=True, help="Print every element with its word")
@click.pass_context
def enumerate_command(ctx, n, gens, show):
    """Froidure-Pin enumeration from the generator images."""
    try:
        letters, images = phi_generators(n, gens)
        monoid = froidure_pin(images, letters, cap=ctx.obj["cap"])
    except CapExceeded as e:
        _fail(str(e))
    click.echo(monoid.size)
    if show:
        for i, element in enumerate(monoid.elements):
            click.echo(f"{i}\t{format_letters(monoid.word_of(i))}\t{element.to_literal()}")


@cli.command()
@click.argument("n", type=click.IntRange(min=1))
def card(n):
    """Number of block bijections of degree N, by brute force over set partitions."""
    try:
        click.echo(cardinality_oracle(n))
    except AlgebraError as e:
        raise click.BadParameter(str(e), param_hint="N")


@cli.command()
@click.argument("n", type=click.IntRange(min=1))
@click.argument("suite", type=click.Choice(VERIFY_SUITES), default="all")
@click.pass_context
def verify(ctx, n, suite):
    """Run a verification suite; exit 1 if any check fails."""
    try:
        report = run_suite(suite, n, cap=ctx.obj["cap"])
    except CapExceeded as e:
        _fail(str(e))
    except AlgebraError as e:
        raise click.BadParameter(str(e), param_hint="N")
    for line in report.lines():
        click.echo(line)
    if not report.passed:
        ctx.exit(1)


if __name__ == "__main__":
    cli(obj={})
