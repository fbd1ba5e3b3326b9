"""Command-line front end.

Four commands: count (one exact number), table (rebuild a reference table),
verify (run the identity matrix), enumerate (list elements as text).  Exit
codes: 0 success, 1 verification failure, 2 usage or domain error, 3 the
feasibility cap refused a brute-force request.
"""

from __future__ import annotations

import functools
import sys
from pathlib import Path
from typing import Callable, TypeVar

import click

from .core import MonoidFamily, format_diagram
from .counting import cache_load, cache_save, e_rank, e_total, exi_rank, exi_total
from .errors import DomainError, TooLargeError
from .idempotency import is_idempotent_direct, is_twisted_idempotent
from .oracle import DEFAULT_CAP, brute_report, enumerate_elements
from .tables import render_table
from .verify import run_full, run_quick

MAX_TABLE_N = 12

T = TypeVar("T")

_FAMILY = click.Choice([f.value for f in MonoidFamily])
_CACHE_FILE = "counts.json"


def _guarded(fn: Callable[..., None]) -> Callable[..., None]:
    @functools.wraps(fn)
    def wrapper(*args: object, **kwargs: object) -> None:
        try:
            fn(*args, **kwargs)
        except TooLargeError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except DomainError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)

    return wrapper


def _with_cache(cache_dir: str | None, body: Callable[[], T]) -> T:
    if cache_dir is None:
        return body()
    path = Path(cache_dir) / _CACHE_FILE
    cache_load(path)
    result = body()
    path.parent.mkdir(parents=True, exist_ok=True)
    cache_save(path)
    return result


@click.group()
@click.version_option(package_name="diagmon")
def main() -> None:
    """Exact idempotent counts in diagram monoids."""


@main.command("count")
@click.option("--family", type=_FAMILY, required=True, help="Monoid family.")
@click.option("--n", type=int, required=True, help="Number of strands.")
@click.option("--rank", type=int, default=None, help="Restrict to one rank.")
@click.option("--M", "m_order", type=int, default=None, help="Twist order (0 = no finite order).")
@click.option(
    "--method",
    type=click.Choice(["formula", "recurrence", "mu_sum", "closed", "bruteforce"]),
    default=None,
    help="Computation route; defaults to the cheapest for the query.",
)
@click.option("--cap", type=int, default=DEFAULT_CAP, help="Brute-force feasibility cap.")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
@_guarded
def cmd_count(
    family: str,
    n: int,
    rank: int | None,
    m_order: int | None,
    method: str | None,
    cap: int,
    cache_dir: str | None,
) -> None:
    """Print one exact count: idempotents, by rank, or twisted."""
    fam = MonoidFamily(family)

    def compute() -> int:
        if method == "bruteforce":
            report = brute_report(fam, n, M=m_order, cap=cap)
            if m_order is not None:
                if rank is not None:
                    return report.twisted_by_rank.get(rank, 0)
                return report.twisted_total
            if rank is not None:
                return report.idempotents_by_rank.get(rank, 0)
            return report.idempotents_total
        if m_order is not None:
            if rank is not None:
                return exi_rank(fam, n, rank, m_order)
            return exi_total(fam, n, m_order, method or "formula")
        if rank is not None:
            return e_rank(fam, n, rank, method or "recurrence")
        return e_total(fam, n, method or "recurrence")

    click.echo(str(_with_cache(cache_dir, compute)))


@main.command("table")
@click.option("--which", required=True, help="Table id, 1 through 10.")
@click.option("--max-n", type=int, default=10, show_default=True)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["csv", "json", "markdown"]),
    default="markdown",
    show_default=True,
)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write here instead of stdout.")
@click.option("--cache-dir", type=click.Path(file_okay=False), default=None)
@_guarded
def cmd_table(which: str, max_n: int, fmt: str, out: str | None, cache_dir: str | None) -> None:
    """Rebuild one of the ten reference tables."""
    if max_n > MAX_TABLE_N:
        raise DomainError(f"max-n is limited to {MAX_TABLE_N}, got {max_n}")
    text = _with_cache(cache_dir, lambda: render_table(which, max_n, fmt))
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text)


@main.command("verify")
@click.option(
    "--profile",
    type=click.Choice(["quick", "full"]),
    default="quick",
    show_default=True,
)
@click.option("--cap", type=int, default=DEFAULT_CAP)
@_guarded
def cmd_verify(profile: str, cap: int) -> None:
    """Run the verification matrix; exit 1 on any mismatch."""
    report = run_quick(cap) if profile == "quick" else run_full(cap)
    click.echo(report.render())
    if not report.ok:
        sys.exit(1)


@main.command("enumerate")
@click.option("--family", type=_FAMILY, required=True)
@click.option("--n", type=int, required=True)
@click.option(
    "--filter",
    "keep",
    type=click.Choice(["all", "idempotent", "twisted"]),
    default="all",
    show_default=True,
)
@click.option("--M", "m_order", type=int, default=None, help="Twist order for --filter twisted.")
@click.option("--cap", type=int, default=DEFAULT_CAP)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_guarded
def cmd_enumerate(
    family: str,
    n: int,
    keep: str,
    m_order: int | None,
    cap: int,
    out: str | None,
) -> None:
    """List elements, one diagram per line, with a count trailer."""
    fam = MonoidFamily(family)
    order = 0 if m_order is None else m_order
    lines: list[str] = []
    count = 0
    for a in enumerate_elements(fam, n, cap):
        if keep == "idempotent" and not is_idempotent_direct(a):
            continue
        if keep == "twisted" and not is_twisted_idempotent(a, order):
            continue
        lines.append(format_diagram(a))
        count += 1
    lines.append(f"# count: {count}")
    text = "\n".join(lines) + "\n"
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text)


if __name__ == "__main__":
    main()
