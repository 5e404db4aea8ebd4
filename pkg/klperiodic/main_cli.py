"""Entrypoints for klperiodic

This module contains the application entrypoint of `klperiodic`, the
command-line-interface to the library. The `klperiodic_cli()` entrypoint
can be safely used from tests to run the cli.

Exit codes: 0 when the command succeeded and every check passed, 1 when
a verification check failed, 2 for configuration and usage errors and
130 when interrupted.
"""


import argparse
import csv
import io
import json
import sys

from . import cato
from . import monitor as monitors
from . import suites
from .config import DEFAULT_FLOOR, RunConfig
from .alcove import AlcoveSpace
from .figure import figure
from .formats import v1 as fmt
from .meta import Index


RESET = "\033[0m"
BOLD = "\033[1m"
RED = "\033[31m"
GREEN = "\033[32m"


def show_validation(result, name):
    print(f"{BOLD}{name}{RESET} ", end='')

    if result:
        print(f"is {BOLD}{GREEN}valid{RESET}")
        return

    print(f"has {BOLD}{RED}errors{RESET}:")
    print("")

    for error in result:
        print(f"{BOLD}{error.id}{RESET}:")
        print(f"  {error.message}\n")


def emit(config: RunConfig, text: str):
    """Write `text` to the configured output file or to stdout"""
    if config.out:
        with open(config.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _json_text(data) -> str:
    return json.dumps(data) + "\n"


def cmd_count(config: RunConfig) -> int:
    datum = config.datum
    breakdown = cato.count_breakdown(datum)
    total = sum(n for _, n in breakdown)
    sequence = None
    if config.type_label.startswith("A"):
        sequence = cato.count_sequence(datum.rank)

    if config.format == "json":
        data = {
            "type": config.type_label,
            "count": total,
            "breakdown": [{"w": fmt.describe(w), "name": w.name, "count": n}
                          for w, n in breakdown],
        }
        if sequence is not None:
            data["sequence"] = sequence
        emit(config, _json_text(data))
    elif config.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["w", "count"])
        for w, n in breakdown:
            writer.writerow([w.name, n])
        writer.writerow(["total", total])
        emit(config, buf.getvalue())
    else:
        width = max(len(w.name) for w, _ in breakdown)
        lines = [f"{config.type_label}: {total} simple objects"]
        lines += [f"  {w.name: <{width}}  {n}" for w, n in breakdown]
        if sequence is not None:
            values = ", ".join(str(n) for n in sequence)
            lines.append(f"A0..A{datum.rank}: {values}")
        emit(config, "\n".join(lines) + "\n")
    return 0


def cmd_table(config: RunConfig) -> int:
    datum = config.datum
    if config.format == "csv":
        emit(config, cato.table_csv(datum))
        return 0

    columns = datum.group().enumerate()
    rows = cato.table_rows(datum)
    if config.format == "json":
        data = {
            "type": config.type_label,
            "columns": [y.name for y in columns],
            "rows": [{"name": simple.name, "simple": fmt.describe(simple), "cells": cells}
                     for simple, cells in rows],
        }
        emit(config, _json_text(data))
        return 0

    header = [""] + [y.name for y in columns]
    body = [[simple.name] + cells for simple, cells in rows]
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip()
             for r in [header] + body]
    emit(config, "\n".join(lines) + "\n")
    return 0


def cmd_verify(config: RunConfig, index: Index) -> int:
    json_mode = config.format == "json"
    monitor_name = "NullMonitor" if json_mode else "LogMonitor"
    monitor = monitors.make(monitor_name, sys.stdout.fileno())

    r = suites.run(config.suite, config, monitor)
    report = fmt.output(r)

    res = fmt.validate(report, index)
    if not res:
        show_validation(res, "report")
        return 2

    if json_mode:
        emit(config, _json_text(report))
    else:
        if config.out:
            emit(config, _json_text(report))
        if report["success"]:
            print(f"{BOLD}{GREEN}Passed{RESET}")
        else:
            print(f"{RESET}{BOLD}{RED}Failed{RESET}")

    return 0 if report["success"] else 1


def cmd_figure(config: RunConfig) -> int:
    emit(config, figure(AlcoveSpace(config.datum), config.radius))
    return 0


def parse_arguments(sys_argv):
    parser = argparse.ArgumentParser(
        prog="klperiodic",
        description="Periodic Hecke modules and Kazhdan-Laumon category O")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", metavar="TYPE", default="A2",
                        help="Cartan type label, e.g. A2, B2, G2")
    common.add_argument("--floor", metavar="N", type=int, default=DEFAULT_FLOOR,
                        help="truncation floor of periodic module computations")
    common.add_argument("--radius", metavar="R", type=int, default=None,
                        help="window radius, defaults to 2 l(w0) + 2")
    common.add_argument("--format", metavar="FORMAT", default=None,
                        help="output format: json, csv, svg or text")
    common.add_argument("--out", metavar="PATH", default=None,
                        help="write the output to PATH instead of stdout")
    common.add_argument("--seed", metavar="SEED", type=int, default=0,
                        help="seed of the sampled checks")
    common.add_argument("--v-value", metavar="P/Q", dest="v_value", default=None,
                        help="rational value at which rank certificates are run")
    common.add_argument("--json", action="store_true",
                        help="output results in JSON format")

    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True
    sub.add_parser("count", parents=[common],
                   help="count the simple objects of category O")
    sub.add_parser("table", parents=[common],
                   help="print the restriction table of the simple objects")
    verify = sub.add_parser("verify", parents=[common],
                            help="run a verification suite")
    verify.add_argument("suite", metavar="SUITE", choices=suites.suite_names(),
                        help="one of: " + ", ".join(suites.suite_names()))
    sub.add_parser("figure", parents=[common],
                   help="draw the alcove picture of a rank 2 type")

    return parser.parse_args(sys_argv[1:])


def klperiodic_cli():
    args = parse_arguments(sys.argv)
    config = RunConfig.from_args(args)
    index = Index()

    res = config.validate(index)
    if not res:
        if args.json:
            json.dump(res.as_dict(), sys.stdout)
            sys.stdout.write("\n")
        else:
            show_validation(res, "configuration")
        return 2

    commands = {
        "count": cmd_count,
        "table": cmd_table,
        "figure": cmd_figure,
    }

    try:
        if config.command == "verify":
            return cmd_verify(config, index)
        return commands[config.command](config)
    except KeyboardInterrupt:
        print()
        print(f"{RESET}{BOLD}{RED}Aborted{RESET}")
        return 130
    except ValueError as err:
        print(f"{BOLD}{RED}Error{RESET}: {err}", file=sys.stderr)
        return 2

