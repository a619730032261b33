#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Main application entry point for PyYBMaps

  verify --suite <name|all> [--field ...] [--seed ...] [--trials ...] [--tol ...] [--report path] [--timing]
  map eval --map <name> --input <path.json>
  catalog list

JSON goes to stdout, logging to stderr. Exit codes: 0 success,
1 verification failures, 2 usage or input errors.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from .application.di_container import DIContainer
from .application.map_registry import build_map_registry, evaluate_from_json, map_by_name
from .application.suite_runner import ALL_SUITES, SuiteRunner, payload_passed
from .core.entities.fields import field_names
from .core.entities.settings import SettingsEntity
from .core.errors import BackendUnsupported, DomainError, YBMapError
from .core.services.leaf_reduction import chart_by_name, chart_names
from .infrastructure.persistence.json_report_repository import JsonReportRepository
from .infrastructure.persistence.json_settings_repository import JsonSettingsRepository

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors already; keep it for every error path"""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="pyybmaps", description="Yang-Baxter maps from matrix re-factorization")
    parser.add_argument("--settings", default=None, help="settings JSON (default: per-user config dir)")
    parser.add_argument("--log-level", default=None,
                        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", required=True, help=f"suite name or '{ALL_SUITES}'")
    verify.add_argument("--field", dest="field_backend", choices=field_names(), default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--trials", type=int, default=None)
    verify.add_argument("--tol", dest="tolerance", type=float, default=None)
    verify.add_argument("--workers", type=int, default=None)
    verify.add_argument("--report", default=None, help="write the JSON report to this path")
    verify.add_argument("--timing", dest="record_timing", action="store_true", default=None,
                        help="record wall_ms in the report; reruns then differ")
    verify.add_argument("--no-timing", dest="record_timing", action="store_false", default=None,
                        help="record wall_ms as 0 even if the settings file enables timing")

    map_parser = commands.add_parser("map", help="evaluate a registered map")
    map_commands = map_parser.add_subparsers(dest="map_command", required=True)
    evaluate = map_commands.add_parser("eval")
    evaluate.add_argument("--map", dest="map_name", required=True)
    evaluate.add_argument("--input", required=True, help="JSON with x, y and optionally alpha, beta, epsilon")
    evaluate.add_argument("--field", dest="field_backend", choices=field_names(), default=None)

    catalog = commands.add_parser("catalog", help="list charts, maps and suites")
    catalog_commands = catalog.add_subparsers(dest="catalog_command", required=True)
    catalog_commands.add_parser("list")
    return parser


def configure_logging(level: str) -> None:
    logging.basicConfig(level=getattr(logging, level.upper(), logging.WARNING), stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")


def _emit(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _load_settings(container: DIContainer, args: argparse.Namespace) -> SettingsEntity:
    service = container.get_settings_management_service()
    overrides = {key: getattr(args, key, None) for key in
                 ("field_backend", "seed", "trials", "tolerance", "workers", "record_timing", "log_level")}
    return service.merge_overrides(service.load_settings(), overrides)


def run_verify(container: DIContainer, settings: SettingsEntity, args: argparse.Namespace) -> int:
    runner = SuiteRunner(container)
    payload = runner.run(args.suite, settings)
    repository = container.get_report_repository()
    if args.report:
        repository.save_payload(payload, args.report)
    elif settings.report_directory:
        repository.save_payload(payload)
    _emit(payload)
    return EXIT_OK if payload_passed(payload) else EXIT_FAILURES


def run_map_eval(container: DIContainer, settings: SettingsEntity, args: argparse.Namespace) -> int:
    services = container.get_services(settings.field_backend, settings.tolerance,
                                      settings.entry_bound, settings.max_rejections)
    entry = map_by_name(args.map_name, build_map_registry(services))
    if not entry.supports(services.field):
        raise BackendUnsupported(f"Map {entry.name} does not run on {services.field.name}")
    with open(args.input, "r", encoding="utf-8") as f:
        data = json.load(f)
    _emit(evaluate_from_json(entry, data, services.field))
    return EXIT_OK


def run_catalog(container: DIContainer, settings: SettingsEntity) -> int:
    services = container.get_services(settings.field_backend, settings.tolerance)
    registry = build_map_registry(services)
    catalogue = SuiteRunner(container).catalogue
    charts = []
    for name in chart_names():
        chart = chart_by_name(name, services.field)
        charts.append({
            "name": name,
            "coordinates": list(chart.coordinate_names),
            "casimirs": list(chart.casimirs),
            "parameters": chart.parameter_count,
            "description": chart.description,
        })
    _emit({
        "charts": charts,
        "maps": [entry.to_dict() for entry in registry.values()],
        "suites": [catalogue.get(name).to_dict() for name in catalogue.names()],
    })
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Main application entry point"""
    args = build_parser().parse_args(argv)

    # Setup DI
    container = DIContainer.get_instance()
    container.set_settings_repository(JsonSettingsRepository(args.settings))

    try:
        settings = _load_settings(container, args)
    except ValueError as e:
        sys.stderr.write(f"pyybmaps: {e}\n")
        return EXIT_USAGE
    configure_logging(settings.log_level)
    container.set_report_repository(JsonReportRepository(settings.report_directory or None))

    try:
        if args.command == "verify":
            return run_verify(container, settings, args)
        if args.command == "map":
            return run_map_eval(container, settings, args)
        return run_catalog(container, settings)
    except DomainError as e:
        logger.error("Input outside the domain of the map: %s", e)
        return EXIT_USAGE
    except (YBMapError, OSError, ValueError) as e:
        logger.error("%s", e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
