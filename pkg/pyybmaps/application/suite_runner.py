#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Suite Runner for PyYBMaps

Runs the trials of a suite on a thread pool. Each trial gets its own
random.Random seeded from (master seed, suite, trial index), so the
report does not depend on the number of workers or on scheduling.
"""

import logging
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from ..core.entities.report import SCHEMA_VERSION, TrialFailure, VerificationReport
from ..core.entities.settings import SettingsEntity
from ..core.errors import DomainError
from ..core.services.sampling import derive_seed
from ..infrastructure.serialization import encode_value
from .di_container import DIContainer, ServiceBundle
from .suites import Suite, SuiteCatalogue, TrialContext, build_default_catalogue

logger = logging.getLogger(__name__)

ALL_SUITES = "all"


@dataclass
class _TrialResult:
    index: int
    status: str  # "passed", "failed" or "rejected"
    failure: Optional[TrialFailure] = None


class SuiteRunner:
    """Executes suites and assembles their reports"""

    def __init__(self, container: Optional[DIContainer] = None,
                 catalogue: Optional[SuiteCatalogue] = None):
        self.container = container or DIContainer.get_instance()
        self.catalogue = catalogue or build_default_catalogue()

    def _services(self, suite: Suite, settings: SettingsEntity) -> ServiceBundle:
        backend = suite.backend or settings.field_backend
        return self.container.get_services(backend, settings.tolerance,
                                           settings.entry_bound, settings.max_rejections)

    def _run_trial(self, suite: Suite, services: ServiceBundle, seed: int, index: int) -> _TrialResult:
        rng = random.Random(derive_seed(seed, suite.name, index))
        ctx = TrialContext(suite=suite.name, index=index, seed=seed, rng=rng, services=services)
        field = services.field
        try:
            outcome = suite.trial(ctx)
        except DomainError as e:
            logger.debug("%s trial %d rejected: %s", suite.name, index, e)
            return _TrialResult(index, "rejected")
        except Exception as e:
            logger.warning("%s trial %d raised %s: %s", suite.name, index, type(e).__name__, e)
            return _TrialResult(index, "failed", TrialFailure(
                trial=index, inputs=None, lhs=None, rhs=None, message=f"{type(e).__name__}: {e}"))
        if outcome.passed:
            return _TrialResult(index, "passed")
        logger.warning("%s trial %d failed %s", suite.name, index, outcome.message)
        return _TrialResult(index, "failed", TrialFailure(
            trial=index,
            inputs=encode_value(outcome.inputs, field),
            lhs=encode_value(outcome.lhs, field),
            rhs=encode_value(outcome.rhs, field),
            message=outcome.message,
        ))

    def run_suite(self, name: str, settings: Optional[SettingsEntity] = None) -> VerificationReport:
        """Run one suite; UnknownSuite for unregistered names"""
        settings = settings or SettingsEntity()
        suite = self.catalogue.get(name)
        services = self._services(suite, settings)
        trials = settings.trials or suite.default_trials
        start = time.perf_counter()
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            results = list(pool.map(
                lambda index: self._run_trial(suite, services, settings.seed, index), range(trials)))
        elapsed = (time.perf_counter() - start) * 1000.0
        results.sort(key=lambda r: r.index)
        rejected = sum(1 for r in results if r.status == "rejected")
        report = VerificationReport(
            suite=suite.name,
            backend=services.field.name,
            seed=settings.seed,
            attempted=len(results),
            accepted=len(results) - rejected,
            rejected=rejected,
            failures=[r.failure for r in results if r.failure is not None],
            wall_ms=round(elapsed, 3) if settings.record_timing else 0.0,
        )
        logger.info("%s: %d accepted, %d rejected, %d failed in %.1f ms", suite.name,
                    report.accepted, report.rejected, len(report.failures), elapsed)
        return report

    def run_all(self, settings: Optional[SettingsEntity] = None,
                names: Optional[List[str]] = None) -> Dict[str, Any]:
        """Every suite in catalogue order, as one bundle payload"""
        settings = settings or SettingsEntity()
        start = time.perf_counter()
        reports = [self.run_suite(name, settings) for name in (names or self.catalogue.names())]
        elapsed = (time.perf_counter() - start) * 1000.0
        return {
            "schema_version": SCHEMA_VERSION,
            "seed": settings.seed,
            "backend": settings.field_backend,
            "suites": [report.to_dict() for report in reports],
            "wall_ms": round(elapsed, 3) if settings.record_timing else 0.0,
        }

    def run(self, name: str, settings: Optional[SettingsEntity] = None) -> Dict[str, Any]:
        """Payload for one suite or for "all"; the bundle passes when every suite passes"""
        if name == ALL_SUITES:
            return self.run_all(settings)
        return self.run_suite(name, settings).to_dict()


def payload_passed(payload: Dict[str, Any]) -> bool:
    if "suites" in payload:
        return all(not suite["failures"] for suite in payload["suites"])
    return not payload["failures"]
