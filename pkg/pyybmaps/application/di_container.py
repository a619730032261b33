#!/usr/bin/env python3
# Licensed under GPLV3.0
# (c) 2025 pyybmaps contributors

"""
Dependency Injection Container for PyYBMaps

Manages application dependencies and wiring. Mathematical services depend
on the scalar backend, so they are built as one bundle per
(backend, tolerance, sampling bounds) and cached.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ..core.entities.fields import ScalarField, field_by_name
from ..core.entities.scalars import DEFAULT_TOLERANCE
from ..core.services.degenerate_limits import DegenerateLimitsService
from ..core.services.differentiation import DifferentiationService
from ..core.services.leaf_reduction import LeafReductionService
from ..core.services.poisson import PoissonStructureService
from ..core.services.refactorization import RefactorizationService
from ..core.services.sampling import DEFAULT_ENTRY_BOUND, DEFAULT_MAX_REJECTIONS, InstanceSampler
from ..core.services.settings import SettingsManagementService
from ..core.services.verification import YangBaxterVerifier

# Core interfaces
from ..core.interfaces.report_repository import ReportRepositoryInterface
from ..core.interfaces.settings_repository import SettingsRepositoryInterface


@dataclass(frozen=True)
class ServiceBundle:
    """Every mathematical service wired to one scalar backend"""

    field: ScalarField
    refactorization: RefactorizationService
    differentiation: DifferentiationService
    poisson: PoissonStructureService
    leaf_reduction: LeafReductionService
    limits: DegenerateLimitsService
    verifier: YangBaxterVerifier
    sampler: InstanceSampler

    @classmethod
    def build(cls, field: ScalarField, entry_bound: int = DEFAULT_ENTRY_BOUND,
              max_rejections: int = DEFAULT_MAX_REJECTIONS) -> 'ServiceBundle':
        refactorization = RefactorizationService(field)
        differentiation = DifferentiationService(field)
        poisson = PoissonStructureService(field, differentiation)
        leaf_reduction = LeafReductionService(field, refactorization, poisson, differentiation)
        return cls(
            field=field,
            refactorization=refactorization,
            differentiation=differentiation,
            poisson=poisson,
            leaf_reduction=leaf_reduction,
            limits=DegenerateLimitsService(field, leaf_reduction),
            verifier=YangBaxterVerifier(field),
            sampler=InstanceSampler(field, entry_bound, max_rejections, refactorization),
        )


class DIContainer:
    """Dependency injection container"""

    _instance: Optional['DIContainer'] = None

    def __init__(self):
        self._settings_management_service: Optional[SettingsManagementService] = None
        self._bundles: Dict[Tuple[str, float, int, int], ServiceBundle] = {}

        # Repositories are injected by the entry point
        self._settings_repository: Optional[SettingsRepositoryInterface] = None
        self._report_repository: Optional[ReportRepositoryInterface] = None

    @classmethod
    def get_instance(cls) -> 'DIContainer':
        """Get singleton instance of DI container"""
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    @classmethod
    def reset_instance(cls) -> None:
        cls._instance = None

    def set_settings_repository(self, repository: SettingsRepositoryInterface) -> None:
        self._settings_repository = repository
        self._settings_management_service = None

    def set_report_repository(self, repository: ReportRepositoryInterface) -> None:
        self._report_repository = repository

    def get_report_repository(self) -> ReportRepositoryInterface:
        if self._report_repository is None:
            raise RuntimeError("Report repository must be set before it is requested")
        return self._report_repository

    def get_settings_management_service(self) -> SettingsManagementService:
        """Get settings management service with dependencies"""
        if self._settings_management_service is None:
            if self._settings_repository is None:
                raise RuntimeError("Settings repository must be set before getting SettingsManagementService")
            self._settings_management_service = SettingsManagementService(self._settings_repository)
        return self._settings_management_service

    def get_services(self, backend: str, tolerance: float = DEFAULT_TOLERANCE,
                     entry_bound: int = DEFAULT_ENTRY_BOUND,
                     max_rejections: int = DEFAULT_MAX_REJECTIONS) -> ServiceBundle:
        """Service bundle for a backend name; BackendUnsupported for unknown names"""
        key = (backend, float(tolerance), entry_bound, max_rejections)
        if key not in self._bundles:
            field = field_by_name(backend, tolerance)
            self._bundles[key] = ServiceBundle.build(field, entry_bound, max_rejections)
        return self._bundles[key]
