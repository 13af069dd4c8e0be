from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError, FeatureError

# Default numerical tolerances. Individual functions accept overrides.
TOL_POINT = 1e-10
TOL_ALGEBRA = 1e-12
T_MAX = 50.0
NULL_BAND = 1e-7
FRONTIER_BAND = 1e-9
DIAGONAL_GUARD = 1e-8


@dataclass(frozen=True)
class SpaceConfig:
    """Dimension data: the geodesic space has dimension 2n, H = H^{n+1} sits in R^{n+2}."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"n must be a positive integer, got {self.n!r}")

    @property
    def ambient_dim(self) -> int:
        return self.n + 2

    @property
    def has_g0(self) -> bool:
        return self.n == 2

    @property
    def has_octonions(self) -> bool:
        return self.n == 6

    def require_g0(self):
        if not self.has_g0:
            raise FeatureError(f"g0 / cross-product structure needs n=2, got n={self.n}")

    def require_octonions(self):
        if not self.has_octonions:
            raise FeatureError(f"octonionic structure needs n=6, got n={self.n}")


@dataclass(frozen=True)
class VerifyConfig:
    n: int = 2
    seed: int = 7
    tolerances: dict = field(default_factory=dict)
