"""
CLI Configuration
Environment settings and validated sweep configuration
"""

import os
import numpy as np
from typing import List, Literal, Optional
from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator, model_validator

load_dotenv()


def thread_count() -> int:
    """UNIRAT_THREADS, defaulting to the available parallelism"""
    raw = os.getenv('UNIRAT_THREADS')
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"UNIRAT_THREADS must be an integer, got {raw!r}")
        if value >= 1:
            return value
    return os.cpu_count() or 1


def log_level() -> str:
    return os.getenv('UNIRAT_LOG_LEVEL', 'WARNING').upper()


class OmegaSpec(BaseModel):
    """Frequencies of a sweep"""
    min: float = Field(ge=0)
    max: float = Field(ge=0)
    count: int = Field(ge=1)
    spacing: Literal['linear', 'log'] = 'linear'
    inclusive: bool = True

    @model_validator(mode='after')
    def _check_range(self) -> 'OmegaSpec':
        if self.max < self.min:
            raise ValueError(f"max ({self.max}) must be >= min ({self.min})")
        if self.spacing == 'log' and self.min <= 0:
            raise ValueError("log spacing needs min > 0")
        return self

    def values(self) -> List[float]:
        """The count frequencies; interior points of (min, max) when not inclusive"""
        if self.inclusive:
            if self.count == 1:
                return [self.min]
            if self.spacing == 'log':
                return np.geomspace(self.min, self.max, self.count).tolist()
            return np.linspace(self.min, self.max, self.count).tolist()
        if self.spacing == 'log':
            grid = np.geomspace(self.min, self.max, self.count + 2)
        else:
            grid = np.linspace(self.min, self.max, self.count + 2)
        return grid[1:-1].tolist()


class SweepConfig(BaseModel):
    """A verification sweep over degrees and frequencies"""
    degrees: List[int]
    omega_spec: OmegaSpec
    tol: float = 1e-10
    grid_size: int = 2000
    lawson_iters: int = Field(default=1000, ge=0)
    max_iter: int = Field(default=200, ge=1)
    output_path: Optional[str] = None
    format: Literal['csv', 'json'] = 'csv'

    @field_validator('degrees')
    @classmethod
    def _check_degrees(cls, degrees: List[int]) -> List[int]:
        if not degrees:
            raise ValueError("at least one degree is required")
        if any(n < 0 for n in degrees):
            raise ValueError("degrees must be nonnegative")
        return degrees

    @field_validator('tol')
    @classmethod
    def _check_tol(cls, tol: float) -> float:
        if not 1e-13 <= tol <= 1e-2:
            raise ValueError(f"tol must lie in [1e-13, 1e-2], got {tol}")
        return tol

    def points(self) -> List[tuple]:
        """(n, omega) pairs in deterministic order"""
        omegas = self.omega_spec.values()
        return [(n, w) for n in self.degrees for w in omegas]
