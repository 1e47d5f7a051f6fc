"""Pipeline configuration: defaults, file loading, flag overrides."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, fields
from typing import Any, Mapping

from .errors import ConfigError
from .nullmodels import AssessmentThresholds


@dataclass(frozen=True)
class PipelineConfig:
    """Everything the analysis pipeline can be steered with.

    The ranking sizes default to the five most-citing and six most-cited
    codes; all thresholds of the concentrated-world rule live here rather
    than in code.
    """

    k_citing: int = 5
    k_cited: int = 6
    min_community_size: int = 4
    null_samples: int = 100
    seed: int = 42
    ws_p: float = 0.1
    rewire_budget_factor: int = 10
    degree_fraction: float = 0.15
    transitivity_factor: float = 2.5
    path_length_factor: float = 1.5
    sparse_sigma: float = 2.0

    def validate(self) -> None:
        counts = {
            "k_citing": self.k_citing,
            "k_cited": self.k_cited,
            "min_community_size": self.min_community_size,
            "null_samples": self.null_samples,
            "rewire_budget_factor": self.rewire_budget_factor,
        }
        for name, value in counts.items():
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if not isinstance(self.seed, int):
            raise ConfigError(f"seed must be an integer, got {self.seed!r}")
        if not 0.0 <= self.ws_p <= 1.0:
            raise ConfigError(f"ws_p must be in [0, 1], got {self.ws_p!r}")
        for name in ("degree_fraction", "transitivity_factor", "path_length_factor", "sparse_sigma"):
            value = getattr(self, name)
            if not isinstance(value, (int, float)) or value < 0:
                raise ConfigError(f"{name} must be non-negative, got {value!r}")

    def thresholds(self) -> AssessmentThresholds:
        return AssessmentThresholds(
            degree_fraction=self.degree_fraction,
            transitivity_factor=self.transitivity_factor,
            path_length_factor=self.path_length_factor,
            sparse_sigma=self.sparse_sigma,
        )

    def to_mapping(self) -> dict[str, Any]:
        return asdict(self)

    def digest(self) -> str:
        payload = json.dumps(self.to_mapping(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


_FIELD_NAMES = {f.name for f in fields(PipelineConfig)}


def config_from_mapping(mapping: Mapping[str, Any]) -> PipelineConfig:
    unknown = set(mapping) - _FIELD_NAMES
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    config = PipelineConfig(**mapping)
    config.validate()
    return config


def load_config(text: str | None, overrides: Mapping[str, Any] | None = None) -> PipelineConfig:
    """Merge a JSON config document with explicit overrides; overrides win."""
    values: dict[str, Any] = {}
    if text is not None:
        try:
            loaded = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from exc
        if not isinstance(loaded, dict):
            raise ConfigError("config file must contain a JSON object")
        values.update(loaded)
    if overrides:
        values.update({k: v for k, v in overrides.items() if v is not None})
    return config_from_mapping(values)
