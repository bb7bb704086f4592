"""Configuration data structures and utilities for the recogniser."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Iterable, Optional
import json

try:
    import yaml  # type: ignore
except Exception:  # pragma: no cover - optional dependency
    yaml = None  # type: ignore


@dataclass(slots=True)
class LimitsConfig:
    """Magnitude caps; exceeding any of them raises ``OVERFLOW``."""

    max_field_order: int = 2**20
    max_dimension: int = 4096
    max_power_bits: int = 512


@dataclass(slots=True)
class SamplerConfig:
    """Product replacement parameters."""

    slots: int = 10
    burn_in: int = 200


@dataclass(slots=True)
class MeatAxeConfig:
    """Knobs for the Norton irreducibility loop."""

    max_attempts: int = 20
    word_length: int = 6
    summands: int = 3


@dataclass(slots=True)
class RecognitionConfig:
    epsilon: float = 0.1
    commutator_samples: int = 8


@dataclass(slots=True)
class OracleConfig:
    enumeration_cap: int = 2_000_000


_SECTIONS = {
    "limits": LimitsConfig,
    "sampler": SamplerConfig,
    "meataxe": MeatAxeConfig,
    "recognition": RecognitionConfig,
    "oracle": OracleConfig,
}


def _build_section(section: str, payload: Optional[dict]):
    dataclass_type = _SECTIONS[section]
    payload = dict(payload or {})
    known = {item.name for item in fields(dataclass_type)}
    unknown = sorted(set(payload) - known)
    if unknown:
        raise ValueError(f"unknown {section} option(s): {', '.join(unknown)}")
    return dataclass_type(**payload)


@dataclass(slots=True)
class RecognizerConfig:
    """Top level configuration grouping every tunable section."""

    limits: LimitsConfig = field(default_factory=LimitsConfig)
    sampler: SamplerConfig = field(default_factory=SamplerConfig)
    meataxe: MeatAxeConfig = field(default_factory=MeatAxeConfig)
    recognition: RecognitionConfig = field(default_factory=RecognitionConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)

    @classmethod
    def from_mapping(cls, mapping: Optional[dict]) -> "RecognizerConfig":
        """Create a config from a mapping; absent sections take their defaults."""
        mapping = dict(mapping or {})
        unknown = sorted(set(mapping) - set(_SECTIONS))
        if unknown:
            raise ValueError(f"unknown configuration section(s): {', '.join(unknown)}")
        return cls(**{name: _build_section(name, mapping.get(name)) for name in _SECTIONS})

    @classmethod
    def load(cls, path: Path) -> "RecognizerConfig":
        """Load configuration from a JSON or YAML file."""
        data: dict
        text = path.read_text(encoding="utf-8")
        try:
            data = json.loads(text)
        except json.JSONDecodeError:
            if yaml is None:
                raise RuntimeError("YAML configuration requires PyYAML to be installed") from None
            data = yaml.safe_load(text)
        return cls.from_mapping(data)

    def validate(self) -> None:
        """Validate configuration values."""
        if self.limits.max_field_order < 2:
            raise ValueError("max_field_order must be at least 2")
        if self.limits.max_dimension < 1:
            raise ValueError("max_dimension must be positive")
        if self.limits.max_power_bits < 8:
            raise ValueError("max_power_bits must be at least 8")
        if self.sampler.slots < 2:
            raise ValueError("sampler slots must be at least 2")
        if self.sampler.burn_in < 0:
            raise ValueError("burn_in cannot be negative")
        if self.meataxe.max_attempts < 1:
            raise ValueError("max_attempts must be positive")
        if self.meataxe.word_length < 1 or self.meataxe.summands < 1:
            raise ValueError("word_length and summands must be positive")
        if not 0 < self.recognition.epsilon < 1:
            raise ValueError("epsilon must be between 0 and 1")
        if self.recognition.commutator_samples < 1:
            raise ValueError("commutator_samples must be positive")
        if self.oracle.enumeration_cap < 1:
            raise ValueError("enumeration_cap must be positive")

    def as_dict(self) -> dict:
        """Return the configuration as a serialisable dictionary."""
        return {name: asdict(getattr(self, name)) for name in _SECTIONS}

    def dump(self, path: Path) -> None:
        """Persist the effective configuration as JSON."""
        path.write_text(json.dumps(self.as_dict(), indent=2, sort_keys=True), encoding="utf-8")


def discover_config(paths: Iterable[Path]) -> Optional[Path]:
    """Discover a configuration file from a collection of candidate paths."""
    for candidate in paths:
        expanded = candidate.expanduser()
        if expanded.exists():
            return expanded
    return None


DEFAULT_CONFIG_NAMES = ("ppd-recognizer.yaml", "ppd-recognizer.yml", "ppd-recognizer.json")
