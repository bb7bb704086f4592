"""Sampled ppd proportion statistics."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Mapping, Optional
import json
import math

from .element_classify import PpdWitness


@dataclass(slots=True)
class ProportionStats:
    """Counts of ppd-elements per e collected while sampling a group."""

    label: str = ""
    samples: int = 0
    ppd_counts: Dict[int, int] = field(default_factory=dict)
    large_counts: Dict[int, int] = field(default_factory=dict)
    basic_counts: Dict[int, int] = field(default_factory=dict)

    def record_draw(self, witness: Optional[PpdWitness]) -> None:
        self.samples += 1
        if witness is None:
            return
        e = witness.e
        self.ppd_counts[e] = self.ppd_counts.get(e, 0) + 1
        if witness.is_large:
            self.large_counts[e] = self.large_counts.get(e, 0) + 1
        if witness.is_basic:
            self.basic_counts[e] = self.basic_counts.get(e, 0) + 1

    def merge(self, other: "ProportionStats") -> None:
        self.samples += other.samples
        for mine, theirs in (
            (self.ppd_counts, other.ppd_counts),
            (self.large_counts, other.large_counts),
            (self.basic_counts, other.basic_counts),
        ):
            for e, count in theirs.items():
                mine[e] = mine.get(e, 0) + count

    def frequency(self, e: int) -> float:
        if not self.samples:
            return 0.0
        return self.ppd_counts.get(e, 0) / self.samples

    def within_sigma(self, e: int, exact: Fraction, sigmas: float = 3.0) -> bool:
        """Whether the sampled frequency is within ``sigmas`` binomial deviations of ``exact``."""
        p = float(exact)
        deviation = math.sqrt(p * (1 - p) / self.samples) if self.samples else 0.0
        return abs(self.frequency(e) - p) <= sigmas * deviation + 1e-12

    def as_dict(self, exact: Optional[Mapping[int, Fraction]] = None) -> dict:
        payload = {
            "label": self.label,
            "samples": self.samples,
            "ppd_counts": {str(e): n for e, n in sorted(self.ppd_counts.items())},
            "large_counts": {str(e): n for e, n in sorted(self.large_counts.items())},
            "basic_counts": {str(e): n for e, n in sorted(self.basic_counts.items())},
            "frequencies": {str(e): self.frequency(e) for e in sorted(self.ppd_counts)},
        }
        if exact is not None:
            payload["exact"] = {str(e): str(value) for e, value in sorted(exact.items())}
        return payload

    def write(self, output_dir: Path) -> Path:
        """Persist statistics to ``proportion_stats.json`` and return the path."""

        output_dir.mkdir(parents=True, exist_ok=True)
        path = output_dir / "proportion_stats.json"
        path.write_text(json.dumps(self.as_dict(), indent=2, sort_keys=True), encoding="utf-8")
        return path

    def format_summary(self) -> str:
        """Return a concise human readable summary string."""

        parts = [f"e={e}: {self.frequency(e):.4f}" for e in sorted(self.ppd_counts)]
        total = sum(self.ppd_counts.values())
        return f"{self.label} samples: {self.samples}, ppd: {total} | " + (", ".join(parts) or "none")
