"""Run configuration shared by the CLI and the report writer."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .partitions import Partition, as_partition

OUTPUT_FORMATS = ("json", "csv")


class ConfigError(ValueError):
    """Invalid user-supplied configuration (maps to exit code 2)."""


def parse_partition_list(text: str) -> tuple[Partition, ...]:
    """'[[2],[1,1]]' -> (Partition(2), Partition(1, 1)).  Parts must be positive integers."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"cannot parse partition list {text!r}: {exc.msg}") from None
    if not isinstance(raw, list) or not all(isinstance(p, list) for p in raw):
        raise ConfigError(f"expected a list of lists of integers, got {text!r}")
    return tuple(parse_partition(p) for p in raw)


def parse_partition(raw) -> Partition:
    if isinstance(raw, str):
        try:
            raw = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"cannot parse partition {raw!r}: {exc.msg}") from None
    if not isinstance(raw, list) or not raw:
        raise ConfigError(f"a partition is a nonempty list of positive integers, got {raw!r}")
    if not all(isinstance(x, int) and not isinstance(x, bool) and x > 0 for x in raw):
        raise ConfigError(f"a partition is a nonempty list of positive integers, got {raw!r}")
    return as_partition(raw)


@dataclass
class RunConfig:
    n: int = 2
    genus: int = 0
    insertions: tuple = ()
    q_order: int = 8
    z_order: int = 5
    u_order: int = 6
    macdonald: bool = False
    g2_tier: bool = True
    output_format: str = "json"
    cache_dir: str | None = field(default_factory=lambda: os.environ.get("HILBGW_CACHE_DIR"))

    def validate(self, need_stable: bool = False, max_genus: int = 3) -> "RunConfig":
        if self.n < 1:
            raise ConfigError("n must be positive")
        for name in ("q_order", "z_order", "u_order"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name.replace('_', '-')} must be positive")
        if self.genus < 0:
            raise ConfigError("genus must be nonnegative")
        if self.genus > max_genus:
            raise ConfigError(f"genus {self.genus} is outside the supported tier (<= {max_genus})")
        if self.genus == 2 and not self.g2_tier:
            raise ConfigError("genus 2 requires the g2 tier")
        self.insertions = tuple(as_partition(m) for m in self.insertions)
        for mu in self.insertions:
            if mu.size != self.n:
                raise ConfigError(f"insertion {list(mu)} is not a partition of n = {self.n}")
        if need_stable and 2 * self.genus - 2 + len(self.insertions) <= 0:
            raise ConfigError(f"(g, r) = ({self.genus}, {len(self.insertions)}) is unstable")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"output format must be one of {OUTPUT_FORMATS}")
        return self

    def to_json(self) -> dict:
        d = asdict(self)
        d["insertions"] = [list(m) for m in self.insertions]
        # the cache location does not change any value, keep reports path-independent
        d.pop("cache_dir")
        return d

    def cache_path(self) -> Path | None:
        return Path(self.cache_dir) if self.cache_dir else None
