"""Search budgets, overridable through the ``DPSQ_BUDGET`` environment variable.

Accepted forms: ``"5000000"`` (covers only) or ``"covers=5000000,nodes=200000"``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import InputError

ENV_VAR = "DPSQ_BUDGET"


@dataclass(frozen=True)
class Budget:
    covers: int = 10**7
    nodes: int = 10**6

    @classmethod
    def from_env(cls, env: dict[str, str] | None = None) -> Budget:
        raw = (os.environ if env is None else env).get(ENV_VAR, "").strip()
        if not raw:
            return cls()
        return cls().with_overrides(raw)

    def with_overrides(self, spec: str) -> Budget:
        fields = {}
        try:
            if "=" not in spec:
                fields["covers"] = int(spec)
            else:
                for part in spec.split(","):
                    key, value = part.split("=")
                    key = key.strip()
                    if key not in ("covers", "nodes"):
                        raise InputError(f"unknown budget key {key!r}")
                    fields[key] = int(value)
        except ValueError as exc:
            raise InputError(f"cannot parse budget {spec!r}") from exc
        return replace(self, **fields)
