"""Equations, membership tests, Gale transforms and transversality checks for
point configurations on rational normal curves.

Every function returns the decoded JSON payload, tagged with ``schema``.
Failures raise :class:`CommandError` carrying the payload and exit code.
"""

from __future__ import annotations

import json
from typing import Any, Optional, Sequence

from . import _core

SCHEMA: str = _core.SCHEMA
VeroneseError = _core.VeroneseError

__all__ = ["SCHEMA", "CommandError", "VeroneseError", "eqs", "eqs_text", "eval_config", "gale", "sample",
           "transversal", "dim", "verify"]


class CommandError(RuntimeError):
    def __init__(self, exit_code: int, payload: dict):
        super().__init__(payload.get("error") or f"command failed with exit code {exit_code}")
        self.exit_code = exit_code
        self.payload = payload


def _run(result: tuple, allow_failed_checks: bool = False) -> dict:
    code, payload_text, _ = result
    payload = json.loads(payload_text)
    if code == 0 or (allow_failed_checks and code == 1):
        return payload
    raise CommandError(code, payload)


def _config_text(config: Any) -> str:
    return config if isinstance(config, str) else json.dumps(config)


def eqs(d: int, n: int) -> dict:
    """Generators of W_{d,n} as JSON bracket polynomials."""
    return _run(_core.eqs(d, n, False))


def eqs_text(d: int, n: int) -> str:
    """Generators in bracket text, one labelled generator per line."""
    code, payload_text, text = _core.eqs(d, n, True)
    if code != 0:
        raise CommandError(code, json.loads(payload_text))
    return text


def eval_config(config: Any, field: Optional[str] = None) -> dict:
    """Evaluate every generator on a configuration (dict or JSON text)."""
    return _run(_core.eval(_config_text(config), field))


def gale(config: Any, field: Optional[str] = None) -> dict:
    """Gale transform of a configuration."""
    return _run(_core.gale(_config_text(config), field))


def sample(kind: str, d: int, n: int, seed: int = 0, field: str = "Fp:65521", height: int = 100,
           degrees: Sequence[int] = (), points: Sequence[int] = (), topology: str = "chain",
           on_first: int = -1) -> dict:
    """Seeded configuration of the given kind (rnc, generic, degenerate, two-lines, chain)."""
    return _run(_core.sample(kind, d, n, seed, field, height, list(degrees), list(points), topology, on_first))


def transversal(edges: Optional[Sequence[Sequence[int]]] = None, n: int = 0, k: int = 0,
                min: Optional[str] = None) -> dict:
    """Transversality verdict, failing partition, bounds and optional minimum search."""
    return _run(_core.transversal(json.dumps(edges) if edges is not None else "", n, k, min))


def dim(d: int, n: int, seed: int = 0, field: str = "Fp:65521") -> dict:
    """Jacobian-rank estimate of dim V_{d,n}."""
    return _run(_core.dim(d, n, seed, field))


def verify(suite: str = "All", seed: int = 0) -> dict:
    """Run an acceptance suite; failed checks are reported in the payload."""
    return _run(_core.verify(suite, seed), allow_failed_checks=True)
