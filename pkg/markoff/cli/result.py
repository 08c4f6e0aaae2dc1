"""The outcome of one command, as printed by the command line."""

from dataclasses import dataclass, field
import json
from pathlib import Path
from typing import Any

from markoff.verifiers.report import Status

# Process exit statuses.
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _plain(value: Any) -> Any:
    """Return a JSON-friendly version of an argument value."""
    match value:
        case Path():
            return str(value)
        case tuple() | list():
            return [_plain(item) for item in value]
        case _:
            return value


@dataclass
class CommandResult:

    """What a command did.

    Args:
        command (str): the command name.
        inputs (dict): the parsed arguments.
        output (dict): the JSON payload.
        status (str): ok, failed or degenerate.

    """

    command: str
    inputs: dict[str, Any]
    output: dict[str, Any] = field(default_factory=dict)
    status: Status = "ok"

    @property
    def exit_status(self) -> int:
        return EXIT_FAILED if self.status == "failed" else EXIT_OK

    def to_json(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "inputs": {
                key: _plain(value) for key, value in self.inputs.items()
            },
            "output": self.output,
            "status": self.status,
        }

    def dumps(self) -> str:
        """Return the JSON text, identical for identical inputs."""
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def lines(self) -> list[str]:
        """Return the output as `key: value` lines."""
        lines = [f"{self.command}: {self.status}"]
        lines.extend(_flatten(self.output, ""))
        return lines


def _flatten(payload: Any, prefix: str) -> list[str]:
    if isinstance(payload, dict):
        lines = []
        for key in sorted(payload):
            name = f"{prefix}.{key}" if prefix else str(key)
            lines.extend(_flatten(payload[key], name))
        return lines

    if isinstance(payload, list) and any(
        isinstance(item, (dict, list)) for item in payload
    ):
        lines = []
        for position, item in enumerate(payload):
            lines.extend(_flatten(item, f"{prefix}[{position}]"))
        return lines

    return [f"{prefix}: {json.dumps(payload)}"]
