"""Mixin for classes configured from data files.

A class using this mixin declares its options as class attributes (the
defaults) and a `specifications` table giving the type of each option.
A plain-text data file can then override these options, one per line:

    max_period 12
    workers 4
    word_lengths between 8 and 16

Blank lines and lines starting with `#` are ignored.

"""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from typing import Self

from parse import parse, Result

BOOLEANS = {
    "yes": True,
    "true": True,
    "on": True,
    "no": False,
    "false": False,
    "off": False,
}


class EnhancedWithData:

    """A mixin to configure a class from a data file."""

    specifications: dict[str, str] = {}
    allow_no_data_file = True

    @classmethod
    def load(cls, data_file: Path | str | None) -> type[Self]:
        """Create a configured child class from a data file.

        Args:
            data_file (Path or str): the data file to read (.txt).

        The class itself is never modified: a child class is created and
        the data file content is fed to its `extend_from_data` class
        method. If the file does not exist and `allow_no_data_file` is
        set, the child class simply keeps the defaults.

        Returns:
            loaded (type): the configured child class.

        """
        loaded = type(f"Loaded.{cls.__name__}", (cls,), {})
        if data_file is not None:
            data_file = Path(data_file)
            if not data_file.is_absolute():
                data_file = Path.cwd() / data_file

        if data_file is not None and data_file.exists():
            with data_file.open("r", encoding="utf-8") as file:
                contents = file.read()

            loaded.extend_from_data(contents)
        elif not cls.allow_no_data_file:
            raise ValueError(f"a data file should be defined in {data_file}")

        return loaded

    @classmethod
    def extend_from_data(cls, data: str) -> None:
        """Extend a class with some data.

        Each non-empty line is an option name followed by its value, in
        the format its specification requires.

        """
        for line in data.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue

            key = line.split(" ")[0]
            option_spec = cls.specifications.get(key)
            if option_spec is None:
                raise ValueError(f"not a supported option: {key!r}")

            cls.write_option(key, cls.parse_option(option_spec, key, line))

    @classmethod
    def parse_option(cls, spec: str, key: str, line: str) -> Any:
        """Try to parse an option given in a format.

        Args:
            spec (str): the type specification for this key.
            key (str): the option name.
            line (str): the line to parse.

        """
        match spec:
            case "any":
                format = f"{key} {{}}"
            case "int":
                format = f"{key} {{:d}}"
            case "bool":
                format = f"{key} {{:w}}"
            case "interval":
                format = f"{key} between {{:d}} and {{:d}}"
            case _:
                raise ValueError(f"unknown type spec: {spec!r}")

        result: Result | None = parse(format, line)
        if not result:
            raise ValueError(
                f"invalid format for {key!r}: expecting {format!r}"
            )

        if spec == "bool":
            value = BOOLEANS.get(result.fixed[0].lower())
            if value is None:
                raise ValueError(f"{result.fixed[0]!r} isn't a boolean")
            return value

        if len(result.fixed) == 1:
            return result.fixed[0]

        return result.fixed

    @classmethod
    def write_option(cls, key: str, value: Any) -> None:
        """Write an option in the class.

        Args:
            key (str): the option key.
            value (any): the value to write.

        """
        setattr(cls, key, value)

    @classmethod
    def options(cls) -> dict[str, Any]:
        """Return the current value of every specified option."""
        return {key: getattr(cls, key) for key in cls.specifications}
