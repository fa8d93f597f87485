"""Size bounds for the exhaustive computations, read from a .conf file

Every exhaustive sum in the engine (partitions, character tables, pairings,
composition tuples) is guarded by a bound. The defaults can be overridden
with a configuration file passed as `symrmt --config FILE`:

```conf
[bounds]
max_weight = 40
max_char_weight = 24
max_degree = 64
max_wick_weight = 12
max_charpoly_degree = 30
max_cumulant_weight = 20
max_xk_weight = 24
max_genfun_vars = 3
max_genfun_degree = 8
```

Unknown options are rejected, and so is a file that cannot be read. The
environment variable RMT_MAX_WEIGHT is applied last and overrides
`max_weight`.
"""

import configparser
import logging
import os
import typing as ty

import symrmt.exceptions

log = logging.getLogger(__name__)

ENV_MAX_WEIGHT = "RMT_MAX_WEIGHT"


class ConfigError(symrmt.exceptions.SymRmtException):
    "Indicates a fatal problem in a bounds configuration file"

    def __init__(self, section: str, detail: str) -> None:
        self.section = section
        self.detail = detail

    def __str__(self) -> str:
        return f"Configuration error ({self.section}): {self.detail}"


class Bounds(ty.NamedTuple):
    max_weight: int = 40
    max_char_weight: int = 24
    max_degree: int = 64
    max_wick_weight: int = 12
    max_charpoly_degree: int = 30
    max_cumulant_weight: int = 20
    max_xk_weight: int = 24
    max_genfun_vars: int = 3
    max_genfun_degree: int = 8


def get_parser() -> configparser.ConfigParser:
    return configparser.ConfigParser(interpolation=None, allow_no_value=True)


def _positive_int(section: str, name: str, src: ty.Optional[str]) -> int:
    if src is None:
        raise ConfigError(section, f"Missing value for {name}")
    try:
        value = int(src)
    except ValueError:
        raise ConfigError(section, f"{name} must be an integer, got {src!r}")
    if value <= 0:
        raise ConfigError(section, f"{name} must be positive, got {value}")
    return value


def from_parser(parser: configparser.ConfigParser) -> Bounds:
    overrides: ty.Dict[str, int] = {}
    if parser.has_section("bounds"):
        section = parser["bounds"]
        for name, src in section.items():
            if name not in Bounds._fields:
                raise ConfigError("bounds", f"Unknown option: {name}")
            overrides[name] = _positive_int("bounds", name, src)
    return Bounds(**overrides)


def from_env(base: Bounds, environ: ty.Mapping[str, str]) -> Bounds:
    src = environ.get(ENV_MAX_WEIGHT)
    if src is None:
        return base
    max_weight = _positive_int(ENV_MAX_WEIGHT, "max_weight", src)
    log.info(f"Using max_weight={max_weight} from {ENV_MAX_WEIGHT}")
    return base._replace(max_weight=max_weight)


def parse(filepath: ty.Optional[str] = None) -> Bounds:
    "Build bounds from an optional .conf file and the environment"
    parser = get_parser()
    if filepath is not None:
        try:
            with open(filepath) as infile:
                parser.read_file(infile)
        except OSError as err:
            raise ConfigError("config", f"Cannot read {filepath}: {err}")
        except configparser.Error as err:
            raise ConfigError("config", f"Malformed {filepath}: {err}")
    return from_env(from_parser(parser), os.environ)


_current: ty.Optional[Bounds] = None


def bounds() -> Bounds:
    global _current
    if _current is None:
        _current = parse()
    return _current


def install(new_bounds: ty.Optional[Bounds]) -> None:
    """Replace the active bounds; `None` re-reads the environment lazily"""
    global _current
    _current = new_bounds


def check(operation: str, bound: str, value: int) -> None:
    limit = getattr(bounds(), bound)
    if value > limit:
        raise symrmt.exceptions.BoundExceeded(operation, bound, limit, value)
