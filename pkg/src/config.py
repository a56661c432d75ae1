import dataclasses
import os
import re
from dataclasses import dataclass, field

from src.version import __version__


@dataclass(frozen=True)
class Tolerances:
    FORM: float = 1e-9
    FORM_INPUT: float = 1e-6
    NULL_CONE: float = 1e-10
    CLASSIFY: float = 1e-8
    IDENTITY: float = 1e-10
    UNITARY: float = 1e-9
    PAIRING: float = 1e-8
    ARCCOSH: float = 1e-10
    PIVOT: float = 1e-12
    FIXES_ORIGIN: float = 1e-9
    VERTICAL: float = 1e-8
    SINGULAR_COND: float = 1e13
    GRAM_COND_LOW: float = 1e8
    GRAM_COND_HIGH: float = 1e12
    INEQUALITY: float = 1e-8
    NORM: float = 1e-9


@dataclass(frozen=True)
class Defaults:
    N: int = 2
    Q: int = 9
    SAMPLES: int = 100
    SEED: int = 0
    WORKERS: int = 1
    OUTPUT_FORMAT: str = "csv"


@dataclass
class Base:
    TITLE: str
    DESCRIPTION: str
    VERSION: str


@dataclass
class Config:
    DEBUG: bool
    BASE: Base
    TOLERANCE: Tolerances = field(default_factory=Tolerances)
    DEFAULTS: Defaults = field(default_factory=Defaults)


TOLERANCE = Tolerances()

_FLOAT_RE = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")


def to_bool(value) -> bool:
    return str(value).strip().lower() in ("yes", "true", "t", "1")


def parse_scalar(value: str) -> int | float | str:
    value = value.strip()
    if value.isdigit():
        return int(value)
    if _FLOAT_RE.match(value):
        return float(value)
    return value


class EnvManager:
    def __init__(self, environ, *, root_name: str):
        self.config = environ
        self.root_name = root_name

    def __call__(self, *args: str) -> int | float | str | None:
        """
        :param args: list of nodes
        """
        key = "_".join([self.root_name, *args]).upper()
        value = self.config.get(key)
        if value is None or value == "":
            return None
        return parse_scalar(value)


def _section(manager: EnvManager, section: str, cls):
    overrides = {}
    for item in dataclasses.fields(cls):
        value = manager(section, item.name)
        if value is not None:
            overrides[item.name] = item.type(value) if item.type in (int, float) else value
    return cls(**overrides)


def load_env_config(root_name: str = "QHYP", environ=None) -> Config:
    """
    Загрузка конфигурации из переменных окружения

    Ключ ("TOLERANCE", "FORM") читается из переменной QHYP_TOLERANCE_FORM.
    """
    config = EnvManager(os.environ if environ is None else environ, root_name=root_name)
    return Config(
        DEBUG=to_bool(config("DEBUG") or 0),
        BASE=Base(
            TITLE=config("BASE", "TITLE") or "qhyp-radius",
            DESCRIPTION=config("BASE", "DESCRIPTION") or "Quaternionic hyperbolic ball-radius toolkit",
            VERSION=__version__,
        ),
        TOLERANCE=_section(config, "TOLERANCE", Tolerances),
        DEFAULTS=_section(config, "DEFAULTS", Defaults),
    )


def override_tolerances(tolerances: Tolerances, pairs: list[str]) -> Tolerances:
    """
    Применить переопределения вида NAME=VALUE

    :param tolerances: исходные допуски
    :param pairs: список строк NAME=VALUE
    :return: новые допуски
    """
    from src import exceptions

    known = {item.name for item in dataclasses.fields(tolerances)}
    changes = {}
    for pair in pairs:
        name, sep, raw = pair.partition("=")
        name = name.strip().upper()
        if not sep or name not in known:
            raise exceptions.BadRequest(f"Неизвестный допуск: {pair}")
        try:
            changes[name] = float(raw)
        except ValueError:
            raise exceptions.BadRequest(f"Неверное значение допуска: {pair}")
    return dataclasses.replace(tolerances, **changes)
