from enum import Enum  # cannot use StrEnum, it's not in Python 3.10
from logging import getLogger
from pathlib import Path
from dataclasses import dataclass

from tomlkit import parse, dump, document, table, TOMLDocument

from mostarcheck import MostarCheckError
from pymostar.graph import DEFAULT_BLOCK_SIZE

_log = getLogger(__name__)

DEFAULT_CONF_FILE_LOC = "./conf/MostarCheck.toml"
MAX_ORDER_CAP = 2 ** 16


class TomlCategories(Enum):
    verify = "verify"
    distance = "distance"
    output = "output"
    limits = "limits"


class TomlVerifyKeys(Enum):
    max_n = "max_n"
    seed = "seed"
    random_per_order = "random_per_order"
    edge_probability = "edge_probability"
    pair_max_n = "pair_max_n"
    pair_random_per_order = "pair_random_per_order"
    triple_max_n = "triple_max_n"


class TomlDistanceKeys(Enum):
    block_size = "block_size"


class TomlOutputKeys(Enum):
    json_indent = "json_indent"


class TomlLimitsKeys(Enum):
    max_order = "max_order"


@dataclass
class Config:
    max_n: int = 8
    seed: int = 42
    random_per_order: int = 20
    edge_probability: float = 0.5
    pair_max_n: int = 5
    pair_random_per_order: int = 3
    triple_max_n: int = 3
    block_size: int = DEFAULT_BLOCK_SIZE
    json_indent: int = 2
    max_order: int = MAX_ORDER_CAP

    def read(self, doc: TOMLDocument):
        _log.debug(f"read Config from TOML doc: {doc}")
        verify = doc[TomlCategories.verify.value]
        self.max_n = int(verify[TomlVerifyKeys.max_n.value])
        self.seed = int(verify[TomlVerifyKeys.seed.value])
        self.random_per_order = int(verify[TomlVerifyKeys.random_per_order.value])
        self.edge_probability = float(verify[TomlVerifyKeys.edge_probability.value])
        self.pair_max_n = int(verify[TomlVerifyKeys.pair_max_n.value])
        self.pair_random_per_order = int(verify[TomlVerifyKeys.pair_random_per_order.value])
        self.triple_max_n = int(verify[TomlVerifyKeys.triple_max_n.value])
        self.block_size = int(doc[TomlCategories.distance.value][TomlDistanceKeys.block_size.value])
        self.json_indent = int(doc[TomlCategories.output.value][TomlOutputKeys.json_indent.value])
        self.max_order = int(doc[TomlCategories.limits.value][TomlLimitsKeys.max_order.value])

    def validate(self):
        _log.debug(f"validate config")
        if self.max_n < 2:
            raise MostarCheckError(f"invalid max_n: {self.max_n}")
        for key in ("random_per_order", "pair_random_per_order"):
            if getattr(self, key) < 0:
                raise MostarCheckError(f"invalid {key}: {getattr(self, key)}")
        for key in ("pair_max_n", "triple_max_n", "block_size"):
            if getattr(self, key) < 1:
                raise MostarCheckError(f"invalid {key}: {getattr(self, key)}")
        if not 0 < self.edge_probability <= 1:
            raise MostarCheckError(f"invalid edge probability: {self.edge_probability}")
        if self.json_indent < 0:
            raise MostarCheckError(f"invalid json indent: {self.json_indent}")
        if not 1 <= self.max_order <= MAX_ORDER_CAP:
            raise MostarCheckError(f"invalid max order: {self.max_order} (must be within 1..{MAX_ORDER_CAP})")

    @property
    def indent(self) -> int | None:
        return self.json_indent or None


def default_toml() -> TOMLDocument:
    _log.debug("define default TOML config")
    defaults = Config()

    verify = table()
    verify.add(TomlVerifyKeys.max_n.value, defaults.max_n)
    verify.add(TomlVerifyKeys.seed.value, defaults.seed)
    verify.add(TomlVerifyKeys.random_per_order.value, defaults.random_per_order)
    verify[TomlVerifyKeys.random_per_order.value].comment("Erdos-Renyi graphs per order in the corpus")
    verify.add(TomlVerifyKeys.edge_probability.value, defaults.edge_probability)
    verify.add(TomlVerifyKeys.pair_max_n.value, defaults.pair_max_n)
    verify[TomlVerifyKeys.pair_max_n.value].comment("operand pool for two-factor claims")
    verify.add(TomlVerifyKeys.pair_random_per_order.value, defaults.pair_random_per_order)
    verify.add(TomlVerifyKeys.triple_max_n.value, defaults.triple_max_n)
    verify[TomlVerifyKeys.triple_max_n.value].comment("operand pool for three-factor claims")

    distance = table()
    distance.add(TomlDistanceKeys.block_size.value, defaults.block_size)
    distance[TomlDistanceKeys.block_size.value].comment("BFS sources per streamed distance block")

    output = table()
    output.add(TomlOutputKeys.json_indent.value, defaults.json_indent)
    output[TomlOutputKeys.json_indent.value].comment("0 means compact JSON")

    limits = table()
    limits.add(TomlLimitsKeys.max_order.value, defaults.max_order)

    doc = document()
    doc.add(TomlCategories.verify.value, verify)
    doc.add(TomlCategories.distance.value, distance)
    doc.add(TomlCategories.output.value, output)
    doc.add(TomlCategories.limits.value, limits)

    return doc


def _read_toml(path: str | None) -> TOMLDocument:
    path = path if path is not None else DEFAULT_CONF_FILE_LOC
    _log.debug(f"read TOML config from: {Path(path).absolute()}")
    if not Path(path).parent.exists():
        Path(path).parent.mkdir(parents=True)
    if not Path(path).exists():
        reset_config(path)
    try:
        with open(path, "r", encoding="utf8") as file:
            content = file.read()
    except Exception as err:
        raise MostarCheckError(f"could not read config file: {Path(path).absolute()}") from err
    try:
        return parse(content)
    except Exception as err:
        raise MostarCheckError(
            f"could not parse config file: {path}: {err}\n"
            "To reset the config file to its default content, delete the file."
        ) from err


def _write_toml(doc: TOMLDocument, path: str | None):
    path = path if path is not None else DEFAULT_CONF_FILE_LOC
    _log.debug(f"write TOML config to: {Path(path).absolute()}")
    if not Path(path).parent.exists():
        Path(path).parent.mkdir(parents=True)
    try:
        with open(path, "w", encoding="utf8") as file:
            dump(doc, file)
    except Exception as err:
        raise MostarCheckError(f"could not write config file: {Path(path).absolute()}") from err


def get_config(path: str | None) -> Config:
    path = path if path is not None else DEFAULT_CONF_FILE_LOC
    _log.debug(f"get Config dataclass from: {Path(path).absolute()}")
    doc = _read_toml(path)
    cfg = Config()
    try:
        cfg.read(doc)
    except Exception as err:
        raise MostarCheckError(f"could not parse config file: {Path(path).absolute()}: {err}") from err
    cfg.validate()
    return cfg


def reset_config(path: str | None):
    path = path if path is not None else DEFAULT_CONF_FILE_LOC
    _log.debug(f"reset config to default: {Path(path).absolute()}")
    _write_toml(default_toml(), path)
