"""Line-oriented configuration files.

One `key = value` per line, `#` comments, blank lines ignored.  Keys:
kind (required), params, generators, bounds.  bounds holds colon pairs
like `depth:3 length:2 window:24 seed:11`.
"""

from dataclasses import dataclass, field

from .semigroups import (AxPlusB, FiniteTable, FreeMonoid,
                         NumericalSemigroup, PositiveCone, cyclic_table)


class ConfigError(Exception):
    def __init__(self, message, line=None, key=None):
        self.line = line
        self.key = key
        where = ""
        if line is not None:
            where = " (line %d)" % line
        super().__init__(message + where)


KEYS = ("kind", "params", "generators", "bounds")
BOUND_NAMES = ("depth", "length", "window", "seed")


@dataclass
class Config:
    kind: str
    params: tuple = ()
    generators: tuple = None
    bounds: dict = field(default_factory=dict)


def parse_config(text):
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("expected key = value, got %r" % line,
                              line=lineno)
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in KEYS:
            raise ConfigError("unknown key %r" % key, line=lineno, key=key)
        if key in seen:
            raise ConfigError("duplicate key %r" % key, line=lineno, key=key)
        seen[key] = (value, lineno)
    if "kind" not in seen:
        raise ConfigError("missing required key 'kind'", key="kind")

    kind = seen["kind"][0]
    params = tuple(seen["params"][0].split()) if "params" in seen else ()
    generators = tuple(seen["generators"][0].split()) \
        if "generators" in seen else None

    bounds = {}
    if "bounds" in seen:
        value, lineno = seen["bounds"]
        for piece in value.split():
            name, colon, num = piece.partition(":")
            if not colon or name not in BOUND_NAMES:
                raise ConfigError("bad bound %r, expected name:int with "
                                  "name among %s" % (piece, ", ".join(BOUND_NAMES)),
                                  line=lineno, key="bounds")
            try:
                bounds[name] = int(num)
            except ValueError:
                raise ConfigError("bound %r is not an integer" % piece,
                                  line=lineno, key="bounds")
    return Config(kind, params, generators, bounds)


def load_config(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_config(fh.read())
    except OSError as err:
        raise ConfigError("cannot read %s: %s" % (path, err.strerror or err))


def _int_params(cfg, count=None):
    try:
        nums = tuple(int(p) for p in cfg.params)
    except ValueError:
        raise ConfigError("params for kind %r must be integers" % cfg.kind,
                          key="params")
    if count is not None and len(nums) != count:
        raise ConfigError("kind %r takes exactly %d integer parameter%s"
                          % (cfg.kind, count, "" if count == 1 else "s"),
                          key="params")
    return nums


def build_backend(cfg):
    """The semigroup a configuration names."""
    if cfg.kind == "free":
        return FreeMonoid(_int_params(cfg, 1)[0])
    if cfg.kind == "cone":
        return PositiveCone(_int_params(cfg, 1)[0])
    if cfg.kind == "numerical":
        nums = _int_params(cfg)
        if not nums:
            raise ConfigError("kind 'numerical' needs generator parameters",
                              key="params")
        return NumericalSemigroup(nums)
    if cfg.kind == "axb":
        if cfg.params:
            raise ConfigError("kind 'axb' takes no parameters", key="params")
        return AxPlusB()
    if cfg.kind == "table":
        if len(cfg.params) == 2 and cfg.params[0] == "cyclic":
            return FiniteTable(cyclic_table(int(cfg.params[1])))
        raise ConfigError("kind 'table' expects params 'cyclic N'",
                          key="params")
    raise ConfigError("unknown kind %r" % cfg.kind, key="kind")


def config_generators(sg, cfg):
    """Generator override parsed in the backend's own syntax, or None."""
    if cfg.generators is None:
        return None
    out = []
    for text in cfg.generators:
        try:
            out.append(sg.parse(text))
        except Exception:
            raise ConfigError("cannot parse generator %r for %s"
                              % (text, sg.describe()), key="generators")
    return tuple(out)
