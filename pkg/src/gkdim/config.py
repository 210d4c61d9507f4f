"""Algebra and module description files, and CSV dimension tables.

Both file kinds are TOML documents with explicit keys::

    # algebra.toml
    field = "rational_functions"   # or "rationals"
    r = 2                          # number of transcendentals t1..tr
    n = 2
    alpha = ["t1", "t2"]           # g_i = alpha_i * x_i + beta_i
    beta = ["0", "0"]

    # module.toml
    over = "R"                     # "K" or "R"
    relations = ["x - x1"]
    id = "example"                 # optional
    asserted_simple = true         # optional, used by the audit
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .errors import GkdimError
from .laurent import DerivationSpec, LaurentRing
from .modpres import ModulePresentation
from .ore import OreRing
from .parser import parse_expression
from .scalars import Field

COMMANDS = ("dims", "gk", "induce", "torsion", "oracle", "simplicity", "audit")


class ConfigError(GkdimError, ValueError):
    pass


@dataclass(frozen=True)
class AlgebraConfig:
    field: Field
    n: int
    derivation: DerivationSpec

    @property
    def K(self):
        return self.derivation.ring

    @property
    def R(self):
        return OreRing(self.derivation)

    def algebra(self, over):
        if over == "K":
            return self.K
        if over == "R":
            return self.R
        raise ConfigError(f"'over' must be \"K\" or \"R\", got {over!r}")


@dataclass(frozen=True)
class ModuleSpec:
    presentation: ModulePresentation
    module_id: str
    asserted_simple: bool | None = None


@dataclass(frozen=True)
class JobSpec:
    """One CLI invocation.  ``cap`` means: relation-row limit for dims/gk/induce/audit,
    Groebner degree cap for torsion, word-count limit for oracle."""

    command: str
    modules: tuple = ()
    dims_path: str | None = None
    source: str = "module"
    over: str = "R"
    m_max: int = 8
    window: int = 3
    cap: int | None = None
    slack: int = 1
    require_stable: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.m_max < 0:
            raise ConfigError("m_max must be >= 0")
        if self.window < 2:
            raise ConfigError("window must be >= 2")
        if self.command in ("gk", "audit") and self.m_max < self.window + 2:
            raise ConfigError(f"m_max must be at least window + 2 = {self.window + 2}")
        if self.source not in ("module", "closed-form", "oracle", "csv"):
            raise ConfigError(f"unknown dims source {self.source!r}")
        if self.over not in ("K", "R"):
            raise ConfigError("over must be K or R")
        if self.slack < 0:
            raise ConfigError("slack must be >= 0")


def _load_toml(path):
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def _scalar_list(values, name, n, k):
    if values is None:
        return (0,) * n
    if not isinstance(values, list) or len(values) != n:
        raise ConfigError(f"'{name}' must be a list of {n} scalar expressions")
    out = []
    for v in values:
        out.append(parse_expression(str(v), k))
    return tuple(out)


def algebra_from_dict(doc, origin="<algebra>"):
    kind = doc.get("field", "rationals")
    if kind == "rationals":
        r = 0
    elif kind == "rational_functions":
        r = doc.get("r")
        if not isinstance(r, int) or r < 0:
            raise ConfigError(f"{origin}: rational_functions needs an integer r >= 0")
    else:
        raise ConfigError(f"{origin}: unknown field {kind!r}")
    n = doc.get("n")
    if not isinstance(n, int) or n < 1:
        raise ConfigError(f"{origin}: 'n' must be an integer >= 1")
    k = Field(r)
    alpha = _scalar_list(doc.get("alpha"), "alpha", n, k)
    beta = _scalar_list(doc.get("beta"), "beta", n, k)
    return AlgebraConfig(k, n, DerivationSpec(LaurentRing(n, k), alpha, beta))


def load_algebra(path):
    return algebra_from_dict(_load_toml(path), str(path))


def module_from_dict(doc, cfg, origin="<module>", default_id="module"):
    over = doc.get("over")
    if over is None:
        raise ConfigError(f"{origin}: missing key 'over'")
    A = cfg.algebra(str(over))
    rels = doc.get("relations", [])
    if not isinstance(rels, list) or not all(isinstance(r, str) for r in rels):
        raise ConfigError(f"{origin}: 'relations' must be a list of strings")
    parsed = tuple(parse_expression(r, A) for r in rels)
    module_id = str(doc.get("id", default_id))
    asserted = doc.get("asserted_simple")
    if asserted is not None and not isinstance(asserted, bool):
        raise ConfigError(f"{origin}: 'asserted_simple' must be true or false")
    return ModuleSpec(ModulePresentation(A, parsed, module_id), module_id, asserted)


def load_module(path, cfg):
    return module_from_dict(_load_toml(path), cfg, str(path), Path(path).stem)


def dims_csv(dims):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "dim"])
    for m, d in enumerate(dims):
        w.writerow([m, d])
    return buf.getvalue()


def read_dims_csv(path):
    try:
        with open(path, newline="") as fh:
            rows = list(csv.DictReader(fh))
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    try:
        pairs = sorted((int(r["m"]), int(r["dim"])) for r in rows)
    except (KeyError, TypeError, ValueError):
        raise ConfigError(f"{path}: expected integer columns 'm' and 'dim'") from None
    if [m for m, _ in pairs] != list(range(len(pairs))):
        raise ConfigError(f"{path}: levels must be 0, 1, 2, ... without gaps")
    return [d for _, d in pairs]
