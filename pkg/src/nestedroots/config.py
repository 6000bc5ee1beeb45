"""Named coefficient setups and the optional configuration file.

The file is INI-style (read with :mod:`configparser`)::

    [defaults]
    depth = 6
    seed = 20240611
    samples = 1000

    [setup F8-t4]
    kind = tits          ; prime | tits | bipoly
    degree = 3
    modulus = 0b1011
    sigma = 2            ; sigma(t) = t^(2^sigma)

    [setup F8ab-swap]
    kind = bipoly
    base = F8-t4
    tau = swap           ; swap | id

``prime`` setups take ``p``.  Command-line flags override the file.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass

from nestedroots.algebra.fields import BiPolynomialRing, PrimeField, TitsField

__all__ = ["ConfigError", "Setup", "BUILTIN_SETUPS", "Config", "load_config", "resolve_field"]


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Setup:
    name: str
    kind: str
    p: int = 0
    degree: int = 0
    modulus: int = 0
    sigma: int = 0
    base: str = ""
    tau: str = "swap"

    def build(self, setups: dict):
        if self.kind == "prime":
            return PrimeField(self.p)
        if self.kind == "tits":
            return TitsField(self.degree, self.modulus, sigma_exp=self.sigma, name=self.name)
        if self.kind == "bipoly":
            base = setups.get(self.base)
            if base is None or base.kind != "tits":
                raise ConfigError(f"setup {self.name}: base {self.base!r} is not a tits setup")
            return BiPolynomialRing(base.build(setups), swap=self.tau == "swap")
        raise ConfigError(f"setup {self.name}: unknown kind {self.kind!r}")


BUILTIN_SETUPS = {
    "F2-id": Setup("F2-id", "tits", degree=1, modulus=0b11, sigma=0),
    "F8-t4": Setup("F8-t4", "tits", degree=3, modulus=0b1011, sigma=2),
    "F8ab-swap": Setup("F8ab-swap", "bipoly", base="F8-t4", tau="swap"),
    "F8ab-id": Setup("F8ab-id", "bipoly", base="F8-t4", tau="id"),
}

# short names accepted by --field
ALIASES = {"F2": "F2-id", "F8": "F8-t4"}


@dataclass
class Config:
    setups: dict
    defaults: dict


def _int(text: str) -> int:
    return int(text, 0)


def load_config(path: str | None) -> Config:
    setups = dict(BUILTIN_SETUPS)
    defaults: dict = {}
    if not path:
        return Config(setups, defaults)
    cp = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    try:
        with open(path, encoding="utf-8") as fh:
            cp.read_file(fh)
    except (OSError, configparser.Error) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for section in cp.sections():
        body = cp[section]
        if section == "defaults":
            for key in ("depth", "seed", "samples"):
                if key in body:
                    defaults[key] = _int(body[key])
            continue
        head, _, name = section.partition(" ")
        if head != "setup" or not name.strip():
            raise ConfigError(f"unknown section [{section}]")
        name = name.strip()
        kind = body.get("kind", "")
        try:
            setups[name] = Setup(
                name,
                kind,
                p=_int(body.get("p", "0")),
                degree=_int(body.get("degree", "0")),
                modulus=_int(body.get("modulus", "0")),
                sigma=_int(body.get("sigma", "0")),
                base=body.get("base", ""),
                tau=body.get("tau", "swap"),
            )
        except ValueError as exc:
            raise ConfigError(f"setup {name}: {exc}") from exc
        if kind not in ("prime", "tits", "bipoly"):
            raise ConfigError(f"setup {name}: kind must be prime, tits or bipoly")
    return Config(setups, defaults)


def resolve_field(spec: str, config: Config | None = None):
    """Turn a --field value into (name, coefficient structure).

    Accepts setup names, the aliases F2 and F8, and F<p> for a prime p.
    """
    setups = config.setups if config else BUILTIN_SETUPS
    name = ALIASES.get(spec, spec)
    if name in setups:
        return name, setups[name].build(setups)
    if spec.startswith("F") and spec[1:].isdigit():
        p = int(spec[1:])
        try:
            return spec, PrimeField(p)
        except ValueError:
            pass
    admitted = sorted(set(setups) | set(ALIASES)) + ["F<p> for a prime p"]
    raise ConfigError(f"unknown field {spec!r}; admitted: {', '.join(admitted)}")
