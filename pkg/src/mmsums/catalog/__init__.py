"""The identity catalog: descriptors loaded from ``identities.yaml``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import yaml

from ..exact.halfint import HalfInt
from .expr import evaluate

PARAM_KINDS = ("posint", "int", "halfint", "strict_half")


class DomainError(ValueError):
    """Parameters outside the region where an identity is asserted."""


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    title: str
    kind: str
    params: dict
    domain: tuple[str, ...]
    lhs: dict
    rhs: list
    qnorm: str | None = None
    notes: str = ""
    raw: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(self.params)

    @property
    def symmetry(self) -> tuple[str, ...]:
        return tuple(self.lhs.get("symmetry", ()))

    def coerce_params(self, values: dict) -> dict:
        """Validate and convert parameter values; raises DomainError."""
        missing = [p for p in self.params if p not in values]
        if missing:
            raise DomainError(f"{self.id}: missing parameters {missing}")
        extra = [p for p in values if p not in self.params]
        if extra:
            raise DomainError(f"{self.id}: unknown parameters {extra}")
        out = {}
        for name, kind in self.params.items():
            out[name] = _coerce(self.id, name, kind, values[name])
        for cond in self.domain:
            if not evaluate(cond, out):
                raise DomainError(f"{self.id}: {cond} fails for {_fmt(out)}")
        return out

    def in_domain(self, values: dict) -> bool:
        try:
            self.coerce_params(values)
        except DomainError:
            return False
        return True

    def qnorm_value(self, env: dict) -> Fraction:
        """Power of q multiplying both sides (zero unless declared)."""
        return evaluate(self.qnorm, env) if self.qnorm else Fraction(0)

    def to_dict(self) -> dict:
        return {"id": self.id, **self.raw}


def _fmt(values):
    return ", ".join(f"{k}={v}" for k, v in values.items())


def _coerce(ident, name, kind, value):
    if isinstance(kind, dict):
        choices = [Fraction(str(c)) for c in kind["choice"]]
        v = Fraction(str(value)) if not isinstance(value, Fraction) else value
        if v not in choices:
            raise DomainError(f"{ident}: {name}={value} not in {kind['choice']}")
        return v
    try:
        h = HalfInt(value if not isinstance(value, float) else str(value))
    except (ValueError, TypeError) as exc:
        raise DomainError(f"{ident}: {name}={value!r}: {exc}") from None
    if kind == "posint":
        ok = h.is_integer() and h >= 1
    elif kind == "int":
        ok = h.is_integer() and h >= 0
    elif kind == "halfint":
        ok = h >= 0
    elif kind == "strict_half":
        ok = not h.is_integer() and h > 0
    else:
        raise ValueError(f"unknown parameter kind {kind}")
    if not ok:
        raise DomainError(f"{ident}: {name}={value} is not of kind {kind}")
    return h.fraction()


@lru_cache(maxsize=1)
def load_catalog() -> dict[str, IdentityDescriptor]:
    text = resources.files(__package__).joinpath("identities.yaml").read_text()
    data = yaml.safe_load(text)["identities"]
    out = {}
    for ident, entry in data.items():
        out[ident] = IdentityDescriptor(
            id=ident,
            title=entry["title"],
            kind=entry["kind"],
            params=dict(entry["params"]),
            domain=tuple(entry.get("domain", ())),
            lhs=entry["lhs"],
            rhs=entry["rhs"],
            qnorm=entry.get("qnorm"),
            notes=entry.get("notes", ""),
            raw=entry,
        )
    return out


def get_identity(ident: str) -> IdentityDescriptor:
    catalog = load_catalog()
    if ident not in catalog:
        raise KeyError(f"unknown identity {ident!r}; known: {', '.join(catalog)}")
    return catalog[ident]


def catalog_yaml() -> str:
    return resources.files(__package__).joinpath("identities.yaml").read_text()
