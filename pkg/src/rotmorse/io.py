"""JSON molecule files."""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, fields
from importlib import resources
from pathlib import Path

from .potential import MoleculeParams


class MoleculeFileError(ValueError):
    pass


@dataclass(frozen=True)
class MoleculeFile:
    name: str
    D_cm1: float
    a_inv_angstrom: float
    r0_angstrom: float
    mu_amu: float

    def __post_init__(self):
        if not isinstance(self.name, str):
            raise MoleculeFileError("name must be a string")
        for f in fields(self)[1:]:
            value = getattr(self, f.name)
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise MoleculeFileError(f"{f.name} must be a number, got {value!r}")
            if not (math.isfinite(value) and value > 0):
                raise MoleculeFileError(f"{f.name} must be strictly positive, got {value!r}")

    @classmethod
    def from_dict(cls, data: dict) -> "MoleculeFile":
        if not isinstance(data, dict):
            raise MoleculeFileError("molecule file must hold a JSON object")
        keys = {f.name for f in fields(cls)}
        unknown = set(data) - keys
        if unknown:
            raise MoleculeFileError(f"unknown keys: {sorted(unknown)}")
        missing = keys - set(data)
        if missing:
            raise MoleculeFileError(f"missing keys: {sorted(missing)}")
        return cls(**data)

    def to_params(self) -> MoleculeParams:
        return MoleculeParams.from_wavenumber(
            self.name, self.D_cm1, self.a_inv_angstrom, self.r0_angstrom, self.mu_amu
        )


def read_molecule_file(path) -> MoleculeFile:
    text = Path(path).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MoleculeFileError(f"{path}: {exc}") from exc
    return MoleculeFile.from_dict(data)


def write_molecule_file(mol: MoleculeFile, path) -> None:
    Path(path).write_text(json.dumps(asdict(mol), indent=2) + "\n")


def load_molecule(path) -> MoleculeParams:
    return read_molecule_file(path).to_params()


def fixture_path(name: str) -> Path:
    """Path of a bundled molecule file ('co' or 'lih')."""
    path = resources.files("rotmorse") / "data" / f"{name.lower()}.json"
    if not path.is_file():
        raise FileNotFoundError(f"no bundled molecule {name!r}")
    return Path(str(path))
