"""Utilities for loading job configs and parsing group, module and label descriptors"""

from typing import Any, Dict, List, Optional, Sequence

import yaml

from hecke.constants import GroupKind, SignPolicy, logger
from hecke.errors import MathDomainError, ValidationError
from hecke.exact.fields import field_from_name
from hecke.modgroup.gmat import GMat
from hecke.modgroup.groups import GroupDescriptor
from hecke.algebra.grading import OperatorLabel
from hecke.coeffmod.characters import Character
from hecke.coeffmod.modules import CharacterModule, CoefficientModule, SymPowerModule, trivial_module


def load_config(path: str) -> Dict[str, Any]:
    """Read a YAML or JSON config file into a dict"""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = yaml.safe_load(fh)
    except OSError as e:
        raise ValidationError(f"cannot read config {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ValidationError(f"config {path} is not valid YAML/JSON: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ValidationError(f"config {path} must hold a mapping, got {type(data).__name__}")
    logger.debug(f"Loaded config {path} with keys {sorted(data)}")
    return data


def parse_group(
    kind: str = GroupKind.FULL.value,
    level: int = 1,
    sign: str = SignPolicy.SL.value,
    generators: Optional[Sequence[Sequence[int]]] = None,
    n: int = 2,
) -> GroupDescriptor:
    """Group descriptor from its record fields"""
    try:
        kind = GroupKind(kind)
        sign = SignPolicy(sign)
    except ValueError as e:
        raise ValidationError(str(e)) from e
    if kind == GroupKind.FULL and level != 1:
        raise ValidationError(f"the full group has level 1, got {level}")
    if kind == GroupKind.FULL or (level == 1 and kind != GroupKind.CUSTOM):
        return GroupDescriptor.full(sign, n)
    if n != 2:
        raise ValidationError("n = 3 is supported at level 1 only")
    if kind == GroupKind.GAMMA0:
        return GroupDescriptor.gamma0(level, sign)
    if kind == GroupKind.GAMMA1_UPPER:
        return GroupDescriptor.gamma1_upper(level, sign)
    if kind == GroupKind.GAMMA_DIAG:
        return GroupDescriptor.gamma_diag(level, sign)
    if not generators:
        raise ValidationError("a custom group needs generators mod N")
    return GroupDescriptor.custom(level, generators, sign)


def parse_module(text: str) -> CoefficientModule:
    """Module from its descriptor.

    Accepted forms: 'sym:k:e:F', 'trivial:F', 'char:M:trivial:F' and
    'char:M:sign:v1,v2,...:F' with values on the generators of (Z/M)*.
    """
    parts = text.strip().split(":")
    kind = parts[0]
    try:
        if kind == "sym" and len(parts) == 4:
            return SymPowerModule(int(parts[1]), int(parts[2]), field_from_name(parts[3]))
        if kind == "trivial" and len(parts) == 2:
            return trivial_module(field_from_name(parts[1]))
        if kind == "char" and len(parts) == 4 and parts[2] == "trivial":
            return CharacterModule(Character.trivial(int(parts[1]), field_from_name(parts[3])))
        if kind == "char" and len(parts) == 5:
            F = field_from_name(parts[4])
            values = [F.parse(v) for v in parts[3].split(",") if v]
            return CharacterModule(Character(int(parts[1]), F, F.parse(parts[2]), values))
    except ValueError as e:
        if isinstance(e, MathDomainError):
            raise
        raise ValidationError(f"bad module descriptor '{text}': {e}") from e
    raise ValidationError(f"unknown module descriptor '{text}'")


def parse_labels(text) -> List[OperatorLabel]:
    """'2,3,7' or 'T2,T3^(2),Ta6', or a list of such items"""
    items = text if isinstance(text, (list, tuple)) else str(text).split(",")
    out = []
    for item in items:
        item = str(item).strip()
        if not item:
            continue
        try:
            out.append(OperatorLabel.parse(item))
        except ValueError as e:
            raise ValidationError(f"bad operator label '{item}'") from e
    return out


def parse_matrix(text) -> GMat:
    """'a,b,c,d' (row-major) or a nested list"""
    if isinstance(text, (list, tuple)):
        if text and isinstance(text[0], (list, tuple)):
            return GMat(text)
        entries = list(text)
    else:
        try:
            entries = [int(x) for x in str(text).replace(";", ",").split(",") if x.strip()]
        except ValueError as e:
            raise ValidationError(f"bad matrix '{text}'") from e
    if len(entries) not in (4, 9):
        raise ValidationError(f"a matrix needs 4 or 9 entries, got {len(entries)}")
    return GMat.from_flat([int(x) for x in entries])
