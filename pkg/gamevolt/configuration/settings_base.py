# gamevolt/configuration/settings_base.py
import logging
import typing
from dataclasses import MISSING, Field, dataclass, fields, is_dataclass
from enum import Enum
from types import NoneType, UnionType
from typing import Any, ClassVar, Self, get_args, get_origin, get_type_hints

from gamevolt.configuration.errors.settings_error import SettingsError


def _is_optional(hint: Any) -> bool:
    origin = get_origin(hint)
    return (origin is typing.Union or isinstance(hint, UnionType)) and NoneType in get_args(hint)


def _strip_optional(hint: Any) -> Any:
    if not _is_optional(hint):
        return hint
    args = [a for a in get_args(hint) if a is not NoneType]
    return args[0] if len(args) == 1 else hint


def _is_settings_type(tp: Any) -> bool:
    return isinstance(tp, type) and is_dataclass(tp) and issubclass(tp, SettingsBase)


def _is_enum_type(tp: Any) -> bool:
    return isinstance(tp, type) and issubclass(tp, Enum)


def _has_default(f: Field) -> bool:
    return f.default is not MISSING or f.default_factory is not MISSING


def _coerce_enum(value: Any, enum_cls: type[Enum], path: str) -> Enum:
    if isinstance(value, enum_cls):
        return value
    if isinstance(value, str):
        name = value.strip().upper().replace("-", "_")
        if name in enum_cls.__members__:
            return enum_cls.__members__[name]
    try:
        return enum_cls(value)
    except ValueError:
        allowed = ", ".join(enum_cls.__members__)
        raise SettingsError(f"{value!r} is not one of {{{allowed}}}", path=path) from None


def _assert_type(value: Any, hint: Any, path: str) -> None:
    """Raise SettingsError if value doesn't conform to hint. No coercion."""
    if hint is Any:
        return

    if _is_optional(hint):
        if value is None:
            return
        hint = _strip_optional(hint)

    if _is_enum_type(hint) or _is_settings_type(hint):
        if not isinstance(value, hint):
            raise SettingsError(f"expected {hint.__name__}, got {type(value).__name__}", path=path)
        return

    origin = get_origin(hint)
    args = get_args(hint)

    if origin in (list, tuple):
        if not isinstance(value, origin):
            raise SettingsError(f"expected {origin.__name__}, got {type(value).__name__}", path=path)
        if origin is tuple and args and args[-1] is not Ellipsis:
            if len(value) != len(args):
                raise SettingsError(f"expected {len(args)} items, got {len(value)}", path=path)
            for i, (item, item_hint) in enumerate(zip(value, args)):
                _assert_type(item, item_hint, f"{path}[{i}]")
            return
        item_hint = args[0] if args else Any
        for i, item in enumerate(value):
            _assert_type(item, item_hint, f"{path}[{i}]")
        return

    if origin is dict:
        if not isinstance(value, dict):
            raise SettingsError(f"expected dict, got {type(value).__name__}", path=path)
        key_hint, value_hint = args if args else (Any, Any)
        for k, v in value.items():
            _assert_type(k, key_hint, f"{path}.<key>")
            _assert_type(v, value_hint, f"{path}[{k!r}]")
        return

    if hint is bool:
        if not isinstance(value, bool):
            raise SettingsError(f"expected bool, got {type(value).__name__}", path=path)
        return
    if hint is int:
        # bool is a subclass of int
        if isinstance(value, bool) or not isinstance(value, int):
            raise SettingsError(f"expected int, got {type(value).__name__}", path=path)
        return
    if hint is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SettingsError(f"expected float, got {type(value).__name__}", path=path)
        return
    if hint is str:
        if not isinstance(value, str):
            raise SettingsError(f"expected str, got {type(value).__name__}", path=path)
        return

    if isinstance(hint, type) and not isinstance(value, hint):
        raise SettingsError(f"{value!r} is not of expected type {hint.__name__}", path=path)


def _convert(value: Any, hint: Any, path: str, strict: bool) -> Any:
    if value is None:
        if _is_optional(hint) or hint is Any:
            return None
        raise SettingsError("value must not be null", path=path)

    base = _strip_optional(hint)

    if _is_settings_type(base):
        if not isinstance(value, dict):
            raise SettingsError(f"expected a mapping for {base.__name__}, got {type(value).__name__}", path=path)
        return base._from_json_like_impl(value, path=path, strict=strict)

    if _is_enum_type(base):
        return _coerce_enum(value, base, path)

    origin = get_origin(base)
    args = get_args(base)

    if origin in (list, tuple):
        if not isinstance(value, (list, tuple)):
            raise SettingsError(f"expected a sequence, got {type(value).__name__}", path=path)
        if origin is tuple and args and args[-1] is not Ellipsis:
            if len(value) != len(args):
                raise SettingsError(f"expected {len(args)} items, got {len(value)}", path=path)
            return tuple(_convert(v, a, f"{path}[{i}]", strict) for i, (v, a) in enumerate(zip(value, args)))
        item_hint = args[0] if args else Any
        items = [_convert(v, item_hint, f"{path}[{i}]", strict) for i, v in enumerate(value)]
        return tuple(items) if origin is tuple else items

    if origin is dict:
        if not isinstance(value, dict):
            raise SettingsError(f"expected a mapping, got {type(value).__name__}", path=path)
        value_hint = args[1] if args else Any
        return {k: _convert(v, value_hint, f"{path}[{k!r}]", strict) for k, v in value.items()}

    # JSON has no float/int distinction for whole numbers
    if base is float and isinstance(value, int) and not isinstance(value, bool):
        value = float(value)

    _assert_type(value, base, path)
    return value


def _to_json_value(value: Any) -> Any:
    if isinstance(value, SettingsBase):
        return value.to_json_like()
    if isinstance(value, Enum):
        return value.name
    if isinstance(value, (list, tuple)):
        return [_to_json_value(v) for v in value]
    if isinstance(value, dict):
        return {k: _to_json_value(v) for k, v in value.items()}
    return value


@dataclass
class SettingsBase:
    FIELD_HANDLERS: ClassVar[dict[str, Any]] = {}

    def __post_init__(self) -> None:
        self._validate_types(self.__class__.__name__)
        try:
            self.validate()
        except ValueError as e:
            raise SettingsError(str(e), path=self.__class__.__name__) from None

    def __str__(self) -> str:
        return self.format_settings(self, indent=0)

    def validate(self) -> None:
        """Domain invariants; raise ValueError with a readable message."""

    def _validate_types(self, path: str) -> None:
        hints = get_type_hints(self.__class__)
        for f in fields(self):
            if f.name in hints:
                _assert_type(getattr(self, f.name), hints[f.name], f"{path}.{f.name}")

    def to_json_like(self) -> dict[str, Any]:
        return {f.name: _to_json_value(getattr(self, f.name)) for f in fields(self)}

    def format_settings(self, obj: Any, indent: int = 0) -> str:
        indent_str = "  " * indent
        lines: list[str] = [f"{indent_str}-> {obj.__class__.__name__}:"]

        for f in fields(obj):
            value = getattr(obj, f.name)
            pad = "  " * (indent + 1)

            if isinstance(value, SettingsBase):
                lines.append(self.format_settings(value, indent + 1))
            elif isinstance(value, (list, tuple)) and value and all(isinstance(v, SettingsBase) for v in value):
                lines.append(f"{pad}-> {f.name}: [")
                lines.extend(self.format_settings(v, indent + 2) for v in value)
                lines.append(f"{pad}]")
            else:
                lines.append(f"{pad}-> {f.name}: {_to_json_value(value)}")

        return "\n".join(lines)

    @classmethod
    def from_json_like(cls, json: Any, *, strict: bool = True) -> Self:
        if not _is_settings_type(cls):
            raise SettingsError(f"'{cls.__name__}' must be a @dataclass inheriting SettingsBase.", path=cls.__name__)
        if not isinstance(json, dict):
            raise SettingsError(f"expected a mapping, got {type(json).__name__}", path=cls.__name__)
        return cls._from_json_like_impl(json, path=cls.__name__, strict=strict)

    @classmethod
    def _from_json_like_impl(cls, json: dict[str, Any], *, path: str, strict: bool) -> Self:
        declared = {f.name: f for f in fields(cls) if f.init}

        unexpected = sorted(k for k in json if k not in declared)
        if unexpected:
            if strict:
                raise SettingsError(f"unexpected keys: {unexpected}", path=path)
            logging.getLogger(__name__).warning("Unexpected keys in %s: %s", path, unexpected)

        hints = get_type_hints(cls)
        missing = sorted(name for name, f in declared.items() if name not in json and not _has_default(f) and not _is_optional(hints[name]))
        if missing:
            raise SettingsError(f"missing required keys: {missing}", path=path)

        out: dict[str, Any] = {}
        for name, f in declared.items():
            field_path = f"{path}.{name}"
            if name not in json:
                if not _has_default(f):
                    out[name] = None
                continue

            value = json[name]
            handler = cls.FIELD_HANDLERS.get(name)
            if handler is not None:
                try:
                    value = handler(value)
                except Exception as e:
                    raise SettingsError(f"handler failed for value={value!r}: {e}", path=field_path) from e

            out[name] = _convert(value, hints[name], field_path, strict)

        try:
            return cls(**out)
        except SettingsError as e:
            # re-anchor the message on the dotted path of this section
            raise SettingsError(e.message, path=path) from None
