"""Shared estimator plumbing: error types and parameter introspection.

The estimator classes in this package follow the scikit-learn conventions
(``get_params``/``set_params``, ``fit`` returning ``self``) without
depending on scikit-learn itself, so they stay composable with pipelines
and grid-search tooling via duck typing.
"""

from __future__ import annotations

import inspect


class SumauditError(Exception):
    """Base class for data and configuration errors raised by this package."""


class NotFitted(SumauditError):
    """An operation needs a fitted attribute or an explicit parameter."""


class ParamsMixin:
    """scikit-learn style parameter handling.

    Subclasses must list every parameter explicitly in ``__init__`` and
    assign each argument verbatim to an attribute of the same name.
    """

    @classmethod
    def _param_names(cls) -> list[str]:
        sig = inspect.signature(cls.__init__)
        return [
            p.name
            for p in sig.parameters.values()
            if p.name != "self"
            and p.kind not in (p.VAR_POSITIONAL, p.VAR_KEYWORD)
        ]

    def get_params(self, deep: bool = True) -> dict:
        out: dict = {}
        for name in self._param_names():
            value = getattr(self, name)
            if deep and hasattr(value, "get_params"):
                for sub_name, sub_value in value.get_params(deep=True).items():
                    out[f"{name}__{sub_name}"] = sub_value
            out[name] = value
        return out

    def set_params(self, **params):
        if not params:
            return self
        valid = set(self._param_names())
        nested: dict[str, dict] = {}
        for key, value in params.items():
            name, _, sub_key = key.partition("__")
            if name not in valid:
                raise ValueError(
                    f"invalid parameter {key!r} for {type(self).__name__}; "
                    f"valid parameters are {sorted(valid)}"
                )
            if sub_key:
                nested.setdefault(name, {})[sub_key] = value
            else:
                setattr(self, name, value)
        for name, sub_params in nested.items():
            getattr(self, name).set_params(**sub_params)
        return self

    def __repr__(self) -> str:
        args = ", ".join(
            f"{name}={getattr(self, name)!r}" for name in self._param_names()
        )
        return f"{type(self).__name__}({args})"
