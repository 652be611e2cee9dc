"""JSON and CSV interchange with deterministic float formatting.

All floating-point output is serialized at 12 significant digits so
report diffs stay stable across platforms at the verification
tolerance.
"""

from __future__ import annotations

import json
from typing import Any

from .functions import ClassParams, ProductForm, construct
from .measures import AtomicCircleMeasure

__all__ = [
    "fmt",
    "round12",
    "to_jsonable",
    "dumps",
    "load_function_spec",
    "dump_function_spec",
]


def fmt(x: float) -> str:
    """12-significant-digit text form of a float."""
    return f"{float(x):.12g}"


def round12(x: float) -> float:
    return float(fmt(x))


def to_jsonable(obj: Any) -> Any:
    """Recursively round floats to 12 significant digits for stable output."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return round12(obj)
    if isinstance(obj, complex):
        return [round12(obj.real), round12(obj.imag)]
    if isinstance(obj, dict):
        return {k: to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), indent=2) + "\n"


def _as_complex(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(float(v), 0.0)
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    raise ValueError(f"expected a number or [re, im] pair, got {v!r}")


def load_function_spec(data: dict) -> tuple[ProductForm, ClassParams]:
    """Parse {"mu", "beta"} plus either "factors" or "measure".

    A "prefactor" key overrides the default prefactor mu, which keeps
    bare power maps like (1-z)**(mu*beta) representable.
    """
    if not isinstance(data, dict):
        raise ValueError("function spec must be a JSON object")
    try:
        mu = _as_complex(data["mu"])
        beta = float(data["beta"])
    except KeyError as exc:
        raise ValueError(f"function spec missing key {exc}") from exc
    params = ClassParams(mu, beta)
    if "measure" in data:
        sigma = AtomicCircleMeasure.from_dict(data["measure"])
        return construct(params, sigma), params
    if "factors" not in data:
        raise ValueError("function spec needs 'factors' or 'measure'")
    prefactor = _as_complex(data["prefactor"]) if "prefactor" in data else mu
    factors = tuple(
        (_as_complex(f["node"]), _as_complex(f["exponent"])) for f in data["factors"]
    )
    return ProductForm(prefactor, factors), params


def dump_function_spec(f: ProductForm, params: ClassParams) -> dict:
    return f.to_dict(params)
