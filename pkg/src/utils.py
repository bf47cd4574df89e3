import logging
import re
from pathlib import Path
from typing import Any, Union

import ujson

_BARE_UNIT = re.compile(r"(^|[+-])i$")


def parse_complex(text: Union[str, float, complex]) -> complex:
    """
    Reads complex literals written as "a+bi", "-0.5i", "i" or plain reals.
    "j" is accepted as well.
    """
    if isinstance(text, (int, float, complex)):
        return complex(text)
    s = text.strip().replace(" ", "").replace("I", "i").replace("J", "j")
    s = _BARE_UNIT.sub(lambda match: f"{match.group(1)}1i", s)
    s = s.replace("i", "j")
    s = re.sub(r"(^|[+-])j$", r"\g<1>1j", s)
    try:
        return complex(s)
    except ValueError:
        raise ValueError(f"Cannot read complex literal: {text!r}") from None


def complex_to_json(value: complex) -> dict:
    value = complex(value)
    return {"re": float(value.real), "im": float(value.imag)}


def complex_from_json(payload: Any) -> complex:
    if isinstance(payload, dict):
        return complex(float(payload["re"]), float(payload.get("im", 0.0)))
    return parse_complex(payload)


def load_json(path: Union[str, Path]) -> Any:
    with open(path, "r") as f:
        return ujson.load(f)


def write_json(payload: Any, path: Union[str, Path]):
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as f:
        ujson.dump(payload, f, indent=2, ensure_ascii=False)


def setup_logging(level: str = "WARNING"):
    numeric = getattr(logging, str(level).upper(), None)
    if not isinstance(numeric, int):
        raise ValueError(f"Unknown log level: {level}")
    logging.basicConfig(
        level=numeric,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
