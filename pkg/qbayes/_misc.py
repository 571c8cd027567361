import os
import random
import sys
from decimal import Decimal
from typing import Any

import simplejson

from ._exceptions import FormatError


def _warn(msg: str) -> None:
    print(f'WARNING: {msg}', file=sys.stderr)

def _exact_float(x: float) -> Decimal:
    # 17 significant digits round-trip every float64
    return Decimal(format(float(x), '.17g'))

def _json_dumps(x: Any, *, indent=None) -> str:
    return simplejson.dumps(x, use_decimal=True, indent=indent, allow_nan=False)

def _json_loads(text: str, *, what: str='document') -> Any:
    try:
        return simplejson.loads(text)
    except simplejson.JSONDecodeError as e:
        raise FormatError(f'Unable to parse {what} as JSON: {e}')

def _read_json_file(path: str, *, what: str='document') -> Any:
    with open(path, 'r') as f:
        txt = f.read()
    return _json_loads(txt, what=what)

def _write_text_file(path: str, text: str) -> None:
    # write to a sibling temporary file then rename, so readers never see a partial file
    dirname = os.path.dirname(os.path.abspath(path))
    tmp_path = os.path.join(dirname, f'.{os.path.basename(path)}.writing.{_random_string(6)}')
    try:
        with open(tmp_path, 'w') as f:
            f.write(text)
        os.replace(tmp_path, path)
    finally:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)

def _require(d: dict, key: str, *, what: str) -> Any:
    if not isinstance(d, dict):
        raise FormatError(f'Expected an object for {what}, got {type(d).__name__}')
    if key not in d:
        raise FormatError(f'Missing field in {what}: {key}')
    return d[key]

def _random_string(num_chars: int) -> str:
    chars = 'abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789'
    return ''.join(random.choice(chars) for _ in range(num_chars))
