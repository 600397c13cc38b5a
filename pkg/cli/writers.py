"""
Output Writers
Atomic CSV and JSON emission
"""

import json
import math
import os
import sys
import tempfile
import pandas as pd
from typing import Any, Dict, List, Optional

FLOAT_FORMAT = '%.17g'


def _clean(value: Any) -> Any:
    """JSON-safe copy: non-finite floats become null"""
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, dict):
        return {k: _clean(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_clean(v) for v in value]
    return value


def atomic_write(path: str, text: str):
    """Write via a temporary file in the target directory, then rename"""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix='.unirat-', suffix='.tmp')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def json_text(document: Any) -> str:
    return json.dumps(_clean(document), indent=2, ensure_ascii=False) + '\n'


def csv_text(rows: List[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    frame = pd.DataFrame(rows, columns=columns)
    return frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator='\n')


def emit(text: str, path: Optional[str] = None):
    """Write to path atomically, or to stdout when no path is given"""
    if path:
        atomic_write(path, text)
    else:
        sys.stdout.write(text)
