"""Functions to convert reports to and from JSON and pandas/CSV.
"""
import dataclasses
import json
import math
from collections import defaultdict
from enum import Enum
from typing import Iterable, List

import numpy as np
import pandas as pd

__all__ = ["to_jsonable", "dumps_report", "to_json_report", "to_pandas_reports", "to_csv_reports",
           "from_csv_reports", "JSON_DIGITS"]

JSON_DIGITS = 15


def _round(x: float, digits: int):
    if not math.isfinite(x):
        return None
    return float(f"{x:.{digits}g}")


def to_jsonable(obj, digits: int = JSON_DIGITS):
    """Turn a report (dataclasses, enums, numpy values, sets) into plain JSON data.

    Parameters
    ----------
    obj : object
        any nesting of dataclasses, mappings, sequences and scalars
    digits : int
        significant digits kept for floats

    Returns
    -------
    data : dict | list | str | float | int | bool | None
    """
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        if hasattr(obj, "to_dict"):
            return to_jsonable(obj.to_dict(), digits)
        return {f.name: to_jsonable(getattr(obj, f.name), digits) for f in dataclasses.fields(obj) if f.repr}
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, dict):
        return {str(k.value if isinstance(k, Enum) else k): to_jsonable(v, digits) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return sorted(to_jsonable(v, digits) for v in obj)
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v, digits) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist(), digits)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return {"re": _round(float(obj.real), digits), "im": _round(float(obj.imag), digits)}
    if isinstance(obj, (float, np.floating)):
        return _round(float(obj), digits)
    if obj is None or isinstance(obj, str):
        return obj
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")


def dumps_report(report, digits: int = JSON_DIGITS, **kwargs) -> str:
    """JSON text of a report.

    **kwargs
        arguments for calling json.dumps
    """
    kwargs.setdefault("indent", 2)
    return json.dumps(to_jsonable(report, digits), **kwargs)


def to_json_report(file: str, report, digits: int = JSON_DIGITS, **kwargs):
    with open(file, "w") as f:
        f.write(dumps_report(report, digits, **kwargs))


def to_pandas_reports(reports: Iterable, columns: List[str] = None) -> pd.DataFrame:
    """Convert a sequence of flat reports to a pandas dataframe.

    Parameters
    ----------
    reports : iterable of dataclass instances
        nested values are JSON-encoded strings in the output
    columns : list of str, optional
        keep only these fields, in this order

    Returns
    -------
    df : pandas DataFrame
    """
    d = defaultdict(list)
    for report in reports:
        row = to_jsonable(report)
        for k in (columns or row.keys()):
            v = row[k]
            d[k].append(json.dumps(v) if isinstance(v, (dict, list)) else v)
    return pd.DataFrame.from_dict(dict(d))


def to_csv_reports(file: str, reports: Iterable, columns: List[str] = None, **kwargs):
    """Write reports as a CSV trend file.

    **kwargs
        arguments for calling pandas.DataFrame.to_csv
    """
    kwargs.setdefault("index", False)
    df = reports if isinstance(reports, pd.DataFrame) else to_pandas_reports(reports, columns)
    df.to_csv(file, **kwargs)
    return df


def from_csv_reports(file: str, **kwargs) -> pd.DataFrame:
    """Read a CSV trend file written by :func:`to_csv_reports`.

    **kwargs
        arguments for calling pandas.read_csv
    """
    return pd.read_csv(file, **kwargs)
