import json
from dataclasses import dataclass
from enum import Enum

import numpy as np
import pandas as pd

from grothnorm.readwrite import *


class Colour(Enum):
    RED = "red"


@dataclass(frozen=True)
class Row:
    n: int
    value: float
    colour: Colour
    tags: frozenset


def rows():
    return [Row(n, 1 / (n + 1), Colour.RED, frozenset({"b", "a"})) for n in range(3)]


class TestJson:

    def test_plain_data(self):
        data = to_jsonable(rows()[0])
        assert data == {"n": 0, "value": 1.0, "colour": "red", "tags": ["a", "b"]}

    def test_numpy_and_complex(self):
        data = to_jsonable({"a": np.arange(2), "z": 1 + 2j, "f": np.float64(np.pi), "b": np.bool_(True)})
        assert data == {"a": [0, 1], "z": {"re": 1.0, "im": 2.0}, "f": 3.14159265358979, "b": True}

    def test_dumps_parses_back(self):
        assert json.loads(dumps_report(rows()[1]))["value"] == 0.5


class TestCsv:

    def test_to_pandas(self):
        df = to_pandas_reports(rows(), columns=["n", "value"])
        assert list(df.columns) == ["n", "value"]
        assert df.equals(pd.DataFrame({"n": [0, 1, 2], "value": [1.0, 0.5, float("0.333333333333333")]}))

    def test_csv_file(self, tmp_path):
        path = tmp_path / "trend.csv"
        to_csv_reports(path, rows())
        df = from_csv_reports(path)
        assert list(df["n"]) == [0, 1, 2]
        assert json.loads(df["tags"][0]) == ["a", "b"]
