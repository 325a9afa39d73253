# thetaspan/utils/point_io.py
"""Delimited point files: one `x,y` (or `x y`) record per line.

Lines starting with `#` are comments and a single non-numeric header line is
allowed before the first record. Ids are the record order.
"""
import math
import re
from pathlib import Path
from typing import IO, Iterable

from thetaspan.errors import DuplicatePointError, NonFiniteCoordinateError, PointParseError
from thetaspan.models.geometry import Point

_SPLIT = re.compile(r"[,\s]+")
HEADER = "x,y"


def parse_points(lines: Iterable[str]) -> list[Point]:
    points: list[Point] = []
    seen: dict[tuple[float, float], int] = {}
    header_allowed = True
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f for f in _SPLIT.split(line) if f]
        values = []
        for column, field in enumerate(fields, start=1):
            try:
                values.append(float(field))
            except ValueError:
                values = None
                if header_allowed and not points and not any(_is_number(f) for f in fields):
                    break
                raise PointParseError(f"not a number: {field!r}", line=number, column=column)
        header_allowed = False
        if values is None:
            continue
        if len(values) != 2:
            raise PointParseError(f"expected 2 coordinates, found {len(values)}", line=number)
        for column, value in enumerate(values, start=1):
            if not math.isfinite(value):
                raise NonFiniteCoordinateError(f"non-finite coordinate {value}", line=number, column=column)
        key = (values[0], values[1])
        if key in seen:
            raise DuplicatePointError(f"duplicate of the point on line {seen[key]}", line=number)
        seen[key] = number
        points.append(Point.of(*values))
    return points


def _is_number(field: str) -> bool:
    try:
        float(field)
        return True
    except ValueError:
        return False


def load_points(source: str | Path | IO[str]) -> list[Point]:
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            return parse_points(fh)
    return parse_points(source)


def format_points(points: Iterable[Point]) -> str:
    """Header plus repr floats, which reload bit-identically"""
    rows = [HEADER] + [f"{p.x!r},{p.y!r}" for p in points]
    return "\n".join(rows) + "\n"


def dump_points(points: Iterable[Point], target: str | Path | IO[str]) -> None:
    text = format_points(points)
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="utf-8")
    else:
        target.write(text)
