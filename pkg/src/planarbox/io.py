"""Point-set file formats: CSV with an ``x,y,weight[,color]`` header and an
equivalent JSON mirror.  A fixed-point scale turns decimal inputs into the
exact integers the solvers work with."""
from __future__ import annotations

import csv
import json

from .score import NEG_INF, Point


def _scaled(value: str, scale: int):
    if scale == 1:
        v = float(value)
        return int(v) if v == int(v) else v
    from decimal import Decimal

    v = Decimal(value) * scale
    if v != int(v):
        raise ValueError(f"value {value} does not fit fixed-point scale {scale}")
    return int(v)


def write_points_csv(points, path):
    has_color = any(p.color is not None for p in points)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", "y", "weight", "color"] if has_color else ["x", "y", "weight"])
        for p in points:
            row = [p.x, p.y, p.weight]
            if has_color:
                row.append(p.color or "")
            w.writerow(row)


def read_points_csv(path, scale: int = 1):
    points = []
    with open(path, newline="") as fh:
        r = csv.reader(fh)
        header = next(r)
        if header[:3] != ["x", "y", "weight"]:
            raise ValueError(f"unexpected CSV header {header!r}")
        has_color = len(header) > 3 and header[3] == "color"
        for i, row in enumerate(r):
            if not row:
                continue
            color = row[3] if has_color and len(row) > 3 and row[3] else None
            points.append(
                Point(
                    _scaled(row[0], scale),
                    _scaled(row[1], scale),
                    _scaled(row[2], scale),
                    color,
                    i,
                )
            )
    return points


def write_points_json(points, path):
    data = [
        {"x": p.x, "y": p.y, "weight": p.weight, "color": p.color, "id": p.id}
        for p in points
    ]
    with open(path, "w") as fh:
        json.dump({"points": data}, fh, indent=1)


def read_points_json(path, scale: int = 1):
    with open(path) as fh:
        data = json.load(fh)
    points = []
    for i, d in enumerate(data["points"]):
        points.append(
            Point(
                _scaled(str(d["x"]), scale),
                _scaled(str(d["y"]), scale),
                _scaled(str(d["weight"]), scale),
                d.get("color"),
                d.get("id", i),
            )
        )
    return points


def score_to_json(score):
    return "-inf" if score == NEG_INF else score


def write_points(points, path, fmt="csv"):
    if fmt == "csv":
        write_points_csv(points, path)
    elif fmt == "json":
        write_points_json(points, path)
    else:
        raise ValueError(f"unknown format {fmt!r}")


def read_points(path, scale: int = 1):
    if str(path).endswith(".json"):
        return read_points_json(path, scale)
    return read_points_csv(path, scale)
