"""Loader for the expected-data tables shipped in primegenus/data.

Each table is plain text: one record per line, fields separated by tabs,
'#' starts a comment.  CENSUS_DATA_DIR overrides the directory.
"""
from __future__ import annotations

import os
from pathlib import Path

TABLE_VERSION = 1


def data_dir() -> Path:
    env = os.environ.get("CENSUS_DATA_DIR")
    return Path(env) if env else Path(__file__).with_name("data")


def read_table(name: str, ncols: int | None = None) -> list[list[str]]:
    path = data_dir() / f"{name}.txt"
    rows = []
    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        line = line.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        fields = [f.strip() for f in line.split("\t")]
        if ncols is not None and len(fields) != ncols:
            raise ValueError(f"{path}:{lineno}: expected {ncols} fields, got {len(fields)}")
        rows.append(fields)
    return rows


def eval_count(expr: str, p: int) -> int:
    """Evaluate a count expression such as '2*(p+1)' at p (integers only)."""
    allowed = set("0123456789p+-*/() ")
    if not set(expr) <= allowed:
        raise ValueError(f"bad count expression {expr!r}")
    return int(eval(expr, {"__builtins__": {}}, {"p": p}))


def condition_holds(cond: str, p: int) -> bool:
    if cond == "all":
        return True
    if cond.startswith("="):
        return p == int(cond[1:])
    if cond.startswith("1mod"):
        return p % int(cond[4:]) == 1
    raise ValueError(f"bad condition {cond!r}")
