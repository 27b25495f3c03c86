"""Trace file loading.

The formats mirror the sketch package's reader line for line: this package
talks to it only through files, so both sides must parse a trace into the
same key sequence.
"""

import csv

ARROW = "→"


def read_trace(path: str, format: str = "lines") -> list[str]:
    """Load a trace file.

    ``lines``: each nonempty line is one item key.
    ``pairs``: two-column CSV; the key is ``src + "→" + dst``.
    """
    if format == "lines":
        items = []
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                key = line.rstrip("\n").rstrip("\r")
                if key:
                    items.append(key)
    elif format == "pairs":
        items = []
        with open(path, "r", encoding="utf-8", newline="") as fh:
            for lineno, row in enumerate(csv.reader(fh), start=1):
                if not row:
                    continue
                if len(row) != 2:
                    raise ValueError(
                        f"{path}: line {lineno}: expected 2 columns, got {len(row)}"
                    )
                items.append(f"{row[0]}{ARROW}{row[1]}")
    else:
        raise ValueError(f"unknown trace format: {format!r}")
    if not items:
        raise ValueError(f"{path}: trace is empty")
    return items
