from __future__ import annotations

from logging import getLogger
from pathlib import Path

from .graph import Graph, GraphError, build

_log = getLogger(__name__)

COMMENT_PREFIX = "#"


class EdgeListError(GraphError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _int_pair(text: str, line: int) -> tuple[int, int]:
    fields = text.split()
    if len(fields) != 2:
        raise EdgeListError(line, f"expected two integers, got {text!r}")
    try:
        first, second = int(fields[0]), int(fields[1])
    except ValueError as err:
        raise EdgeListError(line, f"expected two integers, got {text!r}") from err
    if first < 0 or second < 0:
        raise EdgeListError(line, f"negative value in {text!r}")
    return first, second


def parse_edge_list(text: str, max_order: int | None = None) -> Graph:
    """Parse the "s t" header followed by t "u v" lines. '#' lines and blank lines are ignored.

    A header announcing more than `max_order` vertices is rejected before any edge is read.
    """
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int]] = []
    last_line = 0
    for number, raw in enumerate(text.splitlines(), start=1):
        last_line = number
        stripped = raw.strip()
        if not stripped or stripped.startswith(COMMENT_PREFIX):
            continue
        pair = _int_pair(stripped, number)
        if header is None:
            header = pair
            if max_order is not None and header[0] > max_order:
                raise EdgeListError(number, f"header announces {header[0]} vertices, above the limit of {max_order}")
            continue
        u, v = pair
        if u >= header[0] or v >= header[0]:
            raise EdgeListError(number, f"vertex id out of range 0..{header[0] - 1}: {stripped!r}")
        if u == v:
            raise EdgeListError(number, f"self-loop at vertex {u}")
        pairs.append(pair)
    if header is None:
        raise EdgeListError(last_line, "missing 's t' header")
    order, size = header
    if len(pairs) != size:
        raise EdgeListError(last_line, f"header announces {size} edges, found {len(pairs)}")
    try:
        return build(order, pairs)
    except GraphError as err:
        raise EdgeListError(1, str(err)) from err


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.order} {g.size}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path, max_order: int | None = None) -> Graph:
    _log.debug(f"read edge list from: {Path(path).absolute()}")
    with open(path, "rb") as file:
        raw = file.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as err:
        line = raw[:err.start].count(b"\n") + 1
        raise EdgeListError(line, f"non-ASCII byte 0x{raw[err.start]:02x}") from err
    return parse_edge_list(text, max_order)


def write_edge_list(g: Graph, path: str | Path):
    _log.debug(f"write edge list ({g}) to: {Path(path).absolute()}")
    with open(path, "w", encoding="ascii", newline="\n") as file:
        file.write(format_edge_list(g))
