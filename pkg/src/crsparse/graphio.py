"""Edge-list files: a header line ``n m`` followed by ``m`` lines ``u v w``.

Blank lines and lines starting with ``#`` are skipped. Vertex ids are
0-based. Duplicate edges are merged by summing weights (with a warning).
"""
import contextlib
import os
import tempfile

from .errors import GraphValidationError, ParseError
from .graph import WeightedGraph


def format_float(x):
    x = float(x)
    if x.is_integer() and abs(x) < 2**53:
        return str(int(x))
    return repr(x)


@contextlib.contextmanager
def atomic_write(path, mode="w"):
    """Write to a temporary sibling and rename into place on success."""
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=os.path.basename(path))
    try:
        with os.fdopen(fd, mode, newline="\n") as fh:
            yield fh
        os.replace(tmp, path)
    except BaseException:
        with contextlib.suppress(OSError):
            os.unlink(tmp)
        raise


def parse_graph(text):
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError("header must be 'n m'", lineno)
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise ParseError(f"non-integer header {line!r}", lineno) from None
            if header[0] < 1 or header[1] < 0:
                raise ParseError("need n >= 1 and m >= 0", lineno)
            continue
        if len(fields) != 3:
            raise ParseError(f"expected 'u v w', got {line!r}", lineno)
        try:
            u, v, w = int(fields[0]), int(fields[1]), float(fields[2])
        except ValueError:
            raise ParseError(f"cannot parse {line!r}", lineno) from None
        if not (w > 0 and w != float("inf")):
            raise ParseError(f"weight must be a positive finite number, got {fields[2]}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if not (0 <= u < header[0] and 0 <= v < header[0]):
            raise ParseError(f"vertex id out of range [0, {header[0]})", lineno)
        edges.append((u, v, w))
    if header is None:
        raise ParseError("missing header")
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}")
    try:
        return WeightedGraph.from_edges(header[0], edges)
    except GraphValidationError as exc:
        raise ParseError(str(exc)) from exc


def read_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def dumps_graph(G):
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v} {format_float(w)}" for u, v, w in G.edges())
    return "\n".join(lines) + "\n"


def write_graph(G, path):
    with atomic_write(path) as fh:
        fh.write(dumps_graph(G))
