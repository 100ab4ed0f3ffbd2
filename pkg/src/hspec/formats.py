"""Text and JSON hypergraph file formats.

Text: the first content line is ``n``; every later non-empty line is one edge
given as whitespace-separated 1-based vertex indices. ``#`` starts a comment.
JSON: ``{"n": <int>, "edges": [[...], ...]}``.
Both serializers emit canonical edge order, so ``parse(dump(H)) == H``.
"""

import json
from pathlib import Path

from .errors import InputError, ParseError
from .hypercore import Hypergraph, validate


def parse_text(text: str) -> Hypergraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            values = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"expected integers, got {line!r}", lineno) from None
        if n is None:
            if len(values) != 1:
                raise ParseError("first line must hold the vertex count only", lineno)
            n = values[0]
            n_line = lineno
        else:
            edges.append((lineno, values))
    if n is None:
        raise ParseError("missing vertex count")
    if n < 1:
        raise ParseError(f"vertex count must be >= 1, got {n}", n_line)
    try:
        return validate(n, [vals for _, vals in edges])
    except InputError as exc:
        # validate reports edge indices; translate back to the source line
        idx = _edge_index(str(exc))
        line = edges[idx][0] if idx is not None and idx < len(edges) else None
        raise ParseError(str(exc), line) from exc


def _edge_index(message: str):
    parts = message.split()
    if len(parts) >= 2 and parts[0] == "edge" and parts[1].isdigit():
        return int(parts[1])
    return None


def parse_json(text: str) -> Hypergraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParseError('JSON hypergraph needs "n" and "edges" fields')
    n, edges = obj["n"], obj["edges"]
    if not isinstance(n, int) or not isinstance(edges, list):
        raise ParseError('"n" must be an integer and "edges" an array')
    for e in edges:
        if not isinstance(e, list) or not all(isinstance(v, int) for v in e):
            raise ParseError(f"edge {e!r} is not an array of integers")
    try:
        return validate(n, edges)
    except InputError as exc:
        raise ParseError(str(exc)) from exc


def parse(text: str) -> Hypergraph:
    """Parse either format, sniffing JSON by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def load(path) -> Hypergraph:
    return parse(Path(path).read_text())


def dumps_text(H: Hypergraph) -> str:
    lines = [str(H.n)] + [" ".join(map(str, e)) for e in H.edges]
    return "\n".join(lines) + "\n"


def dumps_json(H: Hypergraph) -> str:
    return json.dumps({"n": H.n, "edges": [list(e) for e in H.edges]}) + "\n"
