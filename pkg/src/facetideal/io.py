"""Reading and writing complexes: the ``.facets`` text format and its JSON mirror.

Text format: one facet per line, whitespace-separated labels, ``#`` starts
a comment.  An optional ``vertices: x y z`` line fixes the universe and its
order; otherwise the universe is the labels in order of first appearance.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

from .complex import Complex, complex_from_facets, new_complex
from .errors import ParseError


def parse_facets_text(text: str) -> Complex:
    universe = None
    facets = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("vertices:"):
            if universe is not None:
                raise ParseError(f"line {lineno}: second 'vertices:' header")
            universe = line.split(":", 1)[1].split()
            continue
        facets.append(line.split())
    if universe is None:
        return complex_from_facets(facets)
    return new_complex(universe, facets)


def complex_from_json(obj) -> Complex:
    if not isinstance(obj, dict) or "facets" not in obj:
        raise ParseError("JSON input must be an object with a 'facets' list")
    facets = [[str(v) for v in f] for f in obj["facets"]]
    if "vertices" in obj:
        return new_complex([str(v) for v in obj["vertices"]], facets)
    return complex_from_facets(facets)


def parse_complex(text: str) -> Complex:
    """Auto-detect JSON (leading ``{``) versus the text format."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc}") from None
        return complex_from_json(obj)
    return parse_facets_text(text)


def read_complex(path: str) -> Complex:
    if path == "-":
        return parse_complex(sys.stdin.read())
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(str(exc)) from None
    return parse_complex(text)


def format_facets_text(c: Complex) -> str:
    lines = ["vertices: " + " ".join(c.universe)]
    lines += [" ".join(f) for f in c.facets]
    return "\n".join(lines) + "\n"


def dumps_complex(c: Complex) -> str:
    return json.dumps(c.to_dict())
