"""Embedded reference data: the GL_3 table of metaplectic polynomials."""

from __future__ import annotations

from importlib import resources

from .daha import GLMetaData, gl_field
from .expr import parse_laurent

TABLE_MU = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1),
            (1, 0, 1), (1, 1, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)]
TABLE_M = (1, 2, 3, 4, 5)


def read_table_lines(path=None):
    """Raw (m, mu, expression) triples from the fixture file."""
    if path is None:
        text = resources.files("metaplectic").joinpath(
            "data/gl3_table.txt").read_text("utf-8")
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    out = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        m, mu, expr = line.split("|", 2)
        out.append((int(m), tuple(int(c) for c in mu.split(",")), expr))
    return out


def load_gl3_table(epsilon: int = 1, path=None):
    """Parsed fixture polynomials keyed by (m, mu).

    Each polynomial lives over the degree-m ground field with the given
    sign substituted for eps; fields are shared per m.
    """
    fields = {m: gl_field(GLMetaData(r=3, n=m, epsilon=epsilon))
              for m in TABLE_M}
    table = {}
    for m, mu, expr in read_table_lines(path):
        table[(m, mu)] = parse_laurent(fields[m], 3, expr)
    return fields, table
