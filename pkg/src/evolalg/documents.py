"""The textual algebra document, the DOT export, and small input parsers.

Grammar (full description in FORMAT.md):

    field rational          # or: field prime <p>
    dim <n>
    matrix
    <n rows of n whitespace-separated scalars>

'#' starts a comment, blank lines are skipped.  The matrix entry at row k,
column i is the coefficient of e_k in e_i^2, i.e. column i spells out
e_i^2.  Emission is canonical, so parse and emit are mutually inverse
byte for byte.
"""

from __future__ import annotations

from .algebra import EvolutionAlgebra
from .errors import FieldError, ParseError
from .fields import GF, QQ
from .graph import AssociatedGraph
from .linalg import Matrix


def _significant_lines(text):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_field_line(line, lineno):
    tokens = line.split()
    if tokens[0] != "field":
        raise ParseError("expected 'field ...', got %r" % line, lineno)
    if tokens[1:] == ["rational"]:
        return QQ
    if len(tokens) == 3 and tokens[1] == "prime":
        try:
            p = int(tokens[2])
        except ValueError:
            raise ParseError("modulus %r is not an integer" % tokens[2], lineno) from None
        try:
            return GF(p)
        except FieldError as exc:
            raise ParseError(str(exc), lineno) from None
    raise ParseError("expected 'field rational' or 'field prime <p>', got %r" % line, lineno)


def parse_document(text, field_override=None) -> EvolutionAlgebra:
    """Parse an algebra document (str or bytes).

    field_override, when given, replaces the declared field before any
    scalar is interpreted; the declared header still has to be well formed.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError("empty document")
    cursor = 0

    def take(what):
        nonlocal cursor
        if cursor >= len(lines):
            raise ParseError("unexpected end of document, expected %s" % what,
                             lines[-1][0] if lines else None)
        item = lines[cursor]
        cursor += 1
        return item

    lineno, line = take("a field line")
    field = _parse_field_line(line, lineno)
    if field_override is not None:
        field = field_override

    lineno, line = take("a dim line")
    tokens = line.split()
    if len(tokens) != 2 or tokens[0] != "dim":
        raise ParseError("expected 'dim <n>', got %r" % line, lineno)
    try:
        dim = int(tokens[1])
    except ValueError:
        raise ParseError("dimension %r is not an integer" % tokens[1], lineno) from None
    if dim < 1:
        raise ParseError("dimension must be at least 1, got %d" % dim, lineno)

    lineno, line = take("the matrix header")
    if line != "matrix":
        raise ParseError("expected 'matrix', got %r" % line, lineno)

    rows = []
    for _ in range(dim):
        lineno, line = take("a matrix row")
        tokens = line.split()
        if len(tokens) != dim:
            raise ParseError("expected %d entries, found %d" % (dim, len(tokens)), lineno)
        row = []
        for pos, token in enumerate(tokens, start=1):
            try:
                row.append(field.parse(token))
            except FieldError as exc:
                raise ParseError("entry %d: %s" % (pos, exc), lineno) from None
        rows.append(tuple(row))

    if cursor != len(lines):
        raise ParseError("unexpected trailing content %r" % lines[cursor][1], lines[cursor][0])
    return EvolutionAlgebra(field, Matrix(dim, dim, tuple(rows)))


def emit_document(algebra: EvolutionAlgebra) -> str:
    """Canonical text for an algebra; parse(emit(A)) == A byte-exactly."""
    f = algebra.field
    header = "field rational" if f.kind == "rational" else "field prime %d" % f.p
    out = [header, "dim %d" % algebra.dim, "matrix"]
    for row in algebra.structure.entries:
        out.append(" ".join(f.format(x) for x in row))
    return "\n".join(out) + "\n"


def export_dot(graph: AssociatedGraph) -> str:
    """DOT text with vertices v1..vn and one edge statement per arrow,
    both in ascending order; byte-stable across runs."""
    out = ["digraph evolution {"]
    for i in range(1, graph.n + 1):
        out.append("  v%d;" % i)
    for i in range(1, graph.n + 1):
        for j in sorted(graph.out_edges(i)):
            out.append("  v%d -> v%d;" % (i, j))
    out.append("}")
    return "\n".join(out) + "\n"


def parse_vector(field, text, dim: int) -> tuple:
    """Comma-separated scalar list, e.g. '1,0,-2/3'."""
    tokens = [t.strip() for t in text.split(",")]
    if len(tokens) != dim:
        raise ParseError("expected %d coordinates, found %d" % (dim, len(tokens)))
    try:
        return tuple(field.parse(t) for t in tokens)
    except FieldError as exc:
        raise ParseError(str(exc)) from None


def parse_basis_file(field, text, dim: int):
    """One vector per significant line, whitespace-separated scalars."""
    vectors = []
    for lineno, line in _significant_lines(text):
        tokens = line.split()
        if len(tokens) != dim:
            raise ParseError("expected %d coordinates, found %d" % (dim, len(tokens)), lineno)
        try:
            vectors.append(tuple(field.parse(t) for t in tokens))
        except FieldError as exc:
            raise ParseError(str(exc), lineno) from None
    return vectors
