"""PMX documents (JSON) and DOT export.

A PMX file holds one object::

    {
      "format_version": 1,
      "kind": "premaniplex" | "operator" | "voltage_premaniplex",
      "rank": m,
      "in_rank": n,                 # operators only
      "vertex_count": V,
      "adjacency": [[...], ...],    # one row per color
      "voltages": [[...], ...],     # words (operator) or permutations
      "labels": [...]               # optional
    }

Everything is 0-based.  Validation is re-run on load.
"""

from __future__ import annotations

import json
import os
import tempfile

from .premaniplex import InvalidPremaniplex, Premaniplex, validate
from .voltage import FinVoltagePremaniplex, InvalidOperator, VoltageOperator, validate_fin, validate_operator

FORMAT_VERSION = 1
KINDS = ("premaniplex", "operator", "voltage_premaniplex")


class PmxFormatError(ValueError):
    """The text is not a well-formed PMX document."""


class PmxValidationError(ValueError):
    """The document is well formed but describes an invalid object."""


def _field(doc, name, kind=None):
    if name not in doc:
        raise PmxFormatError(f"field '{name}': missing")
    val = doc[name]
    if kind is not None and not isinstance(val, kind) or isinstance(val, bool):
        raise PmxFormatError(f"field '{name}': expected {kind.__name__}")
    return val


def _int_matrix(val, name, shape=None):
    if not isinstance(val, list) or not all(isinstance(r, list) for r in val):
        raise PmxFormatError(f"field '{name}': expected a list of lists")
    for k, row in enumerate(val):
        if not all(isinstance(a, int) and not isinstance(a, bool) for a in row):
            raise PmxFormatError(f"field '{name}': row {k} has a non-integer entry")
    if shape is not None:
        if len(val) != shape[0] or any(len(r) != shape[1] for r in val):
            raise PmxFormatError(f"field '{name}': expected shape {shape[0]} x {shape[1]}")
    return val


def _premaniplex_from(doc):
    rank = _field(doc, "rank", int)
    V = _field(doc, "vertex_count", int)
    if rank < 1 or V < 1:
        raise PmxFormatError("fields 'rank' and 'vertex_count' must be positive")
    adj = _int_matrix(_field(doc, "adjacency"), "adjacency", (rank, V))
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != V):
        raise PmxFormatError("field 'labels': expected one label per vertex")
    try:
        X = Premaniplex(adj, labels)
    except InvalidPremaniplex as e:
        raise PmxValidationError(str(e)) from None
    problems = validate(X)
    if problems:
        kind, colors, v = problems[0]
        what = "color" if len(colors) == 1 else "colors"
        shown = colors[0] if len(colors) == 1 else colors
        raise PmxValidationError(f"{what} {shown}: {kind} condition fails at vertex {v}")
    return X


def from_document(doc):
    """Build the domain object described by a parsed JSON document."""
    if not isinstance(doc, dict):
        raise PmxFormatError("top level must be an object")
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise PmxFormatError(f"field 'format_version': unsupported version {version!r}")
    kind = doc.get("kind", "premaniplex")
    if kind not in KINDS:
        raise PmxFormatError(f"field 'kind': unknown kind {kind!r}")
    X = _premaniplex_from(doc)
    if kind == "premaniplex":
        return X
    volt = _field(doc, "voltages", list)
    if len(volt) != X.rank or any(not isinstance(r, list) or len(r) != X.vertex_count for r in volt):
        raise PmxFormatError(f"field 'voltages': expected shape {X.rank} x {X.vertex_count}")
    for row in volt:
        _int_matrix(row, "voltages")
    if kind == "operator":
        in_rank = _field(doc, "in_rank", int)
        try:
            op = VoltageOperator(X, volt, in_rank)
        except (ValueError, InvalidOperator) as e:
            raise PmxValidationError(f"field 'voltages': {e}") from None
        problems = validate_operator(op)
        if problems:
            kind_, colors, y = problems[0]
            raise PmxValidationError(f"operator colors {colors}: {kind_} condition fails at vertex {y}")
        return op
    try:
        xp = FinVoltagePremaniplex(X, volt, doc.get("group"))
    except ValueError as e:
        raise PmxValidationError(f"field 'voltages': {e}") from None
    problems = validate_fin(xp)
    if problems:
        kind_, colors, x = problems[0]
        raise PmxValidationError(f"voltage colors {colors}: {kind_} condition fails at vertex {x}")
    return xp


def parse_pmx(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise PmxFormatError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    return from_document(doc)


def to_document(obj):
    if isinstance(obj, Premaniplex):
        X, kind = obj, "premaniplex"
    elif isinstance(obj, VoltageOperator):
        X, kind = obj.Y, "operator"
    elif isinstance(obj, FinVoltagePremaniplex):
        X, kind = obj.X, "voltage_premaniplex"
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    doc = {"format_version": FORMAT_VERSION, "kind": kind, "rank": X.rank}
    if kind == "operator":
        doc["in_rank"] = obj.in_rank
    doc["vertex_count"] = X.vertex_count
    doc["adjacency"] = X.adj.tolist()
    if kind == "operator":
        doc["voltages"] = [[w.to_list() for w in row] for row in obj.volt]
    elif kind == "voltage_premaniplex":
        doc["voltages"] = obj.volt.tolist()
        if obj.group is not None:
            doc["group"] = [list(g) for g in obj.group]
    if X.labels is not None:
        doc["labels"] = list(X.labels)
    return doc


def write_pmx(obj):
    """Serialize with one array row per line, so golden files diff nicely."""
    doc = to_document(obj)
    lines = ["{"]
    items = list(doc.items())
    for k, (key, val) in enumerate(items):
        comma = "," if k < len(items) - 1 else ""
        if isinstance(val, list) and val and isinstance(val[0], list):
            rows = [json.dumps(r, separators=(",", ":")) for r in val]
            body = ",\n    ".join(rows)
            lines.append(f'  "{key}": [\n    {body}\n  ]{comma}')
        else:
            lines.append(f'  "{key}": {json.dumps(val, separators=(",", ":"))}{comma}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def load(path):
    with open(path, encoding="utf-8") as fh:
        return parse_pmx(fh.read())


def atomic_write(path, text):
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".pmx-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save(obj, path):
    atomic_write(path, write_pmx(obj))


# ---------------------------------------------------------------------------
# DOT
# ---------------------------------------------------------------------------

PALETTE = ("red", "green", "blue", "orange", "purple", "brown", "magenta", "cyan", "gray", "black")


def color_name(i):
    return PALETTE[i % len(PALETTE)]


def export_dot(obj, name="pmx"):
    """Graphviz text: links as edges, semiedges as stubs to point nodes."""
    if isinstance(obj, VoltageOperator):
        X = obj.Y
        label = lambda i, v: repr(obj.volt[i][v])  # noqa: E731
    elif isinstance(obj, FinVoltagePremaniplex):
        X = obj.X
        label = lambda i, v: "(" + " ".join(map(str, obj.volt[i][v])) + ")"  # noqa: E731
    else:
        X = obj
        label = None
    out = [f"graph {name} {{", "  node [shape=circle];"]
    for v in range(X.vertex_count):
        text = X.labels[v] if X.labels is not None else str(v)
        out.append(f'  v{v} [label="{text}"];')
    for i in range(X.rank):
        for v in range(X.vertex_count):
            u = int(X.adj[i, v])
            attrs = [f"color={color_name(i)}"]
            if label is not None:
                attrs.append(f'label="{label(i, v)}"')
            if u == v:
                out.append(f"  s{i}_{v} [shape=point];")
                out.append(f"  v{v} -- s{i}_{v} [{', '.join(attrs + ['style=dashed'])}];")
            elif v < u:
                if label is not None and label(i, u) != label(i, v):
                    attrs.append('dir=forward')
                out.append(f"  v{v} -- v{u} [{', '.join(attrs)}];")
    out.append("}")
    return "\n".join(out) + "\n"
