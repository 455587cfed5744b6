"""JSON field documents.

A document is a JSON object of named entries::

    {
      "sigma": {
        "rank": "tensor",
        "components": [[[{"coeff": "-1", "exps": [0, 0, 1]}], ...], ...]
      }
    }

``components`` is a monomial list for a scalar, three lists for a vector and
a 3x3 nesting for a tensor.  Coefficients are rational strings; JSON integers
are accepted too, floats are not.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from .poly import Poly

__all__ = [
    "FieldDocument",
    "FieldDocumentError",
    "parse_field_document",
    "serialize_field_document",
    "load_field_document",
]

RANKS = {"scalar": (), "vector": (3,), "tensor": (3, 3)}


class FieldDocumentError(ValueError):
    def __init__(self, message: str, path: str = "$", line: int | None = None):
        self.message = message
        self.path = path
        self.line = line
        where = f"{message} at {path}"
        if line is not None:
            where += f" (line {line})"
        super().__init__(where)


class _Located:
    """A decoded JSON value together with the offset where it starts."""

    __slots__ = ("value", "pos")

    def __init__(self, value, pos):
        self.value = value
        self.pos = pos


_WS = " \t\n\r"


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.decoder = json.JSONDecoder()

    def line(self, pos: int) -> int:
        return self.text.count("\n", 0, pos) + 1

    def skip(self, i: int) -> int:
        while i < len(self.text) and self.text[i] in _WS:
            i += 1
        return i

    def fail(self, msg: str, pos: int):
        raise FieldDocumentError(msg, "$", self.line(pos))

    def value(self, i: int) -> tuple[_Located, int]:
        i = self.skip(i)
        if i >= len(self.text):
            self.fail("unexpected end of document", i)
        ch = self.text[i]
        if ch == "{":
            return self.obj(i)
        if ch == "[":
            return self.arr(i)
        try:
            v, end = self.decoder.raw_decode(self.text, i)
        except json.JSONDecodeError as exc:
            raise FieldDocumentError(f"invalid JSON: {exc.msg}", "$", exc.lineno) from None
        return _Located(v, i), end

    def obj(self, start: int) -> tuple[_Located, int]:
        out: dict[str, _Located] = {}
        i = self.skip(start + 1)
        if self.text.startswith("}", i):
            return _Located(out, start), i + 1
        while True:
            i = self.skip(i)
            if not self.text.startswith('"', i):
                self.fail("invalid JSON: expected a string key", i)
            key, i = json.decoder.scanstring(self.text, i + 1)
            i = self.skip(i)
            if not self.text.startswith(":", i):
                self.fail("invalid JSON: expected ':'", i)
            if key in out:
                self.fail(f"duplicate key {key!r}", i)
            out[key], i = self.value(i + 1)
            i = self.skip(i)
            if self.text.startswith(",", i):
                i += 1
                continue
            if self.text.startswith("}", i):
                return _Located(out, start), i + 1
            self.fail("invalid JSON: expected ',' or '}'", i)

    def arr(self, start: int) -> tuple[_Located, int]:
        out: list[_Located] = []
        i = self.skip(start + 1)
        if self.text.startswith("]", i):
            return _Located(out, start), i + 1
        while True:
            item, i = self.value(i)
            out.append(item)
            i = self.skip(i)
            if self.text.startswith(",", i):
                i += 1
                continue
            if self.text.startswith("]", i):
                return _Located(out, start), i + 1
            self.fail("invalid JSON: expected ',' or ']'", i)

    def document(self) -> _Located:
        node, end = self.value(0)
        end = self.skip(end)
        if end != len(self.text):
            self.fail("invalid JSON: trailing data", end)
        return node


@dataclass(frozen=True)
class FieldEntry:
    rank: str
    value: Any  # Poly for scalars, object ndarray otherwise


class FieldDocument:
    def __init__(self, entries: dict[str, FieldEntry] | None = None):
        self.entries: dict[str, FieldEntry] = dict(entries or {})

    def __contains__(self, name: str) -> bool:
        return name in self.entries

    def __getitem__(self, name: str):
        return self.entries[name].value

    def __len__(self) -> int:
        return len(self.entries)

    def names(self) -> list[str]:
        return sorted(self.entries)

    def add(self, name: str, value) -> None:
        if isinstance(value, Poly):
            rank = "scalar"
        else:
            shape = np.shape(value)
            rank = {(3,): "vector", (3, 3): "tensor"}.get(shape)
            if rank is None:
                raise ValueError(f"unsupported field shape {shape}")
        self.entries[name] = FieldEntry(rank, value)


def _rational(node: _Located, path: str, r: _Reader) -> Fraction:
    v = node.value
    line = r.line(node.pos)
    if isinstance(v, bool) or not isinstance(v, (str, int)):
        raise FieldDocumentError("coefficient must be a rational string", path, line)
    if isinstance(v, int):
        return Fraction(v)
    text = v.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise FieldDocumentError(f"malformed rational {v!r}", path, line) from None
    if d == 0:
        raise FieldDocumentError("zero denominator", path, line)
    return Fraction(n, d)


def _monomials(node: _Located, path: str, r: _Reader) -> Poly:
    if not isinstance(node.value, list):
        raise FieldDocumentError("expected a list of monomials", path, r.line(node.pos))
    terms: dict[tuple[int, int, int], Fraction] = {}
    for n, mono in enumerate(node.value):
        mpath = f"{path}[{n}]"
        if not isinstance(mono.value, dict):
            raise FieldDocumentError("monomial must be an object", mpath, r.line(mono.pos))
        extra = set(mono.value) - {"coeff", "exps"}
        if extra:
            raise FieldDocumentError(f"unknown key {sorted(extra)[0]!r}", mpath, r.line(mono.pos))
        if "coeff" not in mono.value or "exps" not in mono.value:
            raise FieldDocumentError("monomial needs 'coeff' and 'exps'", mpath, r.line(mono.pos))
        coeff = _rational(mono.value["coeff"], mpath + ".coeff", r)
        ex = mono.value["exps"]
        epath = mpath + ".exps"
        if not isinstance(ex.value, list) or len(ex.value) != 3:
            raise FieldDocumentError("exponents must be a list of three integers", epath, r.line(ex.pos))
        exps = []
        for e in ex.value:
            if isinstance(e.value, bool) or not isinstance(e.value, int):
                raise FieldDocumentError("exponent must be an integer", epath, r.line(e.pos))
            if e.value < 0:
                raise FieldDocumentError("negative exponent", epath, r.line(e.pos))
            exps.append(e.value)
        key = tuple(exps)
        terms[key] = terms.get(key, Fraction(0)) + coeff  # type: ignore[index]
    return Poly(terms)


def _components(node: _Located, shape: tuple[int, ...], path: str, r: _Reader):
    if not shape:
        return _monomials(node, path, r)
    if not isinstance(node.value, list) or len(node.value) != shape[0]:
        raise FieldDocumentError(f"expected {shape[0]} components", path, r.line(node.pos))
    parts = [_components(c, shape[1:], f"{path}[{n}]", r) for n, c in enumerate(node.value)]
    out = np.empty(shape, dtype=object)
    for n, p in enumerate(parts):
        out[n] = p
    return out


def parse_field_document(text: str) -> FieldDocument:
    """Parse and canonicalise a field document; errors carry path and line."""
    r = _Reader(text)
    root = r.document()
    if not isinstance(root.value, dict):
        raise FieldDocumentError("document must be a JSON object", "$", r.line(root.pos))
    doc = FieldDocument()
    for name, entry in root.value.items():
        path = f"$.{name}"
        if not isinstance(entry.value, dict):
            raise FieldDocumentError("entry must be an object", path, r.line(entry.pos))
        extra = set(entry.value) - {"rank", "components"}
        if extra:
            raise FieldDocumentError(f"unknown key {sorted(extra)[0]!r}", path, r.line(entry.pos))
        if "rank" not in entry.value or "components" not in entry.value:
            raise FieldDocumentError("entry needs 'rank' and 'components'", path, r.line(entry.pos))
        rank = entry.value["rank"]
        if rank.value not in RANKS:
            raise FieldDocumentError(
                "rank must be scalar, vector or tensor", path + ".rank", r.line(rank.pos)
            )
        value = _components(entry.value["components"], RANKS[rank.value], path + ".components", r)
        doc.entries[name] = FieldEntry(rank.value, value)
    return doc


def _encode(value, shape):
    if not shape:
        return [
            {"coeff": str(c), "exps": list(e)}
            for e, c in sorted(value.terms.items(), key=lambda t: (sum(t[0]), t[0]))
        ]
    return [_encode(value[n], shape[1:]) for n in range(shape[0])]


def serialize_field_document(doc: FieldDocument) -> str:
    """Canonical text: sorted names, graded monomial order, reduced rationals."""
    out = {}
    for name in doc.names():
        e = doc.entries[name]
        out[name] = {"rank": e.rank, "components": _encode(e.value, RANKS[e.rank])}
    return json.dumps(out, sort_keys=True, indent=2) + "\n"


def load_field_document(path) -> FieldDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_field_document(fh.read())
