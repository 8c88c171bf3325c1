"""
Attribute Schema

Named attributes with a role (invariant, varying or class) and an ordered
categorical domain. The schema file lists one attribute per line:

    # comment
    age:invariant
    drug:varying
    outcome:class:sick,healthy

An optional third field pre-declares domain values (comma separated) so that
value-ids do not depend on the order rows appear in the CSV. A name or value
holding ':', ',', '#' or surrounding spaces is written in double quotes:

    time:varying:"10:30","11:00"
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from enum import Enum
from typing import Dict, Iterable, List, Sequence, TextIO, Tuple

from scrminer.errors import SchemaError

logger = logging.getLogger(__name__)


class AttributeRole(str, Enum):
    INVARIANT = "invariant"
    VARYING = "varying"
    CLASS = "class"


@dataclass(frozen=True)
class Attribute:
    name: str
    role: AttributeRole
    domain: Tuple[str, ...] = ()


@dataclass(frozen=True)
class AttributeSchema:
    attributes: Tuple[Attribute, ...]

    @property
    def names(self) -> List[str]:
        return [a.name for a in self.attributes]

    @property
    def class_index(self) -> int:
        for i, a in enumerate(self.attributes):
            if a.role is AttributeRole.CLASS:
                return i
        raise SchemaError("no class attribute")

    @property
    def feature_indices(self) -> List[int]:
        """Indices of all non-class attributes, in schema order."""
        return [i for i, a in enumerate(self.attributes) if a.role is not AttributeRole.CLASS]

    def __len__(self) -> int:
        return len(self.attributes)

    def index_of(self, name: str) -> int:
        for i, a in enumerate(self.attributes):
            if a.name == name:
                return i
        raise SchemaError(f"unknown attribute {name!r}")

    def role(self, index: int) -> AttributeRole:
        return self.attributes[index].role

    def is_varying(self, index: int) -> bool:
        return self.attributes[index].role is AttributeRole.VARYING

    def is_invariant(self, index: int) -> bool:
        return self.attributes[index].role is AttributeRole.INVARIANT

    def value_id(self, index: int, value: str) -> int:
        try:
            return self.attributes[index].domain.index(value)
        except ValueError:
            raise SchemaError(f"value {value!r} not in domain of {self.attributes[index].name!r}") from None

    def with_domains(self, domains: Sequence[Sequence[str]]) -> "AttributeSchema":
        return AttributeSchema(
            tuple(replace(a, domain=tuple(d)) for a, d in zip(self.attributes, domains))
        )

    def class_label(self, k: int) -> str:
        return self.attributes[self.class_index].domain[k]

    def label_item(self, item: Tuple[int, int], style: str = "keyed") -> str:
        attr = self.attributes[item[0]]
        value = attr.domain[item[1]]
        if style == "compact":
            # class values are shown bare, the way rule consequents are
            if attr.role is AttributeRole.CLASS:
                return value
            return f"{attr.name}{value}"
        return f"{attr.name}={value}"

    def label_items(self, items: Iterable[Tuple[int, int]], style: str = "keyed") -> str:
        sep = "" if style == "compact" else ", "
        return sep.join(self.label_item(it, style) for it in items)


def _split_fields(lineno: int, line: str) -> List[List[str]]:
    """
    Split a schema line into ':' separated fields of ',' separated tokens.

    Double quotes protect ':', ',' and '#' inside a token ("" is a literal
    quote). Unquoted tokens are stripped; '#' outside quotes starts a comment.
    """
    fields: List[List[str]] = [[]]
    buf: List[str] = []
    quoted = in_quote = False
    i = 0

    def finish() -> None:
        nonlocal buf, quoted
        text = "".join(buf)
        fields[-1].append(text if quoted else text.strip())
        buf, quoted = [], False

    while i < len(line):
        ch = line[i]
        if in_quote:
            if ch == '"' and line[i + 1:i + 2] == '"':
                buf.append('"')
                i += 1
            elif ch == '"':
                in_quote = False
            else:
                buf.append(ch)
        elif ch == "#":
            break
        elif ch in ":,":
            finish()
            if ch == ":":
                fields.append([])
        elif ch == '"':
            if quoted or "".join(buf).strip():
                raise SchemaError(f"line {lineno}: stray quote in {line!r}")
            buf, quoted, in_quote = [], True, True
        elif quoted:
            if not ch.isspace():
                raise SchemaError(f"line {lineno}: text after closing quote in {line!r}")
        else:
            buf.append(ch)
        i += 1
    if in_quote:
        raise SchemaError(f"line {lineno}: unterminated quote in {line!r}")
    finish()
    return fields


def _quote(token: str) -> str:
    if token and token == token.strip() and not any(c in token for c in ':,#"'):
        return token
    return '"' + token.replace('"', '""') + '"'


def _parse_line(lineno: int, line: str) -> Attribute:
    parts = _split_fields(lineno, line)
    if len(parts) not in (2, 3) or len(parts[0]) != 1 or len(parts[1]) != 1 or not parts[0][0]:
        raise SchemaError(f"line {lineno}: expected 'name:role[:v1,v2,...]', got {line!r}")
    name, role_tok = parts[0][0], parts[1][0].lower()
    try:
        role = AttributeRole(role_tok)
    except ValueError:
        raise SchemaError(f"line {lineno}: unknown role {parts[1][0]!r} for attribute {name!r}") from None
    domain: Tuple[str, ...] = ()
    if len(parts) == 3 and parts[2] != [""]:
        domain = tuple(parts[2])
        if any(not v for v in domain) or len(set(domain)) != len(domain):
            raise SchemaError(f"line {lineno}: domain of {name!r} has empty or duplicate values")
    return Attribute(name=name, role=role, domain=domain)


def load_schema(schema_text: str) -> AttributeSchema:
    attrs: List[Attribute] = []
    seen: Dict[str, int] = {}
    for lineno, raw in enumerate(schema_text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        attr = _parse_line(lineno, line)
        if attr.name in seen:
            raise SchemaError(f"line {lineno}: duplicate attribute {attr.name!r} (first on line {seen[attr.name]})")
        seen[attr.name] = lineno
        attrs.append(attr)

    classes = [a for a in attrs if a.role is AttributeRole.CLASS]
    if not classes:
        raise SchemaError("no class attribute")
    if len(classes) > 1:
        raise SchemaError(f"multiple class attributes: {[a.name for a in classes]}")
    if len(classes[0].domain) > 2:
        raise SchemaError(
            f"class attribute {classes[0].name!r} declares {len(classes[0].domain)} values; "
            "only two classes are supported, binarize the class column first"
        )
    if not any(a.role is AttributeRole.VARYING for a in attrs):
        logger.warning("schema has no varying attribute; no SCR-pattern can exist")

    return AttributeSchema(tuple(attrs))


def load_schema_file(path: str) -> AttributeSchema:
    with open(path, "r", encoding="utf-8") as f:
        return load_schema(f.read())


def write_schema(schema: AttributeSchema, stream: TextIO) -> None:
    for a in schema.attributes:
        line = f"{_quote(a.name)}:{a.role.value}"
        if a.domain:
            line += ":" + ",".join(_quote(v) for v in a.domain)
        stream.write(line + "\n")


def schema_summary(schema: AttributeSchema) -> Dict[str, int]:
    counts = {r.value: 0 for r in AttributeRole}
    for a in schema.attributes:
        counts[a.role.value] += 1
    return counts

