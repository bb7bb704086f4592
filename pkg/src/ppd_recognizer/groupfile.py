"""Reading and writing the ``ppdgrp`` group file format.

::

    ppdgrp 1
    <p> <a> <d> <k> <case>
    <modulus coefficients, constant first>      (only when a > 1)
    form <kind>                                 (only when case is not linear)
    <d rows of the Gram matrix>

    mat
    <d rows>
    ...                                         (k matrices, blank-line separated)

Entries are field element encodings, single spaces separate tokens and every
line ends with ``\\n``. Writing then reading gives back the same bytes.
"""
from __future__ import annotations

from pathlib import Path
from typing import Optional
import logging

from .classical_groups import Family, FormData, FormKind, GroupCase, GroupInput
from .config import LimitsConfig
from .errors import GroupFileParseError, GroupValidationError, PpdError
from .finite_field import FieldParams, field_make
from .matrices import MatrixQ, check_dimension, format_matrix_rows, matrix_from_rows

logger = logging.getLogger(__name__)

FORMAT_TAG = "ppdgrp 1"


def write_group_file(group: GroupInput) -> str:
    field = group.field
    lines = [FORMAT_TAG, f"{field.p} {field.a} {group.d} {len(group.generators)} {group.case.family.value}"]
    if field.modulus is not None:
        lines.append(" ".join(str(c) for c in field.modulus))
    if group.form.kind is not FormKind.NONE:
        lines.append(f"form {group.form.kind.value}")
        lines.extend(format_matrix_rows(group.form.gram))
    for matrix in group.generators:
        lines.append("")
        lines.append("mat")
        lines.extend(format_matrix_rows(matrix))
    return "\n".join(lines) + "\n"


class _Lines:
    def __init__(self, text: str) -> None:
        self.lines = text.split("\n")
        self.position = 0

    @property
    def number(self) -> int:
        return self.position + 1

    def next(self, what: str) -> str:
        if self.position >= len(self.lines):
            raise GroupFileParseError(f"unexpected end of file, expected {what}", self.number)
        line = self.lines[self.position]
        self.position += 1
        return line

    def ints(self, what: str, count: Optional[int] = None) -> list[int]:
        line = self.next(what)
        try:
            values = [int(token) for token in line.split(" ")]
        except ValueError:
            raise GroupFileParseError(f"expected {what}, got {line!r}", self.position) from None
        if count is not None and len(values) != count:
            raise GroupFileParseError(f"expected {count} integers for {what}, got {len(values)}", self.position)
        return values

    def matrix(self, field: FieldParams, d: int, what: str) -> MatrixQ:
        first = self.number
        rows = [self.ints(f"{what} row", d) for _ in range(d)]
        try:
            return matrix_from_rows(field, rows)
        except ValueError as exc:
            raise GroupFileParseError(f"{what}: {exc}", first) from None


def parse_group_file(text: str, limits: Optional[LimitsConfig] = None) -> GroupInput:
    """Parse and validate a group file."""
    limits = limits or LimitsConfig()
    if not text.endswith("\n"):
        raise GroupFileParseError("file must end with a newline", text.count("\n") + 1)
    lines = _Lines(text[:-1])
    if lines.next("format tag") != FORMAT_TAG:
        raise GroupFileParseError(f"expected {FORMAT_TAG!r}", 1)
    header = lines.next("header").split(" ")
    if len(header) != 5:
        raise GroupFileParseError("header must be 'p a d k case'", 2)
    try:
        p, a, d, k = (int(token) for token in header[:4])
        family = Family(header[4])
        field = field_make(p, a, limits)
        check_dimension(d, limits)
    except (ValueError, PpdError) as exc:
        raise GroupFileParseError(f"bad header: {exc}", 2) from None
    if k < 1:
        raise GroupFileParseError("a group needs at least one generator", 2)
    if a > 1:
        modulus = tuple(lines.ints("modulus", a + 1))
        if modulus != field.modulus:
            raise GroupFileParseError("modulus is not the canonical irreducible polynomial", lines.position)
    form = FormData.none()
    if family is not Family.LINEAR:
        form_line = lines.next("form line").split(" ")
        if len(form_line) != 2 or form_line[0] != "form":
            raise GroupFileParseError("expected 'form <kind>'", lines.position)
        try:
            kind = FormKind(form_line[1])
        except ValueError:
            raise GroupFileParseError(f"unknown form kind {form_line[1]!r}", lines.position) from None
        gram = lines.matrix(field, d, "Gram matrix")
        try:
            form = FormData(kind, gram, automorphism_order=2 if kind is FormKind.SESQUILINEAR else 1)
        except PpdError as exc:
            raise GroupValidationError(f"form: {exc.message}") from exc
    generators = []
    for index in range(k):
        if lines.next("blank line") != "":
            raise GroupFileParseError("matrices are separated by a blank line", lines.position)
        if lines.next("'mat'") != "mat":
            raise GroupFileParseError("expected 'mat'", lines.position)
        generators.append(lines.matrix(field, d, f"matrix {index}"))
    if lines.position != len(lines.lines):
        raise GroupFileParseError("trailing content after the last matrix", lines.number)
    try:
        case = GroupCase(family, d, field)
    except PpdError as exc:
        raise GroupFileParseError(f"bad header: {exc}", 2) from None
    group = GroupInput(case, form, tuple(generators))
    canonical = write_group_file(group)
    if canonical != text:
        mismatch = next(
            (i for i, (x, y) in enumerate(zip(canonical.split("\n"), text.split("\n")), start=1) if x != y),
            1,
        )
        raise GroupFileParseError("non-canonical whitespace or number formatting", mismatch)
    group.validate()
    return group


def load_group_file(path: Path, limits: Optional[LimitsConfig] = None) -> GroupInput:
    group = parse_group_file(path.read_text(encoding="utf-8"), limits)
    logger.info("loaded %s with %d generators from %s", group.case.label(), len(group.generators), path)
    return group


def save_group_file(path: Path, group: GroupInput) -> None:
    path.write_text(write_group_file(group), encoding="utf-8", newline="\n")
