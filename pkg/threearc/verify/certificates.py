"""
Certificate files for threearc

A certificate is a header line "cycle N" or "path N" followed by N lines
"tail>head". The header-less form printed by the hamcycle and hampath
commands is read too: a cycle is recognised by its closing repeat of
the first arc.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from threearc.core.errors import GraphFormatError
from threearc.core.graph import Arc, SimpleGraph
from threearc.core.io import read_text_file
from threearc.verify.validators import ValidationError, validate_cycle, validate_path

CYCLE = "cycle"
PATH = "path"


@dataclass(frozen=True)
class Certificate:
    kind: str
    arcs: Tuple[Arc, ...]


def write_certificate(kind: str, arcs: Sequence[Arc]) -> str:
    if kind not in (CYCLE, PATH):
        raise ValueError(f"unknown certificate kind {kind!r}")
    lines = [f"{kind} {len(arcs)}"] + [str(Arc(*a)) for a in arcs]
    return "\n".join(lines) + "\n"


def _parse_arc(line: str, number: int) -> Arc:
    parts = line.split(">")
    if len(parts) != 2:
        raise GraphFormatError(f"expected 'tail>head', got {line!r}", number)
    try:
        return Arc(int(parts[0]), int(parts[1]))
    except ValueError:
        raise GraphFormatError(f"expected 'tail>head', got {line!r}", number) from None


def read_certificate(text: str) -> Certificate:
    """
    Parse certificate text.

    Raises:
        GraphFormatError: Malformed lines, unknown kind or wrong arc count
    """
    lines: List[Tuple[int, str]] = [
        (number, raw.strip())
        for number, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.strip().startswith("#")
    ]
    if not lines:
        raise GraphFormatError("empty certificate")

    kind: Optional[str] = None
    expected: Optional[int] = None
    number, first = lines[0]
    if ">" not in first:
        parts = first.split()
        if len(parts) != 2 or parts[0] not in (CYCLE, PATH) or not parts[1].isdigit():
            raise GraphFormatError(f"expected header 'cycle N' or 'path N', got {first!r}", number)
        kind, expected = parts[0], int(parts[1])
        lines = lines[1:]

    arcs = [_parse_arc(line, n) for n, line in lines]
    closing_repeat = len(arcs) > 1 and arcs[-1] == arcs[0]

    if kind is None:
        kind = CYCLE if closing_repeat else PATH
    if kind == CYCLE and closing_repeat and (expected is None or len(arcs) == expected + 1):
        arcs = arcs[:-1]
    if expected is not None and len(arcs) != expected:
        where = lines[-1][0] if lines else number
        raise GraphFormatError(f"header announces {expected} arcs, found {len(arcs)}", where)
    return Certificate(kind, tuple(arcs))


def read_certificate_file(path: str) -> Certificate:
    """
    Read and parse a certificate file.

    Raises:
        OSError: If the file cannot be read
        GraphFormatError: Undecodable bytes or malformed contents
    """
    return read_certificate(read_text_file(path))


def verify_certificate(graph: SimpleGraph, certificate: Certificate) -> Optional[ValidationError]:
    """Validate a certificate against G; a path is checked between its own end arcs"""
    if certificate.kind == CYCLE:
        return validate_cycle(graph, certificate.arcs)
    if not certificate.arcs:
        return validate_path(graph, certificate.arcs, (Arc(-1, -1), Arc(-1, -1)))
    return validate_path(graph, certificate.arcs, (certificate.arcs[0], certificate.arcs[-1]))
