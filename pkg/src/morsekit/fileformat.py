"""The repo-wide complex text format.

One maximal simplex per line, vertex ids separated by single spaces, `#`
starts a comment line, blank lines ignored.  An optional exclusion section
is introduced by a literal `%omega` line; each following line names one
simplex that must already belong to the complex.  Emission is canonical and
byte-exact: maximal simplices sorted lexicographically.
"""

from __future__ import annotations

import hashlib

from .complexes import Simplex, SimplicialComplex, from_maximal, make_simplex
from .errors import DomainError, MalformedInputError, ParseError

OMEGA_MARKER = "%omega"


def _parse_line(line: str, lineno: int) -> Simplex:
    tokens = line.split()
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise ParseError(f"non-integer vertex token {tok!r}", lineno) from None
    try:
        return make_simplex(values)
    except MalformedInputError as exc:
        raise ParseError(str(exc), lineno) from None


def parse_complex(text: str) -> tuple[SimplicialComplex, frozenset[Simplex]]:
    """Parse a complex document into (complex, omega).

    The complex is the downward closure of the listed simplices; omega
    members are validated against the complex.
    """
    maximal: list[Simplex] = []
    omega: set[Simplex] = set()
    in_omega = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == OMEGA_MARKER:
            if in_omega:
                raise ParseError("duplicate %omega marker", lineno)
            in_omega = True
            continue
        simplex = _parse_line(line, lineno)
        (omega.add(simplex) if in_omega else maximal.append(simplex))
    K = from_maximal(maximal)
    missing = sorted(s for s in omega if s not in K.simplices)
    if missing:
        raise DomainError(f"omega simplices absent from complex: {missing}")
    return K, frozenset(omega)


def parse_omega(text: str, K: SimplicialComplex) -> frozenset[Simplex]:
    """Parse a bare exclusion-set file (one simplex per line) against K."""
    omega: set[Simplex] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line == OMEGA_MARKER:
            continue
        omega.add(_parse_line(line, lineno))
    missing = sorted(s for s in omega if s not in K.simplices)
    if missing:
        raise DomainError(f"omega simplices absent from complex: {missing}")
    return frozenset(omega)


def emit_complex(K: SimplicialComplex, omega: frozenset[Simplex] = frozenset()) -> str:
    """Canonical text emission; parse(emit(K)) reproduces K exactly."""
    lines = [" ".join(map(str, s)) for s in K.maximal_simplices()]
    if omega:
        lines.append(OMEGA_MARKER)
        lines.extend(" ".join(map(str, s)) for s in sorted(omega))
    return "\n".join(lines) + ("\n" if lines else "")


def input_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
