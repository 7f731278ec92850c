"""Incidence structure of a delay DAE and its JSON interchange format.

A system of n equations over n_variables variables is described purely by
which variable occurrences appear in which equation.  An occurrence is a
triple (var_index, shift, deriv): variable k, shifted by `shift` multiples
of the single delay (shift >= -1, where -1 is the delayed state), and
differentiated `deriv` times.  Right-hand sides, initial data and the delay
value itself are deliberately not modelled.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import (
    DuplicateOccurrence,
    IndexOutOfRange,
    MalformedDocument,
    SchemaViolation,
)


@dataclass(frozen=True, order=True)
class VarOccurrence:
    """One concrete variable occurrence: variable k, shift p, derivative order q."""

    var_index: int
    shift: int
    deriv: int


@dataclass(frozen=True)
class EquationStruct:
    """Incidence row of a single equation.

    `occurrences` is kept as a tuple so that an invalid structure holding
    duplicate triples is representable and can be reported by `validate`.
    """

    eq_index: int
    occurrences: tuple[VarOccurrence, ...]
    label: str = ""

    def __post_init__(self):
        if not self.label:
            object.__setattr__(self, "label", f"F{self.eq_index}")

    @property
    def occurrence_set(self) -> frozenset[VarOccurrence]:
        return frozenset(self.occurrences)


@dataclass(frozen=True)
class DdaeStructure:
    """Full incidence structure: equations indexed 1..n_equations."""

    n_equations: int
    n_variables: int
    equations: tuple[EquationStruct, ...] = field(default_factory=tuple)

    def equation(self, i: int) -> EquationStruct:
        for eq in self.equations:
            if eq.eq_index == i:
                return eq
        raise IndexOutOfRange(f"no equation with index {i}")


# --- interchange format -------------------------------------------------

_TOP_KEYS = {"n_equations", "n_variables", "equations"}
_EQ_KEYS = {"index", "label", "occurrences"}
_OCC_KEYS = {"var", "shift", "deriv"}


def _require_int(value, what: str) -> int:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaViolation(f"{what} must be an integer, got {value!r}")
    return value


def parse_ddae(document: str) -> DdaeStructure:
    """Parse and fully validate a DDAE interchange document.

    Raises MalformedDocument for JSON syntax errors, SchemaViolation for
    missing/unknown fields or out-of-domain values, IndexOutOfRange for
    index bound violations and DuplicateOccurrence for repeated triples.
    The returned structure always passes `validate`.
    """
    try:
        raw = json.loads(document)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"not valid JSON: {exc}") from exc

    if not isinstance(raw, dict):
        raise SchemaViolation("top-level value must be an object")
    unknown = set(raw) - _TOP_KEYS
    if unknown:
        raise SchemaViolation(f"unknown top-level fields: {sorted(unknown)}")
    missing = _TOP_KEYS - set(raw)
    if missing:
        raise SchemaViolation(f"missing top-level fields: {sorted(missing)}")

    n_eq = _require_int(raw["n_equations"], "n_equations")
    n_var = _require_int(raw["n_variables"], "n_variables")
    if n_eq < 1:
        raise SchemaViolation(f"n_equations must be >= 1, got {n_eq}")
    if n_var < 1:
        raise SchemaViolation(f"n_variables must be >= 1, got {n_var}")
    if not isinstance(raw["equations"], list):
        raise SchemaViolation("equations must be an array")

    equations = []
    seen_indices = set()
    for entry in raw["equations"]:
        if not isinstance(entry, dict):
            raise SchemaViolation("each equation must be an object")
        unknown = set(entry) - _EQ_KEYS
        if unknown:
            raise SchemaViolation(f"unknown equation fields: {sorted(unknown)}")
        if "index" not in entry or "occurrences" not in entry:
            raise SchemaViolation("equation needs 'index' and 'occurrences'")
        idx = _require_int(entry["index"], "equation index")
        label = entry.get("label", f"F{idx}")
        if not isinstance(label, str):
            raise SchemaViolation(f"label must be a string, got {label!r}")
        if not isinstance(entry["occurrences"], list):
            raise SchemaViolation("occurrences must be an array")
        if idx < 1 or idx > n_eq:
            raise IndexOutOfRange(f"equation index {idx} not in 1..{n_eq}")
        if idx in seen_indices:
            raise IndexOutOfRange(f"equation index {idx} listed twice")
        seen_indices.add(idx)

        occs = []
        for occ in entry["occurrences"]:
            if not isinstance(occ, dict):
                raise SchemaViolation("each occurrence must be an object")
            if set(occ) != _OCC_KEYS:
                raise SchemaViolation(
                    f"occurrence must have exactly fields var/shift/deriv, got {sorted(occ)}"
                )
            var = _require_int(occ["var"], "var")
            shift = _require_int(occ["shift"], "shift")
            deriv = _require_int(occ["deriv"], "deriv")
            if var < 1 or var > n_var:
                raise IndexOutOfRange(f"var {var} not in 1..{n_var} (equation {idx})")
            if shift < -1:
                raise SchemaViolation(f"shift must be >= -1, got {shift} (equation {idx})")
            if deriv < 0:
                raise SchemaViolation(f"deriv must be >= 0, got {deriv} (equation {idx})")
            triple = VarOccurrence(var, shift, deriv)
            if triple in occs:
                raise DuplicateOccurrence(
                    f"occurrence (var={var}, shift={shift}, deriv={deriv}) "
                    f"listed twice in equation {idx}"
                )
            occs.append(triple)
        equations.append(EquationStruct(idx, tuple(sorted(occs)), label))

    if seen_indices != set(range(1, n_eq + 1)):
        missing = sorted(set(range(1, n_eq + 1)) - seen_indices)
        raise IndexOutOfRange(f"equation indices missing: {missing}")

    equations.sort(key=lambda eq: eq.eq_index)
    return DdaeStructure(n_eq, n_var, tuple(equations))


def validate(s: DdaeStructure) -> list[str]:
    """Check all structural invariants; return one message per violation.

    Total function: never raises, an empty list means the structure is valid.
    """
    problems: list[str] = []
    if s.n_equations < 1:
        problems.append(f"n_equations must be >= 1, got {s.n_equations}")
    if s.n_variables < 1:
        problems.append(f"n_variables must be >= 1, got {s.n_variables}")
    indices = [eq.eq_index for eq in s.equations]
    if sorted(indices) != list(range(1, s.n_equations + 1)):
        problems.append(
            f"equation indices {sorted(indices)} are not exactly 1..{s.n_equations}"
        )
    for eq in s.equations:
        seen: set[VarOccurrence] = set()
        for occ in eq.occurrences:
            if occ in seen:
                problems.append(
                    f"equation {eq.eq_index}: duplicate occurrence "
                    f"({occ.var_index}, {occ.shift}, {occ.deriv})"
                )
            seen.add(occ)
            if occ.var_index < 1 or occ.var_index > s.n_variables:
                problems.append(
                    f"equation {eq.eq_index}: var {occ.var_index} "
                    f"not in 1..{s.n_variables}"
                )
            if occ.shift < -1:
                problems.append(
                    f"equation {eq.eq_index}: shift {occ.shift} below -1"
                )
            if occ.deriv < 0:
                problems.append(
                    f"equation {eq.eq_index}: deriv {occ.deriv} negative"
                )
    return problems


def serialize_ddae(s: DdaeStructure) -> str:
    """Serialize to the interchange format with canonical field ordering."""
    doc = {
        "n_equations": s.n_equations,
        "n_variables": s.n_variables,
        "equations": [
            {
                "index": eq.eq_index,
                "label": eq.label,
                "occurrences": [
                    {"var": o.var_index, "shift": o.shift, "deriv": o.deriv}
                    for o in sorted(eq.occurrences)
                ],
            }
            for eq in sorted(s.equations, key=lambda e: e.eq_index)
        ],
    }
    return json.dumps(doc, indent=2)
