"""Additive-basis decompositions and the induction identities between them.

The K-theory of the Lagrangian Grassmannian of frame ``n`` splits into one
copy of the base's K-theory per diagram in the frame; its Hermitian theory
splits into K-summands indexed by K-even diagrams and shifted Hermitian
summands indexed by almost even diagrams, with the exact index sets set by
the frame parity and the twist.  This module produces those decompositions
at the level of ranks, shifts and twists, attaches the intermediate scheme
descriptor to every summand, and verifies the degree-by-degree recursion
identities the decompositions satisfy.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from math import comb

from .diagrams import DOWN, ShiftedDiagram, boundary, class_sets, classify
from .errors import DomainError
from .flags import (
    FlagDescriptor,
    is_gorenstein,
    relative_dimension,
    validate,
)
from .marking import lf_a, lf_b, lf_ktheory
from .picard import Twist, TwistVariant, twist_alignment


class Theory(str, Enum):
    K = "K"
    GW = "GW"


class Kind(str, Enum):
    K = "K"
    GW = "GW"


class MapLabel(str, Enum):
    PHI = "phi"
    XI0 = "xi0"
    XI1 = "xi1"
    MU0 = "mu0"
    MU1 = "mu1"


@dataclass(frozen=True)
class Summand:
    """One basis summand: a K-atom or a shifted (possibly twisted) GW-atom."""

    kind: Kind
    source_diagram: ShiftedDiagram
    scheme: FlagDescriptor
    map_label: MapLabel
    shift: int | None = None
    base_twist: int | None = None  # flag-step index of a residual det twist

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "shift": self.shift,
            "diagram": self.source_diagram.steps,
            "scheme": self.scheme.to_json(),
            "map": self.map_label.value,
            "base_twist": self.base_twist,
        }

    @classmethod
    def from_json(cls, payload: dict) -> "Summand":
        steps = payload["diagram"]
        return cls(
            kind=Kind(payload["kind"]),
            source_diagram=ShiftedDiagram(len(steps), steps),
            scheme=FlagDescriptor.from_json(payload["scheme"]),
            map_label=MapLabel(payload["map"]),
            shift=payload.get("shift"),
            base_twist=payload.get("base_twist"),
        )


@dataclass(frozen=True)
class Decomposition:
    n: int
    twist: Twist
    theory: Theory
    summands: tuple[Summand, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "twist": self.twist.value,
            "theory": self.theory.value,
            "summands": [s.to_json() for s in self.summands],
        }

    @classmethod
    def from_json(cls, payload: dict) -> "Decomposition":
        return cls(
            n=payload["n"],
            twist=Twist(payload["twist"]),
            theory=Theory(payload["theory"]),
            summands=tuple(Summand.from_json(s) for s in payload["summands"]),
        )


def k_basis(n: int) -> Decomposition:
    """One K-atom per diagram in the frame, via the unpadded scheme."""
    if n < 0:
        raise DomainError(f"frame size must be non-negative, got {n}")
    if n == 0:
        # Base of the recursion: the Grassmannian of the empty frame is the
        # base itself, carried by the k = 0 descriptor at half rank 0.
        scheme = FlagDescriptor(0, (0,), (), ())
        summand = Summand(Kind.K, ShiftedDiagram(0, ""), scheme, MapLabel.PHI)
        return Decomposition(0, Twist.TRIVIAL, Theory.K, (summand,))
    sets = class_sets(n)
    summands = tuple(
        Summand(Kind.K, diag, lf_ktheory(diag), MapLabel.PHI)
        for diag in sets.all_diagrams
    )
    return Decomposition(n, Twist.TRIVIAL, Theory.K, summands)


def _mu_scheme(diag: ShiftedDiagram, n: int) -> FlagDescriptor:
    """Scheme of a K-even summand; cut at the diagram's index."""
    w = classify(diag).index_w
    if n % 2 == 0 and diag.steps[0] != DOWN:
        return lf_b(diag, w)
    return lf_a(diag, w)


def gw_basis(n: int, twist: Twist) -> Decomposition:
    """Hermitian decomposition of frame ``n`` with the given twist.

    Frame 1 falls through the odd-frame branch and serves as the definitional
    base of the recursion identities.
    """
    if n < 1:
        raise DomainError(f"the Hermitian decomposition needs frame size >= 1, got {n}")
    sets = class_sets(n)
    almost = set(sets.almost_even)
    k_even = set(sets.k_even)
    even_frame = n % 2 == 0

    summands: list[Summand] = []
    for diag in sets.all_diagrams:
        full_top = diag.steps[0] == DOWN
        l = boundary(diag).segment_count
        if even_frame and twist is Twist.DELTA:
            if diag in almost and full_top:
                summands.append(
                    Summand(Kind.GW, diag, lf_a(diag, l), MapLabel.XI1, shift=diag.weight)
                )
            elif diag in k_even:
                summands.append(Summand(Kind.K, diag, _mu_scheme(diag, n), MapLabel.MU1))
        elif even_frame:
            if diag in almost and not full_top:
                summands.append(
                    Summand(
                        Kind.GW,
                        diag,
                        lf_b(diag, l),
                        MapLabel.XI0,
                        shift=diag.weight,
                        base_twist=1,
                    )
                )
            elif diag in k_even:
                summands.append(Summand(Kind.K, diag, _mu_scheme(diag, n), MapLabel.MU0))
        elif twist is Twist.TRIVIAL:
            if diag in almost:
                summands.append(
                    Summand(Kind.GW, diag, lf_a(diag, l), MapLabel.XI0, shift=diag.weight)
                )
            elif diag in k_even:
                summands.append(Summand(Kind.K, diag, _mu_scheme(diag, n), MapLabel.MU0))
        else:
            if diag in k_even:
                summands.append(Summand(Kind.K, diag, _mu_scheme(diag, n), MapLabel.MU1))

    return Decomposition(n, twist, Theory.GW, tuple(summands))


Atom = tuple[str, int | None]  # ("K", None) or ("GW", shift)


def atom_multiset(decomp: Decomposition) -> Counter:
    """Forget schemes and twists: count summands by (kind, shift)."""
    return Counter(
        (s.kind.value, s.shift if s.kind is Kind.GW else None) for s in decomp.summands
    )


def _shifted(atoms: Counter, by: int) -> Counter:
    """Raise every GW shift; K-atoms are shift-free."""
    out: Counter = Counter()
    for (kind, shift), count in atoms.items():
        out[(kind, shift + by if kind == "GW" else None)] += count
    return out


def _atom_key(atom: Atom) -> tuple[str, int]:
    kind, shift = atom
    return (kind, -1 if shift is None else shift)


def _first_mismatch(lhs: Counter, rhs: Counter) -> Atom | None:
    for atom in sorted(set(lhs) | set(rhs), key=_atom_key):
        if lhs[atom] != rhs[atom]:
            return atom
    return None


@dataclass(frozen=True)
class CaseResult:
    label: str
    description: str
    passed: bool
    lhs: tuple[tuple[Atom, int], ...]
    rhs: tuple[tuple[Atom, int], ...]
    first_mismatch: Atom | None

    def to_json(self) -> dict:
        return {
            "case": self.label,
            "description": self.description,
            "passed": self.passed,
            "lhs": [[list(atom), count] for atom, count in self.lhs],
            "rhs": [[list(atom), count] for atom, count in self.rhs],
            "first_mismatch": list(self.first_mismatch) if self.first_mismatch else None,
        }


@dataclass(frozen=True)
class RecursionReport:
    n: int
    cases: tuple[CaseResult, ...]
    passed: bool
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "cases": [c.to_json() for c in self.cases],
            "notes": list(self.notes),
        }


def _case(label: str, description: str, lhs: Counter, rhs: Counter) -> CaseResult:
    mismatch = _first_mismatch(lhs, rhs)
    freeze = lambda c: tuple(sorted(c.items(), key=lambda kv: _atom_key(kv[0])))
    return CaseResult(label, description, mismatch is None, freeze(lhs), freeze(rhs), mismatch)


def verify_recursions(n: int) -> RecursionReport:
    """Check the decomposition recursions of frame ``n`` as multiset identities.

    Even frame, in terms of frame ``n-1``: the twisted decomposition equals
    the untwisted one shifted by ``n`` plus the twisted one, and vice versa.
    Odd frame, in terms of frame ``n-2``: each decomposition equals itself
    shifted by ``2n-1``, plus ``2**(n-2)`` K-atoms, plus itself.
    """
    if n < 2:
        raise DomainError(f"the recursion identities need frame size >= 2, got {n}")
    notes: list[str] = []
    cases: list[CaseResult] = []
    if n % 2 == 0:
        prev_o = atom_multiset(gw_basis(n - 1, Twist.TRIVIAL))
        prev_d = atom_multiset(gw_basis(n - 1, Twist.DELTA))
        if n - 1 == 1:
            notes.append("frame 1 decompositions are the definitional base")
        cases.append(
            _case(
                "a",
                f"Delta({n}) = shift(O({n - 1}), +{n}) + Delta({n - 1})",
                atom_multiset(gw_basis(n, Twist.DELTA)),
                _shifted(prev_o, n) + prev_d,
            )
        )
        cases.append(
            _case(
                "b",
                f"O({n}) = shift(Delta({n - 1}), +{n}) + O({n - 1})",
                atom_multiset(gw_basis(n, Twist.TRIVIAL)),
                _shifted(prev_d, n) + prev_o,
            )
        )
    else:
        prev_o = atom_multiset(gw_basis(n - 2, Twist.TRIVIAL)) if n > 2 else Counter()
        prev_d = atom_multiset(gw_basis(n - 2, Twist.DELTA)) if n > 2 else Counter()
        if n - 2 == 1:
            notes.append("frame 1 decompositions are the definitional base")
        k_block = Counter({("K", None): 2 ** (n - 2)})
        cases.append(
            _case(
                "c",
                f"O({n}) = shift(O({n - 2}), +{2 * n - 1}) + {2 ** (n - 2)}*K + O({n - 2})",
                atom_multiset(gw_basis(n, Twist.TRIVIAL)),
                _shifted(prev_o, 2 * n - 1) + k_block + prev_o,
            )
        )
        cases.append(
            _case(
                "d",
                f"Delta({n}) = shift(Delta({n - 2}), +{2 * n - 1}) + {2 ** (n - 2)}*K + Delta({n - 2})",
                atom_multiset(gw_basis(n, Twist.DELTA)),
                _shifted(prev_d, 2 * n - 1) + k_block + prev_d,
            )
        )
    return RecursionReport(
        n=n,
        cases=tuple(cases),
        passed=all(c.passed for c in cases),
        notes=tuple(notes),
    )


@dataclass(frozen=True)
class GeometryReport:
    n: int
    checked: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "checked": self.checked,
            "passed": self.passed,
            "failures": list(self.failures),
        }


def verify_geometry(n: int) -> GeometryReport:
    """Validate every basis scheme of frame ``n`` against the closed forms.

    Every summand's descriptor must be valid and Gorenstein.  Unpadded and
    pushforward summands must lose exactly the diagram's weight in relative
    dimension, and pushforward summands must pass the twist-parity check.
    """
    if n < 1:
        raise DomainError(f"frame size must be >= 1, got {n}")
    failures: list[str] = []
    checked = 0
    ambient_dim = comb(n + 1, 2)
    decomps = [k_basis(n), gw_basis(n, Twist.TRIVIAL), gw_basis(n, Twist.DELTA)]
    for decomp in decomps:
        for summand in decomp.summands:
            checked += 1
            tag = f"{decomp.twist.value}/{summand.map_label.value}({summand.source_diagram.steps})"
            errors = [v for v in validate(summand.scheme) if v.severity == "error"]
            if errors:
                failures.append(f"{tag}: invalid descriptor: {errors[0].message}")
                continue
            if not is_gorenstein(summand.scheme):
                failures.append(f"{tag}: descriptor is not Gorenstein")
                continue
            if summand.map_label in (MapLabel.PHI, MapLabel.XI0, MapLabel.XI1):
                dim = relative_dimension(summand.scheme)
                expected = ambient_dim - summand.source_diagram.weight
                if dim != expected:
                    failures.append(f"{tag}: dimension {dim}, expected {expected}")
            if summand.map_label in (MapLabel.XI0, MapLabel.XI1):
                variant = (
                    TwistVariant.XI1
                    if summand.map_label is MapLabel.XI1
                    else TwistVariant.XI0
                )
                result = twist_alignment(summand.source_diagram, variant, n)
                if not result.ok:
                    failures.append(
                        f"{tag}: twist parity {result.parity}, required {result.required}"
                    )
    return GeometryReport(n=n, checked=checked, failures=tuple(failures))


@dataclass(frozen=True)
class WittTable:
    """GW-atom counts folded mod 4, with K-atoms tallied separately."""

    n: int
    twist: Twist
    degrees: tuple[tuple[int, int], ...]
    k_count: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "twist": self.twist.value,
            "degrees": {str(deg): count for deg, count in self.degrees},
            "k_count": self.k_count,
        }


def witt_table(n: int, twist: Twist) -> WittTable:
    decomp = gw_basis(n, twist)
    counts: Counter = Counter()
    k_count = 0
    for summand in decomp.summands:
        if summand.kind is Kind.GW:
            counts[summand.shift % 4] += 1
        else:
            k_count += 1
    return WittTable(
        n=n,
        twist=twist,
        degrees=tuple(sorted(counts.items())),
        k_count=k_count,
    )
