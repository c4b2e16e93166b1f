"""Descriptors of generalized Lagrangian flag schemes and their closed-form data.

A descriptor ``(half_rank, d, e, t)`` specifies the moduli of chains of
Lagrangian subbundles of a rank ``2*half_rank`` symplectic bundle, where the
``j``-th Lagrangian sits inside the annihilator of the flag step ``V_{d_j}``
and consecutive Lagrangians share an intermediate stratum of corank ``t_i``
containing ``V_{e_i}``.  None of that geometry is materialized here: this
module evaluates the descriptor-level criteria (regularity, the Gorenstein
bound, relative dimension, component count).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import DescriptorError, DomainError, UnsupportedError


@dataclass(frozen=True)
class FlagDescriptor:
    """The data (half_rank, d, e, t) of a generalized Lagrangian flag scheme.

    ``d`` has ``k+1`` entries and ``e``, ``t`` have ``k`` each.  Construction
    only checks shapes; the defining inequalities are checked by `validate`,
    which reports violations as data rather than raising.
    """

    half_rank: int
    d: tuple[int, ...]
    e: tuple[int, ...]
    t: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "d", tuple(self.d))
        object.__setattr__(self, "e", tuple(self.e))
        object.__setattr__(self, "t", tuple(self.t))
        if len(self.d) == 0:
            raise DomainError("d must have at least one entry")
        if len(self.e) != len(self.d) - 1 or len(self.t) != len(self.e):
            raise DomainError(
                f"shape mismatch: len(d)={len(self.d)} needs "
                f"len(e)=len(t)={len(self.d) - 1}, got {len(self.e)}, {len(self.t)}"
            )

    @property
    def k(self) -> int:
        return len(self.e)

    def to_json(self) -> dict:
        return {
            "half_rank": self.half_rank,
            "d": list(self.d),
            "e": list(self.e),
            "t": list(self.t),
        }

    @classmethod
    def from_json(cls, payload: dict) -> "FlagDescriptor":
        return cls(
            payload["half_rank"],
            tuple(payload["d"]),
            tuple(payload["e"]),
            tuple(payload["t"]),
        )

    def __str__(self) -> str:
        d = ",".join(map(str, self.d))
        e = ",".join(map(str, self.e))
        t = ",".join(map(str, self.t))
        return f"LF[{d}]({e})_[{t}]@{self.half_rank}"


@dataclass(frozen=True)
class Violation:
    """One violated descriptor constraint; warnings do not make it invalid."""

    constraint: str
    message: str
    severity: str = "error"

    def to_json(self) -> dict:
        return {
            "constraint": self.constraint,
            "message": self.message,
            "severity": self.severity,
        }


def validate(desc: FlagDescriptor) -> list[Violation]:
    """Check every defining constraint; empty list means valid.

    Monotonicity of ``e`` and ``t`` is reported as a warning only: the
    constructed descriptors of the marking module do not always satisfy it
    and nothing downstream relies on it.
    """
    out: list[Violation] = []

    def err(constraint: str, message: str) -> None:
        out.append(Violation(constraint, message))

    n = desc.half_rank
    if n < 0:
        err("half_rank_nonnegative", f"half_rank must be non-negative, got {n}")
    for j, dj in enumerate(desc.d):
        if dj < 0:
            err("d_nonnegative", f"d_{j} = {dj} is negative")
        if dj > n:
            err("d_leq_half_rank", f"d_{j} = {dj} exceeds half_rank {n}")
    for j in range(len(desc.d) - 1):
        if desc.d[j] > desc.d[j + 1]:
            err("d_nondecreasing", f"d_{j} = {desc.d[j]} > d_{j+1} = {desc.d[j+1]}")
    for i, ti in enumerate(desc.t):
        if ti <= 0:
            err("t_positive", f"t_{i} = {ti} is not positive")
    for i, ei in enumerate(desc.e):
        if ei < 0:
            err("e_nonnegative", f"e_{i} = {ei} is negative")
        if ei > desc.d[i]:
            err("e_leq_d_i", f"e_{i} = {ei} exceeds d_{i} = {desc.d[i]}")
        if ei > desc.d[i + 1]:
            err("e_leq_d_next", f"e_{i} = {ei} exceeds d_{i+1} = {desc.d[i + 1]}")
        if ei > n - desc.t[i]:
            err(
                "e_leq_half_rank_minus_t",
                f"e_{i} = {ei} exceeds half_rank - t_{i} = {n - desc.t[i]}",
            )
    for i in range(len(desc.e) - 1):
        if desc.e[i] > desc.e[i + 1]:
            out.append(
                Violation(
                    "e_nondecreasing",
                    f"e_{i} = {desc.e[i]} > e_{i+1} = {desc.e[i + 1]}",
                    severity="warning",
                )
            )
        if desc.t[i] > desc.t[i + 1]:
            out.append(
                Violation(
                    "t_nondecreasing",
                    f"t_{i} = {desc.t[i]} > t_{i+1} = {desc.t[i + 1]}",
                    severity="warning",
                )
            )
    return out


def is_valid(desc: FlagDescriptor) -> bool:
    return not any(v.severity == "error" for v in validate(desc))


def _require_valid(desc: FlagDescriptor) -> None:
    bad = [v for v in validate(desc) if v.severity == "error"]
    if bad:
        raise DescriptorError(
            f"invalid descriptor {desc}: " + "; ".join(v.message for v in bad),
            violations=bad,
        )


def is_regular(desc: FlagDescriptor) -> bool:
    """True when ``d`` with its last entry dropped equals ``e`` componentwise."""
    _require_valid(desc)
    return desc.d[: desc.k] == desc.e


def is_gorenstein(desc: FlagDescriptor) -> bool:
    """True when ``0 <= d_i - e_i <= 1`` for all ``i < k``."""
    _require_valid(desc)
    return all(0 <= desc.d[i] - desc.e[i] <= 1 for i in range(desc.k))


def relative_dimension(desc: FlagDescriptor) -> int:
    """Relative dimension over the base, valid in the Gorenstein regime.

    Equals ``C(half_rank - d_k + 1, 2)`` plus, for each intermediate stratum,
    ``(half_rank - t_i - d_i) * t_i + C(t_i + 1, 2)``.  Note the formula does
    not involve ``e``.
    """
    _require_valid(desc)
    if not is_gorenstein(desc):
        raise UnsupportedError(
            f"relative dimension is only asserted for Gorenstein descriptors "
            f"(d_i - e_i <= 1); got {desc}"
        )
    n = desc.half_rank
    total = comb(n - desc.d[desc.k] + 1, 2)
    for i in range(desc.k):
        total += (n - desc.t[i] - desc.d[i]) * desc.t[i] + comb(desc.t[i] + 1, 2)
    return total


def component_count(desc: FlagDescriptor) -> int:
    """Number of irreducible components: ``2**s`` with ``s = #{i : d_i - e_i = 1}``."""
    _require_valid(desc)
    if not is_gorenstein(desc):
        raise UnsupportedError(f"component count needs a Gorenstein descriptor, got {desc}")
    s = sum(1 for i in range(desc.k) if desc.d[i] - desc.e[i] == 1)
    return 2**s


@dataclass(frozen=True)
class SchemeReport:
    """Evaluated predicates and quantities of one descriptor.

    ``relative_dimension`` and ``component_count`` are None outside the
    Gorenstein regime, where the closed forms do not apply.
    """

    regular: bool
    gorenstein: bool
    relative_dimension: int | None
    component_count: int | None
    reduced_with_trivial_pushforward: bool

    def to_json(self) -> dict:
        return {
            "regular": self.regular,
            "gorenstein": self.gorenstein,
            "relative_dimension": self.relative_dimension,
            "component_count": self.component_count,
            "reduced_with_trivial_pushforward": self.reduced_with_trivial_pushforward,
        }


def scheme_report(desc: FlagDescriptor) -> SchemeReport:
    _require_valid(desc)
    gor = is_gorenstein(desc)
    return SchemeReport(
        regular=is_regular(desc),
        gorenstein=gor,
        relative_dimension=relative_dimension(desc) if gor else None,
        component_count=component_count(desc) if gor else None,
        # The structure-map pushforward of the structure sheaf is the base's
        # structure sheaf in the Gorenstein regime with every t_i equal to 1.
        reduced_with_trivial_pushforward=gor and all(ti == 1 for ti in desc.t),
    )


def named_scheme(name: str, n: int) -> FlagDescriptor:
    """Descriptors of the recurring small schemes at half rank ``n``.

    ``B2``, ``E2`` and ``F2`` are the two-step blow-up companions of the
    Lagrangian Grassmannian; ``LF_i`` is the sub-Grassmannian of Lagrangians
    containing the flag step ``V_i`` (``LF_0`` is the full Grassmannian).
    """
    if name == "B2":
        desc = FlagDescriptor(n, (0, 1), (0,), (1,))
    elif name == "E2":
        desc = FlagDescriptor(n, (1, 1), (1,), (1,))
    elif name == "F2":
        desc = FlagDescriptor(n, (1, 1), (0,), (1,))
    elif name.startswith("LF_"):
        try:
            i = int(name[3:])
        except ValueError:
            raise DomainError(f"unknown scheme name {name!r}") from None
        desc = FlagDescriptor(n, (i,), (), ())
    else:
        raise DomainError(f"unknown scheme name {name!r}; expected B2, E2, F2 or LF_<i>")
    _require_valid(desc)
    return desc
