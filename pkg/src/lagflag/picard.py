"""Exponent-vector arithmetic for formal line bundles on flag schemes.

Line bundles are modeled as elements of the free abelian group on the
generator symbols

* ``Delta(j)``   - determinant of the j-th Lagrangian stratum,
* ``Nabla(i)``   - determinant of the i-th intermediate stratum,
* ``DetV(m)``    - determinant of the base flag step of rank m,
* ``AmbientDelta`` - determinant of the tautological bundle on the ambient
  Lagrangian Grassmannian,
* ``E1``, ``E2`` - the exceptional divisor classes of the two-step blow-up.

Exponents are integers, or affine expressions ``a*n + b`` when the half rank
is kept symbolic.  The relative canonical sheaf of a Gorenstein descriptor
``(n, d, e, t)`` with ``k`` intermediate strata is

    Delta(k)^(n - d_k + 1) * DetV(d_k)^(d_k - n - 1)
      * prod over i < k of   Delta(i)^(t_i + e_i + 1 - d_i)
                           * Delta(i+1)^(t_i + e_i - n)
                           * Nabla(i)^(n + d_i - 2 e_i - t_i - 1)
                           * DetV(d_i)^(-t_i),

with contributions to the same generator accumulating.

Parity computations quotient by squares and by the base-trivial generators:
every ``DetV``, every ``Delta(j)`` whose Lagrangian is pinched to the fixed
flag step (``d_j`` equal to the half rank), and every ``Nabla(i)`` whose
stratum is pinched likewise (``e_i`` equal to half rank minus ``t_i``).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, NamedTuple, Union

from .diagrams import DOWN, ShiftedDiagram, boundary, classify
from .errors import DomainError, UnsupportedError
from .flags import FlagDescriptor, is_gorenstein
from .marking import lf_a, lf_b


@dataclass(frozen=True)
class Affine:
    """An exponent of the form ``n_coeff * n + const`` for symbolic half rank."""

    n_coeff: int
    const: int

    def _coerce(self, other) -> "Affine":
        if isinstance(other, Affine):
            return other
        if isinstance(other, int):
            return Affine(0, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return affine(self.n_coeff + o.n_coeff, self.const + o.const)

    __radd__ = __add__

    def __neg__(self) -> "Affine":
        return Affine(-self.n_coeff, -self.const)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return affine(self.n_coeff - o.n_coeff, self.const - o.const)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return affine(o.n_coeff - self.n_coeff, o.const - self.const)

    def __mul__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return affine(self.n_coeff * other, self.const * other)

    __rmul__ = __mul__

    def evaluate(self, n: int) -> int:
        return self.n_coeff * n + self.const

    def to_json(self) -> list[int]:
        return [self.n_coeff, self.const]

    def __str__(self) -> str:
        a, b = self.n_coeff, self.const
        if a > 0:
            head = "n" if a == 1 else f"{a}n"
            if b == 0:
                return head
            return f"{head}+{b}" if b > 0 else f"{head}-{-b}"
        # negative leading coefficient: write the constant first, e.g. 1-n
        tail = "n" if a == -1 else f"{-a}n"
        return f"{b}-{tail}" if b != 0 else f"-{tail}"


def affine(n_coeff: int, const: int) -> Union[int, Affine]:
    """Normalized affine exponent: collapses to a plain int when constant."""
    return const if n_coeff == 0 else Affine(n_coeff, const)


#: The symbolic half rank itself, for canonical sheaves as functions of n.
SYMBOLIC_N = Affine(1, 0)

Exponent = Union[int, Affine]


class Generator(NamedTuple):
    kind: str
    index: int | None = None

    def __str__(self) -> str:
        return self.kind if self.index is None else f"{self.kind}({self.index})"


def delta(j: int) -> Generator:
    return Generator("Delta", j)


def nabla(i: int) -> Generator:
    return Generator("Nabla", i)


def det_v(m: int) -> Generator:
    return Generator("DetV", m)


AMBIENT_DELTA = Generator("AmbientDelta")
E1 = Generator("E1")
E2 = Generator("E2")

_KIND_ORDER = {"Delta": 0, "Nabla": 1, "DetV": 2, "AmbientDelta": 3, "E1": 4, "E2": 5}


def _gen_key(gen: Generator) -> tuple[int, int]:
    if gen.kind not in _KIND_ORDER:
        raise DomainError(f"unknown generator kind {gen.kind!r}")
    return (_KIND_ORDER[gen.kind], gen.index if gen.index is not None else 0)


class PicElement:
    """A formal line bundle as a finitely supported exponent vector.

    Immutable; supports addition, negation, subtraction and integer scaling,
    which make the elements a free abelian group on the generators.
    """

    __slots__ = ("_items",)

    def __init__(self, exponents: Mapping[Generator, Exponent] | Iterable = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[Generator, Exponent] = {}
        for gen, exp in items:
            _gen_key(gen)
            acc[gen] = acc.get(gen, 0) + exp
        self._items = tuple(
            (gen, exp) for gen, exp in sorted(acc.items(), key=lambda kv: _gen_key(kv[0]))
            if exp != 0
        )

    @classmethod
    def zero(cls) -> "PicElement":
        return cls()

    def items(self) -> tuple[tuple[Generator, Exponent], ...]:
        return self._items

    def exponent(self, gen: Generator) -> Exponent:
        for g, exp in self._items:
            if g == gen:
                return exp
        return 0

    @property
    def is_zero(self) -> bool:
        return not self._items

    def __add__(self, other: "PicElement") -> "PicElement":
        if not isinstance(other, PicElement):
            return NotImplemented
        return PicElement(list(self._items) + list(other._items))

    def __neg__(self) -> "PicElement":
        return PicElement([(g, -e) for g, e in self._items])

    def __sub__(self, other: "PicElement") -> "PicElement":
        if not isinstance(other, PicElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: int) -> "PicElement":
        if not isinstance(scalar, int):
            return NotImplemented
        return PicElement([(g, e * scalar) for g, e in self._items])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, PicElement) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._items)

    def to_json(self) -> dict:
        out: dict = {"Delta": {}, "Nabla": {}, "DetV": {}, "AmbientDelta": 0, "E1": 0, "E2": 0}
        for gen, exp in self._items:
            value = exp.to_json() if isinstance(exp, Affine) else exp
            if gen.index is None:
                out[gen.kind] = value
            else:
                out[gen.kind][str(gen.index)] = value
        return out

    @classmethod
    def from_json(cls, payload: dict) -> "PicElement":
        def decode(value):
            return affine(value[0], value[1]) if isinstance(value, list) else value

        items: list[tuple[Generator, Exponent]] = []
        for kind in ("Delta", "Nabla", "DetV"):
            for index, value in payload.get(kind, {}).items():
                items.append((Generator(kind, int(index)), decode(value)))
        for kind in ("AmbientDelta", "E1", "E2"):
            if kind in payload:
                items.append((Generator(kind), decode(payload[kind])))
        return cls(items)

    def __str__(self) -> str:
        if not self._items:
            return "0"
        return " + ".join(
            f"({exp})*{gen}" if isinstance(exp, Affine) else f"{exp}*{gen}"
            for gen, exp in self._items
        )

    def __repr__(self) -> str:
        return f"PicElement({dict(self._items)!r})"


@dataclass(frozen=True)
class ParityClass:
    """An exponent vector mod 2 after deleting base-trivial generators."""

    generators: frozenset[Generator]

    @classmethod
    def zero(cls) -> "ParityClass":
        return cls(frozenset())

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def to_json(self) -> list[str]:
        return [str(g) for g in sorted(self.generators, key=_gen_key)]

    def __str__(self) -> str:
        return "0" if self.is_zero else " + ".join(self.to_json())


def canonical_exponents(
    d: tuple[int, ...], e: tuple[int, ...], t: tuple[int, ...], half_rank: Exponent
) -> PicElement:
    """Canonical-sheaf exponent vector of ``(half_rank, d, e, t)``.

    ``half_rank`` may be `SYMBOLIC_N`, in which case exponents come out as
    affine expressions in the half rank.
    """
    k = len(e)
    acc: dict[Generator, Exponent] = defaultdict(int)
    acc[delta(k)] += half_rank - d[k] + 1
    acc[det_v(d[k])] += d[k] - half_rank - 1
    for i in range(k):
        acc[delta(i)] += t[i] + e[i] + 1 - d[i]
        acc[delta(i + 1)] += t[i] + e[i] - half_rank
        acc[nabla(i)] += half_rank + d[i] - 2 * e[i] - t[i] - 1
        acc[det_v(d[i])] += -t[i]
    return PicElement(acc)


def canonical_sheaf(desc: FlagDescriptor) -> PicElement:
    """Relative canonical sheaf of a Gorenstein descriptor over the base."""
    if not is_gorenstein(desc):
        raise UnsupportedError(
            f"the canonical-sheaf formula needs a Gorenstein descriptor, got {desc}"
        )
    return canonical_exponents(desc.d, desc.e, desc.t, desc.half_rank)


def canonical_sheaf_in_n(
    d: tuple[int, ...], e: tuple[int, ...], t: tuple[int, ...]
) -> PicElement:
    """Canonical sheaf with the half rank kept symbolic."""
    d, e, t = tuple(d), tuple(e), tuple(t)
    if len(e) != len(d) - 1 or len(t) != len(e):
        raise DomainError("shape mismatch between d, e and t")
    if not all(0 <= d[i] - e[i] <= 1 for i in range(len(e))):
        raise UnsupportedError("the canonical-sheaf formula needs d_i - e_i in {0, 1}")
    return canonical_exponents(d, e, t, SYMBOLIC_N)


def relative_canonical_over_LG(desc: FlagDescriptor, original_n: int) -> PicElement:
    """Canonical sheaf relative to the ambient Grassmannian of frame ``original_n``.

    Only meaningful for padded descriptors (half rank = original frame + 1).
    Subtracts ``(original_n + 1) * Delta(0)``: the ambient Grassmannian's own
    canonical sheaf is the (frame+1)-st power of its tautological determinant,
    which pulls back to ``Delta(0)`` up to base classes.
    """
    if desc.half_rank != original_n + 1:
        raise DomainError(
            f"descriptor has half rank {desc.half_rank}; a padded descriptor for "
            f"frame {original_n} must have half rank {original_n + 1}"
        )
    return canonical_sheaf(desc) - (original_n + 1) * PicElement({delta(0): 1})


def mod2_reduce(elt: PicElement, desc: FlagDescriptor) -> ParityClass:
    """Exponents mod 2, with the base-trivial generators deleted.

    Deleted: every ``DetV``; ``Delta(j)`` when ``d_j`` equals the half rank
    (the Lagrangian is the fixed flag step); ``Nabla(i)`` when ``e_i`` equals
    half rank minus ``t_i`` (the stratum is fixed).
    """
    odd: set[Generator] = set()
    for gen, exp in elt.items():
        if isinstance(exp, Affine):
            raise DomainError("parity is undefined for symbolic exponents; fix a half rank")
        if gen.kind == "DetV":
            continue
        if gen.kind == "Delta":
            if gen.index is None or not 0 <= gen.index <= desc.k:
                raise DomainError(f"generator {gen} is out of range for {desc}")
            if desc.d[gen.index] == desc.half_rank:
                continue
        elif gen.kind == "Nabla":
            if gen.index is None or not 0 <= gen.index < desc.k:
                raise DomainError(f"generator {gen} is out of range for {desc}")
            if desc.e[gen.index] == desc.half_rank - desc.t[gen.index]:
                continue
        if exp % 2 == 1:
            odd.add(gen)
    return ParityClass(frozenset(odd))


class Twist(str, Enum):
    """Coefficient line bundle on the ambient Grassmannian."""

    TRIVIAL = "O"
    DELTA = "Delta"


def blowup_pullback(twist: Twist) -> PicElement:
    """Class of the twist pulled back to the two-step blow-up.

    Through the affine-bundle identification and the two blow-up projections
    the ambient determinant gains both exceptional divisors, each with
    exponent one; the trivial twist stays trivial.
    """
    if twist is Twist.TRIVIAL:
        return PicElement.zero()
    return PicElement({AMBIENT_DELTA: 1, E1: 1, E2: 1})


def lambda_pair(twist: Twist) -> tuple[int, int]:
    """Parities of the exceptional-divisor exponents in the pullback of the twist."""
    elt = blowup_pullback(twist)
    return (elt.exponent(E1) % 2, elt.exponent(E2) % 2)


class ConnectingCase(str, Enum):
    """Outcome of the two-step blow-up connecting-homomorphism analysis."""

    SPLIT_CASE_I = "SplitCaseI"
    ETA_CASE_II = "EtaCaseII"
    ETA_CASE_III = "EtaCaseIII"
    NEEDS_PADDING = "NeedsPadding"


def classify_connecting(c1: int, c2: int, lam1: int, lam2: int) -> ConnectingCase:
    """Case split by the parities of the divisor exponents against the codimensions.

    ``c1`` and ``c2`` are the codimensions of the two blow-up centers (each
    at least 2); ``lam1``, ``lam2`` the divisor-exponent parities of the
    coefficient bundle.
    """
    if c1 < 2 or c2 < 2:
        raise DomainError(f"blow-up codimensions must be at least 2, got {c1}, {c2}")
    first = (lam1 - (c1 - 1)) % 2 == 0
    second = (lam2 - (c2 - 1)) % 2 == 0
    if first and second:
        return ConnectingCase.SPLIT_CASE_I
    if first:
        return ConnectingCase.ETA_CASE_II
    if second:
        return ConnectingCase.ETA_CASE_III
    return ConnectingCase.NEEDS_PADDING


def wedge_pushforward_rank(i: int, k: int, l: int, n: int) -> int:
    """Rank of the i-th derived pushforward of the k-th wedge twisted by -l.

    For the universal subbundle of a rank n+1 Grassmannian of n-planes this
    is 1 exactly on the diagonal i = k = l and 0 otherwise.
    """
    for name, value in (("i", i), ("k", k), ("l", l)):
        if not 0 <= value <= n:
            raise DomainError(f"index {name} = {value} out of range 0..{n}")
    return 1 if i == k == l else 0


class TwistVariant(str, Enum):
    """Which pushforward family a diagram's scheme feeds (plain or twisted)."""

    XI0 = "Xi0"
    XI1 = "Xi1"


@dataclass(frozen=True)
class AlignmentResult:
    ok: bool
    parity: ParityClass
    required: ParityClass
    scheme: FlagDescriptor

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "parity": self.parity.to_json(),
            "required": self.required.to_json(),
            "scheme": self.scheme.to_json(),
        }


def twist_alignment(
    diagram: ShiftedDiagram, variant: TwistVariant, n: int
) -> AlignmentResult:
    """Check the mod-2 condition that makes a diagram's pushforward well-defined.

    Builds the padded scheme the basis uses for the diagram, reduces its
    canonical-sheaf parity, and compares against the class forced by the
    frame parity and the twist variant: zero for odd frames and for twisted
    even frames, ``Delta(0)`` for untwisted even frames (empty right column).
    """
    if diagram.n != n:
        raise DomainError(f"diagram lives in frame {diagram.n}, not {n}")
    cls = classify(diagram)
    if not cls.is_almost_even:
        raise DomainError(f"{diagram.steps!r} is not almost even")
    full_top = diagram.steps[0] == DOWN
    l = boundary(diagram).segment_count
    if n % 2 == 1:
        if variant is not TwistVariant.XI0:
            raise DomainError("odd frames use variant Xi0")
        scheme = lf_a(diagram, l)
        required = ParityClass.zero()
    elif full_top:
        if variant is not TwistVariant.XI1:
            raise DomainError("even frames with a full top row use variant Xi1")
        scheme = lf_a(diagram, l)
        required = ParityClass.zero()
    else:
        if variant is not TwistVariant.XI0:
            raise DomainError("even frames with an empty right column use variant Xi0")
        scheme = lf_b(diagram, l)
        required = ParityClass(frozenset({delta(0)}))
    parity = mod2_reduce(canonical_sheaf(scheme), scheme)
    return AlignmentResult(parity == required, parity, required, scheme)
