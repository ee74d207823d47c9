"""Commutative rings with a pseudoinvolution.

Four carriers are supported: the integers, ``Z/k``, the Gaussian integers
``Z[i]`` and ``Z[i]/k``.  Each is paired with one of three pseudoinvolutions:

* ``identity``  -- ``x -> x``, so ``bar(1) = 1``;
* ``negation``  -- ``x -> -x``, so ``bar(1) = -1``;
* ``twist_i``   -- ``z -> i*conj(z)`` on Gaussian carriers, so ``bar(1) = i``.

A pseudoinvolution is additive, squares to the identity and satisfies
``bar(xy) = bar(y) * bar(1)^-1 * bar(x)``.  Integers are Python ints, so
arithmetic never overflows.  Residues are kept in ``[0, k)``.
"""
from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator

from .errors import ConditionUnsolvable, IncompatibleInvolution, NotAUnit, ParseError, RingMismatch
from .report import Report

INTEGER = "integer"
MOD = "mod"
GAUSS = "gauss"
GAUSSMOD = "gaussmod"
DESCRIPTORS = (INTEGER, MOD, GAUSS, GAUSSMOD)

IDENTITY = "identity"
NEGATION = "negation"
TWIST_I = "twist_i"
INVOLUTIONS = (IDENTITY, NEGATION, TWIST_I)

_ALIASES = {
    "z": INTEGER, "int": INTEGER, "integers": INTEGER,
    "zmod": MOD, "gaussian": GAUSS, "gaussian_mod": GAUSSMOD,
    "id": IDENTITY, "neg": NEGATION, "twisti": TWIST_I, "twist": TWIST_I,
}


@dataclass(frozen=True)
class Ring:
    descriptor: str
    k: int | None
    involution: str

    @cached_property
    def gaussian(self) -> bool:
        return self.descriptor in (GAUSS, GAUSSMOD)

    @property
    def finite(self) -> bool:
        return self.k is not None

    @property
    def size(self) -> int | None:
        if self.k is None:
            return None
        return self.k * self.k if self.gaussian else self.k

    def __str__(self) -> str:
        carrier = {INTEGER: "Z", MOD: f"Z/{self.k}", GAUSS: "Z[i]", GAUSSMOD: f"Z[i]/{self.k}"}
        return f"{carrier[self.descriptor]}({self.involution})"

    # -- raw arithmetic on canonical values (int or (re, im)) ----------------

    def _norm(self, x):
        if self.k is None:
            return x
        if self.gaussian:
            return (x[0] % self.k, x[1] % self.k)
        return x % self.k

    def _add(self, x, y):
        if self.gaussian:
            return self._norm((x[0] + y[0], x[1] + y[1]))
        return self._norm(x + y)

    def _neg(self, x):
        if self.gaussian:
            return self._norm((-x[0], -x[1]))
        return self._norm(-x)

    def _mul(self, x, y):
        if self.gaussian:
            a, b = x
            c, d = y
            return self._norm((a * c - b * d, a * d + b * c))
        return self._norm(x * y)

    def _dot(self, xs, ys):
        """Raw ``sum(x * y)``, reduced once at the end."""
        if self.gaussian:
            re_ = im = 0
            for (a, b), (c, d) in zip(xs, ys):
                re_ += a * c - b * d
                im += a * d + b * c
            return self._norm((re_, im))
        return self._norm(sum(a * b for a, b in zip(xs, ys)))

    def _bar(self, x):
        if self.involution == IDENTITY:
            return x
        if self.involution == NEGATION:
            return self._neg(x)
        # i * conj(a + bi) = b + ai
        return (x[1], x[0])

    def _inv(self, x):
        if self.descriptor == INTEGER:
            if x in (1, -1):
                return x
        elif self.descriptor == MOD:
            try:
                return pow(x, -1, self.k)
            except ValueError:
                pass
        elif self.descriptor == GAUSS:
            units = {(1, 0): (1, 0), (-1, 0): (-1, 0), (0, 1): (0, -1), (0, -1): (0, 1)}
            if x in units:
                return units[x]
        else:
            a, b = x
            try:
                ninv = pow((a * a + b * b) % self.k, -1, self.k)
            except ValueError:
                pass
            else:
                return self._norm((a * ninv, -b * ninv))
        raise NotAUnit(f"{self.format_value(x)} is not a unit in {self}")

    # -- element construction ------------------------------------------------

    def __call__(self, value) -> Scalar:
        if isinstance(value, Scalar):
            if value.ring != self:
                raise RingMismatch(f"{value!r} does not belong to {self}")
            return value
        if self.gaussian:
            if isinstance(value, int):
                value = (value, 0)
            elif isinstance(value, (tuple, list)) and len(value) == 2:
                value = (int(value[0]), int(value[1]))
            else:
                raise TypeError(f"cannot coerce {value!r} into {self}")
        else:
            if not isinstance(value, int):
                raise TypeError(f"cannot coerce {value!r} into {self}")
        return Scalar(self, self._norm(value))

    @cached_property
    def zero(self) -> Scalar:
        return self(0)

    @cached_property
    def one(self) -> Scalar:
        return self(1)

    @property
    def i(self) -> Scalar:
        if not self.gaussian:
            raise AttributeError(f"{self} has no imaginary unit")
        return self((0, 1))

    def additive_generators(self) -> tuple[Scalar, ...]:
        """Elements generating the ring as an abelian group."""
        if self.gaussian:
            return (self.one, self.i)
        return (self.one,)

    def elements(self) -> Iterator[Scalar]:
        if not self.finite:
            raise ValueError(f"{self} is infinite")
        if self.gaussian:
            for a, b in itertools.product(range(self.k), repeat=2):
                yield Scalar(self, (a, b))
        else:
            for a in range(self.k):
                yield Scalar(self, a)

    def random(self, rng: random.Random, bound: int = 10) -> Scalar:
        """Uniform element for finite rings; coordinates in [-bound, bound] otherwise."""
        if self.finite:
            lo, hi = 0, self.k - 1
        else:
            lo, hi = -bound, bound
        if self.gaussian:
            return self((rng.randint(lo, hi), rng.randint(lo, hi)))
        return self(rng.randint(lo, hi))

    # -- text / JSON ------------------------------------------------------------

    def format_value(self, x) -> str:
        if not self.gaussian:
            return str(x)
        re_, im = x
        if im == 0:
            return str(re_)
        imag = {1: "i", -1: "-i"}.get(im, f"{im}i")
        if re_ == 0:
            return imag
        return f"{re_}{imag}" if imag.startswith("-") else f"{re_}+{imag}"

    _GAUSS_RE = re.compile(
        r"^(?:(?P<re>[+-]?\d+)(?P<im>[+-]\d*)i|(?P<real>[+-]?\d+)|(?P<imag>[+-]?\d*)i)$"
    )

    def parse(self, text: str) -> Scalar:
        text = text.strip().replace(" ", "")
        if not self.gaussian:
            try:
                return self(int(text))
            except ValueError:
                raise ParseError(f"not an integer: {text!r}") from None
        m = self._GAUSS_RE.match(text)
        if m is None:
            raise ParseError(f"not a Gaussian integer: {text!r}")
        if m["real"] is not None:
            return self(int(m["real"]))
        re_text = m["re"] or "0"
        im_text = m["im"] if m["im"] is not None else m["imag"]
        im = {"": 1, "+": 1, "-": -1}.get(im_text)
        return self((int(re_text), int(im_text) if im is None else im))

    def from_json(self, data) -> Scalar:
        if isinstance(data, str):
            return self.parse(data)
        if isinstance(data, bool):
            raise ParseError(f"not a ring element: {data!r}")
        try:
            return self(data)
        except TypeError as exc:
            raise ParseError(str(exc)) from None

    def to_json(self) -> dict:
        data = {"descriptor": self.descriptor, "involution": self.involution}
        if self.k is not None:
            data["k"] = self.k
        return data


class Scalar:
    """An element of a :class:`Ring`.  Immutable."""

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        self.ring = ring
        self.value = value

    def _coerce(self, other) -> Scalar | None:
        if isinstance(other, Scalar):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.ring, self.ring._add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.ring, self.ring._add(self.value, self.ring._neg(other.value)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Scalar(self.ring, self.ring._neg(self.value))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.ring, self.ring._mul(self.value, other.value))

    __rmul__ = __mul__

    def bar(self) -> Scalar:
        return Scalar(self.ring, self.ring._bar(self.value))

    def inv(self) -> Scalar:
        return Scalar(self.ring, self.ring._inv(self.value))

    def is_unit(self) -> bool:
        try:
            self.ring._inv(self.value)
        except NotAUnit:
            return False
        return True

    def is_zero(self) -> bool:
        v = self.value
        return v == (0, 0) if isinstance(v, tuple) else v == 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.ring == other.ring and self.value == other.value

    def __hash__(self):
        return hash((self.ring, self.value))

    def __str__(self):
        return self.ring.format_value(self.value)

    def __repr__(self):
        return f"Scalar({self}, {self.ring})"

    def to_json(self):
        return list(self.value) if self.ring.gaussian else self.value


def make_ring(descriptor: str, involution: str = IDENTITY, k: int | None = None) -> Ring:
    descriptor = _ALIASES.get(descriptor.lower(), descriptor.lower())
    involution = _ALIASES.get(involution.lower(), involution.lower())
    if descriptor not in DESCRIPTORS:
        raise ValueError(f"unknown ring descriptor {descriptor!r}")
    if involution not in INVOLUTIONS:
        raise ValueError(f"unknown involution {involution!r}")
    if descriptor in (MOD, GAUSSMOD):
        if k is None or k < 2:
            raise ValueError(f"{descriptor} needs a modulus k >= 2, got {k!r}")
    elif k is not None:
        raise ValueError(f"{descriptor} takes no modulus")
    if involution == TWIST_I and descriptor not in (GAUSS, GAUSSMOD):
        raise IncompatibleInvolution("twist_i is only defined on Gaussian rings")
    return Ring(descriptor, k, involution)


def ring_from_json(data: dict) -> Ring:
    try:
        return make_ring(data["descriptor"], data.get("involution", IDENTITY), data.get("k"))
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"bad ring descriptor {data!r}: {exc}") from None


def ring_from_spec(text: str, involution: str) -> Ring:
    """Parse command-line ring names such as ``int``, ``mod:5`` or ``gaussmod:3``."""
    name, _, k = text.partition(":")
    return make_ring(name, involution, int(k) if k else None)


def bar(ring: Ring, x: Scalar) -> Scalar:
    return ring(x).bar()


def special_units(ring: Ring) -> tuple[Scalar, Scalar]:
    """Return ``(bar(1), bar(1)^-1)``."""
    one_bar = ring.one.bar()
    return one_bar, one_bar.inv()


def solve_bar_difference(ring: Ring, t) -> Scalar:
    """Some ``r`` with ``bar(r) - r = t``, by closed form per involution.

    * identity: solvable only for ``t = 0`` (take ``r = 0``);
    * negation: ``-2r = t``, so ``r = -t/2`` when 2 is a unit or every
      coordinate of ``t`` is even;
    * twist_i: ``bar(x + yi) - (x + yi) = (y - x) + (x - y)i``, so ``t``
      must have the form ``p - pi`` and ``r = pi`` works.

    Raises :class:`ConditionUnsolvable` otherwise.
    """
    t = ring(t)
    if ring.involution == IDENTITY:
        if t.is_zero():
            return ring.zero
    elif ring.involution == NEGATION:
        two = ring(2)
        if two.is_unit():
            return -(t * two.inv())
        parts = t.value if ring.gaussian else (t.value,)
        if all(p % 2 == 0 for p in parts):
            half = tuple(-p // 2 for p in parts)
            return ring(half if ring.gaussian else half[0])
    else:
        p, s = t.value
        if ring(p) == ring(-s):
            return ring((0, p))
    raise ConditionUnsolvable(f"bar(r) - r = {t} has no solution in {ring}")


def standard_rings() -> list[Ring]:
    """The instances exercised by the test and acceptance suites."""
    return [
        make_ring(INTEGER, NEGATION),
        make_ring(INTEGER, IDENTITY),
        make_ring(MOD, NEGATION, 5),
        make_ring(MOD, IDENTITY, 7),
        make_ring(MOD, NEGATION, 6),
        make_ring(GAUSS, TWIST_I),
        make_ring(GAUSSMOD, TWIST_I, 3),
        make_ring(GAUSSMOD, TWIST_I, 5),
        make_ring(GAUSSMOD, NEGATION, 3),
    ]


def check_pseudoinvolution(
    ring: Ring,
    sample_budget: int = 500,
    bar: Callable[[Scalar], Scalar] | None = None,
    seed: int = 0,
) -> Report:
    """Check the pseudoinvolution axioms, exhaustively when the ring is small.

    ``bar`` overrides the ring's own map, which lets callers probe candidate
    maps that are not valid involutions.
    """
    if sample_budget < 1:
        raise ValueError("sample_budget must be >= 1")
    sigma = bar or (lambda x: x.bar())
    if ring.finite and ring.size ** 2 <= sample_budget:
        elems = list(ring.elements())
        pairs = list(itertools.product(elems, repeat=2))
        singles = elems
    else:
        rng = random.Random(seed)
        pairs = [(ring.random(rng), ring.random(rng)) for _ in range(sample_budget)]
        singles = [a for a, _ in pairs]

    report = Report(f"pseudoinvolution on {ring}")
    witness = next(((a, b) for a, b in pairs if sigma(a + b) != sigma(a) + sigma(b)), None)
    report.add("additive", witness is None, witness and _fmt_pair(witness))
    witness = next((a for a in singles if sigma(sigma(a)) != a), None)
    report.add("involutive", witness is None, witness)

    one_bar = sigma(ring.one)
    try:
        one_bar_inv = one_bar.inv()
    except NotAUnit:
        report.add("bar(1) is a unit", False, one_bar)
        return report
    report.add("bar(1) is a unit", True)
    witness = next(
        ((a, b) for a, b in pairs if sigma(a * b) != sigma(b) * one_bar_inv * sigma(a)), None
    )
    report.add("twisted multiplicative", witness is None, witness and _fmt_pair(witness))
    report.add("bar(1)^2 = bar(bar(1)^-1)", one_bar * one_bar == sigma(one_bar_inv),
               (one_bar * one_bar, sigma(one_bar_inv)))
    return report


def _fmt_pair(pair) -> str:
    a, b = pair
    return f"({a}, {b})"
