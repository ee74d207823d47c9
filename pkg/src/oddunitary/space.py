"""Odd hyperbolic spaces ``H^m + V0`` with ``V0`` free of rank ``n``.

Coordinates default to the hyperbolic-first basis
``e1, e-1, e2, e-2, ..., em, e-m, v1, ..., vn``.  The module-first basis
``v1, ..., vn, e1, e-1, ..., em, e-m`` is reached through the permutation
matrix ``P`` (``x_hyperbolic = P x_module``).

The form on ``V`` is ``<u, v> = bar(1)^-1 * bar(u)^t Psi v`` where ``Psi`` is
the Gram matrix ``psi~_m + phi``.  With this convention ``<b_i, b_j> =
Psi[i][j]`` on basis vectors, the form is sesquilinear in the required
twisted sense, and a matrix ``M`` is an isometry exactly when
``bar(1)^-1 * bar(M)^t Psi M == Psi``.
"""
from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import BadIndex, DimensionMismatch, InvalidPhi, ParseError
from .matrix import Matrix, Vector, bar_transpose, direct_sum, dot, trailing_submatrix, vec_add, vec_bar
from .report import Report
from .rings import GAUSS, IDENTITY, NEGATION, Ring, Scalar, ring_from_json, special_units


class BasisOrder(enum.Enum):
    HYPERBOLIC_FIRST = "hyperbolic_first"
    MODULE_FIRST = "module_first"


HYPERBOLIC_FIRST = BasisOrder.HYPERBOLIC_FIRST
MODULE_FIRST = BasisOrder.MODULE_FIRST


def _psi_tilde(ring: Ring, r: int) -> Matrix | None:
    if r == 0:
        return None
    one_bar, _ = special_units(ring)
    block = Matrix(ring, [[0, 1], [-one_bar, 0]])
    return direct_sum(ring, *([block] * r))


def _psi_tilde_prime(ring: Ring, r: int) -> Matrix | None:
    if r == 0:
        return None
    _, one_bar_inv = special_units(ring)
    block = Matrix(ring, [[0, -one_bar_inv], [1, 0]])
    return direct_sum(ring, *([block] * r))


def build_psi_tilde(ring: Ring, r: int) -> Matrix:
    """``r`` diagonal copies of ``[[0, 1], [-bar(1), 0]]``."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return _psi_tilde(ring, r)


def build_psi_tilde_prime(ring: Ring, r: int) -> Matrix:
    """``r`` diagonal copies of ``[[0, -bar(1)^-1], [1, 0]]``, the inverse of :func:`build_psi_tilde`."""
    if r < 1:
        raise ValueError("r must be >= 1")
    return _psi_tilde_prime(ring, r)


def standard_phi(ring: Ring, n: int, kind: str = "skew") -> tuple[Matrix | None, Matrix | None]:
    """Return ``(phi, phi_inv)`` for a named choice of ``phi``.

    ``skew`` is ``psi~_{n/2}`` (valid for every involution, ``n`` even);
    ``identity`` is ``I_n`` (anti-Hermitian only when ``bar(1) = -1``).
    """
    if n == 0:
        return None, None
    if kind == "identity":
        eye = Matrix.identity(ring, n)
        return eye, eye
    if kind == "skew":
        if n % 2:
            raise InvalidPhi("the skew-standard phi needs even n")
        return _psi_tilde(ring, n // 2), _psi_tilde_prime(ring, n // 2)
    raise ValueError(f"unknown phi kind {kind!r}")


@dataclass(frozen=True)
class SpaceConfig:
    """Data of the odd hyperbolic space ``H^m + V0`` with Gram matrix ``phi`` on ``V0``.

    Construction checks shapes and ``phi @ phi_inv == I``; call
    :meth:`validate` (or :func:`anti_hermitian_check`) to also require the
    form to be anti-Hermitian.
    """

    ring: Ring
    m: int
    n: int
    phi: Matrix | None = None
    phi_inv: Matrix | None = None

    def __post_init__(self):
        if self.m < 1 or self.n < 0:
            raise DimensionMismatch(f"need m >= 1 and n >= 0, got m={self.m}, n={self.n}")
        if self.n == 0:
            if self.phi is not None or self.phi_inv is not None:
                raise DimensionMismatch("phi must be empty when n = 0")
            return
        for name, mat in (("phi", self.phi), ("phi_inv", self.phi_inv)):
            if mat is None or mat.shape != (self.n, self.n):
                raise DimensionMismatch(f"{name} must be {self.n}x{self.n}")
            if mat.ring != self.ring:
                raise InvalidPhi(f"{name} lives over {mat.ring}, not {self.ring}")
        eye = Matrix.identity(self.ring, self.n)
        if self.phi @ self.phi_inv != eye or self.phi_inv @ self.phi != eye:
            raise InvalidPhi("phi_inv is not the inverse of phi")

    @classmethod
    def standard(cls, ring: Ring, m: int, n: int, phi: str = "skew") -> SpaceConfig:
        return cls(ring, m, n, *standard_phi(ring, n, phi))

    @property
    def dim(self) -> int:
        return self.n + 2 * self.m

    @cached_property
    def one_bar(self) -> Scalar:
        return special_units(self.ring)[0]

    @cached_property
    def one_bar_inv(self) -> Scalar:
        return special_units(self.ring)[1]

    @cached_property
    def Psi(self) -> Matrix:
        return direct_sum(self.ring, _psi_tilde(self.ring, self.m), self.phi)

    @cached_property
    def Psi_inv(self) -> Matrix:
        return direct_sum(self.ring, _psi_tilde_prime(self.ring, self.m), self.phi_inv)

    @cached_property
    def P(self) -> Matrix:
        return build_P(self)

    def validate(self) -> None:
        report = anti_hermitian_check(self)
        if not report.ok:
            raise InvalidPhi("; ".join(c.line() for c in report.failures()))

    # -- coordinates ---------------------------------------------------------------

    def vector(self, values: Sequence) -> Vector:
        if len(values) != self.dim:
            raise DimensionMismatch(f"expected {self.dim} coordinates, got {len(values)}")
        return tuple(self.ring(x) for x in values)

    def zero(self) -> Vector:
        return (self.ring.zero,) * self.dim

    def basis(self, i: int) -> Vector:
        """Hyperbolic-first basis vector ``b_i`` (0-based)."""
        return tuple(self.ring.one if j == i else self.ring.zero for j in range(self.dim))

    def e(self, i: int, order: BasisOrder = HYPERBOLIC_FIRST) -> Vector:
        """The hyperbolic vector ``e_i`` for ``i`` in ``{+-1, ..., +-m}``."""
        return self.basis(self.index_e(i, order))

    def v(self, k: int, order: BasisOrder = HYPERBOLIC_FIRST) -> Vector:
        """The ``k``-th basis vector of ``V0`` (1-based)."""
        return self.basis(self.index_v(k, order))

    def index_e(self, i: int, order: BasisOrder = HYPERBOLIC_FIRST) -> int:
        if i == 0 or abs(i) > self.m:
            raise BadIndex(f"e_{i} does not exist for m={self.m}")
        pos = 2 * (abs(i) - 1) + (0 if i > 0 else 1)
        return pos if order is HYPERBOLIC_FIRST else self.n + pos

    def index_v(self, k: int, order: BasisOrder = HYPERBOLIC_FIRST) -> int:
        if not 1 <= k <= self.n:
            raise BadIndex(f"v_{k} does not exist for n={self.n}")
        return 2 * self.m + k - 1 if order is HYPERBOLIC_FIRST else k - 1

    def to_hyperbolic(self, x: Vector, order: BasisOrder) -> Vector:
        if order is HYPERBOLIC_FIRST:
            return tuple(x)
        return self.P.mul_vec(x)

    def from_hyperbolic(self, x: Vector, order: BasisOrder) -> Vector:
        if order is HYPERBOLIC_FIRST:
            return tuple(x)
        return self.P.T.mul_vec(x)

    def matrix_to(self, M: Matrix, order: BasisOrder) -> Matrix:
        """Re-express a hyperbolic-first matrix in ``order`` (conjugation by ``P``)."""
        if order is HYPERBOLIC_FIRST:
            return M
        return self.P.T @ M @ self.P

    def matrix_from(self, M: Matrix, order: BasisOrder) -> Matrix:
        if order is HYPERBOLIC_FIRST:
            return M
        return self.P @ M @ self.P.T

    def random_vector(self, rng: random.Random, bound: int = 5) -> Vector:
        return tuple(self.ring.random(rng, bound) for _ in range(self.dim))

    def all_vectors(self):
        """Every vector of a finite space."""
        elems = list(self.ring.elements())
        return itertools.product(elems, repeat=self.dim)

    # -- JSON ------------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "ring": self.ring.to_json(),
            "m": self.m,
            "n": self.n,
            "phi": None if self.phi is None else self.phi.tolist(),
            "phi_inv": None if self.phi_inv is None else self.phi_inv.tolist(),
        }

    @classmethod
    def from_json(cls, data: dict) -> SpaceConfig:
        try:
            ring = ring_from_json(data["ring"])
            m, n = int(data["m"]), int(data["n"])
            phi = data.get("phi")
            phi_inv = data.get("phi_inv")

            def mat(x):
                if x is None:
                    return None
                if isinstance(x, dict):
                    return Matrix.from_json(x, ring)
                return Matrix(ring, [[ring.from_json(e) for e in row] for row in x])

            return cls(ring, m, n, mat(phi) if n else None, mat(phi_inv) if n else None)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, (DimensionMismatch, InvalidPhi, ParseError)):
                raise
            raise ParseError(f"bad space config JSON: {exc}") from None


def build_Psi(cfg: SpaceConfig) -> Matrix:
    return cfg.Psi


def build_Psi_inv(cfg: SpaceConfig) -> Matrix:
    return cfg.Psi_inv


def build_P(cfg: SpaceConfig) -> Matrix:
    """Permutation ``[[0_{2m x n}, I_2m], [I_n, 0_{n x 2m}]]`` taking module-first to hyperbolic-first coordinates."""
    m2, n = 2 * cfg.m, cfg.n
    rows = []
    for i in range(cfg.dim):
        j = n + i if i < m2 else i - m2
        rows.append([1 if c == j else 0 for c in range(cfg.dim)])
    return Matrix(cfg.ring, rows)


def blocks(cfg: SpaceConfig) -> tuple[Vector, Vector, Matrix, Matrix]:
    """``(c, d, mu, rho)`` with ``Psi = [[0, c], [-bar(1) c^t, mu]]`` and ``Psi^-1 = [[0, d], [-bar(1) d^t, rho]]``.

    ``mu`` and ``rho`` are the trailing principal submatrices of ``Psi`` and
    ``Psi^-1`` (for ``m = n = ...`` degenerate cases they may be ``1x1`` zero).
    """
    c = cfg.Psi.row_at(0)[1:]
    d = cfg.Psi_inv.row_at(0)[1:]
    return c, d, trailing_submatrix(cfg.Psi, 1), trailing_submatrix(cfg.Psi_inv, 1)


# -- the form ------------------------------------------------------------------------


def inner(cfg: SpaceConfig, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    """``<u, v> = bar(1)^-1 * bar(u)^t Psi v`` in hyperbolic-first coordinates."""
    if len(u) != cfg.dim or len(v) != cfg.dim:
        raise DimensionMismatch(f"vectors must have length {cfg.dim}")
    return cfg.one_bar_inv * dot(vec_bar(u), cfg.Psi.mul_vec(v))


def gram_form(cfg: SpaceConfig, G: Matrix, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    """``bar(1)^-1 * bar(u)^t G v`` for an arbitrary Gram matrix ``G``."""
    return cfg.one_bar_inv * dot(vec_bar(u), G.mul_vec(v))


def q_small(cfg: SpaceConfig, w: Sequence[Scalar]) -> Scalar:
    """Inner square of ``w`` in the complement of the first hyperbolic pair.

    ``w`` has length ``n + 2m - 2`` and is paired against ``psi~_{m-1} + phi``.
    """
    if len(w) != cfg.dim - 2:
        raise DimensionMismatch(f"expected {cfg.dim - 2} coordinates, got {len(w)}")
    if not w:
        return cfg.ring.zero
    gram = direct_sum(cfg.ring, _psi_tilde(cfg.ring, cfg.m - 1), cfg.phi)
    w = tuple(cfg.ring(x) for x in w)
    return gram_form(cfg, gram, w, w)


def anti_hermitian_check(cfg: SpaceConfig, samples: int = 50, seed: int = 0) -> Report:
    """Check ``Psi == -bar(Psi)^t`` and, on random pairs, ``<u, v> == -bar(<v, u>)``."""
    report = Report(f"anti-Hermitian form on m={cfg.m}, n={cfg.n} over {cfg.ring}")
    Psi = cfg.Psi
    target = -bar_transpose(Psi)
    witness = next(
        ((i, j) for i in range(cfg.dim) for j in range(cfg.dim) if Psi[i, j] != target[i, j]), None
    )
    report.add(
        "Psi == -bar(Psi)^t",
        witness is None,
        witness and f"entry {witness}: {Psi[witness]} vs {target[witness]}",
    )
    rng = random.Random(seed)
    pairs = [(cfg.random_vector(rng), cfg.random_vector(rng)) for _ in range(samples)]
    # basis pairs make the vector-level check decisive, not just probabilistic
    pairs += [(cfg.basis(i), cfg.basis(j)) for i in range(cfg.dim) for j in range(cfg.dim)]
    bad = next(((u, v) for u, v in pairs if inner(cfg, u, v) != -inner(cfg, v, u).bar()), None)
    report.add(
        "<u,v> == -bar(<v,u>)",
        bad is None,
        bad and f"u={[str(x) for x in bad[0]]}, v={[str(x) for x in bad[1]]}",
    )
    return report


# -- the Heisenberg group --------------------------------------------------------------


@dataclass(frozen=True)
class HeisElem:
    u: Vector
    r: Scalar

    def to_json(self) -> dict:
        return {"u": [x.to_json() for x in self.u], "r": self.r.to_json()}

    @classmethod
    def from_json(cls, cfg: SpaceConfig, data: dict) -> HeisElem:
        try:
            u = tuple(cfg.ring.from_json(x) for x in data["u"])
            return heis(cfg, u, cfg.ring.from_json(data["r"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad Heisenberg element JSON: {exc}") from None

    def __str__(self):
        return f"([{', '.join(str(x) for x in self.u)}], {self.r})"


def heis(cfg: SpaceConfig, u: Sequence, r) -> HeisElem:
    return HeisElem(cfg.vector(u), cfg.ring(r))


def heis_zero(cfg: SpaceConfig) -> HeisElem:
    return HeisElem(cfg.zero(), cfg.ring.zero)


def heis_add(cfg: SpaceConfig, x: HeisElem, y: HeisElem) -> HeisElem:
    """``(u, r) + (v, s) = (u + v, r + s + <u, v>)``."""
    return HeisElem(vec_add(x.u, y.u), x.r + y.r + inner(cfg, x.u, y.u))


def heis_neg(cfg: SpaceConfig, x: HeisElem) -> HeisElem:
    """``-(u, r) = (-u, -r + <u, u>)``."""
    return HeisElem(tuple(-a for a in x.u), -x.r + inner(cfg, x.u, x.u))


def heis_act(cfg: SpaceConfig, x: HeisElem, s) -> HeisElem:
    """``(u, r) <- s = (u s, bar(s) bar(1)^-1 r s)``."""
    s = cfg.ring(s)
    return HeisElem(tuple(a * s for a in x.u), s.bar() * cfg.one_bar_inv * x.r * s)


def heis_trace(cfg: SpaceConfig, x: HeisElem) -> Scalar:
    """``tr((u, r)) = r - bar(r) - <u, u>``."""
    return x.r - x.r.bar() - inner(cfg, x.u, x.u)


def in_L_max(cfg: SpaceConfig, x: HeisElem) -> bool:
    return heis_trace(cfg, x).is_zero()


def _is_bar_symmetrization(ring: Ring, r: Scalar) -> bool:
    """Is ``r = s + bar(s)`` for some ``s``?"""
    if ring.finite:
        return any(s + s.bar() == r for s in ring.elements())
    if ring.involution == NEGATION:
        return r.is_zero()
    if ring.involution == IDENTITY:
        v = r.value
        return all(x % 2 == 0 for x in v) if ring.descriptor == GAUSS else v % 2 == 0
    # Z[i] with z -> i*conj(z): (a + bi) + (b + ai) = (a + b)(1 + i)
    assert ring.descriptor == GAUSS
    re_, im = r.value
    return re_ == im


def in_L_min(cfg: SpaceConfig, x: HeisElem) -> bool:
    if any(not a.is_zero() for a in x.u):
        return False
    return _is_bar_symmetrization(cfg.ring, x.r)


def in_L_ev(cfg: SpaceConfig, r) -> bool:
    """``(0, r)`` lies in the maximal form parameter, i.e. ``r == bar(r)``."""
    r = cfg.ring(r)
    return r == r.bar()


__all__ = [
    "BasisOrder", "HYPERBOLIC_FIRST", "MODULE_FIRST", "SpaceConfig", "HeisElem",
    "build_psi_tilde", "build_psi_tilde_prime", "build_Psi", "build_Psi_inv", "build_P", "blocks",
    "standard_phi", "inner", "gram_form", "q_small", "anti_hermitian_check", "heis", "heis_zero",
    "heis_add", "heis_neg", "heis_act", "heis_trace", "in_L_max", "in_L_min", "in_L_ev",
]
