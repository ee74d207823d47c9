"""Vaserstein-type matrices ``L(v)`` and ``L(v)*`` and their links to ``T_{+-1}``.

A vector ``v = (a_1, ..., a_{n+2m-1})`` fills the hyperbolic-first slots
after ``e_1``: ``a_1`` sits at ``e_-1``, then ``a_2, a_3`` at ``e_2, e_-2``
and so on, and ``a_{2m}, ..., a_{n+2m-1}`` at ``v_1, ..., v_n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    BadCoordinate,
    DimensionMismatch,
    InternalInvariantViolation,
    InvalidFormParameter,
    ParseError,
)
from .matrix import ElementaryWord, Matrix, block2, direct_sum, dot, vec_bar
from .rings import Scalar, solve_bar_difference
from .space import (
    MODULE_FIRST,
    HeisElem,
    SpaceConfig,
    _psi_tilde,
    _psi_tilde_prime,
    blocks,
    build_P,
    heis,
    q_small,
)
from .transvections import generator_is_unitary, t_minus1, t_plus1

__all__ = [
    "VVector",
    "ConjugationResult",
    "build_alpha",
    "build_beta",
    "build_L",
    "build_L_star",
    "build_P",
    "condition_D",
    "condition_E",
    "zero_products",
    "factor_L",
    "factor_L_star",
    "conj_L_to_transvection",
    "conj_Lstar_to_transvection",
    "transvection_to_vaserstein",
    "solve_condition_D",
    "TPLUS1",
    "TMINUS1",
]


@dataclass(frozen=True)
class VVector:
    entries: tuple

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def to_json(self) -> dict:
        return {"v": [x.to_json() for x in self.entries]}

    @classmethod
    def from_json(cls, cfg: SpaceConfig, data) -> VVector:
        try:
            values = data["v"] if isinstance(data, dict) else data
            return cls(tuple(cfg.ring.from_json(x) for x in values))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad vector JSON: {exc}") from None


def _vv(cfg: SpaceConfig, v) -> tuple:
    if isinstance(v, VVector):
        v = v.entries
    if len(v) != cfg.dim - 1:
        raise DimensionMismatch(f"expected {cfg.dim - 1} entries, got {len(v)}")
    return tuple(cfg.ring(x) for x in v)


# -- the matrices ----------------------------------------------------------------------


def build_alpha(cfg: SpaceConfig, v) -> Matrix:
    """``I + d^t (bar(v) mu)``."""
    v = _vv(cfg, v)
    ring = cfg.ring
    _, d, mu, _ = blocks(cfg)
    row = mu.vec_mul(vec_bar(v))
    return Matrix.identity(ring, cfg.dim - 1) + Matrix.column(ring, d) @ Matrix.row(ring, row)


def build_beta(cfg: SpaceConfig, v) -> Matrix:
    """``I - bar(1)^-1 (rho bar(v)^t) c``."""
    v = _vv(cfg, v)
    ring = cfg.ring
    c, _, _, rho = blocks(cfg)
    col = rho.mul_vec(vec_bar(v))
    outer = Matrix.column(ring, col) @ Matrix.row(ring, c)
    return Matrix.identity(ring, cfg.dim - 1) - outer.scale(cfg.one_bar_inv)


def build_L(cfg: SpaceConfig, v) -> Matrix:
    """``[[1, 0], [v^t, alpha]]`` in hyperbolic-first order."""
    v = _vv(cfg, v)
    ring = cfg.ring
    k = cfg.dim - 1
    return block2(Matrix(ring, [[1]]), Matrix.zeros(ring, 1, k), Matrix.column(ring, v),
                  build_alpha(cfg, v))


def build_L_star(cfg: SpaceConfig, v) -> Matrix:
    """``[[1, v], [0, beta]]`` in hyperbolic-first order."""
    v = _vv(cfg, v)
    ring = cfg.ring
    k = cfg.dim - 1
    return block2(Matrix(ring, [[1]]), Matrix.row(ring, v), Matrix.zeros(ring, k, 1),
                  build_beta(cfg, v))


# -- conditions ----------------------------------------------------------------------


def condition_D(cfg: SpaceConfig, v) -> bool:
    """``bar(a_1) - a_1 = <w, w>`` with ``w = (a_2, ...)`` paired against ``psi~_{m-1} + phi``."""
    v = _vv(cfg, v)
    return v[0].bar() - v[0] == q_small(cfg, v[1:])


def condition_E(cfg: SpaceConfig, v) -> bool:
    """``bar(bar(1) a_1) - bar(1) a_1 = bar(w) G^t w^t`` with ``G = psi~'_{m-1} + bar(1)^-2 phi``."""
    v = _vv(cfg, v)
    ring = cfg.ring
    ob, obi = cfg.one_bar, cfg.one_bar_inv
    x = ob * v[0]
    lhs = x.bar() - x
    w = v[1:]
    if not w:
        return lhs.is_zero()
    phi = cfg.phi.scale(obi * obi) if cfg.n else None
    G = direct_sum(ring, _psi_tilde_prime(ring, cfg.m - 1), phi)
    return lhs == dot(vec_bar(w), G.T.mul_vec(w))


def solve_condition_D(cfg: SpaceConfig, v) -> VVector:
    """Replace ``a_1`` so that condition D holds; raises ``ConditionUnsolvable``."""
    v = _vv(cfg, v)
    a1 = solve_bar_difference(cfg.ring, q_small(cfg, v[1:]))
    return VVector((a1,) + v[1:])


def zero_products(cfg: SpaceConfig, v) -> tuple[Scalar, tuple]:
    """``(bar(v) mu d^t, c rho)``; both vanish for every well-formed space."""
    v = _vv(cfg, v)
    c, d, mu, rho = blocks(cfg)
    return dot(mu.vec_mul(vec_bar(v)), d), rho.vec_mul(c)


# -- factorization into elementary transvections ---------------------------------------


def _row_factors(y: Sequence[Scalar], sign: int = 1) -> list:
    # [[1, y], [0, I]] as a product of commuting E_{1, k+2}(y_k)
    return [(1, k + 2, y_k if sign > 0 else -y_k) for k, y_k in enumerate(y) if not y_k.is_zero()]


def _col_factors(x: Sequence[Scalar], sign: int = 1) -> list:
    # [[1, 0], [x, I]] as a product of commuting E_{k+2, 1}(x_k)
    return [(k + 2, 1, x_k if sign > 0 else -x_k) for k, x_k in enumerate(x) if not x_k.is_zero()]


def factor_L(cfg: SpaceConfig, v) -> ElementaryWord:
    """Elementary word whose product is ``L(v)``.

    ``L(v) = [[1, 0], [v^t, I]] * diag(1, alpha)`` and, because
    ``bar(v) mu d^t = 0``, ``diag(1, alpha)`` is the commutator
    ``X Y X^-1 Y^-1`` with ``X = [[1, y], [0, I]]``, ``y = -bar(v) mu`` and
    ``Y = [[1, 0], [d^t, I]]``.
    """
    v = _vv(cfg, v)
    _, d, mu, _ = blocks(cfg)
    y = tuple(-x for x in mu.vec_mul(vec_bar(v)))
    if not dot(y, d).is_zero():
        raise InternalInvariantViolation("bar(v) mu d^t is not zero; the space data is corrupt")
    factors = _col_factors(v)
    factors += _row_factors(y) + _col_factors(d) + _row_factors(y, -1) + _col_factors(d, -1)
    return ElementaryWord(cfg.ring, cfg.dim, tuple(factors))


def factor_L_star(cfg: SpaceConfig, v) -> ElementaryWord:
    """Elementary word whose product is ``L(v)*``.

    ``L(v)* = diag(1, beta) * [[1, v], [0, I]]`` and, because ``c rho = 0``,
    ``diag(1, beta)`` is the commutator ``A B A^-1 B^-1`` with
    ``A = [[1, 0], [x, I]]``, ``x = -bar(1)^-1 rho bar(v)^t`` and
    ``B = [[1, c], [0, I]]``.
    """
    v = _vv(cfg, v)
    c, _, _, rho = blocks(cfg)
    if any(not e.is_zero() for e in rho.vec_mul(c)):
        raise InternalInvariantViolation("c rho is not zero; the space data is corrupt")
    obi = cfg.one_bar_inv
    x = tuple(-(obi * e) for e in rho.mul_vec(vec_bar(v)))
    factors = _col_factors(x) + _row_factors(c) + _col_factors(x, -1) + _row_factors(c, -1)
    factors += _row_factors(v)
    return ElementaryWord(cfg.ring, cfg.dim, tuple(factors))


# -- conjugation by P --------------------------------------------------------------------

TPLUS1 = "TPlus1"
TMINUS1 = "TMinus1"


@dataclass(frozen=True)
class ConjugationResult:
    """``P^t M P = T_{+-1}(u, a)`` with ``u`` in module-first order.

    ``heis_witness`` is the pair ``(u, -a)`` in hyperbolic-first
    coordinates. It lies in the maximal form parameter exactly when the
    generator is a unitary transvection.
    """

    kind: str
    u: tuple
    a: Scalar
    heis_witness: HeisElem

    def matrix(self, cfg: SpaceConfig) -> Matrix:
        build = t_plus1 if self.kind == TPLUS1 else t_minus1
        return build(cfg, self.u, self.a)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "u": [x.to_json() for x in self.u],
            "a": self.a.to_json(),
            "witness": self.heis_witness.to_json(),
        }

    @classmethod
    def from_json(cls, cfg: SpaceConfig, data: dict) -> ConjugationResult:
        try:
            ring = cfg.ring
            kind = data["kind"]
            if kind not in (TPLUS1, TMINUS1):
                raise ValueError(f"unknown kind {kind!r}")
            return cls(
                kind,
                tuple(ring.from_json(x) for x in data["u"]),
                ring.from_json(data["a"]),
                HeisElem.from_json(cfg, data["witness"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"bad conjugation JSON: {exc}") from None


def _result(cfg: SpaceConfig, kind: str, u_mf: tuple, a: Scalar) -> ConjugationResult:
    u_hf = cfg.to_hyperbolic(u_mf, MODULE_FIRST)
    return ConjugationResult(kind, u_mf, a, heis(cfg, u_hf, -a))


def conj_L_to_transvection(cfg: SpaceConfig, v) -> ConjugationResult:
    """``P^t L(v) P = T_-1(u_1, a_1)``.

    ``u_1 = -a_{2m} v_1 - ... - a_{n+2m-1} v_n - a_2 e_2 - a_3 e_-2 - ... - a_{2m-1} e_-m``.
    """
    v = _vv(cfg, v)
    ring = cfg.ring
    m, n = cfg.m, cfg.n
    u = [ring.zero] * cfg.dim
    for k in range(1, n + 1):
        u[cfg.index_v(k, MODULE_FIRST)] = -v[2 * m - 2 + k]
    for j in range(2, m + 1):
        u[cfg.index_e(j, MODULE_FIRST)] = -v[2 * j - 3]
        u[cfg.index_e(-j, MODULE_FIRST)] = -v[2 * j - 2]
    return _result(cfg, TMINUS1, tuple(u), v[0])


def conj_Lstar_to_transvection(cfg: SpaceConfig, v) -> ConjugationResult:
    """``P^t L(v)* P = T_1(u_2, -bar(1) a_1)``.

    ``u_2`` has ``v_k`` coordinate ``bar(1)^-1 sum_j bar(a_{2m-1+j}) phi^-1_{kj}``,
    ``e_j`` coordinate ``-bar(1)^-2 bar(a_{2j-1})`` and ``e_-j`` coordinate
    ``bar(1)^-1 bar(a_{2j-2})`` for ``j = 2..m``.
    """
    v = _vv(cfg, v)
    ring = cfg.ring
    m, n = cfg.m, cfg.n
    obi = cfg.one_bar_inv
    vb = vec_bar(v)
    u = [ring.zero] * cfg.dim
    for k in range(1, n + 1):
        s = sum((vb[2 * m - 2 + j] * cfg.phi_inv[k - 1, j - 1] for j in range(1, n + 1)), ring.zero)
        u[cfg.index_v(k, MODULE_FIRST)] = obi * s
    for j in range(2, m + 1):
        u[cfg.index_e(j, MODULE_FIRST)] = -(obi * obi * vb[2 * j - 2])
        u[cfg.index_e(-j, MODULE_FIRST)] = obi * vb[2 * j - 3]
    return _result(cfg, TPLUS1, tuple(u), -(cfg.one_bar * v[0]))


def transvection_to_vaserstein(cfg: SpaceConfig, kind: str, u, a, require_unitary: bool = True) -> VVector:
    """Inverse of the two conjugations.

    For ``TMinus1`` returns ``w`` with ``P^t L(w) P = T_-1(u, a)``; for
    ``TPlus1`` returns ``w`` with ``P^t L(w)* P = T_1(u, a)``. ``u`` is in
    module-first order and must have zero ``e_1`` and ``e_-1`` coordinates.

    With ``require_unitary`` the generator must be unitary, i.e. ``(u, -a)``
    must lie in the maximal form parameter. The matrix identity itself holds
    without that hypothesis.
    """
    ring = cfg.ring
    if len(u) != cfg.dim:
        raise DimensionMismatch(f"expected {cfg.dim} coordinates, got {len(u)}")
    u = cfg.vector(u)
    a = ring(a)
    u_hf = cfg.to_hyperbolic(u, MODULE_FIRST)
    if not (u_hf[0].is_zero() and u_hf[1].is_zero()):
        raise BadCoordinate("u must have zero e_1 and e_-1 coordinates")
    if require_unitary and not generator_is_unitary(cfg, u, a):
        raise InvalidFormParameter("(u, -a) is not in the maximal form parameter")
    rest = u_hf[2:]
    if kind == TMINUS1:
        return VVector((a,) + tuple(-x for x in rest))
    if kind == TPLUS1:
        # u_2 restricted past e_-1 is bar(1)^-1 rho' bar(w); rho' has inverse psi~_{m-1} + phi
        ob = cfg.one_bar
        if rest:
            mu_rest = direct_sum(ring, _psi_tilde(ring, cfg.m - 1), cfg.phi)
            w = tuple((ob * x).bar() for x in mu_rest.mul_vec(rest))
        else:
            w = ()
        return VVector((-(cfg.one_bar_inv * a),) + w)
    raise ValueError(f"unknown kind {kind!r}")

