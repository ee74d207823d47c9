"""Eichler-Siegel-Dickson transvections and unitary membership checks."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadCoordinate, BadIndex, DimensionMismatch, InvalidFormParameter, ParseError
from .matrix import Matrix, vec_bar, vec_scale, vec_sub
from .rings import Ring, Scalar
from .space import (
    HYPERBOLIC_FIRST,
    MODULE_FIRST,
    BasisOrder,
    SpaceConfig,
    heis,
    heis_trace,
    in_L_ev,
    in_L_max,
    inner,
)


def epsilon(ring: Ring, i: int) -> Scalar:
    """``bar(1)^-1`` for ``i > 0`` and ``-1`` for ``i < 0``."""
    if i == 0:
        raise BadIndex("epsilon is undefined at index 0")
    if i > 0:
        return ring.one.bar().inv()
    return -ring.one


def _check_len(cfg: SpaceConfig, *vectors) -> None:
    for x in vectors:
        if len(x) != cfg.dim:
            raise DimensionMismatch(f"expected vectors of length {cfg.dim}, got {len(x)}")


def esd_matrix(cfg: SpaceConfig, u, v, r, order: BasisOrder = HYPERBOLIC_FIRST) -> Matrix:
    """Matrix of ``w -> w + u bar(1)^-1 (<v,w> + r<u,w>) + v<u,w>``.

    ``u``, ``v`` and the result are all expressed in ``order``.
    """
    _check_len(cfg, u, v)
    ring = cfg.ring
    u = cfg.to_hyperbolic(cfg.vector(u), order)
    v = cfg.to_hyperbolic(cfg.vector(v), order)
    r = ring(r)
    obi = cfg.one_bar_inv
    # <x, b_j> = bar(1)^-1 (bar(x)^t Psi)_j
    u_row = cfg.Psi.vec_mul(vec_bar(u))
    v_row = cfg.Psi.vec_mul(vec_bar(v))
    cols = []
    for j in range(cfg.dim):
        uw = obi * u_row[j]
        vw = obi * v_row[j]
        cu = obi * (vw + r * uw)
        col = [u[t] * cu + v[t] * uw for t in range(cfg.dim)]
        col[j] = col[j] + ring.one
        cols.append(col)
    return cfg.matrix_to(Matrix(ring, zip(*cols)), order)


def esd_validate(cfg: SpaceConfig, u, v, r, order: BasisOrder = HYPERBOLIC_FIRST) -> bool:
    """True iff ``<u,v> = 0``, ``(u,0)`` and ``(v,r)`` lie in the maximal form parameter."""
    if len(u) != cfg.dim or len(v) != cfg.dim:
        return False
    u = cfg.to_hyperbolic(cfg.vector(u), order)
    v = cfg.to_hyperbolic(cfg.vector(v), order)
    r = cfg.ring(r)
    return (
        inner(cfg, u, v).is_zero()
        and in_L_max(cfg, heis(cfg, u, cfg.ring.zero))
        and in_L_max(cfg, heis(cfg, v, r))
    )


# -- the generators T_1 and T_-1 (module-first order) -----------------------------------


def _split_module_first(cfg: SpaceConfig, u: Sequence[Scalar]):
    """Return ``(t, b)`` with ``t`` the V0 part and ``b(j)`` the ``e_j`` coordinate."""
    t = [u[cfg.index_v(k, MODULE_FIRST)] for k in range(1, cfg.n + 1)]

    def b(j):
        return u[cfg.index_e(j, MODULE_FIRST)]

    return t, b


def t_plus1(cfg: SpaceConfig, u, a) -> Matrix:
    """Matrix of ``T_1(u, a)`` in module-first order.

    Built entry by entry from the explicit form; equals
    ``esd_matrix(e_1, -u, -a)``. The ``e_-1`` coordinate of ``u`` must vanish.
    """
    _check_len(cfg, u)
    ring = cfg.ring
    u = cfg.vector(u)
    a = ring(a)
    t, b = _split_module_first(cfg, u)
    if not b(-1).is_zero():
        raise BadCoordinate("T_1(u, a) needs u with zero e_-1 coordinate")
    obi = cfg.one_bar_inv
    obi2 = obi * obi
    n, m = cfg.n, cfg.m
    rows = Matrix.identity(ring, cfg.dim).tolist()
    r1, c1 = cfg.index_e(1, MODULE_FIRST), cfg.index_e(-1, MODULE_FIRST)
    for k in range(n):
        rows[k][c1] = -t[k]
        rows[r1][k] = -obi2 * sum((t[j].bar() * cfg.phi[j, k] for j in range(n)), ring.zero)
    rows[r1][c1] = -(b(1).bar() * obi2 + a * obi + b(1))
    for j in range(2, m + 1):
        pj, qj = cfg.index_e(j, MODULE_FIRST), cfg.index_e(-j, MODULE_FIRST)
        rows[pj][c1] = -b(j)
        rows[qj][c1] = -b(-j)
        rows[r1][pj] = obi * b(-j).bar()
        rows[r1][qj] = -obi2 * b(j).bar()
    return Matrix(ring, rows)


def t_minus1(cfg: SpaceConfig, u, a) -> Matrix:
    """Matrix of ``T_-1(u, a)`` in module-first order.

    Equals ``esd_matrix(e_-1, u bar(1)^-1, -a)``. The ``e_1`` coordinate of
    ``u`` must vanish.
    """
    _check_len(cfg, u)
    ring = cfg.ring
    u = cfg.vector(u)
    a = ring(a)
    t, b = _split_module_first(cfg, u)
    if not b(1).is_zero():
        raise BadCoordinate("T_-1(u, a) needs u with zero e_1 coordinate")
    obi = cfg.one_bar_inv
    n, m = cfg.n, cfg.m
    rows = Matrix.identity(ring, cfg.dim).tolist()
    r1, c1 = cfg.index_e(-1, MODULE_FIRST), cfg.index_e(1, MODULE_FIRST)
    for k in range(n):
        rows[k][c1] = -t[k]
        rows[r1][k] = obi * sum((t[j].bar() * cfg.phi[j, k] for j in range(n)), ring.zero)
    # the corner entry carries a itself, not a * bar(1)
    rows[r1][c1] = -b(-1).bar() + a - b(-1)
    for j in range(2, m + 1):
        pj, qj = cfg.index_e(j, MODULE_FIRST), cfg.index_e(-j, MODULE_FIRST)
        rows[pj][c1] = -b(j)
        rows[qj][c1] = -b(-j)
        rows[r1][pj] = -b(-j).bar()
        rows[r1][qj] = obi * b(j).bar()
    return Matrix(ring, rows)


def t_plus1_esd(cfg: SpaceConfig, u, a) -> Matrix:
    """``T_1(u, a)`` through its defining transvection ``T_{e_1, -u}(-a)``."""
    u = cfg.vector(u)
    return esd_matrix(cfg, cfg.e(1, MODULE_FIRST), tuple(-x for x in u), -cfg.ring(a), MODULE_FIRST)


def t_minus1_esd(cfg: SpaceConfig, u, a) -> Matrix:
    """``T_-1(u, a)`` through its defining transvection ``T_{e_-1, u bar(1)^-1}(-a)``."""
    u = cfg.vector(u)
    return esd_matrix(
        cfg, cfg.e(-1, MODULE_FIRST), vec_scale(u, cfg.one_bar_inv), -cfg.ring(a), MODULE_FIRST
    )


def generator_is_unitary(cfg: SpaceConfig, u, a) -> bool:
    """Whether ``T_{+-1}(u, a)`` is a unitary transvection.

    The defining transvection has parameter ``(-u, -a)`` (resp. a unit
    multiple of ``(u, -a)``), so the certifying pair is ``(u, -a)``.
    """
    return in_L_max(cfg, heis(cfg, cfg.to_hyperbolic(cfg.vector(u), MODULE_FIRST), -cfg.ring(a)))


# -- root transvections --------------------------------------------------------------

KINDS = ("ESD", "Short", "Ultrashort", "Long", "TPlus1", "TMinus1")


@dataclass(frozen=True)
class TransvectionSpec:
    """Description of one transvection; vectors are given in ``order``."""

    kind: str
    i: int | None = None
    j: int | None = None
    u: tuple | None = None
    v: tuple | None = None
    r: Scalar | int | None = None
    order: BasisOrder = HYPERBOLIC_FIRST

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown transvection kind {self.kind!r}")

    @classmethod
    def esd(cls, u, v, r, order=HYPERBOLIC_FIRST):
        return cls("ESD", u=tuple(u), v=tuple(v), r=r, order=order)

    @classmethod
    def short(cls, i, j, r, order=HYPERBOLIC_FIRST):
        return cls("Short", i=i, j=j, r=r, order=order)

    @classmethod
    def ultrashort(cls, i, u, r, order=HYPERBOLIC_FIRST):
        return cls("Ultrashort", i=i, u=tuple(u), r=r, order=order)

    @classmethod
    def long(cls, i, r, order=HYPERBOLIC_FIRST):
        return cls("Long", i=i, r=r, order=order)

    @classmethod
    def tplus1(cls, u, a, order=MODULE_FIRST):
        return cls("TPlus1", u=tuple(u), r=a, order=order)

    @classmethod
    def tminus1(cls, u, a, order=MODULE_FIRST):
        return cls("TMinus1", u=tuple(u), r=a, order=order)

    def to_json(self) -> dict:
        out = {"kind": self.kind, "order": self.order.value}
        for name in ("i", "j"):
            if getattr(self, name) is not None:
                out[name] = getattr(self, name)
        for name in ("u", "v"):
            vec = getattr(self, name)
            if vec is not None:
                out[name] = [x.to_json() if isinstance(x, Scalar) else x for x in vec]
        if self.r is not None:
            out["r"] = self.r.to_json() if isinstance(self.r, Scalar) else self.r
        return out

    @classmethod
    def from_json(cls, cfg: SpaceConfig, data: dict) -> TransvectionSpec:
        try:
            ring = cfg.ring

            def vec(x):
                return None if x is None else tuple(ring.from_json(e) for e in x)

            r = data.get("r")
            return cls(
                data["kind"],
                i=data.get("i"),
                j=data.get("j"),
                u=vec(data.get("u")),
                v=vec(data.get("v")),
                r=None if r is None else ring.from_json(r),
                order=BasisOrder(data.get("order", HYPERBOLIC_FIRST.value)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad transvection JSON: {exc}") from None


def _check_index(cfg: SpaceConfig, i) -> None:
    if not isinstance(i, int) or i == 0 or abs(i) > cfg.m:
        raise BadIndex(f"index {i} is outside +-1..+-{cfg.m}")


def root_transvection(cfg: SpaceConfig, spec: TransvectionSpec) -> Matrix:
    """Matrix of a root transvection, expressed in ``spec.order``.

    * ``Short(i, j, r) = T_{e_-j, -e_i r eps_j}(0)`` for ``i != +-j``;
    * ``Ultrashort(i, u, r) = T_{e_i, u eps_-i}(-bar(eps_-i) bar(1)^-1 r eps_-i)``;
    * ``Long(i, r) = Ultrashort(i, 0, r)``.

    An ultrashort transvection is unitary exactly when ``(u, -r)`` lies in
    the maximal form parameter; that is the membership enforced here.
    """
    ring = cfg.ring
    order = spec.order
    kind = spec.kind
    if kind == "ESD":
        return esd_matrix(cfg, spec.u, spec.v, spec.r, order)
    if kind in ("TPlus1", "TMinus1"):
        u = cfg.from_hyperbolic(cfg.to_hyperbolic(cfg.vector(spec.u), order), MODULE_FIRST)
        build = t_plus1 if kind == "TPlus1" else t_minus1
        return cfg.matrix_to(cfg.matrix_from(build(cfg, u, spec.r), MODULE_FIRST), order)
    if kind == "Short":
        i, j = spec.i, spec.j
        _check_index(cfg, i)
        _check_index(cfg, j)
        if i == j or i == -j:
            raise BadIndex(f"short root needs i != +-j, got ({i}, {j})")
        r = ring(spec.r)
        v = vec_scale(cfg.e(i), -(r * epsilon(ring, j)))
        return cfg.matrix_to(esd_matrix(cfg, cfg.e(-j), v, 0), order)
    if kind in ("Ultrashort", "Long"):
        i = spec.i
        _check_index(cfg, i)
        r = ring(spec.r)
        if kind == "Long":
            if not in_L_ev(cfg, r):
                raise InvalidFormParameter(f"long root parameter {r} is not bar-symmetric")
            u = cfg.zero()
        else:
            u = cfg.to_hyperbolic(cfg.vector(spec.u), order)
            if not u[cfg.index_e(-i)].is_zero():
                raise BadCoordinate(f"ultrashort T_{i} needs u with zero e_{-i} coordinate")
            if not in_L_max(cfg, heis(cfg, u, -r)):
                raise InvalidFormParameter(f"(u, -r) is not in the maximal form parameter for r={r}")
        eps = epsilon(ring, -i)
        param = -(eps.bar() * cfg.one_bar_inv * r * eps)
        return cfg.matrix_to(esd_matrix(cfg, cfg.e(i), vec_scale(u, eps), param), order)
    raise ValueError(f"unsupported kind {kind!r}")


# -- membership checks ---------------------------------------------------------------


def _check_square(cfg: SpaceConfig, M: Matrix) -> None:
    if M.shape != (cfg.dim, cfg.dim):
        raise DimensionMismatch(f"expected a {cfg.dim}x{cfg.dim} matrix, got {M.shape}")


def isometry_check(cfg: SpaceConfig, M: Matrix) -> bool:
    """True iff ``bar(1)^-1 * bar(M)^t Psi M == Psi`` (hyperbolic-first ``M``)."""
    _check_square(cfg, M)
    return (M.bar_transpose() @ cfg.Psi @ M).scale(cfg.one_bar_inv) == cfg.Psi


def congruence_defect(cfg: SpaceConfig, M: Matrix, x) -> Scalar:
    """``tr(Mx - x, <x - Mx, x>)``, evaluated straight from the definition."""
    x = cfg.vector(x)
    y = vec_sub(M.mul_vec(x), x)
    return heis_trace(cfg, heis(cfg, y, inner(cfg, tuple(-c for c in y), x)))


def defect_gram(cfg: SpaceConfig, M: Matrix) -> Matrix:
    """Gram matrix ``D`` with ``defect(x) = bar(1)^-1 bar(x)^t D x``.

    For an anti-Hermitian form the defect equals ``<x,x> - <Mx,Mx>``, hence
    ``D = Psi - bar(1)^-1 bar(M)^t Psi M``.
    """
    _check_square(cfg, M)
    return cfg.Psi - (M.bar_transpose() @ cfg.Psi @ M).scale(cfg.one_bar_inv)


def _spanning_set(cfg: SpaceConfig):
    """Basis vectors plus ``g b_i + h b_j`` (``i < j``) for additive generators ``g, h``.

    Over rings additively generated by 1 this is the familiar set of basis
    vectors and pairwise sums. Gaussian rings need the extra multiples of
    ``i`` because the bar map is not the identity on the generators.
    """
    gens = cfg.ring.additive_generators()
    zero = cfg.ring.zero
    for i in range(cfg.dim):
        yield cfg.basis(i)
    for i in range(cfg.dim):
        for j in range(i + 1, cfg.dim):
            for g in gens:
                for h in gens:
                    x = [zero] * cfg.dim
                    x[i] = g
                    x[j] = h
                    yield tuple(x)


def congruent_mod_Lmax(cfg: SpaceConfig, M: Matrix, method: str = "gram") -> bool:
    """Whether ``M`` is congruent to the identity modulo the maximal form parameter.

    ``method``:
      * ``"gram"``: read the decision off :func:`defect_gram` (fast default);
      * ``"spanning"``: evaluate the defect on the polarization spanning set;
      * ``"exhaustive"``: evaluate it on every vector (finite rings only).
    """
    _check_square(cfg, M)
    if method == "gram":
        D = defect_gram(cfg, M)
        if any(not D[i, i].is_zero() for i in range(cfg.dim)):
            return False
        gens = cfg.ring.additive_generators()
        for i in range(cfg.dim):
            for j in range(i + 1, cfg.dim):
                dij, dji = D[i, j], D[j, i]
                if dij.is_zero() and dji.is_zero():
                    continue
                for g in gens:
                    for h in gens:
                        if not (g.bar() * dij * h + h.bar() * dji * g).is_zero():
                            return False
        return True
    if method == "spanning":
        return all(congruence_defect(cfg, M, x).is_zero() for x in _spanning_set(cfg))
    if method == "exhaustive":
        if not cfg.ring.finite:
            raise ValueError("exhaustive congruence check needs a finite ring")
        return all(congruence_defect(cfg, M, x).is_zero() for x in cfg.all_vectors())
    raise ValueError(f"unknown method {method!r}")


def is_unitary(cfg: SpaceConfig, M: Matrix) -> bool:
    """Isometry that is congruent to the identity modulo the maximal form parameter."""
    return isometry_check(cfg, M) and congruent_mod_Lmax(cfg, M)
