"""Seeded generators of random valid data (vectors, form parameters, ESD triples)."""
from __future__ import annotations

import random

from .errors import ConditionUnsolvable
from .matrix import dot, vec_add, vec_bar, vec_scale
from .rings import Scalar, solve_bar_difference
from .space import MODULE_FIRST, SpaceConfig, inner
from .transvections import esd_validate


def random_vvector(cfg: SpaceConfig, rng: random.Random, bound: int = 5) -> tuple:
    return tuple(cfg.ring.random(rng, bound) for _ in range(cfg.dim - 1))


def _symmetrized(cfg: SpaceConfig, rng: random.Random, bound: int) -> Scalar:
    s = cfg.ring.random(rng, bound)
    return s + s.bar()


def random_form_scalar(cfg: SpaceConfig, x, rng: random.Random, bound: int = 5) -> Scalar:
    """Random ``r`` with ``(x, r)`` in the maximal form parameter (``x`` hyperbolic-first).

    Raises :class:`ConditionUnsolvable` when no such ``r`` exists.
    """
    r = solve_bar_difference(cfg.ring, -inner(cfg, x, x))
    return r + _symmetrized(cfg, rng, bound)


def random_generator_pair(cfg: SpaceConfig, rng: random.Random, unitary: bool = True,
                          bound: int = 5, tries: int = 200) -> tuple[tuple, Scalar]:
    """Random ``(u, a)`` with zero ``e_1``, ``e_-1`` coordinates (``u`` module-first).

    With ``unitary`` the pair satisfies ``(u, -a)`` in the maximal form
    parameter, so ``T_{+-1}(u, a)`` is unitary. Otherwise ``(u, a)`` itself
    is in the maximal form parameter.
    """
    ring = cfg.ring
    for _ in range(tries):
        u = list(cfg.random_vector(rng, bound))
        u[cfg.index_e(1, MODULE_FIRST)] = ring.zero
        u[cfg.index_e(-1, MODULE_FIRST)] = ring.zero
        u = tuple(u)
        u_hf = cfg.to_hyperbolic(u, MODULE_FIRST)
        try:
            r = random_form_scalar(cfg, u_hf, rng, bound)
        except ConditionUnsolvable:
            continue
        return u, (-r if unitary else r)
    raise ConditionUnsolvable(f"no valid generator pair found in {tries} tries")


def random_esd_triple(cfg: SpaceConfig, rng: random.Random, bound: int = 5,
                      tries: int = 500) -> tuple[tuple, tuple, Scalar]:
    """Random ``(u, v, r)`` (hyperbolic-first) passing :func:`esd_validate`.

    ``u`` is a scaled hyperbolic basis vector, optionally mixed with an
    orthogonal isotropic partner. ``v`` is a random vector made orthogonal
    to ``u``: along a coordinate where ``u`` pairs to a unit if there is
    one, otherwise by clearing the coordinates that pair with ``u``.
    """
    ring = cfg.ring
    for _ in range(tries):
        i = rng.choice([k for k in range(-cfg.m, cfg.m + 1) if k])
        u = vec_scale(cfg.e(i), ring.random(rng, bound))
        if cfg.m > 1 and rng.random() < 0.5:
            j = rng.choice([k for k in range(-cfg.m, cfg.m + 1) if k not in (0, i, -i)])
            u = vec_add(u, vec_scale(cfg.e(j), ring.random(rng, bound)))
        if inner(cfg, u, u) != ring.zero:
            continue
        # pairing row: <u, b_k> for every basis vector
        row = tuple(cfg.one_bar_inv * x for x in cfg.Psi.vec_mul(vec_bar(u)))
        v = list(cfg.random_vector(rng, bound))
        s = dot(row, v)
        if not s.is_zero():
            k = next((k for k in range(cfg.dim) if row[k].is_unit()), None)
            if k is None:
                # no unit pairing: drop every coordinate that pairs with u
                v = [ring.zero if not row[t].is_zero() else v[t] for t in range(cfg.dim)]
            else:
                v[k] = v[k] - row[k].inv() * s
        v = tuple(v)
        try:
            r = random_form_scalar(cfg, v, rng, bound)
        except ConditionUnsolvable:
            continue
        if esd_validate(cfg, u, v, r):
            return u, v, r
    raise ConditionUnsolvable(f"no valid transvection triple found in {tries} tries")
