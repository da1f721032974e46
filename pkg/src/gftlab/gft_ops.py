"""The differential operator behind both function classes, and its inverses.

Everything in this module revolves around the operator

    T_a[f](z) = f'(z) + ((1 + e^{i a}) / 2) z f''(z),

acting on normalized analytic functions f(z) = z + sum a_n z^n of the unit
disc. On truncated series the operator is diagonal: the z^(n-1) coefficient
of T_a[f] is ``a_n * n * (n + 1 + (n - 1) e^{i a}) / 2``, and the factor
never vanishes for a in (-pi, pi], so the normalized inversion is exact.

Two classes are built on it. Members of the half-plane class R(a, beta)
satisfy Re T_a[f] > beta; members of the disc class L_a(b) satisfy
|T_a[f] - b| < b. Both are generated here by inverting the operator against
subordination targets: the half-plane map (1 + (1-2 beta) z)/(1 - z) for
the first, and the Moebius map phi_b(z) = (1 + z)/(1 + (1/b - 1) z) composed
with a monomial rotation for the second. Extreme members of the half-plane
class come from pure rotations and maximize every coefficient modulus.

Seeded generators draw simplex weights as normalized exponentials and circle
atoms as exp(2 pi i U) from ``numpy.random.default_rng(seed)`` (PCG64), so a
seed pins the member bit-for-bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .powser import TaylorSeries, compose, linear_combination

__all__ = [
    "RParams",
    "LParams",
    "SchurSpec",
    "cis",
    "apply_L",
    "solve_L",
    "halfplane_series",
    "phi_b_series",
    "extreme_function",
    "coeff_bound",
    "schur_series",
    "random_member_R",
    "random_member_L",
    "seeded_members_R",
    "seeded_schur_specs",
    "seeded_members_L",
    "UNIT_TOL",
]

UNIT_TOL = 1e-12


def cis(t: float) -> complex:
    """exp(i t), snapped to exactly -1 at t == pi.

    The snap makes the a = pi degeneracy structural: the operator weight
    (1 + e^{i a})/2 becomes exactly 0 and T_pi collapses to the plain
    derivative with no imaginary dust from sin(pi).
    """
    if t == math.pi:
        return -1 + 0j
    return complex(math.cos(t), math.sin(t))


@dataclass(frozen=True)
class RParams:
    """Parameters of the half-plane class: angle alpha, level beta."""

    alpha: float
    beta: float

    def __post_init__(self) -> None:
        if not -math.pi < self.alpha <= math.pi:
            raise ValueError("alpha must lie in (-pi, pi]")
        if not 0.0 <= self.beta < 1.0:
            raise ValueError("beta must lie in [0, 1)")


@dataclass(frozen=True)
class LParams:
    """Parameters of the disc class: angle alpha, disc parameter b > 1/2."""

    alpha: float
    b: float

    def __post_init__(self) -> None:
        if not -math.pi < self.alpha <= math.pi:
            raise ValueError("alpha must lie in (-pi, pi]")
        if not self.b > 0.5:
            raise ValueError("b must exceed 1/2")

    @property
    def c(self) -> float:
        """Derived Moebius coefficient 1/b - 1; |c| < 1 whenever b > 1/2."""
        return 1.0 / self.b - 1.0


@dataclass(frozen=True)
class SchurSpec:
    """Monomial rotation w(z) = x z**power with |x| = 1 and power >= 1.

    These are always valid Schwarz functions (w(0) = 0, |w| < 1 on the open
    disc) and keep truncated composition exactly closed.
    """

    x: complex
    power: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", complex(self.x))
        if abs(abs(self.x) - 1.0) > UNIT_TOL:
            raise ValueError("Schur rotation x must be unimodular")
        if self.power < 1:
            raise ValueError("Schur power must be >= 1")


def _operator_factors(max_n: int, alpha: float) -> np.ndarray:
    """Diagonal factors: entry n multiplies a_n, entry 0 is unused filler."""
    n = np.arange(max_n + 1, dtype=float)
    fac = n * (n + 1 + (n - 1) * cis(alpha)) / 2.0
    fac[0] = 1.0
    return fac


def apply_L(f: TaylorSeries, alpha: float) -> TaylorSeries:
    """Series of f' + ((1 + e^{i alpha})/2) z f''."""
    if f.order == 0:
        return TaylorSeries((0j,))
    fac = _operator_factors(f.order, alpha)
    return TaylorSeries(tuple(f.as_array()[1:] * fac[1:]))


def solve_L(g: TaylorSeries, alpha: float) -> TaylorSeries:
    """The normalized series f (f(0) = 0, f'(0) = 1) with apply_L(f) = g.

    Requires g(0) = 1; each coefficient is recovered as
    a_n = 2 g_{n-1} / (n (n + 1 + (n - 1) e^{i alpha})).
    """
    if abs(g.coeffs[0] - 1.0) > UNIT_TOL:
        raise ValueError("inversion requires g(0) = 1")
    fac = _operator_factors(g.order + 1, alpha)
    out = np.zeros(g.order + 2, dtype=complex)
    out[1:] = g.as_array() / fac[1:]
    return TaylorSeries(tuple(out))


def halfplane_series(beta: float, order: int) -> TaylorSeries:
    """Expansion of (1 + (1 - 2 beta) z)/(1 - z): maps the disc onto Re w > beta."""
    out = np.full(order + 1, 2.0 * (1.0 - beta), dtype=complex)
    out[0] = 1.0
    return TaylorSeries(tuple(out))


def phi_b_series(params: LParams, order: int) -> TaylorSeries:
    """Expansion of (1 + z)/(1 + c z), c = 1/b - 1.

    Coefficients are g_0 = 1 and g_k = (1 - c)(-c)^{k-1}; the image of the
    disc is the open disc |w - b| < b.
    """
    c = params.c
    out = np.zeros(order + 1, dtype=complex)
    out[0] = 1.0
    if order >= 1:
        k = np.arange(1, order + 1, dtype=float)
        out[1:] = (1.0 - c) * (-c) ** (k - 1)
    return TaylorSeries(tuple(out))


def extreme_function(x: complex, params: RParams, order: int) -> TaylorSeries:
    """Extreme member of the half-plane class for a unimodular x.

    Coefficients: a_1 = 1 and
    a_n = 4 (1 - beta) x^{n-1} / (n (n + 1 + (n - 1) e^{i alpha})).
    Equivalently solve_L applied to the rotated half-plane map.
    """
    x = complex(x)
    if abs(abs(x) - 1.0) > UNIT_TOL:
        raise ValueError("extreme-point parameter x must be unimodular")
    if order < 1:
        raise ValueError("order must be >= 1")
    out = np.zeros(order + 1, dtype=complex)
    out[1] = 1.0
    if order >= 2:
        n = np.arange(2, order + 1, dtype=float)
        denom = n * (n + 1 + (n - 1) * cis(params.alpha))
        out[2:] = 4.0 * (1.0 - params.beta) * x ** (n - 1) / denom
    return TaylorSeries(tuple(out))


def coeff_bound(n: int, params: RParams) -> float:
    """Sharp modulus bound on a_n over the half-plane class, n >= 2.

    Equals 4 (1 - beta) / (n sqrt(2 [n^2 + 1 + (n^2 - 1) cos alpha])); the
    extreme functions attain it for every n.
    """
    if n < 2:
        raise ValueError("coefficient bound is defined for n >= 2")
    radicand = 2.0 * (n * n + 1 + (n * n - 1) * math.cos(params.alpha))
    return 4.0 * (1.0 - params.beta) / (n * math.sqrt(radicand))


def schur_series(spec: SchurSpec) -> TaylorSeries:
    """Series of the monomial rotation w(z) = x z**power."""
    return TaylorSeries((0j,) * spec.power + (spec.x,))


def random_member_R(
    params: RParams, num_atoms: int, seed: int, order: int = 64
) -> TaylorSeries:
    """Seeded convex combination of extreme functions.

    Weights are uniform on the simplex (normalized exponential draws),
    atoms uniform on the circle; a fixed seed pins the member exactly.
    """
    if num_atoms < 1:
        raise ValueError("need at least one atom")
    rng = np.random.default_rng(seed)
    weights = rng.exponential(size=num_atoms)
    weights = weights / weights.sum()
    atoms = np.exp(2j * np.pi * rng.random(num_atoms))
    return linear_combination(
        (weights[i], extreme_function(complex(atoms[i]), params, order))
        for i in range(num_atoms)
    )


def random_member_L(
    params: LParams, schur: SchurSpec, order: int = 64
) -> TaylorSeries:
    """Disc-class member with operator image phi_b composed with the rotation."""
    target = compose(
        phi_b_series(params, order - 1), schur_series(schur), order - 1
    )
    return solve_L(target, params.alpha)


def seeded_members_R(
    params: RParams,
    num_members: int,
    seed: int,
    order: int = 64,
    atom_range: tuple[int, int] = (1, 6),
) -> list[TaylorSeries]:
    """Deterministic batch of half-plane members; atom counts and per-member
    seeds are drawn from one generator so the batch is a pure function of
    (params, num_members, seed, order)."""
    rng = np.random.default_rng(seed)
    lo, hi = atom_range
    members = []
    for _ in range(num_members):
        num_atoms = int(rng.integers(lo, hi + 1))
        member_seed = int(rng.integers(0, 2**63))
        members.append(random_member_R(params, num_atoms, member_seed, order))
    return members


def seeded_schur_specs(
    num: int, seed: int, max_power: int = 4
) -> list[SchurSpec]:
    """Deterministic batch of monomial rotations: x uniform on the circle,
    power uniform in 1..max_power."""
    rng = np.random.default_rng(seed)
    specs = []
    for _ in range(num):
        x = complex(np.exp(2j * np.pi * rng.random()))
        power = int(rng.integers(1, max_power + 1))
        specs.append(SchurSpec(x, power))
    return specs


def seeded_members_L(
    params: LParams,
    num_members: int,
    seed: int,
    order: int = 64,
    max_power: int = 4,
) -> list[TaylorSeries]:
    """Deterministic batch of disc-class members."""
    return [
        random_member_L(params, spec, order)
        for spec in seeded_schur_specs(num_members, seed, max_power)
    ]
