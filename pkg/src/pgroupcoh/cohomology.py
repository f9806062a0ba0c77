"""Cohomology with trivial coefficients Z or Z/m, and its operations.

A cochain of degree d is an integer vector indexed by the generators of F_d
(the trivial-module functor sends every group element to 1), and delta^d is
``R.cochain_matrix(d)``.  Classes are compared by solving for a coboundary,
which only needs delta^d, so products can be compared even in the top
degree of a truncated resolution.

Cup products are computed by lifting the right-hand factor to a chain map:
for a cocycle b of degree q the lift phi_b : F_{*+q} -> F_* with
eps phi_b = b is homotopic to (1 (x) b) Delta for any diagonal Delta, so
``a * b`` is the class of a o phi_b.  With the convention
(a (x) b)(u (x) v) = a(u) b(v) this is the cup product a u b.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .exactlin import (
    AbelianInvariants,
    IntMatrix,
    cokernel_invariants,
    elementary_divisors_rows,
    kernel_lattice,
    _is_prime,
    rank_mod_p,
    rank_mod_p_rows,
    smith_normal_form,
    solve_integer,
    subquotient,
)
from .groups import GroupHom
from .resolutions import (
    BarResolution,
    FreeResolution,
    lift_chain_map,
    restricted_resolution,
)

__all__ = [
    "CoeffRing",
    "CohomologyGroup",
    "CohoElement",
    "cohomology",
    "cohomology_invariants",
    "cocycle",
    "is_coboundary",
    "express",
    "hom_values",
    "class_from_hom",
    "class_rank",
    "cup",
    "cup_via_diagonal",
    "alexander_whitney_cup",
    "bockstein_beta",
    "bockstein_beta_p",
    "bockstein_delta",
    "bockstein_delta_p",
    "reduce_mod",
    "reduce_mod_p",
    "inflation",
    "restriction",
    "corestriction",
    "aut_action",
    "induced_map",
    "power_sum_mod_p",
]


# ---------------------------------------------------------------------------
# coefficients


@dataclass(frozen=True)
class CoeffRing:
    """Trivial coefficients: m = 0 for Z, m >= 2 for Z/m."""

    m: int = 0

    def __post_init__(self):
        if self.m < 0 or self.m == 1:
            raise ValueError("modulus must be 0 (integers) or at least 2")

    @classmethod
    def parse(cls, text: str, p: int | None = None) -> "CoeffRing":
        """``Z``, ``Fp`` (needs p), ``F3``, ``Zm:9``, ``Z/9``."""
        t = text.strip()
        if t == "Z":
            return cls(0)
        if t == "Fp":
            if p is None:
                raise ValueError("coefficient Fp needs a prime p")
            return cls(p)
        for prefix in ("Zm:", "Z/", "F"):
            if t.startswith(prefix) and t[len(prefix):].isdigit():
                return cls(int(t[len(prefix):]))
        raise ValueError(f"bad coefficient ring {text!r}")

    @property
    def integral(self) -> bool:
        return self.m == 0

    def reduce(self, vec):
        m = self.m
        return tuple(v % m for v in vec) if m else tuple(vec)

    def __str__(self):
        return "Z" if self.m == 0 else f"Z/{self.m}"


def _ring(coeff) -> CoeffRing:
    if isinstance(coeff, CoeffRing):
        return coeff
    return CoeffRing(int(coeff))


def _common_modulus(m1: int, m2: int) -> int:
    if m1 == 0:
        return m2
    if m2 == 0:
        return m1
    g = gcd(m1, m2)
    if g == 1:
        raise ValueError(f"no common coefficient ring for Z/{m1} and Z/{m2}")
    return g


# ---------------------------------------------------------------------------
# coboundary solving


def _per_resolution(R: FreeResolution, name: str) -> dict:
    store = R.__dict__.setdefault("_coho_store", {})
    return store.setdefault(name, {})


def _coboundary_system(R: FreeResolution, m: int, d: int):
    cache = _per_resolution(R, "cobsys")
    hit = cache.get((m, d))
    if hit is None:
        r = R.ranks[d]
        M = R.cochain_matrix(d) if d > 0 else IntMatrix(r, 0)
        if m:
            M = M.hstack(IntMatrix.diagonal([m] * r))
        hit = (M, smith_normal_form(M))
        cache[(m, d)] = hit
    return hit


def is_coboundary(R: FreeResolution, m: int, d: int, vec: Sequence[int]):
    """A cochain y with delta y = vec (mod m), or None.

    The returned witness has length r_{d-1}.
    """
    if not 0 <= d <= R.cutoff:
        raise ValueError(f"degree {d} outside 0..{R.cutoff}")
    if not any((v % m if m else v) for v in vec):
        return [0] * (R.ranks[d - 1] if d else 0)
    if d == 0 and not m:
        return None
    M, snf = _coboundary_system(R, m, d)
    x = solve_integer(M, list(vec), snf)
    if x is None:
        return None
    k = R.ranks[d - 1] if d else 0
    return [(v % m if m else v) for v in x[:k]]


def is_cocycle_vec(R: FreeResolution, m: int, d: int, vec: Sequence[int]) -> bool:
    if d >= R.cutoff:
        raise ValueError(f"cocycle test in degree {d} needs delta^{d + 1} (cutoff {R.cutoff})")
    out = R.cochain_matrix(d + 1).apply(list(vec))
    return not any((v % m if m else v) for v in out)


# ---------------------------------------------------------------------------
# elements


class CohoElement:
    """A cohomology class, stored by a representative cocycle."""

    __hash__ = None

    def __init__(self, R: FreeResolution, degree: int, coeff, vec: Sequence[int], name: str = ""):
        self.R = R
        self.degree = degree
        self.coeff = _ring(coeff)
        if len(vec) != R.ranks[degree]:
            raise ValueError(f"cochain of length {len(vec)} in degree {degree} (rank {R.ranks[degree]})")
        self.vec = self.coeff.reduce(vec)
        self.name = name

    @property
    def m(self) -> int:
        return self.coeff.m

    def _like(self, vec, name="") -> "CohoElement":
        return CohoElement(self.R, self.degree, self.coeff, vec, name)

    def _check(self, other: "CohoElement"):
        if other.R is not self.R or other.degree != self.degree:
            raise ValueError("classes live in different groups")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        m = _common_modulus(self.m, other.m)
        return CohoElement(self.R, self.degree, m, [a + b for a, b in zip(self.vec, other.vec)])

    __radd__ = __add__

    def __neg__(self):
        return self._like([-a for a in self.vec])

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return self._like([k * a for a in self.vec])

    def __mul__(self, other):
        if isinstance(other, int):
            return self._like([other * a for a in self.vec])
        return cup(self, other)

    def __pow__(self, k: int):
        if k < 1:
            raise ValueError("only positive powers of a class are defined")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return is_coboundary(self.R, self.m, self.degree, self.vec) is not None

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, CohoElement):
            return NotImplemented
        if other.R is not self.R or other.degree != self.degree:
            return False
        return (self - other).is_zero()

    def coboundary_witness(self, other: "CohoElement | None" = None):
        diff = self if other is None else self - other
        return is_coboundary(self.R, diff.m, diff.degree, diff.vec)

    def is_cocycle(self) -> bool:
        return is_cocycle_vec(self.R, self.m, self.degree, self.vec)

    def order(self) -> int:
        """Additive order (0 for infinite order)."""
        if self.is_zero():
            return 1
        bound = self.m if self.m else (self.R.group.order if self.degree > 0 else 0)
        if not bound:
            return 0
        for k in range(2, bound + 1):
            if bound % k == 0 and (k * self).is_zero():
                return k
        return 0  # pragma: no cover - |G| kills positive-degree integral classes

    def reduce(self, m: int) -> "CohoElement":
        return reduce_mod(self, m)

    def coordinates(self) -> list[int]:
        return cohomology(self.R, self.coeff, self.degree).coordinates(self.vec)

    def named(self, name: str) -> "CohoElement":
        return CohoElement(self.R, self.degree, self.coeff, self.vec, name)

    def __repr__(self):
        label = self.name or "class"
        return f"<{label} in H^{self.degree}({self.R.group.name}; {self.coeff})>"


def cocycle(R: FreeResolution, degree: int, coeff, vec: Sequence[int], name: str = "",
            check: bool = True) -> CohoElement:
    el = CohoElement(R, degree, coeff, vec, name)
    if check and degree < R.cutoff and not el.is_cocycle():
        raise ValueError(f"vector is not a cocycle in degree {degree}")
    return el


def express(target: CohoElement, basis: Sequence[CohoElement]) -> list[int] | None:
    """Integers c with target = sum c_i basis_i in cohomology, or None."""
    R, d = target.R, target.degree
    m = target.m
    for b in basis:
        if b.R is not R or b.degree != d:
            raise ValueError("mixed groups or degrees")
        m = _common_modulus(m, b.m) if b.m or m else 0
    r = R.ranks[d]
    cols = [list(b.vec) for b in basis]
    M = IntMatrix.from_columns(cols, r) if cols else IntMatrix(r, 0)
    if d > 0:
        M = M.hstack(R.cochain_matrix(d))
    if m:
        M = M.hstack(IntMatrix.diagonal([m] * r))
    x = solve_integer(M, list(target.vec))
    if x is None:
        return None
    c = x[: len(basis)]
    return [v % m for v in c] if m else c


def class_rank(classes: Sequence[CohoElement], p: int) -> int:
    """Rank over F_p of the span of some mod-p classes of one degree."""
    if not classes:
        return 0
    R, d = classes[0].R, classes[0].degree
    H = cohomology(R, CoeffRing(p), d)
    rows = [H.coordinates(c.reduce(p).vec) for c in classes]
    if not rows[0]:
        return 0
    return rank_mod_p(IntMatrix.from_rows(rows, len(rows[0])), p)


def hom_values(a: CohoElement, elements: Sequence[int]) -> list[int]:
    """Values of a degree-1 class on group elements, read as a homomorphism.

    Uses the comparison with the bar resolution in degree 1:
    [g] -> h_0(g eta(1) - eta(1)).
    """
    if a.degree != 1:
        raise ValueError("only degree-1 classes are homomorphisms")
    R = a.R
    from .resolutions import vact, vadd

    order = R.group.order
    base = R.h(0, R.unit)
    out = []
    for g in elements:
        v = vadd(R.h(0, vact(R.group, g, R.unit)), base, -1)
        s = sum(c * a.vec[k // order] for k, c in v.items())
        out.append(s % a.m if a.m else s)
    return out


def class_from_hom(R: FreeResolution, m: int, generator_values: Sequence[int], name: str = "") -> CohoElement:
    """The degree-1 class over Z/m sending polycyclic generator i to the given value."""
    G = R.group
    if len(generator_values) != G.ngens:
        raise ValueError("one value per generator needed")
    Z = kernel_lattice(R.cochain_matrix(2), m) if R.cutoff >= 2 else [[1 if i == j else 0 for i in range(R.ranks[1])] for j in range(R.ranks[1])]
    gens = [G.gen_idx(i) for i in range(G.ngens)]
    cols = [hom_values(CohoElement(R, 1, m, z), gens) for z in Z]
    M = IntMatrix.from_columns(cols, G.ngens) if cols else IntMatrix(G.ngens, 0)
    if m:
        M = M.hstack(IntMatrix.diagonal([m] * G.ngens))
    c = solve_integer(M, list(generator_values))
    if c is None:
        raise ValueError(f"no homomorphism with values {list(generator_values)} mod {m}")
    vec = [0] * R.ranks[1]
    for ci, z in zip(c, Z):
        for i, x in enumerate(z):
            vec[i] += ci * x
    return CohoElement(R, 1, m, vec, name)


# ---------------------------------------------------------------------------
# cohomology groups


class CohomologyGroup:
    """H^d(G; coeff) = cocycles / coboundaries with explicit generators."""

    def __init__(self, R: FreeResolution, coeff, degree: int):
        coeff = _ring(coeff)
        if not 0 <= degree < R.cutoff:
            raise ValueError(f"H^{degree} needs the resolution through degree {degree + 1} "
                             f"(cutoff {R.cutoff})")
        self.R, self.coeff, self.degree = R, coeff, degree
        m = coeff.m
        r = R.ranks[degree]
        Z = kernel_lattice(R.cochain_matrix(degree + 1), m) if r else []
        B = []
        if degree > 0:
            B.extend(R.cochain_matrix(degree).column(j) for j in range(R.ranks[degree - 1]))
        if m:
            B.extend([m if i == j else 0 for i in range(r)] for j in range(r))
        self._sq = subquotient(Z, B, r)
        self.invariants: AbelianInvariants = self._sq.invariants
        self.orders = list(self._sq.orders)

    @property
    def generators(self) -> list[CohoElement]:
        return [CohoElement(self.R, self.degree, self.coeff, g, name=f"g{self.degree}_{i}")
                for i, g in enumerate(self._sq.generators)]

    def coordinates(self, vec: Sequence[int]) -> list[int]:
        return self._sq.coordinates(list(vec))

    def element(self, coords: Sequence[int]) -> CohoElement:
        vec = [0] * self.R.ranks[self.degree]
        for c, g in zip(coords, self._sq.generators):
            if c:
                for i, x in enumerate(g):
                    vec[i] += c * x
        return CohoElement(self.R, self.degree, self.coeff, vec)

    def elements(self):
        """All elements (finite groups only), in lexicographic coordinate order."""
        if any(o == 0 for o in self.orders):
            raise ValueError("infinite group")
        import itertools

        for coords in itertools.product(*(range(o) for o in self.orders)):
            yield coords

    def contains(self, vec) -> bool:
        return self._sq.contains(list(vec))

    @property
    def dim(self) -> int:
        """Number of cyclic summands (the F_p-dimension for prime coefficients)."""
        return len(self.orders)

    def __repr__(self):
        return f"H^{self.degree}({self.R.group.name}; {self.coeff}) = {self.invariants}"


def cohomology(R: FreeResolution, coeff, degree: int) -> CohomologyGroup:
    coeff = _ring(coeff)
    cache = _per_resolution(R, "groups")
    key = (coeff.m, degree)
    if key not in cache:
        cache[key] = CohomologyGroup(R, coeff, degree)
    return cache[key]


def cohomology_invariants(R: FreeResolution, coeff, degree: int) -> AbelianInvariants:
    """Additive invariants only; scales to the large bar complexes.

    Small complexes go through :func:`cohomology`.  For large ones (integral
    coefficients, positive degree) the torsion is that of coker delta^d, and
    the free rank is zero: with s the contracting homotopy, the operator
    (Kf)(x) = sum_g f(s(g x)) satisfies delta K + K delta = |G| on positive-
    degree cochains, so every cocycle is rationally a coboundary.  That
    identity only uses ds + sd = 1, which resolution validation checks.
    """
    coeff = _ring(coeff)
    if not 0 <= degree < R.cutoff:
        raise ValueError(f"H^{degree} needs the resolution through degree {degree + 1} "
                         f"(cutoff {R.cutoff})")
    small = (R.ranks[degree] <= 600 and R.ranks[degree + 1] <= 1200
             and (degree == 0 or R.ranks[degree - 1] <= 600))
    if small:
        return cohomology(R, coeff, degree).invariants
    if coeff.m:
        # prime coefficients: dim = r_d - rank delta^{d+1} - rank delta^d over F_p
        if not _is_prime(coeff.m):
            raise ValueError("large complexes support Z or prime coefficients only")
        p = coeff.m
        r_next = rank_mod_p_rows(R.cochain_rows(degree + 1), p)
        r_here = rank_mod_p_rows(R.cochain_rows(degree), p) if degree else 0
        return AbelianInvariants(0, (p,) * (R.ranks[degree] - r_next - r_here))
    if degree == 0:
        raise ValueError("large complexes need positive degree for integral coefficients")
    diag, _ = elementary_divisors_rows(R.cochain_rows(degree))
    return AbelianInvariants(0, tuple(d for d in diag if d > 1))


# ---------------------------------------------------------------------------
# cup products


def _cocycle_lift(b: CohoElement, upto: int):
    R = b.R
    cache = _per_resolution(R, "lifts")
    key = (b.degree, b.m, b.vec)
    phi = cache.get(key)
    if phi is None:
        unit = R.unit
        seed = [{k: c * v for k, c in unit.items()} for v in b.vec]
        phi = lift_chain_map(None, R, R, seed=seed, upto=0, shift=b.degree, modulus=b.m)
        cache[key] = phi
    if phi.top < upto:
        phi.extend(upto)
    return phi


def cup(a: CohoElement, b: CohoElement) -> CohoElement:
    """Cup product a u b (mixed Z and Z/m arguments are reduced to Z/m first)."""
    if a.R is not b.R:
        raise ValueError("cup product of classes on different resolutions")
    R = a.R
    p, q = a.degree, b.degree
    if p + q > R.cutoff:
        raise ValueError(f"product lands in degree {p + q}, beyond cutoff {R.cutoff}")
    m = _common_modulus(a.m, b.m)
    if b.m != m:
        b = reduce_mod(b, m)
    phi = _cocycle_lift(b, p)
    vec = phi.pullback(p, list(a.vec))
    return CohoElement(R, p + q, m, vec)


def cup_via_diagonal(a: CohoElement, b: CohoElement, delta) -> CohoElement:
    """(a (x) b) o Delta for a chain map Delta: R -> R (x) R (tensor basis)."""
    R, RR = a.R, delta.tgt
    p, q = a.degree, b.degree
    n = p + q
    m = _common_modulus(a.m, b.m)
    order = RR.group.order
    bas = RR.basis[n]
    out = []
    for img in delta.images[n]:
        s = 0
        for key, c in img.items():
            i, ai, j, bi = bas[key // order]
            if i == p:
                s += c * a.vec[ai] * b.vec[bi]
        out.append(s)
    return CohoElement(R, n, m, out)


def alexander_whitney_cup(a: CohoElement, b: CohoElement) -> CohoElement:
    """Front-face/back-face product on normalized bar cochains."""
    R = a.R
    if not isinstance(R, BarResolution):
        raise ValueError("Alexander-Whitney products need the bar resolution")
    m = _common_modulus(a.m, b.m)
    n = a.degree + b.degree
    if n > R.cutoff:
        raise ValueError("product beyond cutoff")
    width = R.ranks[b.degree]
    out = [x * y for x in a.vec for y in b.vec]  # index = front * width + back
    assert len(out) == R.ranks[a.degree] * width
    return CohoElement(R, n, m, out)


# ---------------------------------------------------------------------------
# Bocksteins and coefficient changes


def bockstein_beta(a: CohoElement) -> CohoElement:
    """Connecting map of Z/m -> Z/m^2 -> Z/m (lift entries to 0..m-1)."""
    m = a.m
    if not m:
        raise ValueError("Bockstein beta needs modular coefficients")
    y = bockstein_delta(a)
    return CohoElement(a.R, a.degree + 1, m, y.vec)


def bockstein_beta_p(a: CohoElement) -> CohoElement:
    return bockstein_beta(a)


def bockstein_delta(a: CohoElement) -> CohoElement:
    """Connecting map of Z -(m)-> Z -> Z/m: integral class (delta a~)/m."""
    m = a.m
    if not m:
        raise ValueError("Bockstein delta needs modular coefficients")
    R = a.R
    if a.degree + 1 > R.cutoff:
        raise ValueError("Bockstein lands beyond the cutoff")
    lift = [v % m for v in a.vec]
    img = R.cochain_matrix(a.degree + 1).apply(lift)
    if any(v % m for v in img):
        raise ValueError("input is not a cocycle mod m")
    return CohoElement(R, a.degree + 1, 0, [v // m for v in img])


bockstein_delta_p = bockstein_delta


def reduce_mod(a: CohoElement, m: int) -> CohoElement:
    if a.m and a.m % m:
        raise ValueError(f"cannot reduce Z/{a.m} coefficients mod {m}")
    return CohoElement(a.R, a.degree, m, a.vec, a.name)


reduce_mod_p = reduce_mod


# ---------------------------------------------------------------------------
# induced maps


def induced_map(f: GroupHom | None, src: FreeResolution, tgt: FreeResolution, upto: int):
    """The chain map src -> tgt over f, cached on the source resolution."""
    cache = _per_resolution(src, "maps")
    key = (id(f), id(tgt))
    hit = cache.get(key)
    if hit is None or hit[0] is not f or hit[1] is not tgt:
        phi = lift_chain_map(f, src, tgt, upto=0)
        hit = (f, tgt, phi)
        cache[key] = hit
    phi = hit[2]
    if phi.top < upto:
        phi.extend(upto)
    return phi


def _pull(phi_src: FreeResolution, f, a: CohoElement) -> CohoElement:
    phi = induced_map(f, phi_src, a.R, a.degree)
    return CohoElement(phi_src, a.degree, a.coeff, phi.pullback(a.degree, list(a.vec)))


def inflation(q: GroupHom, a: CohoElement, R_G: FreeResolution) -> CohoElement:
    """Inflate a class on the quotient along the surjection q: G -> Q."""
    if not q.surjective:
        raise ValueError("inflation needs a surjective homomorphism")
    if q.dst is not a.R.group or q.src is not R_G.group:
        raise ValueError("homomorphism does not match the resolutions")
    return _pull(R_G, q, a)


def restriction(i: GroupHom, a: CohoElement, R_H: FreeResolution) -> CohoElement:
    """Restrict a class to the subgroup H along the injection i: H -> G."""
    if not i.injective:
        raise ValueError("restriction needs an injective homomorphism")
    if i.dst is not a.R.group or i.src is not R_H.group:
        raise ValueError("homomorphism does not match the resolutions")
    return _pull(R_H, i, a)


def aut_action(theta: GroupHom, a: CohoElement) -> CohoElement:
    """Pull back along an automorphism: theta^* a."""
    if theta.src is not theta.dst or not theta.bijective:
        raise ValueError("aut_action needs an automorphism")
    if theta.src is not a.R.group:
        raise ValueError("automorphism of the wrong group")
    return _pull(a.R, theta, a)


def _transfer_map(i: GroupHom, R_G: FreeResolution, R_H: FreeResolution, upto: int):
    cache = _per_resolution(R_G, "transfer")
    key = (id(i), id(R_H))
    hit = cache.get(key)
    if hit is None or hit[0] is not i or hit[1] is not R_H:
        res = restricted_resolution(R_G, i)
        psi = lift_chain_map(None, res, R_H, upto=0)
        hit = (i, R_H, res, psi)
        cache[key] = hit
    res, psi = hit[2], hit[3]
    if psi.top < upto:
        psi.extend(upto)
    return res, psi


def corestriction(i: GroupHom, u: CohoElement, R_G: FreeResolution) -> CohoElement:
    """Transfer from H to G: Cor(u)(e_j) = sum over right cosets H t of u(psi(t e_j)).

    psi : Res_H F^G -> F^H is the H-equivariant comparison map; the sum is
    over the coset representatives fixed by the restricted resolution.
    """
    if not i.injective:
        raise ValueError("corestriction needs a subgroup inclusion")
    if i.dst is not R_G.group or i.src is not u.R.group:
        raise ValueError("homomorphism does not match the resolutions")
    d = u.degree
    res, psi = _transfer_map(i, R_G, u.R, d)
    pulled = psi.pullback(d, list(u.vec))
    k = res.index
    vec = [sum(pulled[j * k: (j + 1) * k]) for j in range(R_G.ranks[d])]
    return CohoElement(R_G, d, u.coeff, vec)


# ---------------------------------------------------------------------------


def power_sum_mod_p(p: int, j: int) -> int:
    """sum_{i=1}^{p-1} i^j mod p, computed directly."""
    if p < 2:
        raise ValueError("p must be a prime")
    return sum(pow(i, j, p) for i in range(1, p)) % p
