"""Named cohomology classes of P(p, n), built from their recipes.

Notation follows the classical description of H^*(P(n); Z):

* alpha, beta: inflations of delta_p(y), delta_p(y') from the central
  quotient C_p x C_p, where y, y' are dual to the images of A and B;
* gamma' in H^2(<B,C>; Z): delta_{p^{n-2}} of the homomorphism
  B -> 0, C -> 1 (mod p^{n-2});
* chi_i = Cor(gamma'^i) for i < p-1, chi_{p-1} = Cor(gamma'^{p-1}) - alpha^{p-1};
* mu, nu: Bocksteins of degree-2 mod-p classes, recombined so that
  alpha mu = beta nu;
* zeta: the class of order p^{n-1} in degree 2p restricting on every maximal
  subgroup <g, C> to prod_k (gamma'_M + k beta'_M), the top Chern class of a
  sum of p characters extending the central one.

Every recipe involving a choice is an exhaustive search over a finite set;
the choice made and the number of admissible choices are recorded in
``normalization``.
"""

from __future__ import annotations

import itertools

from .cohomology import (
    CohoElement,
    bockstein_beta,
    bockstein_delta,
    class_from_hom,
    class_rank,
    cohomology,
    corestriction,
    hom_values,
    inflation,
    reduce_mod,
    restriction,
)
from .families import PData, p_data

__all__ = ["GeneratorCatalog", "CatalogError", "build_catalog", "default_cutoff"]


class CatalogError(RuntimeError):
    """A recipe search found no admissible choice (evidence against the claim)."""


def default_cutoff(p: int) -> int:
    # alpha^p mu sits in degree 2p + 3
    return 2 * p + 3


class GeneratorCatalog:
    def __init__(self, data: PData):
        self.data = data
        self.p, self.n, self.cutoff = data.p, data.n, data.cutoff
        self.classes: dict[str, CohoElement] = {}
        self.normalization: dict = {}

    def __getitem__(self, name: str) -> CohoElement:
        return self.classes[name]

    def __contains__(self, name: str) -> bool:
        return name in self.classes

    def get(self, name, default=None):
        return self.classes.get(name, default)

    def add(self, name: str, el: CohoElement) -> CohoElement:
        el = el.named(name)
        self.classes[name] = el
        return el

    def chi(self, i: int) -> CohoElement:
        return self.classes[f"chi{i}"]

    def integral_names(self) -> list[str]:
        return [k for k, v in self.classes.items() if v.m == 0]

    def modular_names(self) -> list[str]:
        return [k for k, v in self.classes.items() if v.m == self.p]


def _first_gl2(p: int):
    for a, b, c, d in itertools.product(range(p), repeat=4):
        if (a * d - b * c) % p:
            yield a, b, c, d


def build_catalog(p: int, n: int, cutoff: int | None = None, full: bool = True) -> GeneratorCatalog:
    """Construct the named classes; ``full=False`` stops after the degree-3 generators."""
    D = default_cutoff(p) if cutoff is None else cutoff
    data = p_data(p, n, D)
    cat = GeneratorCatalog(data)
    R, G = data.R, data.G
    q = p ** (n - 2)
    norm = cat.normalization

    # --- degree 1 and 2 classes from the central quotient
    yQ = class_from_hom(data.RQ, p, [1, 0])
    ypQ = class_from_hom(data.RQ, p, [0, 1])
    y = cat.add("y", inflation(data.quo, yQ, R))
    yp = cat.add("y'", inflation(data.quo, ypQ, R))
    alpha = cat.add("alpha", inflation(data.quo, bockstein_delta(yQ), R))
    beta = cat.add("beta", inflation(data.quo, bockstein_delta(ypQ), R))
    x = cat.add("x", reduce_mod(alpha, p))
    xp = cat.add("x'", reduce_mod(beta, p))

    # --- gamma' and the chi_i
    w = class_from_hom(data.RH, q, [0, 1])
    gamma = bockstein_delta(w)
    cat.gamma_prime = gamma.named("gamma'")
    power = gamma
    for i in range(1, p):
        if 2 * i > D:
            break
        if i > 1:
            power = power * gamma
        chi = corestriction(data.incH, power, R)
        if i == p - 1:
            chi = chi - alpha ** (p - 1)
        cat.add(f"chi{i}", chi)

    # --- degree-2 mod-p classes completing {x, x'}
    if n == 3:
        _choose_Y(cat)
        cand = (bockstein_delta(cat["Y"]), bockstein_delta(cat["Y'"]))
        norm["mu_nu_source"] = "delta_p(Y), delta_p(Y')"
    else:
        _choose_u(cat)
        u = cat["u'"]
        cat.add("u'y", u * y)
        cat.add("u'y'", u * yp)
        cand = (bockstein_delta(cat["u'y"]), bockstein_delta(cat["u'y'"]))
        norm["mu_nu_source"] = "delta_p(u'y), delta_p(u'y')"

    # --- mu, nu
    sols = []
    for a, b, c, d in _first_gl2(p):
        mu = a * cand[0] + b * cand[1]
        nu = c * cand[0] + d * cand[1]
        if mu.is_zero() or nu.is_zero():
            continue
        if alpha * mu == beta * nu:
            sols.append((a, b, c, d))
    if not sols:
        raise CatalogError("no recombination of the Bockstein candidates satisfies alpha mu = beta nu")
    a, b, c, d = sols[0]
    cat.add("mu", a * cand[0] + b * cand[1])
    cat.add("nu", c * cand[0] + d * cand[1])
    norm["mu_nu_matrix"] = [[a, b], [c, d]]
    norm["mu_nu_solutions"] = len(sols)

    if full and 2 * p <= D - 1:
        _choose_zeta(cat)
    return cat


def _choose_Y(cat: GeneratorCatalog):
    """Y, Y' completing {x, x'} to a basis of H^2(F_p), normalised by the degree-3/5 bases."""
    p, R = cat.p, cat.data.R
    x, xp, y, yp = cat["x"], cat["x'"], cat["y"], cat["y'"]
    H2 = cohomology(R, p, 2)
    comp = []
    for g in H2.generators:
        if class_rank([x, xp] + comp + [g], p) == 3 + len(comp):
            comp.append(g)
        if len(comp) == 2:
            break
    if len(comp) != 2:
        raise CatalogError("x, x' do not extend to a basis of H^2 with two more classes")
    check5 = cat.cutoff >= 6
    admissible = []
    for a, b, c, d in _first_gl2(p):
        Y1 = a * comp[0] + b * comp[1]
        Y2 = c * comp[0] + d * comp[1]
        X1, X2 = bockstein_beta(Y1), bockstein_beta(Y2)
        if class_rank(_lemma4_deg3(x, xp, y, yp, Y1, Y2, X1, X2), p) != 6:
            continue
        if check5 and class_rank(_lemma4_deg5(x, xp, y, yp, Y1, Y2, X1, X2), p) != 8:
            continue
        admissible.append((a, b, c, d))
    if not admissible:
        raise CatalogError("no choice of Y, Y' gives the degree-3 and degree-5 bases")
    a, b, c, d = admissible[0]
    Y = cat.add("Y", a * comp[0] + b * comp[1])
    Yp = cat.add("Y'", c * comp[0] + d * comp[1])
    cat.add("X", bockstein_beta(Y))
    cat.add("X'", bockstein_beta(Yp))
    cat.normalization["Y_matrix"] = [[a, b], [c, d]]
    cat.normalization["Y_admissible"] = len(admissible)
    cat.normalization["Y_searched"] = (p * p - 1) * (p * p - p)


def _lemma4_deg3(x, xp, y, yp, Y, Yp, X, Xp):
    return [y * Yp, x * y, x * yp, xp * yp, X, Xp]


def _lemma4_deg5(x, xp, y, yp, Y, Yp, X, Xp):
    return [x * X, x * Xp, xp * Xp, x * x * y, x * x * yp, x * xp * yp, xp * xp * yp, Y * Xp]


def _choose_u(cat: GeneratorCatalog):
    """u' restricting to the generator u of H^1(<C>; F_p), with the Bockstein normalisation."""
    p, n, data = cat.p, cat.n, cat.data
    R = data.R
    y, yp = cat["y"], cat["y'"]
    yy = y * yp
    u0 = class_from_hom(R, p, [0, 0, 1])
    found = []
    for a, b in itertools.product(range(p), repeat=2):
        u = u0 + a * y + b * yp
        bu = bockstein_beta(u)
        if n == 4:
            lam = next((l for l in range(1, p) if bu == l * yy), None)
            if lam is not None:
                found.append((a, b, lam))
        elif bu.is_zero():
            found.append((a, b, 0))
    if not found:
        raise CatalogError("no u' with the required Bockstein")
    a, b, lam = found[0]
    u = cat.add("u'", u0 + a * y + b * yp)
    cat.normalization["u_prime"] = {"shift": [a, b], "lambda": lam, "admissible": len(found),
                                    "values_ABC": hom_values(u, [data.A, data.B, data.C])}


def zeta_targets(cat: GeneratorCatalog):
    """(inclusion, resolution, target class) for every maximal subgroup <g, C>."""
    p, q = cat.p, cat.p ** (cat.n - 2)
    out = []
    for name, H, inc, RM in cat.data.maximal_subgroups():
        gM = bockstein_delta(class_from_hom(RM, q, [0, 1]))
        bM = bockstein_delta(class_from_hom(RM, p, [1, 0]))
        prod = gM
        for k in range(1, p):
            prod = prod * (gM + k * bM)
        out.append((name, inc, RM, prod))
    return out


def _choose_zeta(cat: GeneratorCatalog):
    p, n = cat.p, cat.n
    R = cat.data.R
    H = cohomology(R, 0, 2 * p)
    targets = zeta_targets(cat)
    order = p ** (n - 1)
    mu, nu = cat["mu"], cat["nu"]
    munu = mu * nu
    want_lambda = n == 3 and p == 3
    cands = []
    for coords in H.elements():
        z = H.element(coords)
        if not all(restriction(inc, z, RM) == t for _, inc, RM, t in targets):
            continue
        if z.order() != order:
            continue
        lam = None
        if want_lambda:
            lam = next((l for l in (1, -1) if munu == (3 * l) * z), None)
            if lam is None:
                continue
        cands.append((coords, lam))
    if not cands:
        raise CatalogError("no class of order p^{n-1} with the required restrictions")
    coords, lam = cands[0]
    cat.add("zeta", H.element(coords))
    cat.normalization["zeta"] = {"coordinates": list(coords), "admissible": len(cands),
                                 "lambda": lam, "group": str(H.invariants)}
