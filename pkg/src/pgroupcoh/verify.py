"""Executable checks of the cohomology of P(n) and of the surrounding facts.

Suites (the names are the CLI's suite selectors):

* ``theorem3``  -- the integral ring presentation: additive orders, the
  relation table, H^2, and the automorphism action;
* ``lemma4``    -- mod-p dimensions and explicit bases in low degrees;
* ``cor5``      -- whether the product of the two degree-3 Bocksteins vanishes;
* ``extensions``-- GL_2(F_p)-orbits on H^2(C_p x C_p; C_{p^{n-2}}) and H^3(C_p x C_p; Z);
* ``oracle``    -- twisted/tensor/periodic resolutions against the bar resolution;
* ``properties``-- randomized identities of the operation algebra.

Each assertion carries a short anchor and a provenance tag: PAPER for a
published claim, DERIVED for an arithmetic consequence or independent
oracle, TRIVIAL, or SELF-CHECK for internal consistency.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .catalog import CatalogError, GeneratorCatalog, build_catalog, default_cutoff, zeta_targets
from .cohomology import (
    CohoElement,
    CoeffRing,
    aut_action,
    bockstein_beta,
    bockstein_delta,
    class_from_hom,
    class_rank,
    cohomology,
    cohomology_invariants,
    corestriction,
    express,
    inflation,
    power_sum_mod_p,
    reduce_mod,
    restriction,
)
from .exactlin import AbelianInvariants
from .families import p_data, standard_resolution
from .groups import GL2_automorphisms, GroupHom, inner_automorphism, make_cyclic, make_elem_abelian
from .report import VerificationReport
from .resolutions import bar_resolution, lift_chain_map, validate_resolution

__all__ = [
    "RingExpectation",
    "ring_expectation",
    "verify_theorem3",
    "verify_automorphisms",
    "verify_lemma4",
    "verify_cor5",
    "classify_extensions",
    "oracle_compare",
    "verify_properties",
    "verify_resolutions",
    "run_suite",
    "SUITES",
]


# ---------------------------------------------------------------------------
# expectations


@dataclass
class RingExpectation:
    """Expected data for P(p, n): additive invariants and the relation table.

    ``relations`` holds (id, degree, lhs, rhs, provenance, anchor) with lhs
    and rhs formal words: lists of (coefficient, [generator names]) where a
    name may carry a power as ``"alpha^3"``.
    """

    p: int
    n: int
    additive: dict = field(default_factory=dict)  # degree -> (AbelianInvariants str, provenance)
    mod_p_dims: dict = field(default_factory=dict)
    orders: dict = field(default_factory=dict)    # name -> (order, exact?, provenance)
    relations: list = field(default_factory=list)
    degrees: dict = field(default_factory=dict)

    def max_degree(self) -> int:
        return max(r[1] for r in self.relations)


def _word(*terms):
    return [(c, list(names)) for c, names in terms]


def ring_expectation(p: int, n: int) -> RingExpectation:
    E = RingExpectation(p, n)
    E.degrees = {"alpha": 2, "beta": 2, "mu": 3, "nu": 3, "zeta": 2 * p}
    E.degrees.update({f"chi{i}": 2 * i for i in range(1, p)})
    h2 = AbelianInvariants(0, tuple(sorted([p ** (n - 3)] * (n > 3) + [p, p])))
    E.additive[2] = (h2, "PAPER", "H^2 \\cong C_{p^{n-3}}\\oplus C_p\\oplus C_p")
    if n == 3 and p == 3:
        uc = "generators mu, nu in degree 3; alpha^2, alpha beta, beta^2, chi_2 in degree 4"
        E.additive[3] = (AbelianInvariants(0, (3, 3)), "DERIVED", uc)
        E.additive[4] = (AbelianInvariants(0, (3, 3, 3, 3)), "DERIVED", uc)
        E.mod_p_dims = {1: (2, "PAPER"), 2: (4, "PAPER"), 3: (6, "PAPER"), 4: (7, "DERIVED"), 5: (8, "PAPER")}
    elif n >= 4:
        E.mod_p_dims = {1: (3, "PAPER"), 2: (5, "PAPER")}
    A = "p\\alpha=p\\beta=0\\quad p\\mu=p\\nu=0"
    E.orders = {"alpha": (p, True, "PAPER", A), "beta": (p, True, "PAPER", A),
                "mu": (p, True, "PAPER", A), "nu": (p, True, "PAPER", A),
                "zeta": (p ** (n - 1), True, "PAPER", "p^{n-1}\\zeta=0")}
    if n == 3:
        E.orders["chi1"] = (1, True, "PAPER", "note that $\\chi_1$ vanishes for $n=3$")
    else:
        E.orders["chi1"] = (p ** (n - 3), True, "PAPER", "p^{n-3}\\chi_1=0")
    for i in range(2, p):
        E.orders[f"chi{i}"] = (p ** (n - 2), False, "PAPER", "p^{n-2}\\chi_i=0")

    rel = E.relations
    al, be = "alpha", "beta"
    rel.append(("alpha.mu=beta.nu", 5, _word((1, [al, "mu"])), _word((1, [be, "nu"])), "PAPER",
                "\\alpha\\mu=\\beta\\nu"))
    rel.append(("alpha^p.beta=beta^p.alpha", 2 * p + 2, _word((1, [f"{al}^{p}", be])),
                _word((1, [f"{be}^{p}", al])), "PAPER", "\\alpha^p\\beta=\\beta^p\\alpha"))
    rel.append(("alpha^p.mu=beta^p.nu", 2 * p + 3, _word((1, [f"{al}^{p}", "mu"])),
                _word((1, [f"{be}^{p}", "nu"])), "PAPER", "\\alpha^p\\mu=\\beta^p\\nu"))
    for i in range(1, p):
        last = i == p - 1
        d = 2 * i
        for g, deg, rhs, anc in (
            (al, 2, _word((-1, [f"{al}^{p}"])) if last else [], "\\alpha\\chi_i"),
            (be, 2, _word((-1, [f"{be}^{p}"])) if last else [], "\\beta\\chi_i"),
            ("mu", 3, _word((-1, [f"{be}^{p - 1}", "mu"])) if last else [], "\\mu\\chi_i"),
            ("nu", 3, _word((-1, [f"{al}^{p - 1}", "nu"])) if last else [], "\\nu\\chi_i"),
        ):
            rel.append((f"{g}.chi{i}", deg + d, _word((1, [g, f"chi{i}"])), rhs, "PAPER", anc))
    for i in range(1, p):
        for j in range(i, p):
            s = i + j
            lhs = _word((1, [f"chi{i}", f"chi{j}"]))
            if s < p:
                rhs = _word((p, [f"chi{s}"]))
            elif s == p:
                rhs = _word((p * p, ["zeta"]))
            elif s < 2 * p - 2:
                rhs = _word((p, ["zeta", f"chi{s - p}"]))
            else:
                rhs = _word((p, ["zeta", f"chi{p - 2}"])) if p - 2 >= 1 else []
                rhs = rhs + _word((1, [f"{al}^{2 * p - 2}"]), (1, [f"{be}^{2 * p - 2}"]),
                                  (-1, [f"{al}^{p - 1}", f"{be}^{p - 1}"]))
                if p - 2 == 1 and n == 3:
                    pass  # chi_1 = 0 makes the first term vanish; it is kept formally
            rel.append((f"chi{i}.chi{j}", 2 * s, lhs, rhs, "PAPER", "\\chi_i\\chi_j"))
    if n > 3:
        rel.append(("mu.nu", 6, _word((1, ["mu", "nu"])), [], "PAPER", "\\mu\\nu=0 for $n>3$"))
    elif p == 3:
        rel.append(("mu.nu", 6, _word((1, ["mu", "nu"])), _word((3, ["lambda", "zeta"])), "PAPER",
                    "3\\lambda\\zeta &for $n=3,\\ p=3,\\  \\lambda=\\pm 1$"))
    else:
        rel.append(("mu.nu", 6, _word((1, ["mu", "nu"])), _word((1, ["lambda", "chi3"])), "PAPER",
                    "\\lambda\\chi_3 &for $n=3,\\ p>3$"))
    return E


def _evaluate(word, cat: GeneratorCatalog, degree: int, scalars: dict):
    R = cat.data.R
    total = None
    for coeff, names in word:
        c = coeff
        el = None
        for nm in names:
            if nm in scalars:
                c *= scalars[nm]
                continue
            base, _, exp = nm.partition("^")
            f = cat[base] ** int(exp) if exp else cat[base]
            el = f if el is None else el * f
        term = c * el
        total = term if total is None else total + term
    if total is None:
        return CohoElement(R, degree, 0, [0] * R.ranks[degree])
    return total


def _witness(a: CohoElement, b: CohoElement | None = None) -> dict:
    out = {"degree": a.degree, "coefficients": str(a.coeff), "lhs": list(a.vec)}
    if b is not None:
        out["rhs"] = list(b.vec)
    return out


def _check_equal(rep, id, anchor, prov, lhs, rhs, expected_text):
    ok = lhs == rhs
    rep.add(id, anchor, prov, expected_text, "equal" if ok else "different", ok,
            None if ok else _witness(lhs, rhs))
    return ok


# ---------------------------------------------------------------------------
# ring presentation


def _validate(rep: VerificationReport, R):
    """Exhaustive validity of R, computed once per resolution object."""
    info = R.__dict__.get("_validation")
    if info is None:
        try:
            info = validate_resolution(R)
            info = ("valid", f"{info['zbasis_checked']} basis elements", True)
        except Exception as exc:
            info = ("valid", str(exc), False)
        R.__dict__["_validation"] = info
    rep.add(f"valid[{R.name}]", "d^2 = 0 and dh + hd = 1 on the Z-basis", "SELF-CHECK", info[0], info[1], info[2])
    return info[2]


def _catalog_or_report(p, n, cutoff, rep: VerificationReport, full=True):
    try:
        cat = build_catalog(p, n, cutoff, full=full)
    except CatalogError as exc:
        rep.add("catalog", "generator recipes", "PAPER", "all recipes admissible", str(exc), False)
        return None
    d = cat.data
    for R in (d.R, d.RQ, d.RH, d.RZ):
        _validate(rep, R)
    return cat


def verify_theorem3(p: int = 3, n: int = 3, cutoff: int | None = None) -> VerificationReport:
    D = default_cutoff(p) if cutoff is None else cutoff
    rep = VerificationReport("theorem3", f"P({p},{n})", p, n, D)
    t0 = time.perf_counter()
    cat = _catalog_or_report(p, n, D, rep)
    if cat is None:
        return rep
    rep.normalization = cat.normalization
    rep.timings["catalog"] = time.perf_counter() - t0
    E = ring_expectation(p, n)
    R = cat.data.R

    # additive data
    for d, (inv_exp, prov, anchor) in sorted(E.additive.items()):
        if d < D:
            inv = cohomology(R, 0, d).invariants
            rep.add(f"H{d}(Z)", anchor, prov, str(inv_exp), str(inv), inv == inv_exp)
    if 2 * p < D:
        top = max(cohomology(R, 0, 2 * p).invariants.torsion, default=1)
        rep.add(f"H{2 * p}(Z).exponent", "p^{n-1}\\zeta=0", "DERIVED", p ** (n - 1), top, top == p ** (n - 1))
    H2 = cohomology(R, 0, 2)
    basis = [cat["alpha"], cat["beta"], cat["chi1"]]
    gen_ok = all(express(g, basis) is not None for g in H2.generators)
    rep.add("H2.generated_by.alpha,beta,chi1", "generated by elements $\\alpha,\\beta,...,\\chi_1$",
            "PAPER", True, gen_ok, gen_ok)

    # Hom(G, Q/Z) descriptions of alpha, beta and the restrictions used in the proofs
    data = cat.data
    res_a = restriction(data.incH, cat["alpha"], data.RH)
    rep.add("Res<B,C>(alpha)=0", "The restriction to $H$ of $\\alpha$ is trivial", "PAPER", True,
            res_a.is_zero(), res_a.is_zero())
    res_b = restriction(data.incZ, cat["beta"], data.RZ)
    rep.add("Res<C>(beta)=0", "\\beta : C \\mapsto 0", "PAPER", True, res_b.is_zero(), res_b.is_zero())

    # additive orders
    for name, (order, exact, prov, anchor) in E.orders.items():
        if name not in cat:
            continue
        got = cat[name].order()
        ok = got == order if exact else order % got == 0
        rep.add(f"order({name})", anchor, prov, order if exact else f"divides {order}", got, ok)

    # relation table
    scalars = {"lambda": (cat.normalization.get("zeta") or {}).get("lambda") or 0}
    for id, deg, lhs, rhs, prov, anchor in E.relations:
        if deg > D:
            rep.notes.append(f"relation {id} lives in degree {deg} > cutoff {D}; not checked")
            continue
        names = {nm.partition("^")[0] for _, ws in lhs + rhs for nm in ws if nm not in scalars}
        if not names <= set(cat.classes):
            rep.notes.append(f"relation {id} needs {sorted(names - set(cat.classes))}; not checked")
            continue
        if id == "mu.nu" and n == 3 and p == 3 and scalars["lambda"] not in (1, -1):
            rep.add(id, anchor, prov, "lambda = +-1", "no admissible lambda", False)
            continue
        L = _evaluate(lhs, cat, deg, scalars)
        Rr = _evaluate(rhs, cat, deg, scalars)
        _check_equal(rep, id, anchor, prov, L, Rr, _fmt_word(rhs) or "0")
    if n == 3 and p == 3:
        lam = scalars["lambda"]
        rep.add("lambda", "\\lambda=\\pm 1", "PAPER", "+1 or -1", lam, lam in (1, -1))

    # zeta pinning (self-check on the chosen class)
    if "zeta" in cat:
        for name, inc, RM, target in zeta_targets(cat):
            ok = restriction(inc, cat["zeta"], RM) == target
            rep.add(f"Res{name}(zeta)=prod(gamma'+k beta')", "zeta as top Chern class of a sum of characters",
                    "SELF-CHECK", True, ok, ok)

    # power sums behind the chi_{p-1} corrections
    for j in range(0, 2 * (p - 1) + 1):
        direct = sum(i ** j for i in range(1, p)) % p
        val = power_sum_mod_p(p, j)
        expected = p - 1 if j % (p - 1) == 0 else 0
        rep.add(f"power_sum({p},{j})", "Newton's formula tells us that", "DERIVED", expected, val,
                val == expected == direct,
                note="the printed value for (p-1) | j is 1; the direct sum is p-1" if j % (p - 1) == 0 else "")
    if f"chi{p - 1}" in cat and 2 * p <= D:
        Hres = restriction(data.incH, cat["beta"] * cat.chi(p - 1), data.RH)
        bp = restriction(data.incH, cat["beta"], data.RH)
        _check_equal(rep, "Res<B,C>(beta.chi_{p-1})=-beta'^p", "Res(\\beta\\chi_{p-1})", "DERIVED",
                     Hres, -(bp ** p), "-beta'^p")

    tables = [a for a in rep.assertions if ".chi" in a.id and a.id.split(".")[0] in ("alpha", "beta", "mu", "nu")]
    if tables:
        held = all(a.passed for a in tables)
        rep.notes.append("case tables read as 0 for i < p-1 and the listed value for i = p-1: "
                         + ("this reading holds" if held else "this reading FAILS"))
    if "mu" in cat:
        aut = verify_automorphisms(cat)
        rep.assertions.extend(aut.assertions)
    rep.timings["total"] = time.perf_counter() - t0
    return rep


def _fmt_word(word) -> str:
    parts = []
    for c, names in word:
        parts.append(("" if c == 1 else "-" if c == -1 else f"{c}") + ".".join(names))
    return " + ".join(parts)


def p_automorphisms(cat: GeneratorCatalog):
    """A few automorphisms of P(n), as (name, hom, j) with C -> C^j."""
    data = cat.data
    G, p = data.G, cat.p
    A, B, C = data.A, data.B, data.C
    inv = G.inv
    out = []
    specs = [
        ("A<->B,C->C^-1", [B, A, inv(C)]),
        ("A->AB", [G.mul(A, B), B, C]),
        ("A->A^2,C->C^2", [G.power_idx(A, 2), B, G.power_idx(C, 2)]),
        ("B->BA^-1", [A, G.mul(B, inv(A)), C]),
    ]
    for name, imgs in specs:
        th = GroupHom(G, G, imgs, name=name)
        m = G.element_order(C)
        j = next(k for k in range(1, m) if G.power_idx(C, k) == th(C))
        if 2 * j > m:
            j -= m  # report C -> C^-1 as j = -1
        out.append((name, th, j))
    return out


def verify_automorphisms(cat: GeneratorCatalog) -> VerificationReport:
    p = cat.p
    rep = VerificationReport("automorphisms", f"P({p},{cat.n})", p, cat.n, cat.cutoff)
    al, be, mu, nu = cat["alpha"], cat["beta"], cat["mu"], cat["nu"]
    for name, th, j in p_automorphisms(cat):
        ta, tb = aut_action(th, al), aut_action(th, be)
        n12 = express(ta, [al, be])
        n34 = express(tb, [al, be])
        if n12 is None or n34 is None:
            rep.add(f"aut[{name}].alpha,beta", "H^2 \\cong Hom(G,R/Z)", "PAPER", "in span", "not in span", False)
            continue
        n1, n2 = n12
        n3, n4 = n34
        tm = aut_action(th, mu)
        tn = aut_action(th, nu)
        _check_equal(rep, f"aut[{name}].mu", "sends $\\mu$ to $j(n_4\\mu+n_3\\nu)$", "PAPER", tm,
                     j * (n4 * mu + n3 * nu), f"{j}*({n4}mu+{n3}nu)")
        _check_equal(rep, f"aut[{name}].nu", "and $\\nu$ to $j(n_2\\mu+n_1\\nu)$", "PAPER", tn,
                     j * (n2 * mu + n1 * nu), f"{j}*({n2}mu+{n1}nu)")
        for i in range(1, p):
            chi = cat.chi(i)
            _check_equal(rep, f"aut[{name}].chi{i}", "$\\chi_i$ is mapped to $j^i\\chi_i$", "PAPER",
                         aut_action(th, chi), (j ** i) * chi, f"({j})^{i} chi{i}")
        if "zeta" in cat:
            z = cat["zeta"]
            _check_equal(rep, f"aut[{name}].zeta", "$\\zeta$ is mapped to $j^p\\zeta$", "PAPER",
                         aut_action(th, z), (j ** p) * z, f"({j})^{p} zeta")
        rep.normalization[name] = {"j": j, "n": [n1, n2, n3, n4]}
        if name == "A<->B,C->C^-1":
            sw = ta == be and tb == al
            rep.add(f"aut[{name}].swaps.alpha,beta", "\\alpha :A \\mapsto 1/p", "PAPER", True, sw, sw)
    return rep


# ---------------------------------------------------------------------------
# mod-p data


def verify_lemma4(p: int = 3, n: int = 3, cutoff: int | None = None) -> VerificationReport:
    D = cutoff if cutoff is not None else (7 if n == 3 else 6)
    rep = VerificationReport("lemma4", f"P({p},{n})", p, n, D)
    E = ring_expectation(p, n)
    t0 = time.perf_counter()
    cat = _catalog_or_report(p, n, D, rep, full=False)
    if cat is None:
        return rep
    R = cat.data.R
    for d, (dim, prov) in sorted(E.mod_p_dims.items()):
        got = cohomology(R, p, d).dim
        rep.add(f"dim H{d}(F{p})", f"H^{d} has order p^{dim}", prov, dim, got, got == dim)
    x, xp, y, yp = cat["x"], cat["x'"], cat["y"], cat["y'"]
    # the class x y' - x' y dies under inflation
    yQ = class_from_hom(cat.data.RQ, p, [1, 0])
    ypQ = class_from_hom(cat.data.RQ, p, [0, 1])
    xQ, xpQ = bockstein_beta(yQ), bockstein_beta(ypQ)
    kq = xQ * ypQ - xpQ * yQ
    inf = inflation(cat.data.quo, kq, R)
    rep.add("Inf(xy'-x'y)=0", "$d_3(t)$ is a non-zero multiple of $xy'-x'y$", "PAPER", True,
            inf.is_zero() and not kq.is_zero(), inf.is_zero() and not kq.is_zero())
    if n == 3:
        yy = (y * yp).is_zero()
        rep.add("yy'=0", "$d_2(u)$ is a non-zero multiple of $yy'$", "PAPER", True, yy, yy)
        Y, Yp, X, Xp = cat["Y"], cat["Y'"], cat["X"], cat["X'"]
        r2 = class_rank([x, xp, Y, Yp], p)
        rep.add("basis H2 {x,x',Y,Y'}", "$\\{x,x',Y,Y'\\}$ is a basis", "PAPER", 4, r2, r2 == 4)
        from .catalog import _lemma4_deg3, _lemma4_deg5

        r3 = class_rank(_lemma4_deg3(x, xp, y, yp, Y, Yp, X, Xp), p)
        rep.add("basis H3 {yY',xy,xy',x'y',X,X'}", "is a basis for $\\co 3 \\bpsymb 3$", "PAPER", 6, r3, r3 == 6)
        if D >= 6:
            r5 = class_rank(_lemma4_deg5(x, xp, y, yp, Y, Yp, X, Xp), p)
            rep.add("basis H5 {xX,xX',x'X',x^2y,x^2y',xx'y',x'^2y',YX'}", "$H^5$ has order $p^8$",
                    "PAPER", 8, r5, r5 == 8)
        rep.normalization = {k: v for k, v in cat.normalization.items() if k.startswith("Y")}
    else:
        u = cat["u'"]
        resu = restriction(cat.data.incZ, u, cat.data.RZ)
        gen = cohomology(cat.data.RZ, p, 1).generators[0]
        ok = express(resu, [gen]) is not None and not resu.is_zero()
        rep.add("Res<C>(u') = u", "$u'$ is any element of $\\co 1 \\bpsymb n$ restricting to $C_{p^{n-2}}$ as $u$",
                "PAPER", True, ok, ok)
        r = class_rank([x, xp, y * yp, u * y, u * yp], p)
        rep.add("basis H2 {x,x',yy',u'y,u'y'}", "The set $\\{x,x',yy',u'y,u'y'\\}$ is a basis", "PAPER", 5, r, r == 5)
        rep.normalization = {"u_prime": cat.normalization["u_prime"]}
    rep.timings["total"] = time.perf_counter() - t0
    return rep


def verify_cor5(p: int = 3, n: int = 3, cutoff: int | None = None) -> VerificationReport:
    D = 6 if cutoff is None else cutoff
    rep = VerificationReport("cor5", f"P({p},{n})", p, n, D)
    t0 = time.perf_counter()
    cat = _catalog_or_report(p, n, D, rep, full=False)
    if cat is None:
        return rep
    anchor = "non-zero if and only if $n=3$"
    if n == 3:
        prod = bockstein_delta(cat["Y"]) * bockstein_delta(cat["Y'"])
        nz = not prod.is_zero()
        rep.add("delta(Y)delta(Y')!=0", anchor, "PAPER", "nonzero", "nonzero" if nz else "zero", nz,
                None if nz else _witness(prod))
    else:
        up = cat.normalization["u_prime"]
        u = cat["u'"]
        bu = bockstein_beta(u)
        yy = cat["y"] * cat["y'"]
        if n == 4:
            lam = up["lambda"]
            ok = lam != 0 and bu == lam * yy
            rep.add("beta_p(u')=lambda yy'", "so we may choose the element $u'$", "PAPER", "lambda != 0",
                    f"lambda = {lam}", ok)
        else:
            ok = bu.is_zero()
            rep.add("beta_p(u')=0", "similar but simpler", "PAPER", 0, "0" if ok else "nonzero", ok)
        prod = bockstein_delta(cat["u'y"]) * bockstein_delta(cat["u'y'"])
        z = prod.is_zero()
        rep.add("delta(u'y)delta(u'y')=0", anchor, "PAPER", "zero", "zero" if z else "nonzero", z,
                None if z else _witness(prod))
    munu = (cat["mu"] * cat["nu"]).is_zero()
    rep.add("mu.nu", anchor, "PAPER", "nonzero" if n == 3 else "zero", "zero" if munu else "nonzero",
            munu == (n != 3))
    rep.normalization = dict(cat.normalization)
    rep.timings["total"] = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# central extensions


def _orbits(elements, maps) -> list[list]:
    parent = {e: e for e in elements}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for f in maps:
        for e in elements:
            a, b = find(e), find(f(e))
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict = {}
    for e in elements:
        groups.setdefault(find(e), []).append(e)
    return sorted(groups.values(), key=lambda g: (len(g), g))


def classify_extensions(p: int = 3, n: int = 3) -> VerificationReport:
    rep = VerificationReport("extensions", f"C{p}xC{p}", p, n, 4)
    t0 = time.perf_counter()
    Q = make_elem_abelian(p, 2)
    RQ = standard_resolution(Q, 4)
    m = p ** (n - 2)
    auts = GL2_automorphisms(Q, p)
    rep.add("|GL2(F_p)|", "GL_2(F_p)", "TRIVIAL", (p * p - 1) * (p * p - p), len(auts),
            len(auts) == (p * p - 1) * (p * p - p))
    for deg, coeff, expected, anchor, label in (
        (2, m, 4, "has only four orbits", f"H2(CpxCp;Z/{m})"),
        (3, 0, 2, "acts transitively on the non-zero elements", "H3(CpxCp;Z)"),
    ):
        H = cohomology(RQ, coeff, deg)
        elems = list(H.elements())
        maps = []
        for th in auts:
            vals = {}
            for e in elems:
                vals[e] = tuple(H.coordinates(aut_action(th, H.element(e)).vec))
            maps.append(vals.__getitem__)
        orbits = _orbits(elems, maps)
        # Kunneth and universal coefficients: H^2(Q; Z/m) = C_p^3, H^3(Q; Z) = C_p
        inv_exp = AbelianInvariants(0, (p, p, p) if deg == 2 else (p,))
        rep.add(f"{label} invariants", "central extensions of $C_{p^{n-2}}$ by $C_p\\oplus C_p$",
                "DERIVED", str(inv_exp), str(H.invariants), H.invariants == inv_exp)
        rep.add(f"{label} orbits", anchor, "PAPER", expected, len(orbits), len(orbits) == expected)
        rep.normalization[label] = {"orbit_sizes": [len(o) for o in orbits],
                                    "representatives": [list(o[0]) for o in orbits]}
    rep.timings["total"] = time.perf_counter() - t0
    return rep


# ---------------------------------------------------------------------------
# oracle comparison and resolution validity


ORACLE_CASES = [
    # (label, group factory, degrees, bar cutoff)
    ("C3", lambda: make_cyclic(3), 6, 7),
    ("C9", lambda: make_cyclic(9), 5, 6),
    ("C3xC3", lambda: make_elem_abelian(3, 2), 5, 6),
    ("P(3,3)", None, 2, 3),
]


def oracle_compare(cases=None, validate: bool = True) -> VerificationReport:
    from .groups import make_P

    rep = VerificationReport("oracle", "bar vs structured")
    for label, make, top, bar_cut in cases or ORACLE_CASES:
        t0 = time.perf_counter()
        G = make() if make else make_P(3, 3)
        R = standard_resolution(G, top + 1)
        B = bar_resolution(G, bar_cut)
        if validate:
            for res in (R, B):
                _validate(rep, res)
        for d in range(top + 1):
            a = cohomology_invariants(R, 0, d)
            b = cohomology_invariants(B, 0, d)
            rep.add(f"{label} H{d}(Z)", "bar resolution oracle", "DERIVED", str(b), str(a), a == b)
        rep.timings[label] = time.perf_counter() - t0
    return rep


def verify_resolutions(cutoff: int | None = None) -> VerificationReport:
    """Exhaustive validity of every structured resolution used by the suites."""
    from .groups import make_M, make_P

    D = cutoff or default_cutoff(3)
    rep = VerificationReport("resolutions", "all", cutoff=D)
    groups = [make_cyclic(1), make_cyclic(3), make_cyclic(9), make_elem_abelian(3, 2),
              make_P(3, 3), make_P(3, 4), make_M(3, 3), make_M(3, 4)]
    for G in groups:
        _validate(rep, standard_resolution(G, D))
    return rep


# ---------------------------------------------------------------------------
# randomized operation-algebra identities


def _random_class(rng, R, coeff, d):
    H = cohomology(R, coeff, d)
    while True:
        coords = [rng.randrange(o) if o else rng.randrange(-3, 4) for o in H.orders]
        if any(coords) or not H.orders:
            return H.element(coords)


def verify_properties(seed: int = 0, instances: int = 20, p: int = 3, n: int = 3) -> VerificationReport:
    rng = random.Random(seed)
    D = default_cutoff(p)
    rep = VerificationReport("properties", f"P({p},{n})", p, n, D)
    t0 = time.perf_counter()
    cat = _catalog_or_report(p, n, D, rep)
    if cat is None:
        return rep
    data = cat.data
    R = data.R
    pool = [cat[k] for k in cat.classes]

    def pick_pair(max_deg):
        while True:
            a, b = rng.choice(pool), rng.choice(pool)
            if a.degree + b.degree <= max_deg:
                return a, b

    def count(label, checks):
        ok = sum(checks)
        rep.add(label, "operation algebra identity", "SELF-CHECK", f"{len(checks)}/{len(checks)}",
                f"{ok}/{len(checks)}", ok == len(checks) and len(checks) >= instances)

    # graded commutativity
    checks = []
    for _ in range(instances):
        a, b = pick_pair(D)
        s = -1 if (a.degree * b.degree) % 2 else 1
        checks.append(a * b == s * (b * a))
    count("graded commutativity", checks)
    # associativity
    checks = []
    for _ in range(instances):
        while True:
            a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
            if a.degree + b.degree + c.degree <= D:
                break
        checks.append((a * b) * c == a * (b * c))
    count("associativity", checks)
    # Bockstein identities on random mod-p classes
    checks_bb, checks_pi, checks_p = [], [], []
    for _ in range(instances):
        d = rng.randrange(1, D - 1)
        a = _random_class(rng, R, p, d)
        checks_bb.append(bockstein_beta(bockstein_beta(a)).is_zero())
        da = bockstein_delta(a)
        checks_pi.append(reduce_mod(da, p) == bockstein_beta(a))
        checks_p.append((p * da).is_zero())
    count("beta_p^2 = 0", checks_bb)
    count("pi_* delta_p = beta_p", checks_pi)
    count("p delta_p = 0", checks_p)
    # transfer identities for the normal subgroups <g, C> and <C>
    subs = [(name, inc, RM) for name, _, inc, RM in data.maximal_subgroups()]
    subs.append(("<C>", data.incZ, data.RZ))
    cr, frob, mackey = [], [], []
    for k in range(instances):
        name, inc, RM = subs[k % len(subs)]
        index = R.group.order // inc.src.order
        d = rng.randrange(1, 6)
        a = _random_class(rng, R, 0, d)
        cr.append(corestriction(inc, restriction(inc, a, RM), R) == index * a)
        b = _random_class(rng, R, 0, rng.randrange(1, 4))
        u = _random_class(rng, RM, 0, rng.randrange(1, 4))
        frob.append(b * corestriction(inc, u, R) == corestriction(inc, restriction(inc, b, RM) * u, R))
        res_cor = restriction(inc, corestriction(inc, u, R), RM)
        reps = _coset_reps(inc)
        total = None
        for g in reps:
            c = aut_action(inner_automorphism(inc, g), u)
            total = c if total is None else total + c
        mackey.append(res_cor == total)
    count("Cor o Res = index", cr)
    count("Frobenius reciprocity", frob)
    count("Res o Cor = sum of conjugates", mackey)
    # ring maps
    inf_checks, aut_checks = [], []
    RQ = data.RQ
    auts = p_automorphisms(cat)
    for k in range(instances):
        a = _random_class(rng, RQ, 0, rng.randrange(1, 4))
        b = _random_class(rng, RQ, 0, rng.randrange(1, 4))
        inf_checks.append(inflation(data.quo, a * b, R) == inflation(data.quo, a, R) * inflation(data.quo, b, R))
        _, th, _ = auts[k % len(auts)]
        a, b = pick_pair(D)
        aut_checks.append(aut_action(th, a * b) == aut_action(th, a) * aut_action(th, b))
    count("inflation is multiplicative", inf_checks)
    count("automorphisms act multiplicatively", aut_checks)
    # two lifts of the same map
    lifts = []
    G = R.group
    for k in range(instances):
        g = rng.randrange(G.order)
        seed = [_translate(RQ, data.quo(g)) for _ in range(R.ranks[0])]
        phi2 = lift_chain_map(data.quo, R, RQ, seed=seed, upto=6)
        a = _random_class(rng, RQ, rng.choice([0, p]), rng.randrange(1, 7))
        via2 = CohoElement(R, a.degree, a.coeff, phi2.pullback(a.degree, list(a.vec)))
        lifts.append(via2 == inflation(data.quo, a, R))
    count("two lifts induce the same map", lifts)
    rep.timings["total"] = time.perf_counter() - t0
    return rep


def _translate(R, g):
    from .resolutions import vact

    return vact(R.group, g, R.unit)


def _coset_reps(inc):
    G, H = inc.dst, inc.src
    img = {inc(h) for h in range(H.order)}
    seen, reps = set(), []
    for g in range(G.order):
        if g in seen:
            continue
        reps.append(g)
        seen.update(G.mul(h, g) for h in img)
    return reps


# ---------------------------------------------------------------------------


def _suite_all(p, n, cutoff, seed):
    out = [verify_theorem3(p, n, cutoff), verify_lemma4(p, n), verify_cor5(p, n),
           classify_extensions(p, n)]
    return out


SUITES = {
    "theorem3": lambda p, n, cutoff, seed: [verify_theorem3(p, n, cutoff)],
    "lemma4": lambda p, n, cutoff, seed: [verify_lemma4(p, n)],
    "cor5": lambda p, n, cutoff, seed: [verify_cor5(p, n)],
    "extensions": lambda p, n, cutoff, seed: [classify_extensions(p, n)],
    "properties": lambda p, n, cutoff, seed: [verify_properties(seed, p=p, n=n)],
    "oracle": lambda p, n, cutoff, seed: [oracle_compare()],
    "all": _suite_all,
}


def run_suite(name: str, p: int = 3, n: int = 3, cutoff: int | None = None, seed: int = 0):
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return SUITES[name](p, n, cutoff, seed)
