"""Standard resolutions along the polycyclic series, and named subgroups.

A polycyclic presentation g_1, ..., g_k comes with the subnormal series
G = G_1 > G_2 > ... with G_i = <g_i, ..., g_k>, each G_{i+1} normal in G_i
with cyclic quotient of order r_i.  The standard resolution of G_i is the
twisted tensor product of the periodic resolution of C_{r_i} with the
standard resolution of G_{i+1}; when g_i splits off as a direct factor the
plain tensor product is used instead.  For P(n) this is the series
<C> < <B,C> < P(n) and for M(n) it is <A> < M(n).
"""

from __future__ import annotations

from functools import lru_cache

from .groups import GroupHom, PGroup, direct_product, make_cyclic, make_elem_abelian, make_P
from .resolutions import (
    FreeResolution,
    cyclic_resolution,
    perturbed_resolution,
    tensor_resolution,
)

__all__ = [
    "trailing_subgroup",
    "top_quotient",
    "splits_off",
    "standard_resolution",
    "subgroup_from_generators",
    "PData",
    "p_data",
]


def trailing_subgroup(G: PGroup, start: int = 1) -> tuple[PGroup, GroupHom]:
    """<g_{start+1}, ..., g_k> as a PGroup on the induced presentation, with its inclusion."""
    k = G.ngens
    if not 0 <= start <= k:
        raise ValueError("bad start index")
    idx = range(start, k)
    powers = {i - start: G.power_relation(i)[start:] for i in idx}
    conj = {(j - start, i - start): G.conjugate_relation(j, i)[start:]
            for i in idx for j in idx if j > i}
    H = PGroup(f"{G.name}_{start}", G.gen_names[start:], G.rel_orders[start:],
               powers=powers, conjugates=conj, check=False)
    inc = GroupHom(H, G, [G.gen_idx(i) for i in idx], name=f"{H.name}->{G.name}")
    return H, inc


def top_quotient(G: PGroup) -> tuple[PGroup, GroupHom]:
    """G / G_2 = C_{r_1}, with the projection onto the top exponent."""
    Q = make_cyclic(G.rel_orders[0], gen=G.gen_names[0].lower() if G.gen_names else "t")
    return Q, GroupHom(G, Q, [Q.gen_idx(0)] + [0] * (G.ngens - 1), name=f"{G.name}->{Q.name}")


def splits_off(G: PGroup) -> bool:
    """True when G = <g_1> x G_2 on the nose (g_1^r = 1 and g_1 centralizes G_2)."""
    if G.ngens < 2:
        return False
    zero = (0,) * G.ngens
    if tuple(G.power_relation(0)) != zero:
        return False
    return all(tuple(G.conjugate_relation(j, 0)) == tuple(G.gen_vector(j)) for j in range(1, G.ngens))


def standard_resolution(G: PGroup, cutoff: int, kind: str | None = None) -> FreeResolution:
    """The resolution used throughout: recursive twisted products along the series.

    ``kind='bar'`` returns the bar resolution instead.
    """
    if kind == "bar":
        from .resolutions import bar_resolution

        return bar_resolution(G, cutoff)
    if G.ngens <= 1:
        return cyclic_resolution(G, cutoff)
    R_top = cyclic_resolution(G.rel_orders[0], cutoff)
    H, inc = trailing_subgroup(G, 1)
    R_H = standard_resolution(H, cutoff)
    if splits_off(G):
        return _retarget_tensor(tensor_resolution(R_top, R_H, G), G)
    Q, quo = top_quotient(G)
    R_Q = cyclic_resolution(Q, cutoff)
    return perturbed_resolution(R_Q, R_H, inc, quo, cutoff, name=f"twisted({G.name})")


def _retarget_tensor(R, G):
    R.name = f"tensor({G.name})"
    return R


def subgroup_from_generators(G: PGroup, gens: list[int], name: str) -> tuple[PGroup, GroupHom]:
    """An abelian subgroup generated by given elements, presented as a product of cyclics.

    The generators must commute and generate a direct product of the
    cyclic groups they span (checked by counting).
    """
    for a in gens:
        for b in gens:
            if G.mul(a, b) != G.mul(b, a):
                raise ValueError("generators do not commute")
    H = None
    for i, g in enumerate(gens):
        Ci = make_cyclic(G.element_order(g), gen=f"g{i}")
        H = Ci if H is None else direct_product(H, Ci)
    H.name = name
    inc = GroupHom(H, G, gens, name=f"{name}->{G.name}")
    if not inc.injective:
        raise ValueError("generators do not span a direct product")
    return H, inc


class PData:
    """P(p, n) together with the subgroups, quotients and resolutions used for it."""

    def __init__(self, p: int, n: int, cutoff: int):
        self.p, self.n, self.cutoff = p, n, cutoff
        G = make_P(p, n)
        self.G = G
        A, B, C = (G.gen_idx(i) for i in range(3))
        self.A, self.B, self.C = A, B, C
        self.R = standard_resolution(G, cutoff)
        # central quotient C_p x C_p
        Q = make_elem_abelian(p, 2)
        self.Q = Q
        self.quo = GroupHom(G, Q, [Q.gen_idx(0), Q.gen_idx(1), 0], name=f"{G.name}->{Q.name}")
        self.RQ = standard_resolution(Q, cutoff)
        # <B, C> as the trailing subgroup, resolved by a tensor product
        self.H, self.incH = trailing_subgroup(G, 1)
        self.H.name = "<B,C>"
        self.RH = standard_resolution(self.H, cutoff)
        # the centre <C>
        self.Z, self.incZ = trailing_subgroup(G, 2)
        self.Z.name = "<C>"
        self.RZ = standard_resolution(self.Z, cutoff)
        self._maximal = None

    def maximal_subgroups(self):
        """The p+1 maximal subgroups <g, C>, each C_p x C_{p^{n-2}}, as (name, H, inc, R)."""
        if self._maximal is None:
            G, p = self.G, self.p
            out = []
            reps = [(0, 1)] + [(1, b) for b in range(p)]
            for a, b in reps:
                g = G.index((a, b, 0))
                H, inc = subgroup_from_generators(G, [g, self.C], f"<{G.fmt(g)},C>")
                out.append((H.name, H, inc, standard_resolution(H, self.cutoff)))
            self._maximal = out
        return self._maximal


@lru_cache(maxsize=None)
def p_data(p: int, n: int, cutoff: int) -> PData:
    return PData(p, n, cutoff)
