"""Free resolutions of Z over ZG, with Z-linear contracting homotopies.

Elements of a free ZG-module F_n = (ZG)^{r_n} are sparse dicts mapping a
key to an integer coefficient.  The key ``i * |G| + g`` stands for the
Z-basis element ``g . e_i``.  Differentials are stored (or computed) on
the generators e_i and extended G-equivariantly; contracting homotopies are
Z-linear and are evaluated on single Z-basis keys, with memoisation.

Conventions shared by every construction here:

* ``d h + h d = 1 - eta eps`` in degree 0 and ``d h + h d = 1`` above;
* tensor products use ``d(a (x) b) = da (x) b + (-1)^|a| a (x) db`` and
  ``h = h1 (x) 1 + (eta1 eps1) (x) h2``.
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from .exactlin import IntMatrix
from .groups import GroupHom, PGroup, direct_product, make_cyclic

__all__ = [
    "FreeResolution",
    "ResolutionError",
    "ChainMap",
    "cyclic_resolution",
    "tensor_resolution",
    "perturbed_resolution",
    "bar_resolution",
    "restricted_resolution",
    "lift_chain_map",
    "diagonal_map",
    "validate_resolution",
    "resolution_for",
    "BAR_BUDGET",
]

BAR_BUDGET = 300_000  # maximum bar rank (|G|-1)^D


class ResolutionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# sparse free-module vectors


def vadd(acc: dict, vec: dict, scale: int = 1, m: int = 0) -> dict:
    for k, c in vec.items():
        v = acc.get(k, 0) + scale * c
        if m:
            v %= m
        if v:
            acc[k] = v
        elif k in acc:
            del acc[k]
    return acc


def vact(G: PGroup, g: int, vec: dict) -> dict:
    """Left multiplication by the group element g."""
    if g == 0:
        return dict(vec)
    row = G.mul_table[g]
    n = G.order
    out = {}
    for k, c in vec.items():
        h = k % n
        out[k - h + row[h]] = c
    return out


def vmod(vec: dict, m: int) -> dict:
    if not m:
        return vec
    return {k: c % m for k, c in vec.items() if c % m}


class FreeResolution:
    """Truncated free resolution F_D -> ... -> F_0 -> Z of the trivial module.

    Subclasses supply ``_boundary(n, j)`` (the image of generator e_j of
    F_n in F_{n-1}) and ``_homotopy(n, key)`` (the value of h_n on one
    Z-basis element of F_n, for n < cutoff).
    """

    def __init__(self, group: PGroup, cutoff: int, ranks: Sequence[int], name: str = ""):
        if cutoff < 0:
            raise ValueError("cutoff must be nonnegative")
        self.group = group
        self.cutoff = cutoff
        self.ranks = list(ranks)
        if len(self.ranks) != cutoff + 1:
            raise ValueError("need one rank per degree 0..cutoff")
        self.name = name or f"res({group.name})"
        self._bd_cache: dict = {}
        self._h_cache: dict = {}
        self._cochain_cache: dict = {}
        self.augmentation = [1] * self.ranks[0]
        self.unit = {0: 1} if self.ranks[0] else {}

    # -- structure maps ------------------------------------------------------

    def boundary(self, n: int, j: int) -> dict:
        if not 1 <= n <= self.cutoff:
            raise IndexError(f"no differential in degree {n}")
        key = (n, j)
        out = self._bd_cache.get(key)
        if out is None:
            out = self._boundary(n, j)
            self._bd_cache[key] = out
        return out

    def homotopy(self, n: int, key: int) -> dict:
        if not 0 <= n < self.cutoff:
            raise IndexError(f"homotopy not available in degree {n} (cutoff {self.cutoff})")
        k = (n, key)
        out = self._h_cache.get(k)
        if out is None:
            out = self._homotopy(n, key)
            self._h_cache[k] = out
        return out

    def _boundary(self, n, j):  # pragma: no cover - abstract
        raise NotImplementedError

    def _homotopy(self, n, key):  # pragma: no cover - abstract
        raise NotImplementedError

    def d(self, n: int, vec: dict, m: int = 0) -> dict:
        """Apply d_n: F_n -> F_{n-1} to a vector (ZG-linear)."""
        G = self.group
        order = G.order
        out: dict = {}
        for k, c in vec.items():
            j, g = divmod(k, order)
            vadd(out, vact(G, g, self.boundary(n, j)), c, m)
        return out

    def h(self, n: int, vec: dict, m: int = 0) -> dict:
        out: dict = {}
        for k, c in vec.items():
            vadd(out, self.homotopy(n, k), c, m)
        return out

    def eps(self, vec: dict) -> int:
        order = self.group.order
        return sum(c * self.augmentation[k // order] for k, c in vec.items())

    def zbasis_size(self, n: int) -> int:
        return self.ranks[n] * self.group.order

    # -- trivial-module functor ---------------------------------------------

    def cochain_matrix(self, n: int) -> IntMatrix:
        """Coboundary delta^n : Z^{r_{n-1}} -> Z^{r_n} (trivial coefficients)."""
        hit = self._cochain_cache.get(n)
        if hit is not None:
            return hit
        order = self.group.order
        if n == 0:
            M = IntMatrix(self.ranks[0], 0)
        else:
            ent: dict = {}
            for j in range(self.ranks[n]):
                for k, c in self.boundary(n, j).items():
                    key = (j, k // order)
                    ent[key] = ent.get(key, 0) + c
            M = IntMatrix(self.ranks[n], self.ranks[n - 1], ent)
        self._cochain_cache[n] = M
        return M

    def cochain_rows(self, n: int) -> dict:
        """delta^n as ``{row: {col: value}}`` (consumable by sparse elimination)."""
        rows: dict = {}
        for (r, c), v in self.cochain_matrix(n).items():
            rows.setdefault(r, {})[c] = v
        return rows

    def labels(self, n: int) -> list[str]:
        return [f"e{n}_{j}" for j in range(self.ranks[n])]

    def dump(self) -> str:
        """Text dump: rank lines, then ``n row col : coeff@element`` entries."""
        G = self.group
        lines = [f"{self.name} over {G.name}, cutoff {self.cutoff}"]
        for n, r in enumerate(self.ranks):
            lines.append(f"rank {n} {r}")
        for n in range(1, self.cutoff + 1):
            for j in range(self.ranks[n]):
                for k in sorted(self.boundary(n, j)):
                    i, g = divmod(k, G.order)
                    lines.append(f"{n} {i} {j} : {self.boundary(n, j)[k]}@{G.fmt(g)}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, ranks={self.ranks})"


# ---------------------------------------------------------------------------
# periodic resolution of a cyclic group


class CyclicResolution(FreeResolution):
    """Z[t]/(t^m - 1): d_odd = t - 1, d_even = N, rank one in each degree."""

    def __init__(self, group: PGroup, cutoff: int):
        m = group.order
        if group.ngens > 1:
            raise ValueError("cyclic resolution needs a one-generator group")
        self.m = m
        ranks = [1] * (cutoff + 1) if m > 1 else [1] + [0] * cutoff
        super().__init__(group, cutoff, ranks, name=f"cyclic({group.name})")

    def _boundary(self, n, j):
        m = self.m
        if n % 2:
            return {1: 1, 0: -1}  # t*e - e
        return {g: 1 for g in range(m)}

    def _homotopy(self, n, key):
        m = self.m
        if m == 1:
            return {}
        j = key  # t^j e_n
        if n % 2 == 0:
            return {i: 1 for i in range(j)}
        return {0: 1} if j == m - 1 else {}


def cyclic_resolution(m, cutoff: int) -> FreeResolution:
    """Periodic resolution for C_m; ``m`` may be an order or a cyclic PGroup."""
    group = m if isinstance(m, PGroup) else make_cyclic(m)
    return CyclicResolution(group, cutoff)


# ---------------------------------------------------------------------------
# tensor products


class TensorResolution(FreeResolution):
    def __init__(self, R1: FreeResolution, R2: FreeResolution, group: PGroup | None = None,
                 cutoff: int | None = None):
        if cutoff is None:
            if R1.cutoff != R2.cutoff:
                raise ValueError(f"cutoff mismatch: {R1.cutoff} vs {R2.cutoff}")
            cutoff = R1.cutoff
        if cutoff > min(R1.cutoff, R2.cutoff):
            raise ValueError("tensor cutoff exceeds a factor cutoff")
        G = group or direct_product(R1.group, R2.group)
        if G.order != R1.group.order * R2.group.order:
            raise ValueError("product group has the wrong order")
        self.R1, self.R2 = R1, R2
        self.basis = []  # per degree: list of (i, a, j, b)
        self.pos = []
        ranks = []
        for n in range(cutoff + 1):
            bas = [(i, a, n - i, b) for i in range(n + 1)
                   for a in range(R1.ranks[i]) for b in range(R2.ranks[n - i])]
            self.basis.append(bas)
            self.pos.append({x: k for k, x in enumerate(bas)})
            ranks.append(len(bas))
        super().__init__(G, cutoff, ranks, name=f"({R1.name} (x) {R2.name})")
        self.augmentation = [R1.augmentation[a] * R2.augmentation[b] for (_, a, _, b) in self.basis[0]]
        n2 = R2.group.order
        self.unit = {}
        for k1, c1 in R1.unit.items():
            a, g1 = divmod(k1, R1.group.order)
            for k2, c2 in R2.unit.items():
                b, g2 = divmod(k2, n2)
                key = self.pos[0][(0, a, 0, b)] * G.order + g1 * n2 + g2
                self.unit[key] = self.unit.get(key, 0) + c1 * c2

    def _boundary(self, n, j):
        i, a, jj, b = self.basis[n][j]
        R1, R2 = self.R1, self.R2
        n1, n2 = R1.group.order, R2.group.order
        order = self.group.order
        out: dict = {}
        if i > 0:
            pos = self.pos[n - 1]
            for k, c in R1.boundary(i, a).items():
                a2, g1 = divmod(k, n1)
                key = pos[(i - 1, a2, jj, b)] * order + g1 * n2
                out[key] = out.get(key, 0) + c
        if jj > 0:
            pos = self.pos[n - 1]
            s = -1 if i % 2 else 1
            for k, c in R2.boundary(jj, b).items():
                b2, g2 = divmod(k, n2)
                key = pos[(i, a, jj - 1, b2)] * order + g2
                out[key] = out.get(key, 0) + s * c
        return {k: c for k, c in out.items() if c}

    def _homotopy(self, n, key):
        order = self.group.order
        j, g = divmod(key, order)
        i, a, jj, b = self.basis[n][j]
        R1, R2 = self.R1, self.R2
        n1, n2 = R1.group.order, R2.group.order
        g1, g2 = divmod(g, n2)
        pos = self.pos[n + 1]
        out: dict = {}
        for k, c in R1.homotopy(i, a * n1 + g1).items():
            a2, h1 = divmod(k, n1)
            kk = pos[(i + 1, a2, jj, b)] * order + h1 * n2 + g2
            out[kk] = out.get(kk, 0) + c
        if i == 0:
            e1 = R1.augmentation[a]
            if e1:
                h2 = R2.homotopy(jj, b * n2 + g2)
                for ku, cu in R1.unit.items():
                    a0, u1 = divmod(ku, n1)
                    for k, c in h2.items():
                        b2, h2g = divmod(k, n2)
                        kk = pos[(0, a0, jj + 1, b2)] * order + u1 * n2 + h2g
                        out[kk] = out.get(kk, 0) + e1 * cu * c
        return {k: c for k, c in out.items() if c}

    def labels(self, n):
        return [f"[{i}.{a}|{j}.{b}]" for (i, a, j, b) in self.basis[n]]


def tensor_resolution(R1: FreeResolution, R2: FreeResolution, group: PGroup | None = None) -> FreeResolution:
    """Resolution of the direct product from resolutions of the factors."""
    return TensorResolution(R1, R2, group)


# ---------------------------------------------------------------------------
# twisted tensor product along N <| G with G/N = Q


class PerturbedResolution(FreeResolution):
    """Resolution of G on the tensor basis of resolutions of N and Q.

    The differential is d_0 + d_1 + d_2 + ... where d_0 is the fibre
    differential and d_k lowers base degree by k; each d_k is solved from
    ``sum_i d_i d_{k-i} = 0`` with the fibre-direction homotopy.  The
    contracting homotopy comes from the basic perturbation formulas applied
    to the fibrewise contraction, followed by the base homotopy.
    """

    def __init__(self, R_base: FreeResolution, R_fiber: FreeResolution,
                 inclusion: GroupHom, quotient: GroupHom, cutoff: int | None = None,
                 name: str = ""):
        G = inclusion.dst
        if quotient.src is not G:
            raise ValueError("inclusion and quotient must share the middle group")
        if quotient.dst is not R_base.group or inclusion.src is not R_fiber.group:
            raise ValueError("resolutions must be over the quotient and the fibre")
        if not inclusion.injective or not quotient.surjective:
            raise ValueError("need an injective inclusion and a surjective quotient")
        if set(quotient.kernel()) != set(inclusion.image()):
            raise ValueError("fibre is not the kernel of the quotient map")
        if cutoff is None:
            cutoff = min(R_base.cutoff, R_fiber.cutoff)
        if cutoff > min(R_base.cutoff, R_fiber.cutoff):
            raise ValueError("cutoff exceeds an input resolution")
        self.RQ, self.RN = R_base, R_fiber
        self.inc, self.quo = inclusion, quotient
        N, Q = R_fiber.group, R_base.group
        # section Q -> G: smallest element of each fibre
        sec = [None] * Q.order
        for g in range(G.order):
            q = quotient(g)
            if sec[q] is None:
                sec[q] = g
        self.sec = sec
        back = inclusion.preimage_map()
        self.dec = []
        for g in range(G.order):
            q = quotient(g)
            self.dec.append((q, back[G.mul(G.inv(sec[q]), g)]))
        self.basis, self.pos = [], []
        ranks = []
        for n in range(cutoff + 1):
            bas = [(p, a, n - p, b) for p in range(n + 1)
                   for a in range(R_base.ranks[p]) for b in range(R_fiber.ranks[n - p])]
            self.basis.append(bas)
            self.pos.append({x: k for k, x in enumerate(bas)})
            ranks.append(len(bas))
        super().__init__(G, cutoff, ranks, name=name or f"twisted({Q.name} <- {G.name} <- {N.name})")
        self.augmentation = [R_base.augmentation[a] * R_fiber.augmentation[b]
                             for (_, a, _, b) in self.basis[0]]
        self._hv_cache: dict = {}
        self._nabla_cache: dict = {}
        self._parts = [None] + [[None] * r for r in ranks[1:]]
        for n in range(1, cutoff + 1):
            for j in range(ranks[n]):
                self._solve_generator(n, j)
        self.unit = self.nabla(0, R_base.unit)

    # -- fibrewise data ---------------------------------------------------

    def hv_key(self, n: int, key: int) -> dict:
        """Fibrewise contraction on one Z-basis element of degree n."""
        hit = self._hv_cache.get((n, key))
        if hit is not None:
            return hit
        G = self.group
        order = G.order
        j, g = divmod(key, order)
        p, a, q, b = self.basis[n][j]
        qq, nn = self.dec[g]
        s = self.sec[qq]
        nN = self.RN.group.order
        pos = self.pos[n + 1]
        out: dict = {}
        for k, c in self.RN.homotopy(q, b * nN + nn).items():
            b2, n2 = divmod(k, nN)
            kk = pos[(p, a, q + 1, b2)] * order + G.mul(s, self.inc(n2))
            out[kk] = out.get(kk, 0) + c
        out = {k: c for k, c in out.items() if c}
        self._hv_cache[(n, key)] = out
        return out

    def hv(self, n: int, vec: dict) -> dict:
        out: dict = {}
        for k, c in vec.items():
            vadd(out, self.hv_key(n, k), c)
        return out

    def nabla(self, n: int, vec: dict) -> dict:
        """Embed ZQ (x) A_n into the fibre-degree-0 part, via the section."""
        G = self.group
        order, nQ = G.order, self.RQ.group.order
        pos = self.pos[n]
        out: dict = {}
        for k, c in vec.items():
            a, q = divmod(k, nQ)
            s = self.sec[q]
            for ku, cu in self.RN.unit.items():
                b, u = divmod(ku, self.RN.group.order)
                kk = pos[(n, a, 0, b)] * order + G.mul(s, self.inc(u))
                out[kk] = out.get(kk, 0) + c * cu
        return {k: c for k, c in out.items() if c}

    def proj(self, n: int, vec: dict) -> dict:
        """Fibrewise augmentation onto ZQ (x) A_n."""
        order, nQ = self.group.order, self.RQ.group.order
        out: dict = {}
        for k, c in vec.items():
            j, g = divmod(k, order)
            p, a, q, b = self.basis[n][j]
            if q:
                continue
            e = self.RN.augmentation[b]
            if e:
                kk = a * nQ + self.quo(g)
                out[kk] = out.get(kk, 0) + c * e
        return {k: c for k, c in out.items() if c}

    # -- differential solving ----------------------------------------------

    def _apply_part(self, n: int, vec: dict, k: int) -> dict:
        """Apply the component d_k (ZG-linear) to a vector of degree n."""
        G = self.group
        order = G.order
        out: dict = {}
        for key, c in vec.items():
            j, g = divmod(key, order)
            comp = self._parts[n][j].get(k)
            if comp:
                vadd(out, vact(G, g, comp), c)
        return out

    def _solve_generator(self, n: int, j: int):
        p, a, q, b = self.basis[n][j]
        order = self.group.order
        parts: dict[int, dict] = {}
        if q > 0:
            pos = self.pos[n - 1]
            nN = self.RN.group.order
            d0: dict = {}
            for k, c in self.RN.boundary(q, b).items():
                b2, n2 = divmod(k, nN)
                kk = pos[(p, a, q - 1, b2)] * order + self.inc(n2)
                d0[kk] = d0.get(kk, 0) + c
            parts[0] = {k: c for k, c in d0.items() if c}
        else:
            parts[0] = {}
        self._parts[n][j] = parts
        for k in range(1, p + 1):
            if q == 0 and k == 1:
                e = self.RN.augmentation[b]
                dk = self.nabla(p - 1, self.RQ.boundary(p, a)) if e else {}
                if e not in (0, 1):
                    dk = {kk: e * c for kk, c in dk.items()}
            else:
                rhs: dict = {}
                for i in range(1, k + 1):
                    prev = parts.get(k - i)
                    if prev:
                        vadd(rhs, self._apply_part(n - 1, prev, i), -1)
                dk = self.hv(n - 2, rhs) if rhs else {}
            parts[k] = dk

    def _boundary(self, n, j):
        out: dict = {}
        for comp in self._parts[n][j].values():
            vadd(out, comp)
        return out

    def _t(self, n: int, vec: dict) -> dict:
        """The perturbation (all components but d_0) applied in degree n."""
        G = self.group
        order = G.order
        out: dict = {}
        for key, c in vec.items():
            j, g = divmod(key, order)
            for k, comp in self._parts[n][j].items():
                if k and comp:
                    vadd(out, vact(G, g, comp), c)
        return out

    def _A(self, n: int, vec: dict) -> dict:
        """sum_k (-t h)^k t on a vector of degree n (result in degree n-1)."""
        cur = self._t(n, vec)
        total = dict(cur)
        while cur:
            cur = self._t(n, self.hv(n - 1, cur))
            cur = {k: -c for k, c in cur.items()}
            vadd(total, cur)
        return total

    def nabla_prime(self, n: int, vec: dict) -> dict:
        out = self.nabla(n, vec)
        if n == 0 or not out:
            return out
        return vadd(dict(out), self.hv(n - 1, self._A(n, out)), -1)

    def _homotopy(self, n, key):
        y = self.hv_key(n, key)
        out = dict(y)
        if y:
            vadd(out, self.hv(n, self._A(n + 1, y)), -1)
        pix = self.proj(n, {key: 1})
        if pix:
            z = self.RQ.h(n, pix)
            if z:
                vadd(out, self.nabla_prime(n + 1, z))
        return out

    def labels(self, n):
        return [f"[{p}.{a}|{q}.{b}]" for (p, a, q, b) in self.basis[n]]


def perturbed_resolution(R_base: FreeResolution, R_fiber: FreeResolution,
                         inclusion: GroupHom, quotient: GroupHom, cutoff: int | None = None,
                         name: str = "") -> FreeResolution:
    return PerturbedResolution(R_base, R_fiber, inclusion, quotient, cutoff, name)


# ---------------------------------------------------------------------------
# normalized bar resolution


class BarResolution(FreeResolution):
    """Normalized bar resolution; generators are tuples of non-identity elements."""

    def __init__(self, group: PGroup, cutoff: int, budget: int = BAR_BUDGET):
        b = group.order - 1
        if b ** cutoff > budget and group.order > 1:
            raise ResolutionError(f"bar resolution of {group.name} to degree {cutoff} "
                                  f"has rank {b ** cutoff}, over budget {budget}")
        self.base = b
        ranks = [b ** n for n in range(cutoff + 1)]
        super().__init__(group, cutoff, ranks, name=f"bar({group.name})")

    def cell(self, n: int, j: int) -> tuple:
        out = []
        for _ in range(n):
            j, r = divmod(j, self.base)
            out.append(r + 1)
        return tuple(reversed(out))

    def cell_index(self, cell: Sequence[int]) -> int:
        j = 0
        for g in cell:
            j = j * self.base + (g - 1)
        return j

    # boundaries and homotopies are cheap to recompute; caching them would
    # cost far more memory than time at the top degrees
    def boundary(self, n, j):
        if not 1 <= n <= self.cutoff:
            raise IndexError(f"no differential in degree {n}")
        return self._boundary(n, j)

    def homotopy(self, n, key):
        if not 0 <= n < self.cutoff:
            raise IndexError(f"homotopy not available in degree {n} (cutoff {self.cutoff})")
        return self._homotopy(n, key)

    def cochain_rows(self, n: int) -> dict:
        """delta^n on normalized cochains, built straight from the face formula."""
        mt = self.group.mul_table
        base = self.base
        rows: dict = {}
        if n == 0:
            return rows
        for r, cell in enumerate(itertools.product(range(1, self.group.order), repeat=n)):
            row: dict = {}

            def add(c, sub):
                k = 0
                for g in sub:
                    k = k * base + (g - 1)
                v = row.get(k, 0) + c
                if v:
                    row[k] = v
                else:
                    row.pop(k, None)

            add(1, cell[1:])
            for i in range(n - 1):
                x = mt[cell[i]][cell[i + 1]]
                if x:
                    add(-1 if i % 2 == 0 else 1, cell[:i] + (x,) + cell[i + 2:])
            add(-1 if n % 2 else 1, cell[:-1])
            if row:
                rows[r] = row
        return rows

    def cochain_matrix(self, n: int) -> IntMatrix:
        hit = self._cochain_cache.get(n)
        if hit is None:
            ent = {(r, c): v for r, row in self.cochain_rows(n).items() for c, v in row.items()}
            hit = IntMatrix(self.ranks[n], self.ranks[n - 1] if n else 0, ent)
            self._cochain_cache[n] = hit
        return hit

    def _boundary(self, n, j):
        G = self.group
        order = G.order
        cell = self.cell(n, j)
        out: dict = {}

        def add(c, g, sub):
            k = self.cell_index(sub) * order + g
            out[k] = out.get(k, 0) + c

        add(1, cell[0], cell[1:])
        for i in range(n - 1):
            x = G.mul(cell[i], cell[i + 1])
            if x:
                add((-1) ** (i + 1), 0, cell[:i] + (x,) + cell[i + 2:])
        add((-1) ** n, 0, cell[:-1])
        return {k: c for k, c in out.items() if c}

    def _homotopy(self, n, key):
        j, g = divmod(key, self.group.order)
        if g == 0:
            return {}
        return {self.cell_index((g,) + self.cell(n, j)) * self.group.order: 1}

    def labels(self, n):
        G = self.group
        return ["[" + "|".join(G.fmt(g) for g in self.cell(n, j)) + "]" for j in range(self.ranks[n])]


def bar_resolution(G: PGroup, cutoff: int, budget: int = BAR_BUDGET) -> FreeResolution:
    return BarResolution(G, cutoff, budget)


# ---------------------------------------------------------------------------
# restriction of scalars to a subgroup


class RestrictedResolution(FreeResolution):
    """A resolution over G viewed as a free resolution over a subgroup H.

    With right cosets G = H t_0 u ... u H t_{k-1} (t_i the smallest element of
    its coset, cosets listed in order of their representatives), F_n has the
    H-basis {t_i e_j}, numbered j * k + i.  The Z-basis and the contracting
    homotopy are those of the original resolution.
    """

    def __init__(self, R: FreeResolution, inc: GroupHom):
        if inc.dst is not R.group or not inc.injective:
            raise ValueError("need an injective homomorphism into the resolution's group")
        G, H = R.group, inc.src
        back = inc.preimage_map()
        himg = [inc(h) for h in range(H.order)]
        reps, where = [], [None] * G.order
        for g in range(G.order):
            if where[g] is not None:
                continue
            ti = len(reps)
            reps.append(g)
            for h in range(H.order):
                where[G.mul(himg[h], g)] = (ti, h)
        self.R, self.inc = R, inc
        self.reps, self.where = reps, where
        self.index = len(reps)
        super().__init__(H, R.cutoff, [r * self.index for r in R.ranks],
                         name=f"res({R.name} to {H.name})")
        k = self.index
        self.augmentation = [R.augmentation[jt // k] for jt in range(self.ranks[0])]
        self.unit = self.rewrite(R.unit)
        self._back = back

    def rewrite(self, vec: dict) -> dict:
        order, horder, k = self.R.group.order, self.group.order, self.index
        out = {}
        for key, c in vec.items():
            j, g = divmod(key, order)
            ti, h = self.where[g]
            out[(j * k + ti) * horder + h] = c
        return out

    def original_key(self, key: int) -> int:
        jt, h = divmod(key, self.group.order)
        j, ti = divmod(jt, self.index)
        G = self.R.group
        return j * G.order + G.mul(self.inc(h), self.reps[ti])

    def _boundary(self, n, jt):
        j, ti = divmod(jt, self.index)
        return self.rewrite(vact(self.R.group, self.reps[ti], self.R.boundary(n, j)))

    def _homotopy(self, n, key):
        return self.rewrite(self.R.homotopy(n, self.original_key(key)))


def restricted_resolution(R: FreeResolution, inc: GroupHom) -> FreeResolution:
    return RestrictedResolution(R, inc)


# ---------------------------------------------------------------------------
# validation


def validate_resolution(R: FreeResolution, upto: int | None = None) -> dict:
    """Check every resolution identity; raises ResolutionError on failure.

    d^2 = 0 and eps d_1 = 0 are checked on generators (equivariance extends
    them to all of F_n); the homotopy identities are checked on every
    Z-basis element, since the homotopy is only Z-linear.
    """
    top = R.cutoff if upto is None else min(upto, R.cutoff)
    G = R.group
    order = G.order
    checked = 0
    if R.eps(R.unit) != 1:
        raise ResolutionError(f"{R.name}: eps(eta(1)) != 1")
    for j in range(R.ranks[1] if top >= 1 else 0):
        if R.eps(R.boundary(1, j)):
            raise ResolutionError(f"{R.name}: eps d_1 != 0 on generator {j}")
    for n in range(2, top + 1):
        for j in range(R.ranks[n]):
            if R.d(n - 1, R.boundary(n, j)):
                raise ResolutionError(f"{R.name}: d_{n-1} d_{n} != 0 on generator {j}")
    for n in range(0, min(top, R.cutoff - 1) + 1):
        if n >= R.cutoff:
            break
        for key in range(R.ranks[n] * order):
            hx = R.homotopy(n, key)
            lhs = R.d(n + 1, hx)
            if n == 0:
                e = R.eps({key: 1})
                if e:
                    vadd(lhs, R.unit, e)
            else:
                vadd(lhs, R.h(n - 1, R.d(n, {key: 1})))
            if lhs != {key: 1}:
                raise ResolutionError(f"{R.name}: homotopy identity fails in degree {n} at basis key {key}")
            checked += 1
    return {"resolution": R.name, "cutoff": top, "ranks": R.ranks[: top + 1], "zbasis_checked": checked}


# ---------------------------------------------------------------------------
# chain maps


class ChainMap:
    """phi_k : F^src_{k+shift} -> F^tgt_k, equivariant along a homomorphism.

    ``images[k][j]`` is phi_k(e_j) as a vector of the target.  With
    ``modulus`` m > 0 the map lives on the complexes reduced mod m.
    """

    def __init__(self, src: FreeResolution, tgt: FreeResolution, hom: GroupHom | None,
                 images: list, shift: int = 0, modulus: int = 0):
        self.src, self.tgt, self.hom = src, tgt, hom
        self.images = images
        self.shift = shift
        self.modulus = modulus

    @property
    def top(self) -> int:
        return len(self.images) - 1

    def apply(self, k: int, vec: dict) -> dict:
        """phi_k on a vector of F^src_{k+shift}."""
        src_order = self.src.group.order
        G = self.tgt.group
        f = self.hom.table if self.hom is not None else None
        out: dict = {}
        imgs = self.images[k]
        for key, c in vec.items():
            j, g = divmod(key, src_order)
            tg = f[g] if f is not None else g
            vadd(out, vact(G, tg, imgs[j]), c, self.modulus)
        return out

    def matrix(self, k: int) -> IntMatrix:
        """Augmented block: rows index target generators, columns source generators."""
        order = self.tgt.group.order
        ent: dict = {}
        for j, img in enumerate(self.images[k]):
            for key, c in img.items():
                kk = (key // order, j)
                ent[kk] = ent.get(kk, 0) + c
        return IntMatrix(self.tgt.ranks[k], self.src.ranks[k + self.shift], ent)

    def pullback(self, k: int, cocycle: Sequence[int]) -> list[int]:
        """Cochain on F^src_{k+shift} from a cochain on F^tgt_k."""
        order = self.tgt.group.order
        m = self.modulus
        out = []
        for img in self.images[k]:
            s = 0
            for key, c in img.items():
                v = cocycle[key // order]
                if v:
                    s += c * v
            out.append(s % m if m else s)
        return out

    @property
    def max_degree(self) -> int:
        return min(self.src.cutoff - self.shift, self.tgt.cutoff)

    def extend(self, top: int) -> "ChainMap":
        """Lift further, phi_k(e) = h_{k-1}(phi_{k-1}(d e)), up to degree ``top``."""
        if top > self.max_degree:
            raise ResolutionError(f"lift to degree {top} needs homotopy beyond cutoff {self.tgt.cutoff}")
        m = self.modulus
        src, tgt = self.src, self.tgt
        for k in range(self.top + 1, top + 1):
            n = k + self.shift
            row = []
            for j in range(src.ranks[n]):
                y = self.apply(k - 1, src.boundary(n, j))
                row.append(vmod(tgt.h(k - 1, y, m), m) if y else {})
            self.images.append(row)
        return self

    def commutes(self) -> bool:
        """Check d phi = phi d on all generators and eps phi_0 = eps (shift 0)."""
        m = self.modulus
        for k in range(1, self.top + 1):
            n = k + self.shift
            for j in range(self.src.ranks[n]):
                lhs = vmod(self.tgt.d(k, self.images[k][j], m), m)
                rhs = vmod(self.apply(k - 1, self.src.boundary(n, j)), m)
                if lhs != rhs:
                    return False
        if self.shift == 0 and self.images:
            for j in range(self.src.ranks[0]):
                a = self.tgt.eps(self.images[0][j]) - self.src.augmentation[j]
                if (a % m if m else a):
                    return False
        return True


def lift_chain_map(f: GroupHom | None, src: FreeResolution, tgt: FreeResolution,
                   seed: list | None = None, upto: int | None = None, shift: int = 0,
                   modulus: int = 0) -> ChainMap:
    """Lift along f using the target's contracting homotopy.

    phi_0 comes from ``seed`` (vectors of F^tgt_0, one per generator of
    F^src_shift) or, for shift 0, from eps_src(e_j) eta_tgt(1).  Then
    phi_k(e) = h_{k-1}(phi_{k-1}(d e)).
    """
    if f is not None and (f.src is not src.group or f.dst is not tgt.group):
        raise ValueError("homomorphism does not link the two resolutions' groups")
    if f is None and src.group is not tgt.group:
        raise ValueError("identity lift needs a common group")
    top = min(src.cutoff - shift, tgt.cutoff)
    if upto is not None:
        if upto > top:
            raise ResolutionError(f"lift to degree {upto} needs homotopy beyond cutoff {tgt.cutoff}")
        top = upto
    m = modulus
    if seed is None:
        if shift:
            raise ValueError("shifted lifts need an explicit seed")
        seed = [{k: c * e for k, c in tgt.unit.items()} for e in src.augmentation]
    phi = ChainMap(src, tgt, f, [[vmod(dict(v), m) for v in seed]], shift, m)
    phi.extend(top)
    return phi


def diagonal_map(R: FreeResolution, upto: int | None = None,
                 RR: FreeResolution | None = None) -> ChainMap:
    """Chain map R -> R (x) R over the diagonal G -> G x G."""
    RR = RR or tensor_resolution(R, R)
    G, GG = R.group, RR.group
    diag = GroupHom(G, GG, [G.gen_idx(i) * G.order + G.gen_idx(i) for i in range(G.ngens)],
                    name=f"diag({G.name})")
    return lift_chain_map(diag, R, RR, upto=upto)


# ---------------------------------------------------------------------------
# standard resolutions of the groups in play


def resolution_for(G: PGroup, cutoff: int, kind: str | None = None) -> FreeResolution:
    """Build the standard resolution for a group from the constructors above.

    Direct products of cyclic groups get tensor products; P(p,n) and
    M(p,n) get the twisted construction along their central/cyclic normal
    subgroups (see ``pgroupcoh.families``).
    """
    from . import families

    return families.standard_resolution(G, cutoff, kind)
