"""Finite solvable groups from consistent polycyclic presentations.

A presentation has generators g_1..g_k with relative orders r_i, power
relations ``g_i^{r_i} = w_i`` and conjugate relations
``g_i^{-1} g_j g_i = v_ij`` (j > i), where w_i and v_ij are normal-form
words in g_{i+1}..g_k.  Every element has a unique normal form
``g_1^{e_1} ... g_k^{e_k}`` with ``0 <= e_i < r_i``, stored as an exponent
tuple.  Elements are also numbered in mixed radix (g_1 most significant),
so the identity is index 0 and the numbering follows normal-form order.

Products are computed once by collection from the left and cached in a
multiplication table; all downstream code works with element indices.
"""

from __future__ import annotations

import random
from math import gcd
from typing import Sequence

__all__ = [
    "PGroup",
    "GroupHom",
    "make_P",
    "make_M",
    "make_cyclic",
    "make_elem_abelian",
    "direct_product",
    "make_hom",
    "parse_group_spec",
    "GL2_automorphisms",
    "inner_automorphism",
]


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


class PGroup:
    """A group given by a consistent polycyclic presentation."""

    def __init__(self, name: str, gen_names: Sequence[str], rel_orders: Sequence[int],
                 powers: dict | None = None, conjugates: dict | None = None,
                 commutators: dict | None = None, check: bool = True):
        k = len(rel_orders)
        if len(gen_names) != k:
            raise ValueError("one name per generator required")
        if any(r < 2 for r in rel_orders):
            raise ValueError("relative orders must be at least 2")
        self.name = name
        self.gen_names = tuple(gen_names)
        self.rel_orders = tuple(int(r) for r in rel_orders)
        self.ngens = k
        zero = (0,) * k
        self._powers = []
        for i in range(k):
            w = tuple((powers or {}).get(i, zero))
            self._check_tail(w, i, f"power of {gen_names[i]}")
            self._powers.append(w)
        self._radix = []
        acc = 1
        for r in reversed(self.rel_orders):
            self._radix.append(acc)
            acc *= r
        self._radix.reverse()
        self.order = acc
        self._gen_memo: dict = {}
        # conjugates are filled from the bottom so commutator words can be
        # turned into conjugates with the relations already in place
        self._conj: dict[tuple[int, int], tuple] = {}
        conjugates = conjugates or {}
        commutators = commutators or {}
        for i in reversed(range(k)):
            for j in range(i + 1, k):
                if (j, i) in conjugates:
                    v = tuple(conjugates[(j, i)])
                elif (j, i) in commutators:
                    c = tuple(commutators[(j, i)])
                    self._check_tail(c, i, f"commutator [{gen_names[j]}, {gen_names[i]}]")
                    v = self._mul_vec(self.gen_vector(j), c)
                else:
                    v = self.gen_vector(j)
                self._check_tail(v, i, f"conjugate of {gen_names[j]} by {gen_names[i]}")
                self._conj[(j, i)] = tuple(v)
        self._build_tables()
        if check:
            self.check_consistency()

    # -- presentation level -------------------------------------------------

    def _check_tail(self, w, i, what):
        if len(w) != self.ngens:
            raise ValueError(f"{what}: exponent vector has wrong length")
        if any(w[: i + 1]):
            raise ValueError(f"{what}: word must involve only later generators")
        for e, r in zip(w, self.rel_orders):
            if not 0 <= e < r:
                raise ValueError(f"{what}: exponent out of range")

    def gen_vector(self, i: int) -> tuple:
        v = [0] * self.ngens
        v[i] = 1
        return tuple(v)

    def power_relation(self, i: int) -> tuple:
        return self._powers[i]

    def conjugate_relation(self, j: int, i: int) -> tuple:
        return self._conj[(j, i)]

    def _mul_gen(self, e: tuple, i: int) -> tuple:
        key = (e, i)
        hit = self._gen_memo.get(key)
        if hit is not None:
            return hit
        head = list(e[: i + 1]) + [0] * (self.ngens - i - 1)
        tail = e[i + 1:]
        head[i] += 1
        res = tuple(head)
        if head[i] == self.rel_orders[i]:
            head[i] = 0
            res = self._mul_vec(tuple(head), self._powers[i])
        for off, t in enumerate(tail):
            j = i + 1 + off
            for _ in range(t):
                res = self._mul_vec(res, self._conj[(j, i)])
        self._gen_memo[key] = res
        return res

    def _mul_vec(self, e: tuple, w: tuple) -> tuple:
        for j, wj in enumerate(w):
            for _ in range(wj):
                e = self._mul_gen(e, j)
        return e

    # -- element level ------------------------------------------------------

    def index(self, e: Sequence[int]) -> int:
        if len(e) != self.ngens:
            raise ValueError(f"exponent vector of length {len(e)} for {self.ngens} generators")
        idx = 0
        for x, r, rad in zip(e, self.rel_orders, self._radix):
            if not 0 <= x < r:
                raise ValueError(f"malformed exponent vector {tuple(e)}")
            idx += x * rad
        return idx

    def element(self, idx: int) -> tuple:
        out = []
        for r, rad in zip(self.rel_orders, self._radix):
            out.append((idx // rad) % r)
        return tuple(out)

    def elements(self) -> list[tuple]:
        return self._elements

    def _build_tables(self):
        n = self.order
        self._elements = [self.element(i) for i in range(n)]
        gen_right = []
        for i in range(self.ngens):
            gen_right.append([self.index(self._mul_gen(e, i)) for e in self._elements])
        self._gen_right = gen_right
        table = []
        for g in range(n):
            row = [0] * n
            for h, eh in enumerate(self._elements):
                x = g
                for j, a in enumerate(eh):
                    gr = gen_right[j]
                    for _ in range(a):
                        x = gr[x]
                row[h] = x
            table.append(row)
        self.mul_table = table
        inv = [None] * n
        for g in range(n):
            row = table[g]
            for h in range(n):
                if row[h] == 0:
                    inv[g] = h
                    break
        self.inv_table = inv
        self._gen_memo = {}

    def check_consistency(self, samples: int = 1000, seed: int = 0):
        """Verify the presentation defines a group of order prod(r_i).

        Raises ValueError on the first failure.  Full associativity is
        checked for orders up to 81, random triples beyond that.
        """
        n = self.order
        T = self.mul_table
        for g in range(n):
            if sorted(T[g]) != list(range(n)):
                raise ValueError(f"{self.name}: left multiplication by {self.element(g)} not bijective")
            if T[g][0] != g or T[0][g] != g:
                raise ValueError(f"{self.name}: identity is not neutral")
            if self.inv_table[g] is None or T[self.inv_table[g]][g] != 0:
                raise ValueError(f"{self.name}: missing two-sided inverse")
        if n <= 81:
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        else:
            rng = random.Random(seed)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(samples))
        for a, b, c in triples:
            if T[T[a][b]][c] != T[a][T[b][c]]:
                raise ValueError(f"{self.name}: presentation is inconsistent (associativity fails)")
        # the relations themselves must hold in the table
        for i in range(self.ngens):
            gi = self.index(self.gen_vector(i))
            if self.power_idx(gi, self.rel_orders[i]) != self.index(self._powers[i]):
                raise ValueError(f"{self.name}: power relation {i} fails")

    def multiply(self, g: Sequence[int], h: Sequence[int]) -> tuple:
        return self._elements[self.mul_table[self.index(g)][self.index(h)]]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def inverse(self, g: Sequence[int]) -> tuple:
        return self._elements[self.inv_table[self.index(g)]]

    def power_idx(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv_table[a], -k
        x = 0
        T = self.mul_table
        for _ in range(k):
            x = T[x][a]
        return x

    def word_idx(self, w: Sequence[int]) -> int:
        """Index of the product prod g_j^{w_j} (w need not be reduced)."""
        x = 0
        for j, a in enumerate(w):
            gj = self.index(self.gen_vector(j))
            x = self.mul_table[x][self.power_idx(gj, a)]
        return x

    def gen_idx(self, i: int) -> int:
        return self._radix[i]

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b."""
        T, I = self.mul_table, self.inv_table
        return T[T[I[a]][I[b]]][T[a][b]]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.mul_table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        gens = [self.gen_idx(i) for i in range(self.ngens)]
        T = self.mul_table
        return all(T[a][b] == T[b][a] for a in gens for b in gens)

    def center(self) -> list[int]:
        gens = [self.gen_idx(i) for i in range(self.ngens)]
        T = self.mul_table
        return [z for z in range(self.order) if all(T[z][g] == T[g][z] for g in gens)]

    def closure(self, gens: Sequence[int]) -> list[int]:
        """Subgroup generated by the given element indices (sorted)."""
        T = self.mul_table
        seen = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = T[x][g]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def derived_subgroup(self) -> list[int]:
        n = self.order
        comms = {self.commutator(a, b) for a in range(n) for b in range(n)}
        return self.closure(sorted(comms))

    def exponent(self) -> int:
        e = 1
        for a in range(self.order):
            o = self.element_order(a)
            e = e * o // gcd(e, o)
        return e

    def fmt(self, idx: int) -> str:
        parts = []
        for name, x in zip(self.gen_names, self.element(idx)):
            if x == 1:
                parts.append(name)
            elif x:
                parts.append(f"{name}^{x}")
        return "*".join(parts) or "1"

    def presentation_text(self) -> str:
        lines = [f"{self.name}: generators {', '.join(self.gen_names)}; relative orders {list(self.rel_orders)}"]
        for i in range(self.ngens):
            w = self._powers[i]
            lines.append(f"  {self.gen_names[i]}^{self.rel_orders[i]} = {self.fmt(self.index(w))}")
        for (j, i), v in sorted(self._conj.items()):
            if v != self.gen_vector(j):
                lines.append(f"  {self.gen_names[i]}^-1 {self.gen_names[j]} {self.gen_names[i]} = {self.fmt(self.index(v))}")
        return "\n".join(lines)

    def __repr__(self):
        return f"PGroup({self.name}, order={self.order})"


class GroupHom:
    """A homomorphism, validated by checking the source relations."""

    def __init__(self, src: PGroup, dst: PGroup, images: Sequence, name: str = ""):
        if len(images) != src.ngens:
            raise ValueError(f"need {src.ngens} generator images, got {len(images)}")
        imgs = [dst.index(x) if not isinstance(x, int) else x for x in images]
        self.src, self.dst = src, dst
        self.name = name or f"{src.name}->{dst.name}"
        self.gen_images = tuple(imgs)

        def image_of(w):
            x = 0
            for j, a in enumerate(w):
                x = dst.mul(x, dst.power_idx(imgs[j], a))
            return x

        for i in range(src.ngens):
            lhs = dst.power_idx(imgs[i], src.rel_orders[i])
            if lhs != image_of(src.power_relation(i)):
                raise ValueError(f"{self.name}: relation {src.gen_names[i]}^{src.rel_orders[i]} "
                                 f"= {src.fmt(src.index(src.power_relation(i)))} is not preserved")
            for j in range(i + 1, src.ngens):
                lhs = dst.mul(dst.mul(dst.inv(imgs[i]), imgs[j]), imgs[i])
                if lhs != image_of(src.conjugate_relation(j, i)):
                    raise ValueError(f"{self.name}: relation {src.gen_names[i]}^-1 {src.gen_names[j]} "
                                     f"{src.gen_names[i]} = {src.fmt(src.index(src.conjugate_relation(j, i)))} "
                                     f"is not preserved")
        self.table = [image_of(e) for e in src.elements()]
        self.injective = len(set(self.table)) == src.order
        self.surjective = len(set(self.table)) == dst.order

    def __call__(self, a: int) -> int:
        return self.table[a]

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self after other."""
        if other.dst is not self.src:
            raise ValueError("composition of non-matching homomorphisms")
        return GroupHom(other.src, self.dst, [self.table[x] for x in other.gen_images],
                        name=f"{self.name}.{other.name}")

    def kernel(self) -> list[int]:
        return [a for a, b in enumerate(self.table) if b == 0]

    def image(self) -> list[int]:
        return sorted(set(self.table))

    def preimage_map(self) -> dict[int, int]:
        """For injective maps: target index -> source index."""
        if not self.injective:
            raise ValueError("preimage map needs an injective homomorphism")
        return {b: a for a, b in enumerate(self.table)}

    def __repr__(self):
        return f"GroupHom({self.name})"


def make_hom(src: PGroup, dst: PGroup, images: Sequence, name: str = "") -> GroupHom:
    return GroupHom(src, dst, images, name)


# ---------------------------------------------------------------------------
# constructors


def _check_odd_prime(p, n):
    if not _is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")


def make_P(p: int, n: int) -> PGroup:
    """<A,B,C | A^p = B^p = C^{p^{n-2}} = [A,C] = [B,C] = 1, [A,B] = C^{p^{n-3}}>."""
    _check_odd_prime(p, n)
    c_order = p ** (n - 2)
    # [B, A] = [A, B]^-1 = C^{-p^{n-3}}
    comm_BA = (0, 0, (-(p ** (n - 3))) % c_order)
    return PGroup(f"P({p},{n})", ["A", "B", "C"], [p, p, c_order],
                  commutators={(1, 0): comm_BA})


def make_M(p: int, n: int) -> PGroup:
    """Metacyclic <A,B | A^{p^{n-1}} = B^p = 1, B A B^-1 = A^{1+p^{n-2}}>.

    Generators are ordered (B, A) so that <A> is the normal cyclic subgroup
    at the bottom of the series; then B^-1 A B = A^{1-p^{n-2}}.
    """
    _check_odd_prime(p, n)
    a_order = p ** (n - 1)
    s_inv = (1 - p ** (n - 2)) % a_order
    return PGroup(f"M({p},{n})", ["B", "A"], [p, a_order], conjugates={(1, 0): (0, s_inv)})


def make_cyclic(m: int, name: str | None = None, gen: str = "t") -> PGroup:
    if m < 1:
        raise ValueError("cyclic group order must be positive")
    if m == 1:
        return PGroup(name or "C1", [], [])
    return PGroup(name or f"C{m}", [gen], [m])


def direct_product(G1: PGroup, G2: PGroup, name: str | None = None) -> PGroup:
    k1, k2 = G1.ngens, G2.ngens
    z1, z2 = (0,) * k1, (0,) * k2
    powers, conj = {}, {}
    for i in range(k1):
        powers[i] = G1.power_relation(i) + z2
        for j in range(i + 1, k1):
            conj[(j, i)] = G1.conjugate_relation(j, i) + z2
    for i in range(k2):
        powers[k1 + i] = z1 + G2.power_relation(i)
        for j in range(i + 1, k2):
            conj[(k1 + j, k1 + i)] = z1 + G2.conjugate_relation(j, i)
    names = list(G1.gen_names) + list(G2.gen_names)
    if len(set(names)) != len(names):
        names = [f"{g}1" for g in G1.gen_names] + [f"{g}2" for g in G2.gen_names]
    return PGroup(name or f"{G1.name}x{G2.name}", names, list(G1.rel_orders) + list(G2.rel_orders),
                  powers=powers, conjugates=conj, check=False)


def make_elem_abelian(p: int, rank: int) -> PGroup:
    if rank == 0:
        return make_cyclic(1)
    G = make_cyclic(p, gen="x1")
    for r in range(2, rank + 1):
        G = direct_product(G, make_cyclic(p, gen=f"x{r}"))
    G.name = f"E({p},{rank})"
    return G


def parse_group_spec(spec: str) -> PGroup:
    """Parse CLI group strings: ``P:p=3,n=3``, ``M:p=3,n=4``, ``C:9``, ``E:p=3,rank=2``."""
    try:
        kind, _, rest = spec.partition(":")
        kind = kind.strip().upper()
        if kind == "C":
            return make_cyclic(int(rest))
        args = dict(kv.split("=") for kv in rest.split(",") if kv)
        args = {k.strip(): int(v) for k, v in args.items()}
        if kind == "P":
            return make_P(args["p"], args["n"])
        if kind == "M":
            return make_M(args["p"], args["n"])
        if kind == "E":
            return make_elem_abelian(args["p"], args["rank"])
    except (KeyError, ValueError) as exc:
        raise ValueError(f"bad group spec {spec!r}: {exc}") from exc
    raise ValueError(f"unknown group kind in {spec!r}")


def GL2_automorphisms(Q: PGroup, p: int) -> list[GroupHom]:
    """All automorphisms of C_p x C_p = E(p, 2), indexed by invertible 2x2 matrices.

    The matrix [[a, b], [c, d]] sends x1 -> x1^a x2^c and x2 -> x1^b x2^d.
    """
    out = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p == 0:
                        continue
                    imgs = [Q.index((a, c)), Q.index((b, d))]
                    out.append(GroupHom(Q, Q, imgs, name=f"GL2[{a},{b};{c},{d}]"))
    return out


def inner_automorphism(inc: GroupHom, g: int) -> GroupHom:
    """Conjugation h -> g^-1 h g on a normal subgroup, given its inclusion."""
    G, H = inc.dst, inc.src
    back = inc.preimage_map()
    gi = G.inv(g)
    imgs = []
    for i in range(H.ngens):
        x = G.mul(G.mul(gi, inc(H.gen_idx(i))), g)
        if x not in back:
            raise ValueError("subgroup is not normalized by the given element")
        imgs.append(back[x])
    return GroupHom(H, H, imgs, name=f"conj[{G.fmt(g)}]")
