"""Complete subgroup lattices: enumeration, normalizers, closures, Sylow theory.

Subgroups are sorted index arrays over a parent Group; the lattice holds
every subgroup, found by seeding with the cyclic subgroups and closing
under pairwise joins.  All outputs are sorted by (order, bitset) so that
witness selection downstream is deterministic.
"""

from __future__ import annotations

import json

import numpy as np

from .config import DEFAULT_BUDGET, Budget
from .errors import BudgetExceededError
from .groups import Group, close_under_product


class Subgroup:
    __slots__ = ("parent", "members", "_key")

    def __init__(self, parent: Group, members):
        self.parent = parent
        m = np.unique(np.asarray(members, dtype=np.intp))
        m.setflags(write=False)
        self.members = m
        self._key = None

    @property
    def order(self) -> int:
        return int(self.members.size)

    @property
    def key(self) -> bytes:
        if self._key is None:
            mask = np.zeros(self.parent.order, dtype=bool)
            mask[self.members] = True
            self._key = np.packbits(mask).tobytes()
        return self._key

    def sort_key(self) -> tuple[int, bytes]:
        return (self.order, self.key)

    def mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[self.members] = True
        return mask

    def contains(self, other: "Subgroup") -> bool:
        return bool(np.isin(other.members, self.members, assume_unique=True).all())

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent is other.parent and self.key == other.key

    def __hash__(self) -> int:
        return hash((id(self.parent), self.key))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.label})"


def subgroup_from_generators(g: Group, gens) -> Subgroup:
    members = close_under_product(g.mul, np.asarray(list(gens) + [0], dtype=np.intp), cutoff_to_full=False)
    return Subgroup(g, members)


def trivial_subgroup(g: Group) -> Subgroup:
    return Subgroup(g, [0])


def full_subgroup(g: Group) -> Subgroup:
    return Subgroup(g, np.arange(g.order))


class SubgroupLattice:
    def __init__(self, group: Group, subgroups: list[Subgroup], budget: Budget):
        self.group = group
        self.subgroups = subgroups  # sorted by (order, bitset)
        self.budget = budget
        self.index_by_key = {s.key: i for i, s in enumerate(subgroups)}
        self.normal = np.zeros(len(subgroups), dtype=bool)
        self.maximal = np.zeros(len(subgroups), dtype=bool)
        self.class_id = np.full(len(subgroups), -1, dtype=np.int64)
        self._annotate()

    def _annotate(self):
        g = self.group
        conj = g.conj_table()
        conjugators = list(g.generators) if (g.generators or g.order == 1) else list(range(g.order))
        # conjugacy classes, iterating in sorted order so class ids are canonical
        next_class = 0
        for i, sub in enumerate(self.subgroups):
            if self.class_id[i] != -1:
                continue
            orbit = [i]
            self.class_id[i] = next_class
            queue = [sub.members]
            seen = {sub.key}
            while queue:
                mem = queue.pop()
                for gen in conjugators:
                    conjugated = np.sort(conj[gen][mem])
                    j = self.index_by_key.get(_key_of(g.order, conjugated))
                    if j is None:
                        raise AssertionError("lattice not closed under conjugation")
                    if self.subgroups[j].key not in seen:
                        seen.add(self.subgroups[j].key)
                        self.class_id[j] = next_class
                        orbit.append(j)
                        queue.append(self.subgroups[j].members)
            if len(orbit) == 1:
                self.normal[orbit[0]] = True
            next_class += 1
        # maximality: proper subgroups not contained in a larger proper subgroup
        orders = np.array([s.order for s in self.subgroups])
        n = self.group.order
        member_sets = [frozenset(s.members.tolist()) for s in self.subgroups]
        for i, sub in enumerate(self.subgroups):
            if sub.order == n:
                continue
            is_max = True
            for j in range(len(self.subgroups)):
                if orders[j] <= sub.order or orders[j] == n:
                    continue
                if orders[j] % sub.order == 0 and member_sets[i] <= member_sets[j]:
                    is_max = False
                    break
            self.maximal[i] = is_max

    def subgroup_index(self, sub: Subgroup) -> int:
        idx = self.index_by_key.get(sub.key)
        if idx is None:
            raise AssertionError("subgroup not in lattice")
        return idx

    def class_representatives(self) -> list[Subgroup]:
        seen: set[int] = set()
        reps = []
        for i, sub in enumerate(self.subgroups):
            cid = int(self.class_id[i])
            if cid not in seen:
                seen.add(cid)
                reps.append(sub)
        return reps

    def conjugacy_class_size(self, i: int) -> int:
        return int((self.class_id == self.class_id[i]).sum())

    def normal_subgroups(self) -> list[Subgroup]:
        return [s for i, s in enumerate(self.subgroups) if self.normal[i]]

    def maximal_subgroups(self) -> list[Subgroup]:
        return [s for i, s in enumerate(self.subgroups) if self.maximal[i]]

    def subgroups_of_order(self, order: int) -> list[Subgroup]:
        return [s for s in self.subgroups if s.order == order]

    def subgroups_inside(self, sub: Subgroup) -> list[Subgroup]:
        mask = sub.mask()
        return [s for s in self.subgroups if mask[s.members].all()]


def _key_of(n: int, members: np.ndarray) -> bytes:
    mask = np.zeros(n, dtype=bool)
    mask[members] = True
    return np.packbits(mask).tobytes()


def all_subgroups(g: Group, budget: Budget = DEFAULT_BUDGET) -> SubgroupLattice:
    """Every subgroup of g: cyclic seeds, then pairwise joins until fixpoint.

    Joins are only computed against one representative per conjugacy class;
    a join of a conjugate is the matching conjugate of a join, so closing
    each new subgroup's conjugation orbit keeps the enumeration complete
    while cutting the join count by the typical class size.
    """
    cached = g._cache.get(("lattice", budget.max_subgroups, budget.max_join_attempts))
    if cached is not None:
        return cached
    n = g.order
    mul = g.mul
    conj = g.conj_table()
    conjugators = list(g.generators) if (g.generators or n == 1) else list(range(n))
    found: dict[bytes, np.ndarray] = {}
    reps: list[np.ndarray] = []

    def _add_single(members: np.ndarray, key: bytes):
        if len(found) >= budget.max_subgroups:
            raise BudgetExceededError(
                f"subgroup budget {budget.max_subgroups} exceeded", partial=len(found)
            )
        found[key] = members

    def orbit_add(members: np.ndarray):
        key = _key_of(n, members)
        if key in found:
            return
        _add_single(members, key)
        reps.append(members)
        queue = [members]
        while queue:
            mem = queue.pop()
            for c in conjugators:
                cm = np.sort(conj[c][mem])
                k2 = _key_of(n, cm)
                if k2 not in found:
                    _add_single(cm, k2)
                    queue.append(cm)

    orbit_add(np.array([0], dtype=np.intp))
    cyclic: list[np.ndarray] = []
    seen_cyc = set()
    for x in range(1, n):
        powers = [0]
        cur = x
        while cur != 0:
            powers.append(cur)
            cur = int(mul[cur, x])
        members = np.unique(np.array(powers, dtype=np.intp))
        key = _key_of(n, members)
        if key not in seen_cyc:
            seen_cyc.add(key)
            cyclic.append(members)
            orbit_add(members)
    cyc_sets = [frozenset(c.tolist()) for c in cyclic]

    join_attempts = 0
    head = 0
    while head < len(reps):
        base = reps[head]
        head += 1
        if base.size == n:
            continue
        base_set = frozenset(base.tolist())
        for cyc, cyc_set in zip(cyclic, cyc_sets):
            if cyc_set <= base_set:
                continue
            join_attempts += 1
            if join_attempts > budget.max_join_attempts:
                raise BudgetExceededError(
                    f"join budget {budget.max_join_attempts} exceeded", partial=len(found)
                )
            joined = close_under_product(mul, np.concatenate([base, cyc]))
            orbit_add(joined)

    subs = [Subgroup(g, m) for m in found.values()]
    subs.sort(key=lambda s: s.sort_key())
    lattice = SubgroupLattice(g, subs, budget)
    g._cache[("lattice", budget.max_subgroups, budget.max_join_attempts)] = lattice
    return lattice


# --- member-level primitives (no lattice required) --------------------------------


def normalizer_members(g: Group, members) -> np.ndarray:
    members = np.asarray(members, dtype=np.intp)
    conj = g.conj_table()
    mask = np.zeros(g.order, dtype=bool)
    mask[members] = True
    ok = mask[conj[:, members]].all(axis=1)
    return np.flatnonzero(ok).astype(np.intp)


def normal_closure_members(g: Group, members, within=None) -> np.ndarray:
    """Smallest subgroup containing ``members`` normalized by ``within`` (default G)."""
    conj = g.conj_table()
    conjugators = np.asarray(within, dtype=np.intp) if within is not None else None
    cur = close_under_product(g.mul, np.asarray(members, dtype=np.intp), cutoff_to_full=False)
    if conjugators is None:
        conjugators = np.asarray(g.generators, dtype=np.intp)
        if conjugators.size == 0 and g.order > 1:
            conjugators = np.arange(g.order, dtype=np.intp)
    while True:
        spread = conj[conjugators][:, cur] if conjugators.size else cur
        spread = np.unique(spread)
        if np.isin(spread, cur, assume_unique=True).all():
            return cur
        cur = close_under_product(g.mul, np.union1d(cur, spread), cutoff_to_full=False)


def centralizer_members(g: Group, members) -> np.ndarray:
    members = np.asarray(members, dtype=np.intp)
    left = g.mul[:, members]
    right = g.mul[members, :].T
    return np.flatnonzero((left == right).all(axis=1)).astype(np.intp)


# --- subgroup operations ----------------------------------------------------------


def normalizer(g: Group, h: Subgroup) -> Subgroup:
    return Subgroup(g, normalizer_members(g, h.members))


def normal_closure(g: Group, h: Subgroup) -> Subgroup:
    return Subgroup(g, normal_closure_members(g, h.members))


def centralizer(g: Group, h: Subgroup) -> Subgroup:
    return Subgroup(g, centralizer_members(g, h.members))


def center(g: Group) -> Subgroup:
    return Subgroup(g, centralizer_members(g, np.arange(g.order)))


def is_normal(g: Group, h: Subgroup) -> bool:
    return normalizer_members(g, h.members).size == g.order


def is_subnormal(g: Group, h: Subgroup) -> bool:
    """Descending normal-closure chain K0 = G, K_{i+1} = <h^K_i> stabilizes at h."""
    current = np.arange(g.order, dtype=np.intp)
    while True:
        nxt = normal_closure_members(g, h.members, within=current)
        if nxt.size == h.members.size:
            return True
        if nxt.size == current.size:
            return False
        current = nxt


def sylow_subgroups(g: Group, p: int, budget: Budget = DEFAULT_BUDGET) -> list[Subgroup]:
    lattice = all_subgroups(g, budget)
    target = 1
    while g.order % (target * p) == 0:
        target *= p
    return lattice.subgroups_of_order(target)


def maximal_subgroups(g: Group, budget: Budget = DEFAULT_BUDGET) -> list[Subgroup]:
    return all_subgroups(g, budget).maximal_subgroups()


def second_maximal_subgroups(g: Group, budget: Budget = DEFAULT_BUDGET) -> list[Subgroup]:
    """Maximal subgroups of maximal subgroups, deduplicated across the group."""
    lattice = all_subgroups(g, budget)
    out: dict[bytes, Subgroup] = {}
    for top in lattice.maximal_subgroups():
        inside = [s for s in lattice.subgroups_inside(top) if s.order < top.order]
        for s in inside:
            is_max_in_top = not any(
                t.order > s.order and t.order < top.order and t.contains(s) for t in inside
            )
            if is_max_in_top:
                out[s.key] = s
    return sorted(out.values(), key=lambda s: s.sort_key())


def subgroup_product(g: Group, a: Subgroup, b: Subgroup) -> tuple[int, bool]:
    """Size of the product set AB, and whether it is all of G.

    When either factor is normal the product is a subgroup and the size
    follows from |A||B|/|A n B|; otherwise the literal product set is
    enumerated.
    """
    if is_normal(g, a) or is_normal(g, b):
        meet = np.intersect1d(a.members, b.members, assume_unique=True)
        size = a.order * b.order // meet.size
    else:
        size = int(np.unique(g.mul[np.ix_(a.members, b.members)]).size)
    return size, size == g.order


def subgroup_join(g: Group, a: Subgroup, b: Subgroup) -> Subgroup:
    return Subgroup(g, close_under_product(g.mul, np.concatenate([a.members, b.members])))


def subgroup_meet(g: Group, a: Subgroup, b: Subgroup) -> Subgroup:
    return Subgroup(g, np.intersect1d(a.members, b.members, assume_unique=True))


def normal_subgroups(g: Group, budget: Budget = DEFAULT_BUDGET) -> list[Subgroup]:
    return all_subgroups(g, budget).normal_subgroups()


def conjugate_subgroup(g: Group, h: Subgroup, x: int) -> Subgroup:
    return Subgroup(g, np.sort(g.conj_table()[x][h.members]))


# --- exports ----------------------------------------------------------------------


def hasse_edges(lattice: SubgroupLattice) -> list[tuple[int, int]]:
    """Covering pairs (i, j): subgroup i maximal inside subgroup j."""
    subs = lattice.subgroups
    masks = [int.from_bytes(s.key, "big") for s in subs]
    orders = [s.order for s in subs]
    edges = []
    for j, sup in enumerate(subs):
        below = [
            i
            for i in range(len(subs))
            if orders[i] < orders[j]
            and orders[j] % orders[i] == 0
            and masks[i] & ~masks[j] == 0
        ]
        for i in below:
            covered = any(
                orders[i] < orders[k] and masks[i] & ~masks[k] == 0 for k in below if k != i
            )
            if not covered:
                edges.append((i, j))
    return sorted(edges)


def lattice_to_json(lattice: SubgroupLattice) -> str:
    doc = {
        "group": lattice.group.label,
        "order": lattice.group.order,
        "subgroups": [
            {
                "order": s.order,
                "members": [int(x) for x in s.members],
                "normal": bool(lattice.normal[i]),
                "maximal": bool(lattice.maximal[i]),
                "classId": int(lattice.class_id[i]),
            }
            for i, s in enumerate(lattice.subgroups)
        ],
        "hasse": [[i, j] for i, j in hasse_edges(lattice)],
    }
    return json.dumps(doc, separators=(",", ":"))


def lattice_to_dot(lattice: SubgroupLattice) -> str:
    lines = ["digraph subgroups {", "  rankdir=BT;"]
    for i, s in enumerate(lattice.subgroups):
        shape = "doublecircle" if lattice.normal[i] else "circle"
        lines.append(f'  n{i} [label="{s.order}" shape={shape}];')
    for i, j in hasse_edges(lattice):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"
