"""Subgroup predicates, group classes, and the series machinery behind them.

Subgroup-level predicates (NC, NE, H-subgroup, pronormal, normally embedded)
are all conjugation-invariant, so the group-level classifiers only evaluate
one representative per conjugacy class of subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_BUDGET, Budget
from .errors import NotApplicableError, NotSolvableError
from .groups import (
    Group,
    OrderProfile,
    close_under_product,
    extract_subgroup_as_group,
    order_fingerprint,
    quotient_group,
)
from .lattice import (
    Subgroup,
    SubgroupLattice,
    all_subgroups,
    centralizer_members,
    normal_closure_members,
    normalizer_members,
    subgroup_meet,
    subgroup_product,
)


def primes_of(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def vp_valuation(n: int, p: int) -> int:
    if n < 1:
        raise ValueError("valuation of a non-positive integer")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def p_part(n: int, p: int) -> int:
    return p ** vp_valuation(n, p)


# --- subgroup-level predicates ------------------------------------------------


def is_nc_subgroup(g: Group, h: Subgroup) -> bool:
    """H^G N_G(H) = G."""
    closure = Subgroup(g, normal_closure_members(g, h.members))
    norm = Subgroup(g, normalizer_members(g, h.members))
    _, equals_g = subgroup_product(g, closure, norm)
    return equals_g


def is_ne_subgroup(g: Group, h: Subgroup) -> bool:
    """N_G(H) and H^G meet exactly in H."""
    closure = Subgroup(g, normal_closure_members(g, h.members))
    norm = Subgroup(g, normalizer_members(g, h.members))
    return subgroup_meet(g, norm, closure).key == h.key


def is_h_subgroup(g: Group, h: Subgroup) -> bool:
    """N_G(H) meets every conjugate of H inside H."""
    norm_mask = np.zeros(g.order, dtype=bool)
    norm_mask[normalizer_members(g, h.members)] = True
    h_mask = h.mask()
    conjugates = g.conj_table()[:, h.members]  # row x = members of H^x
    return bool((~norm_mask[conjugates] | h_mask[conjugates]).all())


def is_pronormal(g: Group, h: Subgroup) -> bool:
    """H and H^x are conjugate inside their join, for every x."""
    conj = g.conj_table()
    h_sorted = h.members
    for x in range(g.order):
        hx = np.sort(conj[x][h_sorted])
        if np.array_equal(hx, h_sorted):
            continue
        join = close_under_product(g.mul, np.concatenate([h_sorted, hx]))
        moved = np.sort(conj[join][:, h_sorted], axis=1)
        if not (moved == hx).all(axis=1).any():
            return False
    return True


def is_normally_embedded(g: Group, h: Subgroup, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Each Sylow subgroup of H is Sylow in some normal subgroup of G.

    Sylow subgroups of H are conjugate inside H, and normal subgroups of G
    are stable under that conjugation, so testing one Sylow per prime
    suffices.
    """
    lattice = all_subgroups(g, budget)
    normals = lattice.normal_subgroups()
    for p in primes_of(h.order):
        target = p_part(h.order, p)
        h_mask = h.mask()
        sylow_of_h = next(
            s for s in lattice.subgroups if s.order == target and h_mask[s.members].all()
        )
        if not any(
            n.order % target == 0
            and p_part(n.order, p) == target
            and n.mask()[sylow_of_h.members].all()
            for n in normals
        ):
            return False
    return True


def is_subnormal_subgroup(g: Group, h: Subgroup) -> bool:
    from .lattice import is_subnormal

    return is_subnormal(g, h)


def commutator_subgroup(g: Group, a: Subgroup, b: Subgroup) -> Subgroup:
    values = _commutators(g, a.members, b.members)
    return Subgroup(g, close_under_product(g.mul, values, cutoff_to_full=False))


def _commutators(g: Group, a_members, b_members) -> np.ndarray:
    a = np.asarray(a_members, dtype=np.intp)
    b = np.asarray(b_members, dtype=np.intp)
    m, i = g.mul, g.inv
    left = m[np.ix_(i[a], i[b])]
    right = m[np.ix_(a, b)]
    return np.unique(m[left, right])


# --- series ---------------------------------------------------------------------


@dataclass
class SeriesReport:
    kind: str
    terms: list[np.ndarray]  # member arrays, outermost first
    terminated: bool

    def lengths(self) -> list[int]:
        return [int(t.size) for t in self.terms]


def derived_series(g: Group) -> SeriesReport:
    terms = [np.arange(g.order, dtype=np.intp)]
    while True:
        cur = terms[-1]
        nxt = close_under_product(g.mul, _commutators(g, cur, cur), cutoff_to_full=False)
        if nxt.size == cur.size:
            return SeriesReport("derived", terms, terminated=cur.size == 1)
        terms.append(nxt)
        if nxt.size == 1:
            return SeriesReport("derived", terms, terminated=True)


def lower_central_series(g: Group) -> SeriesReport:
    whole = np.arange(g.order, dtype=np.intp)
    terms = [whole]
    while True:
        cur = terms[-1]
        nxt = close_under_product(g.mul, _commutators(g, cur, whole), cutoff_to_full=False)
        if nxt.size == cur.size:
            return SeriesReport("lowerCentral", terms, terminated=cur.size == 1)
        terms.append(nxt)
        if nxt.size == 1:
            return SeriesReport("lowerCentral", terms, terminated=True)


def derived_subgroup_members(g: Group) -> np.ndarray:
    whole = np.arange(g.order, dtype=np.intp)
    return close_under_product(g.mul, _commutators(g, whole, whole), cutoff_to_full=False)


def _preimage(hom_map, target_members, order: int) -> np.ndarray:
    target = np.zeros(max(hom_map) + 1, dtype=bool)
    target[np.asarray(target_members, dtype=np.intp)] = True
    return np.flatnonzero(target[np.asarray(hom_map, dtype=np.intp)]).astype(np.intp)


def upper_p_series(g: Group, p: int, budget: Budget = DEFAULT_BUDGET) -> SeriesReport:
    """Ascending series 1 <= O_p' <= O_p',p <= ... pulled back to subgroups of g.

    Terms alternate p'-core and p-core steps, starting with O_p'; the term at
    even index i >= 2 is a p-step.  Stops at G, or when a full p'+p round
    makes no progress (which cannot happen for solvable input).
    """
    if not is_solvable(g):
        raise NotSolvableError("upper p-series computed for solvable groups only")
    terms = [np.array([0], dtype=np.intp)]
    take_p_part = False
    stalled = 0
    while terms[-1].size < g.order and stalled < 2:
        q, hom = quotient_group(g, terms[-1], budget)
        if take_p_part:
            step = p_core_members(q, p, budget)
        else:
            step = np.array([0], dtype=np.intp)
            lat = all_subgroups(q, budget)
            for n in lat.normal_subgroups():
                if n.order % p != 0:
                    step = close_under_product(q.mul, np.union1d(step, n.members), cutoff_to_full=False)
        lifted = _preimage(hom.map, step, g.order)
        stalled = stalled + 1 if lifted.size == terms[-1].size else 0
        terms.append(lifted)
        take_p_part = not take_p_part
    return SeriesReport(f"upperPSeries({p})", terms, terminated=terms[-1].size == g.order)


def fitting_chain(g: Group, budget: Budget = DEFAULT_BUDGET) -> SeriesReport:
    """Ascending chain of Fitting-subgroup preimages; terminates at G for solvable g."""
    terms = [np.array([0], dtype=np.intp)]
    while terms[-1].size < g.order:
        q, hom = quotient_group(g, terms[-1], budget)
        step = fitting_subgroup(q, budget)
        lifted = _preimage(hom.map, step.members, g.order)
        if lifted.size == terms[-1].size:
            break
        terms.append(lifted)
    return SeriesReport("fittingChain", terms, terminated=terms[-1].size == g.order)


def is_abelian(g: Group) -> bool:
    return bool(np.array_equal(g.mul, g.mul.T))


def is_solvable(g: Group) -> bool:
    return derived_series(g).terminated


def is_metabelian(g: Group) -> bool:
    report = derived_series(g)
    return report.terminated and len(report.terms) <= 3


def is_nilpotent(g: Group, budget: Budget = DEFAULT_BUDGET) -> tuple[bool, int | None]:
    """All Sylow subgroups normal; class read off the lower central series."""
    lattice = all_subgroups(g, budget)
    for p in primes_of(g.order):
        target = p_part(g.order, p)
        idxs = [i for i, s in enumerate(lattice.subgroups) if s.order == target]
        if not any(lattice.normal[i] for i in idxs):
            return False, None
    series = lower_central_series(g)
    return True, len(series.terms) - 1


def is_simple(g: Group, budget: Budget = DEFAULT_BUDGET) -> bool:
    if g.order == 1:
        return False
    return len(all_subgroups(g, budget).normal_subgroups()) == 2


def is_dedekind(g: Group, budget: Budget = DEFAULT_BUDGET) -> bool:
    return bool(all_subgroups(g, budget).normal.all())


_SUPERSOLVABLE_MEMO: dict[tuple, bool] = {}


def is_supersolvable(g: Group, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Recursive: trivial, or some prime-order normal subgroup has a supersolvable quotient.

    Memoized on the order profile of the group, which repeated quotient
    towers hit over and over.
    """
    from .fields import is_prime

    if g.order == 1:
        return True
    key = order_fingerprint(g).key()
    hit = _SUPERSOLVABLE_MEMO.get(key)
    if hit is not None:
        return hit
    lattice = all_subgroups(g, budget)
    result = False
    for n in lattice.normal_subgroups():
        if is_prime(n.order):
            q, _ = quotient_group(g, n.members, budget)
            if is_supersolvable(q, budget):
                result = True
                break
    _SUPERSOLVABLE_MEMO[key] = result
    return result


def is_p_nilpotent(g: Group, p: int, budget: Budget = DEFAULT_BUDGET) -> bool:
    """A normal p-complement exists: a normal subgroup of order |G| / |G|_p."""
    complement_order = g.order // p_part(g.order, p)
    return any(n.order == complement_order for n in all_subgroups(g, budget).normal_subgroups())


def satisfies_cp(g: Group, p: int, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Every subgroup of a Sylow p-subgroup P is normal in N_G(P)."""
    lattice = all_subgroups(g, budget)
    target = p_part(g.order, p)
    sylow = next(s for s in lattice.subgroups if s.order == target)
    norm = normalizer_members(g, sylow.members)
    conj = g.conj_table()
    for t in lattice.subgroups_inside(sylow):
        t_mask = t.mask()
        if not t_mask[conj[norm][:, t.members]].all():
            return False
    return True


# --- characteristic subgroups -----------------------------------------------------


def p_core_members(g: Group, p: int, budget: Budget = DEFAULT_BUDGET) -> np.ndarray:
    """O_p(G) as the intersection of the Sylow p-subgroups."""
    lattice = all_subgroups(g, budget)
    target = p_part(g.order, p)
    sylows = [s for s in lattice.subgroups if s.order == target]
    members = sylows[0].members
    for s in sylows[1:]:
        members = np.intersect1d(members, s.members, assume_unique=True)
    return members


def fitting_subgroup(g: Group, budget: Budget = DEFAULT_BUDGET) -> Subgroup:
    """F(G): join of the p-cores over the primes dividing |G|."""
    members = np.array([0], dtype=np.intp)
    for p in primes_of(g.order):
        core = p_core_members(g, p, budget)
        members = close_under_product(g.mul, np.union1d(members, core), cutoff_to_full=False)
    return Subgroup(g, members)


def fitting_height(g: Group, budget: Budget = DEFAULT_BUDGET) -> int:
    if not is_solvable(g):
        raise NotApplicableError("Fitting height is only defined here for solvable groups")
    height = 0
    cur = g
    while cur.order > 1:
        f = fitting_subgroup(cur, budget)
        height += 1
        if f.order == cur.order:
            break
        cur, _ = quotient_group(cur, f.members, budget)
    return height


def frattini_subgroup(g: Group, budget: Budget = DEFAULT_BUDGET) -> Subgroup:
    lattice = all_subgroups(g, budget)
    maximals = lattice.maximal_subgroups()
    if not maximals:
        return Subgroup(g, np.arange(g.order))
    members = maximals[0].members
    for m in maximals[1:]:
        members = np.intersect1d(members, m.members, assume_unique=True)
    return Subgroup(g, members)


def p_length(g: Group, p: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """Number of p-terms in the upper p-series 1 <= O_p' <= O_p',p <= ..."""
    if not is_solvable(g):
        raise NotSolvableError("p-length computed for solvable groups only")
    if g.order % p != 0:
        return 0
    lattice = all_subgroups(g, budget)
    # O_p'(G): the largest normal subgroup of order prime to p
    core = np.array([0], dtype=np.intp)
    for n in lattice.normal_subgroups():
        if n.order % p != 0:
            core = close_under_product(g.mul, np.union1d(core, n.members), cutoff_to_full=False)
    reduced, _ = quotient_group(g, core, budget)
    if reduced.order == 1:
        return 0
    opart = p_core_members(reduced, p, budget)
    after_p, _ = quotient_group(reduced, opart, budget)
    return 1 + p_length(after_p, p, budget)


def subgroup_as_group(g: Group, h: Subgroup) -> Group:
    cache_key = ("child", h.key)
    child = g._cache.get(cache_key)
    if child is None:
        child, _ = extract_subgroup_as_group(g, h.members)
        g._cache[cache_key] = child
    return child


def generalized_fitting(g: Group, budget: Budget = DEFAULT_BUDGET):
    """Components, layer E(G), F*(G) = E(G)F(G), and the nilpotency class of F*.

    A component is a subnormal quasisimple subgroup: perfect, with simple
    central quotient.  Returns (components, layer, fstar, fstar_class) where
    fstar_class is None when F* is not nilpotent.
    """
    from .lattice import is_subnormal

    lattice = all_subgroups(g, budget)
    components: list[Subgroup] = []
    for s in lattice.subgroups:
        if s.order == 1:
            continue
        derived = close_under_product(g.mul, _commutators(g, s.members, s.members), cutoff_to_full=False)
        if derived.size != s.order:
            continue  # not perfect
        if not is_subnormal(g, s):
            continue
        child = subgroup_as_group(g, s)
        centre = centralizer_members(child, np.arange(child.order))
        if centre.size == child.order:
            continue  # abelian, not quasisimple
        quot, _ = quotient_group(child, centre, budget)
        if is_simple(quot, budget):
            components.append(s)
    layer_members = np.array([0], dtype=np.intp)
    for c in components:
        layer_members = close_under_product(
            g.mul, np.union1d(layer_members, c.members), cutoff_to_full=False
        )
    layer = Subgroup(g, layer_members)
    fit = fitting_subgroup(g, budget)
    fstar_members = close_under_product(
        g.mul, np.union1d(layer.members, fit.members), cutoff_to_full=False
    )
    fstar = Subgroup(g, fstar_members)
    child = subgroup_as_group(g, fstar)
    nilp, klass = is_nilpotent(child, budget)
    return components, layer, fstar, (klass if nilp else None)


# --- group classes -----------------------------------------------------------------


def is_pnc_group(g: Group, budget: Budget = DEFAULT_BUDGET) -> bool:
    return pnc_witness(g, budget) is None


def pnc_witness(g: Group, budget: Budget = DEFAULT_BUDGET) -> Subgroup | None:
    """First (in sort order) subgroup that is not an NC-subgroup, if any."""
    lattice = all_subgroups(g, budget)
    for s in lattice.class_representatives():
        if not is_nc_subgroup(g, s):
            return s
    return None


def is_pe_group(g: Group, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Every minimal (prime-order) subgroup is an NE-subgroup."""
    from .fields import is_prime

    lattice = all_subgroups(g, budget)
    for s in lattice.class_representatives():
        if is_prime(s.order) and not is_ne_subgroup(g, s):
            return False
    return True


def is_on_group(g: Group, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Every subgroup is normal, or self-normalizing with full normal closure.

    The alternatives are read conjunctively (N_G(H) = H together with
    H^G = G); the disjunctive reading would make every simple group ON
    vacuously and break both the ON classification and the implication
    ON => NSN.
    """
    for s in all_subgroups(g, budget).class_representatives():
        norm_size = normalizer_members(g, s.members).size
        if norm_size == g.order:
            continue
        if norm_size == s.order and normal_closure_members(g, s.members).size == g.order:
            continue
        return False
    return True


def is_nsn_group(g: Group, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Every subgroup is normal or self-normalizing."""
    for s in all_subgroups(g, budget).class_representatives():
        size = normalizer_members(g, s.members).size
        if size != s.order and size != g.order:
            return False
    return True


def is_t_group(g: Group, budget: Budget = DEFAULT_BUDGET) -> bool:
    """Every subnormal subgroup is normal."""
    from .lattice import is_subnormal

    lattice = all_subgroups(g, budget)
    for i, s in zip(_rep_indices(lattice), lattice.class_representatives()):
        if not lattice.normal[i] and is_subnormal(g, s):
            return False
    return True


def _rep_indices(lattice: SubgroupLattice) -> list[int]:
    seen: set[int] = set()
    out = []
    for i in range(len(lattice.subgroups)):
        cid = int(lattice.class_id[i])
        if cid not in seen:
            seen.add(cid)
            out.append(i)
    return out


# --- the profile --------------------------------------------------------------------


@dataclass
class PredicateProfile:
    order: int
    profile: OrderProfile
    abelian: bool
    dedekind: bool
    nilpotent: bool
    nilpotency_class: int | None
    solvable: bool
    supersolvable: bool
    metabelian: bool
    t_group: bool
    pnc: bool
    pe: bool
    on: bool
    nsn: bool
    simple: bool
    p_nilpotent: dict[int, bool]
    p_length: dict[int, int | None]
    cp: dict[int, bool]

    def to_json(self) -> dict:
        per_prime = {
            str(p): {
                "pNilpotent": self.p_nilpotent[p],
                "pLength": self.p_length[p],
                "cp": self.cp[p],
            }
            for p in sorted(self.p_nilpotent)
        }
        return {
            "order": self.order,
            "abelian": self.abelian,
            "dedekind": self.dedekind,
            "nilpotent": self.nilpotent,
            "nilpotencyClass": self.nilpotency_class,
            "solvable": self.solvable,
            "supersolvable": self.supersolvable,
            "metabelian": self.metabelian,
            "tGroup": self.t_group,
            "pnc": self.pnc,
            "pe": self.pe,
            "on": self.on,
            "nsn": self.nsn,
            "simple": self.simple,
            "perPrime": per_prime,
        }

    def flags(self) -> dict[str, bool]:
        return {
            "abelian": self.abelian,
            "dedekind": self.dedekind,
            "nilpotent": self.nilpotent,
            "solvable": self.solvable,
            "supersolvable": self.supersolvable,
            "metabelian": self.metabelian,
            "t_group": self.t_group,
            "pnc": self.pnc,
            "pe": self.pe,
            "on": self.on,
            "nsn": self.nsn,
            "simple": self.simple,
        }


def classify_group(g: Group, budget: Budget = DEFAULT_BUDGET) -> PredicateProfile:
    cached = g._cache.get("predicate_profile")
    if cached is not None:
        return cached
    primes = primes_of(g.order)
    nilp, klass = is_nilpotent(g, budget)
    profile = PredicateProfile(
        order=g.order,
        profile=order_fingerprint(g),
        abelian=is_abelian(g),
        dedekind=is_dedekind(g, budget),
        nilpotent=nilp,
        nilpotency_class=klass,
        solvable=is_solvable(g),
        supersolvable=is_supersolvable(g, budget),
        metabelian=is_metabelian(g),
        t_group=is_t_group(g, budget),
        pnc=is_pnc_group(g, budget),
        pe=is_pe_group(g, budget),
        on=is_on_group(g, budget),
        nsn=is_nsn_group(g, budget),
        simple=is_simple(g, budget),
        p_nilpotent={p: is_p_nilpotent(g, p, budget) for p in primes},
        p_length={p: (p_length(g, p, budget) if is_solvable(g) else None) for p in primes},
        cp={p: satisfies_cp(g, p, budget) for p in primes},
    )
    # internal consistency
    if profile.abelian:
        assert profile.dedekind, f"{g.label}: abelian but not Dedekind"
    if profile.dedekind:
        assert profile.pnc and profile.nsn, f"{g.label}: Dedekind must be PNC and NSN"
    if profile.simple:
        assert profile.pnc, f"{g.label}: simple must be PNC"
    if profile.on:
        assert profile.pnc and profile.nsn, f"{g.label}: ON must be PNC and NSN"
    g._cache["predicate_profile"] = profile
    return profile
