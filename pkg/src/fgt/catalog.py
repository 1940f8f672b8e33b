"""Named group constructors and the serializable GroupSpec catalog.

Every group the verification harness touches is rebuilt deterministically
from a GroupSpec (constructor name + parameters).  Specs have a compact
string form ``Name(arg,...)`` (nesting allowed, e.g.
``Direct(Cyclic(5),Sym(3))``) and a JSON form
``{"constructor": ..., "params": {...}}``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_BUDGET, Budget
from .errors import (
    ActionInconsistentError,
    BudgetExceededError,
    InvalidElementError,
    UnknownConstructorError,
)
from .fields import (
    Matrix2,
    field_add,
    field_inv,
    field_make,
    field_mul,
    field_neg,
    is_prime,
    mat_conj_transpose,
    mat_identity,
    mat_mul,
    multiplicative_generator,
    perm_from_cycles,
)
from .groups import (
    Group,
    automorphism_from_generator_images,
    direct_product,
    generate_matrix_group,
    generate_permutation_group,
    semidirect_product,
)


@dataclass(frozen=True)
class GroupSpec:
    constructor: str
    params: tuple = ()

    def to_string(self) -> str:
        if not self.params:
            return self.constructor
        return f"{self.constructor}({','.join(_render_param(p) for p in self.params)})"

    def to_json(self) -> dict:
        return {"constructor": self.constructor, "params": _params_to_json(self)}

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.to_string()


def _render_param(p) -> str:
    if isinstance(p, GroupSpec):
        return p.to_string()
    if isinstance(p, tuple):
        return "(" + ",".join(str(x) for x in p) + ")"
    return str(p)


@dataclass(frozen=True)
class PowerActionSpec:
    """Cyclic p-power group acting by power maps on a product of cyclic groups.

    The acting generator a of order p^alpha conjugates the generator a_i of
    the i-th factor (of order p_i^alpha_i) to its -t_i power.  Consistency
    requires the multiplicative order of -t_i mod p_i^alpha_i to divide
    p^alpha, otherwise the presentation does not define a group of the
    intended order.
    """

    p: int
    alpha: int
    factors: tuple[tuple[int, int, int], ...]  # (p_i, alpha_i, t_i)

    def __post_init__(self):
        if not is_prime(self.p) or self.alpha < 1:
            raise ActionInconsistentError("acting prime power invalid")
        primes = [self.p]
        for p_i, a_i, t_i in self.factors:
            if not is_prime(p_i) or a_i < 1:
                raise ActionInconsistentError(f"invalid factor prime power {p_i}^{a_i}")
            m = p_i**a_i
            if not 1 <= t_i <= m - 1 or math.gcd(t_i, p_i) != 1:
                raise ActionInconsistentError(f"twist {t_i} invalid for modulus {m}")
            primes.append(p_i)
            order = _multiplicative_order(-t_i % m, m)
            if self.p**self.alpha % order != 0:
                raise ActionInconsistentError(
                    f"order of -{t_i} mod {m} is {order}, not a divisor of {self.p}^{self.alpha}"
                )
        if len(set(primes)) != len(primes):
            raise ActionInconsistentError("primes must be pairwise distinct")

    @property
    def order(self) -> int:
        n = self.p**self.alpha
        for p_i, a_i, _ in self.factors:
            n *= p_i**a_i
        return n


def _multiplicative_order(a: int, m: int) -> int:
    if math.gcd(a, m) != 1:
        raise ActionInconsistentError(f"{a} not invertible mod {m}")
    order, cur = 1, a % m
    while cur != 1:
        cur = cur * a % m
        order += 1
    return order


# --- formula-built tables -------------------------------------------------------


def _cyclic_table(n: int) -> np.ndarray:
    i = np.arange(n)
    return (i[:, None] + i[None, :]) % n


def build_cyclic(n: int, budget: Budget) -> Group:
    if n < 1:
        raise InvalidElementError("cyclic order must be >= 1")
    _cap_check(n, budget)
    return Group(_cyclic_table(n), f"C{n}", [1] if n > 1 else [])


def build_elementary_abelian(p: int, k: int, budget: Budget) -> Group:
    if not is_prime(p) or k < 1:
        raise InvalidElementError("need a prime p and k >= 1")
    n = p**k
    _cap_check(n, budget)
    i = np.arange(n)
    mul = np.zeros((n, n), dtype=np.int64)
    for d in range(k):
        di = (i // p**d) % p
        mul += ((di[:, None] + di[None, :]) % p) * p**d
    gens = [p**d for d in range(k)]
    return Group(mul, f"C{p}^{k}", gens)


def build_dihedral(n: int, budget: Budget) -> Group:
    """Order 2n:  <a, b | a^n = b^2 = 1, b a b = a^-1>."""
    if n < 1:
        raise InvalidElementError("dihedral parameter must be >= 1")
    _cap_check(2 * n, budget)
    j = np.arange(n)
    i = np.arange(2)
    i1 = np.repeat(i, n)[:, None]
    j1 = np.tile(j, 2)[:, None]
    i2 = np.repeat(i, n)[None, :]
    j2 = np.tile(j, 2)[None, :]
    sign = np.where(i2 == 1, -1, 1)
    mul = ((i1 + i2) % 2) * n + (j1 * sign + j2) % n
    gens = [1, n] if n > 1 else [n]
    return Group(mul, f"D{n}", gens)


def build_dicyclic(n: int, budget: Budget) -> Group:
    """Order 4n:  <a, b | a^2 = b^n, o(a) = 4, o(b) = 2n, a^-1 b a = b^-1>."""
    if n < 1:
        raise InvalidElementError("dicyclic parameter must be >= 1")
    _cap_check(4 * n, budget)
    two_n = 2 * n
    j = np.arange(two_n)
    i = np.arange(2)
    i1 = np.repeat(i, two_n)[:, None]
    j1 = np.tile(j, 2)[:, None]
    i2 = np.repeat(i, two_n)[None, :]
    j2 = np.tile(j, 2)[None, :]
    sign = np.where(i2 == 1, -1, 1)
    carry = (i1 + i2) // 2  # a^2 = b^n
    mul = ((i1 + i2) % 2) * two_n + (j1 * sign + j2 + carry * n) % two_n
    return Group(mul, f"Dic{n}", [two_n, 1])


def build_symmetric(n: int, budget: Budget) -> Group:
    if n < 1 or n > 7:
        raise InvalidElementError("Sym(n) supported for 1 <= n <= 7")
    if n == 1:
        return build_cyclic(1, budget)
    _cap_check(math.factorial(n), budget)
    gens = [perm_from_cycles(n, (0, 1))]
    if n > 2:
        gens.append(perm_from_cycles(n, tuple(range(n))))
    return generate_permutation_group(gens, f"S{n}", budget)


def build_alternating(n: int, budget: Budget) -> Group:
    if n < 3 or n > 7:
        raise InvalidElementError("Alt(n) supported for 3 <= n <= 7")
    _cap_check(math.factorial(n) // 2, budget)
    gens = [perm_from_cycles(n, (0, 1, 2))]
    if n > 3:
        cycle = tuple(range(n)) if n % 2 == 1 else tuple(range(1, n))
        gens.append(perm_from_cycles(n, cycle))
    g = generate_permutation_group(gens, f"A{n}", budget)
    if g.order != math.factorial(n) // 2:
        raise ActionInconsistentError(f"Alt({n}) closure has wrong order {g.order}")
    return g


def build_modular(p: int, n: int, budget: Budget) -> Group:
    """Order p^(n+1):  <a, x | a^(p^n) = x^p = 1, x^-1 a x = a^(1+p^(n-1))>."""
    if not is_prime(p) or n < 2:
        raise InvalidElementError("Modular(p,n) needs prime p and n >= 2")
    pn = p**n
    _cap_check(p * pn, budget)
    m = 1 + p ** (n - 1)
    mpow = [pow(m, i, pn) for i in range(p)]
    i_idx = np.arange(p)
    j_idx = np.arange(pn)
    i1 = np.repeat(i_idx, pn)[:, None]
    j1 = np.tile(j_idx, p)[:, None]
    i2 = np.repeat(i_idx, pn)[None, :]
    j2 = np.tile(j_idx, p)[None, :]
    mp = np.array(mpow)[i2]
    mul = ((i1 + i2) % p) * pn + (j1 * mp + j2) % pn
    return Group(mul, f"Mod({p},{n})", [1, pn])


def build_heisenberg_like(p: int, n: int, budget: Budget) -> Group:
    """Order p^(n+2):  <a, b, x | a^(p^n) = b^p = x^p = 1, [x,a] = b central>."""
    if not is_prime(p) or n < 1:
        raise InvalidElementError("HeisenbergLike(p,n) needs prime p and n >= 1")
    pn = p**n
    size = pn * p * p
    _cap_check(size, budget)
    idx = np.arange(size)
    a1 = (idx // (p * p))[:, None]
    b1 = ((idx // p) % p)[:, None]
    x1 = (idx % p)[:, None]
    a2 = (idx // (p * p))[None, :]
    b2 = ((idx // p) % p)[None, :]
    x2 = (idx % p)[None, :]
    a = (a1 + a2) % pn
    b = (b1 + b2 + x1 * a2) % p
    x = (x1 + x2) % p
    mul = a * p * p + b * p + x
    return Group(mul, f"Heis({p},{n})", [p * p, p, 1])


def build_sl2(q: int, budget: Budget) -> Group:
    f = _field_for_q(q)
    expected = q * (q * q - 1)
    _cap_check(expected, budget)
    one = 1
    gens = [Matrix2(f, (one, one, 0, one)), Matrix2(f, (one, 0, one, one))]
    if f.k > 1:
        c = multiplicative_generator(f)
        gens += [Matrix2(f, (one, c, 0, one)), Matrix2(f, (one, 0, c, one))]
    g = generate_matrix_group(gens, f"SL(2,{q})", budget)
    if g.order != expected:
        raise ActionInconsistentError(f"SL(2,{q}) closure has order {g.order}, expected {expected}")
    return g


def build_psl2(q: int, budget: Budget) -> Group:
    """Projectivities of the projective line over GF(q) with square determinant.

    Realized as permutations of the q+1 points (field indices plus infinity
    at index q), generated by x -> x+1, x -> s*x and x -> -1/x where s is a
    generator of the squares (the full multiplicative group for even q).
    """
    f = _field_for_q(q)
    expected = q * (q * q - 1) // math.gcd(2, q - 1)
    _cap_check(expected, budget)
    infinity = q
    c = multiplicative_generator(f)
    s = c if q % 2 == 0 else field_mul(f, c, c)

    def mobius(fn):
        images = [fn(x) for x in range(q)] + [fn(infinity)]
        return tuple(images)

    translate = mobius(lambda x: infinity if x == infinity else field_add(f, x, 1))
    invert = mobius(lambda x: infinity if x == 0 else (0 if x == infinity else field_neg(f, field_inv(f, x))))
    gens = [translate, invert]
    if s != 1:
        gens.insert(1, mobius(lambda x: infinity if x == infinity else field_mul(f, s, x)))
    g = generate_permutation_group(gens, f"PSL(2,{q})", budget)
    if g.order != expected:
        raise ActionInconsistentError(f"PSL(2,{q}) closure has order {g.order}, expected {expected}")
    return g


def unitary_matrices_gf9() -> list[Matrix2]:
    """All M over GF(9) with M * conj-transpose(M) = 1, in entry-lex order."""
    f = field_make(3, 2)
    ident = mat_identity(f)
    out = []
    for code in range(9**4):
        entries = (code // 729, code // 81 % 9, code // 9 % 9, code % 9)
        m = Matrix2(f, entries)
        if mat_mul(m, mat_conj_transpose(m)) == ident:
            out.append(m)
    return out


def build_gu2_3(budget: Budget) -> Group:
    _cap_check(96, budget)
    elems = unitary_matrices_gf9()
    g = generate_matrix_group(elems, "GU(2,3)", budget)
    if g.order != 96:
        raise ActionInconsistentError(f"GU(2,3) filter produced order {g.order}, expected 96")
    return g


def build_power_action(spec: PowerActionSpec, budget: Budget) -> Group:
    n = spec.order
    _cap_check(n, budget)
    q = spec.p**spec.alpha
    moduli = [p_i**a_i for p_i, a_i, _ in spec.factors]
    a_total = 1
    for m in moduli:
        a_total *= m
    idx = np.arange(n)
    s_part = idx // a_total
    rem = idx % a_total
    comps = []
    divisor = a_total
    for m in moduli:
        divisor //= m
        comps.append((rem // divisor) % m)
    s1 = s_part[:, None]
    s2 = s_part[None, :]
    mul = ((s1 + s2) % q) * a_total
    divisor = a_total
    for (p_i, a_i, t_i), m, comp in zip(spec.factors, moduli, comps):
        divisor //= m
        tpow = np.array([pow(-t_i % m, s, m) for s in range(q)])
        e1 = comp[:, None]
        e2 = comp[None, :]
        mul += ((e1 * tpow[s2] + e2) % m) * divisor
    gens = [a_total]  # the acting generator a
    divisor = a_total
    for m in moduli:
        divisor //= m
        gens.append(divisor)
    label = f"PA[{spec.p}^{spec.alpha}" + "".join(
        f";{p_i}^{a_i}@{t_i}" for p_i, a_i, t_i in spec.factors
    ) + "]"
    return Group(mul, label, gens)


def build_irreducible_frobenius(q: int, k: int, p: int, budget: Budget) -> Group:
    """Elementary abelian q^k with a cyclic order-p companion-matrix action.

    The action matrix is the companion matrix of the lexicographically first
    monic irreducible degree-k polynomial over GF(q) whose companion matrix
    has order p (an irreducible factor of x^p - 1); irreducibility of the
    polynomial makes the action irreducible.
    """
    if not (is_prime(q) and is_prime(p)) or q == p:
        raise InvalidElementError("need distinct primes q (kernel) and p (action)")
    if k < 2 or k > 3:
        raise InvalidElementError("supported kernel ranks: 2 <= k <= 3")
    nv = q**k
    _cap_check(nv * p, budget)
    mat = _companion_of_order(q, k, p)
    if mat is None:
        raise ActionInconsistentError(
            f"no irreducible degree-{k} action of order {p} exists over GF({q})"
        )
    powers = [np.eye(k, dtype=np.int64)]
    for _ in range(p - 1):
        powers.append(powers[-1] @ mat % q)
    digits = np.zeros((nv, k), dtype=np.int64)
    idx = np.arange(nv)
    for d in range(k):
        digits[:, d] = (idx // q**d) % q
    weights = q ** np.arange(k, dtype=np.int64)
    n = nv * p
    mul = np.zeros((n, n), dtype=np.int64)
    i_idx = np.arange(p)
    for i1 in range(p):
        moved = digits @ powers[i1].T % q  # M^i1 applied to every v2
        vsum = (digits[:, None, :] + moved[None, :, :]) % q  # (v1, v2, k)
        vcode = vsum @ weights
        block = vcode[:, :, None] * p + ((i1 + i_idx) % p)[None, None, :]
        rows = np.arange(nv) * p + i1
        cols = (np.arange(nv)[:, None] * p + i_idx[None, :]).reshape(-1)
        mul[np.ix_(rows, cols)] = block.reshape(nv, nv * p)
    gens = [q**d * p for d in range(k)] + [1]
    return Group(mul, f"Frob({q}^{k}:{p})", gens)


def _companion_of_order(q: int, k: int, p: int):
    for code in range(q**k):
        coeffs = [(code // q**d) % q for d in range(k)]  # constant term first
        if not _poly_irreducible_low_degree(coeffs + [1], q):
            continue
        mat = np.zeros((k, k), dtype=np.int64)
        for r in range(1, k):
            mat[r, r - 1] = 1
        for r in range(k):
            mat[r, k - 1] = (-coeffs[r]) % q
        cur = np.eye(k, dtype=np.int64)
        for _ in range(p):
            cur = cur @ mat % q
        if np.array_equal(cur, np.eye(k, dtype=np.int64)):
            return mat
    return None


def _poly_irreducible_low_degree(coeffs, q: int) -> bool:
    # degree 2 or 3: irreducible iff no roots
    for x in range(q):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % q
        if acc == 0:
            return False
    return True


def build_c2sq_semi_c4(budget: Budget) -> Group:
    """C2^2 : C4 where the order-4 generator swaps the two coordinates.

    The underlying data this group must reproduce: the C4 complement has
    normalizer of C2 x C4 profile (order 8) and its normal closure lies
    inside that normalizer.  Checked at construction; fails loudly if the
    chosen action ever stops reproducing it.
    """
    a = build_elementary_abelian(2, 2, budget)
    b = build_cyclic(4, budget)
    swap = np.array([0, 2, 1, 3], dtype=np.int64)  # (e1,e2) -> (e2,e1)
    g = semidirect_product(a, b, {1: swap}, budget, label="C2^2:C4")
    from .lattice import normal_closure_members, normalizer_members

    complement = np.arange(4, dtype=np.intp)  # pairs (0, y)
    norm = normalizer_members(g, complement)
    closure = normal_closure_members(g, complement)
    from .groups import order_fingerprint

    profile = order_fingerprint(g, norm)
    expected = (8, ((1, 1), (2, 3), (4, 4)), True)
    got = (profile.order, profile.order_counts, profile.abelian)
    closure_inside = bool(np.isin(closure, norm).all())
    if got != expected or not closure_inside:
        raise ActionInconsistentError(
            "C2^2:C4 action does not reproduce the expected normalizer data; "
            f"normalizer profile {got}, closure inside normalizer: {closure_inside}"
        )
    return g


def build_d4_semi_s3(budget: Budget) -> Group:
    """D4 : S3 with the 3-cycle acting trivially and the involution by a -> a^-1, b -> ab."""
    d4 = build_dihedral(4, budget)
    s3 = build_symmetric(3, budget)
    # d4 generators: a = rotation (index 1), b = reflection (index 4)
    a_gen, b_gen = d4.generators
    a_inv = int(d4.inv[a_gen])
    ab = int(d4.mul[a_gen, b_gen])
    phi = automorphism_from_generator_images(d4, {a_gen: a_inv, b_gen: ab})
    # s3 generators: d = transposition, c = 3-cycle
    d_gen, c_gen = s3.generators
    ident = np.arange(d4.order, dtype=np.int64)
    g = semidirect_product(d4, s3, {d_gen: phi, c_gen: ident}, budget, label="D4:S3")
    return g


def build_c5xc3_semi_d4(budget: Budget) -> Group:
    """(C5 x C3) : D4; both dihedral generators invert the C3 part, C5 is central."""
    a = direct_product(build_cyclic(5, budget), build_cyclic(3, budget), budget, label="C5xC3")
    d4 = build_dihedral(4, budget)
    # a generators: C5 part = index 3, C3 part = index 1
    five_gen, three_gen = a.generators
    inv_b = automorphism_from_generator_images(
        a, {five_gen: five_gen, three_gen: int(a.inv[three_gen])}
    )
    c_gen, d_gen = d4.generators
    g = semidirect_product(a, d4, {c_gen: inv_b, d_gen: inv_b}, budget, label="(C5xC3):D4")
    return g


def build_c5_semi_q8(budget: Budget) -> Group:
    """C5 : Q8 where i and j invert C5 and k = ij centralizes it."""
    c5 = build_cyclic(5, budget)
    q8 = build_dicyclic(2, budget)
    a_gen, b_gen = q8.generators  # a order 4, b order 4 (= i, j)
    invert = np.array([0, 4, 3, 2, 1], dtype=np.int64)
    g = semidirect_product(c5, q8, {a_gen: invert, b_gen: invert}, budget, label="C5:Q8")
    return g


def _field_for_q(q: int):
    for p in (2, 3, 5, 7):
        k = 1
        while p**k < q:
            k += 1
        if p**k == q:
            return field_make(p, k)
    if is_prime(q):
        return field_make(q, 1)
    raise InvalidElementError(f"unsupported field order {q}")


def _cap_check(order: int, budget: Budget):
    if order > budget.order_cap:
        raise BudgetExceededError(f"group order {order} exceeds cap {budget.order_cap}")


# --- spec dispatch ---------------------------------------------------------------

_INT = "int"
_SPEC = "spec"
_TRIPLES = "triples"

_CONSTRUCTORS: dict[str, tuple] = {
    # name: (param kinds, builder)
    "Cyclic": ((_INT,), lambda p, b: build_cyclic(p[0], b)),
    "ElementaryAbelian": ((_INT, _INT), lambda p, b: build_elementary_abelian(p[0], p[1], b)),
    "Dihedral": ((_INT,), lambda p, b: build_dihedral(p[0], b)),
    "Dicyclic": ((_INT,), lambda p, b: build_dicyclic(p[0], b)),
    "Quaternion": ((_INT,), lambda p, b: _build_quaternion(p[0], b)),
    "Sym": ((_INT,), lambda p, b: build_symmetric(p[0], b)),
    "Alt": ((_INT,), lambda p, b: build_alternating(p[0], b)),
    "Modular": ((_INT, _INT), lambda p, b: build_modular(p[0], p[1], b)),
    "HeisenbergLike": ((_INT, _INT), lambda p, b: build_heisenberg_like(p[0], p[1], b)),
    "SL2": ((_INT,), lambda p, b: build_sl2(p[0], b)),
    "PSL2": ((_INT,), lambda p, b: build_psl2(p[0], b)),
    "GU2_3": ((), lambda p, b: build_gu2_3(b)),
    "C2sqSemiC4": ((), lambda p, b: build_c2sq_semi_c4(b)),
    "D4SemiS3": ((), lambda p, b: build_d4_semi_s3(b)),
    "C5xC3SemiD4": ((), lambda p, b: build_c5xc3_semi_d4(b)),
    "C5SemiQ8": ((), lambda p, b: build_c5_semi_q8(b)),
    "PowerAction": (None, None),  # variadic, handled specially
    "IrreducibleFrobenius": ((_INT, _INT, _INT), lambda p, b: build_irreducible_frobenius(p[0], p[1], p[2], b)),
    "Direct": (None, None),  # variadic specs
}


def _build_quaternion(order: int, budget: Budget) -> Group:
    if order < 8 or order > 16 or order & (order - 1):
        raise InvalidElementError("Quaternion(m) supports m in {8, 16}")
    g = build_dicyclic(order // 4, budget)
    return Group(g.mul, f"Q{order}", g.generators)


_BUILD_CACHE: dict[tuple[GroupSpec, int], Group] = {}


def build_group(spec: GroupSpec, budget: Budget = DEFAULT_BUDGET) -> Group:
    key = (spec, budget.order_cap)
    cached = _BUILD_CACHE.get(key)
    if cached is not None:
        return cached
    g = _build_uncached(spec, budget)
    if g.spec is None:
        g.spec = spec
    _BUILD_CACHE[key] = g
    return g


def _build_uncached(spec: GroupSpec, budget: Budget) -> Group:
    name = spec.constructor
    if name == "Direct":
        if len(spec.params) < 2 or not all(isinstance(p, GroupSpec) for p in spec.params):
            raise UnknownConstructorError("Direct takes at least two nested specs")
        g = build_group(spec.params[0], budget)
        for sub in spec.params[1:]:
            g = direct_product(g, build_group(sub, budget), budget)
        return g
    if name == "PowerAction":
        if len(spec.params) < 3:
            raise UnknownConstructorError("PowerAction(p,alpha,(p1,a1,t1),...)")
        p, alpha = spec.params[0], spec.params[1]
        triples = spec.params[2:]
        if not all(isinstance(t, tuple) and len(t) == 3 for t in triples):
            raise UnknownConstructorError("PowerAction factors must be (prime,exp,twist) triples")
        pa = PowerActionSpec(p, alpha, tuple(triples))
        return build_power_action(pa, budget)
    entry = _CONSTRUCTORS.get(name)
    if entry is None:
        raise UnknownConstructorError(f"unknown constructor {name!r}")
    kinds, builder = entry
    if len(spec.params) != len(kinds) or not all(isinstance(p, int) for p in spec.params):
        raise UnknownConstructorError(f"{name} takes {len(kinds)} integer parameter(s)")
    return builder(list(spec.params), budget)


# --- spec string grammar ---------------------------------------------------------


def parse_spec(text: str) -> GroupSpec:
    parser = _SpecParser(text)
    spec = parser.parse_spec()
    parser.expect_end()
    return spec


class _SpecParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse_spec(self) -> GroupSpec:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        name = self.text[start : self.pos]
        if not name or name[0].isdigit():
            raise UnknownConstructorError(f"expected constructor name at {start} in {self.text!r}")
        if self.peek() != "(":
            return GroupSpec(name)
        self.pos += 1
        params = []
        if self.peek() != ")":
            params.append(self.parse_param())
            while self.peek() == ",":
                self.pos += 1
                params.append(self.parse_param())
        if self.peek() != ")":
            raise UnknownConstructorError(f"expected ')' in {self.text!r}")
        self.pos += 1
        return GroupSpec(name, tuple(params))

    def parse_param(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            ints = [self.parse_int()]
            while self.peek() == ",":
                self.pos += 1
                ints.append(self.parse_int())
            if self.peek() != ")":
                raise UnknownConstructorError(f"expected ')' in tuple in {self.text!r}")
            self.pos += 1
            return tuple(ints)
        if ch.isdigit() or ch == "-":
            return self.parse_int()
        return self.parse_spec()

    def parse_int(self) -> int:
        self._skip_ws()
        start = self.pos
        if self.peek() == "-":
            self.pos += 1
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise UnknownConstructorError(f"expected integer at {start} in {self.text!r}")
        return int(self.text[start : self.pos])

    def expect_end(self):
        self._skip_ws()
        if self.pos != len(self.text):
            raise UnknownConstructorError(f"trailing input at {self.pos} in {self.text!r}")


# --- JSON form -------------------------------------------------------------------

_PARAM_NAMES = {
    "Cyclic": ("n",),
    "ElementaryAbelian": ("p", "k"),
    "Dihedral": ("n",),
    "Dicyclic": ("n",),
    "Quaternion": ("order",),
    "Sym": ("n",),
    "Alt": ("n",),
    "Modular": ("p", "n"),
    "HeisenbergLike": ("p", "n"),
    "SL2": ("q",),
    "PSL2": ("q",),
    "IrreducibleFrobenius": ("q", "k", "p"),
}


def _params_to_json(spec: GroupSpec) -> dict:
    if spec.constructor == "Direct":
        return {"factors": [p.to_json() for p in spec.params]}
    if spec.constructor == "PowerAction":
        return {
            "p": spec.params[0],
            "alpha": spec.params[1],
            "factors": [
                {"prime": t[0], "exp": t[1], "twist": t[2]} for t in spec.params[2:]
            ],
        }
    names = _PARAM_NAMES.get(spec.constructor, ())
    return {name: value for name, value in zip(names, spec.params)}


def spec_from_json(doc: dict) -> GroupSpec:
    name = doc.get("constructor")
    if not isinstance(name, str):
        raise UnknownConstructorError("missing constructor name")
    params = doc.get("params", {})
    if name == "Direct":
        return GroupSpec(name, tuple(spec_from_json(d) for d in params["factors"]))
    if name == "PowerAction":
        triples = tuple((t["prime"], t["exp"], t["twist"]) for t in params["factors"])
        return GroupSpec(name, (params["p"], params["alpha"], *triples))
    names = _PARAM_NAMES.get(name, ())
    return GroupSpec(name, tuple(int(params[k]) for k in names))


# --- the standard catalog ---------------------------------------------------------


def standard_catalog() -> list[GroupSpec]:
    """The fixed universe of groups the claim registry quantifies over."""
    specs: list[GroupSpec] = []
    specs += [GroupSpec("Cyclic", (n,)) for n in range(1, 13)]
    specs += [
        GroupSpec("ElementaryAbelian", (2, 2)),
        GroupSpec("ElementaryAbelian", (2, 3)),
        GroupSpec("ElementaryAbelian", (3, 2)),
        GroupSpec("ElementaryAbelian", (5, 2)),
        GroupSpec("Direct", (GroupSpec("Cyclic", (2,)), GroupSpec("Cyclic", (4,)))),
    ]
    specs += [GroupSpec("Dihedral", (n,)) for n in range(3, 13)]
    specs += [GroupSpec("Dicyclic", (n,)) for n in range(2, 7)]
    specs += [GroupSpec("Sym", (n,)) for n in (3, 4, 5)]
    specs += [GroupSpec("Alt", (n,)) for n in (4, 5)]
    specs += [
        GroupSpec("Modular", (3, 2)),
        GroupSpec("Modular", (5, 2)),
        GroupSpec("HeisenbergLike", (3, 1)),
        GroupSpec("HeisenbergLike", (5, 1)),
        GroupSpec("HeisenbergLike", (2, 2)),
        GroupSpec("SL2", (3,)),
        GroupSpec("SL2", (5,)),
        GroupSpec("PSL2", (4,)),
        GroupSpec("PSL2", (5,)),
        GroupSpec("PSL2", (7,)),
        GroupSpec("PSL2", (8,)),
        GroupSpec("GU2_3"),
        GroupSpec("C2sqSemiC4"),
        GroupSpec("D4SemiS3"),
        GroupSpec("C5xC3SemiD4"),
        GroupSpec("C5SemiQ8"),
        GroupSpec("PowerAction", (2, 2, (5, 1, 3))),
        GroupSpec("PowerAction", (3, 1, (7, 1, 5))),
        GroupSpec("PowerAction", (2, 1, (3, 2, 1))),
        GroupSpec("IrreducibleFrobenius", (5, 2, 3)),
        GroupSpec("IrreducibleFrobenius", (2, 2, 3)),
        GroupSpec("Direct", (GroupSpec("Cyclic", (3,)), GroupSpec("Sym", (3,)))),
        GroupSpec("Direct", (GroupSpec("Cyclic", (5,)), GroupSpec("Sym", (3,)))),
        GroupSpec("Direct", (GroupSpec("Cyclic", (7,)), GroupSpec("Alt", (5,)))),
        GroupSpec("Direct", (GroupSpec("Cyclic", (5,)), GroupSpec("Dihedral", (4,)))),
        GroupSpec("Direct", (GroupSpec("Cyclic", (3,)), GroupSpec("Dihedral", (5,)))),
    ]
    return specs
