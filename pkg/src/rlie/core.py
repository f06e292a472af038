"""Restricted Lie algebras over F_p: data model, p-map calculus, constructors.

An algebra is a basis with structure constants c[i,j,:] for [e_i, e_j] plus
the images of the basis vectors under the p-operation.  The p-operation on a
general element is never stored; it is recomputed through the sum rule

    (x + y)^[p] = x^[p] + y^[p] + sum_i s_i(x, y)

where i*s_i(x, y) is the lambda^(i-1) coefficient of ad_{lambda x + y}^{p-1}(x),
and ad_x(y) = [y, x].  Over F_p the scalar rule collapses to
(a x)^[p] = a x^[p] since a^p = a.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import fplin
from .fplin import DEFAULT_POLICY, Policy, Subspace, check_prime
from .report import Report


class AlgebraError(ValueError):
    """Raised when a constructor would emit an invalid algebra."""


class RestrictedLieAlgebra:
    def __init__(self, p, brackets, pmap, labels=None, name=""):
        self.p = check_prime(int(p))
        c = np.asarray(brackets, dtype=np.int64) % self.p
        self.dim = c.shape[0] if c.size else len(pmap)
        if c.size == 0:
            c = fplin.zeros((self.dim, self.dim, self.dim))
        if c.shape != (self.dim, self.dim, self.dim):
            raise AlgebraError(f"bracket table has shape {c.shape}")
        self.brackets = c
        pm = np.asarray(pmap, dtype=np.int64) % self.p
        pm = pm.reshape(self.dim, self.dim) if pm.size else fplin.zeros((self.dim, self.dim))
        self.pmap = pm
        self.labels = list(labels) if labels else [f"e{i}" for i in range(self.dim)]
        if len(self.labels) != self.dim:
            raise AlgebraError("label count differs from dimension")
        self.name = name

    def __repr__(self):
        tag = self.name or "algebra"
        return f"<{tag} dim {self.dim} over F_{self.p}>"

    def __eq__(self, other):
        return (
            isinstance(other, RestrictedLieAlgebra)
            and self.p == other.p
            and self.dim == other.dim
            and np.array_equal(self.brackets, other.brackets)
            and np.array_equal(self.pmap, other.pmap)
        )

    def __hash__(self):
        return hash((self.p, self.dim, self.brackets.tobytes(), self.pmap.tobytes()))

    # -- elements ---------------------------------------------------------

    def element(self, coeffs) -> "Element":
        v = fplin.asvec(coeffs, self.p)
        if v.shape[0] != self.dim:
            raise AlgebraError(f"expected {self.dim} coefficients, got {v.shape[0]}")
        return Element(self, v)

    def basis_element(self, i: int) -> "Element":
        v = fplin.zeros(self.dim)
        v[i] = 1
        return Element(self, v)

    def basis_elements(self) -> list["Element"]:
        return [self.basis_element(i) for i in range(self.dim)]

    def zero(self) -> "Element":
        return Element(self, fplin.zeros(self.dim))

    def elements(self, policy: Policy = DEFAULT_POLICY):
        vecs, mode = policy.elements(self.p, self.dim)
        return [Element(self, v) for v in vecs], mode

    # -- bracket and p-map calculus ----------------------------------------

    def bracket(self, u: "Element", v: "Element") -> "Element":
        self._own(u), self._own(v)
        w = np.einsum("i,j,ijk->k", u.vec, v.vec, self.brackets) % self.p
        return Element(self, w)

    def ad_matrix(self, x: "Element") -> np.ndarray:
        """Matrix of z -> [z, x]."""
        self._own(x)
        return np.einsum("j,ijk->ki", x.vec, self.brackets) % self.p

    def ad_power(self, y: "Element", k: int, x: "Element") -> "Element":
        """k-fold ad_y applied to x, with ad_y(z) = [z, y]."""
        if k < 0:
            raise AlgebraError("negative iteration count")
        z = x
        for _ in range(k):
            z = self.bracket(z, y)
        return z

    def s_coefficients(self, x: "Element", y: "Element") -> list["Element"]:
        """The correction terms s_1(x,y) .. s_{p-1}(x,y) of the sum rule."""
        self._own(x), self._own(y)
        poly = LambdaPolynomial([x])
        for _ in range(self.p - 1):
            poly = poly.bracket_step(x, y)
        out = []
        for i in range(1, self.p):
            coeff = poly.coefficient(i - 1)
            out.append(fplin.inv_mod(i, self.p) * coeff)
        return out

    def p_power(self, v: "Element") -> "Element":
        self._own(v)
        nz = np.flatnonzero(v.vec)
        if len(nz) == 0:
            return self.zero()
        if len(nz) == 1:
            i = int(nz[0])
            # (a e_i)^[p] = a^p e_i^[p] = a e_i^[p] over F_p
            return Element(self, (v.vec[i] * self.pmap[i]) % self.p)
        i = int(nz[0])
        head = fplin.zeros(self.dim)
        head[i] = v.vec[i]
        x = Element(self, head)
        y = Element(self, (v.vec - head) % self.p)
        acc = (self.p_power(x) + self.p_power(y)).vec.copy()
        for s in self.s_coefficients(x, y):
            acc = (acc + s.vec) % self.p
        return Element(self, acc)

    def _own(self, e: "Element"):
        if e.parent is not self:
            raise AlgebraError("element belongs to a different algebra")


@dataclass(frozen=True)
class Element:
    parent: RestrictedLieAlgebra
    vec: np.ndarray

    def __add__(self, other):
        self.parent._own(other)
        return Element(self.parent, (self.vec + other.vec) % self.parent.p)

    def __sub__(self, other):
        self.parent._own(other)
        return Element(self.parent, (self.vec - other.vec) % self.parent.p)

    def __neg__(self):
        return Element(self.parent, (-self.vec) % self.parent.p)

    def __rmul__(self, a: int):
        return Element(self.parent, (int(a) * self.vec) % self.parent.p)

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.parent is other.parent
            and np.array_equal(self.vec, other.vec)
        )

    def __hash__(self):
        return hash((id(self.parent), self.vec.tobytes()))

    def is_zero(self) -> bool:
        return not self.vec.any()

    def bracket(self, other) -> "Element":
        return self.parent.bracket(self, other)

    def p_power(self) -> "Element":
        return self.parent.p_power(self)


class LambdaPolynomial:
    """Polynomial in a formal variable with Element coefficients, degree < p."""

    def __init__(self, coeffs: list[Element]):
        while coeffs and coeffs[-1].is_zero() and len(coeffs) > 1:
            coeffs = coeffs[:-1]
        self.coeffs = coeffs

    def coefficient(self, k: int) -> Element:
        if k < len(self.coeffs):
            return self.coeffs[k]
        return self.coeffs[0].parent.zero()

    def bracket_step(self, x: Element, y: Element) -> "LambdaPolynomial":
        """Bracket every coefficient with (lambda x + y) and regroup."""
        L = x.parent
        out = [L.zero() for _ in range(len(self.coeffs) + 1)]
        for j, cj in enumerate(self.coeffs):
            out[j] = out[j] + L.bracket(cj, y)
            out[j + 1] = out[j + 1] + L.bracket(cj, x)
        return LambdaPolynomial(out)


# -- morphisms --------------------------------------------------------------


@dataclass(frozen=True)
class Morphism:
    """Linear map between restricted Lie algebras, as a matrix on columns."""

    source: RestrictedLieAlgebra
    target: RestrictedLieAlgebra
    matrix: np.ndarray

    def __post_init__(self):
        if self.source.p != self.target.p:
            raise AlgebraError("source and target moduli differ")
        m = fplin.asmat(self.matrix, self.source.p)
        if m.shape != (self.target.dim, self.source.dim):
            raise AlgebraError(
                f"matrix shape {m.shape} does not map "
                f"dim {self.source.dim} into dim {self.target.dim}"
            )
        object.__setattr__(self, "matrix", m)

    def __call__(self, e: Element) -> Element:
        self.source._own(e)
        return Element(self.target, (self.matrix @ e.vec) % self.source.p)

    def compose(self, inner: "Morphism") -> "Morphism":
        if inner.target is not self.source and inner.target != self.source:
            raise AlgebraError("composition mismatch")
        mat = (self.matrix @ inner.matrix) % self.source.p
        return Morphism(inner.source, self.target, mat)

    def kernel(self) -> Subspace:
        return fplin.kernel_image(self.matrix, self.source.p)[0]

    def image(self) -> Subspace:
        return fplin.kernel_image(self.matrix, self.source.p)[1]


def identity_morphism(L: RestrictedLieAlgebra) -> Morphism:
    return Morphism(L, L, fplin.eye(L.dim))


def is_restricted_morphism(phi: Morphism, policy: Policy = DEFAULT_POLICY) -> bool:
    """Bracket-preserving on basis pairs, p-map-preserving on elements."""
    L, R = phi.source, phi.target
    p = L.p
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = phi(L.bracket(L.basis_element(i), L.basis_element(j)))
            rhs = R.bracket(phi(L.basis_element(i)), phi(L.basis_element(j)))
            if lhs != rhs:
                return False
    vecs, _ = policy.elements(p, L.dim)
    for v in vecs:
        e = Element(L, v)
        if phi(L.p_power(e)) != R.p_power(phi(e)):
            return False
    return True


# -- axioms ------------------------------------------------------------------


def verify_restricted(L: RestrictedLieAlgebra, policy: Policy = DEFAULT_POLICY) -> Report:
    """Alternating + Jacobi on the basis, the p-map compatibility
    [x, y^[p]] = ad_y^p(x) on basis pairs, and split-order independence of
    the computed p-operation on a sample of elements."""
    rep = Report(L.name or "algebra")
    p, n = L.p, L.dim
    c = L.brackets

    alt = all(not c[i, i].any() for i in range(n))
    rep.add("alternating", alt)
    antisym = np.array_equal(c, (-np.swapaxes(c, 0, 1)) % p)
    rep.add("antisymmetry", antisym)

    jac = True
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei, ej, ek = (L.basis_element(t) for t in (i, j, k))
                total = (
                    L.bracket(L.bracket(ei, ej), ek)
                    + L.bracket(L.bracket(ej, ek), ei)
                    + L.bracket(L.bracket(ek, ei), ej)
                )
                if not total.is_zero():
                    jac = False
    rep.add("jacobi", jac)

    rel2 = True
    for i in range(n):
        for j in range(n):
            u, v = L.basis_element(i), L.basis_element(j)
            if L.bracket(u, L.p_power(v)) != L.ad_power(v, p, u):
                rel2 = False
    rep.add("p-map basis compatibility", rel2)

    import random

    rng = random.Random(policy.seed)
    split_ok = True
    trials = 32 if n else 0
    for _ in range(trials):
        v = L.element([rng.randrange(p) for _ in range(n)])
        a = L.element([rng.randrange(p) for _ in range(n)])
        b = v - a
        via_split = L.p_power(a) + L.p_power(b)
        for s in L.s_coefficients(a, b):
            via_split = via_split + s
        if via_split != L.p_power(v):
            split_ok = False
    rep.add("p-power split independence", split_ok, mode="sampled")
    return rep


def check_p_compat_elementwise(
    L: RestrictedLieAlgebra, policy: Policy = DEFAULT_POLICY
) -> tuple[bool, str]:
    """[u, v^[p]] = ad_v^p(u) with v over elements, u over the basis.

    Both sides are linear in u, so basis u with exhaustive v decides the
    fully quantified statement."""
    vecs, mode = policy.elements(L.p, L.dim)
    for v in vecs:
        e = Element(L, v)
        pe = L.p_power(e)
        for i in range(L.dim):
            u = L.basis_element(i)
            if L.bracket(u, pe) != L.ad_power(e, L.p, u):
                return False, mode
    return True, mode


def center(L: RestrictedLieAlgebra) -> Subspace:
    mats = [L.ad_matrix(L.basis_element(i)) for i in range(L.dim)]
    if not mats:
        return Subspace.zero(L.p, 0)
    stacked = np.concatenate(mats, axis=0)
    return fplin.kernel_image(stacked, L.p)[0]


# -- constructors ------------------------------------------------------------


def direct_product(L: RestrictedLieAlgebra, M: RestrictedLieAlgebra) -> RestrictedLieAlgebra:
    if L.p != M.p:
        raise AlgebraError("moduli differ")
    n, m = L.dim, M.dim
    c = fplin.zeros((n + m, n + m, n + m))
    c[:n, :n, :n] = L.brackets
    c[n:, n:, n:] = M.brackets
    pm = fplin.zeros((n + m, n + m))
    pm[:n, :n] = L.pmap
    pm[n:, n:] = M.pmap
    labels = [f"l.{s}" for s in L.labels] + [f"r.{s}" for s in M.labels]
    name = f"{L.name or 'L'}x{M.name or 'M'}"
    return RestrictedLieAlgebra(L.p, c, pm, labels, name)


def subalgebra(
    E: RestrictedLieAlgebra, S: Subspace, name: str = ""
) -> tuple[RestrictedLieAlgebra, Morphism]:
    """Algebra structure on a bracket- and p-closed subspace, plus inclusion."""
    p = E.p
    rows = S.basis
    k = S.dim
    c = fplin.zeros((k, k, k))
    for a in range(k):
        for b in range(k):
            w = E.bracket(Element(E, rows[a]), Element(E, rows[b]))
            coords = S.coordinates(w.vec)
            if coords is None:
                raise AlgebraError("subspace is not closed under the bracket")
            c[a, b] = coords
    pm = fplin.zeros((k, k))
    for a in range(k):
        w = E.p_power(Element(E, rows[a]))
        coords = S.coordinates(w.vec)
        if coords is None:
            raise AlgebraError("subspace is not closed under the p-operation")
        pm[a] = coords
    sub = RestrictedLieAlgebra(p, c, pm, [f"s{a}" for a in range(k)], name)
    incl = Morphism(sub, E, rows.T)
    return sub, incl


def pullback(
    f: Morphism, g: Morphism
) -> tuple[RestrictedLieAlgebra, Morphism, Morphism]:
    """Fibre product on pairs with equal images, plus the two projections."""
    if f.target != g.target:
        raise AlgebraError("pullback legs must share a target")
    L, M = f.source, g.source
    D = direct_product(L, M)
    diff = np.concatenate([f.matrix, (-g.matrix) % L.p], axis=1)
    S = Subspace.from_rows(fplin.nullspace(diff, L.p), L.p, L.dim + M.dim)
    P, incl = subalgebra(D, S, name="pullback")
    pr1 = Morphism(P, L, incl.matrix[: L.dim])
    pr2 = Morphism(P, M, incl.matrix[L.dim :])
    return P, pr1, pr2


def p_ideal_generated(L: RestrictedLieAlgebra, generators) -> Subspace:
    """Smallest subspace containing the generators that is stable under
    bracketing with L and under the p-operation."""
    vecs = [g.vec if isinstance(g, Element) else fplin.asvec(g, L.p) for g in generators]
    S = Subspace.from_rows(np.array(vecs).reshape(-1, L.dim), L.p, L.dim)
    while True:
        new_rows = [S.basis] if S.dim else []
        for row in S.basis:
            e = Element(L, row)
            for j in range(L.dim):
                new_rows.append(L.bracket(e, L.basis_element(j)).vec.reshape(1, -1))
            new_rows.append(L.p_power(e).vec.reshape(1, -1))
        if not new_rows:
            return S
        grown = Subspace.from_rows(np.concatenate(new_rows, axis=0), L.p, L.dim)
        if grown == S:
            return S
        S = grown


def is_p_ideal(L: RestrictedLieAlgebra, I: Subspace) -> bool:
    for row in I.basis:
        e = Element(L, row)
        for j in range(L.dim):
            if not I.contains(L.bracket(e, L.basis_element(j)).vec):
                return False
        if not I.contains(L.p_power(e).vec):
            return False
    return True


def quotient_algebra(
    L: RestrictedLieAlgebra, I: Subspace, name: str = ""
) -> tuple[RestrictedLieAlgebra, Morphism]:
    if not is_p_ideal(L, I):
        raise AlgebraError("subspace is not a p-ideal")
    q = fplin.quotient_with_section(L.dim, I)
    k = q.dim
    c = fplin.zeros((k, k, k))
    for a in range(k):
        for b in range(k):
            w = L.bracket(Element(L, q.section[:, a]), Element(L, q.section[:, b]))
            c[a, b] = q.project(w.vec)
    pm = fplin.zeros((k, k))
    for a in range(k):
        pm[a] = q.project(L.p_power(Element(L, q.section[:, a])).vec)
    Q = RestrictedLieAlgebra(L.p, c, pm, [f"q{a}" for a in range(k)], name)
    return Q, Morphism(L, Q, q.projection)


def _derivation_ok(N: RestrictedLieAlgebra, D: np.ndarray) -> bool:
    p = N.p
    for a in range(N.dim):
        for b in range(a + 1, N.dim):
            na, nb = N.basis_element(a), N.basis_element(b)
            lhs = (D @ N.bracket(na, nb).vec) % p
            rhs = (
                N.bracket(Element(N, (D @ na.vec) % p), nb).vec
                + N.bracket(na, Element(N, (D @ nb.vec) % p)).vec
            ) % p
            if not np.array_equal(lhs, rhs):
                return False
    return True


def _restricted_derivation_ok(
    N: RestrictedLieAlgebra, D: np.ndarray, policy: Policy
) -> tuple[bool, str]:
    """D(n^[p]) = ad_n^{p-1}(D(n)); linear in D, nonlinear in n."""
    p = N.p
    vecs, mode = policy.elements(p, N.dim)
    for v in vecs:
        e = Element(N, v)
        lhs = (D @ N.p_power(e).vec) % p
        rhs = N.ad_power(e, p - 1, Element(N, (D @ v) % p)).vec
        if not np.array_equal(lhs, rhs):
            return False, mode
    return True, mode


def check_derivation_action(
    L: RestrictedLieAlgebra,
    N: RestrictedLieAlgebra,
    eta: list[np.ndarray],
    policy: Policy = DEFAULT_POLICY,
) -> Report:
    """eta must be a restricted homomorphism L -> Der(N) whose values are
    restricted derivations of N."""
    rep = Report("derivation action")
    p = L.p
    eta = [fplin.asmat(m, p) for m in eta]
    rep.add("one matrix per basis vector", len(eta) == L.dim)
    rep.add("values are derivations", all(_derivation_ok(N, D) for D in eta))
    restr = True
    mode = "exhaustive"
    for D in eta:
        ok, mode = _restricted_derivation_ok(N, D, policy)
        restr = restr and ok
    rep.add("values are restricted derivations", restr, mode=mode)

    def eval_eta(x: np.ndarray) -> np.ndarray:
        out = fplin.zeros((N.dim, N.dim))
        for i, D in enumerate(eta):
            out = (out + int(x[i]) * D) % p
        return out

    hom = True
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            lhs = eval_eta(L.bracket(L.basis_element(i), L.basis_element(j)).vec)
            Di, Dj = eta[i], eta[j]
            rhs = (Di @ Dj - Dj @ Di) % p
            if not np.array_equal(lhs, rhs):
                hom = False
    rep.add("bracket homomorphism", hom)

    vecs, mode = policy.elements(p, L.dim)
    pcomp = True
    for v in vecs:
        lhs = eval_eta(L.p_power(Element(L, v)).vec)
        rhs = np.linalg.matrix_power(eval_eta(v), p) % p
        if not np.array_equal(lhs, rhs):
            pcomp = False
    rep.add("p-map homomorphism", pcomp, mode=mode)
    return rep


def semidirect(
    L: RestrictedLieAlgebra,
    N: RestrictedLieAlgebra,
    eta: list[np.ndarray],
    policy: Policy = DEFAULT_POLICY,
    name: str = "",
) -> RestrictedLieAlgebra:
    """Semi-direct product on pairs (l, n), with L acting on N through eta.

    The p-operation is pinned on the basis by (l,0)^[p] = (l^[p],0) and
    (0,n)^[p] = (0,n^[p]) and extended recursively; the axiom verifier runs
    as a guard and failures raise instead of emitting a broken algebra."""
    if L.p != N.p:
        raise AlgebraError("moduli differ")
    pre = check_derivation_action(L, N, eta, policy)
    if not pre.ok:
        raise AlgebraError(f"invalid action: {[c.name for c in pre.failures()]}")
    alg = _semidirect_unchecked(L, N, eta, acted_first=False, name=name)
    post = verify_restricted(alg, policy)
    if not post.ok:
        raise AlgebraError(
            f"semi-direct p-map failed verification: {[c.name for c in post.failures()]}"
        )
    return alg


def _semidirect_unchecked(
    L: RestrictedLieAlgebra,
    N: RestrictedLieAlgebra,
    eta: list[np.ndarray],
    acted_first: bool,
    name: str = "",
) -> RestrictedLieAlgebra:
    """Block assembly for L acting on N.  Layout (l, n), or (n, l) when
    acted_first is set (used for crossed-module totals written M x| N)."""
    p = L.p
    eta = [fplin.asmat(m, p) for m in eta]
    n1, n2 = L.dim, N.dim
    dim = n1 + n2
    # slices for the acting and acted blocks in the chosen layout
    if acted_first:
        aslc, nslc = slice(n2, dim), slice(0, n2)
        labels = [f"n.{s}" for s in N.labels] + [f"l.{s}" for s in L.labels]
    else:
        aslc, nslc = slice(0, n1), slice(n1, dim)
        labels = [f"l.{s}" for s in L.labels] + [f"n.{s}" for s in N.labels]
    c = fplin.zeros((dim, dim, dim))
    ai = list(range(dim))[aslc]
    ni = list(range(dim))[nslc]
    for a, i in enumerate(ai):
        for b, j in enumerate(ai):
            c[i, j, aslc] = L.brackets[a, b]
    for a, i in enumerate(ni):
        for b, j in enumerate(ni):
            c[i, j, nslc] = N.brackets[a, b]
    for a, i in enumerate(ai):
        for b, j in enumerate(ni):
            col = eta[a][:, b] % p  # eta(e_a) applied to n_b
            c[i, j, nslc] = col
            c[j, i, nslc] = (-col) % p
    pm = fplin.zeros((dim, dim))
    for a, i in enumerate(ai):
        pm[i, aslc] = L.pmap[a]
    for a, i in enumerate(ni):
        pm[i, nslc] = N.pmap[a]
    return RestrictedLieAlgebra(p, c, pm, labels, name or "semidirect")


# -- standard examples --------------------------------------------------------


def abelian_semilinear(p: int, f=None, dim: int | None = None, name: str = "") -> RestrictedLieAlgebra:
    """Abelian algebra whose p-operation is the given additive map f."""
    if f is None:
        if dim is None:
            raise AlgebraError("need f or dim")
        f = fplin.zeros((dim, dim))
    f = fplin.asmat(f, p)
    n = f.shape[0]
    if f.shape != (n, n):
        raise AlgebraError("f must be square")
    c = fplin.zeros((n, n, n))
    return RestrictedLieAlgebra(p, c, f.T, name=name or f"abelian{n}")


def heisenberg(p: int) -> RestrictedLieAlgebra:
    c = fplin.zeros((3, 3, 3))
    c[0, 1, 2] = 1
    c[1, 0, 2] = p - 1
    pm = fplin.zeros((3, 3))
    return RestrictedLieAlgebra(p, c, pm, ["x", "y", "z"], name=f"heisenberg(F_{p})")


def gl(n: int, p: int) -> RestrictedLieAlgebra:
    """n x n matrices with the commutator bracket and p-th power p-map."""
    check_prime(p)
    dim = n * n
    idx = lambda a, b: a * n + b

    def unit(a, b):
        m = fplin.zeros((n, n))
        m[a, b] = 1
        return m

    c = fplin.zeros((dim, dim, dim))
    pm = fplin.zeros((dim, dim))
    for a in range(n):
        for b in range(n):
            for d in range(n):
                for e in range(n):
                    comm = (unit(a, b) @ unit(d, e) - unit(d, e) @ unit(a, b)) % p
                    c[idx(a, b), idx(d, e)] = comm.reshape(-1)
            pw = np.linalg.matrix_power(unit(a, b), p) % p
            pm[idx(a, b)] = pw.reshape(-1)
    labels = [f"E{a+1}{b+1}" for a in range(n) for b in range(n)]
    return RestrictedLieAlgebra(p, c, pm, labels, name=f"gl{n}(F_{p})")


def gl_matrix(L: RestrictedLieAlgebra, v: Element, n: int) -> np.ndarray:
    return v.vec.reshape(n, n)


def sl(n: int, p: int) -> RestrictedLieAlgebra:
    """Trace-zero subalgebra of gl(n); when p divides n it still closes,
    with the scalar matrices inside rather than complementary."""
    G = gl(n, p)
    trace_row = fplin.eye(n).reshape(1, -1)
    S = Subspace.from_rows(fplin.nullspace(trace_row, p), p, n * n)
    alg, _ = subalgebra(G, S, name=f"sl{n}(F_{p})")
    return alg


def standard_algebra(name: str, p: int, **params) -> RestrictedLieAlgebra:
    if name == "abelian_semilinear":
        return abelian_semilinear(p, params.get("f"), params.get("dim"))
    if name == "heisenberg":
        return heisenberg(p)
    if name == "gl":
        return gl(params["n"], p)
    if name == "sl":
        return sl(params["n"], p)
    raise AlgebraError(f"unknown standard algebra {name!r}")
