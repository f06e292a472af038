"""Exact dense linear algebra over the prime field F_p.

Matrices are numpy int64 arrays with entries reduced into [0, p).  Vectors
are 1-d arrays.  Linear maps act on column vectors: y = (M @ x) % p.
Subspaces are stored as reduced row echelon bases, which makes the basis
canonical: two generating sets of the same subspace produce identical
arrays.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

import numpy as np

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in _SMALL_PRIMES:
        if p == q:
            return True
        if p % q == 0:
            return False
    # trial division is plenty for the sizes this library targets
    d = 49
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("no inverse of 0 mod %d" % p)
    return pow(a, p - 2, p)


def asmat(data, p: int) -> np.ndarray:
    m = np.asarray(data, dtype=np.int64) % p
    if m.ndim == 1:
        m = m.reshape(1, -1)
    return m


def asvec(data, p: int) -> np.ndarray:
    v = np.asarray(data, dtype=np.int64).reshape(-1) % p
    return v


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def zeros(shape) -> np.ndarray:
    return np.zeros(shape, dtype=np.int64)


def rref(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns, zero rows dropped."""
    M = (np.asarray(A, dtype=np.int64) % p).copy()
    if M.ndim == 1:
        M = M.reshape(1, -1)
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pr = -1
        for i in range(r, rows):
            if M[i, c] % p:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            M[[r, pr]] = M[[pr, r]]
        M[r] = (M[r] * inv_mod(int(M[r, c]), p)) % p
        for i in range(rows):
            if i != r and M[i, c]:
                M[i] = (M[i] - M[i, c] * M[r]) % p
        pivots.append(c)
        r += 1
    return M[:r], pivots


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Basis of {x : A x = 0} as rows of the result."""
    A = asmat(A, p)
    _, cols = A.shape
    R, pivots = rref(A, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros((len(free), cols))
    for k, c in enumerate(free):
        basis[k, c] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-R[r, c]) % p
    return basis


def solve(A: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution of A x = b, or None if inconsistent."""
    A = asmat(A, p)
    b = asvec(b, p)
    rows, cols = A.shape
    if b.shape[0] != rows:
        raise ValueError(f"shape mismatch: {A.shape} vs {b.shape}")
    aug = np.concatenate([A, b.reshape(-1, 1)], axis=1)
    R, pivots = rref(aug, p)
    if cols in pivots:
        return None
    x = zeros(cols)
    for r, c in enumerate(pivots):
        x[c] = R[r, cols]
    return x


def solve_matrix(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray | None:
    """X with A @ X = B, or None if any column is inconsistent."""
    A = asmat(A, p)
    B = asmat(B, p)
    cols = []
    for j in range(B.shape[1]):
        x = solve(A, B[:, j], p)
        if x is None:
            return None
        cols.append(x)
    return np.stack(cols, axis=1) if cols else zeros((A.shape[1], 0))


def inverse(A: np.ndarray, p: int) -> np.ndarray | None:
    A = asmat(A, p)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse requires a square matrix")
    X = solve_matrix(A, eye(n), p)
    if X is None:
        return None
    if not np.array_equal((A @ X) % p, eye(n)):
        return None
    return X


def rank(A: np.ndarray, p: int) -> int:
    R, _ = rref(asmat(A, p), p)
    return R.shape[0]


@dataclass(frozen=True)
class Subspace:
    """Row space of `basis` inside F_p^ambient; basis is in rref."""

    p: int
    ambient: int
    basis: np.ndarray = field(compare=False)

    @staticmethod
    def from_rows(rows, p: int, ambient: int) -> "Subspace":
        rows = np.asarray(rows, dtype=np.int64)
        if rows.size == 0:
            rows = zeros((0, ambient))
        rows = rows.reshape(-1, ambient) % p
        R, _ = rref(rows, p)
        return Subspace(p, ambient, R)

    @staticmethod
    def zero(p: int, ambient: int) -> "Subspace":
        return Subspace(p, ambient, zeros((0, ambient)))

    @staticmethod
    def full(p: int, ambient: int) -> "Subspace":
        return Subspace(p, ambient, eye(ambient))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def pivots(self) -> list[int]:
        return [int(np.flatnonzero(row)[0]) for row in self.basis]

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Canonical coset representative: v minus its projection onto self."""
        v = asvec(v, self.p) % self.p
        for row, c in zip(self.basis, self.pivots()):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def coordinates(self, v) -> np.ndarray | None:
        """Coefficients of v in the rref basis, or None if v is outside."""
        v = asvec(v, self.p)
        coeffs = np.array([v[c] for c in self.pivots()], dtype=np.int64)
        if np.array_equal((coeffs @ self.basis) % self.p, v % self.p):
            return coeffs
        return None

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.p == other.p
            and self.ambient == other.ambient
            and self.basis.shape == other.basis.shape
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return hash((self.p, self.ambient, self.basis.tobytes()))

    def add(self, other: "Subspace") -> "Subspace":
        rows = np.concatenate([self.basis, other.basis], axis=0)
        return Subspace.from_rows(rows, self.p, self.ambient)

    def intersect(self, other: "Subspace") -> "Subspace":
        # x = a @ U = b @ W; stack [U^T | -W^T] and read off kernel pairs
        U, W = self.basis, other.basis
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.p, self.ambient)
        stacked = np.concatenate([U.T, (-W.T) % self.p], axis=1)
        ker = nullspace(stacked, self.p)
        rows = (ker[:, : self.dim] @ U) % self.p
        return Subspace.from_rows(rows, self.p, self.ambient)


def solve_linear(A: np.ndarray, b: np.ndarray, p: int):
    """Particular solution of A x = b plus the kernel subspace.

    Returns (x, kernel) with x None when the system is inconsistent;
    the kernel of A is returned either way.
    """
    A = asmat(A, p)
    ker = Subspace.from_rows(nullspace(A, p), p, A.shape[1])
    return solve(A, b, p), ker


def kernel_image(A: np.ndarray, p: int) -> tuple[Subspace, Subspace]:
    """(ker A, im A); the image lives in the target space F_p^rows."""
    A = asmat(A, p)
    ker = Subspace.from_rows(nullspace(A, p), p, A.shape[1])
    im = Subspace.from_rows(A.T, p, A.shape[0])
    return ker, im


@dataclass(frozen=True)
class QuotientWithSection:
    """F_p^ambient / kernel with an explicit linear splitting.

    projection (dim x ambient) and section (ambient x dim) satisfy
    projection @ section = identity and ker(projection) = kernel.
    """

    p: int
    ambient: int
    kernel: Subspace
    projection: np.ndarray
    section: np.ndarray

    @property
    def dim(self) -> int:
        return self.projection.shape[0]

    def project(self, v) -> np.ndarray:
        return (self.projection @ asvec(v, self.p)) % self.p

    def lift(self, w) -> np.ndarray:
        return (self.section @ asvec(w, self.p)) % self.p


def quotient_with_section(ambient: int, K: Subspace) -> QuotientWithSection:
    p = K.p
    if K.ambient != ambient:
        raise ValueError("kernel does not live in the requested ambient space")
    piv = K.pivots()
    free = [c for c in range(ambient) if c not in piv]
    q = len(free)
    proj = zeros((q, ambient))
    for i in range(ambient):
        e = zeros(ambient)
        e[i] = 1
        red = K.reduce(e)
        proj[:, i] = red[free]
    sec = zeros((ambient, q))
    for k, c in enumerate(free):
        sec[c, k] = 1
    return QuotientWithSection(p, ambient, K, proj, sec)


def iter_vectors(p: int, n: int):
    """All of F_p^n in lexicographic order (first coordinate slowest)."""
    for tup in itertools.product(range(p), repeat=n):
        yield np.array(tup, dtype=np.int64)


@dataclass(frozen=True)
class Policy:
    """How element-quantified (nonlinear) checks traverse F_p^n."""

    exhaustive_limit: int = 10_000
    samples: int = 512
    seed: int = 0

    def elements(self, p: int, n: int) -> tuple[list[np.ndarray], str]:
        """(vectors, mode) with mode "exhaustive" or "sampled"."""
        if p**n <= self.exhaustive_limit:
            return list(iter_vectors(p, n)), "exhaustive"
        rng = random.Random(self.seed)
        out = [np.array(row, dtype=np.int64) for row in eye(n)]
        for _ in range(self.samples):
            out.append(
                np.array([rng.randrange(p) for _ in range(n)], dtype=np.int64)
            )
        return out, "sampled"


DEFAULT_POLICY = Policy()
