"""Small finite fields and matrix groups used to author the bundled group data.

Everything here is authoring-time tooling: it recomputes group generators and
orbit objects from scratch so the JSON shipped with the package can be verified
before freezing.  Nothing in src/ imports this.
"""

from __future__ import annotations

import itertools

# monic irreducible moduli, coefficient lists c0..ck for x^k + ... + c0
MODULI = {
    (2, 2): (1, 1, 1),          # x^2 + x + 1
    (2, 4): (1, 1, 0, 0, 1),    # x^4 + x + 1
    (3, 2): (1, 0, 1),          # x^2 + 1
    (5, 2): (2, 0, 1),          # x^2 + 2
}


class GF:
    """GF(p^k) with dense arithmetic tables; elements are ints 0..q-1."""

    def __init__(self, p: int, k: int = 1):
        self.p = p
        self.k = k
        self.q = p**k
        if k == 1:
            self.add_t = [[(a + b) % p for b in range(p)] for a in range(p)]
            self.mul_t = [[(a * b) % p for b in range(p)] for a in range(p)]
        else:
            mod = MODULI[(p, k)]
            self.add_t = [
                [self._enc([(x + y) % p for x, y in zip(self._dec(a), self._dec(b))])
                 for b in range(self.q)]
                for a in range(self.q)
            ]
            self.mul_t = [[self._polymul(a, b, mod) for b in range(self.q)]
                          for a in range(self.q)]
        self.neg_t = [0] * self.q
        self.inv_t = [0] * self.q
        for a in range(self.q):
            for b in range(self.q):
                if self.add_t[a][b] == 0:
                    self.neg_t[a] = b
                if a and self.mul_t[a][b] == 1:
                    self.inv_t[a] = b
        # frobenius x -> x^p
        self.frob_t = [self.pow(a, p) for a in range(self.q)]

    def _dec(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _enc(self, coeffs) -> int:
        a = 0
        for c in reversed(list(coeffs)):
            a = a * self.p + (c % self.p)
        return a

    def _polymul(self, a: int, b: int, mod) -> int:
        pa, pb = self._dec(a), self._dec(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(pa):
            if x:
                for j, y in enumerate(pb):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce by x^k = -(c_{k-1} x^{k-1} + ... + c0)
        for d in range(2 * self.k - 2, self.k - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for j in range(self.k):
                    prod[d - self.k + j] = (prod[d - self.k + j] - c * mod[j]) % self.p
        return self._enc(prod[: self.k])

    def add(self, a, b):
        return self.add_t[a][b]

    def sub(self, a, b):
        return self.add_t[a][self.neg_t[b]]

    def mul(self, a, b):
        return self.mul_t[a][b]

    def neg(self, a):
        return self.neg_t[a]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.inv_t[a]

    def pow(self, a, n):
        r = 1
        for _ in range(n):
            r = self.mul_t[r][a]
        return r

    def conj(self, a):
        """x -> x^(p^(k/2)), the involutory automorphism of a quadratic extension."""
        if self.k % 2:
            raise ValueError("conj needs even extension degree")
        r = a
        for _ in range(self.k // 2):
            r = self.frob_t[r]
        return r

    def embed_prime(self, c: int) -> int:
        """Image of c mod p under GF(p) -> GF(p^k)."""
        return c % self.p

    def elements(self):
        return range(self.q)

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"


# matrices are tuples of row tuples of field codes

def identity(n: int):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(F: GF, A, B):
    n, m, r = len(A), len(B), len(B[0])
    Bt = list(zip(*B))
    out = []
    for i in range(n):
        row = []
        Ai = A[i]
        for j in range(r):
            s = 0
            col = Bt[j]
            for t in range(m):
                a = Ai[t]
                if a:
                    s = F.add_t[s][F.mul_t[a][col[t]]]
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def vec_mat(F: GF, v, A):
    n = len(A[0])
    out = []
    for j in range(n):
        s = 0
        for t, a in enumerate(v):
            if a:
                s = F.add_t[s][F.mul_t[a][A[t][j]]]
        out.append(s)
    return tuple(out)


def mat_pow(F: GF, A, n: int):
    R = identity(len(A))
    for _ in range(n):
        R = mat_mul(F, R, A)
    return R


def mat_neg(F: GF, A):
    return tuple(tuple(F.neg_t[x] for x in row) for row in A)


def transpose(A):
    return tuple(zip(*A))


def mat_conj(F: GF, A):
    return tuple(tuple(F.conj(x) for x in row) for row in A)


def mat_inv(F: GF, A):
    n = len(A)
    M = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col])
        M[col], M[piv] = M[piv], M[col]
        ipiv = F.inv_t[M[col][col]]
        M[col] = [F.mul_t[ipiv][x] for x in M[col]]
        for r in range(n):
            if r != col and M[r][col]:
                c = M[r][col]
                M[r] = [F.sub(x, F.mul_t[c][y]) for x, y in zip(M[r], M[col])]
    return tuple(tuple(row[n:]) for row in M)


def det(F: GF, A):
    n = len(A)
    M = [list(row) for row in A]
    d = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if M[r][col]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            d = F.neg_t[d]
        d = F.mul_t[d][M[col][col]]
        ipiv = F.inv_t[M[col][col]]
        for r in range(col + 1, n):
            if M[r][col]:
                c = F.mul_t[M[r][col]][ipiv]
                M[r] = [F.sub(x, F.mul_t[c][y]) for x, y in zip(M[r], M[col])]
    return d


def scalar_mat(F: GF, n: int, c: int):
    return tuple(tuple(c if i == j else 0 for j in range(n)) for i in range(n))


# projective geometry

def normalize_point(F: GF, v):
    for x in v:
        if x:
            ix = F.inv_t[x]
            return tuple(F.mul_t[ix][y] for y in v)
    raise ValueError("zero vector")


def proj_points(F: GF, n: int):
    """All points of PG(n-1, q) as normalized tuples, sorted."""
    pts = set()
    for v in itertools.product(F.elements(), repeat=n):
        if any(v):
            pts.add(normalize_point(F, v))
    return sorted(pts)


def perm_on_points(F: GF, A, points, index):
    """1-based image list of the right action v -> v*A on a point list."""
    return [index[normalize_point(F, vec_mat(F, v, A))] + 1 for v in points]


# forms

def antidiag_ones(n: int):
    return tuple(tuple(1 if i + j == n - 1 else 0 for j in range(n)) for i in range(n))


def symplectic_gram(F: GF):
    """4x4 alternating form: antidiagonal 1,1,-1,-1."""
    m1 = F.neg_t[1]
    return (
        (0, 0, 0, 1),
        (0, 0, 1, 0),
        (0, m1, 0, 0),
        (m1, 0, 0, 0),
    )


def form_value(F: GF, J, u, v, hermitian: bool):
    """u J v^T, conjugating v when hermitian."""
    w = v if not hermitian else tuple(F.conj(x) for x in v)
    s = 0
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(w):
                if b and J[i][j]:
                    s = F.add_t[s][F.mul_t[F.mul_t[a][J[i][j]]][b]]
    return s


def preserves_form(F: GF, J, A, hermitian: bool) -> bool:
    B = mat_mul(F, mat_mul(F, A, J), transpose(mat_conj(F, A) if hermitian else A))
    return B == J


def isotropic_points(F: GF, J, n: int, hermitian: bool):
    return [v for v in proj_points(F, n) if form_value(F, J, v, v, hermitian) == 0]


def symplectic_transvection(F: GF, J, v, lam, n: int):
    """x -> x + lam (x J v^T) v."""
    rows = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        c = F.mul_t[lam][form_value(F, J, e, v, False)]
        rows.append(tuple(F.add_t[e[j]][F.mul_t[c][v[j]]] for j in range(n)))
    return tuple(rows)


def unitary_transvection(F: GF, J, v, lam, n: int):
    """x -> x + lam h(x,v) v for isotropic v and trace-zero lam."""
    rows = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        c = F.mul_t[lam][form_value(F, J, e, v, True)]
        rows.append(tuple(F.add_t[e[j]][F.mul_t[c][v[j]]] for j in range(n)))
    return tuple(rows)


def trace_zero_elements(F: GF):
    """Nonzero lam with lam + conj(lam) = 0."""
    return [a for a in F.elements() if a and F.add_t[a][F.conj(a)] == 0]
