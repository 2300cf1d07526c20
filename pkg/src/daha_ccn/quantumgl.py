"""Explicit operator data for the vector representation of U_q(gl_N).

Everything here is an exact sparse matrix over the quantum parameter field:
the R-matrix and its inverse, the braiding flip.R, the four L-matrix
families and their antipodes, the reflection-equation solutions J^sigma
(one per q-power symbol), the coideal generator matrices, the two-parameter
characters, and the skew matrix whose Hecke relation controls the zeroth
affine generator.

Index conventions: R(e_i x e_j) = sum R^{kl}_{ij} e_k x e_l with the entry
table {q at i=j=k=l; 1 at i=k != j=l; q - q^-1 at i=l < j=k}, and E_i^j is
the matrix unit with E_i^j e_k = delta_{jk} e_i (indices 1-based in the
mathematical API, 0-based in matrix storage).
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import LinalgError, Matrix, TensorSpace, SlotOperator, embed, kron
from .scalars import QUANTUM

_q = QUANTUM.gen("q")


@dataclass(frozen=True)
class GlParams:
    """The symmetric-pair shape (gl_N, gl_p x gl_q), q_dim := N - p."""
    N: int
    p: int

    def __post_init__(self):
        if self.N < 2:
            raise LinalgError("N must be at least 2")
        if not 1 <= self.p <= self.N - self.p:
            raise LinalgError("p must satisfy 1 <= p <= N/2")

    @property
    def qdim(self):
        return self.N - self.p


def matrix_unit(N, i, j, value=1):
    """E_i^j (1-based): the map e_j -> e_i."""
    return Matrix(N, N, {(i - 1, j - 1): value})


def build_flip(N):
    data = {}
    for i in range(N):
        for j in range(N):
            data[(j * N + i, i * N + j)] = 1
    return Matrix(N * N, N * N, data)


def build_R(N):
    """R-matrix on V x V, rows indexed by the output pair (k,l)."""
    q = _q
    qm = q - q.inv()
    data = {}
    for i in range(1, N + 1):
        data[((i - 1) * N + (i - 1),) * 2] = q
        for j in range(1, N + 1):
            if i != j:
                rc = (i - 1) * N + (j - 1)
                data[(rc, rc)] = QUANTUM.one
            if i < j:
                # output (j, i), input (i, j)
                data[((j - 1) * N + (i - 1), (i - 1) * N + (j - 1))] = qm
    return Matrix(N * N, N * N, data)


def build_R_inv(N):
    q = _q
    qm = q.inv() - q
    data = {}
    for i in range(1, N + 1):
        data[((i - 1) * N + (i - 1),) * 2] = q.inv()
        for j in range(1, N + 1):
            if i != j:
                rc = (i - 1) * N + (j - 1)
                data[(rc, rc)] = QUANTUM.one
            if i < j:
                data[((j - 1) * N + (i - 1), (i - 1) * N + (j - 1))] = qm
    return Matrix(N * N, N * N, data)


def braiding(N):
    """sigma = flip . R on V x V."""
    return build_flip(N) * build_R(N)


def braiding_inv(N):
    """sigma^-1 = R^-1 . flip."""
    return build_R_inv(N) * build_flip(N)


# ---------------------------------------------------------------------------
# L-matrices
# ---------------------------------------------------------------------------

class LMatrices:
    """The four families rho(l+_{ij}), rho(l-_{ij}), rho(S(l+_{ij})),
    rho(S(l-_{ij})), each an N x N matrix, indices 1-based."""

    def __init__(self, N):
        self.N = N
        q = _q
        qm = q - q.inv()
        one = QUANTUM.one

        def lplus(i, j):
            if i == j:
                data = {(k, k): (q if k == i - 1 else one) for k in range(N)}
                return Matrix(N, N, data)
            if i < j:
                return matrix_unit(N, j, i, qm)
            return Matrix.zero(N, N)

        def lminus(i, j):
            if i == j:
                data = {(k, k): (q.inv() if k == i - 1 else one) for k in range(N)}
                return Matrix(N, N, data)
            if i > j:
                return matrix_unit(N, j, i, -qm)
            return Matrix.zero(N, N)

        self.plus = [[lplus(i, j) for j in range(1, N + 1)]
                     for i in range(1, N + 1)]
        self.minus = [[lminus(i, j) for j in range(1, N + 1)]
                      for i in range(1, N + 1)]
        self.s_plus = _family_inverse(self.plus)
        self.s_minus = _family_inverse(self.minus)

    def l_plus(self, i, j):
        return self.plus[i - 1][j - 1]

    def l_minus(self, i, j):
        return self.minus[i - 1][j - 1]

    def s_l_plus(self, i, j):
        return self.s_plus[i - 1][j - 1]

    def s_l_minus(self, i, j):
        return self.s_minus[i - 1][j - 1]


def _block_matrix(blocks):
    """Assemble an N x N grid of n x n matrices into one (N n) x (N n) matrix."""
    N = len(blocks)
    n = blocks[0][0].nrows
    data = {}
    for I in range(N):
        for J in range(N):
            for (r, c), v in blocks[I][J].data.items():
                data[(I * n + r, J * n + c)] = v
    return Matrix(N * n, N * n, data)


def _split_blocks(m, N, n):
    blocks = [[Matrix.zero(n, n) for _ in range(N)] for _ in range(N)]
    for (r, c), v in m.data.items():
        blocks[r // n][c // n].data[(r % n, c % n)] = v
    return blocks


def _family_inverse(family):
    """Antipode family: the blockwise inverse of [rho(l_{ij})]_{ij}."""
    N = len(family)
    n = family[0][0].nrows
    big = _block_matrix(family)
    return _split_blocks(big.inverse(), N, n)


def l_family_matrix(lm, which):
    """The operator on V_aux x V with (i,j) block rho(l_{ij}); equals R_21,
    R^-1, (R_21)^-1 and R for '+', '-', 'S+', 'S-' respectively."""
    fam = {"+": lm.plus, "-": lm.minus, "S+": lm.s_plus, "S-": lm.s_minus}[which]
    return _block_matrix(fam)


# ---------------------------------------------------------------------------
# reflection-equation solutions
# ---------------------------------------------------------------------------

def build_J_sigma(gp, sym="qs"):
    """The N x N solution with parameter symbol `sym` (q^sigma by default):
    (x - x^-1) on the first p diagonal entries, -x^-1 on the middle block,
    ones on the outer anti-diagonal."""
    N, p = gp.N, gp.p
    x = QUANTUM.gen(sym)
    data = {}
    for k in range(1, p + 1):
        data[(k - 1, k - 1)] = x - x.inv()
        data[(k - 1, N - k)] = QUANTUM.one
        data[(N - k, k - 1)] = QUANTUM.one
    for k in range(p + 1, N - p + 1):
        data[(k - 1, k - 1)] = -x.inv()
    return Matrix(N, N, {rc: v for rc, v in data.items() if v})


def J_sigma_inverse(gp, sym="qs"):
    """(J^sigma)^-1 = J^sigma - (x - x^-1) I, from the Hecke relation."""
    x = QUANTUM.gen(sym)
    return build_J_sigma(gp, sym).add_identity(-(x - x.inv()))


def check_reflection(J, side, N):
    """LHS - RHS of the reflection equation for J on V x V.

    right: R_21 J_1 R_12 J_2 = J_2 R_21 J_1 R_12
    left:  R_21 J_2 R_12 J_1 = J_1 R_21 J_2 R_12
    """
    if J.nrows != N or J.ncols != N:
        raise LinalgError("J must be N x N")
    R = build_R(N)
    flip = build_flip(N)
    R21 = flip * R * flip
    I = Matrix.identity(N)
    J1 = kron(J, I)
    J2 = kron(I, J)
    if side == "right":
        return R21 * J1 * R * J2 - J2 * R21 * J1 * R
    if side == "left":
        return R21 * J2 * R * J1 - J1 * R21 * J2 * R
    raise LinalgError("side must be 'right' or 'left'")


# ---------------------------------------------------------------------------
# coideal generators
# ---------------------------------------------------------------------------

def coideal_matrix(gp, nslots, sym="qs"):
    """The operator X on V_aux x V^{x nslots} whose (i,l) auxiliary block is
    the action of the coideal generator c_il.

    X is the double-braiding conjugate of J: move the auxiliary slot across
    all representation slots, apply J there, and braid back (all positive
    crossings).
    """
    N = gp.N
    space = TensorSpace([N] * (nslots + 1))
    sigma = braiding(N)
    J = build_J_sigma(gp, sym)

    def adj(k):  # braiding at slots (k, k+1), 0-based slot k
        return embed(SlotOperator(space, (k, k + 1), sigma))

    move_right = Matrix.identity(space.dim)
    for k in range(nslots):
        move_right = adj(k) * move_right       # aux travels 0 -> nslots
    move_left = Matrix.identity(space.dim)
    for k in range(nslots - 1, -1, -1):
        move_left = adj(k) * move_left          # last slot travels back to 0
    j_last = embed(SlotOperator(space, (nslots,), J))
    return move_left * j_last * move_right


def coideal_block(X, N, i, l):
    """Extract the (i,l) auxiliary block (1-based) of a coideal matrix."""
    n = X.nrows // N
    out = {}
    for (r, c), v in X.data.items():
        if r // n == i - 1 and c // n == l - 1:
            out[(r % n, c % n)] = v
    return Matrix(n, n, out)


def coideal_contraction(gp, nslots, sym="qs"):
    """Independent construction of the coideal matrix from the L-matrices:
    rho_W(c_il) = sum_{j,k} rho_W(l+_{ij}) J_{jk} rho_W(S(l-_{kl})), with the
    W-action of l-coefficients given by the coproduct sum over slots."""
    N = gp.N
    lm = LMatrices(N)
    J = build_J_sigma(gp, sym)

    def rep_plus(i, j, slots):
        if slots == 1:
            return lm.l_plus(i, j)
        total = Matrix.zero(N ** slots, N ** slots)
        for c in range(1, N + 1):
            total = total + kron(lm.l_plus(i, c), rep_plus(c, j, slots - 1))
        return total

    def rep_s_minus(k, l, slots):
        # Delta(S(l-_{kl})) = sum_c S(l-_{cl}) x S(l-_{kc})
        if slots == 1:
            return lm.s_l_minus(k, l)
        total = Matrix.zero(N ** slots, N ** slots)
        for c in range(1, N + 1):
            total = total + kron(lm.s_l_minus(c, l), rep_s_minus(k, c, slots - 1))
        return total

    dim = N ** nslots
    blocks = [[Matrix.zero(dim, dim) for _ in range(N)] for _ in range(N)]
    for i in range(1, N + 1):
        for l in range(1, N + 1):
            acc = Matrix.zero(dim, dim)
            for j in range(1, N + 1):
                for k in range(1, N + 1):
                    coeff = J[(j - 1, k - 1)]
                    if coeff:
                        acc = acc + (rep_plus(i, j, nslots)
                                     * rep_s_minus(k, l, nslots)).scale(coeff)
            blocks[i - 1][l - 1] = acc
    return _block_matrix(blocks)


# ---------------------------------------------------------------------------
# characters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CharacterSpec:
    """chi^eta_tau (kind 'chi') sends c_il to q^eta (J^tau)_il; the lambda
    family sends the primed generators to q^omega ((J^nu)^-1)_il."""
    kind: str
    power_sym: str   # 'qe' for q^eta, 'qw' for q^omega
    j_sym: str       # 'qt' for J^tau, 'qn' for J^nu

    def __post_init__(self):
        if self.kind not in ("chi", "lambda"):
            raise LinalgError("character kind must be 'chi' or 'lambda'")

    def value_matrix(self, gp):
        pref = QUANTUM.gen(self.power_sym)
        if self.kind == "chi":
            return build_J_sigma(gp, self.j_sym).scale(pref)
        return J_sigma_inverse(gp, self.j_sym).scale(pref)


def character_value(spec, gp, i, l):
    m = spec.value_matrix(gp)
    v = m[(i - 1, l - 1)]
    return v if v else QUANTUM.zero


# ---------------------------------------------------------------------------
# the skew matrix controlling T_0 on invariants
# ---------------------------------------------------------------------------

def build_tilde_J(gp, tau_sym="qt"):
    """The explicit N x N matrix (the alpha^-1-rescaled one) whose Hecke
    parameter is q^(qdim - p) q^tau:

      sum_{i<=p} (q^{qdim-p} x - q^{p-qdim} x^-1) E_i^i
      - sum_{p<i<=N-p} q^{p-qdim} x^-1 E_i^i
      + sum_{i<=p} q^{-N+2i-1} E_i^{N+1-i}
      + sum_{i<=p} q^{N-2i+1} E_{N+1-i}^i,      x = q^tau.
    """
    N, p = gp.N, gp.p
    q = _q
    x = QUANTUM.gen(tau_sym)
    lam1 = q ** (gp.qdim - p) * x
    lam2 = q ** (p - gp.qdim) * x.inv()
    data = {}
    for i in range(1, p + 1):
        data[(i - 1, i - 1)] = lam1 - lam2
        data[(i - 1, N - i)] = q ** (-N + 2 * i - 1)
        data[(N - i, i - 1)] = q ** (N - 2 * i + 1)
    for i in range(p + 1, N - p + 1):
        data[(i - 1, i - 1)] = -lam2
    return Matrix(N, N, {rc: v for rc, v in data.items() if v})


def drinfeld_diagonal(N):
    """rho_V(u) = diag(q^{2i-2}) up to an immaterial scalar."""
    return Matrix(N, N, {(i, i): _q ** (2 * i) for i in range(N)})


def tilde_J_contraction(gp, tau_sym="qt"):
    """Second construction of the rescaled skew matrix:
    q^N sum_{ijkl} (J^tau)_{jk} E_i^l . u rho(l-_{kl}) u^-1 . rho(S(l+_{ij}))."""
    N = gp.N
    lm = LMatrices(N)
    Jtau = build_J_sigma(gp, tau_sym)
    u = drinfeld_diagonal(N)
    uinv = u.inverse()
    total = Matrix.zero(N, N)
    for i in range(1, N + 1):
        for l in range(1, N + 1):
            E = matrix_unit(N, i, l)
            for j in range(1, N + 1):
                for k in range(1, N + 1):
                    coeff = Jtau[(j - 1, k - 1)]
                    if not coeff:
                        continue
                    term = E * u * lm.l_minus(k, l) * uinv * lm.s_l_plus(i, j)
                    total = total + term.scale(coeff)
    return total.scale(_q ** N)
