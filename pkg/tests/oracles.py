"""Independent brute-force oracles for the worked-example regression fixtures.

Deliberately primitive: closed-form 2x2 singular values, literal dense
matrix products, Bloch-sphere grid scans, and corner enumeration. Nothing
here calls into the package, so agreement between these values and the
library is a genuine cross-check.
"""

import cmath
import math

I2 = ((1 + 0j, 0j), (0j, 1 + 0j))
PAULI_X = ((0j, 1 + 0j), (1 + 0j, 0j))
PAULI_Y = ((0j, -1j), (1j, 0j))
PAULI_Z = ((1 + 0j, 0j), (0j, -1 - 0j))

KET_ZERO = (1 + 0j, 0j)
KET_PLUS = (1 / math.sqrt(2) + 0j, 1 / math.sqrt(2) + 0j)
KET_YPLUS = (1 / math.sqrt(2) + 0j, 1j / math.sqrt(2))


def mat2(rows):
    return tuple(tuple(complex(x) for x in row) for row in rows)


def matmul2(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def dagger2(a):
    return tuple(tuple(a[j][i].conjugate() for j in range(2)) for i in range(2))


def trace2(a):
    return a[0][0] + a[1][1]


def add2(a, b, sb=1.0):
    return tuple(tuple(a[i][j] + sb * b[i][j] for j in range(2)) for i in range(2))


def scale2(a, s):
    return tuple(tuple(s * a[i][j] for j in range(2)) for i in range(2))


def outer2(u, v):
    return tuple(tuple(u[i] * v[j].conjugate() for j in range(2)) for i in range(2))


def singular_values_2x2(m):
    """Singular values of a 2x2 complex matrix via the quadratic formula on M^dag M."""
    a = matmul2(dagger2(m), m)
    tr = a[0][0].real + a[1][1].real
    det = (a[0][0] * a[1][1] - a[0][1] * a[1][0]).real
    disc = max(tr * tr - 4.0 * det, 0.0)
    lam1 = 0.5 * (tr + math.sqrt(disc))
    lam2 = 0.5 * (tr - math.sqrt(disc))
    return math.sqrt(max(lam1, 0.0)), math.sqrt(max(lam2, 0.0))


def trace_norm_2x2(m):
    s1, s2 = singular_values_2x2(m)
    return s1 + s2


def commutator2(a, b):
    return add2(matmul2(a, b), matmul2(b, a), sb=-1.0)


def bloch_basis(theta, phi):
    """Orthonormal qubit basis whose first vector points along (theta, phi)."""
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    ph = cmath.exp(1j * phi)
    return (c + 0j, ph * s), (-ph.conjugate() * s, c + 0j)


def expectation(vec, m):
    out0 = m[0][0] * vec[0] + m[0][1] * vec[1]
    out1 = m[1][0] * vec[0] + m[1][1] * vec[1]
    return vec[0].conjugate() * out0 + vec[1].conjugate() * out1


def bloch_grid_sup_abs(k_op, grid=400):
    """max over rank-1 PVM bases of |<u1|K|u1>| + |<u2|K|u2>| by grid scan."""
    best = 0.0
    for i in range(grid + 1):
        theta = math.pi * i / grid
        for j in range(2 * grid):
            phi = math.pi * j / grid
            u1, u2 = bloch_basis(theta, phi)
            val = abs(expectation(u1, k_op)) + abs(expectation(u2, k_op))
            best = max(best, val)
    return best


def projector_z(which):
    return outer2((1 + 0j, 0j), (1 + 0j, 0j)) if which == 0 else outer2((0j, 1 + 0j), (0j, 1 + 0j))


def projector_x(which):
    v = (1 / math.sqrt(2) + 0j, (1 if which == 0 else -1) / math.sqrt(2) + 0j)
    return outer2(v, v)


def projector_y(which):
    v = (1 / math.sqrt(2) + 0j, (1j if which == 0 else -1j) / math.sqrt(2))
    return outer2(v, v)


def kd_entry(rho, m_first, m_second):
    """Tr{M^b M^a rho} by literal dense products."""
    return trace2(matmul2(m_second, matmul2(m_first, rho)))


def corner_bound_asymmetry_qubit(rho, basis_vecs):
    """max over sign vectors of ||[A, rho]||_1 / 2 with A = sum s_j |v_j><v_j|."""
    best = 0.0
    for s0, s1 in ((1, 1), (1, -1)):
        a_op = add2(scale2(outer2(basis_vecs[0], basis_vecs[0]), s0),
                    scale2(outer2(basis_vecs[1], basis_vecs[1]), s1))
        best = max(best, 0.5 * trace_norm_2x2(commutator2(a_op, rho)))
    return best


def corner_relation_bound_qubit(rho, basis_a, basis_b):
    """max over sign pairs of |Tr{[A, B] rho}| with A, B diagonal in each basis."""
    best = 0.0
    for sa in ((1, 1), (1, -1)):
        a_op = add2(scale2(outer2(basis_a[0], basis_a[0]), sa[0]),
                    scale2(outer2(basis_a[1], basis_a[1]), sa[1]))
        for sb in ((1, 1), (1, -1)):
            b_op = add2(scale2(outer2(basis_b[0], basis_b[0]), sb[0]),
                        scale2(outer2(basis_b[1], basis_b[1]), sb[1]))
            best = max(best, abs(trace2(matmul2(commutator2(a_op, b_op), rho))))
    return best


def weak_value(rho, effect, postselect):
    """<b|M rho|b> / <b|rho|b> by literal products."""
    numer = expectation(postselect, matmul2(effect, rho))
    denom = expectation(postselect, rho).real
    return numer / denom
