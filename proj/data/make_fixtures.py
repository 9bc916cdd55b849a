#!/usr/bin/env python3
"""Generate the STO-3G FCIDUMP fixtures and their manifests.

Self-contained restricted Hartree-Fock over contracted Gaussians
(McMurchie-Davidson integrals), followed by an exact determinant-basis
CI in the Sz = 0 sector to record a reference FCI energy per fixture.

Usage: python3 make_fixtures.py [out_dir]
"""

import itertools
import math
import sys

import numpy as np
from scipy.special import hyp1f1

ANGSTROM_TO_BOHR = 1.0 / 0.529177210903

VERSION = "make_fixtures 1.0"

# ---------------------------------------------------------------------------
# STO-3G basis data (Basis Set Exchange).  Shells: (l, exponents, coefficients)

STO3G = {
    "H": [
        (0, [3.42525091, 0.62391373, 0.16885540],
            [0.15432897, 0.53532814, 0.44463454]),
    ],
    "Li": [
        (0, [16.1195750, 2.9362007, 0.7946505],
            [0.15432897, 0.53532814, 0.44463454]),
        (0, [0.6362897, 0.1478601, 0.0480887],
            [-0.09996723, 0.39951283, 0.70011547]),
        (1, [0.6362897, 0.1478601, 0.0480887],
            [0.15591627, 0.60768372, 0.39195739]),
    ],
    "Be": [
        (0, [30.1678710, 5.4951153, 1.4871927],
            [0.15432897, 0.53532814, 0.44463454]),
        (0, [1.3148331, 0.3055389, 0.0993707],
            [-0.09996723, 0.39951283, 0.70011547]),
        (1, [1.3148331, 0.3055389, 0.0993707],
            [0.15591627, 0.60768372, 0.39195739]),
    ],
}

CHARGES = {"H": 1, "Li": 3, "Be": 4}

CARTESIAN = {0: [(0, 0, 0)], 1: [(1, 0, 0), (0, 1, 0), (0, 0, 1)]}


def double_factorial(n):
    return 1 if n <= 0 else n * double_factorial(n - 2)


def primitive_norm(alpha, lmn):
    i, j, k = lmn
    num = (2.0 * alpha / math.pi) ** 0.75 * (4.0 * alpha) ** ((i + j + k) / 2.0)
    den = math.sqrt(double_factorial(2 * i - 1)
                    * double_factorial(2 * j - 1)
                    * double_factorial(2 * k - 1))
    return num / den


class BasisFunction:
    def __init__(self, center, lmn, exponents, coefficients):
        self.center = np.asarray(center, dtype=float)
        self.lmn = lmn
        self.exps = np.asarray(exponents, dtype=float)
        self.coefs = np.asarray(coefficients, dtype=float) * np.array(
            [primitive_norm(a, lmn) for a in exponents])
        # Rescale so the contracted function has unit self-overlap.
        s = overlap(self, self)
        self.coefs /= math.sqrt(s)


def build_basis(atoms):
    basis = []
    for symbol, center in atoms:
        for l, exps, coefs in STO3G[symbol]:
            for lmn in CARTESIAN[l]:
                basis.append(BasisFunction(center, lmn, exps, coefs))
    return basis


# ---------------------------------------------------------------------------
# McMurchie-Davidson integrals.

def hermite_coefs(i, j, QX, a, b):
    """E_t coefficients for one Cartesian direction, t = 0..i+j."""
    p = a + b
    q = a * b / p
    E = {(0, 0, 0): math.exp(-q * QX * QX)}

    def get(n, m, t):
        if t < 0 or t > n + m or n < 0 or m < 0:
            return 0.0
        if (n, m, t) in E:
            return E[(n, m, t)]
        if n > 0:
            val = (get(n - 1, m, t - 1) / (2 * p)
                   - (q * QX / a) * get(n - 1, m, t)
                   + (t + 1) * get(n - 1, m, t + 1))
        else:
            val = (get(n, m - 1, t - 1) / (2 * p)
                   + (q * QX / b) * get(n, m - 1, t)
                   + (t + 1) * get(n, m - 1, t + 1))
        E[(n, m, t)] = val
        return val

    return [get(i, j, t) for t in range(i + j + 1)]


def overlap_1d(i, j, QX, a, b):
    return hermite_coefs(i, j, QX, a, b)[0] * math.sqrt(math.pi / (a + b))


def primitive_overlap(a, lmn1, A, b, lmn2, B):
    s = 1.0
    for d in range(3):
        s *= overlap_1d(lmn1[d], lmn2[d], A[d] - B[d], a, b)
    return s


def overlap(bf1, bf2):
    s = 0.0
    for a, ca in zip(bf1.exps, bf1.coefs):
        for b, cb in zip(bf2.exps, bf2.coefs):
            s += ca * cb * primitive_overlap(a, bf1.lmn, bf1.center,
                                             b, bf2.lmn, bf2.center)
    return s


def primitive_kinetic(a, lmn1, A, b, lmn2, B):
    def S(l1, l2):
        lm1 = list(lmn1); lm2 = list(lmn2)
        lm1[S.dim] = l1; lm2[S.dim] = l2
        if min(lm1) < 0 or min(lm2) < 0:
            return 0.0
        return primitive_overlap(a, tuple(lm1), A, b, tuple(lm2), B)

    total = 0.0
    for d in range(3):
        S.dim = d
        j = lmn2[d]
        term = (-2.0 * b * b * S(lmn1[d], j + 2)
                + b * (2 * j + 1) * S(lmn1[d], j)
                - 0.5 * j * (j - 1) * S(lmn1[d], j - 2))
        total += term
    return total


def kinetic(bf1, bf2):
    t = 0.0
    for a, ca in zip(bf1.exps, bf1.coefs):
        for b, cb in zip(bf2.exps, bf2.coefs):
            t += ca * cb * primitive_kinetic(a, bf1.lmn, bf1.center,
                                             b, bf2.lmn, bf2.center)
    return t


def boys(n, x):
    return hyp1f1(n + 0.5, n + 1.5, -x) / (2.0 * n + 1.0)


def hermite_coulomb(t, u, v, n, p, PC):
    if t == u == v == 0:
        return (-2.0 * p) ** n * boys(n, p * float(np.dot(PC, PC)))
    if t > 0:
        val = 0.0
        if t > 1:
            val += (t - 1) * hermite_coulomb(t - 2, u, v, n + 1, p, PC)
        val += PC[0] * hermite_coulomb(t - 1, u, v, n + 1, p, PC)
        return val
    if u > 0:
        val = 0.0
        if u > 1:
            val += (u - 1) * hermite_coulomb(t, u - 2, v, n + 1, p, PC)
        val += PC[1] * hermite_coulomb(t, u - 1, v, n + 1, p, PC)
        return val
    val = 0.0
    if v > 1:
        val += (v - 1) * hermite_coulomb(t, u, v - 2, n + 1, p, PC)
    val += PC[2] * hermite_coulomb(t, u, v - 1, n + 1, p, PC)
    return val


def primitive_nuclear(a, lmn1, A, b, lmn2, B, C):
    p = a + b
    P = (a * A + b * B) / p
    Ex = hermite_coefs(lmn1[0], lmn2[0], A[0] - B[0], a, b)
    Ey = hermite_coefs(lmn1[1], lmn2[1], A[1] - B[1], a, b)
    Ez = hermite_coefs(lmn1[2], lmn2[2], A[2] - B[2], a, b)
    val = 0.0
    for t in range(len(Ex)):
        for u in range(len(Ey)):
            for v in range(len(Ez)):
                val += (Ex[t] * Ey[u] * Ez[v]
                        * hermite_coulomb(t, u, v, 0, p, P - C))
    return 2.0 * math.pi / p * val


def nuclear(bf1, bf2, atoms):
    v = 0.0
    for a, ca in zip(bf1.exps, bf1.coefs):
        for b, cb in zip(bf2.exps, bf2.coefs):
            for symbol, center in atoms:
                v -= CHARGES[symbol] * ca * cb * primitive_nuclear(
                    a, bf1.lmn, bf1.center, b, bf2.lmn, bf2.center,
                    np.asarray(center))
    return v


def primitive_eri(a, lmn1, A, b, lmn2, B, c, lmn3, C, d, lmn4, D):
    p = a + b
    q = c + d
    omega = p * q / (p + q)
    P = (a * A + b * B) / p
    Q = (c * C + d * D) / q
    E1 = [hermite_coefs(lmn1[i], lmn2[i], A[i] - B[i], a, b) for i in range(3)]
    E2 = [hermite_coefs(lmn3[i], lmn4[i], C[i] - D[i], c, d) for i in range(3)]
    val = 0.0
    for t in range(len(E1[0])):
        for u in range(len(E1[1])):
            for v in range(len(E1[2])):
                e1 = E1[0][t] * E1[1][u] * E1[2][v]
                if e1 == 0.0:
                    continue
                for tt in range(len(E2[0])):
                    for uu in range(len(E2[1])):
                        for vv in range(len(E2[2])):
                            e2 = E2[0][tt] * E2[1][uu] * E2[2][vv]
                            if e2 == 0.0:
                                continue
                            sign = (-1.0) ** (tt + uu + vv)
                            val += e1 * e2 * sign * hermite_coulomb(
                                t + tt, u + uu, v + vv, 0, omega, P - Q)
    return val * 2.0 * math.pi ** 2.5 / (p * q * math.sqrt(p + q))


def eri(bf1, bf2, bf3, bf4):
    val = 0.0
    for a, ca in zip(bf1.exps, bf1.coefs):
        for b, cb in zip(bf2.exps, bf2.coefs):
            for c, cc in zip(bf3.exps, bf3.coefs):
                for d, cd in zip(bf4.exps, bf4.coefs):
                    val += ca * cb * cc * cd * primitive_eri(
                        a, bf1.lmn, bf1.center, b, bf2.lmn, bf2.center,
                        c, bf3.lmn, bf3.center, d, bf4.lmn, bf4.center)
    return val


def all_integrals(atoms):
    basis = build_basis(atoms)
    n = len(basis)
    S = np.zeros((n, n))
    T = np.zeros((n, n))
    V = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1):
            S[i, j] = S[j, i] = overlap(basis[i], basis[j])
            T[i, j] = T[j, i] = kinetic(basis[i], basis[j])
            V[i, j] = V[j, i] = nuclear(basis[i], basis[j], atoms)
    g = np.zeros((n, n, n, n))
    done = np.zeros((n, n, n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1):
            for k in range(n):
                for l in range(k + 1):
                    if done[i, j, k, l]:
                        continue
                    val = eri(basis[i], basis[j], basis[k], basis[l])
                    for (p, q) in ((i, j), (j, i)):
                        for (r, s) in ((k, l), (l, k)):
                            g[p, q, r, s] = val
                            g[r, s, p, q] = val
                            done[p, q, r, s] = done[r, s, p, q] = True
    e_nuc = 0.0
    for (s1, c1), (s2, c2) in itertools.combinations(atoms, 2):
        r = np.linalg.norm(np.asarray(c1) - np.asarray(c2))
        e_nuc += CHARGES[s1] * CHARGES[s2] / r
    return S, T + V, g, e_nuc


# ---------------------------------------------------------------------------
# Restricted Hartree-Fock with DIIS.

def rhf(S, hcore, g, e_nuc, n_electrons, max_iter=400, tol=1e-12):
    n = S.shape[0]
    nocc = n_electrons // 2
    s_eval, s_evec = np.linalg.eigh(S)
    X = s_evec @ np.diag(s_eval ** -0.5) @ s_evec.T

    def fock(D):
        J = np.einsum("pqrs,rs->pq", g, D)
        K = np.einsum("prqs,rs->pq", g, D)
        return hcore + J - 0.5 * K

    def density(F):
        mo_e, Cp = np.linalg.eigh(X.T @ F @ X)
        C = X @ Cp
        return 2.0 * C[:, :nocc] @ C[:, :nocc].T, C, mo_e

    D, C, mo_e = density(hcore)
    energy = 0.0
    errs, focks = [], []
    for it in range(max_iter):
        F = fock(D)
        err = X.T @ (F @ D @ S - S @ D @ F) @ X
        if it >= 2:
            errs.append(err)
            focks.append(F.copy())
            if len(errs) > 8:
                errs.pop(0)
                focks.pop(0)
        if len(errs) > 1:
            m = len(errs)
            B = -np.ones((m + 1, m + 1))
            B[m, m] = 0.0
            for i in range(m):
                for j in range(m):
                    B[i, j] = np.einsum("pq,pq->", errs[i], errs[j])
            rhs = np.zeros(m + 1)
            rhs[m] = -1.0
            w, _, _, _ = np.linalg.lstsq(B, rhs, rcond=None)
            F = sum(wi * Fi for wi, Fi in zip(w[:m], focks))
        D_new, C, mo_e = density(F)
        e_new = 0.5 * np.einsum("pq,pq->", D_new, hcore + fock(D_new)) + e_nuc
        if abs(e_new - energy) < tol and np.max(np.abs(D_new - D)) < 1e-9:
            return e_new, C, mo_e
        D, energy = D_new, e_new
    raise RuntimeError("SCF failed to converge")


def mo_transform(hcore, g, C):
    h_mo = C.T @ hcore @ C
    g_mo = np.einsum("pi,qj,pqrs,rk,sl->ijkl", C, C, g, C, C, optimize=True)
    return h_mo, g_mo


# ---------------------------------------------------------------------------
# Determinant CI in the Sz = 0 sector (reference FCI energies).

def spin_orbital_tables(h_mo, g_mo):
    n = h_mo.shape[0]
    nso = 2 * n
    h1 = np.zeros((nso, nso))
    for p in range(n):
        for q in range(n):
            h1[2 * p, 2 * q] = h_mo[p, q]
            h1[2 * p + 1, 2 * q + 1] = h_mo[p, q]

    def phys(i, j, k, l):
        # <ij|kl> = (ik|jl) with spin deltas
        if i % 2 != k % 2 or j % 2 != l % 2:
            return 0.0
        return g_mo[i // 2, k // 2, j // 2, l // 2]

    return h1, phys


def excitation_info(occ1, occ2):
    s1, s2 = set(occ1), set(occ2)
    removed = sorted(s1 - s2)
    added = sorted(s2 - s1)
    if len(removed) > 2:
        return None
    # Parity via bubble sort of the in-place substituted occupation list.
    o1 = list(occ1)
    for r, a in zip(removed, added):
        o1[o1.index(r)] = a
    swaps = 0
    o = list(o1)
    for i in range(len(o)):
        for j in range(len(o) - 1 - i):
            if o[j] > o[j + 1]:
                o[j], o[j + 1] = o[j + 1], o[j]
                swaps += 1
    sign = -1.0 if swaps % 2 else 1.0
    return removed, added, sign


def ci_ground_energy(h_mo, g_mo, e_nuc, n_electrons):
    n = h_mo.shape[0]
    nocc = n_electrons // 2
    h1, phys = spin_orbital_tables(h_mo, g_mo)
    alpha_dets = list(itertools.combinations(range(n), nocc))
    dets = []
    for occ_a in alpha_dets:
        for occ_b in alpha_dets:
            occ = sorted([2 * p for p in occ_a] + [2 * p + 1 for p in occ_b])
            dets.append(tuple(occ))
    dim = len(dets)
    H = np.zeros((dim, dim))
    for a in range(dim):
        for b in range(a + 1):
            info = excitation_info(dets[a], dets[b])
            if info is None:
                continue
            removed, added, sign = info
            if len(removed) == 0:
                val = sum(h1[p, p] for p in dets[a])
                for p, q in itertools.combinations(dets[a], 2):
                    val += phys(p, q, p, q) - phys(p, q, q, p)
            elif len(removed) == 1:
                m, p = removed[0], added[0]
                val = h1[m, p]
                for q in dets[a]:
                    if q != m:
                        val += phys(m, q, p, q) - phys(m, q, q, p)
                val *= sign
            else:
                (m, nn), (p, q) = removed, added
                val = sign * (phys(m, nn, p, q) - phys(m, nn, q, p))
            H[a, b] = H[b, a] = val
    evals = np.linalg.eigvalsh(H)
    return evals[0] + e_nuc


# ---------------------------------------------------------------------------
# FCIDUMP output.

def write_fcidump(path, h_mo, g_mo, e_nuc, n_electrons, ms2=0):
    n = h_mo.shape[0]
    with open(path, "w") as f:
        f.write(f"&FCI NORB={n},NELEC={n_electrons},MS2={ms2},\n")
        f.write("  ORBSYM=" + "1," * n + "\n")
        f.write("  ISYM=1,\n")
        f.write("&END\n")
        written = set()
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        key = (i, j, k, l)
                        if key in written or abs(g_mo[i, j, k, l]) < 1e-12:
                            continue
                        for perm in ((i, j, k, l), (j, i, k, l), (i, j, l, k),
                                     (j, i, l, k), (k, l, i, j), (l, k, i, j),
                                     (k, l, j, i), (l, k, j, i)):
                            written.add(perm)
                        f.write(f"{g_mo[i, j, k, l]: 23.16E} {i + 1:3d} "
                                f"{j + 1:3d} {k + 1:3d} {l + 1:3d}\n")
        for i in range(n):
            for j in range(i + 1):
                if abs(h_mo[i, j]) > 1e-12:
                    f.write(f"{h_mo[i, j]: 23.16E} {i + 1:3d} {j + 1:3d}"
                            f"   0   0\n")
        f.write(f"{e_nuc: 23.16E}   0   0   0   0\n")


def make_fixture(out_dir, name, atoms, bond_length, n_electrons, do_fci=True):
    S, hcore, g, e_nuc = all_integrals(atoms)
    e_scf, C, _ = rhf(S, hcore, g, e_nuc, n_electrons)
    h_mo, g_mo = mo_transform(hcore, g, C)
    write_fcidump(f"{out_dir}/{name}.fcidump", h_mo, g_mo, e_nuc, n_electrons)
    e_fci = ci_ground_energy(h_mo, g_mo, e_nuc, n_electrons) if do_fci else None
    geometry = "; ".join(f"{s} {c[0]:.6f} {c[1]:.6f} {c[2]:.6f}"
                         for s, c in atoms)
    with open(f"{out_dir}/{name}.manifest", "w") as f:
        f.write(f"name = {name}\n")
        f.write(f"bond_length_angstrom = {bond_length}\n")
        f.write(f"basis = STO-3G\n")
        f.write(f"geometry_bohr = {geometry}\n")
        f.write(f"scf_energy = {e_scf:.12f}\n")
        if e_fci is not None:
            f.write(f"fci_energy = {e_fci:.12f}\n")
        f.write(f"source = {VERSION}\n")
    print(f"{name}: SCF = {e_scf:.10f}"
          + (f", FCI = {e_fci:.10f}" if e_fci is not None else ""))
    return e_scf, e_fci


def h2_atoms(r_angstrom):
    r = r_angstrom * ANGSTROM_TO_BOHR
    return [("H", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, r))]


def lih_atoms(r_angstrom):
    r = r_angstrom * ANGSTROM_TO_BOHR
    return [("Li", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, r))]


def beh2_atoms(r_angstrom):
    r = r_angstrom * ANGSTROM_TO_BOHR
    return [("Be", (0.0, 0.0, 0.0)), ("H", (0.0, 0.0, r)),
            ("H", (0.0, 0.0, -r))]


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "."
    for r in ("0.5", "0.735", "1.0", "1.5", "2.0", "2.5"):
        make_fixture(out_dir, f"h2_{r}", h2_atoms(float(r)), r, 2)
    for r in ("1.0", "1.546", "2.0", "2.5", "3.0"):
        make_fixture(out_dir, f"lih_{r}", lih_atoms(float(r)), r, 4)
    for r in ("1.316", "3.0"):
        make_fixture(out_dir, f"beh2_{r}", beh2_atoms(float(r)), r, 6)


if __name__ == "__main__":
    main()
