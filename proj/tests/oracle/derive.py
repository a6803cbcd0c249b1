#!/usr/bin/env python3
# Copyright 2026 The gge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Reference values for the C++ tests, computed with dense numpy/scipy.

Shares no code with the library: states are built with np.kron, partial
traces by axis transposition, g(n) with scipy.integrate.quad, the chain ground state
with scipy.sparse.linalg.eigsh, and p^xz bounds by a grid scan plus brentq.

    python3 tests/oracle/derive.py > tests/support/oracle_values.hpp
"""

import itertools
import math

import numpy as np
import scipy.integrate
import scipy.linalg
import scipy.optimize
import scipy.sparse
import scipy.sparse.linalg

I2 = np.eye(2)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.diag([1.0, -1.0]).astype(complex)


def ket(bits):
    v = np.zeros(2 ** len(bits), dtype=complex)
    v[int(bits, 2)] = 1.0
    return v


def normalize(v):
    return v / np.linalg.norm(v)


def ghz(n):
    return normalize(ket("0" * n) + ket("1" * n))


def w(n):
    return normalize(sum(ket("0" * j + "1" + "0" * (n - j - 1)) for j in range(n)))


def epr(n):
    phi = normalize(ket("00") + ket("11"))
    out = np.array([1.0 + 0j])
    for _ in range(n // 2):
        out = np.kron(out, phi)
    return out


def g1_state():
    return normalize(ket("0000") + ket("0101") + ket("1010") + ket("1111"))


def reduced(psi, n, keep):
    t = psi.reshape([2] * n)
    rest = [k for k in range(n) if k not in keep]
    t = np.transpose(t, list(keep) + rest).reshape(2 ** len(keep), -1)
    return t @ t.conj().T


def lin_entropy(psi, n, keep):
    rho = reduced(psi, n, keep)
    pur = np.real(np.trace(rho @ rho))
    d = min(2 ** len(keep), 2 ** (n - len(keep)))
    return d / (d - 1) * (1 - pur)


def gap_class(psi, n, gaps):
    last = gaps[-1] if gaps else 0
    vals = [lin_entropy(psi, n, [j] + [j + g for g in gaps]) for j in range(n - last)]
    return sum(vals) / len(vals)


def e_g(psi, n, cls):
    classes = list(itertools.combinations(range(1, n), cls - 1))
    return sum(gap_class(psi, n, list(c)) for c in classes) / len(classes)


def e_g_uniform(psi, n, cls):
    subs = list(itertools.combinations(range(n), cls))
    return sum(lin_entropy(psi, n, list(s)) for s in subs) / len(subs)


# Transverse-field Ising chain, infinite size.

def g_quad(lam, n):
    f = lambda k: (math.cos(k * n) + lam * math.cos(k * (n + 1))) / math.sqrt(1 + lam * lam + 2 * lam * math.cos(k))
    if lam == 1.0:
        f = lambda k: math.cos(k * (n + 0.5))
    val, _ = scipy.integrate.quad(f, 0, math.pi, epsabs=1e-13, epsrel=1e-13, limit=400)
    return val / math.pi


def toeplitz_det(lam, n, shift):
    m = np.array([[g_quad(lam, r - c + shift) for c in range(n)] for r in range(n)])
    return scipy.linalg.det(m)


def correlators(lam, n):
    pz = g_quad(lam, 0)
    px = (1 - lam ** -2) ** 0.125 if lam > 1 else 0.0
    pxx = toeplitz_det(lam, n, -1)
    pyy = toeplitz_det(lam, n, 1)
    pzz = pz * pz - g_quad(lam, n) * g_quad(lam, -n)
    return px, pz, pxx, pyy, pzz


def pair_rho(px, pz, pxx, pyy, pzz, p):
    r = np.kron(I2, I2) + px * (np.kron(X, I2) + np.kron(I2, X)) + pz * (np.kron(Z, I2) + np.kron(I2, Z))
    r = r + pxx * np.kron(X, X) + pyy * np.kron(Y, Y) + pzz * np.kron(Z, Z) + p * (np.kron(X, Z) + np.kron(Z, X))
    return r / 4


def pxz_bounds(lam, n):
    c = correlators(lam, n)
    mineig = lambda p: np.linalg.eigvalsh(pair_rho(*c, p))[0]
    grid = np.linspace(-1, 1, 40001)
    vals = np.array([mineig(p) for p in grid])
    ok = np.where(vals >= -1e-10)[0]
    lo_i, hi_i = ok[0], ok[-1]
    f = lambda p: mineig(p) + 1e-10
    lo = scipy.optimize.brentq(f, grid[lo_i - 1], grid[lo_i], xtol=1e-14) if lo_i > 0 else -1.0
    hi = scipy.optimize.brentq(f, grid[hi_i], grid[hi_i + 1], xtol=1e-14) if hi_i < len(grid) - 1 else 1.0
    return lo, hi


def g2_bounds(lam, n):
    px, pz, pxx, pyy, pzz = correlators(lam, n)
    if lam <= 1:
        lo, hi = 0.0, 0.0
    else:
        lo, hi = pxz_bounds(lam, n)
    sq_min = 0.0 if lo <= 0 <= hi else min(lo * lo, hi * hi)
    sq_max = max(lo * lo, hi * hi)
    base = 2 * px * px + 2 * pz * pz + pxx * pxx + pyy * pyy + pzz * pzz
    return 1 - (base + 2 * sq_max) / 3, 1 - (base + 2 * sq_min) / 3


def concurrence_raw(lam, n):
    _, _, pxx, pyy, pzz = correlators(lam, n)
    return 0.5 * (-1 - pyy + pxx + pzz)


# Finite chain H = lam sum x_i x_{i+1} + sum z_i.

def chain_hamiltonian(n, lam, periodic):
    dim = 2 ** n
    rows, cols, vals = [], [], []
    bonds = [(i, i + 1) for i in range(n - 1)] + ([(n - 1, 0)] if periodic else [])
    for s in range(dim):
        diag = sum(1 if not (s >> (n - 1 - k)) & 1 else -1 for k in range(n))
        rows.append(s); cols.append(s); vals.append(diag)
        for a, b in bonds:
            t = s ^ (1 << (n - 1 - a)) ^ (1 << (n - 1 - b))
            rows.append(t); cols.append(s); vals.append(lam)
    return scipy.sparse.csr_matrix((vals, (rows, cols)), shape=(dim, dim))


def parity_ground(h, n, parity):
    idx = [s for s in range(2 ** n) if bin(s).count("1") % 2 == parity]
    sub = h[idx][:, idx]
    e, v = scipy.sparse.linalg.eigsh(sub, k=1, which="SA", tol=1e-14)
    full = np.zeros(2 ** n)
    full[idx] = v[:, 0]
    return e[0], full


def sparse_expect(psi, n, ops):
    out = psi.astype(complex)
    for site, op in ops.items():
        t = out.reshape([2] * n)
        t = np.moveaxis(np.tensordot(op, t, axes=([1], [site])), 0, site)
        out = t.reshape(-1)
    return float(np.real(np.vdot(psi, out)))


def ed_chain(n, lam, periodic):
    h = chain_hamiltonian(n, lam, periodic)
    e0, v0 = parity_ground(h, n, 0)
    e1, v1 = parity_ground(h, n, 1)
    psi = v0 if e0 <= e1 else v1
    pz = np.mean([sparse_expect(psi, n, {k: Z}) for k in range(n)])
    res = {"energy": min(e0, e1), "pz": pz}
    for d in (1, 2):
        res[f"xx{d}"] = sparse_expect(psi, n, {0: X, d: X})
        res[f"yy{d}"] = sparse_expect(psi, n, {0: Y, d: Y})
        res[f"zz{d}"] = sparse_expect(psi, n, {0: Z, d: Z})
    if lam > 1:
        mix = v0 + v1
        if sparse_expect(mix / np.linalg.norm(mix), n, {0: X}) < 0:
            mix = v0 - v1
        mix = mix / np.linalg.norm(mix)
        res["px"] = abs(sparse_expect(mix, n, {0: X}))
        for d in (1, 2):
            res[f"xz{d}"] = abs(sparse_expect(mix, n, {0: X, d: Z}))
    return res


def main():
    out = {}

    # Named states and measures.
    epr2 = epr(4)
    swapped = np.transpose(epr2.reshape([2] * 4), [0, 2, 1, 3]).reshape(-1)
    out["kEpr2Swap23MatchesG1"] = float(np.max(np.abs(swapped - g1_state())) < 1e-15)
    out["kEpr2UniformE2"] = e_g_uniform(epr2, 4, 2)
    out["kG1UniformE2"] = e_g_uniform(g1_state(), 4, 2)
    out["kG1LiteralG21"] = gap_class(g1_state(), 4, [1])
    out["kG1LiteralE2"] = e_g(g1_state(), 4, 2)

    g6 = ghz(6)
    out["kGhz6MaxPurityUpTo3"] = max(
        np.real(np.trace(np.linalg.matrix_power(reduced(g6, 6, list(s)), 2)))
        for k in (1, 2, 3) for s in itertools.combinations(range(6), k))
    r = reduced(w(4), 4, [0])
    out["kW4SitePurity"] = float(np.real(np.trace(r @ r)))

    out["kGhz5SigmaX"] = sparse_expect(ghz(5), 5, {2: X})
    r = reduced(ghz(4), 4, [0, 1])
    out["kGhz4PairPurity"] = float(np.real(np.trace(r @ r)))

    ghz23 = np.kron(ghz(3), ghz(3))
    zhg = np.transpose(ghz23.reshape([2] * 6), [0, 4, 2, 3, 1, 5]).reshape(-1)
    for cls in (1, 2, 3):
        out[f"kGhz23LiteralE{cls}"] = e_g(ghz23, 6, cls)
        out[f"kZhg23LiteralE{cls}"] = e_g(zhg, 6, cls)
        out[f"kGhz23UniformE{cls}"] = e_g_uniform(ghz23, 6, cls)

    for n in (4, 6, 8):
        for name, psi in (("Ghz", ghz(n)), ("Epr", epr(n)), ("W", w(n))):
            out[f"k{name}{n}E1"] = e_g(psi, n, 1)
            out[f"k{name}{n}G21"] = gap_class(psi, n, [1])
            out[f"k{name}{n}E2"] = e_g(psi, n, 2)

    # Infinite chain.
    out["kG1Crit0"] = g_quad(1.0, 0)
    out["kG1Crit1"] = g_quad(1.0, 1)
    out["kGHalf0"] = g_quad(0.5, 0)
    out["kGTwo0"] = g_quad(2.0, 0)
    out["kGTwoMinus3"] = g_quad(2.0, -3)
    out["kMagnetizationX2"] = 0.75 ** 0.125
    out["kCorrXXCrit1"] = toeplitz_det(1.0, 1, -1)
    out["kCorrYYCrit1"] = toeplitz_det(1.0, 1, 1)
    out["kCorrZZCrit1"] = correlators(1.0, 1)[4]
    out["kCorrXXCrit5"] = toeplitz_det(1.0, 5, -1)
    out["kCorrYYCrit5"] = toeplitz_det(1.0, 5, 1)
    out["kCorrXXHalf3"] = toeplitz_det(0.5, 3, -1)
    out["kCorrXXTwo4"] = toeplitz_det(2.0, 4, -1)
    out["kG1IsingCrit"] = 1 - g_quad(1.0, 0) ** 2
    out["kG1IsingTwo"] = 1 - 0.75 ** 0.25 - g_quad(2.0, 0) ** 2
    for n in (1, 7, 15):
        out[f"kG2Crit{n}"] = g2_bounds(1.0, n)[1]
    for n in (1, 2):
        lo, hi = pxz_bounds(1.5, n)
        out[f"kPxzLo15_{n}"] = lo
        out[f"kPxzHi15_{n}"] = hi
        g2lo, g2hi = g2_bounds(1.5, n)
        out[f"kG2Lo15_{n}"] = g2lo
        out[f"kG2Hi15_{n}"] = g2hi
    out["kConcurrenceCrit1"] = concurrence_raw(1.0, 1)
    out["kConcurrenceCrit2"] = concurrence_raw(1.0, 2)
    out["kConcurrenceCrit3Raw"] = concurrence_raw(1.0, 3)
    out["kConcurrenceHalf3Raw"] = concurrence_raw(0.5, 3)
    out["kConcurrence15_3Raw"] = concurrence_raw(1.5, 3)

    # Finite chain.
    for lam in (0.0, 0.7, 3.0):
        h = chain_hamiltonian(2, lam, False).toarray()
        out[f"kEdTwoSiteEnergy{int(lam * 10)}"] = float(np.linalg.eigvalsh(h)[0])
    for lam, tag in ((0.5, "Half"), (1.0, "Crit"), (1.5, "OneHalf"), (2.0, "Two")):
        res = ed_chain(12, lam, True)
        for key, val in res.items():
            out[f"kEd12{tag}_{key}"] = val
    res = ed_chain(8, 0.8, False)
    out["kEd8Open08_energy"] = res["energy"]
    out["kEd8Open08_zz1"] = res["zz1"]

    with open(__file__) as f:
        header = [line for line in f.read().splitlines()[1:14]]
    print("\n".join("//" + line[1:] for line in header))
    print()
    print("// Generated by tests/oracle/derive.py. Do not edit by hand.")
    print("#pragma once\n")
    print("namespace gge::oracle {\n")
    for key, val in out.items():
        print(f"inline constexpr double {key} = {float(val)!r};")
    print("\n}  // namespace gge::oracle")


if __name__ == "__main__":
    main()
