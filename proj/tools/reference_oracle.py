#!/usr/bin/env python3
"""Independent reference values for the test suite.

Two qubits are modelled in the product basis |q1 q2> with a Lindblad master
equation (collective decay matrix Gamma cos(k0 d), exchange (Gamma/2) sin(k0 d)).
Nothing here shares code or basis conventions with the C++ library: rates come
from Tr[J^dag J rho(t)], spectra from the quantum regression theorem with
block-matrix exponentials and linear solves.

Usage: reference_oracle.py > tests/reference_values.inc
"""

import math
import sys

import numpy as np
from scipy.linalg import expm

GAMMA = 0.05
OMEGA = 1.0

SM = np.array([[0, 1], [0, 0]], complex)  # |g><e|, g = 0, e = 1
S1 = np.kron(SM, np.eye(2))
S2 = np.kron(np.eye(2), SM)


def ket(q1, q2):
    v = np.zeros(4, complex)
    v[2 * q1 + q2] = 1.0
    return v


G = ket(0, 0)
E = ket(1, 1)
EG = ket(1, 0)  # first qubit excited
GE = ket(0, 1)
S = (GE + EG) / math.sqrt(2)
A = (GE - EG) / math.sqrt(2)


def dm(v):
    return np.outer(v, v.conj())


PLUS = np.array([1, 1], complex) / math.sqrt(2)  # (g + e)/sqrt(2)
G1 = np.array([1, 0], complex)
E1 = np.array([0, 1], complex)

PRESETS = {
    "E": dm(E),
    "S": dm(S),
    "A": dm(A),
    "eg": dm(EG),
    "ge": dm(GE),
    "s1g2": dm(np.kron(PLUS, G1)),
    "s1e2": dm(np.kron(PLUS, E1)),
    "s1s2": dm(np.kron(PLUS, PLUS)),
    "G": dm(G),
}


def sup(a, b):
    # row-major vec: vec(a X b) = kron(a, b^T) vec(X)
    return np.kron(a, b.T)


def liouvillian(kd):
    j = GAMMA / 2 * math.sin(kd)
    g12 = GAMMA * math.cos(kd)
    h = OMEGA * (S1.conj().T @ S1 + S2.conj().T @ S2) + j * (S1.conj().T @ S2 + S2.conj().T @ S1)
    ops = [S1, S2]
    gm = np.array([[GAMMA, g12], [g12, GAMMA]])
    i4 = np.eye(4)
    L = -1j * (sup(h, i4) - sup(i4, h))
    for n in range(2):
        for m in range(2):
            spn = ops[n].conj().T
            smm = ops[m]
            L += gm[n, m] * (sup(smm, spn) - 0.5 * sup(spn @ smm, i4) - 0.5 * sup(i4, spn @ smm))
    return L


def jminus(kd, sgn):
    return S1 + np.exp(-1j * sgn * kd) * S2


def evolve(rho0, kd, t):
    return (expm(liouvillian(kd) * t) @ rho0.reshape(-1)).reshape(4, 4)


def rate(rho0, kd, sgn, t):
    J = jminus(kd, sgn)
    return (GAMMA / 2 * np.trace(J.conj().T @ J @ evolve(rho0, kd, t))).real


def spectral_density(rho0, kd, sgn, w):
    L = liouvillian(kd)
    T = 600.0 / GAMMA
    B = np.zeros((32, 32), complex)
    B[:16, :16] = L
    B[:16, 16:] = np.eye(16)
    v = np.concatenate([np.zeros(16), rho0.reshape(-1)])
    int_rho = (expm(B * T) @ v)[:16].reshape(4, 4)
    J = jminus(kd, sgn)
    x = (J @ int_rho).reshape(-1)
    y = np.linalg.lstsq(1j * w * np.eye(16) - L, x, rcond=1e-13)[0]
    return 2 * GAMMA * OMEGA * np.trace(J.conj().T @ y.reshape(4, 4)).real


def photon_number(rho0, kd, sgn, w, t):
    # (1,3) block of exp(M t), M = [[L - i w, 1, 0], [0, 0, J.], [0, 0, L]], is the
    # ordered double integral over lag and emission time.
    L = liouvillian(kd)
    J = jminus(kd, sgn)
    Jl = sup(J, np.eye(4))
    M = np.zeros((48, 48), complex)
    M[:16, :16] = L - 1j * w * np.eye(16)
    M[:16, 16:32] = np.eye(16)
    M[16:32, 32:] = Jl
    M[32:, 32:] = L
    blk = expm(M * t)[:16, 32:]
    x = (blk @ rho0.reshape(-1)).reshape(4, 4)
    return 2 * GAMMA * OMEGA * np.trace(J.conj().T @ x).real


DICKE = {"G": G, "E": E, "S": S, "A": A}


def probability(frm, to, kd, t):
    r = evolve(dm(DICKE[frm]), kd, t)
    v = DICKE[to]
    return (v.conj() @ r @ v).real


def main():
    pi = math.pi
    k0ds = [("pi/4", pi / 4), ("pi/2", pi / 2), ("2.2", 2.2), ("2pi", 2 * pi), ("pi", pi)]
    out = sys.stdout
    out.write("// Generated by tools/reference_oracle.py (Gamma/Omega = 0.05). Do not edit.\n")
    out.write("// {initial, k0d, sign (+1 forward, -1 backward), x, value}\n\n")

    out.write("inline const RefPoint kRefSpectra[] = {\n")
    for name, rho in PRESETS.items():
        for _, kd in k0ds:
            for sgn in (1, -1):
                for dw in (-3.0, -0.7, 0.0, 1.3):
                    w = OMEGA + dw * GAMMA
                    out.write(f'    {{"{name}", {kd!r}, {sgn}, {w!r}, {float(spectral_density(rho, kd, sgn, w))!r}}},\n')
    out.write("};\n\n")

    out.write("// x is Gamma t; value is W (units of Omega)\n")
    out.write("inline const RefPoint kRefRates[] = {\n")
    for name, rho in PRESETS.items():
        for _, kd in k0ds:
            for sgn in (1, -1):
                for gt in (0.0, 0.5, 2.0, 7.0):
                    out.write(f'    {{"{name}", {kd!r}, {sgn}, {gt!r}, {float(rate(rho, kd, sgn, gt / GAMMA))!r}}},\n')
    out.write("};\n\n")

    out.write("// {initial, k0d, sign, omega, Gamma t, value}\n")
    out.write("inline const RefFinitePoint kRefPhotonNumber[] = {\n")
    for name in ("S", "A", "eg", "E", "s1e2", "s1s2"):
        for kd in (pi / 2, 2.2, 2 * pi):
            for sgn in (1, -1):
                for w, gt in ((1.0, 0.5), (1.03, 1.5), (0.97, 3.0)):
                    v = photon_number(PRESETS[name], kd, sgn, w, gt / GAMMA)
                    out.write(f'    {{"{name}", {kd!r}, {sgn}, {w!r}, {gt!r}, {float(v)!r}}},\n')
    out.write("};\n\n")

    out.write("// {from, to, k0d, Gamma t, value}\n")
    out.write("inline const RefProbability kRefProbabilities[] = {\n")
    for frm in ("G", "E", "S", "A"):
        for to in ("G", "E", "S", "A"):
            for kd in (pi / 4, 2.2, 2 * pi, pi):
                for gt in (0.5, 3.0):
                    v = probability(frm, to, kd, gt / GAMMA)
                    out.write(f'    {{"{frm}", "{to}", {kd!r}, {gt!r}, {float(v)!r}}},\n')
    out.write("};\n")


if __name__ == "__main__":
    main()
