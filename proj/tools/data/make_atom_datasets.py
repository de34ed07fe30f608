#!/usr/bin/env python3
"""Regenerates the bundled atom datasets under data/atoms/.

Hydrogen discrete oscillator strengths are computed exactly from the
nonrelativistic radial integrals. Helium discrete lines are literature
values (NIST ASD energies, Drake/Theodosiou oscillator strengths).

The continuum (plus the truncated Rydberg tail) is replaced by a handful of
pseudo-lines on a geometric energy grid above the ionization threshold with
strengths f_k = A * E_k**-p. A and p are solved so that the full line list
reproduces the Thomas-Reiche-Kuhn sum (N) and the reference static
polarizability exactly.
"""
import math
import pathlib
import sys

import sympy as sp
from sympy.physics.hydrogen import R_nl

CM_PER_HARTREE = 219474.6313632
AMU_IN_ME = 1822.888486209

OUT = pathlib.Path(__file__).resolve().parents[2] / "data" / "atoms"


def hydrogen_s_to_p(n0, n_max):
    r = sp.symbols("r", positive=True)
    lines = []
    for n in range(n0 + 1, n_max + 1):
        radial = sp.integrate(R_nl(n0, 0, r, 1) * R_nl(n, 1, r, 1) * r**3, (r, 0, sp.oo))
        de = sp.Rational(1, 2) * (sp.Rational(1, n0 * n0) - sp.Rational(1, n * n))
        f = sp.Rational(2, 3) * de * radial**2
        lines.append((float(de), float(f)))
    return lines


def fit_pseudo(discrete, n_electrons, alpha_ref, threshold, count=6, span=40.0):
    s_target = n_electrons - sum(f for _, f in discrete)
    a_target = alpha_ref - sum(f / de**2 for de, f in discrete)
    if s_target <= 0 or a_target <= 0:
        sys.exit("continuum targets must be positive")
    grid = [threshold * 1.02 * span ** (k / (count - 1)) for k in range(count)]

    def alpha_of(p):
        w = [e**-p for e in grid]
        scale = s_target / sum(w)
        return sum(scale * wk / e**2 for wk, e in zip(w, grid)), scale

    lo, hi = -20.0, 40.0
    if not (alpha_of(lo)[0] < a_target < alpha_of(hi)[0]):
        sys.exit("pseudo-line grid cannot reach the polarizability target")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if alpha_of(mid)[0] < a_target:
            lo = mid
        else:
            hi = mid
    p = 0.5 * (lo + hi)
    _, scale = alpha_of(p)
    return [(e, scale * e**-p) for e in grid], p


def write(name, element, state, mass_amu, n_el, alpha_ref, discrete, pseudo, p, note):
    path = OUT / f"{name}.toml"
    with path.open("w") as out:
        out.write(f"# {element}({state}) dipole transition table, energies in hartree.\n")
        for line in note:
            out.write(f"# {line}\n")
        out.write(f"# Pseudo-lines: continuum surrogate, f_k ~ E_k**(-p), p = {p:.6f}, fitted to TRK = {n_el} and alpha(0).\n")
        out.write("# Generated by tools/data/make_atom_datasets.py\n\n")
        out.write("[meta]\n")
        out.write(f'name = "{element}"\n')
        out.write(f'state = "{state}"\n')
        out.write(f"mass_amu = {mass_amu}\n")
        out.write(f"n_electrons = {n_el}\n")
        out.write('units = "atomic"\n')
        out.write(f"alpha0_reference = {alpha_ref}\n")
        for kind, rows in (("discrete", discrete), ("pseudo", pseudo)):
            for de, f in rows:
                out.write(f'\n[[line]]\ndelta_e = {de:.12e}\nf = {f:.12e}\nkind = "{kind}"\n')
    tot = sum(f for _, f in discrete + pseudo)
    a0 = sum(f / de**2 for de, f in discrete + pseudo)
    print(f"{name}: TRK={tot:.9f} alpha0={a0:.9f} p={p:.4f}")


def from_cm(levels, ref):
    return [((e - ref) / CM_PER_HARTREE, f) for e, f in levels]


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    h1s = hydrogen_s_to_p(1, 21)
    pseudo, p = fit_pseudo(h1s, 1, 4.5, 0.5)
    write("h_1s", "H", "1s", 1.00782503223, 1, 4.5, h1s, pseudo, p,
          ["Discrete 1s-np lines n = 2..21 from exact radial integrals.",
           "Reference alpha(0) = 9/2 (Dalgarno-Lewis)."])

    h2s = hydrogen_s_to_p(2, 22)
    pseudo, p = fit_pseudo(h2s, 1, 120.0, 0.125)
    write("h_2s", "H", "2s", 1.00782503223, 1, 120.0, h2s, pseudo, p,
          ["Discrete 2s-np lines n = 3..22 from exact radial integrals.",
           "The degenerate 2s-2p pair carries f = 0 and is omitted.",
           "Reference alpha(0) = 120 (Dalgarno-Lewis, n = 2 manifold excluded)."])

    he_ip = 198310.66637
    he_singlet = [
        (171134.8970, 0.276164), (186209.3651, 0.073432), (191492.7120, 0.029861),
        (193942.4637, 0.015039), (195274.9108, 0.008635), (196079.0876, 0.005407),
        (196601.3966, 0.003612), (196959.5947, 0.002534), (197215.7058, 0.001846),
    ]
    disc = from_cm(he_singlet, 0.0)
    pseudo, p = fit_pseudo(disc, 2, 1.383191, he_ip / CM_PER_HARTREE)
    write("he_1s1", "He", "1s2 1S", 4.00260325413, 2, 1.383191, disc, pseudo, p,
          ["Discrete 1s2 -> 1snp 1P lines n = 2..10.",
           "Reference alpha(0) = 1.383191 (variational, nonrelativistic)."])

    he_2s3 = 159855.9743
    he_triplet = [
        (169087.0, 0.539086), (185564.6, 0.064461), (191217.1, 0.025769),
        (193800.7, 0.012884), (195193.7, 0.007337), (196031.3, 0.004592),
        (196574.5, 0.003063), (196947.2, 0.002144), (197213.0, 0.001559),
    ]
    disc = from_cm(he_triplet, he_2s3)
    pseudo, p = fit_pseudo(disc, 2, 315.631, (he_ip - he_2s3) / CM_PER_HARTREE)
    write("he_2s3", "He", "1s2s 3S", 4.00260325413, 2, 315.631, disc, pseudo, p,
          ["Discrete 1s2s 3S -> 1snp 3P lines n = 2..10 (fine-structure centroids).",
           "No dipole-allowed downward transitions exist from this state.",
           "Reference alpha(0) = 315.631 (variational, nonrelativistic)."])


if __name__ == "__main__":
    main()
