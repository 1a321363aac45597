#!/usr/bin/env python3
"""Regenerates coeff_fixtures.inc.

Evaluates the 28 solution coefficients at 50-digit precision through
two independent routes (an entire-function form that is stable on the
degenerate detuning lines, and the literal closed forms with direct
division, used away from those lines) and freezes the values for the
C++ unit tests.
"""

import mpmath as mp

mp.mp.dps = 50

I = mp.mpc(0, 1)


def S(z):
    """(e^z - 1)/z, entire."""
    if abs(z) < mp.mpf("1e-40"):
        return mp.mpf(1) + z / 2 + z * z / 6
    return mp.expm1(z) / z


def S2(z):
    """(e^z - 1 - z)/z^2, entire."""
    if abs(z) < mp.mpf("1e-12"):
        return mp.nsum(lambda k: z ** k / mp.factorial(k + 2), [0, 40])
    return (mp.expm1(z) - z) / (z * z)


def SD(z, w):
    """(S(z+w) - S(z))/w, entire in both."""
    if abs(w) < mp.mpf("1e-12"):
        return mp.diff(S, z) + w / 2 * mp.diff(S, z, 2) + w * w / 6 * mp.diff(S, z, 3)
    return (S(z + w) - S(z)) / w


def phi1(x, t):
    return I * t * S(I * x * t)


def psi(x, t):
    return -t * t * S2(I * x * t)


def phi11(q, r, t):
    return -t * t * SD(I * q * t, I * r * t)


def coeffs_stable(g, chi, d1, d2, wl, wv, t):
    ws = wl - wv + d1
    wa = wl + wv - d2
    f1 = mp.exp(-I * wl * t)
    g1 = mp.exp(-I * ws * t)
    h1 = mp.exp(-I * wv * t)
    l1 = mp.exp(-I * wa * t)
    c = {}
    c["f1"] = f1
    c["f2"] = mp.conj(g) * f1 * phi1(-d1, t)
    c["f3"] = chi * f1 * phi1(d2, t)
    c["f4"] = chi * mp.conj(g) * f1 * (phi11(-d1, d2, t) - phi11(d2, -d1, t))
    c["f5"] = abs(g) ** 2 * f1 * psi(-d1, t)
    c["f6"] = c["f5"]
    c["f7"] = abs(chi) ** 2 * f1 * psi(d2, t)
    c["f8"] = -c["f7"]
    c["g1"] = g1
    c["g2"] = g * g1 * phi1(d1, t)
    c["g3"] = -mp.conj(chi) * g * g1 * phi11(d1, -d2, t)
    c["g4"] = chi * g * g1 * phi11(d1, d2, t)
    c["g5"] = abs(g) ** 2 * g1 * psi(d1, t)
    c["g6"] = -c["g5"]
    c["h1"] = h1
    c["h2"] = g * h1 * phi1(d1, t)
    c["h3"] = chi * h1 * phi1(d2, t)
    c["h4"] = chi * g * h1 * (phi11(d1, d2, t) - phi11(d2, d1, t))
    c["h5"] = -abs(g) ** 2 * h1 * psi(d1, t)
    c["h6"] = -c["h5"]
    c["h7"] = -abs(chi) ** 2 * h1 * psi(d2, t)
    c["h8"] = -c["h7"]
    c["l1"] = l1
    c["l2"] = mp.conj(chi) * l1 * phi1(-d2, t)
    c["l3"] = mp.conj(chi) * g * l1 * phi11(-d2, d1, t)
    c["l4"] = mp.conj(chi) * mp.conj(g) * l1 * phi11(-d2, -d1, t)
    c["l5"] = abs(chi) ** 2 * l1 * psi(-d2, t)
    c["l6"] = c["l5"]
    return c


def coeffs_literal(g, chi, d1, d2, wl, wv, t):
    """Direct transliteration with explicit denominators."""
    ws = wl - wv + d1
    wa = wl + wv - d2
    dm = d1 - d2
    dp = d1 + d2
    E = lambda w: mp.expm1(I * w * t)
    f1 = mp.exp(-I * wl * t)
    g1 = mp.exp(-I * ws * t)
    h1 = mp.exp(-I * wv * t)
    l1 = mp.exp(-I * wa * t)
    c = {}
    c["f1"] = f1
    c["f2"] = -mp.conj(g) * f1 / d1 * E(-d1)
    c["f3"] = chi * f1 / d2 * E(d2)
    c["f4"] = (-chi * mp.conj(g) * f1 / d2 * (E(-dm) / dm - mp.exp(-I * d1 * t) / d1)
               - chi * mp.conj(g) * f1 / d1 * (E(-dm) / dm + mp.exp(I * d2 * t) / d2))
    c["f5"] = abs(g) ** 2 * f1 / d1 ** 2 * E(-d1) + I * abs(g) ** 2 * t * f1 / d1
    c["f6"] = c["f5"]
    c["f7"] = abs(chi) ** 2 * f1 / d2 ** 2 * E(d2) - I * abs(chi) ** 2 * t * f1 / d2
    c["f8"] = -c["f7"]
    c["g1"] = g1
    c["g2"] = g * g1 / d1 * E(d1)
    c["g3"] = mp.conj(chi) * g * g1 / d2 * (E(dm) / dm - E(d1) / d1)
    c["g4"] = chi * g * g1 / d2 * (E(dp) / dp - E(d1) / d1)
    c["g5"] = abs(g) ** 2 * g1 / d1 ** 2 * E(d1) - I * abs(g) ** 2 * t * g1 / d1
    c["g6"] = -c["g5"]
    c["h1"] = h1
    c["h2"] = g * h1 / d1 * E(d1)
    c["h3"] = chi * h1 / d2 * E(d2)
    c["h4"] = (chi * g * h1 / d2 * (E(dp) / dp - mp.exp(I * d1 * t) / d1)
               - chi * g * h1 / d1 * (E(dp) / dp - mp.exp(I * d2 * t) / d2))
    c["h5"] = -abs(g) ** 2 * h1 / d1 ** 2 * E(d1) + I * abs(g) ** 2 * t * h1 / d1
    c["h6"] = -c["h5"]
    c["h7"] = -abs(chi) ** 2 * h1 / d2 ** 2 * E(d2) + I * abs(chi) ** 2 * t * h1 / d2
    c["h8"] = -c["h7"]
    c["l1"] = l1
    c["l2"] = -mp.conj(chi) * l1 / d2 * E(-d2)
    c["l3"] = mp.conj(chi) * g * l1 / d1 * (E(dm) / dm + E(-d2) / d2)
    c["l4"] = mp.conj(chi) * mp.conj(g) * l1 / d1 * (E(-dp) / dp - E(-d2) / d2)
    c["l5"] = abs(chi) ** 2 * l1 / d2 ** 2 * E(-d2) + I * abs(chi) ** 2 * t * l1 / d2
    c["l6"] = c["l5"]
    return c


NAMES = ["f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8",
         "g1", "g2", "g3", "g4", "g5", "g6",
         "h1", "h2", "h3", "h4", "h5", "h6", "h7", "h8",
         "l1", "l2", "l3", "l4", "l5", "l6"]

# g_re, g_im, chi_re, chi_im, dw1, dw2, omega_v, omega_l, gt
POINTS = [
    # generic, complex couplings
    (1.1, -0.4, 0.7, 0.5, 7.3, 2.1, 1.2, 100.0, 0.17),
    # generic, real couplings, the working figure scale
    (1.0, 0.0, 1.0, 0.0, 10.0, 10.0, 1.0, 100.0, 0.1),
    # opposite-sign locked detunings
    (1.0, 0.0, 0.8, 0.0, 5.0, -5.0, 1.0, 100.0, 0.1),
    # single detuning near zero (inside the limit region)
    (1.0, 0.0, 1.3, -0.2, 1e-9, 4.0, 1.0, 100.0, 0.1),
    (0.9, 0.3, 1.0, 0.0, 6.0, -1e-9, 1.0, 100.0, 0.2),
    # nearly equal detunings
    (1.0, 0.0, 1.0, 0.0, 5.0, 5.0 + 1e-8, 1.0, 100.0, 0.1),
    # nearly opposite detunings
    (1.0, 0.2, 0.5, 0.1, 3.0, -3.0 + 1e-9, 1.5, 100.0, 0.3),
    # everything degenerate
    (1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 100.0, 0.1),
    # both exactly equal / exactly opposite
    (1.0, 0.0, 1.0, 0.0, 7.0, 7.0, 1.0, 100.0, 0.1),
    (1.0, 0.0, 1.0, 0.0, 7.0, -7.0, 1.0, 100.0, 0.1),
    # just above and below the switching boundary |x t| = 1e-6
    (1.0, 0.0, 1.0, 0.0, 2e-5, 9.0, 1.0, 100.0, 0.1),
    (1.0, 0.0, 1.0, 0.0, 5e-6, 9.0, 1.0, 100.0, 0.1),
    # both detunings tiny but distinct (small-node series paths)
    (1.0, 0.0, 1.0, 0.0, 3e-4, -1.2e-4, 1.0, 100.0, 0.1),
    (1.0, -0.3, 0.7, 0.2, 9e-4, 9.5e-4, 1.0, 100.0, 0.1),
    # zero time
    (1.0, 0.0, 1.0, 0.0, 4.0, 2.0, 1.0, 100.0, 0.0),
    # larger time, mixed detunings
    (1.4, 0.1, 0.6, -0.6, 12.0, -4.5, 0.7, 100.0, 0.45),
]


def main():
    rows = []
    for (gr, gi, xr, xi, d1, d2, wv, wl, gt) in POINTS:
        g = mp.mpc(gr, gi)
        chi = mp.mpc(xr, xi)
        t = mp.mpf(gt) / abs(g)
        c = coeffs_stable(g, chi, mp.mpf(d1), mp.mpf(d2), mp.mpf(wl), mp.mpf(wv), t)

        # Cross-check the two routes away from the degenerate lines.
        combos = [d1, d2, d1 - d2, d1 + d2]
        if gt > 0 and min(abs(x) for x in combos) * gt > 1e-3:
            lit = coeffs_literal(g, chi, mp.mpf(d1), mp.mpf(d2), mp.mpf(wl),
                                 mp.mpf(wv), t)
            for n in NAMES:
                err = abs(c[n] - lit[n])
                scale = max(abs(c[n]), mp.mpf("1e-30"))
                assert err / scale < mp.mpf("1e-35"), (n, err)

        vals = []
        for n in NAMES:
            vals.append(mp.nstr(c[n].real, 22, strip_zeros=False))
            vals.append(mp.nstr(c[n].imag, 22, strip_zeros=False))
        rows.append(((gr, gi, xr, xi, d1, d2, wv, wl, gt), vals))

    with open("coeff_fixtures.inc", "w") as f:
        f.write("// Generated by generate_coeff_fixtures.py; do not edit.\n")
        f.write("// clang-format off\n")
        f.write("inline constexpr CoeffFixture kCoeffFixtures[] = {\n")
        for (params, vals) in rows:
            f.write("  {")
            f.write(", ".join(repr(p) for p in params))
            f.write(",\n   {")
            for i, v in enumerate(vals):
                f.write(v)
                if i + 1 < len(vals):
                    f.write(", ")
                if i % 4 == 3 and i + 1 < len(vals):
                    f.write("\n    ")
            f.write("}},\n")
        f.write("};\n")
    print("wrote", len(rows), "fixtures")


if __name__ == "__main__":
    main()
