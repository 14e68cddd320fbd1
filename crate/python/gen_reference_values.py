#!/usr/bin/env python3
"""Independent reference values for the Rust test suite.

Builds the two-spin dipolar Hamiltonian, thermal states, and Wootters
concurrence from scratch with numpy (general non-Hermitian eigensolver,
brute-force partial traces) and mpmath (50-digit hyperbolic closed forms),
then prints the constants that are frozen into the Rust tests.

Run: python3 python/gen_reference_values.py
"""

import numpy as np
import mpmath as mp

mp.mp.dps = 50

# single-spin operators, basis (|up>, |down>), site 1 = leftmost factor
IZ = np.array([[0.5, 0.0], [0.0, -0.5]], dtype=complex)
IP = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)
IM = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)
I2 = np.eye(2, dtype=complex)
SY = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)


def site_op(n, site, op):
    mats = [I2] * n
    mats[site - 1] = op
    out = mats[0]
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


def pair_dipolar(n, j, k, d, theta, phi):
    """Full dipolar coupling between sites j < k, coupling constant d."""
    jz, jp, jm = site_op(n, j, IZ), site_op(n, j, IP), site_op(n, j, IM)
    kz, kp, km = site_op(n, k, IZ), site_op(n, k, IP), site_op(n, k, IM)
    sec = (1.0 - 3.0 * np.cos(theta) ** 2) * (jz @ kz - 0.25 * (jp @ km + jm @ kp))
    single = np.exp(-1.0j * phi) * (jz @ kp + jp @ kz)
    single = -0.75 * np.sin(2.0 * theta) * (single + single.conj().T)
    double = np.exp(-2.0j * phi) * (jp @ kp)
    double = -0.75 * np.sin(theta) ** 2 * (double + double.conj().T)
    return d * (sec + single + double)


def hamiltonian_pair(beta, d, theta, phi):
    hz = beta * (site_op(2, 1, IZ) + site_op(2, 2, IZ))
    return hz + pair_dipolar(2, 1, 2, d, theta, phi)


def gibbs(h):
    vals, vecs = np.linalg.eigh(h)
    w = np.exp(-(vals - vals.min()))
    rho = (vecs * (w / w.sum())) @ vecs.conj().T
    log_z = -vals.min() + np.log(w.sum())
    return rho, log_z


def concurrence_bruteforce(rho):
    """Wootters concurrence via the general (non-Hermitian) eigensolver."""
    f = np.kron(SY, SY)
    rho_t = f @ rho.conj() @ f
    lam = np.linalg.eigvals(rho @ rho_t)
    lam = np.sqrt(np.clip(lam.real, 0.0, None))
    lam = np.sort(lam)[::-1]
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3]), lam


def concurrence_x(rho):
    c1 = abs(rho[0, 3]) - np.sqrt(rho[1, 1].real * rho[2, 2].real)
    c2 = abs(rho[1, 2]) - np.sqrt(rho[0, 0].real * rho[3, 3].real)
    return 2.0 * max(0.0, c1, c2)


def closed_concurrence(beta, d):
    """50-digit closed form, quarter-argument reading of the branch term."""
    beta, d = mp.mpf(beta), mp.mpf(d)
    s_tot = mp.sqrt(16 * beta**2 + 9 * d**2)
    gap = mp.exp(d / 2) * mp.cosh(d / 4)
    num = 3 * d * mp.sinh(s_tot / 4) / s_tot - gap
    den = gap + mp.cosh(s_tot / 4)
    return max(mp.mpf(0), num / den)


def closed_magnetization_sqrt_denom(beta, d):
    beta, d = mp.mpf(beta), mp.mpf(d)
    s_tot = mp.sqrt(16 * beta**2 + 9 * d**2)
    den = s_tot * (mp.cosh(s_tot / 4) + mp.exp(d / 2) * mp.cosh(d / 4))
    return -4 * beta * mp.sinh(s_tot / 4) / den


def closed_magnetization_plain_denom(beta, d):
    beta, d = mp.mpf(beta), mp.mpf(d)
    s_tot = mp.sqrt(16 * beta**2 + 9 * d**2)
    den = (16 * beta**2 + 9 * d**2) * (mp.cosh(s_tot / 4) + mp.exp(d / 2) * mp.cosh(d / 4))
    return -4 * beta * mp.sinh(s_tot / 4) / den


def a_pair_quarter(beta, d):
    """Branch amplitudes, quarter-argument reading (cancellation-free A-)."""
    beta, d = mp.mpf(beta), mp.mpf(d)
    s_tot = mp.sqrt(16 * beta**2 + 9 * d**2)
    w = mp.sqrt(16 * beta**2 + 9 * d**2 * mp.cosh(s_tot / 4) ** 2)
    t = 3 * d * mp.sinh(s_tot / 4)
    return (w + t) / (2 * s_tot), s_tot / (2 * (w + t))


def a_pair_half_radicand(beta, d):
    """Radicands of the half-argument transcription (sign check only)."""
    beta, d = mp.mpf(beta), mp.mpf(d)
    s2 = 16 * beta**2 + 9 * d**2
    s_tot = mp.sqrt(s2)
    w = mp.sqrt(16 * beta**2 + 9 * d**2 * mp.cosh(s_tot / 4) ** 2)
    core = 16 * beta**2 + 9 * d**2 * mp.cosh(s_tot / 2)
    branch = 6 * d * mp.sinh(s_tot / 2) * w
    return (core + branch) / s2, (core - branch) / s2


def boundary_beta(d):
    d = mp.mpf(d)

    def g(beta):
        s_tot = mp.sqrt(16 * beta**2 + 9 * d**2)
        return 3 * d * mp.sinh(s_tot / 4) / s_tot - mp.exp(d / 2) * mp.cosh(d / 4)

    return mp.findroot(g, mp.mpf(2))


def partial_trace_pair(rho, n, a, b):
    """Brute-force index-summation partial trace onto sites (a, b)."""
    dims = [2] * n
    t = rho.reshape(dims + dims)
    keep = [a - 1, b - 1]
    out = np.zeros((2, 2, 2, 2), dtype=complex)
    for ia in range(2):
        for ib in range(2):
            for ja in range(2):
                for jb in range(2):
                    s = 0.0 + 0.0j
                    for env in range(2 ** (n - 2)):
                        idx_r = [0] * n
                        idx_c = [0] * n
                        idx_r[keep[0]], idx_r[keep[1]] = ia, ib
                        idx_c[keep[0]], idx_c[keep[1]] = ja, jb
                        e = env
                        for site in range(n):
                            if site not in keep:
                                idx_r[site] = idx_c[site] = e % 2
                                e //= 2
                        s += t[tuple(idx_r + idx_c)]
                    out[ia, ib, ja, jb] = s
    return out.reshape(4, 4)


def fmt(x, digits=17):
    return mp.nstr(mp.mpf(x), digits, strip_zeros=False)


def main():
    print("== herm_eig oracle: pair Hamiltonian spectrum at (beta,d)=(1,1), theta=pi/2 ==")
    h = hamiltonian_pair(1.0, 1.0, np.pi / 2, 0.0)
    print("eigenvalues:", np.sort(np.linalg.eigvalsh(h)))

    print("\n== log partition function at (1,1,pi/2,0) ==")
    _, log_z = gibbs(h)
    lz = mp.log(2 * mp.exp(mp.mpf("-0.25")) * (mp.cosh(mp.mpf("1.25")) + mp.exp(mp.mpf("0.5")) * mp.cosh(mp.mpf("0.25"))))
    print("numpy:", repr(log_z), " closed:", fmt(lz, 30))

    print("\n== concurrence at (5,3,pi/2,0): brute force vs X-state vs closed ==")
    rho, _ = gibbs(hamiltonian_pair(5.0, 3.0, np.pi / 2, 0.0))
    c_bf, lam = concurrence_bruteforce(rho)
    print("brute force :", repr(c_bf))
    print("lambdas     :", [repr(v) for v in lam])
    print("x-state     :", repr(concurrence_x(rho)))
    print("closed form :", fmt(closed_concurrence(5, 3), 30))

    print("\n== branch amplitudes at (1,1): quarter-argument reading (50 digits) ==")
    ap, am = a_pair_quarter(1, 1)
    print("a_plus :", fmt(ap, 30))
    print("a_minus:", fmt(am, 30))
    rp, rm = a_pair_half_radicand(1, 1)
    print("half-argument radicands:", fmt(rp, 10), fmt(rm, 10), "(negative => complex, transcription rejected)")

    print("\n== boundary beta_c (50 digits) ==")
    for d in ("1", "0.5", "2", "3", "5", "10"):
        print(f"d={d}: beta_c = {fmt(boundary_beta(d), 30)}")

    print("\n== concurrence straddle at d=1 ==")
    for b in (2.26, 2.28):
        rho_b, _ = gibbs(hamiltonian_pair(b, 1.0, np.pi / 2, 0.0))
        print(f"beta={b}: closed={fmt(closed_concurrence(b, 1), 20)} numeric={concurrence_bruteforce(rho_b)[0]!r}")

    print("\n== magnetization at (2,3): numeric vs closed variants ==")
    rho_m, _ = gibbs(hamiltonian_pair(2.0, 3.0, np.pi / 2, 0.0))
    iz_tot = site_op(2, 1, IZ) + site_op(2, 2, IZ)
    m_num = np.trace(rho_m @ iz_tot).real
    print("numeric    :", repr(m_num))
    print("sqrt denom :", fmt(closed_magnetization_sqrt_denom(2, 3), 30))
    print("plain denom:", fmt(closed_magnetization_plain_denom(2, 3), 30))

    print("\n== magnetization near saturation (50, 3) ==")
    rho_s, _ = gibbs(hamiltonian_pair(50.0, 3.0, np.pi / 2, 0.0))
    m50 = np.trace(rho_s @ iz_tot).real
    print("numeric    :", repr(m50))
    print("sqrt denom :", fmt(closed_magnetization_sqrt_denom(50, 3), 30))
    print("plain denom:", fmt(closed_magnetization_plain_denom(50, 3), 30))
    print("deviation from -1:", fmt(1 + closed_magnetization_sqrt_denom(50, 3), 10))

    print("\n== N=3 equilateral triangle in the transverse plane, beta=5, d_ref=3 ==")
    sites = [(0.0, 0.0, 0.0), (1.0, 0.0, 0.0), (0.5, np.sqrt(3.0) / 2.0, 0.0)]
    n = 3
    h3 = np.zeros((8, 8), dtype=complex)
    h3 += 5.0 * sum(site_op(n, s, IZ) for s in range(1, n + 1))
    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            dx = np.array(sites[k - 1]) - np.array(sites[j - 1])
            r = np.linalg.norm(dx)
            theta = np.arccos(dx[2] / r)
            phi = np.arctan2(dx[1], dx[0]) % (2 * np.pi)
            h3 += pair_dipolar(n, j, k, 3.0 / r**3, theta, phi)
    rho3, _ = gibbs(h3)
    m3 = np.trace(rho3 @ sum(site_op(n, s, IZ) for s in range(1, n + 1))).real
    print("total magnetization:", repr(m3))
    for (a, b) in [(1, 2), (1, 3), (2, 3)]:
        red = partial_trace_pair(rho3, n, a, b)
        c, lam = concurrence_bruteforce(red)
        print(f"pair {(a, b)}: trace={np.trace(red).real!r} C={c!r}")
        print("   lambdas:", [repr(v) for v in lam])
    red12 = partial_trace_pair(rho3, n, 1, 2)
    print("reduced rho(1,2) real part:")
    for row in red12:
        print("  ", [repr(v.real) for v in row])
    print("reduced rho(1,2) imag part max:", np.abs(red12.imag).max())

    print("\n== physical conversion (fluorine-like parameters) ==")
    h_planck = mp.mpf("6.62607015e-34")
    k_b = mp.mpf("1.380649e-23")
    gamma, field, t_uk = mp.mpf("4.0025"), mp.mpf(3), mp.mpf("0.33")
    f0_khz = gamma * field
    beta = h_planck * f0_khz * 1000 / (k_b * t_uk * mp.mpf("1e-6"))
    print("omega0 (kHz):", fmt(f0_khz, 20))
    print("beta at T=0.33 uK:", fmt(beta, 20))

    print("\n== critical temperature bracket (omega0=12 kHz, f_dd in [2,6] kHz) ==")
    for fdd in (2, 3, 4, 5, 6):
        ratio = mp.mpf(12) / fdd

        def g(d):
            beta_r = ratio * d
            s_tot = mp.sqrt(16 * beta_r**2 + 9 * d**2)
            return 3 * d * mp.sinh(s_tot / 4) / s_tot - mp.exp(d / 2) * mp.cosh(d / 4)

        d_c = mp.findroot(g, mp.mpf(1))
        t_c = h_planck * fdd * 1000 / (k_b * d_c) / mp.mpf("1e-6")
        print(f"f_dd={fdd} kHz: d_c={fmt(d_c, 12)} T_c={fmt(t_c, 12)} uK")

    print("\n== linear fit C = a(M+b) at d=3, beta_max=3.32, n=100 ==")
    betas = np.linspace(0.0, 3.32, 100)
    pts = []
    for b in betas:
        rho_b, _ = gibbs(hamiltonian_pair(b, 3.0, np.pi / 2, 0.0))
        c = concurrence_bruteforce(rho_b)[0]
        m = np.trace(rho_b @ iz_tot).real
        if c > 0.0:
            pts.append((m, c))
    ms = np.array([p[0] for p in pts])
    cs = np.array([p[1] for p in pts])
    a_fit, c_fit = np.polyfit(ms, cs, 1)
    b_fit = c_fit / a_fit
    resid = cs - (a_fit * ms + c_fit)
    print(f"entangled points: {len(pts)}")
    print(f"a={a_fit!r} b={b_fit!r} rms={np.sqrt((resid**2).mean())!r}")

    print("\n== theta anisotropy at beta=5, d=3 (41-point grid) ==")
    cs_theta = []
    for i in range(41):
        th = np.pi * i / 40.0
        rho_t, _ = gibbs(hamiltonian_pair(5.0, 3.0, th, 0.0))
        cs_theta.append(concurrence_bruteforce(rho_t)[0])
    print("argmax:", int(np.argmax(cs_theta)), "(expect 20 = pi/2)")
    print("C(0), C(pi):", cs_theta[0], cs_theta[-1], " C(pi/2):", cs_theta[20])

    print("\n== phi invariance at (5,3,pi/2) ==")
    base = concurrence_bruteforce(gibbs(hamiltonian_pair(5.0, 3.0, np.pi / 2, 0.0))[0])[0]
    dev = 0.0
    for k in range(8):
        phi = k * np.pi / 4.0
        c = concurrence_bruteforce(gibbs(hamiltonian_pair(5.0, 3.0, np.pi / 2, phi))[0])[0]
        dev = max(dev, abs(c - base))
    print("max |C(phi) - C(0)|:", dev)


if __name__ == "__main__":
    main()
