"""Best bandlimited L1 approximation of log|x|.

Integrating the exponential-kernel construction against d(lam)/lam turns
exp(-lam|x|) into -log|x|; this script evaluates the resulting entire
approximant V, checks its interpolation property, and reproduces the
optimal error 4G/pi (G = Catalan's constant).
"""

import math

import numpy as np

from xapprox import (
    EntireApproximant,
    HaarLog,
    TargetForm,
    catalan,
    error_mu_pointwise,
    eval_K_mu,
    l1_error_mu,
    l1_error_mu_quadrature,
)


def main():
    mu = HaarLog()
    V = EntireApproximant(mu, 1.0, TargetForm.LOG)

    print("x        V(x)                log(x)              difference")
    for x in (0.5, 1.5, 2.5, 0.3, 2.0, 7.25):
        v = eval_K_mu(V, x)
        t = math.log(x)
        print(f"{x:<8} {v:<19.15f} {t:<19.15f} {v - t:+.3e}")
    # half-integers above land on 0 to machine precision: V interpolates there

    G = catalan()
    closed = l1_error_mu(mu, 1.0)
    quadr = l1_error_mu_quadrature(mu, 1.0)
    print(f"\nL1 error, closed form 4G/pi : {closed:.15f}")
    print(f"L1 error, quadrature        : {quadr:.15f}   "
          f"(diff {abs(closed - quadr):.2e})")
    assert abs(closed - 4.0 * G / math.pi) < 1e-15

    # pointwise error log(x) - V(x); in this presentation the sign is
    # opposite to cos(pi x), since the construction approaches log from
    # the -log side (compare the exponential-kernel demo)
    xs = np.array([0.25, 0.75, 1.25, 1.75, 2.25])
    errs = [error_mu_pointwise(V, float(x)) for x in xs]
    signs = "".join("+" if e > 0 else "-" for e in errs)
    print(f"error signs at {xs.tolist()} : {signs}   (cos(pi x): +--++)")
    assert signs == "-++--"


if __name__ == "__main__":
    main()
