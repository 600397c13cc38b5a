"""
Example usage of UniRat components
"""

import math
import sys
sys.path.append('.')

from analysis.bounds_analysis import (
    asymptotic_constant,
    closed_form_n0,
    degenerate_errors,
    evaluate_bounds,
    kolmogorov_gamma,
    vp_lower_bound,
    vp_setting_from_certificate,
)
from approximation.cheb_minimax import solve_chebyshev
from approximation.unitary_core import Target
from approximation.unitary_remez import solve


def example_unitary():
    """Example: unitary best approximation"""
    print("=" * 60)
    print("Example: Unitary Best Approximation")
    print("=" * 60)

    target = Target(omega=2.0, n=2)
    cert = solve(target)

    print(f"\nCertificate (n={target.n}, omega={target.omega}):")
    print(f"  E^u:                {cert.error_u:.15g}")
    print(f"  Phase amplitude:    {cert.alpha:.15g}")
    print(f"  Deviation:          {cert.deviation:.3e}")
    print(f"  Iterations:         {cert.iterations}")
    print(f"\nEquioscillation points:")
    for eta, phase in zip(cert.eta, cert.extreme_phases):
        print(f"  x = {eta:+.12f}   phase error = {phase:+.3e}")
    print(f"\nPoles of r: {', '.join(f'{p:.6f}' for p in cert.approximant.poles())}")


def example_chebyshev():
    """Example: Chebyshev approximation via AAA-Lawson"""
    print("\n" + "=" * 60)
    print("Example: Chebyshev Approximation")
    print("=" * 60)

    target = Target(omega=2.0, n=2)
    result = solve_chebyshev(target)

    print(f"\nMinimax Result:")
    print(f"  E^c:                {result.error_c:.15g}")
    print(f"  Flatness:           {result.flatness:.3e}")
    print(f"  Converged:          {result.converged}")
    print(f"  Lawson Iterations:  {result.lawson_iters}")
    if result.flags:
        print(f"  Flags:              {', '.join(result.flags)}")


def example_bounds():
    """Example: two-sided inequality and local optimality"""
    print("\n" + "=" * 60)
    print("Example: Error Bounds")
    print("=" * 60)

    for n, omega in [(0, 1.0), (1, 1.0), (2, 4.0), (1, 7.0)]:
        report = evaluate_bounds(n, omega)
        status = '✓' if report.lower_ok and report.upper_ok else '✗'
        print(f"  n={n} omega={omega:<5} E^u={report.error_u:.6e} E^c={report.error_c:.6e} "
              f"ratio={report.ratio_c_over_u:.4f} {status}"
              f"{' (degenerate)' if report.degenerate else ''}")

    cert = solve(Target(omega=1.0, n=1))
    gamma = kolmogorov_gamma(cert)
    print(f"\nKolmogorov test (n=1, omega=1):")
    print(f"  Re gamma at extrema: {', '.join(f'{g.real:.3e}' for g in gamma)}")
    print(f"  cos(alpha) - 1:      {math.cos(cert.alpha) - 1:.3e}")
    print(f"  Lower bound on E^c:  {vp_lower_bound(vp_setting_from_certificate(cert)):.6e}")

    witness = degenerate_errors(1, 7.0).witness
    print(f"\nDegenerate witness (n=1, omega=7): extreme errors {witness.extreme_errors}")


def example_closed_forms():
    """Example: closed forms and asymptotics"""
    print("\n" + "=" * 60)
    print("Example: Closed Forms and Asymptotics")
    print("=" * 60)

    print(f"\nDegree 0:")
    for omega in [0.5, 1.0, 2.0, 3.0]:
        error_c, error_u = closed_form_n0(omega)
        print(f"  omega={omega:.1f}  E^c={error_c:.6f}  E^u={error_u:.6f}")

    print(f"\nAsymptotic constants:")
    for n in range(5):
        c = asymptotic_constant(n)
        print(f"  c_{n} = {c}  ({float(c):.6e})")


def main():
    print("\n🔷 UniRat - Example Usage\n")

    try:
        example_unitary()
        example_chebyshev()
        example_bounds()
        example_closed_forms()

        print("\n" + "=" * 60)
        print("✓ All examples completed successfully!")
        print("=" * 60 + "\n")

    except Exception as e:
        print(f"\n✗ Error: {e}")
        import traceback
        traceback.print_exc()


if __name__ == "__main__":
    main()
