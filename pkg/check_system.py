"""
Quick check script to verify a UniRat installation
"""

import math
import sys
import time


def check_imports():
    """Check if all modules can be imported"""
    print("Checking Python module imports...")

    modules = [
        ('approximation.unitary_core', 'UnitaryRational'),
        ('approximation.unitary_remez', 'solve'),
        ('approximation.cheb_minimax', 'solve_chebyshev'),
        ('analysis.bounds_analysis', 'verify_bounds'),
        ('cli.main', 'main'),
    ]

    for module_name, attr in modules:
        try:
            module = __import__(module_name, fromlist=[attr])
            getattr(module, attr)
            print(f"  ✓ {module_name}.{attr}")
        except Exception as e:
            print(f"  ✗ {module_name}.{attr}: {e}")
            return False

    return True


def check_unitary():
    """Check the unitary solver against the degree-0 closed form"""
    print("\nChecking unitary solver...")
    try:
        from approximation.unitary_core import Target
        from approximation.unitary_remez import solve

        start = time.time()
        cert = solve(Target(omega=1.0, n=1))
        elapsed = time.time() - start
        n0 = solve(Target(omega=1.0, n=0))
        if abs(n0.error_u - 2 * math.sin(0.5)) > 1e-12:
            print(f"  ✗ degree 0 mismatch: {n0.error_u}")
            return False
        print(f"  ✓ n=1 omega=1: E^u={cert.error_u:.12g} in {elapsed:.2f}s "
              f"({cert.iterations} iterations)")
        return True
    except Exception as e:
        print(f"  ✗ Unitary solver error: {e}")
        return False


def check_chebyshev():
    """Check the Chebyshev solver"""
    print("\nChecking Chebyshev solver...")
    try:
        from approximation.cheb_minimax import solve_chebyshev
        from approximation.unitary_core import Target

        start = time.time()
        result = solve_chebyshev(Target(omega=1.0, n=1))
        elapsed = time.time() - start
        print(f"  ✓ n=1 omega=1: E^c={result.error_c:.12g} in {elapsed:.2f}s "
              f"(flatness {result.flatness:.2e})")
        return True
    except Exception as e:
        print(f"  ✗ Chebyshev solver error: {e}")
        return False


def check_bounds():
    """Check the two-sided inequality at one point"""
    print("\nChecking error bounds...")
    try:
        from analysis.bounds_analysis import evaluate_bounds

        report = evaluate_bounds(2, 4.0)
        ok = report.lower_ok and report.upper_ok
        print(f"  {'✓' if ok else '✗'} n=2 omega=4: E^c/E^u={report.ratio_c_over_u:.6f}")
        return ok
    except Exception as e:
        print(f"  ✗ Bounds error: {e}")
        return False


def main():
    print("=" * 60)
    print("UniRat - System Check")
    print("=" * 60 + "\n")

    results = {
        'Python Modules': check_imports(),
        'Unitary Solver': check_unitary(),
        'Chebyshev Solver': check_chebyshev(),
        'Error Bounds': check_bounds(),
    }

    print("\n" + "=" * 60)
    print("Check Results:")
    print("=" * 60)

    all_passed = True
    for check_name, passed in results.items():
        status = "✓ PASS" if passed else "✗ FAIL"
        print(f"  {check_name:.<40} {status}")
        if not passed:
            all_passed = False

    print("=" * 60)

    if all_passed:
        print("\n✓ All checks passed! UniRat is ready.")
        return 0
    else:
        print("\n✗ Some checks failed. See errors above.")
        return 1


if __name__ == "__main__":
    sys.exit(main())
