"""UniRat - Unitary vs. Chebyshev rational approximation of exp(i*omega*x)"""
__version__ = "1.0.0"
