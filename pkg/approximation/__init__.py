"""Unitary and Chebyshev rational approximation to exp(i*omega*x)"""

from loguru import logger

# silent as a library; cli.main.configure_logging turns it back on
logger.disable("approximation")
