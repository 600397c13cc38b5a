"""Error bounds and certificates relating unitary and Chebyshev approximation"""

from loguru import logger

logger.disable("analysis")
