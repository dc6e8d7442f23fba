from hampic.reporting import theme
from hampic.reporting.log import configure

__all__ = ["configure", "theme"]
