from hampic.cli import core

__all__ = ["core"]
