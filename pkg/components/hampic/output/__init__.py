from hampic.output.core import render, save, write_text_atomic

__all__ = ["render", "save", "write_text_atomic"]
