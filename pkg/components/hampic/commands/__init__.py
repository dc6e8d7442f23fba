from hampic.commands import bench, convergence, fit, run, setup, verify

__all__ = ["bench", "convergence", "fit", "run", "setup", "verify"]
