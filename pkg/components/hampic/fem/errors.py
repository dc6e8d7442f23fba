class OutOfDomain(ValueError):
    def __init__(self, count: int, first: int) -> None:
        self.count = count
        self.first = first

        super().__init__(
            f"{count} point(s) outside the Dirichlet domain (first index {first})"
        )


class IncompatibleRHS(ValueError):
    def __init__(self, total: float, limit: float) -> None:
        self.total = total
        self.limit = limit

        super().__init__(
            f"Periodic load vector is not mean free: sum {total:.3e} > {limit:.3e}"
        )


class NonConvergence(RuntimeError):
    def __init__(self, iterations: int, residual: float, target: float) -> None:
        self.iterations = iterations
        self.residual = residual
        self.target = target

        super().__init__(
            f"CG did not converge after {iterations} iterations: "
            f"residual {residual:.3e} > target {target:.3e}"
        )
