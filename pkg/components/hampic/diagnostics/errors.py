class InsufficientPeaks(ValueError):
    def __init__(self, found: int, required: int) -> None:
        self.found = found
        self.required = required

        super().__init__(
            f"Found {found} local maxima of E_d in the fit window, need {required}"
        )


class MalformedRecord(ValueError):
    def __init__(self, path: str, line: int, reason: str) -> None:
        self.path = path
        self.line = line

        super().__init__(f"{path}:{line}: {reason}")
