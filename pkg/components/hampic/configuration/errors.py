class ConfigError(ValueError):
    def __init__(self, key: str, message: str) -> None:
        self.key = key

        super().__init__(f"{key}: {message}" if key else message)
