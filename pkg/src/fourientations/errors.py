class SizeGuardError(ValueError):
    """Raised when an exhaustive computation would exceed its configured size limit."""

    def __init__(self, what: str, value: int, limit: int):
        super().__init__(f"{what} = {value} exceeds the limit {limit}")
        self.what = what
        self.value = value
        self.limit = limit
