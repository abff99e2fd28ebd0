class NotFoundException(LookupError):
    """No bundled benchmark table by that name."""

    def __init__(self, name, available=()):
        self.name = name
        self.available = tuple(available)
        super().__init__(
            f"unknown benchmark table {name!r}; "
            f"available: {', '.join(self.available) or 'none'}")
