class ParseException(ValueError):
    """Malformed benchmark CSV. `line` is 1-based."""

    def __init__(self, message, line):
        self.message = message
        self.line = line
        super().__init__(f"line {line}: {message}")
