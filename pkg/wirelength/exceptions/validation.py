class ValidationException(ValueError):
    """A benchmark field parsed but fell outside its allowed range.

    `details` maps the offending field to the reason and carries the
    CSV `line` it came from.
    """

    def __init__(self, message, details):
        self.message = message
        self.details = details
        super().__init__(f"line {details.get('line', '?')}: {message}")
