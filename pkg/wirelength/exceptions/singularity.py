from wirelength.exceptions.domain import DomainException


class SingularityException(DomainException):
    """The Rent exponent sits inside the exclusion band of a pole."""

    def __init__(self, p, pole):
        self.pole = pole
        super().__init__(
            f"rent exponent p={p!r} is within the singular band of {pole}",
            "rent_p")
