from wirelength.exceptions.domain import DomainException


class InvalidExponentException(DomainException):
    def __init__(self, p, model):
        self.model = model
        super().__init__(
            f"approximate model {model} requires rent exponent p > 0.5, got p={p!r}",
            "rent_p")
