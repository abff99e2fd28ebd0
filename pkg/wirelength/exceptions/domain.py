class DomainException(ValueError):
    """An input lies outside the domain of a model or operation.

    `parameter` names the offending argument so the CLI can report it.
    """

    def __init__(self, message, parameter=None):
        self.message = message
        self.parameter = parameter
        super().__init__(self.message)
