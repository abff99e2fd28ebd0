class ConvergenceException(ArithmeticError):
    def __init__(self, message, interval=None):
        self.message = message
        self.interval = interval
        super().__init__(self.message)
