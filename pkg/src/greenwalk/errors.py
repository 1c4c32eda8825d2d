"""Exception types raised across the package. The CLI maps them to exit codes."""


class GreenwalkError(Exception):
    pass


class NonGreenStep(GreenwalkError):
    def __init__(self, index: int, vertex: int):
        super().__init__(f"step index {index} (0-based) mutates at vertex {vertex}, which is not green")
        self.index = index
        self.vertex = vertex


class BudgetExceeded(GreenwalkError):
    def __init__(self, message: str, branches=()):
        super().__init__(message)
        self.branches = tuple(branches)


class BoundExceeded(GreenwalkError):
    """Oracle quiver larger than the configured bound."""


class RotationError(GreenwalkError):
    pass


class FirstBrickNotSimpleAtK(RotationError):
    pass


class NonPositiveImage(RotationError):
    def __init__(self, index: int, image):
        super().__init__(f"B_k image of brick {index} is {list(image)}, not a nonzero non-negative vector")
        self.index = index
        self.image = tuple(image)


class RotatedBetaNotPositive(RotationError):
    pass
