"""Exception hierarchy shared by all modules.

``DataError`` subclasses map to CLI exit code 2 (malformed or inconsistent
input data); ``UsageError`` maps to exit code 1.
"""


class LikeLabelError(Exception):
    pass


class UsageError(LikeLabelError):
    pass


class DataError(LikeLabelError):
    pass


class ParseError(DataError):
    def __init__(self, path, line, reason):
        super().__init__(f"{path}:{line}: {reason}")
        self.path = path
        self.line = line
        self.reason = reason


class DuplicatePostId(DataError):
    def __init__(self, post_id):
        super().__init__(f"duplicate post id {post_id!r}")
        self.post_id = post_id


class UnknownPostId(DataError):
    def __init__(self, post_id, context=""):
        msg = f"unknown post id {post_id!r}"
        if context:
            msg += f" ({context})"
        super().__init__(msg)
        self.post_id = post_id


class OverlappingTrainingSets(DataError):
    def __init__(self, post_ids):
        sample = sorted(post_ids)[:5]
        super().__init__(f"posts in both training sets: {sample}")
        self.post_ids = post_ids


class EmptyTrainingSet(DataError):
    pass


class NonFiniteLoss(DataError):
    """Training loss left the finite range, usually a diverging learning rate."""


class EmptyEvaluationSet(DataError):
    pass


class FractionTooSmall(DataError):
    pass


class TooFewPosts(DataError):
    pass


class SinglePage(DataError):
    pass


class InvalidParams(DataError):
    pass
