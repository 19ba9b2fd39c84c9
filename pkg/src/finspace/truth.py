"""Three-valued answers for questions that are only semi-decidable here."""
from enum import Enum


class Truth(Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"

    def __bool__(self):
        return self is Truth.YES

    def __str__(self):
        return self.value

    @classmethod
    def of(cls, flag):
        return cls.YES if flag else cls.NO
