"""Loaders for assignment files."""
from .assignment_loader import AssignmentFile, AssignmentLoader

__all__ = [
    "AssignmentFile",
    "AssignmentLoader",
]
