from .reports import URReport, URKind, Verdict

__all__ = ["URReport", "URKind", "Verdict"]
