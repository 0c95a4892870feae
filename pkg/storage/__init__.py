"""Output writers for survey, presentation and verification results."""

from .result_writer import ResultWriter, survey_frame, virdim_multiset

__all__ = ["ResultWriter", "survey_frame", "virdim_multiset"]
