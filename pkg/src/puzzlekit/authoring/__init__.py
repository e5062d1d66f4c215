"""Images, question text and multiple-choice options for puzzle instances."""

from .mcq import McqItem, assemble_mcq, gen_distractors, numeric_range
from .render import render_svg
from .svg import RenderSpec
from .templates import format_question

__all__ = ["McqItem", "assemble_mcq", "gen_distractors", "numeric_range", "render_svg",
           "RenderSpec", "format_question"]
