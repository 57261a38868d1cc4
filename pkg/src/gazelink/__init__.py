"""gazelink: an SSVEP speller pipeline wired to simulated smart devices.

Synthetic EEG in, TDCA decoding, LLM-assisted flicker-paradigm generation,
multilingual text prediction, and a `$Device (args)` instruction protocol
executed against an in-process device fleet.
"""

__version__ = "0.1.0"
