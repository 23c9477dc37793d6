# -*- coding: utf-8 -*-

# Copyright © 2021 The lens-floer developers
#
# Permission to use, copy, modify, and/or distribute this software for
# any purpose with or without fee is hereby granted, provided that the
# above copyright notice and this permission notice appear in all copies.
#
# THE SOFTWARE IS PROVIDED "AS IS" AND THE AUTHOR DISCLAIMS ALL WARRANTIES
# WITH REGARD TO THIS SOFTWARE INCLUDING ALL IMPLIED WARRANTIES OF
# MERCHANTABILITY AND FITNESS. IN NO EVENT SHALL THE AUTHOR BE LIABLE FOR ANY
# SPECIAL, DIRECT, INDIRECT, OR CONSEQUENTIAL DAMAGES OR ANY DAMAGES WHATSOEVER
# RESULTING FROM LOSS OF USE, DATA OR PROFITS, WHETHER IN AN ACTION OF
# CONTRACT, NEGLIGENCE OR OTHER TORTIOUS ACTION, ARISING OUT OF OR IN
# CONNECTION WITH THE USE OR PERFORMANCE OF THIS SOFTWARE.

from dataclasses import dataclass

from .exceptions import BadParams

__all__ = [
    "FloerConfig",
    "ScanConfig",
    "DEFAULT_CONFIG",
    "DEFAULT_SCAN_CONFIG",
]


@dataclass(frozen=True)
class FloerConfig:
    """Configuration for the bigon search and the chain complex checks.

    Attributes:
        alpha_turns (int, optional): A bigon's α side must be shorter than
            this many full turns around α. Defaults to ``1``, which is
            enough for every bigon whose multiplicities are at most one.
        beta_turns (int, optional): The β side of a bigon must run through
            fewer than this many extra full loops of β. Defaults to ``1``,
            so the β side covers every β-arc at most once.
        check_square_zero (bool, optional): Assert that every differential
            squares to zero.
        check_gradings (bool, optional): Recompute every relative grading
            with a second connecting domain and compare the results.

    Raises a BadParams error if one of the window bounds isn't positive.

    """

    alpha_turns:       int  = 1
    beta_turns:        int  = 1
    check_square_zero: bool = True
    check_gradings:    bool = True

    def __post_init__(self):
        if self.alpha_turns < 1 or self.beta_turns < 1:
            raise BadParams(
                "The bigon window needs at least one turn in each "
                "direction, got {} and {}".format(
                    self.alpha_turns, self.beta_turns
                )
            )

    def doubled(self) -> "FloerConfig":
        """Return the same configuration with a window twice as large."""
        return FloerConfig(
            2 * self.alpha_turns,
            2 * self.beta_turns,
            self.check_square_zero,
            self.check_gradings,
        )


@dataclass(frozen=True)
class ScanConfig:
    """Knobs for the random diagrams of a conjecture scan.

    Attributes:
        max_fingers (int, optional): Upper bound for the number of finger
            moves applied to a single diagram.
        max_twists (int, optional): Upper bound for the absolute number of
            Dehn twists along α.
        tr_share (float, optional): Probability that a trial starts from the
            two trefoil-like knots instead of a simple knot.
        scatter_share (float, optional): Probability that z and w are moved
            into two random faces of the final β, which changes the knot.

    """

    max_fingers:   int   = 3
    max_twists:    int   = 2
    tr_share:      float = 0.25
    scatter_share: float = 0.75

    def __post_init__(self):
        if self.max_fingers < 0 or self.max_twists < 0:
            raise BadParams("Scan bounds must be non-negative")

        for name in ("tr_share", "scatter_share"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise BadParams(
                    "{} must be a probability, got {}".format(name, value)
                )


DEFAULT_CONFIG = FloerConfig()
DEFAULT_SCAN_CONFIG = ScanConfig()
