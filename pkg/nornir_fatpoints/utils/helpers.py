"""A set of helper utilities."""

import errno
import logging
import os
from typing import List

from nornir_fatpoints.exceptions import SchemeError

LOGGER = logging.getLogger(__name__)


def make_folder(folder):
    """Helper method to sanely create folders."""
    if folder and not os.path.exists(folder):
        # Still try and except, since there may be race conditions.
        try:
            os.makedirs(folder)
            LOGGER.debug("Created folder %s", folder)
        except OSError as error:
            if error.errno != errno.EEXIST:
                raise


def parse_seeds(text: str) -> List[int]:
    """Comma separated seed list, e.g. "1,2,7"; empty items are skipped.

    Raises:
        SchemeError: An item is not a nonnegative integer.
    """
    seeds = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if not item.isdigit():
            raise SchemeError(f"seed {item!r} is not a nonnegative integer")
        seeds.append(int(item))
    if not seeds:
        raise SchemeError("the seed list is empty")
    return seeds
