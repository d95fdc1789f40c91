"""CSV emission for experiment results."""
import sys
from typing import Iterable, Optional, Union

import pandas as pd

from src.core.logger import setup_logger

logger = setup_logger(__name__)


def write_csv(frames: Union[pd.DataFrame, Iterable[pd.DataFrame]], out: Optional[str] = None) -> int:
    """Write one or more frames as a single CSV with one header row.

    Dot decimal separator, '\\n' line endings, no index column. Floats are
    written at full precision, so equal inputs give byte-identical files.

    Args:
        frames: A frame or an iterable of frames with identical columns
        out: Output path; stdout when None or '-'

    Returns:
        int: Number of data rows written
    """
    if isinstance(frames, pd.DataFrame):
        frames = [frames]
    to_stdout = out in (None, '-')
    stream = sys.stdout if to_stdout else open(out, 'w', newline='')
    rows = 0
    try:
        for index, frame in enumerate(frames):
            frame.to_csv(stream, index=False, header=(index == 0), lineterminator='\n', decimal='.')
            rows += len(frame)
    finally:
        if not to_stdout:
            stream.close()
    logger.info(f"Wrote {rows} rows to {'stdout' if to_stdout else out}")
    return rows
