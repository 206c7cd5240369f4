import logging
from io import StringIO

import pytest

from wickenum import TRACE_LEVEL, get_logger


# noinspection PyMethodMayBeStatic
class TestTraceLevelLogger:
    @pytest.fixture(autouse=True)
    def setup_logging(self):
        root = logging.getLogger()
        for handler in root.handlers[:]:
            root.removeHandler(handler)

        # noinspection PyAttributeOutsideInit
        self.log_output = StringIO()
        handler = logging.StreamHandler(self.log_output)
        handler.setFormatter(logging.Formatter("%(name)s - %(levelname)s - %(message)s"))
        logging.basicConfig(level=TRACE_LEVEL, handlers=[handler])
        yield

    def get_logger__should_register_trace_level_name(self):
        get_logger("wickenum.test")
        assert logging.getLevelName(TRACE_LEVEL) == "TRACE"

    def trace__should_log_at_trace_level_when_enabled(self):
        logger = get_logger("wickenum.test.trace")
        logger.trace("walks enumerated")
        assert "wickenum.test.trace - TRACE - walks enumerated" in self.log_output.getvalue()

    def trace__should_be_silent_above_trace_level(self):
        logger = get_logger("wickenum.test.quiet")
        logger.setLevel(logging.DEBUG)
        logger.trace("walks enumerated")
        assert self.log_output.getvalue() == ""

    def trace_block__should_log_elapsed_seconds(self):
        logger = get_logger("wickenum.test.block")
        with logger.trace_block("carrier pass"):
            pass
        assert "carrier pass took" in self.log_output.getvalue()
        assert "seconds" in self.log_output.getvalue()

    async def trace_timing__should_log_elapsed_seconds_for_awaited_work(self):
        logger = get_logger("wickenum.test.timing")
        async with logger.trace_timing("side"):
            pass
        assert "side took" in self.log_output.getvalue()
