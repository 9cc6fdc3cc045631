"""
Base Verifier Class
Common driver for sweeps: pick the inputs, check each one, stream records in input order
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from cyclonorm.core.config import DEFAULT_SETTINGS, Settings
from cyclonorm.core.exceptions import CycloNormError, PreconditionError
from cyclonorm.core.models import SweepRecord

logger = logging.getLogger(__name__)


class BaseVerifier:
    """Base class for every sweep the CLI can run"""

    command = "verify"

    def __init__(self, settings: Settings = DEFAULT_SETTINGS):
        """
        Initialize the verifier

        Args:
            settings: Runtime settings; `jobs` sets the worker count
        """
        self.settings = settings
        self.jobs = settings.jobs
        self.name = self.__class__.__name__

    def items(self, context: Dict[str, Any]) -> List[Any]:
        """
        Inputs to check, in output order

        Raises:
            PreconditionError: if the requested range is unusable
        """
        raise NotImplementedError(f"{self.name} must implement items()")

    def check(self, item: Any) -> SweepRecord:
        """Check one input and describe the outcome"""
        raise NotImplementedError(f"{self.name} must implement check()")

    def iter_records(self, context: Dict[str, Any]) -> Iterator[SweepRecord]:
        """
        Stream one record per input, ascending, whatever the worker count.

        Inputs are validated here, before anything is produced.
        """
        items = self.items(context)
        logger.info("%s: %d inputs, %d worker(s)", self.name, len(items), self.jobs)
        return self._fan_out(items)

    def _fan_out(self, items: Iterable[Any]) -> Iterator[SweepRecord]:
        if self.jobs == 1:
            for item in items:
                yield self.check(item)
            return
        with ThreadPoolExecutor(max_workers=self.jobs) as pool:
            # map keeps submission order
            yield from pool.map(self.check, items)

    def run(self, context: Dict[str, Any], **kwargs) -> Tuple[List[SweepRecord], Optional[str]]:
        """
        Run the whole sweep

        Args:
            context: Command options, e.g. {"min": 5, "max": 100}

        Returns:
            Tuple of (records, error) where error is None on success
        """
        try:
            return list(self.iter_records(context)), None
        except CycloNormError as e:
            return [], self._format_error(str(e))

    def _format_error(self, error_msg: str) -> str:
        return f"[{self.name}] {error_msg}"

    @staticmethod
    def all_ok(records: Iterable[SweepRecord]) -> bool:
        """False as soon as any record reports a failed check"""
        return all(record.ok is not False for record in records)

    @staticmethod
    def bounded_range(context: Dict[str, Any], floor: int) -> range:
        """[min, max] from the context, refusing a lower end below `floor`"""
        low, high = context["min"], context["max"]
        if low < floor:
            raise PreconditionError(f"--min must be at least {floor}, got {low}")
        if low > high:
            raise PreconditionError(f"--min {low} exceeds --max {high}")
        return range(low, high + 1)
