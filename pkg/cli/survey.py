"""Survey over all (v, w) pairs of W, serial or on a process pool."""

import logging
from multiprocessing import Pool
from typing import Dict, Iterator, List, Optional

from config.run_config import RunConfig
from core.pipeline import CategoryPipeline, SurveyRow


logger = logging.getLogger(__name__)

_worker_pipeline: Optional[CategoryPipeline] = None


def _init_worker(config_data: Dict) -> None:
    """Each worker owns a pipeline so Π and the torsion ideals are built once per process."""
    global _worker_pipeline
    _worker_pipeline = CategoryPipeline(RunConfig(**config_data))


def _survey_cell(index: int) -> SurveyRow:
    pipeline = _worker_pipeline
    assert pipeline is not None, "worker not initialized"
    v, w = pipeline.pairs()[index]
    return pipeline.survey_row(v, w)


def iter_survey(config: RunConfig, pipeline: Optional[CategoryPipeline] = None) -> Iterator[SurveyRow]:
    """Rows in (v, w) order regardless of which worker finishes first."""
    pipeline = pipeline or CategoryPipeline(config)
    pairs = pipeline.pairs()
    logger.info(f"Survey of {config.type}: {len(pairs)} pairs on {config.workers} worker(s)")
    if config.workers <= 1:
        for v, w in pairs:
            yield pipeline.survey_row(v, w)
        return
    with Pool(config.workers, initializer=_init_worker, initargs=(config.to_dict(),)) as pool:
        yield from pool.imap(_survey_cell, range(len(pairs)), chunksize=1)


def run_survey(config: RunConfig, pipeline: Optional[CategoryPipeline] = None) -> List[SurveyRow]:
    return list(iter_survey(config, pipeline))
