from src.cli.commands import COMMANDS, JobSpec, exit_code, make_job, run_job
from src.cli.io import alpha_docs, data_to_document, document_to_data, dump_report, load_document, write_report

__all__ = [
    "COMMANDS",
    "JobSpec",
    "alpha_docs",
    "data_to_document",
    "document_to_data",
    "dump_report",
    "exit_code",
    "load_document",
    "make_job",
    "run_job",
    "write_report",
]
