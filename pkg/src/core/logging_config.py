"""Logging configuration."""
import os

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
LOG_LEVEL = os.environ.get("NODEASSESS_LOG_LEVEL", "INFO").upper()

# No file handler unless a path is given
LOG_FILE = os.environ.get("NODEASSESS_LOG_FILE") or None

#The available log levels in Python's logging module, from most to least verbose, are:

#DEBUG: per-assessment breakdowns, registry registrations, bare-metal short-circuits
#INFO: config loads, negotiation hops, experiment start/finish
#WARNING: negotiation cancels
#ERROR: acceptance-check failures, rejected input documents
