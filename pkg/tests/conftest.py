import os
import tempfile

# keep test runs from writing daily log files into the working tree
os.environ.setdefault("RUNCORR_LOG_DIR", tempfile.mkdtemp(prefix="runcorr-logs-"))
os.environ.setdefault("RUNCORR_THREADS", "1")
