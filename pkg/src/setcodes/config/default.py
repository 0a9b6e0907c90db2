SCHEMA_VERSION = 1
ENV_PREFIX = "SETCODES_"

# Cap on enumerated objects (ball members, ensemble members, words scanned).
DEFAULT_GUARD = 2_000_000
DEFAULT_SEED = 0
DEFAULT_TRIALS = 100
DEFAULT_WORKERS = 4
DEFAULT_LOG_LEVEL = "WARNING"

RNG_ALGORITHM = "numpy.PCG64/SeedSequence([seed, trial])"
