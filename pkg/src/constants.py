DEFAULT_CONTOUR = (1, 0)

GRADING_RATIO = 0.5
TRUNCATION_BASE = 4.0
MAX_DOUBLINGS = 6
# Denominator floor of the truncation estimate, as a fraction of the absolute integrand mass.
MAGNITUDE_FLOOR = 1e-3

DEFAULT_M_CAP = 2
EVAL_RADIUS = 1.5

TOLERANCE_BY_DEPTH = {0: 1e-12, 1: 1e-6, 2: 1e-4}
FALLBACK_TOLERANCE = 1e-4

DEFAULT_GRID_VALUES = (-1.0, -0.5, 0.0, 0.5, 1.0)
COARSE_GRID_VALUES = (-0.5, 0.0, 0.5)

FD_STEP = 1e-3

CUBIC_POLY = "t^3/3"
SVD_CUTOFF = 1e-6
ASYMMETRY_POINT = (0.7, -0.3)
ASYMMETRY_THRESHOLD = 1e-3
SYMMETRY_SAMPLE_POINTS = (
    (0.7, -0.3),
    (-0.4, 0.9),
    (0.2, 0.5),
    (-0.8, -0.6),
    (1.0, 0.1),
    (0.0, -0.9),
    (0.45, 0.3j),
    (-0.25j, 0.6),
    (0.9, 0.9),
    (-1.0, 0.35),
    (0.15, -0.15),
    (0.6 + 0.2j, -0.5),
)

VARIABLE_LETTER = "t"

SYMMETRY_DEFECT_TOLERANCE = 1e-8
EXPECTED_SYMMETRIC_RANK = 3
MIN_SVD_GAP = 1e3
