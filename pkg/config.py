# =========================
# ====== CONFIG FILE ======
# =========================

# Largest semilength any exhaustive enumeration will accept (C_14 = 2674440 paths)
ENUM_CAP = 14

# Orbit iteration bound; hitting it means f_map is broken, not that the orbit is long
ORBIT_SANITY_LIMIT = 2 ** 20

# Power series truncation limits
SERIES_MAX_ORDER = 64
LEAF_TABLE_MAX_N = 24

# Exact-arithmetic sweeps: largest n for the skeleton identity, largest k for Pascal blocks (2^k rows)
IDENTITY_MAX_N = 200
PASCAL_MAX_K = 11

# Every cap above; `main.py --max-size N` rebinds all of them at startup
CAPS = ("ENUM_CAP", "SERIES_MAX_ORDER", "LEAF_TABLE_MAX_N", "IDENTITY_MAX_N", "PASCAL_MAX_K")

# Brute-force cross-check ceilings (paths are enumerated, so keep these desk-sized)
SKELETON_BRUTE_FORCE_MAX = 11     # prop14: primitive (n+1)-paths classified by skeleton size
LEAF_BRUTE_FORCE_MAX = 10         # prop15: leaf census built from LCO forests

# =========================
# Verification targets
# =========================
# Must match modules under checks/
CHECKS_TO_USE = [
    "theorem6", "cor7", "fixedpoints", "prop12", "prop11",
    "lemma13", "prop14", "prop15", "lemma4", "lemma5",
]

# Default inclusive n-range per target (lemma4 ranges over k)
VERIFY_RANGES = {
    "theorem6": (1, 14),
    "cor7": (2, 14),
    "fixedpoints": (0, 12),
    "prop12": (2, 12),
    "prop11": (1, 11),
    "lemma13": (3, 13),
    "prop14": (2, 30),
    "prop15": (1, 8),
    "lemma4": (1, 10),
    "lemma5": (1, 12),
}

# =========================
# Reference sequences
# =========================
# Cross-check constants only. The fixed-point sequence is deliberately absent:
# it is always recomputed by brute force.
KNOWN_CATALAN = (
    1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012,
    742900, 2674440, 9694845, 35357670,
)
KNOWN_MOTZKIN = (
    1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634,
)

# LCO trees of size n (row) with k leaves (column k-1), n = 1..8
LEAF_TABLE_REFERENCE = {
    1: (1,),
    2: (1, 1),
    3: (2, 2, 1),
    4: (4, 6, 3, 1),
    5: (8, 17, 12, 4, 1),
    6: (16, 46, 44, 20, 5, 1),
    7: (32, 120, 150, 90, 30, 6, 1),
    8: (64, 304, 482, 370, 160, 42, 7, 1),
}

# =========================
# Output
# =========================
CSV_HEADER = ("n", "k", "count")
CENSUS_HEADER = ("n", "length", "count")
TABLES_DIR = "tables"
TEXT_TABLE_WIDTH = 160            # fixed console width keeps aligned tables byte-stable
