"""Published departmental h-index ranking tables for four UK disciplines.

Golden fixtures: the published ranked lists of UK higher-education
institutions by departmental h-index, per discipline, for the RAE 2008
publication window (2001-2007, h measured at 2008) and the REF 2014
window (2008-2013, h measured at 2014), together with the printed
up/down movement arrows of the later list relative to the earlier one.

Each baseline entry is (printed_rank, institution, h value); each
comparison entry additionally carries the printed movement token
("up", "down", or "none").  Institution names are the short canonical
forms used by the h-index columns; spelled-out variants from the
quality-score column are mapped onto the same keys.

One correction: the chemistry baseline prints Loughborough as (30), but
its printed rank (22, tied with Leicester at 31) and its printed down
arrow at rank 23 in the comparison column are only consistent with 31,
so 31 is used here.
"""

BIOLOGY_H2008 = [
    (1, "Cambridge", 111),
    (2, "Edinburgh", 91),
    (3, "ICL", 87),
    (4, "KCL", 86),
    (5, "Dundee", 84),
    (6, "Glasgow", 78),
    (7, "ICR", 73),
    (7, "Birmingham", 73),
    (9, "Cardiff", 71),
    (10, "Manchester", 70),
    (11, "Leicester", 68),
    (12, "Newcastle upon Tyne", 66),
    (12, "Sheffield", 66),
    (14, "Leeds", 65),
    (15, "York", 62),
    (16, "Southampton", 61),
    (17, "Nottingham", 60),
    (18, "Liverpool", 57),
    (19, "Sussex", 53),
    (20, "Bath", 52),
    (20, "Reading", 52),
    (22, "Aberdeen", 50),
    (22, "East Anglia", 50),
    (24, "Queens Belfast", 47),
    (24, "Warwick", 47),
    (26, "St. Andrews", 45),
    (27, "Durham", 39),
    (28, "Exeter", 38),
    (29, "Bangor", 37),
    (29, "Queen Mary", 37),
    (31, "Royal Holloway", 35),
    (32, "Essex", 34),
    (33, "Hull", 33),
    (34, "Kent", 31),
    (35, "Cranfield", 29),
    (36, "Swansea", 26),
    (36, "Plymouth", 26),
    (38, "John Moores", 23),
]

BIOLOGY_H2014 = [
    (1, "Cambridge", 143, "none"),
    (2, "KCL", 120, "up"),
    (3, "ICL", 109, "none"),
    (4, "Edinburgh", 107, "down"),
    (5, "Manchester", 105, "up"),
    (6, "Leeds", 92, "up"),
    (7, "Newcastle upon Tyne", 89, "up"),
    (8, "ICR", 88, "down"),
    (9, "Dundee", 83, "down"),
    (10, "Glasgow", 82, "down"),
    (11, "Birmingham", 80, "down"),
    (12, "Cardiff", 79, "down"),
    (12, "Sheffield", 79, "none"),
    (14, "Leicester", 77, "down"),
    (14, "Nottingham", 77, "up"),
    (16, "Southampton", 72, "none"),
    (17, "Liverpool", 68, "up"),
    (18, "Aberdeen", 66, "up"),
    (19, "York", 64, "down"),
    (20, "East Anglia", 60, "up"),
    (21, "Queens Belfast", 59, "up"),
    (21, "Exeter", 59, "up"),
    (21, "Warwick", 59, "up"),
    (24, "Queen Mary", 57, "up"),
    (25, "St. Andrews", 56, "up"),
    (26, "Sussex", 53, "down"),
    (27, "Reading", 52, "down"),
    (28, "Bath", 50, "down"),
    (29, "Durham", 46, "down"),
    (30, "Bangor", 45, "down"),
    (31, "Plymouth", 41, "up"),
    (32, "Swansea", 38, "up"),
    (32, "Essex", 38, "none"),
    (34, "Royal Holloway", 37, "down"),
    (35, "Hull", 36, "down"),
    (36, "Cranfield", 34, "down"),
    (37, "John Moores", 32, "up"),
    (38, "Kent", 31, "down"),
]

# Quality-score column of the biology table: printed competition ranks only
# (no values are published for it), mapped onto the canonical keys above.
BIOLOGY_QUALITY_RANKS = [
    (1, "ICR"),
    (2, "Manchester"),
    (3, "Dundee"),
    (4, "Sheffield"),
    (5, "York"),
    (6, "ICL"),
    (6, "KCL"),
    (8, "Royal Holloway"),
    (9, "Cambridge"),
    (10, "Leeds"),
    (11, "Edinburgh"),
    (11, "Newcastle upon Tyne"),
    (13, "Cardiff"),
    (13, "Aberdeen"),
    (13, "Glasgow"),
    (16, "St. Andrews"),
    (17, "Bath"),
    (17, "Birmingham"),
    (17, "Durham"),
    (17, "East Anglia"),
    (17, "Exeter"),
    (17, "Nottingham"),
    (23, "Southampton"),
    (23, "Warwick"),
    (25, "Leicester"),
    (26, "Liverpool"),
    (27, "Queen Mary"),
    (27, "Essex"),
    (29, "Reading"),
    (29, "Sussex"),
    (31, "Kent"),
    (32, "Queens Belfast"),
    (33, "Bangor"),
    (34, "Plymouth"),
    (35, "Hull"),
    (36, "Cranfield"),
    (36, "Swansea"),
    (38, "John Moores"),
]

CHEMISTRY_H2008 = [
    (1, "ICL", 59),
    (2, "Cambridge", 58),
    (3, "Oxford", 54),
    (4, "Bristol", 48),
    (5, "Manchester", 45),
    (5, "Nottingham", 45),
    (5, "Southampton", 45),
    (8, "Cardiff", 44),
    (8, "UCL", 44),
    (8, "Liverpool", 44),
    (11, "Leeds", 41),
    (12, "Queens Belfast", 40),
    (12, "Sheffield", 40),
    (14, "Durham", 39),
    (15, "Warwick", 38),
    (16, "Birmingham", 37),
    (16, "York", 37),
    (18, "Sussex", 36),
    (19, "Hull", 34),
    (20, "Bath", 33),
    (21, "Reading", 32),
    (22, "Leicester", 31),
    (22, "Loughborough", 31),  # printed as 30; rank column and later down arrow imply 31
    (24, "Newcastle", 30),
    (25, "East Anglia", 29),
    (26, "Aberdeen", 24),
    (27, "Heriot-Watt", 23),
    (28, "Bangor", 17),
    (29, "Huddersfield", 15),
]

CHEMISTRY_H2014 = [
    (1, "ICL", 84, "none"),
    (1, "Cambridge", 84, "up"),
    (3, "Oxford", 74, "none"),
    (4, "Manchester", 66, "up"),
    (5, "Liverpool", 57, "up"),
    (6, "UCL", 55, "up"),
    (7, "Bristol", 52, "down"),
    (7, "Leeds", 52, "up"),
    (9, "Durham", 51, "up"),
    (9, "Nottingham", 51, "down"),
    (9, "Warwick", 51, "up"),
    (12, "Southampton", 50, "down"),
    (13, "Cardiff", 49, "down"),
    (14, "Bath", 48, "up"),
    (15, "York", 46, "up"),
    (16, "Birmingham", 45, "none"),
    (17, "Sheffield", 44, "down"),
    (18, "Queens Belfast", 43, "down"),
    (19, "Newcastle", 41, "up"),
    (20, "Heriot-Watt", 36, "up"),
    (21, "Reading", 35, "none"),
    (22, "East Anglia", 34, "up"),
    (23, "Loughborough", 33, "down"),
    (24, "Aberdeen", 32, "up"),
    (25, "Hull", 29, "down"),
    (26, "Leicester", 26, "down"),
    (27, "Sussex", 25, "down"),
    (28, "Bangor", 20, "none"),
    (28, "Huddersfield", 20, "up"),
]

PHYSICS_H2008 = [
    (1, "Cambridge", 82),
    (2, "ICL", 80),
    (3, "Oxford", 70),
    (4, "Birmingham", 57),
    (5, "UCL", 54),
    (5, "Bristol", 54),
    (5, "Durham", 54),
    (5, "Edinburgh", 54),
    (5, "Glasgow", 54),
    (5, "Manchester", 54),
    (11, "Queen Mary", 53),
    (12, "Liverpool", 52),
    (13, "Sussex", 50),
    (14, "Southampton", 49),
    (15, "St. Andrews", 45),
    (16, "Sheffield", 44),
    (17, "Lancaster", 40),
    (17, "Queens Belfast", 40),
    (17, "Leeds", 40),
    (20, "Bath", 39),
    (21, "KCL", 37),
    (21, "Surrey", 37),
    (23, "Nottingham", 36),
    (24, "Warwick", 35),
    (25, "Cardiff", 33),
    (26, "Exeter", 32),
    (27, "Strathclyde", 31),
    (28, "Swansea", 30),
    (28, "Leicester", 30),
    (30, "York", 29),
    (31, "Loughborough", 26),
    (32, "Heriot-Watt", 25),
]

PHYSICS_H2014 = [
    (1, "Cambridge", 98, "none"),
    (2, "Oxford", 95, "up"),
    (3, "ICL", 94, "down"),
    (4, "Manchester", 84, "up"),
    (5, "UCL", 78, "none"),
    (6, "Durham", 73, "down"),
    (6, "Edinburgh", 73, "down"),
    (8, "Glasgow", 70, "down"),
    (9, "Bristol", 68, "down"),
    (9, "Liverpool", 68, "up"),
    (9, "Southampton", 68, "up"),
    (12, "Birmingham", 66, "down"),
    (13, "Queen Mary", 63, "down"),
    (14, "St. Andrews", 61, "up"),
    (15, "Warwick", 57, "up"),
    (16, "Cardiff", 56, "up"),
    (16, "Nottingham", 56, "up"),
    (18, "Sheffield", 55, "down"),
    (19, "Sussex", 54, "down"),
    (20, "Lancaster", 53, "down"),
    (21, "Leeds", 50, "down"),
    (21, "Leicester", 50, "up"),
    (23, "Queens Belfast", 48, "down"),
    (24, "Exeter", 44, "up"),
    (24, "Strathclyde", 44, "up"),
    (26, "Loughborough", 36, "up"),
    (26, "Bath", 36, "down"),
    (28, "KCL", 35, "down"),
    (29, "Heriot-Watt", 34, "up"),
    (30, "York", 33, "none"),
    (31, "Surrey", 32, "down"),
    (32, "Swansea", 30, "down"),
]

SOCIOLOGY_H2008 = [
    (1, "Manchester", 32),
    (2, "Oxford", 31),
    (3, "Cardiff", 30),
    (4, "Bristol", 29),
    (4, "York", 29),
    (6, "LSEPS", 27),
    (6, "Cambridge", 27),
    (8, "Lancaster", 25),
    (8, "Glasgow", 25),
    (10, "Birmingham", 24),
    (10, "Edinburgh", 24),
    (10, "Newcastle", 24),
    (10, "Nottingham", 24),
    (14, "Warwick", 22),
    (15, "Brunel", 21),
    (15, "Open Uni.", 21),
    (15, "Liverpool", 21),
    (18, "Leicester", 20),
    (18, "Surrey", 20),
    (20, "CUL", 19),
    (20, "Aberdeen", 19),
    (20, "Essex", 19),
    (20, "Exeter", 19),
    (20, "Sussex", 19),
    (25, "Loughborough", 18),
    (26, "Strathclyde", 17),
    (27, "Plymouth", 16),
    (28, "Queens Belfast", 15),
    (29, "Goldsmiths College", 14),
    (29, "West of England, Bristol", 14),
    (31, "Glasgow Caledonian", 12),
    (31, "Manchester Metropolitan", 12),
    (31, "Napier", 12),
    (34, "East London", 11),
    (35, "Robert Gordon", 9),
    (35, "Huddersfield", 9),
    (35, "Teesside", 9),
    (38, "Roehampton", 5),
]

SOCIOLOGY_H2014 = [
    (1, "Oxford", 41, "up"),
    (2, "Cambridge", 36, "up"),
    (3, "LSEPS", 35, "up"),
    (3, "Edinburgh", 35, "up"),
    (3, "Manchester", 35, "down"),
    (6, "Nottingham", 34, "up"),
    (7, "Cardiff", 31, "down"),
    (7, "Sussex", 31, "up"),
    (9, "Lancaster", 30, "down"),
    (9, "Birmingham", 30, "up"),
    (9, "Exeter", 30, "up"),
    (12, "Open Uni.", 29, "up"),
    (12, "York", 29, "down"),
    (14, "Bristol", 28, "down"),
    (14, "Glasgow", 28, "down"),
    (16, "Brunel", 27, "down"),
    (16, "Newcastle", 27, "down"),
    (16, "Warwick", 27, "down"),
    (19, "Loughborough", 26, "up"),
    (19, "Aberdeen", 26, "up"),
    (21, "Leicester", 25, "down"),
    (21, "Liverpool", 25, "down"),
    (23, "Surrey", 24, "down"),
    (24, "Essex", 23, "down"),
    (24, "Plymouth", 23, "up"),
    (26, "Strathclyde", 21, "none"),
    (27, "Queens Belfast", 20, "up"),
    (28, "West of England, Bristol", 19, "up"),
    (29, "CUL", 18, "down"),
    (30, "Manchester Metropolitan", 17, "up"),
    (31, "Glasgow Caledonian", 16, "none"),
    (32, "Goldsmiths College", 14, "down"),
    (32, "Roehampton", 14, "up"),
    (34, "Huddersfield", 13, "up"),
    (35, "Napier", 12, "down"),
    (35, "East London", 12, "down"),
    (35, "Teesside", 12, "none"),
    (38, "Robert Gordon", 9, "down"),
]

TABLES = {
    "biology": (BIOLOGY_H2008, BIOLOGY_H2014),
    "chemistry": (CHEMISTRY_H2008, CHEMISTRY_H2014),
    "physics": (PHYSICS_H2008, PHYSICS_H2014),
    "sociology": (SOCIOLOGY_H2008, SOCIOLOGY_H2014),
}

# Published rank-correlation value for the biology quality-vs-h comparison,
# quoted at the roster size the published coefficient table used.
PUBLISHED_BIOLOGY_RHO = 0.78
PUBLISHED_BIOLOGY_N = 39


def values(entries) -> dict[str, float]:
    """Institution -> value map from a golden column."""
    return {e[1]: float(e[2]) for e in entries}


def printed_ranks(entries) -> dict[str, int]:
    return {e[1]: e[0] for e in entries}


def printed_movements(entries) -> dict[str, str]:
    return {e[1]: e[3] for e in entries}
