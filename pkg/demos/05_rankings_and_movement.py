"""Competition ranking and movement arrows.

Published assessment tables use competition ranking: tied institutions
share a rank and the next rank skips ("1224").  Comparing two rankings of
the same measure from different windows yields movement markers: up and
down arrows for rank shifts, blank for holds, "(new)" for fresh entries.
"""

from refh import movement, rank_table, render_table, with_movement

# the top of a published chemistry table: two leaders tied at 84
earlier = rank_table(
    {"ICL": 59, "Cambridge": 58, "Oxford": 54, "Bristol": 48, "Manchester": 45},
    measure="h_2008",
    discipline="chemistry",
)
later = rank_table(
    {"ICL": 84, "Cambridge": 84, "Oxford": 74, "Manchester": 66, "Liverpool": 57},
    measure="h_hat_2014",
    discipline="chemistry",
)

report = movement(earlier, later)
for inst, move in report.moves.items():
    print(f"{inst:>12}: {move.old_rank} -> {move.new_rank} ({move.movement})")
print("dropped from the roster:", report.dropped)

# arrows attached and rendered; note Cambridge climbing into the shared top spot
marked = with_movement(later, report)
print()
print(render_table(marked, "markdown"))

# the CSV form round-trips exactly and is byte-stable
print(render_table(marked, "csv"))
