"""Quality scores from graded assessment profiles.

An assessed group receives a profile: the percentages of its work rated
4* (world-leading) down through 3*, 2*, 1* and Unclassified.  Funding
formulas collapse the profile to a scalar:

    s        = p4 + (3/7) p3 + (1/7) p2
    s_prime  = p4 + (1/3) p3          (later variant; 2* work drops out)
    s_output = s on the output-only sub-profile
    strength = s * staff_fte          (funding is proportional to this)
"""

from refh import QualityProfile, score_profile, score_s, score_s_prime

profiles = [
    ("all world-leading", (100.0, 0.0, 0.0, 0.0, 0.0)),
    ("pure 3*", (0.0, 100.0, 0.0, 0.0, 0.0)),
    ("mixed", (20.0, 40.0, 30.0, 10.0, 0.0)),
    ("all unclassified", (0.0, 0.0, 0.0, 0.0, 100.0)),
]

print(f"{'profile':>20}  {'s':>10}  {'s_prime':>10}")
for name, bands in profiles:
    p = QualityProfile(
        institution="Demo", discipline="chemistry",
        p4=bands[0], p3=bands[1], p2=bands[2], p1=bands[3], pu=bands[4],
        staff_fte=10.0,
    )
    print(f"{name:>20}  {score_s(p):>10.6f}  {score_s_prime(p):>10.6f}")

# note the pure-3* row: 300/7 = 42.857... under s, but only 100/3 = 33.333...
# under s_prime; the reweighting concentrates funding at the top.

# a full score set, including the output-only variant and the strength
p = QualityProfile(
    institution="Demo", discipline="chemistry",
    p4=20.0, p3=40.0, p2=30.0, p1=10.0, pu=0.0,
    staff_fte=25.0,
    p4_out=30.0, p3_out=40.0, p2_out=20.0, p1_out=10.0, pu_out=0.0,
    nci=1.42,
)
scores = score_profile(p)
print("\nfull score set for a 25-FTE group:")
print("  s        =", round(scores.s, 6))
print("  s_prime  =", round(scores.s_prime, 6))
print("  s_output =", round(scores.s_output, 6))
print("  strength =", round(scores.strength, 6))
