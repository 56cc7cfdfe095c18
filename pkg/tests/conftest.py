import hypothesis

# brute-force counting inside property bodies makes per-example deadlines noisy
hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.load_profile("default")
