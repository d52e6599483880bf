"""
Configuration Module.
"""

p = {}

p["version"] = "1.0.0"

p["dataset_folder"] = "data"
p["output_folder"] = "results"

# Environment overrides (output directory and worker count only).
p["env_output_dir"] = "MISINFO_OUTPUT_DIR"
p["env_threads"] = "MISINFO_THREADS"

# Full-scale reproduction: directory holding the files below (tests marked paper_data).
p["env_paper_data"] = "MISINFO_PAPER_DATA"
p["file_edges"] = "nikolov_edges.txt"  # Edge list, "SOURCE TARGET"
p["file_susceptibility"] = "nikolov_susceptibility.txt"  # "NODE_ID VALUE"
p["file_cascades"] = "retweet_cascades.csv"
p["file_survey"] = "survey_responses.csv"

pdict = p.copy()
