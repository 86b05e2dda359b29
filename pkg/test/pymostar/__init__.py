from __future__ import annotations

TEST_TOML_CONTENTS = """
[verify]
max_n = 4
seed = 7
random_per_order = 3
edge_probability = 0.5
pair_max_n = 3 # keeps the two-factor sweeps small
pair_random_per_order = 1
triple_max_n = 2

[distance]
block_size = 3 # forces several streamed blocks on small graphs

[output]
json_indent = 0

[limits]
max_order = 4096""".strip()
