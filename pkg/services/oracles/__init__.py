from services.oracles.cycle_oracle import brute_cycles, brute_path_minimum
from services.oracles.dual_vertex_oracle import (
    brute_dual_norm,
    brute_norming_uniqueness,
    enumerate_dual_vertices,
)
from services.oracles.cross_check import (
    cross_check_attains,
    cross_check_closure,
    cross_check_norm,
    cross_check_verdict,
)
