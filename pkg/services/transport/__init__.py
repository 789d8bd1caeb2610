from services.transport.min_cost_flow import MinCostFlow
