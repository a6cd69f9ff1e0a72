"""Smoke test for the `dmp` extension module.

Build and copy the module next to this file first:

    cargo build --release -p dmp-py --features extension-module
    cp target/release/libdmp.so python/dmp.so
"""

import dmp


def main():
    p5 = dmp.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert dmp.mp(p5) == 4
    assert dmp.mp_oracle(p5) == 4
    value, path, direction, method = dmp.mp_witness(p5)
    assert value == len(path) == 4
    assert dmp.is_degree_monotone(p5, path), (path, direction, method)

    assert dmp.Graph.from_edge_list(p5.to_edge_list()) == p5
    assert dmp.Graph.from_json(p5.to_json()) == p5

    sub = dmp.Operation.subdivide(0, 1).apply(p5)
    assert (sub.n, dmp.mp(sub)) == (6, 5)

    k3 = dmp.Graph(3, [(0, 1), (0, 2), (1, 2)])
    k2 = dmp.Operation.contract(0, 1).apply(k3)
    assert k2.edges() == [(0, 1)]
    try:
        dmp.check_bound("contraction_triangle_free", k3, dmp.Operation.contract(0, 1))
    except ValueError as e:
        assert "triangle" in str(e)
    else:
        raise AssertionError("triangle precondition not enforced")

    c = dmp.construct("g1_plus", k=4)
    assert (c.graph.n, c.claimed_mp_before, c.claimed_mp_after) == (22, 4, 12)
    record = dmp.check_bound("edge_add", c.graph, c.operation)
    assert record["pass"] and record["tight_high"]
    assert (record["lower"], record["upper"]) == ("5/3", "12")

    assert len(dmp.list_families()) == 23
    assert len(dmp.list_theorems()) == 10

    records, summary = dmp.run_campaign("edge_add", "gnp", 50, 42, n=9, p=0.3)
    assert summary["failed"] == 0 and summary["checked"] == len(records)
    again, _ = dmp.run_campaign("edge_add", "gnp", 50, 42, n=9, p=0.3, jobs=1)
    assert records == again

    tree = dmp.random_graph("random_tree", 3, n=15)
    assert tree.is_tree()

    try:
        dmp.mp(dmp.construct("complete", n=9).graph, node_budget=2)
    except dmp.BudgetExceeded:
        pass
    else:
        raise AssertionError("budget not enforced")

    print("smoke test ok")


if __name__ == "__main__":
    main()
