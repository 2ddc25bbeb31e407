"""Smoke test for the pykdegen extension. Run after installing the wheel."""

import pykdegen as kd


def main():
    k4 = kd.Graph.generate("complete", n=4)
    assert (k4.n, k4.m) == (4, 6)
    assert kd.degeneracy(k4)[0] == 3
    assert len(kd.triangles(k4)) == 4
    assert kd.count_cliques(k4, 3) == 4

    k333 = kd.Graph.generate("complete-multipartite", parts="3x3")
    assert len(kd.maximal_cliques(k333)) == 27

    p10 = kd.Graph.parse("\n".join(f"{i} {i + 1}" for i in range(9)))
    k, order = kd.degeneracy(p10)
    assert k == 1 and sorted(order) == list(range(10))

    c4 = kd.Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert kd.maximal_bicliques(c4) == [([0, 2], [1, 3])]
    a, b = kd.find_biclique(c4, 2, 2, induced=True)
    assert sorted(a + b) == [0, 1, 2, 3]
    assert kd.find_biclique(k4, 2, 2, induced=True) is None
    assert kd.common_neighbors(k4, [[0, 1]]) == [[2, 3]]

    star = kd.Graph(6, [(0, i) for i in range(1, 6)])
    cover, lp = kd.vertex_cover(star)
    assert cover == [0] and lp == 1.0
    assert len(kd.max_clique(k4)) == 4
    assert len(kd.max_clique(c4, solver="greedy")) == 2

    pruned = kd.remove_triangles(k4)
    assert pruned.m == 0 and pruned.n == 4
    assert kd.Graph.parse(pruned.to_text("dimacs"), format="dimacs").n == 4

    index = kd.SuffixIndex(5)
    index.insert([1, 2, 3])
    assert index.is_suffix([2, 3]) and not index.is_suffix([1, 2])
    assert index.has_root_letter(3) and not index.has_root_letter(4)

    for bad in (lambda: kd.Graph(2, [(0, 5)]), lambda: kd.cliques(k4, 0),
                lambda: kd.max_clique(k4, solver="nope"), lambda: index.insert([9])):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("pykdegen smoke test passed")


if __name__ == "__main__":
    main()
