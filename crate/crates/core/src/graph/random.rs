use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, MAX_DEGREE};

/// A connected random graph on `n` vertices with maximum degree three.
///
/// A random spanning tree is grown first (each new vertex attaches to an
/// earlier vertex with a free slot, which always exists), then a random
/// number of extra edges is added between non-adjacent unsaturated pairs.
/// The output depends only on `(n, seed)`.
pub fn random_subcubic(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    for i in 1..n {
        let open: Vec<usize> = order[..i]
            .iter()
            .copied()
            .filter(|&u| degree[u] < MAX_DEGREE)
            .collect();
        let u = open[rng.gen_range(0..open.len())];
        let v = order[i];
        edges.push((u, v));
        degree[u] += 1;
        degree[v] += 1;
    }

    let target = if n >= 2 { rng.gen_range(0..=n) } else { 0 };
    let mut added = 0;
    for _ in 0..4 * n {
        if added == target {
            break;
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || degree[u] >= MAX_DEGREE || degree[v] >= MAX_DEGREE {
            continue;
        }
        if edges
            .iter()
            .any(|&(a, b)| (a == u && b == v) || (a == v && b == u))
        {
            continue;
        }
        edges.push((u, v));
        degree[u] += 1;
        degree[v] += 1;
        added += 1;
    }
    Graph::new(n, &edges).expect("generator respects the degree bound")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex() {
        let g = random_subcubic(1, 99);
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn deterministic() {
        assert_eq!(random_subcubic(4, 42), random_subcubic(4, 42));
        assert_eq!(random_subcubic(13, 5), random_subcubic(13, 5));
    }

    #[test]
    fn connected_and_subcubic() {
        for seed in 0..200 {
            let g = random_subcubic(10, seed);
            assert!(g.is_connected());
            assert!(g.max_degree() <= 3);
        }
        let g = random_subcubic(10, 7);
        assert!(g.is_connected() && g.max_degree() <= 3);
    }
}
